//! Sparse exact multivariate polynomials over `FieldElement`, with formal
//! derivatives, shift substitution, exact division under graded-lex order,
//! and the bridge to the monomial symmetric basis.

use crate::combinatorics::Partition;
use crate::field::{DValue, FieldElement, Mode};
use serde::Serialize;
use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("rank mismatch ({0} vs {1})")]
    RankMismatch(usize, usize),
    #[error("scalar mode mismatch inside polynomial operation")]
    ModeMismatch,
    #[error("inexact division: remainder is nonzero")]
    InexactDivision,
    #[error("polynomial is not symmetric")]
    NotSymmetric,
}

/// Exponent vector under graded-lex order (total degree first, then lex).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Expo(pub Vec<u32>);

impl Expo {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn divides(&self, other: &Expo) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

impl Ord for Expo {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Expo {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial in z_1..z_r. Invariant: no stored zero coefficients, all
/// exponent vectors of length `rank`, all coefficients of one scalar mode.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    rank: usize,
    terms: BTreeMap<Expo, FieldElement>,
}

impl MultiPoly {
    pub fn zero(rank: usize) -> Self {
        MultiPoly {
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(rank: usize, c: FieldElement) -> Self {
        let mut p = MultiPoly::zero(rank);
        if !c.is_zero() {
            p.terms.insert(Expo(vec![0; rank]), c);
        }
        p
    }

    /// The variable z_i (0-based).
    pub fn var(rank: usize, i: usize, d: &DValue) -> Self {
        assert!(i < rank);
        let mut e = vec![0; rank];
        e[i] = 1;
        let mut p = MultiPoly::zero(rank);
        p.terms.insert(Expo(e), d.one());
        p
    }

    pub fn monomial(rank: usize, expo: Vec<u32>, c: FieldElement) -> Self {
        assert_eq!(expo.len(), rank);
        let mut p = MultiPoly::zero(rank);
        if !c.is_zero() {
            p.terms.insert(Expo(expo), c);
        }
        p
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Expo, &FieldElement)> {
        self.terms.iter()
    }

    pub fn mode(&self) -> Option<Mode> {
        self.terms.values().next().map(|c| c.mode())
    }

    pub fn coefficient(&self, expo: &Expo) -> Option<&FieldElement> {
        self.terms.get(expo)
    }

    /// Greatest exponent under graded-lex.
    pub fn leading(&self) -> Option<(&Expo, &FieldElement)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.leading().map(|(e, _)| e.degree())
    }

    fn insert_add(&mut self, e: Expo, c: FieldElement) {
        match self.terms.remove(&e) {
            None => {
                if !c.is_zero() {
                    self.terms.insert(e, c);
                }
            }
            Some(old) => {
                let s = &old + &c;
                if !s.is_zero() {
                    self.terms.insert(e, s);
                }
            }
        }
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        assert_eq!(self.rank, other.rank);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert_add(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> MultiPoly {
        MultiPoly {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        assert_eq!(self.rank, other.rank);
        let mut out = MultiPoly::zero(self.rank);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e = Expo(e1.0.iter().zip(&e2.0).map(|(a, b)| a + b).collect());
                out.insert_add(e, c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &FieldElement) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.rank);
        }
        MultiPoly {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .map(|(e, k)| (e.clone(), k * c))
                .collect(),
        }
    }

    /// Formal partial derivative with respect to z_i (0-based).
    pub fn partial_derivative(&self, i: usize) -> MultiPoly {
        assert!(i < self.rank);
        let mut out = MultiPoly::zero(self.rank);
        for (e, c) in &self.terms {
            if e.0[i] == 0 {
                continue;
            }
            let mut ne = e.0.clone();
            ne[i] -= 1;
            let factor = match c {
                FieldElement::Rat(_) => DValue::Rational(crate::field::rat(1, 1)),
                FieldElement::Fun(_) => DValue::Symbolic,
            }
            .scalar_int(e.0[i] as i64);
            out.insert_add(Expo(ne), c * &factor);
        }
        out
    }

    /// Substitute z_i -> z_i + offsets[i] for all i, exactly.
    pub fn substitute_shift(&self, offsets: &[FieldElement], d: &DValue) -> MultiPoly {
        assert_eq!(offsets.len(), self.rank);
        let mut out = MultiPoly::zero(self.rank);
        for (e, c) in &self.terms {
            let mut term = MultiPoly::constant(self.rank, c.clone());
            for (i, &exp) in e.0.iter().enumerate() {
                if exp == 0 {
                    continue;
                }
                let base = if offsets[i].is_zero() {
                    MultiPoly::var(self.rank, i, d)
                } else {
                    MultiPoly::var(self.rank, i, d)
                        .add(&MultiPoly::constant(self.rank, offsets[i].clone()))
                };
                for _ in 0..exp {
                    term = term.mul(&base);
                }
            }
            out = out.add(&term);
        }
        out
    }

    /// Exact quotient of self by q under graded-lex long division. Errors with
    /// `InexactDivision` if q does not divide self in the ring.
    pub fn divide_exact(&self, q: &MultiPoly) -> Result<MultiPoly, PolyError> {
        if self.rank != q.rank {
            return Err(PolyError::RankMismatch(self.rank, q.rank));
        }
        let (lq_e, lq_c) = match q.leading() {
            Some(l) => l,
            None => return Err(PolyError::InexactDivision),
        };
        let lq_c_inv = lq_c.inv().map_err(|_| PolyError::InexactDivision)?;
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero(self.rank);
        while let Some((le, lc)) = rem.leading() {
            if !lq_e.divides(le) {
                return Err(PolyError::InexactDivision);
            }
            let e = Expo(le.0.iter().zip(&lq_e.0).map(|(a, b)| a - b).collect());
            let c = lc * &lq_c_inv;
            let t = MultiPoly::monomial(self.rank, e.0.clone(), c.clone());
            rem = rem.sub(&t.mul(q));
            quot.insert_add(e, c);
        }
        Ok(quot)
    }

    /// Exact evaluation at a point.
    pub fn evaluate(&self, point: &[FieldElement], d: &DValue) -> FieldElement {
        assert_eq!(point.len(), self.rank);
        let mut acc = d.zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (i, &exp) in e.0.iter().enumerate() {
                for _ in 0..exp {
                    term = &term * &point[i];
                }
            }
            acc = &acc + &term;
        }
        acc
    }

    /// Decompose a symmetric polynomial on the monomial symmetric basis by
    /// iterated leading-term stripping. Errors if the input is not symmetric.
    pub fn to_monomial_basis(&self, d: &DValue) -> Result<SymPoly, PolyError> {
        let mut rem = self.clone();
        let mut out = SymPoly::zero(self.rank);
        while let Some((le, lc)) = rem.leading() {
            let lambda = match Partition::try_new(le.0.clone()) {
                Some(l) => l,
                None => return Err(PolyError::NotSymmetric),
            };
            let c = lc.clone();
            rem = rem.sub(&monomial_sym(&lambda, d).scale(&c));
            // stripping must strictly lower the leading exponent, otherwise
            // the input was not symmetric
            if let Some((ne, _)) = rem.leading() {
                if ne >= &Expo(lambda.parts().to_vec()) {
                    return Err(PolyError::NotSymmetric);
                }
            }
            out.add_term(lambda, c);
        }
        Ok(out)
    }

    pub fn is_symmetric(&self, d: &DValue) -> bool {
        self.to_monomial_basis(d).is_ok()
    }

    /// JSON rendering: a list of {exponents, coefficient} objects in
    /// descending graded-lex order.
    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<JsonTerm> = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| JsonTerm {
                exponents: e.0.clone(),
                coefficient: c.to_string(),
            })
            .collect();
        serde_json::to_value(terms).expect("serializable")
    }
}

#[derive(Serialize)]
struct JsonTerm {
    exponents: Vec<u32>,
    coefficient: String,
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let cs = c.to_string();
            let needs_paren = cs[1..].contains(['+', '-', '/']) || cs.starts_with('-');
            if needs_paren {
                write!(f, "({})", cs)?;
            } else {
                write!(f, "{}", cs)?;
            }
            for (i, &exp) in e.0.iter().enumerate() {
                if exp == 1 {
                    write!(f, "*z{}", i + 1)?;
                } else if exp > 1 {
                    write!(f, "*z{}^{}", i + 1, exp)?;
                }
            }
        }
        Ok(())
    }
}

/// Checked polynomial arithmetic with structured rank/mode errors.
pub fn poly_arith(
    p: &MultiPoly,
    q: &MultiPoly,
    op: crate::field::ArithOp,
) -> Result<MultiPoly, PolyError> {
    if p.rank != q.rank {
        return Err(PolyError::RankMismatch(p.rank, q.rank));
    }
    if let (Some(a), Some(b)) = (p.mode(), q.mode()) {
        if a != b {
            return Err(PolyError::ModeMismatch);
        }
    }
    match op {
        crate::field::ArithOp::Add => Ok(p.add(q)),
        crate::field::ArithOp::Sub => Ok(p.sub(q)),
        crate::field::ArithOp::Mul => Ok(p.mul(q)),
        crate::field::ArithOp::Div => p.divide_exact(q),
    }
}

/// Symmetric polynomial stored as coefficients on the monomial symmetric basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymPoly {
    rank: usize,
    coeffs: BTreeMap<Partition, FieldElement>,
}

impl SymPoly {
    pub fn zero(rank: usize) -> Self {
        SymPoly {
            rank,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (&Partition, &FieldElement)> {
        self.coeffs.iter()
    }

    pub fn coefficient(&self, lambda: &Partition) -> Option<&FieldElement> {
        self.coeffs.get(lambda)
    }

    pub fn add_term(&mut self, lambda: Partition, c: FieldElement) {
        assert_eq!(lambda.rank(), self.rank);
        match self.coeffs.remove(&lambda) {
            None => {
                if !c.is_zero() {
                    self.coeffs.insert(lambda, c);
                }
            }
            Some(old) => {
                let s = &old + &c;
                if !s.is_zero() {
                    self.coeffs.insert(lambda, s);
                }
            }
        }
    }

    pub fn scale(&self, c: &FieldElement) -> SymPoly {
        if c.is_zero() {
            return SymPoly::zero(self.rank);
        }
        SymPoly {
            rank: self.rank,
            coeffs: self
                .coeffs
                .iter()
                .map(|(l, k)| (l.clone(), k * c))
                .collect(),
        }
    }

    /// Expand back to a plain multivariate polynomial.
    pub fn expand(&self, d: &DValue) -> MultiPoly {
        let mut out = MultiPoly::zero(self.rank);
        for (lambda, c) in &self.coeffs {
            out = out.add(&monomial_sym(lambda, d).scale(c));
        }
        out
    }
}

/// The monomial symmetric polynomial m_lambda: the sum of z^n over the orbit
/// of lambda under coordinate permutations, each distinct monomial once.
pub fn monomial_sym(lambda: &Partition, d: &DValue) -> MultiPoly {
    let r = lambda.rank();
    let mut orbit: BTreeSet<Vec<u32>> = BTreeSet::new();
    permute_into(lambda.parts(), &mut vec![], &mut lambda.parts().to_vec(), &mut orbit);
    let mut p = MultiPoly::zero(r);
    for e in orbit {
        p.insert_add(Expo(e), d.one());
    }
    p
}

fn permute_into(
    _orig: &[u32],
    prefix: &mut Vec<u32>,
    remaining: &mut Vec<u32>,
    out: &mut BTreeSet<Vec<u32>>,
) {
    if remaining.is_empty() {
        out.insert(prefix.clone());
        return;
    }
    let mut seen = BTreeSet::new();
    for i in 0..remaining.len() {
        let v = remaining[i];
        if !seen.insert(v) {
            continue;
        }
        remaining.swap_remove(i);
        prefix.push(v);
        permute_into(_orig, prefix, remaining, out);
        prefix.pop();
        remaining.push(v);
        let last = remaining.len() - 1;
        remaining.swap(i, last);
    }
}

/// Vandermonde determinant Delta(z) = prod_{i<j} (z_i - z_j).
pub fn vandermonde(rank: usize, d: &DValue) -> MultiPoly {
    let mut p = MultiPoly::constant(rank, d.one());
    for i in 0..rank {
        for j in (i + 1)..rank {
            let factor = MultiPoly::var(rank, i, d).sub(&MultiPoly::var(rank, j, d));
            p = p.mul(&factor);
        }
    }
    p
}

/// Elementary symmetric polynomial e_{r,l}(z).
pub fn elementary(rank: usize, l: usize, d: &DValue) -> MultiPoly {
    if l == 0 {
        return MultiPoly::constant(rank, d.one());
    }
    if l > rank {
        return MultiPoly::zero(rank);
    }
    let mut lambda = vec![1u32; l];
    lambda.extend(vec![0u32; rank - l]);
    monomial_sym(&Partition::new(lambda), d)
}

/// Alternant det(z_i^{a_j}) expanded over permutations with sign; used for the
/// bialternant Schur oracle at small rank.
pub fn alternant(exponents: &[u32], d: &DValue) -> MultiPoly {
    let r = exponents.len();
    let mut out = MultiPoly::zero(r);
    let mut perm: Vec<usize> = (0..r).collect();
    loop {
        let sign = permutation_sign(&perm);
        let e: Vec<u32> = (0..r).map(|i| exponents[perm[i]]).collect();
        out.insert_add(Expo(e), d.scalar_int(sign));
        if !next_permutation(&mut perm) {
            break;
        }
    }
    out
}

fn permutation_sign(perm: &[usize]) -> i64 {
    let mut inv = 0;
    for i in 0..perm.len() {
        for j in (i + 1)..perm.len() {
            if perm[i] > perm[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

fn next_permutation(perm: &mut [usize]) -> bool {
    let n = perm.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && perm[i - 1] >= perm[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while perm[j] <= perm[i - 1] {
        j -= 1;
    }
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}

/// Bialternant Schur polynomial: det(z_i^{m_j + r - j}) / det(z_i^{r - j}).
/// Independent of the Jack construction; serves as the d=2 oracle.
pub fn schur_bialternant(m: &Partition, d: &DValue) -> MultiPoly {
    let r = m.rank();
    let exps: Vec<u32> = m
        .parts()
        .iter()
        .enumerate()
        .map(|(j, &mj)| mj + (r - 1 - j) as u32)
        .collect();
    let num = alternant(&exps, d);
    let den_exps: Vec<u32> = (0..r).map(|j| (r - 1 - j) as u32).collect();
    let den = alternant(&den_exps, d);
    num.divide_exact(&den)
        .expect("alternant is divisible by the Vandermonde")
}
