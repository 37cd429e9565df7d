//! Exact scalar arithmetic: arbitrary-precision rationals and the rational
//! function field Q(d) in the parameter `d`, behind one `FieldElement` interface.
//!
//! A computation session runs in one of two modes: every scalar is either a
//! plain rational (the parameter `d` specialized to a fixed nonzero rational)
//! or a reduced rational function in `d`. The two modes never mix inside one
//! value; mixing is a constructor error.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use thiserror::Error;

pub type Rat = BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division by zero")]
    DivisionByZero,
    #[error("mode mismatch: cannot combine rational-d and symbolic-d scalars")]
    ModeMismatch,
    #[error("pole at d = {0}")]
    PoleAtD(String),
    #[error("parse error: {0}")]
    Parse(String),
}

/// Scalar mode of a computation session.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Rational,
    Symbolic,
}

/// The parameter `d` of a session: a fixed nonzero rational, or formal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum DValue {
    Rational(Rat),
    Symbolic,
}

impl DValue {
    pub fn rational(num: i64, den: i64) -> Self {
        DValue::Rational(Rat::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn mode(&self) -> Mode {
        match self {
            DValue::Rational(_) => Mode::Rational,
            DValue::Symbolic => Mode::Symbolic,
        }
    }

    /// The scalar representing `d` itself.
    pub fn d_elem(&self) -> FieldElement {
        match self {
            DValue::Rational(q) => FieldElement::Rat(q.clone()),
            DValue::Symbolic => FieldElement::Fun(RatFunc::var()),
        }
    }

    /// Embed a plain rational as a scalar of this session's mode.
    pub fn scalar(&self, q: Rat) -> FieldElement {
        match self {
            DValue::Rational(_) => FieldElement::Rat(q),
            DValue::Symbolic => FieldElement::Fun(RatFunc::constant(q)),
        }
    }

    pub fn scalar_int(&self, n: i64) -> FieldElement {
        self.scalar(Rat::from(BigInt::from(n)))
    }

    pub fn zero(&self) -> FieldElement {
        self.scalar_int(0)
    }

    pub fn one(&self) -> FieldElement {
        self.scalar_int(1)
    }

    /// d/2 as a scalar.
    pub fn half_d(&self) -> FieldElement {
        self.d_elem() * self.scalar(Rat::new(BigInt::one(), BigInt::from(2)))
    }

    /// 2/d as a scalar.
    pub fn two_over_d(&self) -> FieldElement {
        self.scalar_int(2)
            .checked_div(&self.d_elem())
            .expect("d is nonzero")
    }
}

pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

// ---------------------------------------------------------------------------
// Dense univariate polynomials over Q, used as numerator/denominator of RatFunc.
// ---------------------------------------------------------------------------

/// Dense univariate polynomial in `d` with rational coefficients.
/// Invariant: no trailing zero coefficient (the zero polynomial is empty).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RPoly {
    coeffs: Vec<Rat>,
}

impl RPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        RPoly { coeffs }
    }

    pub fn zero() -> Self {
        RPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        RPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        RPoly::new(vec![c])
    }

    /// The polynomial `d`.
    pub fn var() -> Self {
        RPoly::new(vec![Rat::zero(), Rat::one()])
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn as_constant(&self) -> Option<Rat> {
        match self.coeffs.len() {
            0 => Some(Rat::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn add(&self, other: &RPoly) -> RPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![Rat::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] += c;
        }
        RPoly::new(out)
    }

    pub fn sub(&self, other: &RPoly) -> RPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> RPoly {
        RPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn mul(&self, other: &RPoly) -> RPoly {
        if self.is_zero() || other.is_zero() {
            return RPoly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RPoly::new(out)
    }

    pub fn scale(&self, c: &Rat) -> RPoly {
        RPoly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Euclidean division; panics if `other` is zero.
    pub fn div_rem(&self, other: &RPoly) -> (RPoly, RPoly) {
        assert!(!other.is_zero(), "division by the zero polynomial");
        let dd = other.degree().unwrap();
        let lead = other.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rat::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let q = rem.last().unwrap() / &lead;
            if !q.is_zero() {
                for (j, b) in other.coeffs.iter().enumerate() {
                    rem[k + j] -= &q * b;
                }
                quot[k] = q;
            }
            rem.pop();
        }
        (RPoly::new(quot), RPoly::new(rem))
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Monic gcd, computed by a primitive-part PRS over the integers to avoid
    /// the coefficient blowup of fraction-field Euclid.
    pub fn gcd(&self, other: &RPoly) -> RPoly {
        if self.is_zero() {
            return other.make_monic();
        }
        if other.is_zero() {
            return self.make_monic();
        }
        let mut a = self.primitive_int();
        let mut b = other.primitive_int();
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        loop {
            if b.is_empty() {
                let g = RPoly::new(a.into_iter().map(Rat::from).collect());
                return g.make_monic();
            }
            let r = pseudo_rem(&a, &b);
            a = b;
            b = int_primitive(r);
        }
    }

    fn make_monic(&self) -> RPoly {
        match self.leading() {
            None => RPoly::zero(),
            Some(l) => self.scale(&l.recip()),
        }
    }

    /// Integer coefficients with content removed and positive leading coefficient.
    fn primitive_int(&self) -> Vec<BigInt> {
        let mut den = BigInt::one();
        for c in &self.coeffs {
            den = num_integer::lcm(den, c.denom().clone());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        int_primitive(ints)
    }
}

fn int_primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().map_or(false, |c| c.is_zero()) {
        v.pop();
    }
    if v.is_empty() {
        return v;
    }
    let mut g = BigInt::zero();
    for c in &v {
        g = num_integer::gcd(g, c.clone());
    }
    if v.last().unwrap().is_negative() {
        g = -g;
    }
    v.into_iter().map(|c| c / &g).collect()
}

fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lb = b.last().unwrap().clone();
    let mut rem: Vec<BigInt> = a.to_vec();
    while rem.len() > db {
        let k = rem.len() - 1 - db;
        let lr = rem.last().unwrap().clone();
        for c in rem.iter_mut() {
            *c *= &lb;
        }
        for (j, bc) in b.iter().enumerate() {
            rem[k + j] -= &lr * bc;
        }
        while rem.last().map_or(false, |c| c.is_zero()) {
            rem.pop();
        }
        if rem.len() > db + k {
            // leading term must have cancelled
            unreachable!("pseudo-remainder did not reduce degree");
        }
    }
    rem
}

impl fmt::Display for DValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DValue::Rational(q) => write!(f, "{}", q),
            DValue::Symbolic => write!(f, "symbolic"),
        }
    }
}

impl fmt::Display for RPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() {
                ("-", -c)
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, "{}", sign)?;
            }
            let unit_coeff = mag.is_one() && i > 0;
            if !unit_coeff {
                write!(f, "{}", mag)?;
            }
            if i > 0 {
                if !unit_coeff {
                    write!(f, "*")?;
                }
                if i == 1 {
                    write!(f, "d")?;
                } else {
                    write!(f, "d^{}", i)?;
                }
            }
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Rational functions in d.
// ---------------------------------------------------------------------------

/// Reduced rational function in `d`. Invariants: gcd(num, den) = 1, den monic
/// and nonzero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: RPoly,
    den: RPoly,
}

impl RatFunc {
    pub fn new(num: RPoly, den: RPoly) -> Result<Self, FieldError> {
        if den.is_zero() {
            return Err(FieldError::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(RatFunc {
                num: RPoly::zero(),
                den: RPoly::one(),
            });
        }
        let g = num.gcd(&den);
        let (num, r1) = num.div_rem(&g);
        debug_assert!(r1.is_zero());
        let (den, r2) = den.div_rem(&g);
        debug_assert!(r2.is_zero());
        let lead = den.leading().unwrap().recip();
        Ok(RatFunc {
            num: num.scale(&lead),
            den: den.scale(&lead),
        })
    }

    pub fn constant(c: Rat) -> Self {
        RatFunc {
            num: RPoly::constant(c),
            den: RPoly::one(),
        }
    }

    /// The rational function `d`.
    pub fn var() -> Self {
        RatFunc {
            num: RPoly::var(),
            den: RPoly::one(),
        }
    }

    pub fn num(&self) -> &RPoly {
        &self.num
    }

    pub fn den(&self) -> &RPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Plain rational if this is a constant over den = 1.
    pub fn as_rational(&self) -> Option<Rat> {
        if self.den == RPoly::one() {
            self.num.as_constant()
        } else {
            None
        }
    }

    pub fn add(&self, other: &RatFunc) -> RatFunc {
        RatFunc::new(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
        .expect("nonzero denominators")
    }

    pub fn sub(&self, other: &RatFunc) -> RatFunc {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &RatFunc) -> RatFunc {
        RatFunc::new(self.num.mul(&other.num), self.den.mul(&other.den))
            .expect("nonzero denominators")
    }

    pub fn div(&self, other: &RatFunc) -> Result<RatFunc, FieldError> {
        if other.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        RatFunc::new(self.num.mul(&other.den), self.den.mul(&other.num))
    }

    /// Specialize `d` to a rational. Errors with `PoleAtD` if the denominator
    /// vanishes there, signalling the caller to pick another d.
    pub fn eval_at_d(&self, d0: &Rat) -> Result<Rat, FieldError> {
        let dv = self.den.eval(d0);
        if dv.is_zero() {
            return Err(FieldError::PoleAtD(d0.to_string()));
        }
        Ok(self.num.eval(d0) / dv)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == RPoly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl std::str::FromStr for RatFunc {
    type Err = FieldError;

    fn from_str(s: &str) -> Result<Self, FieldError> {
        parse::ratfunc(s)
    }
}

// ---------------------------------------------------------------------------
// FieldElement: the session scalar.
// ---------------------------------------------------------------------------

/// A session scalar: either a rational (rational-d mode) or a reduced rational
/// function in d (symbolic mode). Values are always in canonical reduced form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FieldElement {
    Rat(Rat),
    Fun(RatFunc),
}

impl FieldElement {
    pub fn mode(&self) -> Mode {
        match self {
            FieldElement::Rat(_) => Mode::Rational,
            FieldElement::Fun(_) => Mode::Symbolic,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElement::Rat(q) => q.is_zero(),
            FieldElement::Fun(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldElement::Rat(q) => q.is_one(),
            FieldElement::Fun(r) => r.as_rational().map_or(false, |q| q.is_one()),
        }
    }

    pub fn checked_add(&self, other: &FieldElement) -> Result<FieldElement, FieldError> {
        match (self, other) {
            (FieldElement::Rat(a), FieldElement::Rat(b)) => Ok(FieldElement::Rat(a + b)),
            (FieldElement::Fun(a), FieldElement::Fun(b)) => Ok(FieldElement::Fun(a.add(b))),
            _ => Err(FieldError::ModeMismatch),
        }
    }

    pub fn checked_sub(&self, other: &FieldElement) -> Result<FieldElement, FieldError> {
        match (self, other) {
            (FieldElement::Rat(a), FieldElement::Rat(b)) => Ok(FieldElement::Rat(a - b)),
            (FieldElement::Fun(a), FieldElement::Fun(b)) => Ok(FieldElement::Fun(a.sub(b))),
            _ => Err(FieldError::ModeMismatch),
        }
    }

    pub fn checked_mul(&self, other: &FieldElement) -> Result<FieldElement, FieldError> {
        match (self, other) {
            (FieldElement::Rat(a), FieldElement::Rat(b)) => Ok(FieldElement::Rat(a * b)),
            (FieldElement::Fun(a), FieldElement::Fun(b)) => Ok(FieldElement::Fun(a.mul(b))),
            _ => Err(FieldError::ModeMismatch),
        }
    }

    pub fn checked_div(&self, other: &FieldElement) -> Result<FieldElement, FieldError> {
        if other.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        match (self, other) {
            (FieldElement::Rat(a), FieldElement::Rat(b)) => Ok(FieldElement::Rat(a / b)),
            (FieldElement::Fun(a), FieldElement::Fun(b)) => Ok(FieldElement::Fun(a.div(b)?)),
            _ => Err(FieldError::ModeMismatch),
        }
    }

    pub fn inv(&self) -> Result<FieldElement, FieldError> {
        match self {
            FieldElement::Rat(q) => {
                if q.is_zero() {
                    Err(FieldError::DivisionByZero)
                } else {
                    Ok(FieldElement::Rat(q.recip()))
                }
            }
            FieldElement::Fun(r) => Ok(FieldElement::Fun(
                RatFunc::constant(Rat::one()).div(r)?,
            )),
        }
    }

    /// Specialize a symbolic scalar at d = d0; rational scalars pass through.
    pub fn specialize(&self, d0: &Rat) -> Result<Rat, FieldError> {
        match self {
            FieldElement::Rat(q) => Ok(q.clone()),
            FieldElement::Fun(r) => r.eval_at_d(d0),
        }
    }
}

/// Binary arithmetic op selector for the checked entry point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Checked field arithmetic: exact result in canonical form, or a structured
/// error on mode mismatch / division by zero.
pub fn arith(a: &FieldElement, b: &FieldElement, op: ArithOp) -> Result<FieldElement, FieldError> {
    match op {
        ArithOp::Add => a.checked_add(b),
        ArithOp::Sub => a.checked_sub(b),
        ArithOp::Mul => a.checked_mul(b),
        ArithOp::Div => a.checked_div(b),
    }
}

macro_rules! fe_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                self.$checked(&rhs).expect("field arithmetic")
            }
        }
        impl<'a> $trait<&'a FieldElement> for &'a FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &'a FieldElement) -> FieldElement {
                self.$checked(rhs).expect("field arithmetic")
            }
        }
    };
}

fe_binop!(Add, add, checked_add);
fe_binop!(Sub, sub, checked_sub);
fe_binop!(Mul, mul, checked_mul);

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        match self {
            FieldElement::Rat(q) => FieldElement::Rat(-q),
            FieldElement::Fun(r) => FieldElement::Fun(r.neg()),
        }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElement::Rat(q) => write!(f, "{}", q),
            FieldElement::Fun(r) => write!(f, "{}", r),
        }
    }
}

// ---------------------------------------------------------------------------
// Text parsing for RatFunc: "num/den" with "d" as the variable, round-trips
// the Display rendering bit-exactly.
// ---------------------------------------------------------------------------

mod parse {
    use super::*;

    pub fn ratfunc(s: &str) -> Result<RatFunc, FieldError> {
        let s = s.trim();
        // Split "(num)/(den)" at the top level; a bare polynomial has den 1.
        if let Some(stripped) = s.strip_prefix('(') {
            if let Some((num_part, rest)) = split_paren(stripped) {
                let rest = rest.trim();
                if let Some(den_part) = rest.strip_prefix('/') {
                    let den_part = den_part.trim();
                    let den_inner = den_part
                        .strip_prefix('(')
                        .and_then(|t| t.strip_suffix(')'))
                        .ok_or_else(|| FieldError::Parse(s.to_string()))?;
                    return RatFunc::new(poly(num_part)?, poly(den_inner)?);
                } else if rest.is_empty() {
                    return RatFunc::new(poly(num_part)?, RPoly::one());
                }
            }
        }
        RatFunc::new(poly(s)?, RPoly::one())
    }

    /// Content up to the matching close paren, plus the remainder after it.
    fn split_paren(s: &str) -> Option<(&str, &str)> {
        let mut depth = 1usize;
        for (i, c) in s.char_indices() {
            match c {
                '(' => depth += 1,
                ')' => {
                    depth -= 1;
                    if depth == 0 {
                        return Some((&s[..i], &s[i + 1..]));
                    }
                }
                _ => {}
            }
        }
        None
    }

    fn poly(s: &str) -> Result<RPoly, FieldError> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(FieldError::Parse("empty polynomial".into()));
        }
        // Split into signed terms.
        let mut terms: Vec<String> = vec![];
        let mut cur = String::new();
        for (i, c) in s.char_indices() {
            if (c == '+' || c == '-') && i > 0 {
                terms.push(std::mem::take(&mut cur));
            }
            cur.push(c);
        }
        terms.push(cur);
        let mut acc = RPoly::zero();
        for t in terms {
            acc = acc.add(&term(&t)?);
        }
        Ok(acc)
    }

    fn term(t: &str) -> Result<RPoly, FieldError> {
        let (sign, t) = match t.strip_prefix('-') {
            Some(rest) => (-1i64, rest),
            None => (1i64, t.strip_prefix('+').unwrap_or(t)),
        };
        let (coeff_str, pow) = if let Some(idx) = t.find('d') {
            let before = t[..idx].trim_end_matches('*');
            let after = &t[idx + 1..];
            let pow = if let Some(p) = after.strip_prefix('^') {
                p.parse::<usize>()
                    .map_err(|_| FieldError::Parse(t.to_string()))?
            } else if after.is_empty() {
                1
            } else {
                return Err(FieldError::Parse(t.to_string()));
            };
            (before, pow)
        } else {
            (t, 0)
        };
        let coeff: Rat = if coeff_str.is_empty() {
            Rat::one()
        } else {
            coeff_str
                .parse::<Rat>()
                .map_err(|_| FieldError::Parse(coeff_str.to_string()))?
        };
        let mut coeffs = vec![Rat::zero(); pow + 1];
        coeffs[pow] = coeff * Rat::from(BigInt::from(sign));
        Ok(RPoly::new(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(num: &[i64], den: &[i64]) -> RatFunc {
        RatFunc::new(
            RPoly::new(num.iter().map(|&c| Rat::from(BigInt::from(c))).collect()),
            RPoly::new(den.iter().map(|&c| Rat::from(BigInt::from(c))).collect()),
        )
        .unwrap()
    }

    #[test]
    fn rational_normalizes() {
        // 2/4 -> 1/2
        assert_eq!(rat(2, 4), rat(1, 2));
        // 0/(anything) -> 0/1
        assert_eq!(rat(0, 7), rat(0, 1));
    }

    #[test]
    fn ratfunc_reduces_common_factor() {
        // (d^2 - d)/d -> d - 1
        let f = rf(&[0, -1, 1], &[0, 1]);
        assert_eq!(f, rf(&[-1, 1], &[1]));
        // 0/(d+1) -> 0/1
        let z = rf(&[0], &[1, 1]);
        assert_eq!(z.num(), &RPoly::zero());
        assert_eq!(z.den(), &RPoly::one());
    }

    #[test]
    fn ratfunc_den_is_monic() {
        // 1/(2d + 2) -> (1/2)/(d + 1)
        let f = rf(&[1], &[2, 2]);
        assert_eq!(f.den(), &RPoly::new(vec![Rat::one(), Rat::one()]));
        assert_eq!(f.num().as_constant(), Some(rat(1, 2)));
    }

    #[test]
    fn arith_examples() {
        let half = FieldElement::Rat(rat(1, 2));
        let third = FieldElement::Rat(rat(1, 3));
        assert_eq!(
            arith(&half, &third, ArithOp::Add).unwrap(),
            FieldElement::Rat(rat(5, 6))
        );

        // (1/d) * d = 1
        let d = FieldElement::Fun(RatFunc::var());
        let inv_d = d.inv().unwrap();
        assert!(inv_d.checked_mul(&d).unwrap().is_one());

        // (d+2)/d - 1 = 2/d
        let f = FieldElement::Fun(rf(&[2, 1], &[0, 1]));
        let g = f - FieldElement::Fun(RatFunc::constant(Rat::one()));
        assert_eq!(g, FieldElement::Fun(rf(&[2], &[0, 1])));
    }

    #[test]
    fn mode_mismatch_is_an_error() {
        let a = FieldElement::Rat(rat(1, 2));
        let b = FieldElement::Fun(RatFunc::var());
        assert_eq!(arith(&a, &b, ArithOp::Add), Err(FieldError::ModeMismatch));
    }

    #[test]
    fn division_by_zero() {
        let one = FieldElement::Rat(rat(1, 1));
        let zero = FieldElement::Rat(rat(0, 1));
        assert_eq!(
            arith(&one, &zero, ArithOp::Div),
            Err(FieldError::DivisionByZero)
        );
    }

    #[test]
    fn eval_at_d_examples() {
        // 2d/(d+2) at d=2 -> 1
        let f = rf(&[0, 2], &[2, 1]);
        assert_eq!(f.eval_at_d(&rat(2, 1)).unwrap(), rat(1, 1));
        // pole at d=-2
        assert!(matches!(
            f.eval_at_d(&rat(-2, 1)),
            Err(FieldError::PoleAtD(_))
        ));
        // (d-1)/1 at d=1 -> 0
        let g = rf(&[-1, 1], &[1]);
        assert_eq!(g.eval_at_d(&rat(1, 1)).unwrap(), rat(0, 1));
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(
            RatFunc::new(RPoly::one(), RPoly::zero()),
            Err(FieldError::ZeroDenominator)
        );
    }

    #[test]
    fn display_round_trip() {
        let cases = [
            rf(&[0, 2], &[2, 1]),
            rf(&[-1, 1], &[1]),
            rf(&[1, 0, 3], &[0, 0, 2]),
            RatFunc::constant(rat(-7, 3)),
            RatFunc::new(RPoly::zero(), RPoly::one()).unwrap(),
        ];
        for f in &cases {
            let s = f.to_string();
            let back: RatFunc = s.parse().unwrap();
            assert_eq!(&back, f, "round trip of {}", s);
        }
    }

    #[test]
    fn gcd_avoids_fraction_blowup() {
        // (d+1)^3 (d-2) vs (d+1)^2 (d+3)
        let p1 = rf(&[1, 1], &[1]).num().clone();
        let a = p1.mul(&p1).mul(&p1).mul(&RPoly::new(vec![
            Rat::from(BigInt::from(-2)),
            Rat::one(),
        ]));
        let b = p1.mul(&p1).mul(&RPoly::new(vec![
            Rat::from(BigInt::from(3)),
            Rat::one(),
        ]));
        let g = a.gcd(&b);
        assert_eq!(g, p1.mul(&p1));
    }
}
