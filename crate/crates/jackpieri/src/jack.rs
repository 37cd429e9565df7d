//! Jack polynomials P_m(z; d/2) constructed from the triangular eigen
//! characterization of the operator D(z), the normalizations Phi and Psi, and
//! the A-coefficient products appearing in every Pieri-type expansion.

use crate::combinatorics::{partitions_of, IntVector, Partition, Subset};
use crate::field::{DValue, FieldElement, FieldError};
use crate::interpjack::InterpJackPolynomial;
use crate::operators::{apply_d_operator, d_eigenvalue};
use crate::polyring::{MultiPoly, PolyError, SymPoly};
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, RwLock};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum JackError {
    #[error("eigenvalue collision at d={d}: indexes {m} and {k} collide")]
    EigenvalueCollision { d: String, m: String, k: String },
    #[error("normalizer vanishes for index {0} (degenerate d)")]
    ZeroNormalizer(String),
    #[error("pole in A-coefficient at x={x}, factor between positions {i} and {k}")]
    PoleInA { x: String, i: usize, k: usize },
    #[error("singular vanishing system for index {0} (degenerate d)")]
    SingularSystem(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// A constructed Jack polynomial: monic triangular expansion on the monomial
/// symmetric basis, plus the materialized polynomial.
#[derive(Debug, Clone)]
pub struct JackPolynomial {
    pub index: Partition,
    pub expansion: SymPoly,
    pub poly: MultiPoly,
}

/// Normalization kind for Jack polynomials.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NormKind {
    /// Divided by P_m(1; d/2).
    Phi,
    /// Divided by P_m^ip(m + (d/2) delta; d/2).
    Psi,
}

#[derive(Debug, Clone)]
pub struct NormalizedJack {
    pub kind: NormKind,
    pub index: Partition,
    pub normalizer: FieldElement,
    pub poly: MultiPoly,
}

/// A computation session: fixed rank and d-mode, with construction caches.
/// Caches are safe under concurrent read/insert (inserts are idempotent).
pub struct Session {
    r: usize,
    d: DValue,
    jack_cache: RwLock<HashMap<Partition, Arc<JackPolynomial>>>,
    ones_cache: RwLock<HashMap<Partition, FieldElement>>,
    pub(crate) interp_cache: RwLock<HashMap<Partition, Arc<InterpJackPolynomial>>>,
    psi_norm_cache: RwLock<HashMap<Partition, FieldElement>>,
}

impl Session {
    pub fn new(r: usize, d: DValue) -> Self {
        Session {
            r,
            d,
            jack_cache: RwLock::new(HashMap::new()),
            ones_cache: RwLock::new(HashMap::new()),
            interp_cache: RwLock::new(HashMap::new()),
            psi_norm_cache: RwLock::new(HashMap::new()),
        }
    }

    pub fn rank(&self) -> usize {
        self.r
    }

    pub fn d(&self) -> &DValue {
        &self.d
    }

    /// Point m + (d/2) delta as a scalar vector.
    pub fn shifted_point(&self, x: &IntVector) -> Vec<FieldElement> {
        let half_d = self.d.half_d();
        x.0.iter()
            .enumerate()
            .map(|(i, &xi)| {
                &self.d.scalar_int(xi) + &(&half_d * &self.d.scalar_int((self.r - 1 - i) as i64))
            })
            .collect()
    }

    pub fn fe_vec(&self, x: &IntVector) -> Vec<FieldElement> {
        x.0.iter().map(|&v| self.d.scalar_int(v)).collect()
    }

    /// s_j(x) = x_j + (d/2)(r - j), 0-based position j0 = j - 1.
    pub fn s_factor(&self, x: &IntVector, j0: usize) -> FieldElement {
        &self.d.scalar_int(x.0[j0])
            + &(&self.d.half_d() * &self.d.scalar_int((self.r - 1 - j0) as i64))
    }

    /// The Jack polynomial P_m: the unique monic triangular eigenvector of
    /// D(z), solved top-down along the dominance order.
    pub fn jack(&self, m: &Partition) -> Result<Arc<JackPolynomial>, JackError> {
        assert_eq!(m.rank(), self.r);
        if let Some(hit) = self.jack_cache.read().unwrap().get(m) {
            return Ok(hit.clone());
        }
        let built = Arc::new(self.build_jack(m)?);
        self.jack_cache
            .write()
            .unwrap()
            .entry(m.clone())
            .or_insert_with(|| built.clone());
        Ok(built)
    }

    fn build_jack(&self, m: &Partition) -> Result<JackPolynomial, JackError> {
        // basis: partitions of the same weight dominated by m, in decreasing
        // lex order (a linear extension of decreasing dominance)
        let mut basis: Vec<Partition> = partitions_of(m.weight(), self.r)
            .into_iter()
            .filter(|k| crate::combinatorics::dominance_leq(k, m).unwrap())
            .collect();
        basis.sort_by(|a, b| b.cmp(a));
        debug_assert_eq!(basis.first(), Some(m));

        // D action of each basis monomial m_k decomposed on the monomial basis
        let mut action: HashMap<Partition, SymPoly> = HashMap::new();
        for k in &basis {
            let dk = apply_d_operator(&crate::polyring::monomial_sym(k, &self.d), &self.d)?;
            action.insert(k.clone(), dk.to_monomial_basis(&self.d)?);
        }

        let eig_m = d_eigenvalue(m, &self.d);
        let mut coeffs: BTreeMap<Partition, FieldElement> = BTreeMap::new();
        coeffs.insert(m.clone(), self.d.one());
        for j in basis.iter().skip(1) {
            // sum over already-solved k (strictly dominance above j) of the
            // coefficient of m_j in D m_k
            let mut acc = self.d.zero();
            for (k, c) in &coeffs {
                if let Some(a) = action[k].coefficient(j) {
                    acc = &acc + &(a * c);
                }
            }
            let eig_j = d_eigenvalue(j, &self.d);
            let gap = &eig_m - &eig_j;
            if gap.is_zero() {
                return Err(JackError::EigenvalueCollision {
                    d: format!("{:?}", self.d),
                    m: m.to_string(),
                    k: j.to_string(),
                });
            }
            let cj = acc.checked_div(&gap)?;
            if !cj.is_zero() {
                coeffs.insert(j.clone(), cj);
            }
        }

        let mut expansion = SymPoly::zero(self.r);
        for (k, c) in coeffs {
            expansion.add_term(k, c);
        }
        let poly = expansion.expand(&self.d);
        Ok(JackPolynomial {
            index: m.clone(),
            expansion,
            poly,
        })
    }

    /// P_m(1, .., 1), computed by direct evaluation (the closed product
    /// formula is deliberately not used).
    pub fn eval_at_ones(&self, m: &Partition) -> Result<FieldElement, JackError> {
        if let Some(hit) = self.ones_cache.read().unwrap().get(m) {
            return Ok(hit.clone());
        }
        let jack = self.jack(m)?;
        let ones = vec![self.d.one(); self.r];
        let v = jack.poly.evaluate(&ones, &self.d);
        if v.is_zero() {
            return Err(JackError::ZeroNormalizer(m.to_string()));
        }
        self.ones_cache
            .write()
            .unwrap()
            .entry(m.clone())
            .or_insert_with(|| v.clone());
        Ok(v)
    }

    pub fn phi(&self, m: &Partition) -> Result<NormalizedJack, JackError> {
        let norm = self.eval_at_ones(m)?;
        let jack = self.jack(m)?;
        Ok(NormalizedJack {
            kind: NormKind::Phi,
            index: m.clone(),
            poly: jack.poly.scale(&norm.inv()?),
            normalizer: norm,
        })
    }

    /// Psi normalizer: P_m^ip evaluated at its own shifted index m + (d/2) delta.
    pub fn psi_normalizer(&self, m: &Partition) -> Result<FieldElement, JackError> {
        if let Some(hit) = self.psi_norm_cache.read().unwrap().get(m) {
            return Ok(hit.clone());
        }
        let point = self.shifted_point(&m.to_int_vector());
        let v = self.eval_interp(m, &point)?;
        if v.is_zero() {
            return Err(JackError::ZeroNormalizer(m.to_string()));
        }
        self.psi_norm_cache
            .write()
            .unwrap()
            .entry(m.clone())
            .or_insert_with(|| v.clone());
        Ok(v)
    }

    pub fn psi(&self, m: &Partition) -> Result<NormalizedJack, JackError> {
        let norm = self.psi_normalizer(m)?;
        let jack = self.jack(m)?;
        Ok(NormalizedJack {
            kind: NormKind::Psi,
            index: m.clone(),
            poly: jack.poly.scale(&norm.inv()?),
            normalizer: norm,
        })
    }

    /// Decompose a symmetric polynomial on the Jack basis {P_mu} by stripping
    /// the (weight, lex)-maximal monomial coefficient, which is the leading
    /// Jack coefficient by triangularity.
    pub fn to_jack_basis(
        &self,
        f: &MultiPoly,
    ) -> Result<BTreeMap<Partition, FieldElement>, JackError> {
        let mut rem = f.to_monomial_basis(&self.d)?;
        let mut out = BTreeMap::new();
        while !rem.is_zero() {
            let lam = rem
                .coeffs()
                .map(|(l, _)| l)
                .max_by(|a, b| a.weight().cmp(&b.weight()).then_with(|| a.cmp(b)))
                .unwrap()
                .clone();
            let c = rem.coefficient(&lam).unwrap().clone();
            let jack = self.jack(&lam)?;
            let mut next = rem.clone();
            for (k, a) in jack.expansion.coeffs() {
                next.add_term(k.clone(), -(a * &c));
            }
            rem = next;
            out.insert(lam, c);
        }
        Ok(out)
    }
}

/// Sign selector for A-coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

/// One factor (x_a - x_b - (d/2)(a-b) +- d/2) / (x_a - x_b - (d/2)(a-b)) with
/// 0-based positions a, b.
fn a_factor(
    sign: Sign,
    x: &[FieldElement],
    a: usize,
    b: usize,
    d: &DValue,
) -> Result<FieldElement, JackError> {
    let half_d = d.half_d();
    let base = &(&x[a] - &x[b]) - &(&half_d * &d.scalar_int(a as i64 - b as i64));
    if base.is_zero() {
        return Err(JackError::PoleInA {
            x: x.iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(","),
            i: a,
            k: b,
        });
    }
    let num = match sign {
        Sign::Plus => &base + &half_d,
        Sign::Minus => &base - &half_d,
    };
    Ok(num.checked_div(&base)?)
}

/// A_{+-,i}(x): the product over all other positions k.
pub fn a_single(
    sign: Sign,
    x: &[FieldElement],
    i: usize,
    d: &DValue,
) -> Result<FieldElement, JackError> {
    let mut acc = d.one();
    for k in 0..x.len() {
        if k == i {
            continue;
        }
        acc = &acc * &a_factor(sign, x, i, k, d)?;
    }
    Ok(acc)
}

/// A_{+-,J}(x): the product over j in J and l in the complement of J.
pub fn a_subset(
    sign: Sign,
    x: &[FieldElement],
    j: &Subset,
    d: &DValue,
) -> Result<FieldElement, JackError> {
    let comp = j.complement();
    let mut acc = d.one();
    for &a in j.indices() {
        for &b in comp.indices() {
            acc = &acc * &a_factor(sign, x, a, b, d)?;
        }
    }
    Ok(acc)
}

/// A_{+-,i,I\i}(x): the product over j in I minus i only.
pub fn a_pair(
    sign: Sign,
    x: &[FieldElement],
    i: usize,
    i_set: &Subset,
    d: &DValue,
) -> Result<FieldElement, JackError> {
    let mut acc = d.one();
    for &b in i_set.indices() {
        if b == i {
            continue;
        }
        acc = &acc * &a_factor(sign, x, i, b, d)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::partitions_up_to;
    use crate::field::rat;
    use crate::polyring::{monomial_sym, schur_bialternant};

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn single_monomial_indexes() {
        // m = (1,0,..,0): P_m = m_m with no lower terms
        let s = Session::new(3, DValue::rational(3, 1));
        let m = p(&[1, 0, 0]);
        let jack = s.jack(&m).unwrap();
        assert_eq!(jack.poly, monomial_sym(&m, s.d()));
    }

    #[test]
    fn rank_one_is_power() {
        let s = Session::new(1, DValue::rational(1, 2));
        for m in 0..5u32 {
            let jack = s.jack(&p(&[m])).unwrap();
            assert_eq!(jack.poly, MultiPoly::monomial(1, vec![m], s.d().one()));
        }
    }

    #[test]
    fn jack_two_zero_symbolic() {
        // P_(2,0) = m_(2,0) + (2d/(d+2)) m_(1,1), against an independent
        // brute-force solve of the 2x2 triangular system
        let s = Session::new(2, DValue::Symbolic);
        let m = p(&[2, 0]);
        let jack = s.jack(&m).unwrap();
        // oracle: D(m_20 + c m_11) = eig(2,0) (m_20 + c m_11); solve for c
        let d = s.d();
        let m20 = monomial_sym(&p(&[2, 0]), d);
        let m11 = monomial_sym(&p(&[1, 1]), d);
        let eig = d_eigenvalue(&m, d);
        let a20 = apply_d_operator(&m20, d).unwrap().to_monomial_basis(d).unwrap();
        let a11 = apply_d_operator(&m11, d).unwrap().to_monomial_basis(d).unwrap();
        // coefficient of m_11: a20[11] + c a11[11] = eig c
        let rhs = a20.coefficient(&p(&[1, 1])).cloned().unwrap_or(d.zero());
        let diag = a11.coefficient(&p(&[1, 1])).cloned().unwrap_or(d.zero());
        let c = rhs.checked_div(&(&eig - &diag)).unwrap();
        assert_eq!(jack.expansion.coefficient(&p(&[1, 1])), Some(&c));
        // and the closed form 2d/(d+2)
        let two_d = &d.scalar_int(2) * &d.d_elem();
        let dp2 = &d.d_elem() + &d.scalar_int(2);
        assert_eq!(c, two_d.checked_div(&dp2).unwrap());
    }

    #[test]
    fn eval_at_ones_examples() {
        let s = Session::new(2, DValue::Symbolic);
        assert_eq!(s.eval_at_ones(&p(&[1, 0])).unwrap(), s.d().scalar_int(2));
        assert_eq!(s.eval_at_ones(&p(&[0, 0])).unwrap(), s.d().one());
        // m_{2,0}(1,1) + (2d/(d+2)) m_{1,1}(1,1) = 2 + 2d/(d+2) = (4d+4)/(d+2)
        let d = s.d();
        let num = &(&d.scalar_int(4) * &d.d_elem()) + &d.scalar_int(4);
        let den = &d.d_elem() + &d.scalar_int(2);
        assert_eq!(
            s.eval_at_ones(&p(&[2, 0])).unwrap(),
            num.checked_div(&den).unwrap()
        );
    }

    #[test]
    fn schur_oracle_d2() {
        for r in [2usize, 3] {
            let s = Session::new(r, DValue::rational(2, 1));
            for m in partitions_up_to(4, r) {
                let jack = s.jack(&m).unwrap();
                assert_eq!(
                    jack.poly,
                    schur_bialternant(&m, s.d()),
                    "r={} m={}",
                    r,
                    m
                );
            }
        }
    }

    #[test]
    fn triangularity_and_monicity() {
        for (r, max_w) in [(2usize, 5u32), (3, 4)] {
            let s = Session::new(r, DValue::rational(3, 1));
            for m in partitions_up_to(max_w, r) {
                let jack = s.jack(&m).unwrap();
                assert_eq!(jack.expansion.coefficient(&m), Some(&s.d().one()));
                for (k, _) in jack.expansion.coeffs() {
                    assert_eq!(k.weight(), m.weight());
                    assert!(crate::combinatorics::dominance_leq(k, &m).unwrap());
                }
                // homogeneity
                for (e, _) in jack.poly.terms() {
                    assert_eq!(e.degree(), m.weight());
                }
            }
        }
    }

    #[test]
    fn d_eigen_relation_holds() {
        let s = Session::new(2, DValue::rational(1, 2));
        for m in partitions_up_to(4, 2) {
            let jack = s.jack(&m).unwrap();
            let lhs = apply_d_operator(&jack.poly, s.d()).unwrap();
            assert_eq!(lhs, jack.poly.scale(&d_eigenvalue(&m, s.d())));
        }
    }

    #[test]
    fn a_coefficient_examples() {
        let d = DValue::Symbolic;
        // r=1: empty product
        let one = [d.scalar_int(4)];
        assert_eq!(a_single(Sign::Plus, &one, 0, &d).unwrap(), d.one());

        // A_{-,i}(x) = 0 when x - eps_i leaves the partition cone
        let x = [d.scalar_int(2), d.scalar_int(2)];
        assert!(a_single(Sign::Minus, &x, 1, &d).unwrap() != d.zero());
        assert!(a_single(Sign::Minus, &x, 0, &d).unwrap().is_zero());

        // r=2, x=(1,0): A_{+,1} = (1+d)/(1+d/2) = (2+2d)/(2+d)
        let x = [d.scalar_int(1), d.scalar_int(0)];
        let got = a_single(Sign::Plus, &x, 0, &d).unwrap();
        let num = &d.scalar_int(2) + &(&d.scalar_int(2) * &d.d_elem());
        let den = &d.scalar_int(2) + &d.d_elem();
        assert_eq!(got, num.checked_div(&den).unwrap());
    }

    #[test]
    fn a_minus_vanishes_off_cone() {
        let d = DValue::Symbolic;
        for r in 1..=3usize {
            for x in partitions_up_to(3, r) {
                let xv = s_vec(&x, &d);
                for i in 0..r {
                    let (shift, in_cone) = crate::combinatorics::shift_by_subset(
                        &x.to_int_vector(),
                        &Subset::new(vec![i], r),
                        -1,
                    );
                    let _ = shift;
                    let a = a_single(Sign::Minus, &xv, i, &d).unwrap();
                    // off-cone terms are killed by the product s_i A_{-,i}:
                    // an internal violation zeroes A, the bottom row zeroes s
                    let s = &xv[i]
                        + &(&d.half_d() * &d.scalar_int((r - 1 - i) as i64));
                    if !in_cone {
                        assert!((&a * &s).is_zero(), "x={} i={}", x, i);
                    }
                }
            }
        }
    }

    fn s_vec(x: &Partition, d: &DValue) -> Vec<FieldElement> {
        x.parts().iter().map(|&v| d.scalar_int(v as i64)).collect()
    }

    #[test]
    fn eigenvalue_collision_is_detected() {
        // d = -1 collides (2,0) with (1,1) at r=2:
        // eig(2,0) = 2(1+d), eig(1,1) = d -> equal iff d = -2... pick a real
        // collision instead: solve 2(1+d) = d => d = -2.
        let s = Session::new(2, DValue::rational(-2, 1));
        let err = s.jack(&p(&[2, 0])).unwrap_err();
        assert!(matches!(err, JackError::EigenvalueCollision { .. }));
    }

    #[test]
    fn caching_returns_same_value() {
        let s = Session::new(2, DValue::rational(3, 1));
        let a = s.jack(&p(&[2, 1])).unwrap();
        let b = s.jack(&p(&[2, 1])).unwrap();
        assert!(Arc::ptr_eq(&a, &b));
    }

    #[test]
    fn to_jack_basis_round_trip() {
        let s = Session::new(2, DValue::rational(3, 1));
        // f = 2 P_(2,0) - (1/3) P_(1,0) + P_(0,0)
        let d = s.d();
        let f = s.jack(&p(&[2, 0])).unwrap().poly.scale(&d.scalar_int(2))
            .add(&s.jack(&p(&[1, 0])).unwrap().poly.scale(&d.scalar(rat(-1, 3))))
            .add(&s.jack(&p(&[0, 0])).unwrap().poly);
        let dec = s.to_jack_basis(&f).unwrap();
        assert_eq!(dec[&p(&[2, 0])], d.scalar_int(2));
        assert_eq!(dec[&p(&[1, 0])], d.scalar(rat(-1, 3)));
        assert_eq!(dec[&p(&[0, 0])], d.one());
        assert_eq!(dec.len(), 3);
    }
}
