//! Interpolation (shifted) Jack polynomials constructed from the vanishing
//! characterization, the binomial coefficients, and the Knop-Sahi difference
//! operator D_r^ip(u;x).

use crate::combinatorics::{partitions_up_to, shift_by_subset, IntVector, Partition, Subset};
use crate::field::FieldElement;
use crate::jack::{a_subset, JackError, Session, Sign};
use crate::operators::{eigen_poly_i, ScalarUPoly};
use crate::polyring::MultiPoly;
use std::collections::BTreeMap;
use std::sync::Arc;

/// A constructed interpolation Jack polynomial: coefficients on the Jack
/// basis with unit leading coefficient, plus the materialized polynomial.
#[derive(Debug, Clone)]
pub struct InterpJackPolynomial {
    pub index: Partition,
    /// Coefficients a_mu on the Jack basis {P_mu : |mu| <= |m|}, a_m = 1.
    pub jack_coeffs: BTreeMap<Partition, FieldElement>,
    pub poly: MultiPoly,
}

impl Session {
    /// P_m^ip = P_m + sum of lower-weight Jack terms, pinned by vanishing at
    /// nu + (d/2) delta for every partition nu of weight < |m|. The system is
    /// square by partition counting.
    pub fn interp_jack(&self, m: &Partition) -> Result<Arc<InterpJackPolynomial>, JackError> {
        assert_eq!(m.rank(), self.rank());
        if let Some(hit) = self.interp_cache.read().unwrap().get(m) {
            return Ok(hit.clone());
        }
        let built = Arc::new(self.build_interp(m)?);
        self.interp_cache
            .write()
            .unwrap()
            .entry(m.clone())
            .or_insert_with(|| built.clone());
        Ok(built)
    }

    fn build_interp(&self, m: &Partition) -> Result<InterpJackPolynomial, JackError> {
        let d = self.d().clone();
        let top = self.jack(m)?;
        let mut jack_coeffs = BTreeMap::new();
        jack_coeffs.insert(m.clone(), d.one());

        if m.weight() > 0 {
            let lower: Vec<Partition> = partitions_up_to(m.weight() - 1, self.rank());
            let n = lower.len();
            // row per vanishing point nu + (d/2) delta, column per unknown a_mu
            let mut matrix = vec![vec![d.zero(); n]; n];
            let mut rhs = vec![d.zero(); n];
            for (row, nu) in lower.iter().enumerate() {
                let point = self.shifted_point(&nu.to_int_vector());
                for (col, mu) in lower.iter().enumerate() {
                    matrix[row][col] = self.jack(mu)?.poly.evaluate(&point, &d);
                }
                rhs[row] = -top.poly.evaluate(&point, &d);
            }
            let solution = solve_dense(matrix, rhs, &d)
                .ok_or_else(|| JackError::SingularSystem(m.to_string()))?;
            for (mu, a) in lower.into_iter().zip(solution) {
                if !a.is_zero() {
                    jack_coeffs.insert(mu, a);
                }
            }
        }

        let mut poly = MultiPoly::zero(self.rank());
        for (mu, a) in &jack_coeffs {
            poly = poly.add(&self.jack(mu)?.poly.scale(a));
        }
        Ok(InterpJackPolynomial {
            index: m.clone(),
            jack_coeffs,
            poly,
        })
    }

    /// Exact evaluation of the materialized interpolation polynomial.
    pub fn eval_interp(
        &self,
        m: &Partition,
        point: &[FieldElement],
    ) -> Result<FieldElement, JackError> {
        Ok(self.interp_jack(m)?.poly.evaluate(point, self.d()))
    }

    /// Binomial coefficient P_k^ip(x + (d/2) delta) / P_k(1).
    pub fn binomial_coefficient(
        &self,
        k: &Partition,
        x: &IntVector,
    ) -> Result<FieldElement, JackError> {
        let point = self.shifted_point(x);
        let num = self.eval_interp(k, &point)?;
        let den = self.eval_at_ones(k)?;
        Ok(num.checked_div(&den)?)
    }

    /// D_r^ip(u;x) P_k^ip(x + (d/2) delta) as a u-polynomial, assembled
    /// term-by-term over subsets J with shifted evaluations at x - eps_J.
    pub fn apply_difference_operator(
        &self,
        k: &Partition,
        x: &IntVector,
    ) -> Result<ScalarUPoly, JackError> {
        let d = self.d().clone();
        let xv = self.fe_vec(x);
        let mut acc = ScalarUPoly::constant(d.zero());
        for j in Subset::all(self.rank()) {
            let sign = if j.len() % 2 == 0 { 1 } else { -1 };
            let i_part = eigen_poly_i(&xv, &j.complement(), &d);
            let a_part = a_subset(Sign::Minus, &xv, &j, &d)?;
            let mut coeff = &d.scalar_int(sign) * &a_part;
            for &j0 in j.indices() {
                coeff = &coeff * &self.s_factor(x, j0);
            }
            if coeff.is_zero() {
                continue;
            }
            let (shifted, _) = shift_by_subset(x, &j, -1);
            let value = self.eval_interp(k, &self.shifted_point(&shifted))?;
            acc = acc.add(&i_part.scale(&(&coeff * &value)), &d);
        }
        Ok(acc)
    }
}

/// Exact dense linear solve by fraction-free (Bareiss) elimination.
/// Returns None if the system is singular.
fn solve_dense(
    mut a: Vec<Vec<FieldElement>>,
    mut b: Vec<FieldElement>,
    d: &crate::field::DValue,
) -> Option<Vec<FieldElement>> {
    let n = a.len();
    if n == 0 {
        return Some(vec![]);
    }
    let mut prev = d.one();
    for k in 0..n {
        // pivot: first row with nonzero entry in column k
        let pivot = (k..n).find(|&i| !a[i][k].is_zero())?;
        if pivot != k {
            a.swap(k, pivot);
            b.swap(k, pivot);
        }
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                let num = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.checked_div(&prev).expect("Bareiss divisor nonzero");
            }
            let num = &(&a[k][k] * &b[i]) - &(&a[i][k] * &b[k]);
            b[i] = num.checked_div(&prev).expect("Bareiss divisor nonzero");
            a[i][k] = d.zero();
        }
        prev = a[k][k].clone();
    }
    // back substitution on the upper-triangular system
    let mut x = vec![d.zero(); n];
    for k in (0..n).rev() {
        let mut acc = b[k].clone();
        for j in (k + 1)..n {
            acc = &acc - &(&a[k][j] * &x[j]);
        }
        x[k] = acc.checked_div(&a[k][k]).ok()?;
    }
    Some(x)
}
