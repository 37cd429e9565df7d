//! The differential-operator calculus as concrete linear maps on `MultiPoly`:
//! the total derivative, the operator D(z), Sekiguchi operators H_{r,p}, their
//! generating function S_r(u;z) in a formal variable u, and the ad-twisted
//! operators (ad |d_z|)^l S / l!.

use crate::combinatorics::Subset;
use crate::field::{DValue, FieldElement, Rat};
use crate::polyring::{vandermonde, MultiPoly, PolyError};
use num_bigint::BigInt;

/// Polynomial in the formal variable u with `MultiPoly` coefficients,
/// `coeffs[k]` being the coefficient of u^k.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UPoly {
    rank: usize,
    coeffs: Vec<MultiPoly>,
}

impl UPoly {
    pub fn zero(rank: usize, u_degree: usize) -> Self {
        UPoly {
            rank,
            coeffs: vec![MultiPoly::zero(rank); u_degree + 1],
        }
    }

    pub fn from_coeffs(rank: usize, coeffs: Vec<MultiPoly>) -> Self {
        UPoly { rank, coeffs }
    }

    pub fn u_degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Coefficient of u^k (zero beyond the stored degree).
    pub fn coeff(&self, k: usize) -> MultiPoly {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(|| MultiPoly::zero(self.rank))
    }

    pub fn add(&self, other: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k).add(&other.coeff(k))).collect();
        UPoly {
            rank: self.rank,
            coeffs,
        }
    }

    pub fn sub(&self, other: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k).sub(&other.coeff(k))).collect();
        UPoly {
            rank: self.rank,
            coeffs,
        }
    }

    pub fn scale(&self, c: &FieldElement) -> UPoly {
        UPoly {
            rank: self.rank,
            coeffs: self.coeffs.iter().map(|p| p.scale(c)).collect(),
        }
    }

    pub fn map<F: Fn(&MultiPoly) -> MultiPoly>(&self, f: F) -> UPoly {
        UPoly {
            rank: self.rank,
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|p| p.is_zero())
    }

    /// Equality as u-polynomials, ignoring trailing zero coefficients.
    pub fn eq_poly(&self, other: &UPoly) -> bool {
        self.sub(other).is_zero()
    }
}

/// Polynomial in u with scalar coefficients (eigenvalue polynomials I).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScalarUPoly {
    coeffs: Vec<FieldElement>,
}

impl ScalarUPoly {
    pub fn constant(c: FieldElement) -> Self {
        ScalarUPoly { coeffs: vec![c] }
    }

    pub fn from_coeffs(coeffs: Vec<FieldElement>) -> Self {
        ScalarUPoly { coeffs }
    }

    pub fn u_degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeff(&self, k: usize, d: &DValue) -> FieldElement {
        self.coeffs.get(k).cloned().unwrap_or_else(|| d.zero())
    }

    pub fn add(&self, other: &ScalarUPoly, d: &DValue) -> ScalarUPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        ScalarUPoly {
            coeffs: (0..n)
                .map(|k| &self.coeff(k, d) + &other.coeff(k, d))
                .collect(),
        }
    }

    pub fn sub(&self, other: &ScalarUPoly, d: &DValue) -> ScalarUPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        ScalarUPoly {
            coeffs: (0..n)
                .map(|k| &self.coeff(k, d) - &other.coeff(k, d))
                .collect(),
        }
    }

    pub fn mul(&self, other: &ScalarUPoly, d: &DValue) -> ScalarUPoly {
        let mut out = vec![d.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        ScalarUPoly { coeffs: out }
    }

    pub fn scale(&self, c: &FieldElement) -> ScalarUPoly {
        ScalarUPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn eq_poly(&self, other: &ScalarUPoly, d: &DValue) -> bool {
        self.sub(other, d).is_zero()
    }

    /// Multiply a plain polynomial through, yielding a MultiPoly-valued UPoly.
    pub fn times_poly(&self, p: &MultiPoly) -> UPoly {
        UPoly {
            rank: p.rank(),
            coeffs: self.coeffs.iter().map(|c| p.scale(c)).collect(),
        }
    }

    /// Evaluate at a scalar value of u.
    pub fn eval(&self, u: &FieldElement, d: &DValue) -> FieldElement {
        let mut acc = d.zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * u) + c;
        }
        acc
    }
}

/// |d_z| f = sum_j d_j f.
pub fn apply_total_derivative(f: &MultiPoly) -> MultiPoly {
    let mut out = MultiPoly::zero(f.rank());
    for j in 0..f.rank() {
        out = out.add(&f.partial_derivative(j));
    }
    out
}

/// The Euler operator z_i d_i applied to f (0-based i).
pub fn apply_euler(i: usize, f: &MultiPoly, d: &DValue) -> MultiPoly {
    f.partial_derivative(i)
        .mul(&MultiPoly::var(f.rank(), i, d))
}

/// |z| f: multiplication by z_1 + .. + z_r.
pub fn multiply_by_sum(f: &MultiPoly, d: &DValue) -> MultiPoly {
    let mut s = MultiPoly::zero(f.rank());
    for i in 0..f.rank() {
        s = s.add(&MultiPoly::var(f.rank(), i, d));
    }
    s.mul(f)
}

/// D(z) f for symmetric f. The rational coefficients z_j^2/(z_j - z_l) are
/// never materialized: each unordered pair contributes
/// (z_j^2 d_j f - z_l^2 d_l f) / (z_j - z_l), which is exact for symmetric f.
pub fn apply_d_operator(f: &MultiPoly, d: &DValue) -> Result<MultiPoly, PolyError> {
    let r = f.rank();
    if !f.is_symmetric(d) {
        return Err(PolyError::NotSymmetric);
    }
    let mut out = MultiPoly::zero(r);
    for j in 0..r {
        let zj2 = MultiPoly::var(r, j, d).mul(&MultiPoly::var(r, j, d));
        out = out.add(&zj2.mul(&f.partial_derivative(j).partial_derivative(j)));
    }
    let d_elem = d.d_elem();
    for j in 0..r {
        for l in (j + 1)..r {
            let zj2 = MultiPoly::var(r, j, d).mul(&MultiPoly::var(r, j, d));
            let zl2 = MultiPoly::var(r, l, d).mul(&MultiPoly::var(r, l, d));
            let num = zj2
                .mul(&f.partial_derivative(j))
                .sub(&zl2.mul(&f.partial_derivative(l)));
            let den = MultiPoly::var(r, j, d).sub(&MultiPoly::var(r, l, d));
            let pair = num.divide_exact(&den)?;
            out = out.add(&pair.scale(&d_elem));
        }
    }
    Ok(out)
}

/// The D(z) eigenvalue sum_j m_j (m_j - 1 + d (r - j)) for a partition index
/// (1-based j in the formula).
pub fn d_eigenvalue(m: &crate::combinatorics::Partition, d: &DValue) -> FieldElement {
    let r = m.rank();
    let mut acc = d.zero();
    for (j0, &mj) in m.parts().iter().enumerate() {
        let mj_el = d.scalar_int(mj as i64);
        let inner = &(&mj_el - &d.one())
            + &(&d.d_elem() * &d.scalar_int((r - 1 - j0) as i64));
        acc = &acc + &(&mj_el * &inner);
    }
    acc
}

/// Sekiguchi operator H_{r,p} applied literally from its definition: inner
/// Euler-subset products conjugated by the Vandermonde, summed over disjoint
/// outer Euler subsets, with powers of 2/d.
pub fn apply_sekiguchi(p: usize, f: &MultiPoly, d: &DValue) -> Result<MultiPoly, PolyError> {
    let r = f.rank();
    assert!(p <= r);
    let delta = vandermonde(r, d);
    let two_over_d = d.two_over_d();
    let mut out = MultiPoly::zero(r);
    for l in 0..=p {
        let mut factor = d.one();
        for _ in 0..(p - l) {
            factor = &factor * &two_over_d;
        }
        // Each I of size l contributes the multiplication operator by the
        // rational function ((prod_{i in I} z_i d_i) Delta) / Delta; the sum
        // over all I of a fixed size applied to a symmetric polynomial is
        // antisymmetric before the division, so one exact division restores
        // a polynomial.
        let mut numerator = MultiPoly::zero(r);
        for i_set in Subset::of_size(r, l) {
            // inner sum over J subsets of the complement of I with |J| = p - l
            let comp: Vec<usize> = i_set.complement().indices().to_vec();
            let mut inner = MultiPoly::zero(r);
            for j_mask in 0u32..(1 << comp.len()) {
                let chosen: Vec<usize> = comp
                    .iter()
                    .enumerate()
                    .filter(|(b, _)| j_mask >> b & 1 == 1)
                    .map(|(_, &idx)| idx)
                    .collect();
                if chosen.len() != p - l {
                    continue;
                }
                let mut g = f.clone();
                for &j in &chosen {
                    g = apply_euler(j, &g, d);
                }
                inner = inner.add(&g);
            }
            if inner.is_zero() {
                continue;
            }
            let mut mult = delta.clone();
            for &i in i_set.indices() {
                mult = apply_euler(i, &mult, d);
            }
            numerator = numerator.add(&mult.mul(&inner));
        }
        if !numerator.is_zero() {
            let layer = numerator.divide_exact(&delta)?;
            out = out.add(&layer.scale(&factor));
        }
    }
    Ok(out)
}

/// S_r(u;z) f as a u-polynomial: the coefficient of u^{r-p} is H_{r,p} f.
pub fn apply_sekiguchi_gen(f: &MultiPoly, d: &DValue) -> Result<UPoly, PolyError> {
    let r = f.rank();
    let mut coeffs = vec![MultiPoly::zero(r); r + 1];
    for p in 0..=r {
        coeffs[r - p] = apply_sekiguchi(p, f, d)?;
    }
    Ok(UPoly::from_coeffs(r, coeffs))
}

fn factorial(n: usize) -> Rat {
    let mut acc = BigInt::from(1);
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    Rat::from(acc)
}

/// [(ad |d_z|)^l / l!] S_r(u;z) applied to f, via the finite binomial operator
/// expansion: sum_j (-1)^{l-j} / (j! (l-j)!) |d|^j ( S ( |d|^{l-j} f ) ).
pub fn apply_ad_twist(l: usize, f: &MultiPoly, d: &DValue) -> Result<UPoly, PolyError> {
    let r = f.rank();
    let mut out = UPoly::zero(r, r);
    for j in 0..=l {
        let mut g = f.clone();
        for _ in 0..(l - j) {
            g = apply_total_derivative(&g);
        }
        let mut s = apply_sekiguchi_gen(&g, d)?;
        for _ in 0..j {
            s = s.map(apply_total_derivative);
        }
        let sign = if (l - j) % 2 == 0 { 1 } else { -1 };
        let c = d.scalar(
            Rat::from(BigInt::from(sign)) / (factorial(j) * factorial(l - j)),
        );
        out = out.add(&s.scale(&c));
    }
    Ok(out)
}

/// The eigenvalue u-polynomial I_{J^c}(u;x) = (2/d)^r prod_{l in J^c}
/// (x_l + (d/2)(u + r - l)), with 1-based l; for J^c = [r] this is I_r(u;x).
pub fn eigen_poly_i(x: &[FieldElement], j_complement: &Subset, d: &DValue) -> ScalarUPoly {
    let r = x.len();
    let half_d = d.half_d();
    let mut acc = ScalarUPoly::constant(d.one());
    for &l0 in j_complement.indices() {
        // x_l + (d/2)(r - l) + (d/2) u   (l = l0 + 1)
        let const_term = &x[l0] + &(&half_d * &d.scalar_int((r - 1 - l0) as i64));
        acc = acc.mul(
            &ScalarUPoly::from_coeffs(vec![const_term, half_d.clone()]),
            d,
        );
    }
    let mut pref = d.one();
    let two_over_d = d.two_over_d();
    for _ in 0..r {
        pref = &pref * &two_over_d;
    }
    acc.scale(&pref)
}

/// I_r(u;x) for the full index set.
pub fn eigen_poly_full(x: &[FieldElement], d: &DValue) -> ScalarUPoly {
    eigen_poly_i(x, &Subset::full(x.len()), d)
}

/// Elementary symmetric polynomial of a list of scalar values.
pub fn elementary_of_values(vals: &[FieldElement], l: usize, d: &DValue) -> FieldElement {
    if l > vals.len() {
        return d.zero();
    }
    // expand prod (1 + t v) and read off the t^l coefficient
    let mut coeffs = vec![d.zero(); vals.len() + 1];
    coeffs[0] = d.one();
    for (n, v) in vals.iter().enumerate() {
        for k in (1..=n + 1).rev() {
            let add = &coeffs[k - 1] * v;
            coeffs[k] = &coeffs[k] + &add;
        }
    }
    coeffs[l].clone()
}
