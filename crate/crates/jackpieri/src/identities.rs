//! Verification suites: one named check per theorem, corollary, and displayed
//! identity, each returning a structured pass/fail report with the exact
//! residual on failure. All comparisons are exact structural equality of
//! canonical forms; there is no tolerance anywhere.

use crate::combinatorics::{
    partitions_up_to, shift_by_subset, IntVector, Partition, Subset,
};
use crate::field::{DValue, FieldElement, Rat};
use crate::jack::{a_pair, a_single, a_subset, JackError, Session, Sign};
use crate::operators::{
    apply_ad_twist, apply_d_operator, apply_sekiguchi_gen, apply_total_derivative,
    d_eigenvalue, eigen_poly_full, eigen_poly_i, elementary_of_values, multiply_by_sum,
    ScalarUPoly, UPoly,
};
use crate::polyring::{elementary, MultiPoly};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::time::Instant;

/// Formal u (full coefficient comparison) or a fixed rational value of u.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum UMode {
    Formal,
    Value(Rat),
}

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub r: usize,
    pub max_weight: u32,
    pub d_values: Vec<DValue>,
    pub u_mode: UMode,
    pub seed: u64,
    pub random_points: usize,
}

impl SuiteConfig {
    pub fn new(r: usize, max_weight: u32, d_values: Vec<DValue>) -> Self {
        SuiteConfig {
            r,
            max_weight,
            d_values,
            u_mode: UMode::Formal,
            seed: 0,
            random_points: 20,
        }
    }
}

#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub suite: String,
    /// Names of the identities this suite covers.
    pub covers: Vec<String>,
    pub cases: usize,
    pub passed: usize,
    pub first_failure: Option<String>,
    pub millis: u128,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.passed == self.cases && self.first_failure.is_none()
    }
}

struct Rec {
    cases: usize,
    passed: usize,
    first_failure: Option<String>,
}

impl Rec {
    fn new() -> Self {
        Rec {
            cases: 0,
            passed: 0,
            first_failure: None,
        }
    }

    fn case<F: FnOnce() -> String>(&mut self, ok: bool, label: F) {
        self.cases += 1;
        if ok {
            self.passed += 1;
        } else if self.first_failure.is_none() {
            self.first_failure = Some(label());
        }
    }

    fn finish(self, suite: &str, covers: &[&str], start: Instant) -> VerificationReport {
        VerificationReport {
            suite: suite.to_string(),
            covers: covers.iter().map(|s| s.to_string()).collect(),
            cases: self.cases,
            passed: self.passed,
            first_failure: self.first_failure,
            millis: start.elapsed().as_millis(),
        }
    }
}

fn upoly_residual(lhs: &UPoly, rhs: &UPoly, u_mode: &UMode, d: &DValue) -> Option<String> {
    match u_mode {
        UMode::Formal => {
            let diff = lhs.sub(rhs);
            if diff.is_zero() {
                None
            } else {
                let parts: Vec<String> = (0..=diff.u_degree())
                    .rev()
                    .filter(|&k| !diff.coeff(k).is_zero())
                    .map(|k| format!("u^{}: {}", k, diff.coeff(k)))
                    .collect();
                Some(parts.join("; "))
            }
        }
        UMode::Value(u0) => {
            let u = d.scalar(u0.clone());
            let eval = |p: &UPoly| {
                let mut acc = MultiPoly::zero(p.coeff(0).rank());
                let mut pw = d.one();
                for k in 0..=p.u_degree() {
                    acc = acc.add(&p.coeff(k).scale(&pw));
                    pw = &pw * &u;
                }
                acc
            };
            let diff = eval(lhs).sub(&eval(rhs));
            if diff.is_zero() {
                None
            } else {
                Some(diff.to_string())
            }
        }
    }
}

fn scalar_upoly_residual(
    lhs: &ScalarUPoly,
    rhs: &ScalarUPoly,
    u_mode: &UMode,
    d: &DValue,
) -> Option<String> {
    match u_mode {
        UMode::Formal => {
            let diff = lhs.sub(rhs, d);
            if diff.is_zero() {
                None
            } else {
                let parts: Vec<String> = (0..=diff.u_degree())
                    .rev()
                    .filter(|&k| !diff.coeff(k, d).is_zero())
                    .map(|k| format!("u^{}: {}", k, diff.coeff(k, d)))
                    .collect();
                Some(parts.join("; "))
            }
        }
        UMode::Value(u0) => {
            let u = d.scalar(u0.clone());
            let diff = &lhs.eval(&u, d) - &rhs.eval(&u, d);
            if diff.is_zero() {
                None
            } else {
                Some(diff.to_string())
            }
        }
    }
}

fn d_label(d: &DValue) -> String {
    match d {
        DValue::Rational(q) => format!("d={}", q),
        DValue::Symbolic => "d=symbolic".to_string(),
    }
}

/// Seeded random integer vectors in [-20, 20]^r; the caller's closure returns
/// Err on a pole and the point is resampled.
fn random_points_guarded<T>(
    cfg: &SuiteConfig,
    salt: u64,
    mut eval: impl FnMut(&IntVector) -> Result<T, JackError>,
) -> Vec<(IntVector, T)> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ salt);
    let mut out = Vec::with_capacity(cfg.random_points);
    let mut attempts = 0;
    while out.len() < cfg.random_points && attempts < cfg.random_points * 100 + 100 {
        attempts += 1;
        let x = IntVector((0..cfg.r).map(|_| rng.gen_range(-20..=20)).collect());
        match eval(&x) {
            Ok(v) => out.push((x, v)),
            Err(JackError::PoleInA { .. }) => continue,
            Err(e) => panic!("unexpected error at random point: {}", e),
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Suites
// ---------------------------------------------------------------------------

/// S_r(u;z) P_m = P_m I_r(u;m) coefficientwise in u, plus the second-order
/// eigenvalue relation for D(z).
pub fn verify_sekiguchi_eigen(cfg: &SuiteConfig) -> VerificationReport {
    let start = Instant::now();
    let mut rec = Rec::new();
    for d in &cfg.d_values {
        let session = Session::new(cfg.r, d.clone());
        for m in partitions_up_to(cfg.max_weight, cfg.r) {
            let jack = match session.jack(&m) {
                Ok(j) => j,
                Err(e) => {
                    rec.case(false, || format!("{} m={}: {}", d_label(d), m, e));
                    continue;
                }
            };
            let lhs = apply_sekiguchi_gen(&jack.poly, d).expect("sekiguchi application");
            let rhs = eigen_poly_full(&session.fe_vec(&m.to_int_vector()), d)
                .times_poly(&jack.poly);
            let res = upoly_residual(&lhs, &rhs, &cfg.u_mode, d);
            rec.case(res.is_none(), || {
                format!("{} m={}: residual {}", d_label(d), m, res.unwrap())
            });

            let dl = apply_d_operator(&jack.poly, d).expect("D application");
            let diff = dl.sub(&jack.poly.scale(&d_eigenvalue(&m, d)));
            rec.case(diff.is_zero(), || {
                format!("{} m={} (D eigen): residual {}", d_label(d), m, diff)
            });
        }
    }
    rec.finish(
        "sekiguchi-eigen",
        &["sekiguchi-eigenvalue-relation", "d-operator-eigenvalue"],
        start,
    )
}

/// The five classical Pieri families: derivative and multiplication formulas
/// for both normalizations, and the elementary-symmetric Pieri for Phi.
pub fn verify_classical_pieri(cfg: &SuiteConfig) -> VerificationReport {
    let start = Instant::now();
    let mut rec = Rec::new();
    for d in &cfg.d_values {
        let s = Session::new(cfg.r, d.clone());
        for x in partitions_up_to(cfg.max_weight, cfg.r) {
            if let Err(e) = classical_pieri_cases(&s, &x, &mut rec) {
                rec.case(false, || format!("{} x={}: {}", d_label(d), x, e));
            }
        }
    }
    rec.finish(
        "classical-pieri",
        &[
            "phi-derivative-pieri",
            "psi-derivative-pieri",
            "phi-multiplication-pieri",
            "psi-multiplication-pieri",
            "elementary-pieri",
        ],
        start,
    )
}

fn classical_pieri_cases(s: &Session, x: &Partition, rec: &mut Rec) -> Result<(), JackError> {
    let d = s.d().clone();
    let r = s.rank();
    let xv = x.to_int_vector();
    let xf = s.fe_vec(&xv);
    let phi_x = s.phi(x)?.poly;
    let psi_x = s.psi(x)?.poly;
    let dl = d_label(&d);

    // |d_z| Phi_x = sum_i Phi_{x-eps_i} s_i(x) A_{-,i}(x)
    let lhs = apply_total_derivative(&phi_x);
    let mut rhs = MultiPoly::zero(r);
    for i in 0..r {
        let coeff = &s.s_factor(&xv, i) * &a_single(Sign::Minus, &xf, i, &d)?;
        let (down, in_cone) = shift_by_subset(&xv, &Subset::new(vec![i], r), -1);
        if in_cone {
            rhs = rhs.add(&s.phi(&down.as_partition().unwrap())?.poly.scale(&coeff));
        } else {
            rec.case(coeff.is_zero(), || {
                format!("{} x={} i={}: off-cone coefficient {} != 0", dl, x, i, coeff)
            });
        }
    }
    let diff = lhs.sub(&rhs);
    rec.case(diff.is_zero(), || {
        format!("{} x={} (phi -): residual {}", dl, x, diff)
    });

    // |d_z| Psi_x = sum over x-eps_i in P of Psi_{x-eps_i} A_{+,i}(x-eps_i)
    let lhs = apply_total_derivative(&psi_x);
    let mut rhs = MultiPoly::zero(r);
    for i in 0..r {
        let (down, in_cone) = shift_by_subset(&xv, &Subset::new(vec![i], r), -1);
        if !in_cone {
            continue;
        }
        let down_p = down.as_partition().unwrap();
        let coeff = a_single(Sign::Plus, &s.fe_vec(&down), i, &d)?;
        rhs = rhs.add(&s.psi(&down_p)?.poly.scale(&coeff));
    }
    let diff = lhs.sub(&rhs);
    rec.case(diff.is_zero(), || {
        format!("{} x={} (psi -): residual {}", dl, x, diff)
    });

    // |z| Phi_x = sum_i Phi_{x+eps_i} A_{+,i}(x)
    let lhs = multiply_by_sum(&phi_x, &d);
    let mut rhs = MultiPoly::zero(r);
    for i in 0..r {
        let coeff = a_single(Sign::Plus, &xf, i, &d)?;
        let (up, in_cone) = shift_by_subset(&xv, &Subset::new(vec![i], r), 1);
        if in_cone {
            rhs = rhs.add(&s.phi(&up.as_partition().unwrap())?.poly.scale(&coeff));
        } else {
            rec.case(coeff.is_zero(), || {
                format!("{} x={} i={}: off-cone coefficient {} != 0", dl, x, i, coeff)
            });
        }
    }
    let diff = lhs.sub(&rhs);
    rec.case(diff.is_zero(), || {
        format!("{} x={} (phi +): residual {}", dl, x, diff)
    });

    // |z| Psi_x = sum over x+eps_i in P of Psi_{x+eps_i} (x_i+1+(d/2)(r-i))
    //             A_{-,i}(x+eps_i)
    let lhs = multiply_by_sum(&psi_x, &d);
    let mut rhs = MultiPoly::zero(r);
    for i in 0..r {
        let (up, in_cone) = shift_by_subset(&xv, &Subset::new(vec![i], r), 1);
        if !in_cone {
            continue;
        }
        let up_p = up.as_partition().unwrap();
        let coeff = &s.s_factor(&up, i) * &a_single(Sign::Minus, &s.fe_vec(&up), i, &d)?;
        rhs = rhs.add(&s.psi(&up_p)?.poly.scale(&coeff));
    }
    let diff = lhs.sub(&rhs);
    rec.case(diff.is_zero(), || {
        format!("{} x={} (psi +): residual {}", dl, x, diff)
    });

    // e_{r,l}(z) Phi_k = sum over |J|=l, k+eps_J in P of Phi_{k+eps_J} A_{+,J}(k)
    for l in 0..=r {
        let lhs = elementary(r, l, &d).mul(&phi_x);
        let mut rhs = MultiPoly::zero(r);
        for j in Subset::of_size(r, l) {
            let (up, in_cone) = shift_by_subset(&xv, &j, 1);
            if !in_cone {
                continue;
            }
            let coeff = a_subset(Sign::Plus, &xf, &j, &d)?;
            rhs = rhs.add(&s.phi(&up.as_partition().unwrap())?.poly.scale(&coeff));
        }
        let diff = lhs.sub(&rhs);
        rec.case(diff.is_zero(), || {
            format!("{} k={} l={} (elementary): residual {}", dl, x, l, diff)
        });
    }
    Ok(())
}

/// Twisted Pieri formulas: the l-fold ad-commutator of the total derivative
/// against S_r(u;z), on both normalizations, plus the per-u-coefficient
/// corollaries with the ordinary Sekiguchi operator H_{r,l}.
pub fn verify_twisted_pieri(cfg: &SuiteConfig) -> VerificationReport {
    let start = Instant::now();
    let mut rec = Rec::new();
    for d in &cfg.d_values {
        let s = Session::new(cfg.r, d.clone());
        for x in partitions_up_to(cfg.max_weight, cfg.r) {
            for l in 0..=cfg.r {
                if let Err(e) = twisted_pieri_case(&s, &x, l, cfg, &mut rec) {
                    rec.case(false, || format!("{} x={} l={}: {}", d_label(d), x, l, e));
                }
            }
        }
    }
    rec.finish(
        "twisted-pieri",
        &[
            "twisted-pieri-phi",
            "twisted-pieri-psi",
            "twisted-pieri-phi-coefficient",
            "twisted-pieri-psi-coefficient",
        ],
        start,
    )
}

fn twisted_pieri_case(
    s: &Session,
    x: &Partition,
    l: usize,
    cfg: &SuiteConfig,
    rec: &mut Rec,
) -> Result<(), JackError> {
    let d = s.d().clone();
    let r = s.rank();
    let xv = x.to_int_vector();
    let xf = s.fe_vec(&xv);
    let dl = d_label(&d);

    // scale (d/2)^l used by the coefficient corollaries
    let mut half_d_l = d.one();
    for _ in 0..l {
        half_d_l = &half_d_l * &d.half_d();
    }

    // Phi form
    let phi_x = s.phi(x)?.poly;
    let lhs = apply_ad_twist(l, &phi_x, &d)?;
    let mut rhs = UPoly::zero(r, r);
    let mut rhs_cor = MultiPoly::zero(r);
    for j in Subset::of_size(r, l) {
        let a = a_subset(Sign::Minus, &xf, &j, &d)?;
        let mut coeff = a;
        for &j0 in j.indices() {
            coeff = &coeff * &s.s_factor(&xv, j0);
        }
        let (down, in_cone) = shift_by_subset(&xv, &j, -1);
        if !in_cone {
            rec.case(coeff.is_zero(), || {
                format!(
                    "{} x={} J={:?}: off-cone coefficient {} != 0",
                    dl,
                    x,
                    j.indices(),
                    coeff
                )
            });
            continue;
        }
        let phi_down = s.phi(&down.as_partition().unwrap())?.poly;
        let term = eigen_poly_i(&xf, &j.complement(), &d)
            .scale(&coeff)
            .times_poly(&phi_down);
        rhs = rhs.add(&term);
        rhs_cor = rhs_cor.add(&phi_down.scale(&coeff));
    }
    let res = upoly_residual(&lhs, &rhs, &cfg.u_mode, &d);
    rec.case(res.is_none(), || {
        format!("{} x={} l={} (phi): residual {}", dl, x, l, res.unwrap())
    });
    // coefficient corollary: (d/2)^l [(ad)^l/l! H_{r,l}] Phi_x
    let lhs_cor = lhs.coeff(r - l).scale(&half_d_l);
    let diff = lhs_cor.sub(&rhs_cor);
    rec.case(diff.is_zero(), || {
        format!("{} x={} l={} (phi coeff): residual {}", dl, x, l, diff)
    });

    // Psi form: restricted sum over x - eps_J in the cone
    let psi_x = s.psi(x)?.poly;
    let lhs = apply_ad_twist(l, &psi_x, &d)?;
    let mut rhs = UPoly::zero(r, r);
    let mut rhs_cor = MultiPoly::zero(r);
    for j in Subset::of_size(r, l) {
        let (down, in_cone) = shift_by_subset(&xv, &j, -1);
        if !in_cone {
            continue;
        }
        let coeff = a_subset(Sign::Plus, &s.fe_vec(&down), &j, &d)?;
        let psi_down = s.psi(&down.as_partition().unwrap())?.poly;
        let term = eigen_poly_i(&xf, &j.complement(), &d)
            .scale(&coeff)
            .times_poly(&psi_down);
        rhs = rhs.add(&term);
        rhs_cor = rhs_cor.add(&psi_down.scale(&coeff));
    }
    let res = upoly_residual(&lhs, &rhs, &cfg.u_mode, &d);
    rec.case(res.is_none(), || {
        format!("{} x={} l={} (psi): residual {}", dl, x, l, res.unwrap())
    });
    let lhs_cor = lhs.coeff(r - l).scale(&half_d_l);
    let diff = lhs_cor.sub(&rhs_cor);
    rec.case(diff.is_zero(), || {
        format!("{} x={} l={} (psi coeff): residual {}", dl, x, l, diff)
    });
    Ok(())
}

/// The summation lemma behind the induction step: the two A-product sums over
/// i in I differ by exactly |I|.
pub fn verify_mysterious_sum(cfg: &SuiteConfig) -> VerificationReport {
    let start = Instant::now();
    let mut rec = Rec::new();
    for d in &cfg.d_values {
        let s = Session::new(cfg.r, d.clone());
        let mut grid: Vec<IntVector> = partitions_up_to(cfg.max_weight, cfg.r)
            .into_iter()
            .map(|p| p.to_int_vector())
            .collect();
        let extra = random_points_guarded(cfg, 0x6d79_7374, |x| {
            mysterious_sum_residual(&s, x)
        });
        // grid partitions evaluated directly (no poles at positive rational d)
        let mut results: Vec<(IntVector, FieldElement, usize)> = vec![];
        for x in grid.drain(..) {
            for i_set in Subset::all(cfg.r) {
                match mysterious_residual_for(&s, &x, &i_set) {
                    Ok(v) => results.push((x.clone(), v, i_set.len())),
                    Err(JackError::PoleInA { .. }) => continue,
                    Err(e) => panic!("unexpected error: {}", e),
                }
            }
        }
        for (x, v) in extra {
            // v already aggregates all subsets for the random point
            rec.case(v, || format!("{} x={:?}: random-point mismatch", d_label(d), x.0));
        }
        for (x, v, isz) in results {
            rec.case(v.is_zero(), || {
                format!("{} x={:?} |I|={}: residual {}", d_label(d), x.0, isz, v)
            });
        }
    }
    rec.finish("mysterious-sum", &["mysterious-summation"], start)
}

/// LHS - RHS of the summation lemma for one (x, I); zero on success.
fn mysterious_residual_for(
    s: &Session,
    x: &IntVector,
    i_set: &Subset,
) -> Result<FieldElement, JackError> {
    let d = s.d().clone();
    let r = s.rank();
    let xf = s.fe_vec(x);
    let mut acc = d.zero();
    for &i in i_set.indices() {
        let (up, _) = shift_by_subset(x, &Subset::new(vec![i], r), 1);
        let (down, _) = shift_by_subset(x, &Subset::new(vec![i], r), -1);
        let up_f = s.fe_vec(&up);
        let down_f = s.fe_vec(&down);
        let t1 = &(&s.s_factor(x, i) + &d.one())
            * &(&a_pair(Sign::Minus, &up_f, i, i_set, &d)?
                * &a_pair(Sign::Plus, &xf, i, i_set, &d)?);
        let t2 = &s.s_factor(x, i)
            * &(&a_pair(Sign::Plus, &down_f, i, i_set, &d)?
                * &a_pair(Sign::Minus, &xf, i, i_set, &d)?);
        acc = &(&acc + &t1) - &t2;
    }
    Ok(&acc - &d.scalar_int(i_set.len() as i64))
}

fn mysterious_sum_residual(s: &Session, x: &IntVector) -> Result<bool, JackError> {
    for i_set in Subset::all(s.rank()) {
        if !mysterious_residual_for(s, x, &i_set)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Knop-Sahi difference equation for interpolation Jack polynomials, plus the
/// per-u-coefficient difference formulas.
pub fn verify_difference_equation(cfg: &SuiteConfig) -> VerificationReport {
    let start = Instant::now();
    let mut rec = Rec::new();
    for d in &cfg.d_values {
        let s = Session::new(cfg.r, d.clone());
        for k in partitions_up_to(cfg.max_weight, cfg.r) {
            let mut points: Vec<IntVector> = partitions_up_to(cfg.max_weight, cfg.r)
                .into_iter()
                .map(|p| p.to_int_vector())
                .collect();
            let extra = random_points_guarded(cfg, 0x6469_6666 ^ k.weight() as u64, |x| {
                difference_equation_residuals(&s, &k, x, cfg)
            });
            for x in points.drain(..) {
                match difference_equation_residuals(&s, &k, &x, cfg) {
                    Ok(residuals) => {
                        for (what, res) in residuals {
                            rec.case(res.is_none(), || {
                                format!(
                                    "{} k={} x={:?} ({}): residual {}",
                                    d_label(d),
                                    k,
                                    x.0,
                                    what,
                                    res.unwrap()
                                )
                            });
                        }
                    }
                    Err(e) => rec.case(false, || {
                        format!("{} k={} x={:?}: {}", d_label(d), k, x.0, e)
                    }),
                }
            }
            for (x, residuals) in extra {
                for (what, res) in residuals {
                    rec.case(res.is_none(), || {
                        format!(
                            "{} k={} x={:?} ({}): residual {}",
                            d_label(d),
                            k,
                            x.0,
                            what,
                            res.unwrap()
                        )
                    });
                }
            }
        }
    }
    rec.finish(
        "difference-equation",
        &["difference-equation", "difference-equation-coefficient"],
        start,
    )
}

type NamedResiduals = Vec<(&'static str, Option<String>)>;

fn difference_equation_residuals(
    s: &Session,
    k: &Partition,
    x: &IntVector,
    cfg: &SuiteConfig,
) -> Result<NamedResiduals, JackError> {
    let d = s.d().clone();
    let r = s.rank();
    let lhs = s.apply_difference_operator(k, x)?;
    let own = s.eval_interp(k, &s.shifted_point(x))?;
    let rhs = eigen_poly_full(&s.fe_vec(&k.to_int_vector()), &d).scale(&own);
    let mut out: NamedResiduals =
        vec![("u-polynomial", scalar_upoly_residual(&lhs, &rhs, &cfg.u_mode, &d))];

    // per-u-coefficient corollary: for each l, compare against the explicit
    // elementary-symmetric form over subsets of size <= l
    let shifted_k = s.shifted_point(&k.to_int_vector());
    let shifted_x = s.shifted_point(x);
    let xf = s.fe_vec(x);
    for l in 0..=r {
        let lhs_l = &elementary_of_values(&shifted_k, l, &d) * &own;
        let mut rhs_l = d.zero();
        for j in Subset::all(r) {
            if j.len() > l {
                continue;
            }
            let sign = if j.len() % 2 == 0 { 1 } else { -1 };
            let mut coeff = &d.scalar_int(sign) * &a_subset(Sign::Minus, &xf, &j, &d)?;
            for &j0 in j.indices() {
                coeff = &coeff * &s.s_factor(x, j0);
            }
            if coeff.is_zero() {
                continue;
            }
            let (down, _) = shift_by_subset(x, &j, -1);
            let value = s.eval_interp(k, &s.shifted_point(&down))?;
            let restricted: Vec<FieldElement> = j
                .complement()
                .indices()
                .iter()
                .map(|&i| shifted_x[i].clone())
                .collect();
            let e_val = elementary_of_values(&restricted, l - j.len(), &d);
            rhs_l = &rhs_l + &(&(&coeff * &value) * &e_val);
        }
        let diff = &lhs_l - &rhs_l;
        if !diff.is_zero() {
            out.push(("u-coefficient", Some(format!("l={}: {}", l, diff))));
        } else {
            out.push(("u-coefficient", None));
        }
    }
    Ok(out)
}

/// Pieri formulas for interpolation Jack polynomials, plus their
/// per-u-coefficient elementary-symmetric versions.
pub fn verify_interp_pieri(cfg: &SuiteConfig) -> VerificationReport {
    let start = Instant::now();
    let mut rec = Rec::new();
    for d in &cfg.d_values {
        let s = Session::new(cfg.r, d.clone());
        for k in partitions_up_to(cfg.max_weight, cfg.r) {
            let mut points: Vec<IntVector> = partitions_up_to(cfg.max_weight, cfg.r)
                .into_iter()
                .map(|p| p.to_int_vector())
                .collect();
            let extra = random_points_guarded(cfg, 0x7069_6572 ^ k.weight() as u64, |x| {
                interp_pieri_residuals(&s, &k, x, cfg)
            });
            for x in points.drain(..) {
                match interp_pieri_residuals(&s, &k, &x, cfg) {
                    Ok(residuals) => {
                        for (what, res) in residuals {
                            rec.case(res.is_none(), || {
                                format!(
                                    "{} k={} x={:?} ({}): residual {}",
                                    d_label(d),
                                    k,
                                    x.0,
                                    what,
                                    res.unwrap()
                                )
                            });
                        }
                    }
                    Err(e) => rec.case(false, || {
                        format!("{} k={} x={:?}: {}", d_label(d), k, x.0, e)
                    }),
                }
            }
            for (x, residuals) in extra {
                for (what, res) in residuals {
                    rec.case(res.is_none(), || {
                        format!(
                            "{} k={} x={:?} ({}): residual {}",
                            d_label(d),
                            k,
                            x.0,
                            what,
                            res.unwrap()
                        )
                    });
                }
            }
        }
    }
    rec.finish(
        "interp-pieri",
        &["interp-pieri", "interp-pieri-coefficient"],
        start,
    )
}

fn interp_pieri_residuals(
    s: &Session,
    k: &Partition,
    x: &IntVector,
    cfg: &SuiteConfig,
) -> Result<NamedResiduals, JackError> {
    let d = s.d().clone();
    let r = s.rank();
    let kv = k.to_int_vector();
    let kf = s.fe_vec(&kv);
    let bc_k = s.binomial_coefficient(k, x)?;
    let lhs = eigen_poly_full(&s.fe_vec(x), &d).scale(&bc_k);

    let mut rhs = ScalarUPoly::constant(d.zero());
    // cache per-J pieces for the coefficient corollary
    let mut terms: Vec<(Subset, FieldElement)> = vec![];
    for j in Subset::all(r) {
        let (up, in_cone) = shift_by_subset(&kv, &j, 1);
        if !in_cone {
            continue;
        }
        let bc_up = s.binomial_coefficient(&up.as_partition().unwrap(), x)?;
        let a = a_subset(Sign::Plus, &kf, &j, &d)?;
        let coeff = &bc_up * &a;
        rhs = rhs.add(&eigen_poly_i(&kf, &j.complement(), &d).scale(&coeff), &d);
        terms.push((j, coeff));
    }
    let mut out: NamedResiduals =
        vec![("u-polynomial", scalar_upoly_residual(&lhs, &rhs, &cfg.u_mode, &d))];

    // per-u-coefficient: e_{r,l}(x + (d/2)delta) bc(k,x) against subsets of
    // size <= l with restricted elementary factors
    let shifted_x = s.shifted_point(x);
    let shifted_k = s.shifted_point(&kv);
    for l in 0..=r {
        let lhs_l = &elementary_of_values(&shifted_x, l, &d) * &bc_k;
        let mut rhs_l = d.zero();
        for (j, coeff) in &terms {
            if j.len() > l {
                continue;
            }
            let restricted: Vec<FieldElement> = j
                .complement()
                .indices()
                .iter()
                .map(|&i| shifted_k[i].clone())
                .collect();
            let e_val = elementary_of_values(&restricted, l - j.len(), &d);
            rhs_l = &rhs_l + &(coeff * &e_val);
        }
        let diff = &lhs_l - &rhs_l;
        if !diff.is_zero() {
            out.push(("u-coefficient", Some(format!("l={}: {}", l, diff))));
        } else {
            out.push(("u-coefficient", None));
        }
    }
    Ok(out)
}

/// Binomial formula: the Jack-basis decomposition of Phi_x(1+z) has exactly
/// the binomial coefficients against the Psi normalization.
pub fn verify_binomial(cfg: &SuiteConfig) -> VerificationReport {
    let start = Instant::now();
    let mut rec = Rec::new();
    for d in &cfg.d_values {
        let s = Session::new(cfg.r, d.clone());
        for x in partitions_up_to(cfg.max_weight, cfg.r) {
            match binomial_case(&s, &x) {
                Ok(None) => rec.case(true, String::new),
                Ok(Some(msg)) => rec.case(false, || format!("{} x={}: {}", d_label(d), x, msg)),
                Err(e) => rec.case(false, || format!("{} x={}: {}", d_label(d), x, e)),
            }
        }
    }
    rec.finish("binomial", &["binomial-formula"], start)
}

fn binomial_case(s: &Session, x: &Partition) -> Result<Option<String>, JackError> {
    let d = s.d().clone();
    let r = s.rank();
    let phi_x = s.phi(x)?.poly;
    let ones = vec![d.one(); r];
    let shifted = phi_x.substitute_shift(&ones, &d);
    let decomposition = s.to_jack_basis(&shifted)?;
    // every candidate k of weight <= |x|
    for k in partitions_up_to(x.weight(), r) {
        let jack_coeff = decomposition.get(&k).cloned().unwrap_or_else(|| d.zero());
        // coefficient of Psi_k = jack coefficient times the Psi normalizer
        let psi_coeff = &jack_coeff * &s.psi_normalizer(&k)?;
        let expect = if x.contains(&k) {
            s.binomial_coefficient(&k, &x.to_int_vector())?
        } else {
            d.zero()
        };
        let diff = &psi_coeff - &expect;
        if !diff.is_zero() {
            return Ok(Some(format!("k={}: residual {}", k, diff)));
        }
    }
    Ok(None)
}

/// The commutator identity [|d_z|, |z|] = r used in the summation lemma proof.
pub fn verify_commutator(cfg: &SuiteConfig) -> VerificationReport {
    let start = Instant::now();
    let mut rec = Rec::new();
    for d in &cfg.d_values {
        let s = Session::new(cfg.r, d.clone());
        for m in partitions_up_to(cfg.max_weight, cfg.r) {
            let f = match s.jack(&m) {
                Ok(j) => j.poly.clone(),
                Err(e) => {
                    rec.case(false, || format!("{} m={}: {}", d_label(d), m, e));
                    continue;
                }
            };
            let lhs = apply_total_derivative(&multiply_by_sum(&f, d))
                .sub(&multiply_by_sum(&apply_total_derivative(&f), d));
            let diff = lhs.sub(&f.scale(&d.scalar_int(cfg.r as i64)));
            rec.case(diff.is_zero(), || {
                format!("{} m={}: residual {}", d_label(d), m, diff)
            });
        }
    }
    rec.finish(
        "commutator",
        &["derivative-multiplication-commutator"],
        start,
    )
}
