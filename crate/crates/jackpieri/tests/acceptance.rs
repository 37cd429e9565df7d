//! Acceptance gate: one test per criterion, each printing a single pass/fail
//! line. Run with `cargo test --test acceptance -- --nocapture` to see the
//! lines; every comparison is exact.

use jackpieri::combinatorics::partitions_up_to;
use jackpieri::field::{DValue, Rat};
use jackpieri::identities::{
    verify_binomial, verify_classical_pieri, verify_commutator, verify_difference_equation,
    verify_interp_pieri, verify_mysterious_sum, verify_sekiguchi_eigen, verify_twisted_pieri,
    SuiteConfig, VerificationReport,
};
use jackpieri::kernel::{verify_kernel_intertwining, verify_kernel_symmetry, TruncatedKernel};
use jackpieri::polyring::schur_bialternant;
use jackpieri::{Partition, Session};
use std::process::Command;
use std::time::Instant;

fn gate(criterion: &str, ok: bool, detail: &str) {
    println!(
        "ACCEPTANCE {}: {}{}",
        criterion,
        if ok { "PASS" } else { "FAIL" },
        if detail.is_empty() {
            String::new()
        } else {
            format!(" ({})", detail)
        }
    );
    assert!(ok, "criterion {} failed: {}", criterion, detail);
}

fn gate_report(criterion: &str, reports: &[VerificationReport], elapsed_ok: bool) {
    let ok = reports.iter().all(|r| r.all_passed()) && elapsed_ok;
    let cases: usize = reports.iter().map(|r| r.cases).sum();
    let detail = reports
        .iter()
        .find_map(|r| r.first_failure.clone())
        .unwrap_or_else(|| format!("{} cases", cases));
    gate(criterion, ok, &detail);
}

fn rational_ds(list: &[(i64, i64)]) -> Vec<DValue> {
    list.iter().map(|&(p, q)| DValue::rational(p, q)).collect()
}

#[test]
fn criterion_01_schur_oracle() {
    let start = Instant::now();
    let d = DValue::rational(2, 1);
    let mut checked = 0;
    for r in [2usize, 3] {
        let s = Session::new(r, d.clone());
        for m in partitions_up_to(4, r) {
            let jack = s.jack(&m).expect("jack construction");
            let schur = schur_bialternant(&m, &d);
            assert!(
                jack.poly.sub(&schur).is_zero(),
                "jack({}) != schur at r={}",
                m,
                r
            );
            checked += 1;
        }
    }
    let ok = start.elapsed().as_secs() < 10;
    gate(
        "1 (Schur oracle d=2)",
        ok,
        &format!("{} partitions, {} ms", checked, start.elapsed().as_millis()),
    );
}

#[test]
fn criterion_02_eigen_suites() {
    let start = Instant::now();
    let ds = rational_ds(&[(1, 1), (2, 1), (3, 1), (1, 2)]);
    let mut reports = vec![];
    for r in [1usize, 2, 3] {
        let w = if r <= 2 { 5 } else { 4 };
        reports.push(verify_sekiguchi_eigen(&SuiteConfig::new(r, w, ds.clone())));
    }
    let elapsed_ok = start.elapsed().as_secs() < 60;
    gate_report("2 (eigen suites)", &reports, elapsed_ok);
}

#[test]
fn criterion_03_classical_pieri() {
    let start = Instant::now();
    let ds = rational_ds(&[(1, 1), (2, 1), (3, 1), (1, 2)]);
    let mut reports = vec![];
    for r in [1usize, 2, 3] {
        let w = if r <= 2 { 5 } else { 4 };
        reports.push(verify_classical_pieri(&SuiteConfig::new(r, w, ds.clone())));
    }
    let elapsed_ok = start.elapsed().as_secs() < 60;
    gate_report("3 (classical Pieri)", &reports, elapsed_ok);
}

#[test]
fn criterion_04_twisted_pieri() {
    let start = Instant::now();
    let ds = rational_ds(&[(1, 1), (2, 1), (3, 1)]);
    let mut reports = vec![];
    for r in [1usize, 2, 3] {
        reports.push(verify_twisted_pieri(&SuiteConfig::new(r, 4, ds.clone())));
    }
    let elapsed_ok = start.elapsed().as_secs() < 180;
    gate_report("4 (twisted Pieri + corollaries)", &reports, elapsed_ok);
}

#[test]
fn criterion_05_mysterious_sum() {
    let ds = rational_ds(&[(1, 1), (2, 1), (3, 1), (1, 2)]);
    let mut reports = vec![];
    for r in [1usize, 2, 3] {
        let mut cfg = SuiteConfig::new(r, 4, ds.clone());
        cfg.random_points = 50;
        cfg.seed = 7;
        reports.push(verify_mysterious_sum(&cfg));
    }
    gate_report("5 (mysterious summation)", &reports, true);
}

#[test]
fn criterion_06_interpolation_construction() {
    // r=1: falling factorial z(z-1)...(z-m+1) for m <= 5
    for d in rational_ds(&[(1, 1), (2, 1), (3, 1), (1, 2)]) {
        let s = Session::new(1, d.clone());
        for m in 0..=5u32 {
            let ip = s.interp_jack(&Partition::new(vec![m])).unwrap();
            let z = jackpieri::MultiPoly::var(1, 0, &d);
            let mut ff = jackpieri::MultiPoly::constant(1, d.one());
            for j in 0..m {
                let shift = jackpieri::MultiPoly::constant(1, d.scalar_int(j as i64));
                ff = ff.mul(&z.sub(&shift));
            }
            assert!(ip.poly.sub(&ff).is_zero(), "d={:?} m={}", d, m);
        }
    }
    // extra-vanishing: at points nu + (d/2)delta with |nu| >= |k| and k not
    // contained in nu -- conditions the solver never imposed
    let mut checked = 0;
    for d in rational_ds(&[(1, 1), (2, 1), (3, 1), (1, 2)]) {
        for r in [1usize, 2, 3] {
            let wmax = if r <= 2 { 4 } else { 3 };
            let s = Session::new(r, d.clone());
            for k in partitions_up_to(wmax, r) {
                for nu in partitions_up_to(wmax + 2, r) {
                    if nu.weight() < k.weight() || nu.contains(&k) {
                        continue;
                    }
                    let v = s
                        .eval_interp(&k, &s.shifted_point(&nu.to_int_vector()))
                        .unwrap();
                    assert!(v.is_zero(), "d={:?} k={} nu={}", d, k, nu);
                    checked += 1;
                }
            }
        }
    }
    gate(
        "6 (interpolation construction)",
        true,
        &format!("{} extra-vanishing points", checked),
    );
}

#[test]
fn criterion_07_binomial() {
    let start = Instant::now();
    let ds = rational_ds(&[(1, 1), (2, 1), (3, 1)]);
    let mut reports = vec![];
    for r in [1usize, 2] {
        reports.push(verify_binomial(&SuiteConfig::new(r, 4, ds.clone())));
    }
    // r=1 integer binomial theorem, against Pascal's triangle: the z^k
    // coefficient of (1+z)^x is C(x,k), and the binomial coefficient in the
    // Psi normalization is k! C(x,k), the falling factorial
    let d = DValue::rational(5, 2);
    let s = Session::new(1, d.clone());
    let mut pascal = vec![vec![1i64]];
    for x in 1..=5usize {
        let prev = &pascal[x - 1];
        let mut row = vec![1i64];
        for k in 1..x {
            row.push(prev[k - 1] + prev[k]);
        }
        row.push(1);
        pascal.push(row);
    }
    for x in 0..=5u32 {
        // expansion of Phi_x(1+z) = (1+z)^x in the monomial basis
        let phi = s.phi(&Partition::new(vec![x])).unwrap().poly;
        let shifted = phi.substitute_shift(&[d.one()], &d);
        for k in 0..=x {
            let c = shifted
                .coefficient(&jackpieri::polyring::Expo(vec![k]))
                .cloned()
                .unwrap_or_else(|| d.zero());
            let expect = d.scalar_int(pascal[x as usize][k as usize]);
            assert!((&c - &expect).is_zero(), "x={} k={}", x, k);
            // falling factorial = k! C(x,k)
            let mut fact = 1i64;
            for j in 1..=k as i64 {
                fact *= j;
            }
            let bc = s
                .binomial_coefficient(&Partition::new(vec![k]), &jackpieri::IntVector(vec![x as i64]))
                .unwrap();
            let expect_bc = d.scalar_int(fact * pascal[x as usize][k as usize]);
            assert!((&bc - &expect_bc).is_zero(), "bc x={} k={}", x, k);
        }
    }
    let elapsed_ok = start.elapsed().as_secs() < 60;
    gate_report("7 (binomial formula + integer oracle)", &reports, elapsed_ok);
}

#[test]
fn criterion_08_difference_and_interp_pieri() {
    let start = Instant::now();
    let ds = rational_ds(&[(1, 1), (2, 1), (3, 1)]);
    let mut reports = vec![];
    for r in [1usize, 2, 3] {
        let w = if r <= 2 { 4 } else { 3 };
        let mut cfg = SuiteConfig::new(r, w, ds.clone());
        cfg.random_points = 20;
        cfg.seed = 11;
        reports.push(verify_difference_equation(&cfg));
        reports.push(verify_interp_pieri(&cfg));
    }
    let elapsed_ok = start.elapsed().as_secs() < 180;
    gate_report(
        "8 (difference equation + interp Pieri + corollaries)",
        &reports,
        elapsed_ok,
    );
}

#[test]
fn criterion_09_kernel() {
    // r=1, N=5: diagonal coefficients 1/m!
    let s = Session::new(1, DValue::rational(3, 1));
    let kern = TruncatedKernel::build(&s, 5).unwrap();
    let map = kern.pair_map(5);
    let mut fact = Rat::from_integer(1.into());
    for m in 0..=5u32 {
        if m > 0 {
            fact = fact.clone() * Rat::from_integer((m as i64).into());
        }
        let key = (
            jackpieri::polyring::Expo(vec![m]),
            jackpieri::polyring::Expo(vec![m]),
        );
        let c = map.get(&key).expect("diagonal kernel term");
        let expect = s.d().scalar(Rat::from_integer(1.into()) / fact.clone());
        assert!((c - &expect).is_zero(), "m={}", m);
    }
    assert_eq!(map.len(), 6, "kernel at r=1 must be diagonal");

    let ds = rational_ds(&[(1, 1), (2, 1)]);
    let reports = vec![
        verify_kernel_intertwining(2, 4, &[0, 1, 2], &ds),
        verify_kernel_symmetry(2, 4, &ds),
    ];
    gate_report("9 (kernel oracle + intertwining + symmetry)", &reports, true);
}

#[test]
fn criterion_10_symbolic_smoke() {
    let start = Instant::now();
    let mut cfg = SuiteConfig::new(2, 3, vec![DValue::Symbolic]);
    cfg.random_points = 5;
    let reports = vec![
        verify_sekiguchi_eigen(&cfg),
        verify_classical_pieri(&cfg),
        verify_twisted_pieri(&cfg),
        verify_mysterious_sum(&cfg),
        verify_difference_equation(&cfg),
        verify_interp_pieri(&cfg),
        verify_binomial(&cfg),
        verify_commutator(&cfg),
        verify_kernel_symmetry(2, 3, &[DValue::Symbolic]),
        verify_kernel_intertwining(2, 3, &[0, 1, 2], &[DValue::Symbolic]),
    ];
    let elapsed_ok = start.elapsed().as_secs() < 300;
    gate_report("10 (symbolic-d smoke)", &reports, elapsed_ok);
}

#[test]
fn criterion_11_determinism() {
    let bin = env!("CARGO_BIN_EXE_jackpieri");
    let run = || {
        Command::new(bin)
            .args([
                "verify",
                "all",
                "--r",
                "2",
                "--max-weight",
                "3",
                "--d",
                "1",
                "--d",
                "2",
                "--seed",
                "42",
                "--format",
                "json",
            ])
            .output()
            .expect("run jackpieri")
    };
    let a = run();
    let b = run();
    assert!(a.status.success(), "first run failed");
    assert!(b.status.success(), "second run failed");
    let identical = a.stdout == b.stdout;
    gate(
        "11 (byte-identical JSON)",
        identical && !a.stdout.is_empty(),
        &format!("{} bytes", a.stdout.len()),
    );
}
