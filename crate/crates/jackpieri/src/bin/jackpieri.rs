//! Command-line front end: compute Jack-family polynomials and run the
//! verification suites, with text, JSON, and LaTeX output.

use clap::{Parser, Subcommand, ValueEnum};
use jackpieri::field::{DValue, FieldElement, Rat};
use jackpieri::identities::{self, SuiteConfig, UMode, VerificationReport};
use jackpieri::kernel::{verify_kernel_intertwining, verify_kernel_symmetry, TruncatedKernel};
use jackpieri::polyring::MultiPoly;
use jackpieri::{Partition, Session};
use num_bigint::BigInt;
use std::fmt::Write as _;
use std::process::ExitCode;
use std::str::FromStr;

const SUITES: &[&str] = &[
    "sekiguchi-eigen",
    "classical-pieri",
    "twisted-pieri",
    "mysterious-sum",
    "difference-equation",
    "interp-pieri",
    "binomial",
    "commutator",
    "kernel-symmetry",
    "kernel-intertwining",
];

#[derive(Parser)]
#[command(name = "jackpieri", version, about = "Exact verification of Pieri-type formulas for Jack polynomials")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a polynomial and print it.
    Compute {
        /// What to compute.
        #[arg(value_enum)]
        target: ComputeTarget,
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Run a verification suite by name, or "all".
    Verify {
        /// Suite name or "all".
        suite: String,
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// List the available verification suites.
    ListSuites,
}

#[derive(Copy, Clone, ValueEnum)]
enum ComputeTarget {
    Jack,
    Interp,
    Phi,
    Psi,
    Kernel,
}

#[derive(Copy, Clone, ValueEnum)]
enum Format {
    Text,
    Json,
    Latex,
}

#[derive(clap::Args)]
struct CommonOpts {
    /// Number of variables.
    #[arg(long, default_value_t = 2)]
    r: usize,
    /// Parameter d: a rational "p/q" or "symbolic"; repeatable for suites.
    #[arg(long = "d")]
    d: Vec<String>,
    /// Weight bound for suite grids (and truncation weight for the kernel).
    #[arg(long, default_value_t = 4)]
    max_weight: u32,
    /// Formal u ("formal") or a rational specialization ("value:p/q").
    #[arg(long, default_value = "formal")]
    u: String,
    /// Seed for the random integer points used by some suites.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Number of random integer points per configuration.
    #[arg(long, default_value_t = 20)]
    random_points: usize,
    /// Partition index, comma-separated, e.g. "2,1,0".
    #[arg(long)]
    partition: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write output to a file instead of standard output.
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

fn parse_rat(s: &str) -> Result<Rat, String> {
    let (numer, denom) = match s.split_once('/') {
        Some((a, b)) => (a, b),
        None => (s, "1"),
    };
    let n = BigInt::from_str(numer.trim()).map_err(|e| format!("bad rational '{}': {}", s, e))?;
    let m = BigInt::from_str(denom.trim()).map_err(|e| format!("bad rational '{}': {}", s, e))?;
    if m == BigInt::from(0) {
        return Err(format!("bad rational '{}': zero denominator", s));
    }
    Ok(Rat::new(n, m))
}

fn parse_d(s: &str) -> Result<DValue, String> {
    if s == "symbolic" {
        Ok(DValue::Symbolic)
    } else {
        Ok(DValue::Rational(parse_rat(s)?))
    }
}

fn parse_u(s: &str) -> Result<UMode, String> {
    if s == "formal" {
        Ok(UMode::Formal)
    } else if let Some(v) = s.strip_prefix("value:") {
        Ok(UMode::Value(parse_rat(v)?))
    } else {
        Err(format!("bad --u '{}': expected 'formal' or 'value:p/q'", s))
    }
}

fn d_string(d: &DValue) -> String {
    match d {
        DValue::Rational(q) => q.to_string(),
        DValue::Symbolic => "symbolic".to_string(),
    }
}

struct Resolved {
    cfg: SuiteConfig,
    format: Format,
    out: Option<std::path::PathBuf>,
    partition: Option<Partition>,
    u_string: String,
}

fn resolve(opts: &CommonOpts) -> Result<Resolved, String> {
    if opts.r == 0 {
        return Err("--r must be at least 1".to_string());
    }
    let d_values: Vec<DValue> = if opts.d.is_empty() {
        vec![
            DValue::rational(1, 1),
            DValue::rational(2, 1),
            DValue::rational(3, 1),
            DValue::rational(1, 2),
        ]
    } else {
        opts.d.iter().map(|s| parse_d(s)).collect::<Result<_, _>>()?
    };
    let mut cfg = SuiteConfig::new(opts.r, opts.max_weight, d_values);
    cfg.u_mode = parse_u(&opts.u)?;
    cfg.seed = opts.seed;
    cfg.random_points = opts.random_points;
    let partition = match &opts.partition {
        Some(s) => {
            let p = Partition::from_str(s).map_err(|e| format!("bad --partition: {}", e))?;
            if p.rank() != opts.r {
                return Err(format!(
                    "--partition has {} parts but --r is {}",
                    p.rank(),
                    opts.r
                ));
            }
            Some(p)
        }
        None => None,
    };
    Ok(Resolved {
        cfg,
        format: opts.format,
        out: opts.out.clone(),
        partition,
        u_string: opts.u.clone(),
    })
}

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

fn fe_text(c: &FieldElement) -> String {
    c.to_string()
}

/// "m[2,0] + 1*m[1,1]" style rendering of a monomial-basis expansion; the
/// index term is shown bare when its coefficient is one.
fn sympoly_text(s: &jackpieri::SymPoly, index: &Partition) -> String {
    let mut items: Vec<(&Partition, &FieldElement)> = s.coeffs().collect();
    items.reverse(); // descending lex: highest (the index) first
    let mut out = String::new();
    for (i, (lam, c)) in items.iter().enumerate() {
        let name = format!(
            "m[{}]",
            lam.parts()
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(",")
        );
        if i > 0 {
            out.push_str(" + ");
        }
        if *lam == index && c.is_one() {
            out.push_str(&name);
        } else {
            let _ = write!(out, "{}*{}", fe_text(c), name);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// "z1^2 - z1" style rendering of a multivariate polynomial.
fn multipoly_text(p: &MultiPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    let mut items: Vec<_> = p.terms().collect();
    items.reverse();
    for (e, c) in items {
        let mono: Vec<String> = e
            .0
            .iter()
            .enumerate()
            .filter(|(_, &k)| k > 0)
            .map(|(i, &k)| {
                if k == 1 {
                    format!("z{}", i + 1)
                } else {
                    format!("z{}^{}", i + 1, k)
                }
            })
            .collect();
        let mono = mono.join("*");
        let (neg, mag) = match c {
            FieldElement::Rat(q) if *q < Rat::from(BigInt::from(0)) => {
                (true, fe_text(&-c.clone()))
            }
            _ => (false, fe_text(c)),
        };
        if out.is_empty() {
            if neg {
                out.push_str("-");
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let show_coeff = !(mag == "1" && !mono.is_empty());
        if show_coeff {
            out.push_str(&mag);
            if !mono.is_empty() {
                out.push('*');
            }
        }
        out.push_str(&mono);
        if mono.is_empty() && !show_coeff {
            out.push('1');
        }
    }
    out
}

fn fe_latex(c: &FieldElement) -> String {
    match c {
        FieldElement::Rat(q) => {
            if q.is_integer() {
                q.to_string()
            } else {
                format!("\\frac{{{}}}{{{}}}", q.numer(), q.denom())
            }
        }
        FieldElement::Fun(f) => format!("\\frac{{{}}}{{{}}}", f.num(), f.den()),
    }
}

fn sympoly_latex(s: &jackpieri::SymPoly, index: &Partition) -> String {
    let mut items: Vec<(&Partition, &FieldElement)> = s.coeffs().collect();
    items.reverse();
    let mut out = format!("P_{{({})}} = ", index);
    for (i, (lam, c)) in items.iter().enumerate() {
        if i > 0 {
            out.push_str(" + ");
        }
        if !(*lam == index && c.is_one()) {
            let _ = write!(out, "{}\\, ", fe_latex(c));
        }
        let _ = write!(out, "m_{{({})}}", lam);
    }
    out
}

fn multipoly_latex(p: &MultiPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    let mut items: Vec<_> = p.terms().collect();
    items.reverse();
    for (e, c) in items {
        if !out.is_empty() {
            out.push_str(" + ");
        }
        let _ = write!(out, "{}\\,", fe_latex(c));
        for (i, &k) in e.0.iter().enumerate() {
            if k == 1 {
                let _ = write!(out, " z_{{{}}}", i + 1);
            } else if k > 1 {
                let _ = write!(out, " z_{{{}}}^{{{}}}", i + 1, k);
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Dispatch
// ---------------------------------------------------------------------------

fn run_one_suite(name: &str, cfg: &SuiteConfig) -> Option<VerificationReport> {
    match name {
        "sekiguchi-eigen" => Some(identities::verify_sekiguchi_eigen(cfg)),
        "classical-pieri" => Some(identities::verify_classical_pieri(cfg)),
        "twisted-pieri" => Some(identities::verify_twisted_pieri(cfg)),
        "mysterious-sum" => Some(identities::verify_mysterious_sum(cfg)),
        "difference-equation" => Some(identities::verify_difference_equation(cfg)),
        "interp-pieri" => Some(identities::verify_interp_pieri(cfg)),
        "binomial" => Some(identities::verify_binomial(cfg)),
        "commutator" => Some(identities::verify_commutator(cfg)),
        "kernel-symmetry" => Some(verify_kernel_symmetry(cfg.r, cfg.max_weight, &cfg.d_values)),
        "kernel-intertwining" => {
            let ls: Vec<usize> = (0..=cfg.r).collect();
            Some(verify_kernel_intertwining(
                cfg.r,
                cfg.max_weight,
                &ls,
                &cfg.d_values,
            ))
        }
        _ => None,
    }
}

fn emit(out: &Option<std::path::PathBuf>, content: &str) -> Result<(), String> {
    match out {
        Some(path) => std::fs::write(path, content).map_err(|e| format!("write {:?}: {}", path, e)),
        None => {
            print!("{}", content);
            Ok(())
        }
    }
}

fn reports_json(resolved: &Resolved, suites: &[&str], reports: &[VerificationReport]) -> String {
    let cfg = &resolved.cfg;
    // timing is reported as 0 in JSON so output is byte-deterministic
    let results: Vec<serde_json::Value> = reports
        .iter()
        .map(|rep| {
            let mut obj = serde_json::json!({
                "suite": rep.suite,
                "covers": rep.covers,
                "cases": rep.cases,
                "passed": rep.passed,
                "failed": rep.cases - rep.passed,
                "millis": 0,
            });
            if let Some(f) = &rep.first_failure {
                obj["first_failure"] = serde_json::Value::String(f.clone());
            }
            obj
        })
        .collect();
    let doc = serde_json::json!({
        "tool_version": env!("CARGO_PKG_VERSION"),
        "config": {
            "r": cfg.r,
            "max_weight": cfg.max_weight,
            "d": cfg.d_values.iter().map(d_string).collect::<Vec<_>>(),
            "u": resolved.u_string,
            "seed": cfg.seed,
            "random_points": cfg.random_points,
            "suites": suites,
        },
        "results": results,
    });
    let mut s = serde_json::to_string_pretty(&doc).expect("serialize report");
    s.push('\n');
    s
}

fn verify_cmd(suite: &str, resolved: &Resolved) -> Result<ExitCode, String> {
    let names: Vec<&str> = if suite == "all" {
        SUITES.to_vec()
    } else if SUITES.contains(&suite) {
        vec![SUITES.iter().find(|s| **s == suite).copied().unwrap()]
    } else {
        eprintln!("unknown suite '{}'; valid suites:", suite);
        for s in SUITES {
            eprintln!("  {}", s);
        }
        return Ok(ExitCode::from(2));
    };
    let mut reports = Vec::new();
    for name in &names {
        reports.push(run_one_suite(name, &resolved.cfg).expect("known suite"));
    }
    let all_ok = reports.iter().all(|r| r.all_passed());
    let content = match resolved.format {
        Format::Json => reports_json(resolved, &names, &reports),
        Format::Text => {
            let mut s = String::new();
            for rep in &reports {
                let status = if rep.all_passed() { "PASS" } else { "FAIL" };
                let _ = writeln!(
                    s,
                    "{} {} ({}/{} cases, {} ms) covers: {}",
                    status,
                    rep.suite,
                    rep.passed,
                    rep.cases,
                    rep.millis,
                    rep.covers.join(", ")
                );
                if let Some(f) = &rep.first_failure {
                    let _ = writeln!(s, "  first failure: {}", f);
                }
            }
            s
        }
        Format::Latex => {
            let mut s = String::from(
                "\\begin{tabular}{llrr}\nsuite & status & cases & passed \\\\\n\\hline\n",
            );
            for rep in &reports {
                let status = if rep.all_passed() { "pass" } else { "fail" };
                let _ = writeln!(
                    s,
                    "{} & {} & {} & {} \\\\",
                    rep.suite.replace('-', "--"),
                    status,
                    rep.cases,
                    rep.passed
                );
            }
            s.push_str("\\end{tabular}\n");
            s
        }
    };
    emit(&resolved.out, &content)?;
    Ok(if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn compute_cmd(target: ComputeTarget, resolved: &Resolved) -> Result<ExitCode, String> {
    let cfg = &resolved.cfg;
    let d = cfg.d_values.first().cloned().unwrap_or(DValue::rational(2, 1));
    let session = Session::new(cfg.r, d.clone());
    let err = |e: jackpieri::JackError| e.to_string();

    if let ComputeTarget::Kernel = target {
        let kern = TruncatedKernel::build(&session, cfg.max_weight).map_err(err)?;
        let content = match resolved.format {
            Format::Json => {
                let terms: Vec<serde_json::Value> = kern
                    .terms()
                    .iter()
                    .map(|(m, psi, phi)| {
                        serde_json::json!({
                            "m": m.to_string(),
                            "psi_z": psi.to_json(),
                            "phi_w": phi.to_json(),
                        })
                    })
                    .collect();
                let doc = serde_json::json!({
                    "tool_version": env!("CARGO_PKG_VERSION"),
                    "r": cfg.r,
                    "d": d_string(&d),
                    "truncation_weight": cfg.max_weight,
                    "terms": terms,
                });
                let mut s = serde_json::to_string_pretty(&doc).expect("serialize");
                s.push('\n');
                s
            }
            Format::Text => {
                let mut s = String::new();
                for (m, psi, phi) in kern.terms() {
                    let _ = writeln!(
                        s,
                        "m={}: Psi(z) = {} ; Phi(w) = {}",
                        m,
                        multipoly_text(psi),
                        multipoly_text(phi).replace('z', "w")
                    );
                }
                s
            }
            Format::Latex => {
                let mut s = String::new();
                for (m, psi, phi) in kern.terms() {
                    let _ = writeln!(
                        s,
                        "\\Psi_{{({})}}(\\mathbf{{z}}) = {} ,\\quad \\Phi_{{({})}}(\\mathbf{{w}}) = {} \\\\",
                        m,
                        multipoly_latex(psi),
                        m,
                        multipoly_latex(phi).replace("z_", "w_")
                    );
                }
                s
            }
        };
        emit(&resolved.out, &content)?;
        return Ok(ExitCode::SUCCESS);
    }

    let partition = resolved
        .partition
        .clone()
        .ok_or_else(|| "--partition is required for compute".to_string())?;
    let content = match target {
        ComputeTarget::Jack | ComputeTarget::Phi | ComputeTarget::Psi => {
            let (label, poly) = match target {
                ComputeTarget::Jack => ("jack", session.jack(&partition).map_err(err)?.poly.clone()),
                ComputeTarget::Phi => ("phi", session.phi(&partition).map_err(err)?.poly),
                ComputeTarget::Psi => ("psi", session.psi(&partition).map_err(err)?.poly),
                _ => unreachable!(),
            };
            let sym = poly.to_monomial_basis(&d).map_err(|e| e.to_string())?;
            match resolved.format {
                Format::Text => format!("{}\n", sympoly_text(&sym, &partition)),
                Format::Latex => format!("{}\n", sympoly_latex(&sym, &partition)),
                Format::Json => {
                    let doc = serde_json::json!({
                        "tool_version": env!("CARGO_PKG_VERSION"),
                        "target": label,
                        "r": cfg.r,
                        "d": d_string(&d),
                        "partition": partition.to_string(),
                        "poly": poly.to_json(),
                    });
                    let mut s = serde_json::to_string_pretty(&doc).expect("serialize");
                    s.push('\n');
                    s
                }
            }
        }
        ComputeTarget::Interp => {
            let ip = session.interp_jack(&partition).map_err(err)?;
            match resolved.format {
                Format::Text => format!("{}\n", multipoly_text(&ip.poly)),
                Format::Latex => format!("{}\n", multipoly_latex(&ip.poly)),
                Format::Json => {
                    let doc = serde_json::json!({
                        "tool_version": env!("CARGO_PKG_VERSION"),
                        "target": "interp",
                        "r": cfg.r,
                        "d": d_string(&d),
                        "partition": partition.to_string(),
                        "poly": ip.poly.to_json(),
                    });
                    let mut s = serde_json::to_string_pretty(&doc).expect("serialize");
                    s.push('\n');
                    s
                }
            }
        }
        ComputeTarget::Kernel => unreachable!(),
    };
    emit(&resolved.out, &content)?;
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    // JACKPIERI_THREADS caps internal parallelism; suite execution is serial,
    // so any cap is honored, but reject malformed values up front.
    if let Ok(v) = std::env::var("JACKPIERI_THREADS") {
        if v.parse::<usize>().is_err() {
            eprintln!("JACKPIERI_THREADS must be a non-negative integer, got '{}'", v);
            return ExitCode::from(2);
        }
    }
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::ListSuites => {
            for s in SUITES {
                println!("{}", s);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Compute { target, opts } => {
            resolve(opts).and_then(|resolved| compute_cmd(*target, &resolved))
        }
        Command::Verify { suite, opts } => {
            resolve(opts).and_then(|resolved| verify_cmd(suite, &resolved))
        }
    };
    match result {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {}", msg);
            ExitCode::from(2)
        }
    }
}
