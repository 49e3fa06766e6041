//! The `gaugenorm` command line: argument model, operand loading and verb
//! dispatch. The binary is a thin wrapper around [`run`].

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, ValueEnum};
use serde::Serialize;

use crate::dominance::{
    dominance_transfer, ky_fan_dominates_with, reconstruct_norm, ReconstructOptions, DOMINANCE_TOL,
};
use crate::duality::{curve_to_simple, dual_norm, DualOptions, DEFAULT_BUDGET};
use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;
use crate::norms::NormSpec;
use crate::snumbers::{mu_of_matrix, mu_of_simple, mu_of_step, SNumberCurve, SimpleOperator};
use crate::stepfn::StepFunction;
use crate::verify;

pub const DEFAULT_SEED: u64 = 42;
/// Number of random f-norms tried by `dominate` once dominance holds.
pub const TRANSFER_FAMILY: usize = 100;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Verb {
    /// Print the s-number curve of an operand.
    Snumbers,
    /// Evaluate a norm.
    Norm,
    /// Estimate a dual norm.
    Dual,
    /// Check Ky Fan dominance of --left by --right.
    Dominate,
    /// Rebuild a norm as a supremum of f-norms.
    Reconstruct,
    /// Run the property-verification suite.
    Verify,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
}

/// Unitarily invariant and symmetric gauge norms on matrices and step functions.
#[derive(Debug, Clone, Parser)]
#[command(name = "gaugenorm", version)]
pub struct Command {
    #[arg(value_enum)]
    pub verb: Verb,
    /// Matrix operand (.json or .csv).
    #[arg(long)]
    pub matrix: Option<PathBuf>,
    /// Step-function operand (.json).
    #[arg(long)]
    pub step: Option<PathBuf>,
    /// Simple-operator operand (.json).
    #[arg(long)]
    pub simple: Option<PathBuf>,
    /// op | kyfan:t=<v|inf> | lp:p=<v|inf> | fnorm:@<file> | famsup:@<file>
    #[arg(long)]
    pub spec: Option<String>,
    /// Left operand of `dominate` (any operand kind).
    #[arg(long)]
    pub left: Option<PathBuf>,
    /// Right operand of `dominate`.
    #[arg(long)]
    pub right: Option<PathBuf>,
    /// Defaults to $GAUGENORM_SEED, then 42.
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: usize,
    /// Slack for the dominance comparison.
    #[arg(long)]
    pub tol: Option<f64>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

impl Command {
    pub fn new(verb: Verb) -> Self {
        Command {
            verb,
            matrix: None,
            step: None,
            simple: None,
            spec: None,
            left: None,
            right: None,
            seed: None,
            budget: DEFAULT_BUDGET,
            tol: None,
            out: None,
            format: Format::Json,
        }
    }
}

/// Result of a run: exit status, the report (empty on error) and any
/// diagnostic for stderr.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub code: i32,
    pub report: String,
    pub message: Option<String>,
}

pub fn run(cmd: &Command) -> Outcome {
    match execute(cmd) {
        Ok((report, failed)) => {
            if let Some(path) = &cmd.out {
                if let Err(e) = fs::write(path, &report) {
                    let err = Error::Input(format!("{}: {e}", path.display()));
                    return Outcome { code: err.exit_code(), report: String::new(), message: Some(err.to_string()) };
                }
            }
            let message = failed.then(|| "verification found violations".to_string());
            Outcome { code: i32::from(failed), report, message }
        }
        Err(e) => Outcome { code: e.exit_code(), report: String::new(), message: Some(e.to_string()) },
    }
}

/// An operand file, recognized by extension and JSON shape.
#[derive(Debug, Clone)]
pub enum Operand {
    Matrix(ComplexMatrix),
    Step(StepFunction),
    Simple(SimpleOperator),
}

impl Operand {
    pub fn curve(&self) -> Result<SNumberCurve> {
        match self {
            Operand::Matrix(m) => mu_of_matrix(m),
            Operand::Step(f) => Ok(mu_of_step(f)),
            Operand::Simple(s) => Ok(mu_of_simple(s)),
        }
    }

    pub fn simple(&self) -> Result<SimpleOperator> {
        match self {
            Operand::Matrix(m) => SimpleOperator::from_matrix(m),
            Operand::Step(f) => curve_to_simple(&mu_of_step(f)),
            Operand::Simple(s) => Ok(s.clone()),
        }
    }
}

pub fn load_operand(path: &Path) -> Result<Operand> {
    let text = fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
    let located = |e: Error| match e {
        Error::Parse(m) => Error::Parse(format!("{}: {m}", path.display())),
        other => other,
    };
    if path.extension().is_some_and(|x| x.eq_ignore_ascii_case("csv")) {
        return ComplexMatrix::from_csv(&text).map(Operand::Matrix).map_err(located);
    }
    let value: serde_json::Value =
        serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    let has = |key: &str| value.get(key).is_some();
    let operand = if has("n") {
        ComplexMatrix::from_json(&text).map(Operand::Matrix)
    } else if has("pieces") {
        StepFunction::from_json(&text).map(Operand::Step)
    } else if has("terms") {
        SimpleOperator::from_json(&text).map(Operand::Simple)
    } else {
        Err(Error::Parse("expected an object with \"n\", \"pieces\" or \"terms\"".into()))
    };
    operand.map_err(located)
}

fn seed_of(cmd: &Command) -> Result<u64> {
    if let Some(seed) = cmd.seed {
        return Ok(seed);
    }
    match std::env::var("GAUGENORM_SEED") {
        Ok(v) => v.trim().parse().map_err(|_| Error::Input(format!("GAUGENORM_SEED: bad integer {v:?}"))),
        Err(_) => Ok(DEFAULT_SEED),
    }
}

fn single_operand(cmd: &Command) -> Result<Operand> {
    let given: Vec<&PathBuf> = [&cmd.matrix, &cmd.step, &cmd.simple].into_iter().flatten().collect();
    match given.as_slice() {
        [path] => load_operand(path),
        [] => Err(Error::Input("one of --matrix, --step or --simple is required".into())),
        _ => Err(Error::Input("give only one of --matrix, --step or --simple".into())),
    }
}

fn spec_of(cmd: &Command) -> Result<NormSpec> {
    let text = cmd.spec.as_deref().ok_or_else(|| Error::Input("--spec is required".into()))?;
    let spec = NormSpec::parse(text)?;
    spec.validate()?;
    Ok(spec)
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

#[derive(Serialize)]
struct NormReport {
    spec: String,
    value: f64,
}

// (report, verification failed)
fn execute(cmd: &Command) -> Result<(String, bool)> {
    let seed = seed_of(cmd)?;
    let csv = cmd.format == Format::Csv;
    let report = match cmd.verb {
        Verb::Snumbers => {
            let mu = single_operand(cmd)?.curve()?;
            if csv {
                let mut out = String::from("length,value\n");
                for p in mu.pieces() {
                    let _ = writeln!(out, "{},{}", p.length, p.value);
                }
                out
            } else {
                let mut s = mu.to_json();
                s.push('\n');
                s
            }
        }
        Verb::Norm => {
            let mu = single_operand(cmd)?.curve()?;
            let spec = spec_of(cmd)?;
            let r = NormReport { spec: spec.to_string(), value: spec.eval(&mu)? };
            if csv {
                format!("spec,value\n{},{}\n", r.spec, r.value)
            } else {
                json(&r)
            }
        }
        Verb::Dual => {
            let a = single_operand(cmd)?.simple()?;
            let spec = spec_of(cmd)?;
            let opts = DualOptions { budget: cmd.budget, seed, ..Default::default() };
            let est = dual_norm(&a, &spec, &opts)?;
            if csv {
                let method = serde_json::to_value(est.method).expect("enum serializes");
                format!(
                    "value,method,trials_used\n{},{},{}\n",
                    est.value,
                    method.as_str().unwrap_or(""),
                    est.trials_used
                )
            } else {
                json(&est)
            }
        }
        Verb::Dominate => {
            let left = cmd.left.as_ref().ok_or_else(|| Error::Input("--left is required".into()))?;
            let right = cmd.right.as_ref().ok_or_else(|| Error::Input("--right is required".into()))?;
            let s = load_operand(left)?.curve()?;
            let t = load_operand(right)?.curve()?;
            let tol = cmd.tol.unwrap_or(DOMINANCE_TOL);
            if !(tol.is_finite() && tol >= 0.0) {
                return Err(Error::Parameter(format!("--tol must be a nonnegative number, got {tol}")));
            }
            let mut report = ky_fan_dominates_with(&s, &t, tol);
            if report.dominates {
                match dominance_transfer(&s, &t, TRANSFER_FAMILY, seed) {
                    Ok(r) => {
                        report.transfer_family_size = r.transfer_family_size;
                        report.transfer_holds = r.transfer_holds;
                        report.transfer_max_violation = r.transfer_max_violation;
                    }
                    // dominance only within a widened --tol
                    Err(Error::Precondition(_)) => {}
                    Err(e) => return Err(e),
                }
            }
            if csv {
                let holds = report.transfer_holds.map(|b| b.to_string()).unwrap_or_default();
                format!(
                    "dominates,max_violation,checked_breakpoints,transfer_family_size,transfer_holds\n{},{},{},{},{}\n",
                    report.dominates,
                    report.max_violation,
                    report.checked_breakpoints.len(),
                    report.transfer_family_size,
                    holds
                )
            } else {
                json(&report)
            }
        }
        Verb::Reconstruct => {
            let mu = single_operand(cmd)?.curve()?;
            let spec = spec_of(cmd)?;
            let opts = ReconstructOptions { samples: cmd.budget, seed, inject_extremizer: true };
            let r = reconstruct_norm(&mu, &spec, &opts)?;
            if csv {
                format!("estimate,truth\n{},{}\n", r.estimate, r.truth)
            } else {
                json(&r)
            }
        }
        Verb::Verify => {
            let report = verify::run_all(seed)?;
            let failed = !report.all_passed();
            let out = if csv {
                let mut out = String::from("criterion,name,trials,violations,max_deviation,tolerance,passed\n");
                for c in &report.checks {
                    let _ = writeln!(
                        out,
                        "{},\"{}\",{},{},{},{},{}",
                        c.criterion, c.name, c.trials, c.violations, c.max_deviation, c.tolerance, c.passed
                    );
                }
                out
            } else {
                json(&report)
            };
            return Ok((out, failed));
        }
    };
    Ok((report, false))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn write(dir: &Path, name: &str, body: &str) -> PathBuf {
        let p = dir.join(name);
        fs::write(&p, body).unwrap();
        p
    }

    #[test]
    fn norm_of_diagonal_matrix() {
        let dir = tempfile::tempdir().unwrap();
        let m = write(dir.path(), "m.json", r#"{"n": 3, "re": [[3,0,0],[0,2,0],[0,0,1]]}"#);
        let mut cmd = Command::new(Verb::Norm);
        cmd.matrix = Some(m);
        cmd.spec = Some("kyfan:t=2".into());
        let out = run(&cmd);
        assert_eq!(out.code, 0, "{out:?}");
        let v: serde_json::Value = serde_json::from_str(&out.report).unwrap();
        assert!((v["value"].as_f64().unwrap() - 5.0).abs() < 1e-12);
    }

    #[test]
    fn dual_of_simple() {
        let dir = tempfile::tempdir().unwrap();
        let a = write(dir.path(), "a.json", r#"{"terms": [[3, 1], [4, 1]]}"#);
        let mut cmd = Command::new(Verb::Dual);
        cmd.simple = Some(a);
        cmd.spec = Some("lp:p=2".into());
        let out = run(&cmd);
        let v: serde_json::Value = serde_json::from_str(&out.report).unwrap();
        assert!((v["value"].as_f64().unwrap() - 5.0).abs() < 1e-9);
    }

    #[test]
    fn exit_codes() {
        let dir = tempfile::tempdir().unwrap();
        let bad = write(dir.path(), "bad.json", "{\"n\": 2,\n \"re\": [[1, 2], [3]]");
        let mut cmd = Command::new(Verb::Snumbers);
        cmd.matrix = Some(bad);
        let out = run(&cmd);
        assert_eq!(out.code, 2);
        assert!(out.message.unwrap().contains("line 2"));

        let ok = write(dir.path(), "s.json", r#"{"domain": "inf", "pieces": [[1, 2]]}"#);
        let mut cmd = Command::new(Verb::Norm);
        cmd.step = Some(ok);
        cmd.spec = Some("lp:p=0.5".into());
        assert_eq!(run(&cmd).code, 3);
        assert_eq!(run(&Command::new(Verb::Norm)).code, 2);
    }
}
