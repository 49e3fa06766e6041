//! Norm evaluation on s-number curves.
//!
//! Every norm here is a functional of `μ_s(T)` alone:
//!
//! * Ky Fan `t`-norms: `μ_0` at `t = 0`, the average `(1/t)∫_0^t μ` for
//!   `0 < t ≤ 1`, and the plain integral `∫_0^t μ` for `t > 1`;
//! * f-norms `∫ f μ` for nonincreasing weights `f` with `∫_0^1 f ≤ 1`;
//! * `L^p` norms `(∫ μ^p)^{1/p}`;
//! * suprema of finitely many f-norms.
//!
//! Since `t ↦ ∫_0^t μ` is piecewise linear with kinks only at the curve's
//! breakpoints, statements "for all t" reduce to checks at breakpoints; see
//! [`comparison_grid`].

use std::fmt;
use std::fs;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{random_unitary_with, ComplexMatrix};
use crate::snumbers::{SNumberCurve, SimpleOperator};
use crate::stepfn::StepFunction;

/// Admission slack for `∫_0^1 f ≤ 1`.
pub const F_CLASS_TOL: f64 = 1e-12;

/// A member of the weight class `F`: nonincreasing, nonnegative,
/// right-continuous simple function with compact support and `∫_0^1 f ≤ 1`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "StepFunction", into = "StepFunction")]
pub struct WeightFunction(SNumberCurve);

impl WeightFunction {
    pub fn new(f: StepFunction) -> Result<Self> {
        if !f.is_nonincreasing() {
            return Err(Error::Parameter("weight function must be nonincreasing".into()));
        }
        let head = f.integral_to(1.0);
        if head > 1.0 + F_CLASS_TOL {
            return Err(Error::Parameter(format!("weight function has ∫_0^1 f = {head} > 1")));
        }
        Ok(WeightFunction(SNumberCurve::new(f)?))
    }

    pub fn from_pieces<I>(pieces: I) -> Result<Self>
    where
        I: IntoIterator<Item = (f64, f64)>,
    {
        Self::new(StepFunction::infinite(pieces)?)
    }

    /// `χ_[0,1)`, the weight that reproduces the Ky Fan 1-norm.
    pub fn unit_indicator() -> Self {
        WeightFunction(SNumberCurve::from_pieces([(1.0, 1.0)]).expect("valid"))
    }

    pub fn curve(&self) -> &SNumberCurve {
        &self.0
    }

    pub fn as_step(&self) -> &StepFunction {
        self.0.as_step()
    }
}

impl TryFrom<StepFunction> for WeightFunction {
    type Error = Error;

    fn try_from(f: StepFunction) -> Result<Self> {
        WeightFunction::new(f)
    }
}

impl From<WeightFunction> for StepFunction {
    fn from(w: WeightFunction) -> Self {
        w.0.into_step()
    }
}

/// A choice of symmetric gauge norm.
#[derive(Debug, Clone, PartialEq)]
pub enum NormSpec {
    /// Ky Fan `t`-norm, `t ∈ [0, ∞]`.
    KyFan(f64),
    /// `∫ f μ` for a weight in `F`.
    FNorm(WeightFunction),
    /// `L^p` norm, `p ∈ [1, ∞]`.
    Lp(f64),
    /// Supremum of f-norms over a nonempty finite family.
    FamilySup(Vec<WeightFunction>),
    /// `‖T‖`, the same as `KyFan(0)`.
    OperatorNorm,
}

impl NormSpec {
    pub fn validate(&self) -> Result<()> {
        match self {
            NormSpec::KyFan(t) => check_ky_fan_index(*t),
            NormSpec::Lp(p) => check_lp_index(*p),
            NormSpec::FamilySup(fs) if fs.is_empty() => Err(Error::Parameter("empty f-norm family".into())),
            _ => Ok(()),
        }
    }

    /// Value of the norm on an s-number curve.
    pub fn eval(&self, mu: &SNumberCurve) -> Result<f64> {
        match self {
            NormSpec::KyFan(t) => ky_fan(mu, *t),
            NormSpec::FNorm(f) => Ok(f_norm(mu, f)),
            NormSpec::Lp(p) => lp_norm(mu, *p),
            NormSpec::FamilySup(fs) => family_sup(mu, fs),
            NormSpec::OperatorNorm => Ok(mu.head()),
        }
    }

    /// Value on a simple operator.
    pub fn eval_simple(&self, s: &SimpleOperator) -> Result<f64> {
        self.eval(&crate::snumbers::mu_of_simple(s))
    }

    /// Parses `op`, `kyfan:t=<v|inf>`, `lp:p=<v|inf>`, `fnorm:@<file>` or
    /// `famsup:@<file>`, reading referenced files from disk.
    pub fn parse(text: &str) -> Result<Self> {
        Self::parse_with(text, |path| {
            fs::read_to_string(path).map_err(|e| Error::Input(format!("cannot read {path}: {e}")))
        })
    }

    /// As [`NormSpec::parse`] with a caller-supplied file loader.
    pub fn parse_with<F>(text: &str, load: F) -> Result<Self>
    where
        F: Fn(&str) -> Result<String>,
    {
        let text = text.trim();
        let (kind, arg) = text.split_once(':').unwrap_or((text, ""));
        let spec = match kind {
            "op" if arg.is_empty() => NormSpec::OperatorNorm,
            "kyfan" => NormSpec::KyFan(parse_param(arg, "t", text)?),
            "lp" => NormSpec::Lp(parse_param(arg, "p", text)?),
            "fnorm" => {
                let doc = load(file_arg(arg, text)?)?;
                let f: StepFunction = serde_json::from_str(&doc)
                    .map_err(|e| Error::Parse(format!("{}: {e}", file_arg(arg, text).unwrap_or_default())))?;
                NormSpec::FNorm(WeightFunction::new(f)?)
            }
            "famsup" => {
                let path = file_arg(arg, text)?;
                let doc = load(path)?;
                let fs: Vec<StepFunction> =
                    serde_json::from_str(&doc).map_err(|e| Error::Parse(format!("{path}: {e}")))?;
                NormSpec::FamilySup(fs.into_iter().map(WeightFunction::new).collect::<Result<_>>()?)
            }
            _ => return Err(Error::Parse(format!("unknown norm spec {text:?}"))),
        };
        spec.validate()?;
        Ok(spec)
    }
}

fn parse_param(arg: &str, name: &str, whole: &str) -> Result<f64> {
    let value = arg
        .strip_prefix(name)
        .and_then(|r| r.strip_prefix('='))
        .ok_or_else(|| Error::Parse(format!("{whole:?}: expected {name}=<value>")))?;
    match value {
        "inf" | "infinity" => Ok(f64::INFINITY),
        v => v.parse().map_err(|_| Error::Parse(format!("{whole:?}: bad number {v:?}"))),
    }
}

fn file_arg<'a>(arg: &'a str, whole: &str) -> Result<&'a str> {
    arg.strip_prefix('@')
        .filter(|p| !p.is_empty())
        .ok_or_else(|| Error::Parse(format!("{whole:?}: expected @<file.json>")))
}

impl fmt::Display for NormSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = |x: f64| if x.is_infinite() { "inf".to_string() } else { format!("{x}") };
        match self {
            NormSpec::KyFan(t) => write!(f, "kyfan:t={}", num(*t)),
            NormSpec::Lp(p) => write!(f, "lp:p={}", num(*p)),
            NormSpec::FNorm(w) => write!(f, "fnorm[{} pieces]", w.as_step().pieces().len()),
            NormSpec::FamilySup(fs) => write!(f, "famsup[{} members]", fs.len()),
            NormSpec::OperatorNorm => write!(f, "op"),
        }
    }
}

/// Anything that assigns a norm to an s-number curve.
///
/// `dual_witnesses` lets a norm offer candidate maximizers for the dual
/// pairing of a simple operator whose terms are sorted nonincreasing. When
/// it returns `Some`, the best candidate is exact.
pub trait GaugeNorm {
    fn eval(&self, mu: &SNumberCurve) -> Result<f64>;

    fn dual_witnesses(&self, _sorted: &SimpleOperator) -> Option<Vec<Vec<f64>>> {
        None
    }

    fn label(&self) -> String;
}

impl GaugeNorm for NormSpec {
    fn eval(&self, mu: &SNumberCurve) -> Result<f64> {
        NormSpec::eval(self, mu)
    }

    fn dual_witnesses(&self, sorted: &SimpleOperator) -> Option<Vec<Vec<f64>>> {
        crate::duality::spec_witnesses(self, sorted)
    }

    fn label(&self) -> String {
        self.to_string()
    }
}

fn check_ky_fan_index(t: f64) -> Result<()> {
    if t.is_nan() || t < 0.0 {
        return Err(Error::Parameter(format!("Ky Fan index must lie in [0, inf], got {t}")));
    }
    Ok(())
}

fn check_lp_index(p: f64) -> Result<()> {
    if p.is_nan() || p < 1.0 {
        return Err(Error::Parameter(format!("L^p index must lie in [1, inf], got {p}")));
    }
    Ok(())
}

/// Ky Fan `t`-norm.
pub fn ky_fan(mu: &SNumberCurve, t: f64) -> Result<f64> {
    check_ky_fan_index(t)?;
    Ok(if t == 0.0 {
        mu.head()
    } else if t <= 1.0 {
        mu.integral_to(t) / t
    } else {
        mu.integral_to(t)
    })
}

/// `∫ f μ`.
pub fn f_norm(mu: &SNumberCurve, f: &WeightFunction) -> f64 {
    product_integral(mu, f.as_step())
}

/// `∫ f g` for two step functions, walking both piece lists.
pub fn product_integral(f: &StepFunction, g: &StepFunction) -> f64 {
    let (a, b) = (f.pieces(), g.pieces());
    let (mut i, mut j) = (0, 0);
    let (mut left_a, mut left_b) = (a.first().map_or(0.0, |p| p.length), b.first().map_or(0.0, |p| p.length));
    let mut sum = 0.0;
    while i < a.len() && j < b.len() {
        let step = left_a.min(left_b);
        sum += a[i].value * b[j].value * step;
        left_a -= step;
        left_b -= step;
        if left_a <= 0.0 {
            i += 1;
            left_a = a.get(i).map_or(0.0, |p| p.length);
        }
        if left_b <= 0.0 {
            j += 1;
            left_b = b.get(j).map_or(0.0, |p| p.length);
        }
    }
    sum
}

/// `(∫ μ^p)^{1/p}`; `μ_0` for `p = ∞`.
pub fn lp_norm(mu: &SNumberCurve, p: f64) -> Result<f64> {
    check_lp_index(p)?;
    if p.is_infinite() {
        return Ok(mu.head());
    }
    if p == 1.0 {
        return Ok(mu.total());
    }
    // scale by the sup to keep powers in range
    let top = mu.head();
    if top == 0.0 {
        return Ok(0.0);
    }
    let sum: f64 = mu.pieces().iter().map(|pc| (pc.value / top).powf(p) * pc.length).sum();
    Ok(top * sum.powf(1.0 / p))
}

/// `max_f ∫ f μ` over a nonempty family.
pub fn family_sup(mu: &SNumberCurve, fs: &[WeightFunction]) -> Result<f64> {
    if fs.is_empty() {
        return Err(Error::Parameter("empty f-norm family".into()));
    }
    Ok(fs.iter().map(|f| f_norm(mu, f)).fold(f64::NEG_INFINITY, f64::max))
}

/// Sum `Σ min{α_k, 1}(a_k − a_{k+1}) |||μ|||_(α_k)` over the pieces of `f`,
/// an independent route to [`f_norm`] through Ky Fan norms.
pub fn f_norm_by_ky_fan(mu: &SNumberCurve, f: &WeightFunction) -> f64 {
    let pieces = f.as_step().pieces();
    let mut alpha = 0.0;
    let mut sum = 0.0;
    for (k, p) in pieces.iter().enumerate() {
        alpha += p.length;
        let next = pieces.get(k + 1).map_or(0.0, |q| q.value);
        let kf = ky_fan(mu, alpha).expect("alpha > 0");
        sum += alpha.min(1.0) * (p.value - next) * kf;
    }
    sum
}

/// Points at which Ky Fan comparisons between two curves must be checked:
/// `0`, `1`, `∞`, every breakpoint of either curve, and 32 log-spaced
/// points in `[1e-3, 1e3]`.
pub fn comparison_grid(a: &SNumberCurve, b: &SNumberCurve) -> Vec<f64> {
    let mut grid = vec![0.0, 1.0, f64::INFINITY];
    grid.extend(a.breakpoints());
    grid.extend(b.breakpoints());
    grid.extend((0..32).map(|i| 10f64.powf(-3.0 + 6.0 * i as f64 / 31.0)));
    grid.sort_by(f64::total_cmp);
    grid.dedup();
    grid
}

/// Options for [`ky_fan_oracle`].
#[derive(Debug, Clone, Copy)]
pub struct OracleOptions {
    /// Random projections tried, half globally and half as local refinements.
    pub trials: usize,
    pub seed: u64,
    /// Also evaluate the SVD-aligned witness.
    pub include_witness: bool,
    /// Also evaluate every coordinate-subset projection.
    pub coordinate_subsets: bool,
}

impl Default for OracleOptions {
    fn default() -> Self {
        OracleOptions { trials: 2000, seed: 42, include_witness: true, coordinate_subsets: true }
    }
}

/// Lower bound for `sup{|Tr(U M E)| : U unitary, E a rank-k projection}`.
///
/// For each candidate projection `E` the best unitary is the adjoint of the
/// polar factor of `ME`, so the candidate value is `|Tr(U M E)|` with that
/// `U`. Candidates come from coordinate subsets, random subspaces with local
/// refinement, and (optionally) the top-`k` right singular subspace.
pub fn ky_fan_oracle(m: &ComplexMatrix, k: usize, opts: &OracleOptions) -> Result<f64> {
    let n = m.dim();
    if k == 0 || k > n {
        return Err(Error::Parameter(format!("projection rank must lie in 1..={n}, got {k}")));
    }
    let mut best: f64 = 0.0;

    if opts.include_witness {
        let svd = m.svd()?;
        let mut proj = ComplexMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = num_complex::Complex64::new(0.0, 0.0);
                for c in 0..k {
                    acc += svd.v[(i, c)] * svd.v[(j, c)].conj();
                }
                proj[(i, j)] = acc;
            }
        }
        let u = &svd.v * &svd.u.adjoint();
        best = best.max((&(&u * m) * &proj).trace().norm());
    }

    if opts.coordinate_subsets && binomial(n, k) <= 10_000 {
        for subset in subsets(n, k) {
            let mut d = vec![0.0; n];
            for i in subset {
                d[i] = 1.0;
            }
            best = best.max(pairing_with_best_unitary(m, &ComplexMatrix::diag(&d))?);
        }
    }

    if opts.trials > 0 {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        let global = opts.trials.div_ceil(2);
        let mut frame = random_unitary_with(n, &mut rng);
        let mut frame_value = subspace_value(m, &frame, k)?;
        for _ in 1..global {
            let q = random_unitary_with(n, &mut rng);
            let v = subspace_value(m, &q, k)?;
            if v > frame_value {
                frame = q;
                frame_value = v;
            }
        }
        let mut step = 0.5;
        for _ in global..opts.trials {
            let q = &frame * &near_identity(n, step, &mut rng);
            let v = subspace_value(m, &q, k)?;
            if v > frame_value {
                frame = q;
                frame_value = v;
                step = (step * 1.5).min(1.0);
            } else {
                step = (step * 0.9).max(1e-6);
            }
        }
        best = best.max(frame_value);
    }
    Ok(best)
}

// |Tr(U M E)| for E = projection onto the first k columns of `frame`.
fn subspace_value(m: &ComplexMatrix, frame: &ComplexMatrix, k: usize) -> Result<f64> {
    let n = m.dim();
    let mut proj = ComplexMatrix::zeros(n);
    for i in 0..n {
        for j in 0..n {
            let mut acc = num_complex::Complex64::new(0.0, 0.0);
            for c in 0..k {
                acc += frame[(i, c)] * frame[(j, c)].conj();
            }
            proj[(i, j)] = acc;
        }
    }
    pairing_with_best_unitary(m, &proj)
}

fn pairing_with_best_unitary(m: &ComplexMatrix, proj: &ComplexMatrix) -> Result<f64> {
    let me = m * proj;
    let u = me.polar_unitary()?.adjoint();
    Ok((&u * &me).trace().norm())
}

fn near_identity<R: Rng + ?Sized>(n: usize, step: f64, rng: &mut R) -> ComplexMatrix {
    let g = ComplexMatrix::random_gaussian(n, rng).scale(num_complex::Complex64::new(step, 0.0));
    let a = &ComplexMatrix::identity(n) + &g;
    // unitary part of I + step·G
    a.polar_unitary().unwrap_or_else(|_| ComplexMatrix::identity(n))
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1usize, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for i in start..n {
            current.push(i);
            rec(i + 1, n, k, current, out);
            current.pop();
        }
    }
    rec(0, n, k, &mut current, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::snumbers::mu_of_matrix;

    fn curve(p: &[(f64, f64)]) -> SNumberCurve {
        SNumberCurve::from_pieces(p.iter().copied()).unwrap()
    }

    #[test]
    fn ky_fan_examples() {
        let chi = curve(&[(1.0, 1.0)]);
        assert_eq!(ky_fan(&chi, 1.0).unwrap(), 1.0);
        let d = mu_of_matrix(&ComplexMatrix::diag(&[3.0, 2.0, 1.0])).unwrap();
        assert!((ky_fan(&d, 2.0).unwrap() - 5.0).abs() < 1e-12);
        assert!((ky_fan(&d, f64::INFINITY).unwrap() - 6.0).abs() < 1e-12);
        assert!((ky_fan(&d, 0.0).unwrap() - 3.0).abs() < 1e-12);
        assert_eq!(ky_fan(&curve(&[(1.0, 3.0)]), 0.5).unwrap(), 3.0);
        assert!(matches!(ky_fan(&chi, -1.0), Err(Error::Parameter(_))));
    }

    #[test]
    fn f_norm_examples() {
        let d = mu_of_matrix(&ComplexMatrix::diag(&[3.0, 2.0, 1.0])).unwrap();
        let chi = WeightFunction::unit_indicator();
        assert!((f_norm(&d, &chi) - ky_fan(&d, 1.0).unwrap()).abs() < 1e-14);
        let zero = WeightFunction::new(StepFunction::zero(crate::stepfn::Domain::Infinite)).unwrap();
        assert_eq!(f_norm(&d, &zero), 0.0);
        let f = WeightFunction::from_pieces([(1.0, 0.75), (1.0, 0.25)]).unwrap();
        assert!((f_norm(&curve(&[(2.0, 1.0)]), &f) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn weight_class_membership() {
        assert!(WeightFunction::from_pieces([(1.0, 1.0)]).is_ok());
        assert!(WeightFunction::from_pieces([(0.5, 2.0)]).is_ok());
        assert!(matches!(WeightFunction::from_pieces([(1.0, 1.1)]), Err(Error::Parameter(_))));
        assert!(matches!(WeightFunction::from_pieces([(1.0, 0.1), (1.0, 0.5)]), Err(Error::Parameter(_))));
        assert!(WeightFunction::from_pieces([(1.0, 1.0 + 1e-13)]).is_ok());
    }

    #[test]
    fn lp_examples() {
        let d = mu_of_matrix(&ComplexMatrix::diag(&[3.0, 4.0])).unwrap();
        assert!((lp_norm(&d, 2.0).unwrap() - 5.0).abs() < 1e-14);
        assert_eq!(lp_norm(&d, 1.0).unwrap(), ky_fan(&d, f64::INFINITY).unwrap());
        assert_eq!(lp_norm(&d, f64::INFINITY).unwrap(), ky_fan(&d, 0.0).unwrap());
        assert!(matches!(lp_norm(&d, 0.5), Err(Error::Parameter(_))));
        assert_eq!(lp_norm(&SNumberCurve::zero(), 3.0).unwrap(), 0.0);
    }

    #[test]
    fn family_sup_examples() {
        let d = mu_of_matrix(&ComplexMatrix::diag(&[3.0, 2.0, 1.0])).unwrap();
        let chi = WeightFunction::unit_indicator();
        assert_eq!(family_sup(&d, std::slice::from_ref(&chi)).unwrap(), ky_fan(&d, 1.0).unwrap());
        let stair = WeightFunction::from_pieces([(1.0, 0.5), (1.0, 0.3), (1.0, 0.2)]).unwrap();
        let want = f_norm(&d, &chi).max(f_norm(&d, &stair));
        assert_eq!(family_sup(&d, &[chi, stair.clone()]).unwrap(), want);
        assert_eq!(family_sup(&d, std::slice::from_ref(&stair)).unwrap(), f_norm(&d, &stair));
        assert!(matches!(family_sup(&d, &[]), Err(Error::Parameter(_))));
    }

    #[test]
    fn decomposition_matches_direct_integral() {
        let mu = curve(&[(0.3, 5.0), (1.2, 2.0), (2.0, 0.5)]);
        let f = WeightFunction::from_pieces([(0.4, 1.5), (0.9, 0.4), (3.0, 0.1)]).unwrap();
        assert!((f_norm(&mu, &f) - f_norm_by_ky_fan(&mu, &f)).abs() < 1e-12);
    }

    #[test]
    fn spec_parsing() {
        assert_eq!(NormSpec::parse("op").unwrap(), NormSpec::OperatorNorm);
        assert_eq!(NormSpec::parse("kyfan:t=2").unwrap(), NormSpec::KyFan(2.0));
        assert_eq!(NormSpec::parse("kyfan:t=inf").unwrap(), NormSpec::KyFan(f64::INFINITY));
        assert_eq!(NormSpec::parse("lp:p=1.5").unwrap(), NormSpec::Lp(1.5));
        assert!(matches!(NormSpec::parse("lp:p=0.5"), Err(Error::Parameter(_))));
        assert!(matches!(NormSpec::parse("lp:q=2"), Err(Error::Parse(_))));
        assert!(matches!(NormSpec::parse("schatten"), Err(Error::Parse(_))));
        let loader = |path: &str| match path {
            "f.json" => Ok(r#"{"domain": "inf", "pieces": [[1, 0.5], [2, 0.25]]}"#.to_string()),
            "fam.json" => Ok(r#"[{"domain": "inf", "pieces": [[1, 1]]}]"#.to_string()),
            _ => Err(Error::Input("missing".into())),
        };
        assert!(matches!(NormSpec::parse_with("fnorm:@f.json", loader).unwrap(), NormSpec::FNorm(_)));
        match NormSpec::parse_with("famsup:@fam.json", loader).unwrap() {
            NormSpec::FamilySup(fs) => assert_eq!(fs.len(), 1),
            other => panic!("unexpected {other:?}"),
        }
        assert!(NormSpec::parse_with("fnorm:@nope.json", loader).is_err());
        assert_eq!(NormSpec::Lp(f64::INFINITY).to_string(), "lp:p=inf");
    }

    #[test]
    fn oracle_witness_is_exact() {
        let m = ComplexMatrix::diag(&[3.0, 2.0, 1.0]);
        let opts = OracleOptions { trials: 0, coordinate_subsets: false, ..Default::default() };
        assert!((ky_fan_oracle(&m, 2, &opts).unwrap() - 5.0).abs() < 1e-12);
        assert!(matches!(ky_fan_oracle(&m, 4, &opts), Err(Error::Parameter(_))));
        assert!(matches!(ky_fan_oracle(&m, 0, &opts), Err(Error::Parameter(_))));
    }

    #[test]
    fn oracle_full_rank_is_trace_norm() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let m = ComplexMatrix::random_gaussian(4, &mut rng);
        let opts = OracleOptions { trials: 10, include_witness: false, ..Default::default() };
        let got = ky_fan_oracle(&m, 4, &opts).unwrap();
        assert!((got - m.trace_norm().unwrap()).abs() < 1e-10);
    }

    #[test]
    fn subsets_enumerate() {
        assert_eq!(subsets(4, 2).len(), 6);
        assert_eq!(binomial(6, 3), 20);
    }
}
