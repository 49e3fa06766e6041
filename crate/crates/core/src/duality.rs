//! Dual norms `|||T|||^# = sup{|τ(TX)| : |||X||| ≤ 1}`.
//!
//! For a positive simple operator `a = Σ a_k E_k` the supremum may be taken
//! over operators `b = Σ b_k E_k` on the same projections, and (after sorting
//! `a` nonincreasingly) over nonincreasing `b` only: averaging any admissible
//! `b` over the level sets of `a` keeps the pairing and does not increase a
//! symmetric gauge norm. [`dual_norm`] searches that cone:
//!
//! 1. draw random nonincreasing directions (exponential increments summed
//!    from the tail) and rescale each onto the unit sphere of the norm;
//! 2. refine the best direction by cyclic coordinate ascent on the
//!    increments with step halving;
//! 3. optionally evaluate the norm's analytic candidates, which makes the
//!    result exact for Ky Fan, `L^p` and f-norms.
//!
//! Closed forms are provided for the Ky Fan and `L^p` duals.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;
use crate::norms::{lp_norm, GaugeNorm, NormSpec};
use crate::snumbers::{mu_of_matrix, mu_of_simple, SNumberCurve, SimpleOperator};
use crate::stepfn::StepFunction;

/// Default number of sampled directions.
pub const DEFAULT_BUDGET: usize = 4000;
/// Step size at which coordinate ascent stops.
pub const ASCENT_STOP: f64 = 1e-10;

/// How a dual value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DualMethod {
    ClosedForm,
    WitnessExact,
    SampledLowerBound,
}

/// Result of a dual-norm evaluation.
#[derive(Debug, Clone, Serialize)]
pub struct DualEstimate {
    pub value: f64,
    /// Maximizing `b` with unit norm, on the terms of `a` sorted nonincreasing.
    pub witness: SimpleOperator,
    pub method: DualMethod,
    pub trials_used: usize,
}

#[derive(Debug, Clone, Copy)]
pub struct DualOptions {
    pub budget: usize,
    pub seed: u64,
    /// Evaluate the norm's analytic candidates as well as the samples.
    pub inject_witness: bool,
    /// Budget of each inner dual evaluation inside [`second_dual`].
    pub inner_budget: usize,
}

impl Default for DualOptions {
    fn default() -> Self {
        DualOptions { budget: DEFAULT_BUDGET, seed: 42, inject_witness: true, inner_budget: 64 }
    }
}

/// Estimate of `sup{Σ a_k b_k τ_k : b ≥ 0, |||b||| ≤ 1}`.
pub fn dual_norm(a: &SimpleOperator, norm: &dyn GaugeNorm, opts: &DualOptions) -> Result<DualEstimate> {
    if opts.budget == 0 {
        return Err(Error::Parameter("dual search budget must be at least 1".into()));
    }
    let sorted = a.sorted();
    let n = sorted.len();
    if n == 0 || sorted.terms()[0].value == 0.0 {
        return Ok(DualEstimate {
            value: 0.0,
            witness: sorted.with_values(&vec![0.0; n])?,
            method: DualMethod::WitnessExact,
            trials_used: 0,
        });
    }
    let problem = ConeProblem { a: &sorted, norm };
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut evals = 0usize;

    // increments: b_k = Σ_{j ≥ k} w_j
    let mut best_w: Option<Vec<f64>> = None;
    let mut best = f64::NEG_INFINITY;
    for _ in 0..opts.budget {
        let w = random_increments(n, &mut rng);
        evals += 1;
        if let Some(r) = problem.ratio(&increments_to_values(&w))? {
            if r > best {
                best = r;
                best_w = Some(w);
            }
        }
    }
    // exact witnesses make the local ascent redundant
    let witnesses = if opts.inject_witness { norm.dual_witnesses(&sorted) } else { None };
    if witnesses.is_none() {
        if let Some(w) = best_w.take() {
            let (w, r, used) = problem.ascend(w, best)?;
            evals += used;
            best = r;
            best_w = Some(w);
        }
    }
    let mut best_b = best_w.map(|w| increments_to_values(&w));
    let mut method = DualMethod::SampledLowerBound;

    if let Some(candidates) = witnesses {
        method = DualMethod::WitnessExact;
        for b in candidates {
            evals += 1;
            if let Some(r) = problem.ratio(&b)? {
                if r > best {
                    best = r;
                    best_b = Some(b);
                }
            }
        }
    }

    let b = best_b.ok_or_else(|| Error::Numerical("no admissible direction found".into()))?;
    let scale = problem.norm_of(&b)?;
    let unit: Vec<f64> = b.iter().map(|x| x / scale).collect();
    Ok(DualEstimate { value: best, witness: sorted.with_values(&unit)?, method, trials_used: evals })
}

struct ConeProblem<'a> {
    a: &'a SimpleOperator,
    norm: &'a dyn GaugeNorm,
}

impl ConeProblem<'_> {
    fn norm_of(&self, b: &[f64]) -> Result<f64> {
        self.norm.eval(&mu_of_simple(&self.a.with_values(b)?))
    }

    // pairing of the direction rescaled to the unit sphere
    fn ratio(&self, b: &[f64]) -> Result<Option<f64>> {
        let nb = self.norm_of(b)?;
        if nb.is_nan() || nb <= 0.0 || nb.is_infinite() {
            return Ok(None);
        }
        let pairing: f64 = self.a.terms().iter().zip(b).map(|(t, x)| t.value * x * t.weight).sum();
        Ok(Some(pairing / nb))
    }

    // cyclic coordinate ascent over the increments, step halving
    fn ascend(&self, mut w: Vec<f64>, mut best: f64) -> Result<(Vec<f64>, f64, usize)> {
        let n = w.len();
        let mut evals = 0;
        let mut h = 0.25;
        let mut cycles = 0;
        while h >= ASCENT_STOP && cycles < 10_000 {
            cycles += 1;
            let total: f64 = w.iter().sum();
            let mut improved = false;
            for j in 0..n {
                let current = w[j];
                let options = [current + h * total, (current - h * total).max(0.0), 0.0];
                for &cand in &options {
                    if cand == current {
                        continue;
                    }
                    w[j] = cand;
                    evals += 1;
                    match self.ratio(&increments_to_values(&w))? {
                        Some(r) if r > best * (1.0 + 1e-15) => {
                            best = r;
                            improved = true;
                            break;
                        }
                        _ => w[j] = current,
                    }
                }
            }
            if !improved {
                h *= 0.5;
            }
        }
        Ok((w, best, evals))
    }
}

fn random_increments<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Vec<f64> {
    // exponential weights with random sparsity so faces of the cone get hit
    let keep: f64 = rng.random_range(0.3..1.0);
    let mut w: Vec<f64> =
        (0..n).map(|_| if rng.random::<f64>() < keep { -(1.0 - rng.random::<f64>()).ln() } else { 0.0 }).collect();
    if w.iter().all(|&x| x == 0.0) {
        let j = rng.random_range(0..n);
        w[j] = 1.0;
    }
    w
}

fn increments_to_values(w: &[f64]) -> Vec<f64> {
    let mut b = vec![0.0; w.len()];
    let mut acc = 0.0;
    for k in (0..w.len()).rev() {
        acc += w[k];
        b[k] = acc;
    }
    b
}

/// Analytic dual candidates for the built-in norms, on terms sorted
/// nonincreasingly. Ky Fan, operator, `L^1`, `L^∞` and f-norms are linear
/// on the cone of nonincreasing coefficients, so the prefix indicators (the
/// cone's extreme rays) contain a maximizer; for `1 < p < ∞` the maximizer
/// is `b_k = a_k^{1/(p-1)}`.
pub(crate) fn spec_witnesses(spec: &NormSpec, sorted: &SimpleOperator) -> Option<Vec<Vec<f64>>> {
    let n = sorted.len();
    let prefixes = || (1..=n).map(|m| (0..n).map(|k| if k < m { 1.0 } else { 0.0 }).collect::<Vec<f64>>());
    match spec {
        NormSpec::KyFan(_) | NormSpec::OperatorNorm | NormSpec::FNorm(_) => Some(prefixes().collect()),
        NormSpec::Lp(p) if *p == 1.0 || p.is_infinite() => Some(prefixes().collect()),
        NormSpec::Lp(p) => {
            let mut out: Vec<Vec<f64>> = prefixes().collect();
            out.push(sorted.terms().iter().map(|t| t.value.powf(1.0 / (p - 1.0))).collect());
            Some(out)
        }
        NormSpec::FamilySup(_) => None,
    }
}

/// Closed form of the Ky Fan dual:
/// `max{t‖T‖, ‖T‖₁}` for `0 < t ≤ 1`, `max{‖T‖, ‖T‖₁/t}` for `1 < t ≤ ∞`.
pub fn ky_fan_dual_closed(mu: &SNumberCurve, t: f64) -> Result<f64> {
    if t.is_nan() || t <= 0.0 {
        return Err(Error::Parameter(format!(
            "Ky Fan dual closed form needs t > 0, got {t}; the operator-norm dual is the trace norm"
        )));
    }
    let op = mu.head();
    let trace = mu.total();
    Ok(if t <= 1.0 {
        (t * op).max(trace)
    } else if t.is_infinite() {
        op
    } else {
        op.max(trace / t)
    })
}

/// Conjugate exponent `q` with `1/p + 1/q = 1`.
pub fn lp_dual_index(p: f64) -> Result<f64> {
    if p.is_nan() || p < 1.0 {
        return Err(Error::Parameter(format!("L^p index must lie in [1, inf], got {p}")));
    }
    Ok(if p == 1.0 {
        f64::INFINITY
    } else if p.is_infinite() {
        1.0
    } else {
        p / (p - 1.0)
    })
}

/// `|||·|||^#` of a curve, in closed form where one is known and by
/// [`dual_norm`] on the curve's simple-operator form otherwise.
pub fn dual_of_curve(mu: &SNumberCurve, spec: &NormSpec, opts: &DualOptions) -> Result<DualEstimate> {
    let simple = curve_to_simple(mu)?;
    let closed = match spec {
        NormSpec::KyFan(t) if *t > 0.0 => Some(ky_fan_dual_closed(mu, *t)?),
        NormSpec::KyFan(_) | NormSpec::OperatorNorm => Some(mu.total()),
        NormSpec::Lp(p) => Some(lp_norm(mu, lp_dual_index(*p)?)?),
        _ => None,
    };
    match closed {
        Some(value) => Ok(DualEstimate {
            value,
            witness: simple.with_values(&vec![0.0; simple.len()])?,
            method: DualMethod::ClosedForm,
            trials_used: 0,
        }),
        None => dual_norm(&simple, spec, opts),
    }
}

/// A curve's pieces as a simple operator `(value, length)`.
pub fn curve_to_simple(mu: &SNumberCurve) -> Result<SimpleOperator> {
    SimpleOperator::new(mu.pieces().iter().map(|p| (p.value, p.length)))
}

/// The dual of a [`NormSpec`], evaluated through [`dual_norm`].
pub struct DualOf<'a> {
    pub inner: &'a NormSpec,
    pub opts: DualOptions,
}

impl GaugeNorm for DualOf<'_> {
    fn eval(&self, mu: &SNumberCurve) -> Result<f64> {
        Ok(dual_norm(&curve_to_simple(mu)?, self.inner, &self.opts)?.value)
    }

    fn dual_witnesses(&self, sorted: &SimpleOperator) -> Option<Vec<Vec<f64>>> {
        // the support functional of `a` for the inner norm
        match self.inner {
            NormSpec::Lp(p) if *p > 1.0 && p.is_finite() => {
                Some(vec![sorted.terms().iter().map(|t| t.value.powf(p - 1.0)).collect()])
            }
            NormSpec::Lp(p) if *p == 1.0 => Some(vec![vec![1.0; sorted.len()]]),
            spec => representing_weight(spec, sorted_support(sorted)).map(|f| vec![average_on_terms(&f, sorted)]),
        }
    }

    fn label(&self) -> String {
        format!("dual({})", self.inner)
    }
}

fn sorted_support(sorted: &SimpleOperator) -> f64 {
    sorted.weights().iter().sum()
}

/// The weight `f` with `|||T||| = ∫ f μ(T)` for the norms that are linear
/// on nonincreasing curves, truncated to `[0, support)` where needed.
pub fn representing_weight(spec: &NormSpec, support: f64) -> Option<StepFunction> {
    match spec {
        NormSpec::KyFan(t) if *t == 0.0 => None,
        NormSpec::KyFan(t) if *t <= 1.0 => StepFunction::indicator(*t, 1.0 / t).ok(),
        NormSpec::KyFan(t) => StepFunction::indicator(t.min(support), 1.0).ok(),
        NormSpec::Lp(p) if *p == 1.0 => StepFunction::indicator(support, 1.0).ok(),
        NormSpec::FNorm(f) => Some(f.as_step().clone()),
        _ => None,
    }
}

// averages `f` over the consecutive intervals of the sorted terms
fn average_on_terms(f: &StepFunction, sorted: &SimpleOperator) -> Vec<f64> {
    let mut start = 0.0;
    sorted
        .terms()
        .iter()
        .map(|t| {
            let v = f.integral_between(start, start + t.weight) / t.weight;
            start += t.weight;
            v
        })
        .collect()
}

/// `|||a|||^##`: the dual of the dual, with the inner dual evaluated by
/// [`dual_norm`] at every probe. The inner search always injects the
/// support-functional witnesses; `opts.inject_witness` governs the outer one.
pub fn second_dual(a: &SimpleOperator, norm: &NormSpec, opts: &DualOptions) -> Result<DualEstimate> {
    let inner = DualOptions { budget: opts.inner_budget.max(1), inject_witness: true, ..*opts };
    dual_norm(a, &DualOf { inner: norm, opts: inner }, opts)
}

/// Outcome of a Hölder check `‖ST‖₁ ≤ |||S||| · |||T|||^#`.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct HolderCheck {
    pub lhs: f64,
    pub rhs: f64,
    pub holds: bool,
}

/// Tolerance of the Hölder comparison.
pub const HOLDER_TOL: f64 = 1e-9;

pub fn holder_check(s: &ComplexMatrix, t: &ComplexMatrix, norm: &NormSpec) -> Result<HolderCheck> {
    holder_check_with(s, t, norm, &DualOptions::default())
}

pub fn holder_check_with(
    s: &ComplexMatrix,
    t: &ComplexMatrix,
    norm: &NormSpec,
    opts: &DualOptions,
) -> Result<HolderCheck> {
    let st = s.try_mul(t)?;
    let lhs = st.trace_norm()?;
    let rhs = norm.eval(&mu_of_matrix(s)?)? * dual_of_curve(&mu_of_matrix(t)?, norm, opts)?.value;
    Ok(HolderCheck { lhs, rhs, holds: lhs <= rhs + HOLDER_TOL })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn simple(pairs: &[(f64, f64)]) -> SimpleOperator {
        SimpleOperator::new(pairs.iter().copied()).unwrap()
    }

    fn curve(p: &[(f64, f64)]) -> SNumberCurve {
        SNumberCurve::from_pieces(p.iter().copied()).unwrap()
    }

    #[test]
    fn one_dimensional_dual() {
        let est = dual_norm(&simple(&[(1.0, 1.0)]), &NormSpec::Lp(1.0), &DualOptions::default()).unwrap();
        assert!((est.value - 1.0).abs() < 1e-12);
        assert!((est.witness.values()[0] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn l2_dual_is_euclidean() {
        let est = dual_norm(&simple(&[(3.0, 1.0), (4.0, 1.0)]), &NormSpec::Lp(2.0), &DualOptions::default()).unwrap();
        assert!((est.value - 5.0).abs() < 1e-12);
        assert_eq!(est.method, DualMethod::WitnessExact);
    }

    #[test]
    fn ky_fan_dual_of_identity() {
        let a = simple(&[(1.0, 1.0), (1.0, 1.0), (1.0, 1.0)]);
        let est = dual_norm(&a, &NormSpec::KyFan(2.0), &DualOptions::default()).unwrap();
        assert!((est.value - 1.5).abs() < 1e-12);
        let sampled =
            dual_norm(&a, &NormSpec::KyFan(2.0), &DualOptions { inject_witness: false, ..Default::default() }).unwrap();
        assert_eq!(sampled.method, DualMethod::SampledLowerBound);
        assert!(sampled.value <= 1.5 + 1e-9 && sampled.value >= 1.5 * 0.99);
    }

    #[test]
    fn empty_operator_has_zero_dual() {
        let est = dual_norm(&simple(&[]), &NormSpec::Lp(2.0), &DualOptions::default()).unwrap();
        assert_eq!(est.value, 0.0);
        assert!(est.witness.is_empty());
        let zero = dual_norm(&simple(&[(0.0, 2.0)]), &NormSpec::Lp(2.0), &DualOptions::default()).unwrap();
        assert_eq!(zero.value, 0.0);
    }

    #[test]
    fn zero_budget_rejected() {
        let opts = DualOptions { budget: 0, ..Default::default() };
        assert!(matches!(dual_norm(&simple(&[(1.0, 1.0)]), &NormSpec::Lp(2.0), &opts), Err(Error::Parameter(_))));
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(ky_fan_dual_closed(&curve(&[(1.0, 1.0)]), 1.0).unwrap(), 1.0);
        let d = mu_of_matrix(&ComplexMatrix::diag(&[3.0, 2.0, 1.0])).unwrap();
        assert!((ky_fan_dual_closed(&d, 2.0).unwrap() - 3.0).abs() < 1e-12);
        assert_eq!(ky_fan_dual_closed(&curve(&[(4.0, 1.0)]), 0.5).unwrap(), 4.0);
        assert!((ky_fan_dual_closed(&d, f64::INFINITY).unwrap() - 3.0).abs() < 1e-12);
        assert!(matches!(ky_fan_dual_closed(&d, 0.0), Err(Error::Parameter(_))));
    }

    #[test]
    fn conjugate_exponents() {
        assert_eq!(lp_dual_index(2.0).unwrap(), 2.0);
        assert_eq!(lp_dual_index(1.0).unwrap(), f64::INFINITY);
        assert_eq!(lp_dual_index(f64::INFINITY).unwrap(), 1.0);
        assert!((lp_dual_index(4.0).unwrap() - 4.0 / 3.0).abs() < 1e-15);
        assert!(matches!(lp_dual_index(0.9), Err(Error::Parameter(_))));
    }

    #[test]
    fn second_dual_examples() {
        let opts = DualOptions::default();
        let est = second_dual(&simple(&[(3.0, 1.0), (4.0, 1.0)]), &NormSpec::Lp(2.0), &opts).unwrap();
        assert!((est.value - 5.0).abs() < 1e-9);
        let est = second_dual(&simple(&[(2.0, 1.0), (1.0, 1.0)]), &NormSpec::Lp(1.0), &opts).unwrap();
        assert!((est.value - 3.0).abs() < 1e-9);
        for spec in [NormSpec::Lp(2.0), NormSpec::KyFan(1.0), NormSpec::KyFan(3.0), NormSpec::OperatorNorm] {
            let est = second_dual(&simple(&[(2.5, 1.0)]), &spec, &opts).unwrap();
            assert!((est.value - 2.5).abs() < 1e-9, "{spec}");
        }
    }

    #[test]
    fn holder_identity_equality() {
        let id = ComplexMatrix::identity(2);
        let check = holder_check(&id, &id, &NormSpec::Lp(2.0)).unwrap();
        assert!((check.lhs - 2.0).abs() < 1e-12);
        assert!((check.rhs - 2.0).abs() < 1e-12);
        assert!(check.holds);
    }

    #[test]
    fn holder_dimension_mismatch() {
        let err = holder_check(&ComplexMatrix::identity(2), &ComplexMatrix::identity(3), &NormSpec::Lp(2.0));
        assert!(matches!(err, Err(Error::Input(_))));
    }

    #[test]
    fn curve_dual_routes_agree() {
        let mu = curve(&[(0.5, 3.0), (1.5, 1.0)]);
        let opts = DualOptions::default();
        for spec in [NormSpec::KyFan(0.25), NormSpec::KyFan(2.0), NormSpec::Lp(3.0), NormSpec::OperatorNorm] {
            let closed = dual_of_curve(&mu, &spec, &opts).unwrap().value;
            let brute = dual_norm(&curve_to_simple(&mu).unwrap(), &spec, &opts).unwrap().value;
            assert!((closed - brute).abs() < 1e-9 * closed.max(1.0), "{spec}: {closed} vs {brute}");
        }
    }
}
