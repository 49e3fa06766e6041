//! Majorization: Hardy–Littlewood–Pólya pairing, Ky Fan dominance, the
//! transfer of dominance to every f-norm, and the reconstruction of a gauge
//! norm as a supremum of f-norms.
//!
//! # Exactness of the dominance test
//!
//! `t ↦ ∫_0^t μ(s) ds` is continuous and piecewise linear with kinks only
//! at the breakpoints of `μ`. For two curves the difference of these
//! integrals is therefore piecewise linear on the merged breakpoint grid and
//! attains its maximum over any interval at a grid point. Ky Fan norms are
//! these integrals (divided by `t` on `(0, 1]`, which does not change the
//! sign of a difference), and the `t = 0` case is the comparison of `μ_0`.
//! Checking `{0, 1, ∞}` together with every breakpoint of both curves thus
//! decides `|||S|||_(t) ≤ |||T|||_(t)` for all `t ∈ [0, ∞]` exactly.

use rand::Rng;
use serde::{Serialize, Serializer};

use crate::duality::{dual_of_curve, representing_weight, DualOptions};
use crate::error::{Error, Result};
use crate::norms::{f_norm, ky_fan, product_integral, NormSpec};
use crate::random;
use crate::snumbers::SNumberCurve;
use crate::stepfn::{Domain, Piece, StepFunction};

/// Slack allowed in a Ky Fan comparison.
pub const DOMINANCE_TOL: f64 = 1e-10;
/// Slack allowed in an f-norm comparison under transfer.
pub const TRANSFER_TOL: f64 = 1e-12;

/// Evidence for or against Ky Fan dominance of `S` by `T`.
#[derive(Debug, Clone, Serialize)]
pub struct DominanceReport {
    pub dominates: bool,
    #[serde(serialize_with = "serialize_reals")]
    pub checked_breakpoints: Vec<f64>,
    /// Largest `|||S|||_(t) − |||T|||_(t)` over the grid, floored at zero.
    pub max_violation: f64,
    /// Number of random f-norms tested; zero when no transfer was run.
    pub transfer_family_size: usize,
    /// `None` when no transfer was run.
    pub transfer_holds: Option<bool>,
    /// Largest `|||S|||_f − |||T|||_f` over the family, floored at zero.
    pub transfer_max_violation: f64,
}

pub(crate) fn serialize_real<S: Serializer>(x: &f64, s: S) -> std::result::Result<S::Ok, S::Error> {
    if x.is_infinite() {
        s.serialize_str(if *x > 0.0 { "inf" } else { "-inf" })
    } else {
        s.serialize_f64(*x)
    }
}

fn serialize_reals<S: Serializer>(xs: &[f64], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(xs.len()))?;
    for &x in xs {
        if x.is_infinite() {
            seq.serialize_element("inf")?;
        } else {
            seq.serialize_element(&x)?;
        }
    }
    seq.end()
}

/// `Σ a_k* b_k*` with both lists sorted nonincreasing, the maximum of
/// `Σ a_k b_π(k)` over all permutations `π`.
pub fn hlp_pair_max(a: &[f64], b: &[f64]) -> Result<f64> {
    if a.len() != b.len() {
        return Err(Error::Input(format!("length mismatch: {} vs {}", a.len(), b.len())));
    }
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    a.sort_by(|x, y| y.total_cmp(x));
    b.sort_by(|x, y| y.total_cmp(x));
    Ok(a.iter().zip(&b).map(|(x, y)| x * y).sum())
}

/// The exhaustive Ky Fan grid for a pair of curves.
pub fn dominance_grid(s: &SNumberCurve, t: &SNumberCurve) -> Vec<f64> {
    let mut grid = vec![0.0, 1.0, f64::INFINITY];
    grid.extend(s.breakpoints());
    grid.extend(t.breakpoints());
    grid.sort_by(f64::total_cmp);
    grid.dedup();
    grid
}

/// Decides `|||S|||_(t) ≤ |||T|||_(t)` for every `t ∈ [0, ∞]`.
pub fn ky_fan_dominates(mu_s: &SNumberCurve, mu_t: &SNumberCurve) -> DominanceReport {
    ky_fan_dominates_with(mu_s, mu_t, DOMINANCE_TOL)
}

/// [`ky_fan_dominates`] with an explicit slack.
pub fn ky_fan_dominates_with(mu_s: &SNumberCurve, mu_t: &SNumberCurve, tol: f64) -> DominanceReport {
    let grid = dominance_grid(mu_s, mu_t);
    let mut worst: f64 = 0.0;
    for &t in &grid {
        let ks = ky_fan(mu_s, t).expect("grid points are nonnegative");
        let kt = ky_fan(mu_t, t).expect("grid points are nonnegative");
        worst = worst.max(ks - kt);
    }
    DominanceReport {
        dominates: worst <= tol,
        checked_breakpoints: grid,
        max_violation: worst,
        transfer_family_size: 0,
        transfer_holds: None,
        transfer_max_violation: 0.0,
    }
}

/// Checks `|||S|||_f ≤ |||T|||_f` on `family_size` random weights `f ∈ F`,
/// given Ky Fan dominance.
pub fn dominance_transfer(
    mu_s: &SNumberCurve,
    mu_t: &SNumberCurve,
    family_size: usize,
    seed: u64,
) -> Result<DominanceReport> {
    let mut report = ky_fan_dominates(mu_s, mu_t);
    if !report.dominates {
        return Err(Error::Precondition(format!(
            "S is not Ky Fan dominated by T (violation {:.3e}); the transfer claim is untestable",
            report.max_violation
        )));
    }
    let mut rng = random::rng(seed);
    let mut worst: f64 = 0.0;
    for _ in 0..family_size {
        let f = random::weight(&mut rng);
        worst = worst.max(f_norm(mu_s, &f) - f_norm(mu_t, &f));
    }
    report.transfer_family_size = family_size;
    report.transfer_holds = Some(worst <= TRANSFER_TOL);
    report.transfer_max_violation = worst;
    Ok(report)
}

#[derive(Debug, Clone, Copy)]
pub struct ReconstructOptions {
    pub samples: usize,
    pub seed: u64,
    /// Also evaluate the norm's analytic extremizer.
    pub inject_extremizer: bool,
}

impl Default for ReconstructOptions {
    fn default() -> Self {
        ReconstructOptions { samples: 10_000, seed: 42, inject_extremizer: true }
    }
}

/// Sup-of-f-norms estimate next to the directly evaluated norm.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct Reconstruction {
    pub estimate: f64,
    pub truth: f64,
}

/// Estimates `|||μ|||` as `sup{∫ μ_s(X) μ ds : |||X|||^# ≤ 1}` by sampling
/// nonincreasing step functions `X`, scaling each into the dual unit ball.
pub fn reconstruct_norm(mu: &SNumberCurve, norm: &NormSpec, opts: &ReconstructOptions) -> Result<Reconstruction> {
    norm.validate()?;
    if matches!(norm, NormSpec::FamilySup(_)) {
        return Err(Error::Parameter("reconstruction needs a norm with a computable dual; famsup has none".into()));
    }
    let truth = norm.eval(mu)?;
    if mu.is_zero() {
        return Ok(Reconstruction { estimate: 0.0, truth });
    }
    let dual_opts = DualOptions { budget: 64, seed: opts.seed, ..Default::default() };
    let score = |x: &StepFunction| -> Result<Option<f64>> {
        let curve = crate::snumbers::mu_of_step(x);
        let d = dual_of_curve(&curve, norm, &dual_opts)?.value;
        Ok((d > 0.0).then(|| product_integral(mu, &curve) / d))
    };

    let mut best = 0.0f64;
    if opts.inject_extremizer {
        if let Some(x) = extremizer(mu, norm) {
            if let Some(v) = score(&x)? {
                best = best.max(v);
            }
        }
    }

    if opts.samples > 0 {
        let mut rng = random::rng(opts.seed);
        let anchors = anchor_points(mu);
        let global = opts.samples.div_ceil(2);
        let mut current = sample_curve(&anchors, &mut rng);
        let mut current_score = score(&current)?.unwrap_or(0.0);
        for _ in 1..global {
            let x = sample_curve(&anchors, &mut rng);
            if let Some(v) = score(&x)? {
                if v > current_score {
                    current = x;
                    current_score = v;
                }
            }
        }
        let mut spread = 0.5;
        for _ in global..opts.samples {
            let x = perturb(&current, spread, &mut rng);
            match score(&x)? {
                Some(v) if v > current_score => {
                    current = x;
                    current_score = v;
                    spread = (spread * 1.5).min(1.0);
                }
                _ => spread = (spread * 0.95).max(1e-6),
            }
        }
        best = best.max(current_score);
    }
    Ok(Reconstruction { estimate: best, truth })
}

/// The element of the dual unit ball (up to scale) that attains the norm.
fn extremizer(mu: &SNumberCurve, norm: &NormSpec) -> Option<StepFunction> {
    let support = mu.support_end();
    match norm {
        NormSpec::Lp(p) if *p > 1.0 && p.is_finite() => {
            let raw = mu.pieces().iter().map(|pc| Piece { length: pc.length, value: pc.value.powf(p - 1.0) }).collect();
            Some(StepFunction::from_raw(Domain::Infinite, raw))
        }
        NormSpec::Lp(p) if p.is_infinite() => first_piece(mu),
        NormSpec::KyFan(t) if *t == 0.0 => first_piece(mu),
        NormSpec::OperatorNorm => first_piece(mu),
        spec => representing_weight(spec, support),
    }
}

fn first_piece(mu: &SNumberCurve) -> Option<StepFunction> {
    mu.pieces().first().and_then(|p| StepFunction::indicator(p.length, 1.0).ok())
}

// Candidate breakpoints: the curve's own, the unit, and their neighbourhood.
fn anchor_points(mu: &SNumberCurve) -> Vec<f64> {
    let mut pts = mu.breakpoints();
    pts.push(1.0);
    pts.sort_by(f64::total_cmp);
    pts.dedup();
    pts
}

fn sample_curve<R: Rng + ?Sized>(anchors: &[f64], rng: &mut R) -> StepFunction {
    let hi = anchors.last().copied().unwrap_or(1.0) * 2.0;
    let count = rng.random_range(1..=8);
    let mut ends: Vec<f64> = (0..count)
        .map(|_| {
            if rng.random_bool(0.5) {
                anchors[rng.random_range(0..anchors.len())]
            } else {
                rng.random_range(0.0..hi).max(1e-6)
            }
        })
        .collect();
    ends.sort_by(f64::total_cmp);
    ends.dedup();
    let values = decreasing_values(ends.len(), rng);
    from_ends(&ends, &values)
}

fn decreasing_values<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Vec<f64> {
    let mut acc = 0.0;
    let mut out: Vec<f64> = (0..n)
        .map(|_| {
            acc += if rng.random_bool(0.7) { -(1.0 - rng.random::<f64>()).ln() } else { 0.0 };
            acc
        })
        .collect();
    if acc == 0.0 {
        out.iter_mut().for_each(|v| *v = 1.0);
    }
    out.reverse();
    out
}

fn from_ends(ends: &[f64], values: &[f64]) -> StepFunction {
    let mut start = 0.0;
    let raw = ends
        .iter()
        .zip(values)
        .filter_map(|(&end, &v)| {
            let length = end - start;
            start = end;
            (length > 0.0).then_some(Piece { length, value: v })
        })
        .collect();
    StepFunction::from_raw(Domain::Infinite, raw)
}

// Jitters one breakpoint or one value level of a nonincreasing step function.
fn perturb<R: Rng + ?Sized>(x: &StepFunction, spread: f64, rng: &mut R) -> StepFunction {
    let mut ends = x.breakpoints();
    let mut values: Vec<f64> = x.pieces().iter().map(|p| p.value).collect();
    if ends.is_empty() {
        return x.clone();
    }
    let k = rng.random_range(0..ends.len());
    if rng.random_bool(0.5) {
        let lo = if k == 0 { 0.0 } else { ends[k - 1] };
        let hi = ends.get(k + 1).copied().unwrap_or(ends[k] * (1.0 + 2.0 * spread));
        let target = ends[k] + rng.random_range(-spread..spread) * (hi - lo);
        ends[k] = target.clamp(lo + (hi - lo) * 1e-9, hi);
    } else {
        let lo = values.get(k + 1).copied().unwrap_or(0.0);
        let hi = if k == 0 { values[0] * (1.0 + 2.0 * spread) + spread } else { values[k - 1] };
        let target = values[k] + rng.random_range(-spread..spread) * (hi - lo).max(1e-12);
        values[k] = target.clamp(lo, hi);
    }
    from_ends(&ends, &values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::ComplexMatrix;
    use crate::snumbers::mu_of_matrix;

    fn diag(values: &[f64]) -> SNumberCurve {
        mu_of_matrix(&ComplexMatrix::diag(values)).unwrap()
    }

    #[test]
    fn hlp_examples() {
        assert_eq!(hlp_pair_max(&[3.0, 1.0], &[2.0, 5.0]).unwrap(), 17.0);
        assert_eq!(hlp_pair_max(&[3.0, 2.0, 1.0], &[3.0, 2.0, 1.0]).unwrap(), 14.0);
        assert!(matches!(hlp_pair_max(&[1.0], &[1.0, 2.0]), Err(Error::Input(_))));
    }

    #[test]
    fn dominance_examples() {
        let t = diag(&[2.0, 1.0]);
        assert!(ky_fan_dominates(&t, &t).dominates);
        assert!(ky_fan_dominates(&diag(&[1.0, 1.0]), &t).dominates);
        let r = ky_fan_dominates(&diag(&[2.0, 0.0]), &diag(&[1.0, 1.0]));
        assert!(!r.dominates);
        assert!((r.max_violation - 1.0).abs() < 1e-12);
        assert!(r.checked_breakpoints.contains(&f64::INFINITY));
    }

    #[test]
    fn transfer_examples() {
        let t = diag(&[2.0, 1.0]);
        let same = dominance_transfer(&t, &t, 50, 1).unwrap();
        assert_eq!(same.transfer_holds, Some(true));
        let r = dominance_transfer(&diag(&[1.0, 1.0]), &t, 100, 2).unwrap();
        assert_eq!(r.transfer_holds, Some(true));
        assert_eq!(r.transfer_family_size, 100);
        let err = dominance_transfer(&diag(&[2.0, 0.0]), &diag(&[1.0, 1.0]), 10, 3).unwrap_err();
        assert!(matches!(err, Error::Precondition(_)));
    }

    #[test]
    fn report_serializes_infinity() {
        let r = ky_fan_dominates(&diag(&[1.0]), &diag(&[1.0]));
        let json = serde_json::to_string(&r).unwrap();
        assert!(json.contains("\"inf\""), "{json}");
    }

    #[test]
    fn reconstruct_with_extremizer() {
        let opts = ReconstructOptions { samples: 0, ..Default::default() };
        let mu = diag(&[3.0, 4.0]);
        let r = reconstruct_norm(&mu, &NormSpec::Lp(2.0), &opts).unwrap();
        assert!((r.estimate - 5.0).abs() < 1e-9 && (r.truth - 5.0).abs() < 1e-12);
        let r = reconstruct_norm(&mu, &NormSpec::KyFan(1.0), &opts).unwrap();
        assert!((r.estimate - r.truth).abs() < 1e-9);
        let mu = SNumberCurve::from_pieces([(2.0, 1.0)]).unwrap();
        let r = reconstruct_norm(&mu, &NormSpec::Lp(1.0), &opts).unwrap();
        assert!((r.truth - 2.0).abs() < 1e-12 && (r.estimate - 2.0).abs() < 1e-9);
    }

    #[test]
    fn reconstruct_sampled_lower_bound() {
        let mu = SNumberCurve::from_pieces([(2.0, 1.0)]).unwrap();
        let opts = ReconstructOptions { samples: 10_000, inject_extremizer: false, seed: 4 };
        let r = reconstruct_norm(&mu, &NormSpec::Lp(1.0), &opts).unwrap();
        assert!(r.estimate <= r.truth + 1e-9);
        assert!(r.estimate >= 1.98, "{r:?}");
    }

    #[test]
    fn reconstruct_rejects_family_sup() {
        let spec = NormSpec::FamilySup(vec![crate::norms::WeightFunction::unit_indicator()]);
        let mu = diag(&[1.0]);
        assert!(matches!(reconstruct_norm(&mu, &spec, &ReconstructOptions::default()), Err(Error::Parameter(_))));
    }
}
