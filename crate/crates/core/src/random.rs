//! Seeded generators for operands: step functions, s-number curves, weights
//! in the class `F`, simple operators and matrices.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::linalg::ComplexMatrix;
use crate::norms::WeightFunction;
use crate::snumbers::{SNumberCurve, SimpleOperator};
use crate::stepfn::{Domain, StepFunction};

/// The generator used throughout the crate.
pub type SeededRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Step function with 1–`max_pieces` pieces; values sometimes repeat or
/// vanish so that merging and level-set ties get exercised. A finite
/// domain is sized to cover the pieces with some zero tail left over.
pub fn step_function<R: Rng + ?Sized>(rng: &mut R, finite: bool, max_pieces: usize) -> StepFunction {
    let count = rng.random_range(1..=max_pieces.max(1));
    let mut palette: Vec<f64> = (0..count).map(|_| round_quarter(rng.random_range(0.0..5.0))).collect();
    palette.push(0.0);
    let mut pieces = Vec::with_capacity(count);
    for _ in 0..count {
        let value = if rng.random_bool(0.25) {
            palette[rng.random_range(0..palette.len())]
        } else {
            rng.random_range(0.0..5.0)
        };
        pieces.push((rng.random_range(0.05..2.0), value));
    }
    let domain = if finite {
        let total: f64 = pieces.iter().map(|p| p.0).sum();
        Domain::Finite(total * rng.random_range(1.0..1.5))
    } else {
        Domain::Infinite
    };
    StepFunction::new(domain, pieces).expect("generated pieces are valid")
}

fn round_quarter(x: f64) -> f64 {
    (x * 4.0).round() / 4.0
}

/// Random s-number curve with up to `max_pieces` pieces.
pub fn curve<R: Rng + ?Sized>(rng: &mut R, max_pieces: usize) -> SNumberCurve {
    crate::snumbers::mu_of_step(&step_function(rng, false, max_pieces))
}

/// Random member of `F`: 1–8 pieces with log-uniform breakpoints in
/// `(1e-2, 1e2)`, decreasing values, rescaled so `∫_0^1 f ≤ 1`.
pub fn weight<R: Rng + ?Sized>(rng: &mut R) -> WeightFunction {
    let count = rng.random_range(1..=8);
    let mut ends: Vec<f64> = (0..count).map(|_| 10f64.powf(rng.random_range(-2.0..2.0))).collect();
    ends.sort_by(f64::total_cmp);
    ends.dedup();
    let mut values: Vec<f64> = (0..ends.len()).map(|_| rng.random_range(0.01..2.0)).collect();
    values.sort_by(|a, b| b.total_cmp(a));
    let mut start = 0.0;
    let pieces: Vec<(f64, f64)> = ends
        .iter()
        .zip(&values)
        .map(|(&end, &v)| {
            let p = (end - start, v);
            start = end;
            p
        })
        .collect();
    let f = StepFunction::infinite(pieces).expect("generated pieces are valid");
    let head = f.integral_to(1.0);
    let f = if head > 1.0 { f.scale(1.0 / head).expect("positive scale") } else { f };
    // scaling can overshoot by one ulp
    let head = f.integral_to(1.0);
    let f = if head > 1.0 { f.scale((1.0 - 1e-15) / head).expect("positive scale") } else { f };
    WeightFunction::new(f).expect("generated weights lie in F")
}

/// Random simple operator with `n` terms, values in `[0, 5)` and weights in
/// `[0.2, 2)`.
pub fn simple<R: Rng + ?Sized>(rng: &mut R, n: usize) -> SimpleOperator {
    SimpleOperator::new((0..n).map(|_| (rng.random_range(0.0..5.0), rng.random_range(0.2..2.0))))
        .expect("generated terms are valid")
}

/// Simple operator with unit weights, as the diagonal of a matrix.
pub fn unit_simple<R: Rng + ?Sized>(rng: &mut R, n: usize) -> SimpleOperator {
    SimpleOperator::unit_weights(&(0..n).map(|_| rng.random_range(0.0..5.0)).collect::<Vec<_>>())
        .expect("generated terms are valid")
}

/// Complex Gaussian matrix.
pub fn matrix<R: Rng + ?Sized>(rng: &mut R, n: usize) -> ComplexMatrix {
    ComplexMatrix::random_gaussian(n, rng)
}
