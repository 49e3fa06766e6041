//! The property-verification suite behind `gaugenorm verify`.
//!
//! Every check compares library output against an independent route to the
//! same number: a definition evaluated directly, a brute-force search, or an
//! identity computed with plain matrix products. Checks are grouped into ten
//! [`Criterion`]s; each criterion draws from its own seeded generator so
//! criteria can run concurrently and still report identical numbers.

use std::thread;

use num_complex::Complex64;
use rand::seq::SliceRandom;
use rand::Rng;
use serde::Serialize;

use crate::dominance::{dominance_transfer, hlp_pair_max, ky_fan_dominates, reconstruct_norm, ReconstructOptions};
use crate::duality::{dual_norm, holder_check, ky_fan_dual_closed, second_dual, DualOptions};
use crate::error::{Error, Result};
use crate::linalg::{random_unitary_with, ComplexMatrix};
use crate::norms::{ky_fan, ky_fan_oracle, lp_norm, NormSpec, OracleOptions};
use crate::random::{self, SeededRng};
use crate::snumbers::{mu_of_matrix, mu_of_simple, SNumberCurve, SimpleOperator};
use crate::stepfn::{Piece, StepFunction};

/// One line of the verification table.
#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub criterion: u8,
    pub name: String,
    /// The property under test, in words.
    pub property: &'static str,
    pub trials: usize,
    pub violations: usize,
    #[serde(serialize_with = "crate::dominance::serialize_real")]
    pub max_deviation: f64,
    pub tolerance: f64,
    pub passed: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub seed: u64,
    pub checks: Vec<CheckResult>,
    pub passed: usize,
    pub failed: usize,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Criterion {
    Rearrangement,
    TracePower,
    KyFanOracle,
    KyFanDual,
    SecondDual,
    Holder,
    Hlp,
    Transfer,
    Reconstruction,
    Markov,
}

impl Criterion {
    pub const ALL: [Criterion; 10] = [
        Criterion::Rearrangement,
        Criterion::TracePower,
        Criterion::KyFanOracle,
        Criterion::KyFanDual,
        Criterion::SecondDual,
        Criterion::Holder,
        Criterion::Hlp,
        Criterion::Transfer,
        Criterion::Reconstruction,
        Criterion::Markov,
    ];

    pub fn number(self) -> u8 {
        Criterion::ALL.iter().position(|&c| c == self).expect("listed") as u8 + 1
    }

    pub fn title(self) -> &'static str {
        match self {
            Criterion::Rearrangement => "rearrangement properties",
            Criterion::TracePower => "trace-power identity",
            Criterion::KyFanOracle => "Ky Fan sup characterization",
            Criterion::KyFanDual => "Ky Fan dual closed forms",
            Criterion::SecondDual => "second-dual identity",
            Criterion::Holder => "Hölder inequality",
            Criterion::Hlp => "Hardy–Littlewood–Pólya",
            Criterion::Transfer => "dominance transfer",
            Criterion::Reconstruction => "sup-of-f-norms representation",
            Criterion::Markov => "Markov inequality",
        }
    }

    /// Wall-clock allowance for the criterion on a laptop-class machine.
    pub fn time_limit_secs(self) -> u64 {
        match self {
            Criterion::Rearrangement | Criterion::Hlp | Criterion::Markov => 5,
            Criterion::TracePower => 10,
            Criterion::KyFanOracle | Criterion::Holder => 30,
            Criterion::Transfer => 20,
            Criterion::KyFanDual | Criterion::SecondDual | Criterion::Reconstruction => 60,
        }
    }

    fn seed(self, base: u64) -> u64 {
        base.wrapping_add(u64::from(self.number()).wrapping_mul(0x9E37_79B9_7F4A_7C15))
    }

    pub fn run(self, seed: u64) -> Result<Vec<CheckResult>> {
        let mut rng = random::rng(self.seed(seed));
        let n = self.number();
        match self {
            Criterion::Rearrangement => rearrangement(n, &mut rng),
            Criterion::TracePower => trace_power(n, &mut rng),
            Criterion::KyFanOracle => ky_fan_characterization(n, &mut rng),
            Criterion::KyFanDual => ky_fan_duals(n, &mut rng),
            Criterion::SecondDual => second_duals(n, &mut rng),
            Criterion::Holder => holder(n, &mut rng),
            Criterion::Hlp => hlp(n, &mut rng),
            Criterion::Transfer => transfer(n, &mut rng),
            Criterion::Reconstruction => reconstruction(n, &mut rng),
            Criterion::Markov => markov(n, &mut rng),
        }
    }
}

/// Runs every criterion, fanning out across threads; output order and
/// values do not depend on scheduling.
pub fn run_all(seed: u64) -> Result<VerifyReport> {
    let results: Vec<Result<Vec<CheckResult>>> = thread::scope(|scope| {
        let handles: Vec<_> = Criterion::ALL.iter().map(|&c| scope.spawn(move || c.run(seed))).collect();
        handles
            .into_iter()
            .map(|h| h.join().unwrap_or_else(|_| Err(Error::Numerical("verification worker panicked".into()))))
            .collect()
    });
    let mut checks = Vec::new();
    for r in results {
        checks.extend(r?);
    }
    let passed = checks.iter().filter(|c| c.passed).count();
    let failed = checks.len() - passed;
    Ok(VerifyReport { seed, checks, passed, failed })
}

/// Renders the report as a fixed-width table.
pub fn render_table(report: &VerifyReport) -> String {
    let mut out = String::new();
    for c in &report.checks {
        out.push_str(&format!(
            "{:>2} {:<4} {:<44} trials={:<7} violations={:<4} max_dev={:.3e} tol={:.0e}\n",
            c.criterion,
            if c.passed { "PASS" } else { "FAIL" },
            c.name,
            c.trials,
            c.violations,
            c.max_deviation,
            c.tolerance
        ));
    }
    out.push_str(&format!("{} passed, {} failed\n", report.passed, report.failed));
    out
}

// accumulates one row of the table
struct Tally {
    criterion: u8,
    name: String,
    property: &'static str,
    tolerance: f64,
    trials: usize,
    violations: usize,
    max_deviation: f64,
}

impl Tally {
    fn new(criterion: u8, name: impl Into<String>, property: &'static str, tolerance: f64) -> Self {
        Tally { criterion, name: name.into(), property, tolerance, trials: 0, violations: 0, max_deviation: 0.0 }
    }

    fn deviation(&mut self, dev: f64) {
        self.trials += 1;
        if dev.is_nan() || dev > self.tolerance {
            self.violations += 1;
        }
        if dev.is_nan() {
            self.max_deviation = f64::NAN;
        } else if !self.max_deviation.is_nan() {
            self.max_deviation = self.max_deviation.max(dev);
        }
    }

    fn holds(&mut self, ok: bool) {
        self.deviation(if ok { 0.0 } else { f64::INFINITY });
    }

    fn finish(self) -> CheckResult {
        CheckResult {
            criterion: self.criterion,
            name: self.name,
            property: self.property,
            trials: self.trials,
            violations: self.violations,
            max_deviation: self.max_deviation,
            tolerance: self.tolerance,
            passed: self.violations == 0 && self.trials > 0,
        }
    }
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(1.0)
}

// ---- 1: rearrangement -------------------------------------------------------

// m({f ≥ v}) summed straight from the pieces
fn measure_at_least(f: &StepFunction, v: f64) -> f64 {
    f.pieces().iter().filter(|p| p.value >= v).map(|p| p.length).sum()
}

fn measure_above(f: &StepFunction, y: f64) -> f64 {
    f.pieces().iter().filter(|p| p.value > y).map(|p| p.length).sum()
}

/// `sup{y : m({f > y}) > x}`, evaluated from the definition.
pub fn rearrangement_by_definition(f: &StepFunction, x: f64) -> f64 {
    f.pieces().iter().map(|p| p.value).filter(|&v| v > 0.0 && measure_at_least(f, v) > x).fold(0.0, f64::max)
}

// pointwise sum of two functions on the first one's domain
fn pointwise_sum(f: &StepFunction, g: &StepFunction) -> StepFunction {
    let mut grid = f.merged_grid(g);
    grid.retain(|&x| x > 0.0 && x.is_finite());
    let mut start = 0.0;
    let pieces: Vec<Piece> = grid
        .iter()
        .map(|&end| {
            let p = Piece { length: end - start, value: f.value_at(start) + g.value_at(start) };
            start = end;
            p
        })
        .collect();
    StepFunction::from_raw(f.domain(), pieces)
}

fn distinct_values(f: &StepFunction) -> usize {
    let mut v: Vec<f64> = f.pieces().iter().map(|p| p.value).collect();
    if f.support_end() < f.domain().length() {
        v.push(0.0);
    }
    v.sort_by(f64::total_cmp);
    v.dedup();
    v.len()
}

fn rearrangement(n: u8, rng: &mut SeededRng) -> Result<Vec<CheckResult>> {
    const TOL: f64 = 1e-10;
    let mut shape = Tally::new(n, "rearrangement: nonincreasing, by definition", "f* = sup{y: m(f>y)>x}", TOL);
    let mut shift = Tally::new(n, "rearrangement: additive constant", "(f+c)* = f*+c on finite domains", TOL);
    let mut scale = Tally::new(n, "rearrangement: positive scaling", "(cf)* = c f*", TOL);
    let mut mono = Tally::new(n, "rearrangement: monotone", "f ≤ g implies f* ≤ g*", TOL);
    let mut contraction = Tally::new(n, "rearrangement: sup-norm contraction", "‖f*−g*‖∞ ≤ ‖f−g‖∞", TOL);
    let mut equi = Tally::new(n, "rearrangement: equimeasurable", "m(f>y) = m(f*>y)", TOL);
    let mut moments =
        Tally::new(n, "rearrangement: moments decide distribution", "equal moments imply equimeasurable", 0.0);
    let mut integral = Tally::new(n, "rearrangement: integral preserved", "∫f = ∫f*", TOL);

    for i in 0..1000 {
        let finite = i % 2 == 0;
        let f = random::step_function(rng, finite, 8);
        let r = f.rearrange();

        let mut dev: f64 = 0.0;
        if !r.is_nonincreasing() || r.domain() != f.domain() || r.rearrange() != r {
            dev = f64::INFINITY;
        }
        let mut probes = vec![0.0];
        let mut start = 0.0;
        for p in r.pieces() {
            probes.push(start + 0.5 * p.length);
            start += p.length;
        }
        probes.push(start + 1.0);
        for &x in &probes {
            dev = dev.max((r.value_at(x) - rearrangement_by_definition(&f, x)).abs());
        }
        shape.deviation(dev);

        let mut levels: Vec<f64> = f.pieces().iter().map(|p| p.value).collect();
        levels.push(0.0);
        let mut dev: f64 = if f.equimeasurable(&r) { 0.0 } else { f64::INFINITY };
        for &y in &levels {
            for y in [y, y + 1e-3, (y - 1e-3).max(0.0)] {
                dev = dev.max((measure_above(&f, y) - measure_above(&r, y)).abs());
            }
        }
        equi.deviation(dev);

        integral.deviation(rel(f.total_integral(), r.total_integral()));

        let c = rng.random_range(0.0..5.0);
        let lhs = f.scale(c)?.rearrange();
        let rhs = r.scale(c)?;
        scale.deviation(lhs.sup_distance(&rhs));

        if finite {
            let c = rng.random_range(0.0..3.0);
            let lhs = f.add_constant(c)?.rearrange();
            let rhs = r.add_constant(c)?;
            shift.deviation(lhs.sup_distance(&rhs) + (lhs.domain().length() - rhs.domain().length()).abs());

            // a rearranged copy shares every moment; a perturbed one rarely does
            let mut shuffled: Vec<(f64, f64)> = f.pieces().iter().map(|p| (p.length, p.value)).collect();
            shuffled.shuffle(rng);
            let g = StepFunction::new(f.domain(), shuffled)?;
            let mut h_pieces: Vec<(f64, f64)> = f.pieces().iter().map(|p| (p.length, p.value)).collect();
            if let Some(last) = h_pieces.last_mut() {
                last.1 += rng.random_range(0.0..0.5);
            }
            let h = StepFunction::new(f.domain(), h_pieces)?;
            for other in [&g, &h] {
                let count = distinct_values(&f) + distinct_values(other);
                let same = (1..=count).all(|k| {
                    let a = f.power_integral(k as f64).expect("integer exponent");
                    let b = other.power_integral(k as f64).expect("integer exponent");
                    rel(a, b) <= 1e-10
                });
                moments.holds(!same || f.equimeasurable(other));
            }
        } else {
            let h = random::step_function(rng, false, 8);
            let g = pointwise_sum(&f, &h);
            mono.holds(f.le_pointwise(&g, 0.0) && r.le_pointwise(&g.rearrange(), TOL));
            let g = random::step_function(rng, false, 8);
            let lhs = r.sup_distance(&g.rearrange());
            let rhs = f.sup_distance(&g);
            contraction.deviation((lhs - rhs).max(0.0));
        }
    }
    Ok(vec![
        shape.finish(),
        shift.finish(),
        scale.finish(),
        mono.finish(),
        contraction.finish(),
        equi.finish(),
        moments.finish(),
        integral.finish(),
    ])
}

// ---- 2: trace-power identity -------------------------------------------------

fn trace_power(n: u8, rng: &mut SeededRng) -> Result<Vec<CheckResult>> {
    let mut t =
        Tally::new(n, "trace(|M|^p) = ∫ μ^p, p = 1..4", "trace of powers of |M| against the s-number curve", 1e-8);
    let mut root = Tally::new(n, "|M|² = M*M", "the absolute value squares to M*M", 1e-8);
    for _ in 0..500 {
        let dim = rng.random_range(1..=5);
        let m = random::matrix(rng, dim);
        let h = m.abs()?;
        let gram = &m.adjoint() * &m;
        root.deviation((&(&h * &h) - &gram).max_abs() / gram.max_abs().max(1.0));
        let mu = mu_of_matrix(&m)?;
        let mut power = h.clone();
        for p in 1..=4 {
            let lhs = power.trace().re;
            let rhs = mu.power_integral(f64::from(p))?;
            t.deviation((lhs - rhs).abs() / rhs.abs().max(f64::MIN_POSITIVE));
            power = &power * &h;
        }
    }
    Ok(vec![t.finish(), root.finish()])
}

// ---- 3: Ky Fan sup characterization -------------------------------------------

fn ky_fan_characterization(n: u8, rng: &mut SeededRng) -> Result<Vec<CheckResult>> {
    let mut witness =
        Tally::new(n, "Ky Fan oracle with witness", "sup |Tr(UME)| over rank-k E equals the top-k sum", 1e-8);
    let mut sampled = Tally::new(n, "Ky Fan oracle, sampling only", "2000 sampled projections reach 98%", 0.02);
    let mut overshoot = Tally::new(n, "Ky Fan oracle never overshoots", "every sampled value is a lower bound", 1e-8);
    for i in 0..200 {
        let dim = rng.random_range(1..=4);
        let m = random::matrix(rng, dim);
        let mu = mu_of_matrix(&m)?;
        for k in 1..=dim {
            let closed = ky_fan(&mu, k as f64)?;
            let w = ky_fan_oracle(
                &m,
                k,
                &OracleOptions { trials: 0, include_witness: true, coordinate_subsets: false, seed: 0 },
            )?;
            witness.deviation(rel(w, closed));
            let opts = OracleOptions {
                trials: 2000,
                seed: i as u64 * 7 + k as u64,
                include_witness: false,
                coordinate_subsets: false,
            };
            let s = ky_fan_oracle(&m, k, &opts)?;
            sampled.deviation(if closed > 0.0 { (1.0 - s / closed).max(0.0) } else { 0.0 });
            overshoot.deviation((s - closed).max(0.0) / closed.max(1.0));
        }
    }
    Ok(vec![witness.finish(), sampled.finish(), overshoot.finish()])
}

// ---- 4: Ky Fan dual closed forms ------------------------------------------------

const DUAL_TS: [f64; 6] = [0.25, 0.5, 1.0, 2.0, 3.0, f64::INFINITY];

fn ky_fan_duals(n: u8, rng: &mut SeededRng) -> Result<Vec<CheckResult>> {
    let mut sampled = Tally::new(n, "Ky Fan dual, 20000 samples", "sampled dual agrees with the closed form", 0.01);
    let mut injected = Tally::new(n, "Ky Fan dual, injected witness", "witnessed dual equals the closed form", 1e-9);
    let mut normalized =
        Tally::new(n, "dual of unit projection is 1", "duals of normalized norms are normalized", 1e-9);
    let unit = SimpleOperator::new([(1.0, 1.0)])?;
    for i in 0..100 {
        let len = rng.random_range(1..=6);
        let a = random::simple(rng, len);
        let mu = mu_of_simple(&a);
        for (j, &t) in DUAL_TS.iter().enumerate() {
            let spec = NormSpec::KyFan(t);
            let closed = ky_fan_dual_closed(&mu, t)?;
            let seed = (i * 16 + j) as u64;
            let brute = dual_norm(
                &a,
                &spec,
                &DualOptions { budget: 20_000, seed, inject_witness: false, ..Default::default() },
            )?;
            sampled.deviation(if closed > 0.0 { (brute.value - closed).abs() / closed } else { brute.value.abs() });
            let exact =
                dual_norm(&a, &spec, &DualOptions { budget: 16, seed, inject_witness: true, ..Default::default() })?;
            injected.deviation(rel(exact.value, closed));
            if i == 0 {
                let d = dual_norm(&unit, &spec, &DualOptions { budget: 16, seed, ..Default::default() })?;
                normalized.deviation((d.value - 1.0).abs());
            }
        }
    }
    Ok(vec![sampled.finish(), injected.finish(), normalized.finish()])
}

// ---- 5: second dual ----------------------------------------------------------------

fn second_duals(n: u8, rng: &mut SeededRng) -> Result<Vec<CheckResult>> {
    let specs = [
        NormSpec::Lp(1.0),
        NormSpec::Lp(1.5),
        NormSpec::Lp(2.0),
        NormSpec::Lp(3.0),
        NormSpec::Lp(f64::INFINITY),
        NormSpec::KyFan(1.0),
        NormSpec::KyFan(2.0),
    ];
    let mut rows = Vec::new();
    for spec in &specs {
        let mut t = Tally::new(n, format!("second dual, {spec}"), "the dual of the dual is the norm", 0.01);
        for i in 0..30 {
            let len = rng.random_range(1..=4);
            let a = random::simple(rng, len);
            let truth = spec.eval_simple(&a)?;
            let opts = DualOptions { budget: 4000, seed: i, inject_witness: false, inner_budget: 16 };
            let est = second_dual(&a, spec, &opts)?.value;
            t.deviation(if truth > 0.0 { (est - truth).abs() / truth } else { est.abs() });
        }
        rows.push(t.finish());
    }
    Ok(rows)
}

// ---- 6: Hölder ------------------------------------------------------------------------

fn holder(n: u8, rng: &mut SeededRng) -> Result<Vec<CheckResult>> {
    let specs = [NormSpec::Lp(1.0), NormSpec::Lp(2.0), NormSpec::Lp(3.0), NormSpec::KyFan(1.0), NormSpec::KyFan(2.0)];
    let mut rows = Vec::new();
    for spec in &specs {
        let mut t = Tally::new(n, format!("Hölder, {spec}"), "‖ST‖₁ ≤ |||S|||·|||T|||^#", 1e-9);
        for _ in 0..1000 {
            let dim = rng.random_range(1..=5);
            let s = random::matrix(rng, dim);
            let m = random::matrix(rng, dim);
            let h = holder_check(&s, &m, spec)?;
            t.deviation((h.lhs - h.rhs).max(0.0) / h.rhs.max(1.0));
        }
        rows.push(t.finish());

        // S = U·diag(b)·W, T = W*·diag(a)·U* with b the dual witness for a
        let mut eq = Tally::new(n, format!("Hölder equality, {spec}"), "the dual witness attains equality", 1e-8);
        for _ in 0..20 {
            let dim = rng.random_range(1..=5);
            let a = random::unit_simple(rng, dim).sorted();
            let witness = dual_norm(&a, spec, &DualOptions { budget: 8, ..Default::default() })?.witness;
            let u = random_unitary_with(dim, rng);
            let w = random_unitary_with(dim, rng);
            let s = &(&u * &ComplexMatrix::diag(&witness.values())) * &w;
            let m = &(&w.adjoint() * &ComplexMatrix::diag(&a.values())) * &u.adjoint();
            let h = holder_check(&s, &m, spec)?;
            eq.deviation((h.lhs - h.rhs).abs() / h.rhs.max(1.0));
        }
        rows.push(eq.finish());
    }
    Ok(rows)
}

// ---- 7: Hardy–Littlewood–Pólya ------------------------------------------------------

/// All permutations of `0..n` (Heap's algorithm).
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut items: Vec<usize> = (0..n).collect();
    let mut out = vec![items.clone()];
    let mut c = vec![0usize; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                items.swap(0, i);
            } else {
                items.swap(c[i], i);
            }
            out.push(items.clone());
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

fn hlp(n: u8, rng: &mut SeededRng) -> Result<Vec<CheckResult>> {
    let mut t =
        Tally::new(n, "HLP, exhaustive permutations", "max over π of Σ a_k b_π(k) pairs the sorted lists", 1e-12);
    let perms: Vec<Vec<Vec<usize>>> = (0..=6).map(permutations).collect();
    for _ in 0..200 {
        let len = rng.random_range(1..=6);
        let a: Vec<f64> = (0..len).map(|_| rng.random_range(0.0..5.0)).collect();
        let b: Vec<f64> = (0..len).map(|_| rng.random_range(0.0..5.0)).collect();
        let brute = perms[len]
            .iter()
            .map(|p| a.iter().zip(p).map(|(x, &j)| x * b[j]).sum::<f64>())
            .fold(f64::NEG_INFINITY, f64::max);
        t.deviation(rel(hlp_pair_max(&a, &b)?, brute));
    }
    Ok(vec![t.finish()])
}

// ---- 8: dominance transfer ---------------------------------------------------------

// averages consecutive blocks of the curve, which can only lower its Ky Fan norms
fn block_average<R: Rng + ?Sized>(mu: &SNumberCurve, rng: &mut R) -> Result<SNumberCurve> {
    let mut out = Vec::new();
    let pieces = mu.pieces();
    let mut i = 0;
    while i < pieces.len() {
        let j = rng.random_range(i + 1..=pieces.len());
        let length: f64 = pieces[i..j].iter().map(|p| p.length).sum();
        let mass: f64 = pieces[i..j].iter().map(|p| p.length * p.value).sum();
        out.push((length, mass / length));
        i = j;
    }
    let c = if rng.random_bool(0.5) { 1.0 } else { rng.random_range(0.3..1.0) };
    SNumberCurve::from_pieces(out.into_iter().map(|(l, v)| (l, c * v)))
}

fn dominated_pair(rng: &mut SeededRng) -> Result<(SNumberCurve, SNumberCurve)> {
    if rng.random_bool(0.5) {
        let t = random::curve(rng, 8);
        let s = block_average(&t, rng)?;
        Ok((s, t))
    } else {
        // μ(AT) ≤ ‖A‖μ(T) pointwise
        let dim = rng.random_range(1..=5);
        let t = random::matrix(rng, dim);
        let a = random::matrix(rng, dim);
        let a = a.scale(Complex64::new(1.0 / a.operator_norm()?.max(1e-300), 0.0));
        Ok((mu_of_matrix(&(&a * &t))?, mu_of_matrix(&t)?))
    }
}

fn transfer(n: u8, rng: &mut SeededRng) -> Result<Vec<CheckResult>> {
    let mut pairs =
        Tally::new(n, "dominance transfer to random f-norms", "Ky Fan dominance implies every f-norm dominance", 1e-12);
    let mut lp = Tally::new(n, "dominance transfer to L^p", "Ky Fan dominance implies L^p dominance", 1e-10);
    let mut rejected = Tally::new(n, "non-dominated pairs rejected", "the breakpoint check finds every violation", 0.0);
    for i in 0..200 {
        let (s, t) = dominated_pair(rng)?;
        let report = dominance_transfer(&s, &t, 100, i)?;
        pairs.deviation(report.transfer_max_violation);
        for p in [1.0, 1.5, 2.0, 3.0, f64::INFINITY] {
            lp.deviation((lp_norm(&s, p)? - lp_norm(&t, p)?).max(0.0));
        }
    }
    for i in 0..50 {
        let t = random::curve(rng, 8);
        if t.is_zero() {
            rejected.holds(!ky_fan_dominates(&SNumberCurve::from_pieces([(1.0, 1.0)])?, &t).dominates);
            continue;
        }
        // raise the head of T on a short interval
        let bump = StepFunction::indicator(rng.random_range(0.01..0.5), rng.random_range(0.01..1.0))?;
        let s = crate::snumbers::mu_of_step(&pointwise_sum(t.as_step(), &bump));
        let report = ky_fan_dominates(&s, &t);
        let refused = matches!(dominance_transfer(&s, &t, 10, i), Err(Error::Precondition(_)));
        rejected.holds(!report.dominates && refused && report.max_violation > 0.0);
    }
    Ok(vec![pairs.finish(), lp.finish(), rejected.finish()])
}

// ---- 9: representation --------------------------------------------------------------

fn reconstruction(n: u8, rng: &mut SeededRng) -> Result<Vec<CheckResult>> {
    let specs = [NormSpec::Lp(2.0), NormSpec::Lp(1.0), NormSpec::KyFan(1.0), NormSpec::KyFan(2.0)];
    let curves: Vec<SNumberCurve> = (0..50).map(|_| random::curve(rng, 8)).collect();
    let mut rows = Vec::new();
    for spec in &specs {
        let mut injected = Tally::new(
            n,
            format!("reconstruction with extremizer, {spec}"),
            "sup of f-norms over the dual ball attains the norm",
            1e-9,
        );
        let mut sampled = Tally::new(
            n,
            format!("reconstruction, 10^4 samples, {spec}"),
            "sampled f-norms reach 99% without overshoot",
            0.01,
        );
        for (i, mu) in curves.iter().enumerate() {
            let r = reconstruct_norm(
                mu,
                spec,
                &ReconstructOptions { samples: 0, seed: i as u64, inject_extremizer: true },
            )?;
            injected.deviation(rel(r.estimate, r.truth));
            let r = reconstruct_norm(
                mu,
                spec,
                &ReconstructOptions { samples: 10_000, seed: i as u64, inject_extremizer: false },
            )?;
            let shortfall = if r.truth > 0.0 { (1.0 - r.estimate / r.truth).max(0.0) } else { 0.0 };
            let overshoot = (r.estimate - r.truth - 1e-9).max(0.0);
            sampled.deviation(if overshoot > 0.0 { f64::INFINITY } else { shortfall });
        }
        rows.push(injected.finish());
        rows.push(sampled.finish());
    }
    Ok(rows)
}

// ---- 10: Markov ---------------------------------------------------------------------

fn markov(n: u8, rng: &mut SeededRng) -> Result<Vec<CheckResult>> {
    let mut t = Tally::new(n, "Markov inequality", "m(μ>δ) ≤ |||T|||_(1)/δ when |||T|||_(1) < δ", 1e-12);
    let mut done = 0;
    while done < 1000 {
        let mu = random::curve(rng, 8);
        let k1 = ky_fan(&mu, 1.0)?;
        if k1 == 0.0 {
            continue;
        }
        done += 1;
        let delta = k1 * rng.random_range(1.0..4.0);
        if k1 >= delta {
            continue;
        }
        let level = measure_above(mu.as_step(), delta);
        t.deviation((level - k1 / delta).max(0.0));
    }
    Ok(vec![t.finish()])
}
