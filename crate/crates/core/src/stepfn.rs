//! Piecewise-constant nonnegative functions on `[0, L)` or `[0, ∞)`.
//!
//! A [`StepFunction`] is stored as an ordered list of `(length, value)`
//! pieces read left to right from the origin; whatever lies past the last
//! piece is zero. All arithmetic is exact piecewise arithmetic: integrals
//! are finite sums and pointwise comparisons are performed on the merged
//! breakpoint grid of the operands, so there is no sampling or quadrature
//! error beyond floating-point rounding.
//!
//! The central operation is [`StepFunction::rearrange`], the nonincreasing
//! rearrangement `f*(x) = sup{y : m({f > y}) > x}`. For a step function this
//! is the weighted sort of the piece values in decreasing order.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Absolute tolerance used when comparing canonical forms.
pub const CANONICAL_TOL: f64 = 1e-12;

/// Length of the underlying interval.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Domain {
    Finite(f64),
    Infinite,
}

impl Domain {
    pub fn length(self) -> f64 {
        match self {
            Domain::Finite(l) => l,
            Domain::Infinite => f64::INFINITY,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Domain::Finite(_))
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Domain::Finite(l) => write!(f, "[0, {l})"),
            Domain::Infinite => write!(f, "[0, inf)"),
        }
    }
}

/// One constant piece of a step function.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Piece {
    pub length: f64,
    pub value: f64,
}

/// A nonnegative step function with compact support, kept in canonical form:
/// adjacent equal values are merged and trailing zero pieces are dropped.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "StepFunctionDoc", into = "StepFunctionDoc")]
pub struct StepFunction {
    domain: Domain,
    pieces: Vec<Piece>,
}

impl StepFunction {
    /// Builds a step function from `(length, value)` pairs.
    pub fn new<I>(domain: Domain, pieces: I) -> Result<Self>
    where
        I: IntoIterator<Item = (f64, f64)>,
    {
        if let Domain::Finite(l) = domain {
            if !(l.is_finite() && l > 0.0) {
                return Err(Error::Input(format!("domain length must be positive and finite, got {l}")));
            }
        }
        let mut raw = Vec::new();
        let mut total = 0.0;
        for (i, (length, value)) in pieces.into_iter().enumerate() {
            if !(length.is_finite() && length > 0.0) {
                return Err(Error::Input(format!("piece {i}: length must be positive and finite, got {length}")));
            }
            if !(value.is_finite() && value >= 0.0) {
                return Err(Error::Input(format!("piece {i}: value must be nonnegative and finite, got {value}")));
            }
            total += length;
            raw.push(Piece { length, value });
        }
        if let Domain::Finite(l) = domain {
            if total > l * (1.0 + 1e-12) {
                return Err(Error::Input(format!("pieces cover {total}, which exceeds the domain length {l}")));
            }
        }
        Ok(Self::from_raw(domain, raw))
    }

    /// Step function on `[0, ∞)`.
    pub fn infinite<I>(pieces: I) -> Result<Self>
    where
        I: IntoIterator<Item = (f64, f64)>,
    {
        Self::new(Domain::Infinite, pieces)
    }

    /// Step function on `[0, length)`.
    pub fn finite<I>(length: f64, pieces: I) -> Result<Self>
    where
        I: IntoIterator<Item = (f64, f64)>,
    {
        Self::new(Domain::Finite(length), pieces)
    }

    /// The zero function.
    pub fn zero(domain: Domain) -> Self {
        StepFunction { domain, pieces: Vec::new() }
    }

    /// `value · χ_[0, length)` on `[0, ∞)`.
    pub fn indicator(length: f64, value: f64) -> Result<Self> {
        Self::infinite([(length, value)])
    }

    // Canonicalizes pieces that are already known to be valid.
    pub(crate) fn from_raw(domain: Domain, raw: Vec<Piece>) -> Self {
        let mut pieces: Vec<Piece> = Vec::with_capacity(raw.len());
        for p in raw {
            match pieces.last_mut() {
                Some(last) if last.value == p.value => last.length += p.length,
                _ => pieces.push(p),
            }
        }
        while pieces.last().is_some_and(|p| p.value == 0.0) {
            pieces.pop();
        }
        StepFunction { domain, pieces }
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn pieces(&self) -> &[Piece] {
        &self.pieces
    }

    pub fn is_zero(&self) -> bool {
        self.pieces.is_empty()
    }

    /// Right end of the last piece.
    pub fn support_end(&self) -> f64 {
        self.pieces.iter().map(|p| p.length).sum()
    }

    /// Right endpoints of all pieces, in increasing order.
    pub fn breakpoints(&self) -> Vec<f64> {
        let mut acc = 0.0;
        self.pieces
            .iter()
            .map(|p| {
                acc += p.length;
                acc
            })
            .collect()
    }

    /// Supremum of the function (its value at 0 once rearranged).
    pub fn sup(&self) -> f64 {
        self.pieces.iter().map(|p| p.value).fold(0.0, f64::max)
    }

    /// Value at `x` (right-continuous; zero past the support).
    pub fn value_at(&self, x: f64) -> f64 {
        let mut start = 0.0;
        for p in &self.pieces {
            let end = start + p.length;
            if x >= start && x < end {
                return p.value;
            }
            start = end;
        }
        0.0
    }

    /// Exact `∫_a^b f(x) dx`.
    pub fn integrate(&self, a: f64, b: f64) -> Result<f64> {
        if !(a >= 0.0 && a <= b) || a.is_infinite() {
            return Err(Error::Domain(format!("invalid interval [{a}, {b}]")));
        }
        if b > self.domain.length() {
            return Err(Error::Domain(format!("interval [{a}, {b}] leaves the domain {}", self.domain)));
        }
        Ok(self.integral_between(a, b))
    }

    // Unchecked integral; `b` may be infinite.
    pub(crate) fn integral_between(&self, a: f64, b: f64) -> f64 {
        let mut start = 0.0;
        let mut sum = 0.0;
        for p in &self.pieces {
            let end = start + p.length;
            if start >= b {
                break;
            }
            let lo = start.max(a);
            let hi = end.min(b);
            if hi > lo {
                sum += p.value * (hi - lo);
            }
            start = end;
        }
        sum
    }

    /// `∫_0^t f` for `t ∈ [0, ∞]`, clamped at the end of the support.
    pub fn integral_to(&self, t: f64) -> f64 {
        self.integral_between(0.0, t)
    }

    /// Total integral `∫ f`.
    pub fn total_integral(&self) -> f64 {
        self.pieces.iter().map(|p| p.value * p.length).sum()
    }

    /// Exact `∫ f(x)^p dx` for `p ≥ 1`.
    pub fn power_integral(&self, p: f64) -> Result<f64> {
        if p.is_nan() || p < 1.0 || p.is_infinite() {
            return Err(Error::Parameter(format!("power must be a finite real >= 1, got {p}")));
        }
        Ok(self.pieces.iter().map(|pc| pc.value.powf(p) * pc.length).sum())
    }

    /// `c · f` for `c ≥ 0`.
    pub fn scale(&self, c: f64) -> Result<Self> {
        if !(c.is_finite() && c >= 0.0) {
            return Err(Error::Parameter(format!("scale factor must be nonnegative and finite, got {c}")));
        }
        let raw = self.pieces.iter().map(|p| Piece { length: p.length, value: c * p.value }).collect();
        Ok(Self::from_raw(self.domain, raw))
    }

    /// `f + c` for `c ≥ 0`; only defined on a finite domain, where the
    /// implicit zero tail becomes a piece of value `c`.
    pub fn add_constant(&self, c: f64) -> Result<Self> {
        let Domain::Finite(l) = self.domain else {
            return Err(Error::Domain("adding a constant on [0, inf) breaks compact support".into()));
        };
        if !(c.is_finite() && c >= 0.0) {
            return Err(Error::Parameter(format!("constant must be nonnegative and finite, got {c}")));
        }
        let mut raw: Vec<Piece> = self.pieces.iter().map(|p| Piece { length: p.length, value: p.value + c }).collect();
        let tail = l - self.support_end();
        if tail > l * 1e-12 && c > 0.0 {
            raw.push(Piece { length: tail, value: c });
        }
        Ok(Self::from_raw(self.domain, raw))
    }

    /// Nonincreasing rearrangement `f*`: same domain, same distribution.
    pub fn rearrange(&self) -> StepFunction {
        let mut raw: Vec<Piece> = self.pieces.iter().copied().filter(|p| p.value > 0.0).collect();
        raw.sort_by(|a, b| b.value.total_cmp(&a.value));
        Self::from_raw(self.domain, raw)
    }

    /// Whether the pieces are nonincreasing from left to right.
    pub fn is_nonincreasing(&self) -> bool {
        self.pieces.windows(2).all(|w| w[0].value >= w[1].value)
    }

    /// `m({f > y})`.
    pub fn level_set_measure(&self, y: f64) -> f64 {
        let above: f64 = self.pieces.iter().filter(|p| p.value > y).map(|p| p.length).sum();
        if y < 0.0 {
            // the zero tail also exceeds a negative level
            above + (self.domain.length() - self.support_end())
        } else {
            above
        }
    }

    /// `m({f > y}) = m({g > y})` for every `y ≥ 0`, decided by comparing the
    /// canonical rearrangements.
    pub fn equimeasurable(&self, other: &StepFunction) -> bool {
        let a = self.rearrange();
        let b = other.rearrange();
        pieces_close(&a.pieces, &b.pieces, CANONICAL_TOL)
    }

    /// Sorted union of `{0}` and both operands' breakpoints.
    pub fn merged_grid(&self, other: &StepFunction) -> Vec<f64> {
        let mut grid = vec![0.0];
        grid.extend(self.breakpoints());
        grid.extend(other.breakpoints());
        grid.sort_by(f64::total_cmp);
        grid.dedup();
        grid
    }

    /// `sup_x |f(x) − g(x)|`, evaluated exactly on the cells of the merged
    /// grid. Cells narrower than [`CANONICAL_TOL`] relative to the grid are
    /// rounding slivers between breakpoints that should coincide, and are
    /// skipped.
    pub fn sup_distance(&self, other: &StepFunction) -> f64 {
        self.cell_points(other).map(|x| (self.value_at(x) - other.value_at(x)).abs()).fold(0.0, f64::max)
    }

    /// `f(x) ≤ g(x) + tol` almost everywhere on `[0, ∞)`.
    pub fn le_pointwise(&self, other: &StepFunction, tol: f64) -> bool {
        self.cell_points(other).all(|x| self.value_at(x) <= other.value_at(x) + tol)
    }

    // midpoints of the non-degenerate cells of the merged grid
    fn cell_points(&self, other: &StepFunction) -> impl Iterator<Item = f64> {
        let grid = self.merged_grid(other);
        let end = grid.last().copied().unwrap_or(0.0);
        let sliver = CANONICAL_TOL * end.max(1.0);
        grid.windows(2)
            .filter(move |w| w[1] - w[0] > sliver)
            .map(|w| 0.5 * (w[0] + w[1]))
            .collect::<Vec<_>>()
            .into_iter()
    }

    /// Structural equality up to `tol` on values and on the domain length.
    pub fn approx_eq(&self, other: &StepFunction, tol: f64) -> bool {
        let same_domain = match (self.domain, other.domain) {
            (Domain::Infinite, Domain::Infinite) => true,
            (Domain::Finite(a), Domain::Finite(b)) => (a - b).abs() <= tol,
            _ => false,
        };
        same_domain && pieces_close(&self.pieces, &other.pieces, tol)
    }

    /// Re-homes the function on `[0, ∞)`.
    pub fn on_half_line(&self) -> StepFunction {
        StepFunction { domain: Domain::Infinite, pieces: self.pieces.clone() }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("step function: {e}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("step functions always serialize")
    }
}

// Compares piece lists after merging neighbours whose values agree to `tol`.
fn pieces_close(a: &[Piece], b: &[Piece], tol: f64) -> bool {
    let a = merge_close(a, tol);
    let b = merge_close(b, tol);
    a.len() == b.len()
        && a.iter().zip(&b).all(|(x, y)| (x.value - y.value).abs() <= tol && (x.length - y.length).abs() <= tol)
}

fn merge_close(pieces: &[Piece], tol: f64) -> Vec<Piece> {
    let mut out: Vec<Piece> = Vec::with_capacity(pieces.len());
    for p in pieces {
        match out.last_mut() {
            Some(last) if (last.value - p.value).abs() <= tol => last.length += p.length,
            _ => out.push(*p),
        }
    }
    while out.last().is_some_and(|p| p.value <= tol) {
        out.pop();
    }
    out
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum DomainDoc {
    Length(f64),
    Named(String),
}

/// Wire form: `{"domain": <number or "inf">, "pieces": [[length, value], ...]}`.
#[derive(Serialize, Deserialize)]
struct StepFunctionDoc {
    domain: DomainDoc,
    pieces: Vec<(f64, f64)>,
}

impl TryFrom<StepFunctionDoc> for StepFunction {
    type Error = Error;

    fn try_from(doc: StepFunctionDoc) -> Result<Self> {
        let domain = match doc.domain {
            DomainDoc::Length(l) => Domain::Finite(l),
            DomainDoc::Named(s) if matches!(s.as_str(), "inf" | "infinity" | "+inf") => Domain::Infinite,
            DomainDoc::Named(s) => return Err(Error::Input(format!("unknown domain {s:?}"))),
        };
        StepFunction::new(domain, doc.pieces)
    }
}

impl From<StepFunction> for StepFunctionDoc {
    fn from(f: StepFunction) -> Self {
        let domain = match f.domain {
            Domain::Finite(l) => DomainDoc::Length(l),
            Domain::Infinite => DomainDoc::Named("inf".into()),
        };
        StepFunctionDoc { domain, pieces: f.pieces.iter().map(|p| (p.length, p.value)).collect() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inf(pieces: &[(f64, f64)]) -> StepFunction {
        StepFunction::infinite(pieces.iter().copied()).unwrap()
    }

    fn pairs(f: &StepFunction) -> Vec<(f64, f64)> {
        f.pieces().iter().map(|p| (p.length, p.value)).collect()
    }

    #[test]
    fn canonical_form_merges_and_trims() {
        let f = inf(&[(1.0, 2.0), (0.5, 2.0), (1.0, 0.0), (1.0, 1.0), (2.0, 0.0)]);
        assert_eq!(pairs(&f), vec![(1.5, 2.0), (1.0, 0.0), (1.0, 1.0)]);
    }

    #[test]
    fn rejects_bad_pieces() {
        assert!(matches!(StepFunction::infinite([(0.0, 1.0)]), Err(Error::Input(_))));
        assert!(matches!(StepFunction::infinite([(1.0, -1.0)]), Err(Error::Input(_))));
        assert!(matches!(StepFunction::infinite([(1.0, f64::NAN)]), Err(Error::Input(_))));
        assert!(matches!(StepFunction::finite(1.0, [(2.0, 1.0)]), Err(Error::Input(_))));
    }

    #[test]
    fn rearrange_constant_is_identity() {
        let f = StepFunction::finite(3.0, [(3.0, 2.5)]).unwrap();
        assert_eq!(f.rearrange(), f);
    }

    #[test]
    fn rearrange_sorts_by_value() {
        let f = inf(&[(1.0, 1.0), (1.0, 3.0), (1.0, 2.0)]);
        assert_eq!(pairs(&f.rearrange()), vec![(1.0, 3.0), (1.0, 2.0), (1.0, 1.0)]);
    }

    #[test]
    fn rearrange_merges_equal_values() {
        let f = inf(&[(0.5, 2.0), (1.5, 5.0), (1.0, 2.0)]);
        assert_eq!(pairs(&f.rearrange()), vec![(1.5, 5.0), (1.5, 2.0)]);
    }

    #[test]
    fn rearrange_drops_interior_zeros() {
        let f = inf(&[(1.0, 0.0), (2.0, 1.0)]);
        assert_eq!(pairs(&f.rearrange()), vec![(2.0, 1.0)]);
    }

    #[test]
    fn integrate_basic() {
        let chi = StepFunction::indicator(1.0, 1.0).unwrap();
        assert_eq!(chi.integrate(0.0, 1.0).unwrap(), 1.0);
        let f = inf(&[(2.0, 3.0)]);
        assert_eq!(f.integrate(1.0, 2.0).unwrap(), 3.0);
        assert_eq!(f.integrate(0.0, f64::INFINITY).unwrap(), 6.0);
    }

    #[test]
    fn integrate_out_of_domain() {
        let f = StepFunction::finite(2.0, [(1.0, 1.0)]).unwrap();
        assert!(matches!(f.integrate(0.0, 3.0), Err(Error::Domain(_))));
        assert!(matches!(f.integrate(1.0, 0.5), Err(Error::Domain(_))));
        assert!(matches!(f.integrate(-1.0, 0.5), Err(Error::Domain(_))));
        assert!(matches!(f.integrate(0.0, f64::INFINITY), Err(Error::Domain(_))));
    }

    #[test]
    fn power_integral_values() {
        let chi = StepFunction::indicator(1.0, 1.0).unwrap();
        assert_eq!(chi.power_integral(7.0).unwrap(), 1.0);
        assert_eq!(inf(&[(2.0, 3.0)]).power_integral(2.0).unwrap(), 18.0);
        assert!(matches!(chi.power_integral(0.5), Err(Error::Parameter(_))));
    }

    #[test]
    fn equimeasurable_cases() {
        let f = inf(&[(1.0, 1.0), (1.0, 3.0), (2.0, 2.0)]);
        assert!(f.equimeasurable(&f.rearrange()));
        let chi = StepFunction::indicator(1.0, 1.0).unwrap();
        assert!(!chi.equimeasurable(&chi.scale(2.0).unwrap()));
        let g = inf(&[(2.0, 2.0), (1.0, 3.0), (1.0, 1.0)]);
        assert!(f.equimeasurable(&g));
    }

    #[test]
    fn add_constant_fills_tail() {
        let f = StepFunction::finite(4.0, [(1.0, 2.0), (1.0, 0.0), (1.0, 1.0)]).unwrap();
        let g = f.add_constant(1.0).unwrap();
        assert_eq!(pairs(&g), vec![(1.0, 3.0), (1.0, 1.0), (1.0, 2.0), (1.0, 1.0)]);
        assert!(g.rearrange().approx_eq(&f.rearrange().add_constant(1.0).unwrap(), 1e-12));
        assert!(matches!(inf(&[(1.0, 1.0)]).add_constant(1.0), Err(Error::Domain(_))));
    }

    #[test]
    fn level_sets() {
        let f = StepFunction::finite(5.0, [(1.0, 2.0), (2.0, 1.0)]).unwrap();
        assert_eq!(f.level_set_measure(0.0), 3.0);
        assert_eq!(f.level_set_measure(1.0), 1.0);
        assert_eq!(f.level_set_measure(-1.0), 5.0);
    }

    #[test]
    fn json_round_trip_and_schema() {
        let f = StepFunction::from_json(r#"{"domain": "inf", "pieces": [[1, 2], [0.5, 1]]}"#).unwrap();
        assert_eq!(f.domain(), Domain::Infinite);
        assert_eq!(StepFunction::from_json(&f.to_json()).unwrap(), f);
        let g = StepFunction::from_json(r#"{"domain": 3, "pieces": [[1, 2]]}"#).unwrap();
        assert_eq!(g.domain(), Domain::Finite(3.0));
        let err = StepFunction::from_json(r#"{"domain": 1, "pieces": [[2, 2]]}"#).unwrap_err();
        assert!(matches!(err, Error::Parse(_)));
        assert!(StepFunction::from_json(r#"{"domain": "big", "pieces": []}"#).is_err());
    }
}
