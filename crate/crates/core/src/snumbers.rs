//! s-number curves `μ_s(T)` for matrices, step functions and simple
//! operators.
//!
//! All three operand kinds land in the same [`SNumberCurve`]: a
//! nonincreasing, right-continuous, compactly supported step function on
//! `[0, ∞)`. For a matrix with the ordinary trace each singular value
//! occupies an interval of length exactly one:
//! `μ_s(T) = s₁χ_[0,1)(s) + s₂χ_[1,2)(s) + ⋯`.

use std::ops::Deref;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;
use crate::stepfn::{Domain, Piece, StepFunction, CANONICAL_TOL};

/// A nonincreasing step function on `[0, ∞)` with compact support.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "StepFunction", into = "StepFunction")]
pub struct SNumberCurve(StepFunction);

impl SNumberCurve {
    /// Validates an already nonincreasing function and moves it onto `[0, ∞)`.
    pub fn new(f: StepFunction) -> Result<Self> {
        if !f.is_nonincreasing() {
            return Err(Error::Input("an s-number curve must be nonincreasing".into()));
        }
        Ok(SNumberCurve(f.on_half_line()))
    }

    /// Curve from `(length, value)` pieces listed in nonincreasing order.
    pub fn from_pieces<I>(pieces: I) -> Result<Self>
    where
        I: IntoIterator<Item = (f64, f64)>,
    {
        Self::new(StepFunction::infinite(pieces)?)
    }

    pub fn zero() -> Self {
        SNumberCurve(StepFunction::zero(Domain::Infinite))
    }

    /// Unit-length pieces carrying the given values (sorted internally).
    pub fn from_singular_values(values: &[f64]) -> Self {
        let raw = values.iter().map(|&v| Piece { length: 1.0, value: v.max(0.0) }).collect();
        SNumberCurve(StepFunction::from_raw(Domain::Infinite, raw).rearrange())
    }

    pub fn as_step(&self) -> &StepFunction {
        &self.0
    }

    pub fn into_step(self) -> StepFunction {
        self.0
    }

    /// `μ_0`, the operator norm.
    pub fn head(&self) -> f64 {
        self.0.pieces().first().map_or(0.0, |p| p.value)
    }

    /// `∫ μ`, the trace norm.
    pub fn total(&self) -> f64 {
        self.0.total_integral()
    }

    pub fn approx_eq(&self, other: &SNumberCurve, tol: f64) -> bool {
        self.0.approx_eq(&other.0, tol)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("s-number curve: {e}")))
    }

    pub fn to_json(&self) -> String {
        self.0.to_json()
    }
}

impl Deref for SNumberCurve {
    type Target = StepFunction;

    fn deref(&self) -> &StepFunction {
        &self.0
    }
}

impl TryFrom<StepFunction> for SNumberCurve {
    type Error = Error;

    fn try_from(f: StepFunction) -> Result<Self> {
        SNumberCurve::new(f)
    }
}

impl From<SNumberCurve> for StepFunction {
    fn from(c: SNumberCurve) -> Self {
        c.0
    }
}

/// One term `a · E` of a simple operator, with trace weight `τ(E)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Term {
    pub value: f64,
    pub weight: f64,
}

/// The positive simple operator `a₁E₁ + ⋯ + a_nE_n` with `τ(E_k) = weight_k`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "SimpleDoc", into = "SimpleDoc")]
pub struct SimpleOperator {
    terms: Vec<Term>,
}

impl SimpleOperator {
    /// Builds from `(value, weight)` pairs.
    pub fn new<I>(terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (f64, f64)>,
    {
        let mut out = Vec::new();
        for (i, (value, weight)) in terms.into_iter().enumerate() {
            if !(weight.is_finite() && weight > 0.0) {
                return Err(Error::Input(format!("term {i}: weight must be positive and finite, got {weight}")));
            }
            if !(value.is_finite() && value >= 0.0) {
                return Err(Error::Input(format!("term {i}: value must be nonnegative and finite, got {value}")));
            }
            out.push(Term { value, weight });
        }
        Ok(SimpleOperator { terms: out })
    }

    /// Values with unit weights, as for a diagonalized matrix.
    pub fn unit_weights(values: &[f64]) -> Result<Self> {
        Self::new(values.iter().map(|&v| (v, 1.0)))
    }

    /// The diagonalized form of a matrix: its singular values with weight one.
    pub fn from_matrix(m: &ComplexMatrix) -> Result<Self> {
        Self::unit_weights(&m.singular_values()?)
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn values(&self) -> Vec<f64> {
        self.terms.iter().map(|t| t.value).collect()
    }

    pub fn weights(&self) -> Vec<f64> {
        self.terms.iter().map(|t| t.weight).collect()
    }

    /// Same projections, new coefficients.
    pub fn with_values(&self, values: &[f64]) -> Result<Self> {
        if values.len() != self.terms.len() {
            return Err(Error::Input(format!("expected {} values, got {}", self.terms.len(), values.len())));
        }
        Self::new(values.iter().zip(&self.terms).map(|(&v, t)| (v, t.weight)))
    }

    /// Terms reordered so that values are nonincreasing (stable).
    pub fn sorted(&self) -> SimpleOperator {
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| b.value.total_cmp(&a.value));
        SimpleOperator { terms }
    }

    /// Realization as a step function on `[0, ∞)`: the projections are laid
    /// out left to right in term order.
    pub fn to_step(&self) -> StepFunction {
        let raw = self.terms.iter().map(|t| Piece { length: t.weight, value: t.value }).collect();
        StepFunction::from_raw(Domain::Infinite, raw)
    }

    /// `τ(XY) = Σ a_k b_k τ_k` for two operators on the same projections.
    pub fn pairing(&self, other: &SimpleOperator) -> Result<f64> {
        if self.terms.len() != other.terms.len() {
            return Err(Error::Input("operators do not share projections".into()));
        }
        Ok(self.terms.iter().zip(&other.terms).map(|(a, b)| a.value * b.value * a.weight).sum())
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("simple operator: {e}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("simple operators always serialize")
    }
}

/// Wire form: `{"terms": [[value, weight], ...]}`.
#[derive(Serialize, Deserialize)]
struct SimpleDoc {
    terms: Vec<(f64, f64)>,
}

impl TryFrom<SimpleDoc> for SimpleOperator {
    type Error = Error;

    fn try_from(doc: SimpleDoc) -> Result<Self> {
        SimpleOperator::new(doc.terms)
    }
}

impl From<SimpleOperator> for SimpleDoc {
    fn from(s: SimpleOperator) -> Self {
        SimpleDoc { terms: s.terms.iter().map(|t| (t.value, t.weight)).collect() }
    }
}

/// `μ_s(M)` for a matrix: unit-length pieces carrying the singular values.
pub fn mu_of_matrix(m: &ComplexMatrix) -> Result<SNumberCurve> {
    Ok(SNumberCurve::from_singular_values(&m.singular_values()?))
}

/// `μ_s` of a multiplication operator: the nonincreasing rearrangement,
/// embedded in `[0, ∞)` when the function lives on a finite interval.
pub fn mu_of_step(f: &StepFunction) -> SNumberCurve {
    SNumberCurve(f.rearrange().on_half_line())
}

/// `μ_s` of a simple operator: values sorted nonincreasing over their weights.
pub fn mu_of_simple(s: &SimpleOperator) -> SNumberCurve {
    SNumberCurve(s.to_step().rearrange())
}

/// Equal s-number curves, compared in canonical form.
pub fn equi_measurable_ops(x: &SNumberCurve, y: &SNumberCurve) -> bool {
    x.approx_eq(y, CANONICAL_TOL)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pairs(c: &SNumberCurve) -> Vec<(f64, f64)> {
        c.pieces().iter().map(|p| (p.length, p.value)).collect()
    }

    #[test]
    fn mu_of_diagonal_matrix() {
        let mu = mu_of_matrix(&ComplexMatrix::diag(&[1.0, 3.0, 2.0])).unwrap();
        let got = pairs(&mu);
        let want = [(1.0, 3.0), (1.0, 2.0), (1.0, 1.0)];
        assert_eq!(got.len(), 3);
        for (g, w) in got.iter().zip(&want) {
            assert_eq!(g.0, w.0);
            assert!((g.1 - w.1).abs() < 1e-14);
        }
    }

    #[test]
    fn mu_of_zero_matrix_is_empty() {
        assert!(mu_of_matrix(&ComplexMatrix::zeros(4)).unwrap().is_zero());
    }

    #[test]
    fn mu_of_rank_one() {
        let mut m = ComplexMatrix::zeros(3);
        m[(0, 1)] = num_complex::Complex64::new(5.0, 0.0);
        let mu = mu_of_matrix(&m).unwrap();
        assert_eq!(pairs(&mu), vec![(1.0, 5.0)]);
    }

    #[test]
    fn mu_of_step_sorts() {
        let f = StepFunction::infinite([(1.0, 1.0), (1.0, 4.0)]).unwrap();
        assert_eq!(pairs(&mu_of_step(&f)), vec![(1.0, 4.0), (1.0, 1.0)]);
        let g = StepFunction::infinite([(2.0, 3.0), (1.0, 1.0)]).unwrap();
        assert_eq!(mu_of_step(&g).as_step(), &g);
        let finite = StepFunction::finite(5.0, [(1.0, 1.0), (1.0, 2.0)]).unwrap();
        assert_eq!(mu_of_step(&finite).domain(), Domain::Infinite);
    }

    #[test]
    fn mu_of_simple_examples() {
        let s = SimpleOperator::new([(2.0, 1.0)]).unwrap();
        assert_eq!(pairs(&mu_of_simple(&s)), vec![(1.0, 2.0)]);
        let s = SimpleOperator::new([(1.0, 1.0), (3.0, 2.0)]).unwrap();
        assert_eq!(pairs(&mu_of_simple(&s)), vec![(2.0, 3.0), (1.0, 1.0)]);
    }

    #[test]
    fn simple_operator_validation() {
        assert!(SimpleOperator::new([(1.0, 0.0)]).is_err());
        assert!(SimpleOperator::new([(-1.0, 1.0)]).is_err());
        let s = SimpleOperator::from_json(r#"{"terms": [[3, 1], [4, 1]]}"#).unwrap();
        assert_eq!(s.values(), vec![3.0, 4.0]);
        assert_eq!(SimpleOperator::from_json(&s.to_json()).unwrap(), s);
        assert!(matches!(SimpleOperator::from_json(r#"{"terms": [[3, -1]]}"#), Err(Error::Parse(_))));
    }

    #[test]
    fn curve_rejects_increasing() {
        assert!(SNumberCurve::from_pieces([(1.0, 1.0), (1.0, 2.0)]).is_err());
        assert!(SNumberCurve::from_json(r#"{"domain": "inf", "pieces": [[1, 1], [1, 2]]}"#).is_err());
    }

    #[test]
    fn equi_measurable_examples() {
        let a = SNumberCurve::from_pieces([(1.0, 1.0)]).unwrap();
        let b = SNumberCurve::from_pieces([(2.0, 1.0)]).unwrap();
        assert!(!equi_measurable_ops(&a, &b));
        assert!(equi_measurable_ops(&a, &a.clone()));
    }
}
