//! Dense square complex matrices and the one-sided Jacobi SVD.
//!
//! This is the finite-dimensional model: an operator on `ℂⁿ` with the
//! ordinary trace. Only what the norm machinery needs is provided:
//! products, adjoints, the SVD, the operator absolute value `|M|`, the
//! polar factor, and seeded Haar-like random unitaries for invariance tests.

use std::fmt::Write as _;
use std::ops::{Add, Mul, Sub};

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Sweep cap for the Jacobi iteration.
pub const MAX_SWEEPS: usize = 60;
/// Relative size of an off-diagonal Gram entry below which a column pair
/// counts as orthogonal.
pub const JACOBI_TOL: f64 = 1e-14;

/// Dense `n × n` complex matrix stored row-major.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "MatrixDoc", into = "MatrixDoc")]
pub struct ComplexMatrix {
    n: usize,
    data: Vec<Complex64>,
}

/// Full singular value decomposition `M = U · diag(s) · V*`.
#[derive(Debug, Clone)]
pub struct Svd {
    pub u: ComplexMatrix,
    pub s: Vec<f64>,
    pub v: ComplexMatrix,
}

impl ComplexMatrix {
    pub fn new(n: usize, data: Vec<Complex64>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Input("matrix dimension must be positive".into()));
        }
        if data.len() != n * n {
            return Err(Error::Input(format!("expected {} entries for n = {n}, got {}", n * n, data.len())));
        }
        if let Some(i) = data.iter().position(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::Input(format!("entry ({}, {}) is not finite", i / n, i % n)));
        }
        Ok(ComplexMatrix { n, data })
    }

    /// Real matrix from rows.
    pub fn from_real_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let zeros: Vec<Vec<f64>> = rows.iter().map(|r| vec![0.0; r.len()]).collect();
        Self::from_parts(rows, &zeros)
    }

    pub fn from_parts(re: &[Vec<f64>], im: &[Vec<f64>]) -> Result<Self> {
        let n = re.len();
        if im.len() != n {
            return Err(Error::Input(format!("re has {n} rows but im has {}", im.len())));
        }
        let mut data = Vec::with_capacity(n * n);
        for (i, (r, m)) in re.iter().zip(im).enumerate() {
            if r.len() != n || m.len() != n {
                return Err(Error::Input(format!("row {i} does not have {n} columns")));
            }
            data.extend(r.iter().zip(m).map(|(&a, &b)| Complex64::new(a, b)));
        }
        Self::new(n, data)
    }

    pub fn zeros(n: usize) -> Self {
        assert!(n > 0, "matrix dimension must be positive");
        ComplexMatrix { n, data: vec![Complex64::new(0.0, 0.0); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m[(i, i)] = Complex64::new(1.0, 0.0);
        }
        m
    }

    /// Real diagonal matrix.
    pub fn diag(values: &[f64]) -> Self {
        let mut m = Self::zeros(values.len());
        for (i, &v) in values.iter().enumerate() {
            m[(i, i)] = Complex64::new(v, 0.0);
        }
        m
    }

    /// Matrix with i.i.d. standard complex Gaussian entries.
    pub fn random_gaussian<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        let data = (0..n * n)
            .map(|_| {
                let re: f64 = rng.sample(StandardNormal);
                let im: f64 = rng.sample(StandardNormal);
                Complex64::new(re, im) * std::f64::consts::FRAC_1_SQRT_2
            })
            .collect();
        ComplexMatrix { n, data }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.data
    }

    pub fn column(&self, j: usize) -> Vec<Complex64> {
        (0..self.n).map(|i| self[(i, j)]).collect()
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out[(j, i)] = self[(i, j)].conj();
            }
        }
        out
    }

    pub fn scale(&self, c: Complex64) -> Self {
        ComplexMatrix { n: self.n, data: self.data.iter().map(|z| z * c).collect() }
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.n).map(|i| self[(i, i)]).sum()
    }

    /// `Σ |m_ij|²`.
    pub fn frobenius_sq(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum()
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        let n = self.n;
        (0..n).all(|i| (i..n).all(|j| (self[(i, j)] - self[(j, i)].conj()).norm() <= tol))
    }

    fn check_same_dim(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::Input(format!("dimension mismatch: {} vs {}", self.n, other.n)));
        }
        Ok(())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_same_dim(other)?;
        Ok(self * other)
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same_dim(other)?;
        Ok(self + other)
    }

    /// Singular values in nonincreasing order.
    pub fn singular_values(&self) -> Result<Vec<f64>> {
        Ok(self.svd()?.s)
    }

    /// One-sided (Hestenes) Jacobi SVD with complex rotations.
    ///
    /// Columns of a working copy `A` are rotated pairwise until every Gram
    /// entry `|a_p^H a_q|` is below `JACOBI_TOL · ‖a_p‖‖a_q‖`. On exit
    /// `A = M V` has orthogonal columns whose norms are the singular values.
    pub fn svd(&self) -> Result<Svd> {
        let n = self.n;
        // column-major working copies
        let mut a: Vec<Vec<Complex64>> = (0..n).map(|j| self.column(j)).collect();
        let mut v: Vec<Vec<Complex64>> =
            (0..n).map(|j| (0..n).map(|i| Complex64::new(if i == j { 1.0 } else { 0.0 }, 0.0)).collect()).collect();

        let mut converged = n == 1;
        for _sweep in 0..MAX_SWEEPS {
            if converged {
                break;
            }
            let mut rotated = false;
            for p in 0..n {
                for q in p + 1..n {
                    let alpha: f64 = a[p].iter().map(|z| z.norm_sqr()).sum();
                    let beta: f64 = a[q].iter().map(|z| z.norm_sqr()).sum();
                    let gamma: Complex64 = a[p].iter().zip(&a[q]).map(|(x, y)| x.conj() * y).sum();
                    let g = gamma.norm();
                    if g == 0.0 || g <= JACOBI_TOL * (alpha * beta).sqrt() {
                        continue;
                    }
                    rotated = true;
                    // make the Gram entry real, then apply a real Jacobi rotation
                    let phase = (gamma / g).conj();
                    let zeta = (beta - alpha) / (2.0 * g);
                    let t = zeta.signum() / (zeta.abs() + (1.0 + zeta * zeta).sqrt());
                    let c = 1.0 / (1.0 + t * t).sqrt();
                    let s = c * t;
                    rotate(&mut a, p, q, phase, c, s);
                    rotate(&mut v, p, q, phase, c, s);
                }
            }
            converged = !rotated;
        }
        if !converged {
            return Err(Error::Numerical(format!("Jacobi SVD did not converge in {MAX_SWEEPS} sweeps")));
        }

        let norms: Vec<f64> = a.iter().map(|col| col.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()).collect();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&i, &j| norms[j].total_cmp(&norms[i]));

        let s: Vec<f64> = order.iter().map(|&j| norms[j]).collect();
        let scale = s.first().copied().unwrap_or(0.0);
        let mut u_cols: Vec<Vec<Complex64>> = Vec::with_capacity(n);
        for &j in &order {
            // columns of numerically zero norm are completed below
            if norms[j] > scale * 1e-13 {
                u_cols.push(a[j].iter().map(|z| z / norms[j]).collect());
            }
        }
        complete_orthonormal(&mut u_cols, n);
        let v_cols: Vec<Vec<Complex64>> = order.iter().map(|&j| v[j].clone()).collect();

        Ok(Svd { u: from_columns(&u_cols), s, v: from_columns(&v_cols) })
    }

    /// Operator norm `‖M‖`, the largest singular value.
    pub fn operator_norm(&self) -> Result<f64> {
        Ok(self.singular_values()?.first().copied().unwrap_or(0.0))
    }

    /// Trace norm `‖M‖₁ = Σ sᵢ`.
    pub fn trace_norm(&self) -> Result<f64> {
        Ok(self.singular_values()?.iter().sum())
    }

    /// Operator absolute value `|M| = (M*M)^{1/2} = V diag(s) V*`.
    pub fn abs(&self) -> Result<Self> {
        let svd = self.svd()?;
        Ok(svd.v.mul_diag(&svd.s).mul_adjoint(&svd.v))
    }

    /// Unitary polar factor `W` with `M = W |M|`.
    pub fn polar_unitary(&self) -> Result<Self> {
        let svd = self.svd()?;
        Ok(svd.u.mul_adjoint(&svd.v))
    }

    /// Positive semidefiniteness, decided by `|H| = H` for Hermitian `H`.
    pub fn is_positive_semidefinite(&self, tol: f64) -> Result<bool> {
        if !self.is_hermitian(tol) {
            return Ok(false);
        }
        let abs = self.abs()?;
        Ok((&abs - self).max_abs() <= tol)
    }

    // self · diag(d)
    fn mul_diag(&self, d: &[f64]) -> Self {
        let mut out = self.clone();
        for i in 0..self.n {
            for j in 0..self.n {
                out[(i, j)] *= d[j];
            }
        }
        out
    }

    // self · other*
    fn mul_adjoint(&self, other: &Self) -> Self {
        self * &other.adjoint()
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("matrix: {e}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("matrices always serialize")
    }

    /// CSV form: one row per matrix row, `2n` columns with real and
    /// imaginary parts interleaved.
    pub fn from_csv(text: &str) -> Result<Self> {
        let rows: Vec<(usize, &str)> =
            text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty()).map(|(i, l)| (i + 1, l)).collect();
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for (line_no, line) in rows {
            let fields: Vec<&str> = line.split(',').map(str::trim).collect();
            if fields.len() != 2 * n {
                return Err(Error::Parse(format!(
                    "matrix csv line {line_no}: expected {} columns, found {}",
                    2 * n,
                    fields.len()
                )));
            }
            for (col, pair) in fields.chunks(2).enumerate() {
                let parse = |s: &str, c: usize| {
                    s.parse::<f64>().map_err(|_| {
                        Error::Parse(format!("matrix csv line {line_no}, column {}: bad number {s:?}", c + 1))
                    })
                };
                data.push(Complex64::new(parse(pair[0], 2 * col)?, parse(pair[1], 2 * col + 1)?));
            }
        }
        Self::new(n, data)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|j| format!("{},{}", self[(i, j)].re, self[(i, j)].im)).collect();
            let _ = writeln!(out, "{}", row.join(","));
        }
        out
    }
}

// Applies the unitary column transform to the pair (p, q):
//   a_q ← phase · a_q, then (a_p, a_q) ← (c a_p − s a_q, s a_p + c a_q).
fn rotate(cols: &mut [Vec<Complex64>], p: usize, q: usize, phase: Complex64, c: f64, s: f64) {
    let (left, right) = cols.split_at_mut(q);
    let cp = &mut left[p];
    let cq = &mut right[0];
    for (x, y) in cp.iter_mut().zip(cq.iter_mut()) {
        let yq = *y * phase;
        let xp = *x;
        *x = xp * c - yq * s;
        *y = xp * s + yq * c;
    }
}

// Extends an orthonormal set of columns to a basis of ℂⁿ (modified
// Gram–Schmidt against the standard basis, with one reorthogonalization).
fn complete_orthonormal(cols: &mut Vec<Vec<Complex64>>, n: usize) {
    let mut k = 0;
    while cols.len() < n && k < n {
        let mut e = vec![Complex64::new(0.0, 0.0); n];
        e[k] = Complex64::new(1.0, 0.0);
        for _ in 0..2 {
            for c in cols.iter() {
                let proj: Complex64 = c.iter().zip(&e).map(|(x, y)| x.conj() * y).sum();
                for (ei, ci) in e.iter_mut().zip(c) {
                    *ei -= proj * ci;
                }
            }
        }
        let norm = e.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm > 1e-8 {
            cols.push(e.into_iter().map(|z| z / norm).collect());
        }
        k += 1;
    }
}

fn from_columns(cols: &[Vec<Complex64>]) -> ComplexMatrix {
    let n = cols.len();
    let mut m = ComplexMatrix::zeros(n);
    for (j, col) in cols.iter().enumerate() {
        for (i, &z) in col.iter().enumerate() {
            m[(i, j)] = z;
        }
    }
    m
}

/// Haar-distributed unitary from the QR factorization of a complex Gaussian
/// matrix; bit-identical for a fixed seed.
pub fn random_unitary(n: usize, seed: u64) -> ComplexMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_unitary_with(n, &mut rng)
}

/// As [`random_unitary`], drawing from a caller-supplied generator.
pub fn random_unitary_with<R: Rng + ?Sized>(n: usize, rng: &mut R) -> ComplexMatrix {
    loop {
        let g = ComplexMatrix::random_gaussian(n, rng);
        let mut q: Vec<Vec<Complex64>> = Vec::with_capacity(n);
        let mut degenerate = false;
        for j in 0..n {
            let mut col = g.column(j);
            for _ in 0..2 {
                for prev in &q {
                    let proj: Complex64 = prev.iter().zip(&col).map(|(x, y)| x.conj() * y).sum();
                    for (ci, pi) in col.iter_mut().zip(prev) {
                        *ci -= proj * pi;
                    }
                }
            }
            let norm = col.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
            if norm < 1e-10 {
                degenerate = true;
                break;
            }
            // positive diagonal of R keeps the distribution Haar
            q.push(col.into_iter().map(|z| z / norm).collect());
        }
        if !degenerate {
            return from_columns(&q);
        }
    }
}

impl std::ops::Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;

    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[i * self.n + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.data[i * self.n + j]
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;

    /// Panics on a dimension mismatch; see [`ComplexMatrix::try_mul`].
    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        let n = self.n;
        let mut out = ComplexMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += a * rhs.data[k * n + j];
                }
            }
        }
        out
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        ComplexMatrix { n: self.n, data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        ComplexMatrix { n: self.n, data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect() }
    }
}

/// Wire form: `{"n": k, "re": [[...]], "im": [[...]]}`; `im` may be omitted.
#[derive(Serialize, Deserialize)]
struct MatrixDoc {
    n: usize,
    re: Vec<Vec<f64>>,
    #[serde(default)]
    im: Option<Vec<Vec<f64>>>,
}

impl TryFrom<MatrixDoc> for ComplexMatrix {
    type Error = Error;

    fn try_from(doc: MatrixDoc) -> Result<Self> {
        if doc.re.len() != doc.n {
            return Err(Error::Input(format!("n = {} but re has {} rows", doc.n, doc.re.len())));
        }
        let im = doc.im.unwrap_or_else(|| doc.re.iter().map(|r| vec![0.0; r.len()]).collect());
        ComplexMatrix::from_parts(&doc.re, &im)
    }
}

impl From<ComplexMatrix> for MatrixDoc {
    fn from(m: ComplexMatrix) -> Self {
        let n = m.n;
        let re = (0..n).map(|i| (0..n).map(|j| m[(i, j)].re).collect()).collect();
        let im = (0..n).map(|i| (0..n).map(|j| m[(i, j)].im).collect()).collect();
        MatrixDoc { n, re, im: Some(im) }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol)
    }

    #[test]
    fn svd_of_diagonal() {
        let m = ComplexMatrix::diag(&[-3.0, 2.0]);
        assert!(close(&m.singular_values().unwrap(), &[3.0, 2.0], 1e-15));
    }

    #[test]
    fn svd_of_nilpotent() {
        let m = ComplexMatrix::from_real_rows(&[vec![0.0, 1.0], vec![0.0, 0.0]]).unwrap();
        assert!(close(&m.singular_values().unwrap(), &[1.0, 0.0], 1e-15));
    }

    #[test]
    fn svd_of_zero_and_scalar() {
        assert_eq!(ComplexMatrix::zeros(3).singular_values().unwrap(), vec![0.0; 3]);
        let z = ComplexMatrix::new(1, vec![Complex64::new(3.0, -4.0)]).unwrap();
        assert!(close(&z.singular_values().unwrap(), &[5.0], 1e-15));
    }

    #[test]
    fn svd_reconstructs() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 1..=16 {
            let m = ComplexMatrix::random_gaussian(n, &mut rng);
            let svd = m.svd().unwrap();
            let rebuilt = svd.u.mul_diag(&svd.s).mul_adjoint(&svd.v);
            let scale = svd.s[0];
            assert!((&rebuilt - &m).max_abs() <= 1e-10 * scale, "n = {n}");
            let uu = &svd.u.adjoint() * &svd.u;
            assert!((&uu - &ComplexMatrix::identity(n)).max_abs() <= 1e-10);
            assert!(svd.s.windows(2).all(|w| w[0] >= w[1]));
        }
    }

    #[test]
    fn svd_rank_deficient_reconstructs() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let a = ComplexMatrix::random_gaussian(4, &mut rng);
        let p = ComplexMatrix::diag(&[1.0, 1.0, 0.0, 0.0]);
        let m = &(&a * &p) * &a.adjoint();
        let svd = m.svd().unwrap();
        assert!(svd.s[2] < 1e-12 && svd.s[3] < 1e-12);
        let rebuilt = svd.u.mul_diag(&svd.s).mul_adjoint(&svd.v);
        assert!((&rebuilt - &m).max_abs() <= 1e-10 * svd.s[0]);
        let uu = &svd.u.adjoint() * &svd.u;
        assert!((&uu - &ComplexMatrix::identity(4)).max_abs() <= 1e-10);
    }

    #[test]
    fn abs_of_examples() {
        let m = ComplexMatrix::diag(&[-2.0, 1.0]);
        let a = m.abs().unwrap();
        assert!((&a - &ComplexMatrix::diag(&[2.0, 1.0])).max_abs() < 1e-14);

        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let x = ComplexMatrix::random_gaussian(4, &mut rng);
        let psd = &x * &x.adjoint();
        assert!((&psd.abs().unwrap() - &psd).max_abs() < 1e-12 * psd.max_abs().max(1.0));
    }

    #[test]
    fn abs_squares_to_gram() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for n in 1..=6 {
            let m = ComplexMatrix::random_gaussian(n, &mut rng);
            let a = m.abs().unwrap();
            assert!(a.is_hermitian(1e-12));
            let gram = &m.adjoint() * &m;
            let sq = &a * &a;
            assert!((&sq - &gram).max_abs() <= 1e-9 * gram.max_abs());
        }
    }

    #[test]
    fn polar_factor_is_unitary() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let m = ComplexMatrix::random_gaussian(5, &mut rng);
        let w = m.polar_unitary().unwrap();
        let ww = &w.adjoint() * &w;
        assert!((&ww - &ComplexMatrix::identity(5)).max_abs() < 1e-10);
        let rebuilt = &w * &m.abs().unwrap();
        assert!((&rebuilt - &m).max_abs() < 1e-10);
    }

    #[test]
    fn random_unitary_properties() {
        let u1 = random_unitary(1, 3);
        assert!((u1[(0, 0)].norm() - 1.0).abs() < 1e-14);
        for n in 1..=8 {
            let u = random_unitary(n, 100 + n as u64);
            let uu = &u.adjoint() * &u;
            assert!((&uu - &ComplexMatrix::identity(n)).max_abs() <= 1e-10);
            assert!(close(&u.singular_values().unwrap(), &vec![1.0; n], 1e-9));
        }
        assert_eq!(random_unitary(4, 42), random_unitary(4, 42));
        assert_ne!(random_unitary(4, 42), random_unitary(4, 43));
    }

    #[test]
    fn psd_check() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let x = ComplexMatrix::random_gaussian(3, &mut rng);
        let psd = &x * &x.adjoint();
        assert!(psd.is_positive_semidefinite(1e-10).unwrap());
        assert!(!ComplexMatrix::diag(&[1.0, -1.0]).is_positive_semidefinite(1e-10).unwrap());
        assert!(!x.is_positive_semidefinite(1e-10).unwrap());
    }

    #[test]
    fn rejects_non_finite() {
        let err = ComplexMatrix::new(1, vec![Complex64::new(f64::NAN, 0.0)]).unwrap_err();
        assert!(matches!(err, Error::Input(_)));
        assert!(ComplexMatrix::from_real_rows(&[vec![1.0, 2.0]]).is_err());
    }

    #[test]
    fn json_and_csv() {
        let m = ComplexMatrix::from_json(r#"{"n": 2, "re": [[1, 2], [3, 4]], "im": [[0, 1], [0, 0]]}"#).unwrap();
        assert_eq!(m[(0, 1)], Complex64::new(2.0, 1.0));
        assert_eq!(ComplexMatrix::from_json(&m.to_json()).unwrap(), m);
        assert_eq!(ComplexMatrix::from_csv(&m.to_csv()).unwrap(), m);
        let real = ComplexMatrix::from_json(r#"{"n": 1, "re": [[2]]}"#).unwrap();
        assert_eq!(real[(0, 0)], Complex64::new(2.0, 0.0));
        let err = ComplexMatrix::from_csv("1,0,2,0\n3,0,x,0\n").unwrap_err();
        assert_eq!(err, Error::Parse("matrix csv line 2, column 3: bad number \"x\"".into()));
        assert!(matches!(ComplexMatrix::from_json(r#"{"n": 2, "re": [[1]]}"#), Err(Error::Parse(_))));
    }
}
