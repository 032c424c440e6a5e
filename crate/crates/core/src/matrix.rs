//! Minimal dense square-matrix arithmetic over `f64` and `Complex64`,
//! sized for isotypic projectors of permutation actions (n ≤ a few hundred).
//!
//! Rank is computed from the spectrum: the projectors checked downstream are
//! symmetric (real case) or Hermitian (complex case), so singular values are
//! absolute eigenvalues, and a cyclic Jacobi sweep on the symmetric real form
//! is accurate to machine precision. Complex Hermitian matrices are embedded
//! as `[[Re, −Im], [Im, Re]]`, which doubles every eigenvalue.

use num_complex::Complex64;

use crate::error::Error;
use crate::Result;

/// Scalar for projector arithmetic: the two ground fields of the theory.
pub trait Scalar: Copy + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_re(x: f64) -> Self;
    fn add(a: Self, b: Self) -> Self;
    fn sub(a: Self, b: Self) -> Self;
    fn mul(a: Self, b: Self) -> Self;
    fn norm(a: Self) -> f64;
    /// Spectrum-based rank of a symmetric/Hermitian matrix.
    fn hermitian_rank(m: &Matrix<Self>, tol: f64) -> Result<usize>;
}

impl Scalar for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_re(x: f64) -> Self {
        x
    }
    fn add(a: Self, b: Self) -> Self {
        a + b
    }
    fn sub(a: Self, b: Self) -> Self {
        a - b
    }
    fn mul(a: Self, b: Self) -> Self {
        a * b
    }
    fn norm(a: Self) -> f64 {
        a.abs()
    }
    fn hermitian_rank(m: &Matrix<Self>, tol: f64) -> Result<usize> {
        let eigen = symmetric_eigenvalues(m)?;
        Ok(eigen.iter().filter(|l| l.abs() > tol).count())
    }
}

impl Scalar for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn from_re(x: f64) -> Self {
        Complex64::new(x, 0.0)
    }
    fn add(a: Self, b: Self) -> Self {
        a + b
    }
    fn sub(a: Self, b: Self) -> Self {
        a - b
    }
    fn mul(a: Self, b: Self) -> Self {
        a * b
    }
    fn norm(a: Self) -> f64 {
        a.norm()
    }
    fn hermitian_rank(m: &Matrix<Self>, tol: f64) -> Result<usize> {
        // [[Re, −Im], [Im, Re]] is symmetric for Hermitian m and carries each
        // eigenvalue twice.
        let n = m.n;
        let mut embedded = Matrix::<f64>::zero(2 * n);
        for i in 0..n {
            for j in 0..n {
                let v = m.get(i, j);
                embedded.set(i, j, v.re);
                embedded.set(i, j + n, -v.im);
                embedded.set(i + n, j, v.im);
                embedded.set(i + n, j + n, v.re);
            }
        }
        let doubled = f64::hermitian_rank(&embedded, tol)?;
        if doubled % 2 != 0 {
            return Err(Error::Internal(
                "complex embedding produced an odd eigenvalue count".into(),
            ));
        }
        Ok(doubled / 2)
    }
}

/// A dense square matrix in row-major order.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<S: Scalar> {
    n: usize,
    data: Vec<S>,
}

impl<S: Scalar> Matrix<S> {
    pub fn zero(n: usize) -> Self {
        Matrix {
            n,
            data: vec![S::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n);
        for i in 0..n {
            m.set(i, i, S::one());
        }
        m
    }

    /// The permutation matrix sending basis vector `e_x` to `e_{σ(x)}`.
    pub fn permutation(images: &[usize]) -> Self {
        let n = images.len();
        let mut m = Matrix::zero(n);
        for (x, &sx) in images.iter().enumerate() {
            m.set(sx, x, S::one());
        }
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> S {
        self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: S) {
        self.data[i * self.n + j] = v;
    }

    pub fn add_scaled(&mut self, other: &Matrix<S>, factor: S) {
        for (a, &b) in self.data.iter_mut().zip(&other.data) {
            *a = S::add(*a, S::mul(factor, b));
        }
    }

    pub fn matmul(&self, other: &Matrix<S>) -> Matrix<S> {
        let n = self.n;
        let mut out = Matrix::zero(n);
        for i in 0..n {
            for k in 0..n {
                let aik = self.get(i, k);
                if aik == S::zero() {
                    continue;
                }
                for j in 0..n {
                    let v = S::add(out.get(i, j), S::mul(aik, other.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    /// Rows permuted by `σ`: row `x` of `self` becomes row `σ(x)`; equals
    /// `permutation(σ) · self` without forming the permutation matrix.
    pub fn permute_rows(&self, images: &[usize]) -> Matrix<S> {
        let n = self.n;
        let mut out = Matrix::zero(n);
        for (x, &tx) in images.iter().enumerate() {
            for j in 0..n {
                out.set(tx, j, self.get(x, j));
            }
        }
        out
    }

    pub fn sub(&self, other: &Matrix<S>) -> Matrix<S> {
        let mut out = self.clone();
        for (a, &b) in out.data.iter_mut().zip(&other.data) {
            *a = S::sub(*a, b);
        }
        out
    }

    /// Largest entry magnitude.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|&v| S::norm(v)).fold(0.0, f64::max)
    }

    pub fn trace_norm_diff_identity(&self) -> f64 {
        let mut m = self.clone();
        for i in 0..self.n {
            m.set(i, i, S::sub(m.get(i, i), S::one()));
        }
        m.max_abs()
    }

    pub fn rank(&self, tol: f64) -> Result<usize> {
        S::hermitian_rank(self, tol)
    }
}

/// Eigenvalues of a symmetric real matrix by cyclic Jacobi rotations.
pub fn symmetric_eigenvalues(m: &Matrix<f64>) -> Result<Vec<f64>> {
    let n = m.size();
    let mut a = m.clone();
    let sym_residual = {
        let mut r: f64 = 0.0;
        for i in 0..n {
            for j in 0..n {
                r = r.max((a.get(i, j) - a.get(j, i)).abs());
            }
        }
        r
    };
    if sym_residual > 1e-9 {
        return Err(Error::Structural(format!(
            "matrix is not symmetric (residual {sym_residual:.3e})"
        )));
    }

    for _sweep in 0..100 {
        let mut off: f64 = 0.0;
        for i in 0..n {
            for j in (i + 1)..n {
                off += a.get(i, j) * a.get(i, j);
            }
        }
        if off.sqrt() < 1e-13 {
            let mut eigen: Vec<f64> = (0..n).map(|i| a.get(i, i)).collect();
            eigen.sort_by(|x, y| x.partial_cmp(y).expect("finite eigenvalues"));
            return Ok(eigen);
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a.get(p, q);
                if apq.abs() < 1e-300 {
                    continue;
                }
                let theta = (a.get(q, q) - a.get(p, p)) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a.get(k, p);
                    let akq = a.get(k, q);
                    a.set(k, p, c * akp - s * akq);
                    a.set(k, q, s * akp + c * akq);
                }
                for k in 0..n {
                    let apk = a.get(p, k);
                    let aqk = a.get(q, k);
                    a.set(p, k, c * apk - s * aqk);
                    a.set(q, k, s * apk + c * aqk);
                }
            }
        }
    }
    Err(Error::Internal(
        "Jacobi eigenvalue iteration did not converge".into(),
    ))
}
