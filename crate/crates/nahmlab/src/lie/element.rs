//! Elements of `su(n)`: traceless skew-Hermitian matrices.

use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use rand::Rng;

use super::matrix::{self, CMat, C64};
use crate::error::{Error, Result};

/// Per-entry tolerance for the skew-Hermitian and traceless checks.
pub const ELEMENT_TOL: f64 = 1e-12;

/// A point of `su(n)`.
///
/// The inner product is `<x, y> = -tr(xy)`, for which the standard su(2)-triple
/// has `<sigma_i, sigma_i> = 2`.
#[derive(Clone, Debug, PartialEq)]
pub struct LieElement {
    m: CMat,
}

impl LieElement {
    /// The zero element of `su(n)`.
    pub fn zeros(n: usize) -> Self {
        LieElement { m: CMat::zeros(n, n) }
    }

    /// Wrap a matrix after checking it is square, skew-Hermitian and
    /// traceless to [`ELEMENT_TOL`].
    pub fn new(m: CMat) -> Result<Self> {
        if m.nrows() != m.ncols() {
            return Err(Error::DimensionMismatch(m.nrows(), m.ncols()));
        }
        let n = m.nrows();
        for i in 0..n {
            for j in 0..n {
                let s = m[(i, j)] + m[(j, i)].conj();
                if s.norm() > ELEMENT_TOL {
                    return Err(Error::InvalidElement(format!(
                        "entry ({i},{j}) breaks skew-Hermitian symmetry by {:.3e}",
                        s.norm()
                    )));
                }
            }
        }
        let tr = m.trace().norm();
        if tr > ELEMENT_TOL {
            return Err(Error::InvalidElement(format!("trace {tr:.3e}")));
        }
        Ok(LieElement { m })
    }

    /// Orthogonal projection of an arbitrary square matrix onto `su(n)`.
    pub fn project(m: &CMat) -> Self {
        LieElement { m: matrix::skew_traceless(m) }
    }

    /// Wrap a matrix that is skew-Hermitian and traceless by construction.
    pub(crate) fn from_raw(m: CMat) -> Self {
        LieElement { m }
    }

    /// `i * diag(values)`; the values must sum to zero.
    pub fn diagonal(values: &[f64]) -> Result<Self> {
        let s: f64 = values.iter().sum();
        if s.abs() > ELEMENT_TOL {
            return Err(Error::InvalidElement(format!("diagonal sums to {s:.3e}")));
        }
        let n = values.len();
        let mut m = CMat::zeros(n, n);
        for (i, &v) in values.iter().enumerate() {
            m[(i, i)] = C64::new(0.0, v);
        }
        Ok(LieElement { m })
    }

    /// Matrix size `n`.
    pub fn dim(&self) -> usize {
        self.m.nrows()
    }

    /// Underlying matrix.
    pub fn matrix(&self) -> &CMat {
        &self.m
    }

    /// Consume into the underlying matrix.
    pub fn into_matrix(self) -> CMat {
        self.m
    }

    fn same_dim(&self, other: &LieElement) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch(self.dim(), other.dim()));
        }
        Ok(())
    }

    /// Commutator `[x, y] = xy - yx`.
    pub fn bracket(&self, other: &LieElement) -> Result<LieElement> {
        self.same_dim(other)?;
        Ok(self.br(other))
    }

    /// Unchecked commutator for internal hot loops.
    pub(crate) fn br(&self, other: &LieElement) -> LieElement {
        LieElement { m: matrix::comm(&self.m, &other.m) }
    }

    /// Invariant inner product `-tr(xy)`.
    pub fn inner(&self, other: &LieElement) -> Result<f64> {
        self.same_dim(other)?;
        Ok(self.dot(other))
    }

    /// Unchecked inner product.
    pub(crate) fn dot(&self, other: &LieElement) -> f64 {
        -matrix::re_trace_product(&self.m, &other.m)
    }

    /// `<x, x>`.
    pub fn norm_sq(&self) -> f64 {
        self.m.iter().map(|z| z.norm_sqr()).sum()
    }

    /// `sqrt(<x, x>)`, equal to the Frobenius norm.
    pub fn norm(&self) -> f64 {
        self.norm_sq().sqrt()
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        matrix::max_abs(&self.m)
    }

    /// Conjugation `u x u^{-1}` by an invertible matrix; the result is
    /// projected back to `su(n)`, which is exact for unitary `u`.
    pub fn conjugate(&self, u: &CMat) -> LieElement {
        let inv = matrix::inverse(u).expect("conjugation by a singular matrix");
        LieElement::project(&(u * &self.m * inv))
    }

    /// Conjugation `u x u*` by a unitary matrix, without inversion.
    pub fn ad_unitary(&self, u: &CMat) -> LieElement {
        LieElement::project(&(u * &self.m * u.adjoint()))
    }

    /// Whether the matrix is diagonal up to `tol`.
    pub fn is_diagonal(&self, tol: f64) -> bool {
        let n = self.dim();
        (0..n).all(|i| (0..n).all(|j| i == j || self.m[(i, j)].norm() <= tol))
    }

    /// Imaginary parts of the diagonal entries.
    pub fn diagonal_values(&self) -> Vec<f64> {
        (0..self.dim()).map(|i| self.m[(i, i)].im).collect()
    }

    /// Random element with entries of order one.
    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        let mut m = CMat::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] = C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            }
        }
        LieElement::project(&m)
    }

    /// An orthonormal basis of `su(n)`: off-diagonal pairs in lexicographic
    /// order, then the generalized Gell-Mann diagonal elements.
    pub fn basis(n: usize) -> Vec<LieElement> {
        let mut out = Vec::with_capacity(n * n - 1);
        for j in 0..n {
            for k in (j + 1)..n {
                let (e1, e2) = off_diagonal_pair(n, j, k);
                out.push(e1);
                out.push(e2);
            }
        }
        out.extend(diagonal_basis(n));
        out
    }
}

/// The orthonormal pair `(E_jk - E_kj)/sqrt2`, `i(E_jk + E_kj)/sqrt2`.
pub fn off_diagonal_pair(n: usize, j: usize, k: usize) -> (LieElement, LieElement) {
    let r = std::f64::consts::FRAC_1_SQRT_2;
    let mut a = CMat::zeros(n, n);
    a[(j, k)] = C64::new(r, 0.0);
    a[(k, j)] = C64::new(-r, 0.0);
    let mut b = CMat::zeros(n, n);
    b[(j, k)] = C64::new(0.0, r);
    b[(k, j)] = C64::new(0.0, r);
    (LieElement::from_raw(a), LieElement::from_raw(b))
}

/// Orthonormal basis of the diagonal subalgebra `t`.
pub fn diagonal_basis(n: usize) -> Vec<LieElement> {
    (1..n)
        .map(|k| {
            let norm = ((k * (k + 1)) as f64).sqrt();
            let mut m = CMat::zeros(n, n);
            for i in 0..k {
                m[(i, i)] = C64::new(0.0, 1.0 / norm);
            }
            m[(k, k)] = C64::new(0.0, -(k as f64) / norm);
            LieElement::from_raw(m)
        })
        .collect()
}

impl Add for &LieElement {
    type Output = LieElement;
    fn add(self, rhs: &LieElement) -> LieElement {
        LieElement { m: &self.m + &rhs.m }
    }
}

impl Add for LieElement {
    type Output = LieElement;
    fn add(self, rhs: LieElement) -> LieElement {
        LieElement { m: self.m + rhs.m }
    }
}

impl Sub for &LieElement {
    type Output = LieElement;
    fn sub(self, rhs: &LieElement) -> LieElement {
        LieElement { m: &self.m - &rhs.m }
    }
}

impl Sub for LieElement {
    type Output = LieElement;
    fn sub(self, rhs: LieElement) -> LieElement {
        LieElement { m: self.m - rhs.m }
    }
}

impl Neg for &LieElement {
    type Output = LieElement;
    fn neg(self) -> LieElement {
        LieElement { m: -&self.m }
    }
}

impl Neg for LieElement {
    type Output = LieElement;
    fn neg(self) -> LieElement {
        LieElement { m: -self.m }
    }
}

impl Mul<f64> for &LieElement {
    type Output = LieElement;
    fn mul(self, rhs: f64) -> LieElement {
        LieElement { m: &self.m * C64::new(rhs, 0.0) }
    }
}

impl Mul<f64> for LieElement {
    type Output = LieElement;
    fn mul(self, rhs: f64) -> LieElement {
        LieElement { m: self.m * C64::new(rhs, 0.0) }
    }
}

impl AddAssign<&LieElement> for LieElement {
    fn add_assign(&mut self, rhs: &LieElement) {
        self.m += &rhs.m;
    }
}

impl SubAssign<&LieElement> for LieElement {
    fn sub_assign(&mut self, rhs: &LieElement) {
        self.m -= &rhs.m;
    }
}
