//! Polar decomposition `g = k exp(i xi)` in `SL(n, C)`, and unitary paths
//! joining the identity to a prescribed endpoint.

use nalgebra as na;

use crate::error::{Error, Result};
use crate::lie::element::LieElement;
use crate::lie::matrix::{self, CMat, C64};
use crate::nahm::grid::Grid;

use super::path::{Flavor, GaugePath, Profile};

/// Determinant tolerance for [`polar_decompose`].
pub const POLAR_DET_TOL: f64 = 1e-8;

/// `g = k exp(i xi)` with `k` unitary and `xi` in `su(n)`, so that
/// `exp(i xi)` is positive definite Hermitian.
#[derive(Clone, Debug)]
pub struct Polar {
    pub k: CMat,
    pub xi: LieElement,
}

impl Polar {
    /// `k exp(i xi)`.
    pub fn reconstruct(&self) -> CMat {
        &self.k * matrix::expm(&(self.xi.matrix() * matrix::I))
    }
}

/// Polar decomposition via the SVD `g = U S V*`: `k = U V*` and
/// `exp(i xi) = V S V*`.
pub fn polar_decompose(g: &CMat) -> Result<Polar> {
    let d = matrix::det(g);
    if (d - C64::new(1.0, 0.0)).norm() > POLAR_DET_TOL {
        return Err(Error::Singular(format!("det = {d}")));
    }
    let svd = g.clone().svd(true, true);
    let u = svd.u.ok_or_else(|| Error::Singular("svd failed".into()))?;
    let v_t = svd.v_t.ok_or_else(|| Error::Singular("svd failed".into()))?;
    if svd.singular_values.iter().any(|&s| !(s > 0.0)) {
        return Err(Error::Singular("zero singular value".into()));
    }
    let n = g.nrows();
    let log_s = CMat::from_diagonal(&na::DVector::from_iterator(
        n,
        svd.singular_values.iter().map(|s| C64::new(s.ln(), 0.0)),
    ));
    let v = v_t.adjoint();
    let h = &v * log_s * &v_t;
    // i xi = V log(S) V*, so xi = -i V log(S) V*.
    let xi = LieElement::project(&(h * C64::new(0.0, -1.0)));
    Ok(Polar { k: u * v_t, xi })
}

/// A unitary path on `grid` with `u(0) = 1` and `u(t_end) = k`.
///
/// Uses `exp(s log k)` with `s = t / t_end` when the logarithm is defined;
/// otherwise splits `k = exp(A) exp(B)` with a fixed diagonal `A` and
/// follows both factors at once.
pub fn unitary_path_to(grid: &Grid, k: &CMat) -> Result<GaugePath> {
    let tend = grid.t_max();
    let f_lin = move |t: f64| t / tend;
    let df_lin = move |_t: f64| 1.0 / tend;
    if let Some(l) = matrix::log_special_unitary(k) {
        return GaugePath::exp_product(grid, &[(Profile { f: &f_lin, df: &df_lin }, l)], Flavor::Unitary);
    }
    let n = k.nrows();
    // u(t) = exp(s A) exp(s B) with exp(A) exp(B) = k.
    let mut diag = vec![0.0; n];
    for (j, d) in diag.iter_mut().enumerate() {
        *d = 0.37 * (j as f64 - (n as f64 - 1.0) / 2.0);
    }
    let a = LieElement::diagonal(&diag)?.into_matrix();
    let rest = matrix::expm(&(-&a)) * k;
    let b = matrix::log_special_unitary(&rest)
        .ok_or_else(|| Error::Singular("no logarithm for the two-factor path".into()))?;
    GaugePath::exp_product(
        grid,
        &[(Profile { f: &f_lin, df: &df_lin }, a), (Profile { f: &f_lin, df: &df_lin }, b)],
        Flavor::Unitary,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unitary_input() {
        let mut a = CMat::zeros(2, 2);
        a[(0, 1)] = C64::new(0.4, 0.1);
        a[(1, 0)] = C64::new(-0.4, 0.1);
        let g = matrix::expm(&a);
        let p = polar_decompose(&g).unwrap();
        assert!(matrix::fro(&(&p.k - &g)) < 1e-12);
        assert!(p.xi.norm() < 1e-12);
    }
}
