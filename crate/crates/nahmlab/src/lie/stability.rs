//! The Chern-Simons function on `c^3` and the Hessian and Casimir spectra
//! at an su(2)-triple.

use nalgebra as na;
use serde::{Deserialize, Serialize};

use super::element::LieElement;
use super::stratum::StratumData;
use super::triple::Su2Triple;
use crate::error::{Error, Result};

/// Eigenvalues below this count as zero.
pub const POSITIVE_TOL: f64 = 1e-9;

/// Spectra of `Hess(phi)` on `c^3` and of the Casimir on `c`, ascending.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StabilityConstants {
    pub hess_spectrum: Vec<f64>,
    pub casimir_spectrum: Vec<f64>,
    pub zeta_bound: f64,
}

fn check_in_c(xi: &[LieElement; 3], s: &StratumData) -> Result<()> {
    for x in xi {
        if x.dim() != s.n() {
            return Err(Error::DimensionMismatch(x.dim(), s.n()));
        }
        let h = s.proj_perp(x).norm();
        if h > 1e-10 {
            return Err(Error::OutsideCentralizer(h));
        }
    }
    Ok(())
}

/// `phi(xi) = sum <xi_i, xi_i> + <xi_1, [xi_2, xi_3]>` for `xi` in `c^3`.
pub fn chern_simons(xi: &[LieElement; 3], s: &StratumData) -> Result<f64> {
    check_in_c(xi, s)?;
    let q: f64 = xi.iter().map(|x| x.norm_sq()).sum();
    Ok(q + xi[0].dot(&xi[1].br(&xi[2])))
}

/// Gradient of `phi`: `(2 xi_1 + [xi_2, xi_3], ...)` cyclically.
pub fn chern_simons_gradient(xi: &[LieElement; 3]) -> [LieElement; 3] {
    let g = |i: usize, j: usize, k: usize| &(&xi[i] * 2.0) + &xi[j].br(&xi[k]);
    [g(0, 1, 2), g(1, 2, 0), g(2, 0, 1)]
}

/// `Hess(phi)_sigma` applied to `psi`; pairing the result with `xi` gives
/// `<xi_1, 2psi_1 - [s3,psi_2] + [s2,psi_3]> + ...`.
pub fn hessian_apply(sigma: &[LieElement; 3], psi: &[LieElement; 3]) -> [LieElement; 3] {
    let [s1, s2, s3] = sigma;
    let [p1, p2, p3] = psi;
    [
        &(&(p1 * 2.0) - &s3.br(p2)) + &s2.br(p3),
        &(&(p2 * 2.0) + &s3.br(p1)) - &s1.br(p3),
        &(&(p3 * 2.0) + &s1.br(p2)) - &s2.br(p1),
    ]
}

/// The Hessian bilinear form `Hess(phi)_sigma(xi, psi)`.
pub fn hessian_form(sigma: &[LieElement; 3], xi: &[LieElement; 3], psi: &[LieElement; 3]) -> f64 {
    let h = hessian_apply(sigma, psi);
    (0..3).map(|i| xi[i].dot(&h[i])).sum()
}

/// Casimir `gamma(sigma) x = -sum [sigma_i, [sigma_i, x]]`.
pub fn casimir_apply(sigma: &[LieElement; 3], x: &LieElement) -> LieElement {
    let mut out = LieElement::zeros(x.dim());
    for s in sigma {
        out -= &s.br(&s.br(x));
    }
    out
}

fn sym_spectrum(mut m: na::DMatrix<f64>) -> Vec<f64> {
    let mt = m.transpose();
    m = (m + mt) * 0.5;
    let mut ev: Vec<f64> = na::SymmetricEigen::new(m).eigenvalues.iter().copied().collect();
    ev.sort_by(|a, b| a.partial_cmp(b).unwrap());
    ev
}

/// Hessian and Casimir spectra and the resulting bound on `zeta`.
pub fn stability_constants(sigma: &Su2Triple, s: &StratumData) -> Result<StabilityConstants> {
    let sg = sigma.sigma();
    check_in_c(sg, s)?;
    let basis = s.basis_c();
    let m = basis.len();
    let n = s.n();

    let mut hess = na::DMatrix::<f64>::zeros(3 * m, 3 * m);
    for col in 0..3 * m {
        let mut psi = [LieElement::zeros(n), LieElement::zeros(n), LieElement::zeros(n)];
        psi[col / m] = basis[col % m].clone();
        let h = hessian_apply(sg, &psi);
        for row in 0..3 * m {
            hess[(row, col)] = basis[row % m].dot(&h[row / m]);
        }
    }
    let mut cas = na::DMatrix::<f64>::zeros(m, m);
    for col in 0..m {
        let g = casimir_apply(sg, &basis[col]);
        for row in 0..m {
            cas[(row, col)] = basis[row].dot(&g);
        }
    }
    let hess_spectrum = sym_spectrum(hess);
    let casimir_spectrum = sym_spectrum(cas);
    let first_pos = |v: &[f64]| v.iter().copied().find(|&x| x > POSITIVE_TOL);
    let zeta_bound = match (first_pos(&hess_spectrum), first_pos(&casimir_spectrum)) {
        (Some(a), Some(b)) => a.min(b),
        (Some(a), None) => a,
        (None, Some(b)) => b,
        (None, None) => return Err(Error::NoPositiveEigenvalue),
    };
    Ok(StabilityConstants { hess_spectrum, casimir_spectrum, zeta_bound })
}
