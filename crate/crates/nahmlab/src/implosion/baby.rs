//! The Baby Nahm equation `dT_1/dt + [T_0, T_1] = 0`, the identifications
//! `Phi` on `[0, L]` and on the half-line, and the `[C,C]` collapse.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gauge::{apply_gauge, gauge_t0_to_zero, unitary_path_to, GaugeFixReport};
use crate::lie::element::LieElement;
use crate::lie::matrix::{self, CMat, C64};
use crate::nahm::dynamics::sup_norm;
use crate::nahm::grid::Grid;
use crate::nahm::path::NahmPath;

use super::face::WeylFace;

/// Largest baby residual accepted by [`baby_phi_interval`] and [`baby_phi_halfline`].
pub const BABY_RESIDUAL_TOL: f64 = 1e-6;
/// Largest `|T_1(t_max) - tau_1|` and `|T_0(t_max)|` accepted on the half-line.
pub const LIMIT_TOL: f64 = 1e-6;
/// Distance below which two points are `[C,C]`-equivalent.
pub const CC_TOL: f64 = 1e-7;

/// `dT_1/dt + [T_0, T_1]` for series on a common grid.
pub fn baby_residual_series(grid: &Grid, t0: &[LieElement], t1: &[LieElement]) -> Result<Vec<LieElement>> {
    if t0.len() != grid.len() || t1.len() != grid.len() {
        return Err(Error::GridMismatch);
    }
    let d = grid.derivative(t1);
    Ok(d.iter().zip(t0).zip(t1).map(|((dx, a), b)| dx + &a.br(b)).collect())
}

/// Baby residual of components 0 and 1 of a path.
pub fn baby_residual(t: &NahmPath) -> Result<Vec<LieElement>> {
    baby_residual_series(t.grid(), &t.component(0), &t.component(1))
}

/// Sup norm of [`baby_residual`].
pub fn baby_residual_sup(t: &NahmPath) -> Result<f64> {
    Ok(sup_norm(&baby_residual(t)?))
}

/// A point `(k, xi)` of `K x k`, together with the gauge fixing diagnostics.
#[derive(Clone, Debug)]
pub struct BabyPoint {
    pub k: CMat,
    pub xi: LieElement,
    pub residual: f64,
    pub fix: GaugeFixReport,
}

/// `Phi(T) = (u_0(L), T_1(0))` on `[0, L]`, where `u_0(0) = 1` and
/// `u_0.T_0 = 0`.
pub fn baby_phi_interval(t: &NahmPath) -> Result<BabyPoint> {
    if t.grid().is_halfline() {
        return Err(Error::Grid("baby_phi_interval needs an interval grid".into()));
    }
    let residual = baby_residual_sup(t)?;
    if residual > BABY_RESIDUAL_TOL {
        return Err(Error::Residual(residual));
    }
    let (u, _, fix) = gauge_t0_to_zero(t)?;
    Ok(BabyPoint { k: u.boundary().1.clone(), xi: t.samples()[0][1].clone(), residual, fix })
}

/// `Psi(k, xi) = u_0^{-1}.(0, xi)` with `u_0` the path from
/// [`unitary_path_to`]; the inverse of [`baby_phi_interval`].
pub fn baby_psi_interval(grid: &Grid, k: &CMat, xi: &LieElement) -> Result<NahmPath> {
    if grid.is_halfline() {
        return Err(Error::Grid("baby_psi_interval needs an interval grid".into()));
    }
    let n = xi.dim();
    let u0 = unitary_path_to(grid, k)?;
    let base = NahmPath::baby(grid, vec![LieElement::zeros(n); grid.len()], vec![xi.clone(); grid.len()])?;
    apply_gauge(&u0.inverse()?, &base)
}

/// A point of `K x (t_+)_C` before the `[C,C]` collapse.
#[derive(Clone, Debug)]
pub struct HalflinePoint {
    pub k: CMat,
    pub tau1: LieElement,
    pub face: WeylFace,
    pub residual: f64,
    pub fix: GaugeFixReport,
}

impl HalflinePoint {
    /// Compare with another point under `(k, tau_1) ~ (k c, tau_1)`.
    pub fn equivalent(&self, other: &HalflinePoint) -> Result<CcEquivalence> {
        let d = (&self.tau1 - &other.tau1).norm();
        let mut e = cc_equivalent(&self.face, &self.k, &other.k)?;
        if d > CC_TOL {
            e.equivalent = false;
        }
        Ok(e)
    }
}

/// `Phi(T) = (u_0(0), T_1(inf))` with `T = u_0.(0, tau_1)` and
/// `u_0(inf) = 1`.
///
/// With `w` the gauge killing `T_0` and `w(0) = 1`, `u_0 = w^{-1} w(inf)`, so
/// `u_0(0) = w(t_max)`. The limit is read from the asymptotic record if
/// present and from the last node otherwise; it must lie in `face`.
pub fn baby_phi_halfline(t: &NahmPath, face: &WeylFace) -> Result<HalflinePoint> {
    if !t.grid().is_halfline() {
        return Err(Error::Grid("baby_phi_halfline needs a half-line grid".into()));
    }
    if t.dim() != face.n() {
        return Err(Error::DimensionMismatch(t.dim(), face.n()));
    }
    let last = t.samples().last().unwrap();
    let (tau0, limit) = match t.asymptotics() {
        Some(a) => (a.tau0.clone(), a.tau[0].clone()),
        None => (last[0].clone(), last[1].clone()),
    };
    if tau0.norm() > LIMIT_TOL {
        return Err(Error::Parameter(format!("tau_0 must vanish, |tau_0| = {:.3e}", tau0.norm())));
    }
    let gap = (&last[1] - &limit).norm();
    if gap > LIMIT_TOL {
        return Err(Error::Face(format!("|T_1(t_max) - tau_1| = {gap:.3e}")));
    }
    if !face.contains(&limit, LIMIT_TOL) {
        return Err(Error::Face(format!("limit {:?} not in face {:?}", limit.diagonal_values(), face.blocks())));
    }
    let residual = baby_residual_sup(t)?;
    if residual > BABY_RESIDUAL_TOL {
        return Err(Error::Residual(residual));
    }
    let (w, _, fix) = gauge_t0_to_zero(t)?;
    let tau1 = face.stratum().proj_z(&LieElement::project(&CMat::from_diagonal(&limit.matrix().diagonal())));
    Ok(HalflinePoint { k: w.boundary().1.clone(), tau1, face: face.clone(), residual, fix })
}

/// Outcome of [`cc_equivalent`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CcEquivalence {
    /// `|k_1^{-1} k_2 - c|` for the nearest `c` in `[C,C]`.
    pub distance: f64,
    pub equivalent: bool,
}

/// Nearest element of `[C,C]`: the block-diagonal part of `m`, each block
/// polar-projected to a unitary and its determinant phase removed.
pub fn nearest_cc(face: &WeylFace, m: &CMat) -> CMat {
    let s = face.stratum();
    let n = s.n();
    let mut c = CMat::zeros(n, n);
    for b in 0..s.num_blocks() {
        let idx = s.block_members(b);
        let d = idx.len();
        let blk = CMat::from_fn(d, d, |r, q| m[(idx[r], idx[q])]);
        let svd = blk.svd(true, true);
        let (Some(u), Some(vt)) = (svd.u, svd.v_t) else { continue };
        let mut p = u * vt;
        let phase = matrix::det(&p).arg();
        p *= C64::from_polar(1.0, -phase / d as f64);
        for r in 0..d {
            for q in 0..d {
                c[(idx[r], idx[q])] = p[(r, q)];
            }
        }
    }
    c
}

/// Whether `k_2 = k_1 c` for some `c` in `[C,C]`, up to [`CC_TOL`].
pub fn cc_equivalent(face: &WeylFace, k1: &CMat, k2: &CMat) -> Result<CcEquivalence> {
    let n = face.n();
    if k1.nrows() != n || k2.nrows() != n {
        return Err(Error::DimensionMismatch(k1.nrows(), n));
    }
    let m = k1.adjoint() * k2;
    let distance = matrix::fro(&(&m - nearest_cc(face, &m)));
    Ok(CcEquivalence { distance, equivalent: distance <= CC_TOL })
}
