//! Closed-form metric, complex structure and symplectic form on a stratum of
//! the implosion at `(1, tau_1)`, and the ambient structures they come from.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lie::element::LieElement;
use crate::lie::matrix::{self, C64};
use crate::metric::{bielawski_pair, MetricConfig};
use crate::nahm::grid::Grid;
use crate::nahm::path::TangentVector;

use super::baby::baby_psi_interval;
use super::face::{FaceSummary, WeylFace};
use super::tangent::TangentCoords;

/// Evaluators over [`TangentCoords`] for a face and a parameter `b`.
#[derive(Clone, Debug, PartialEq)]
pub struct BabyGeometry {
    pub face: WeylFace,
    pub b: f64,
}

/// Serializable record of a geometry and a table of sampled evaluator values.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GeometryReport {
    pub face: FaceSummary,
    pub b: f64,
    /// `(metric(X, X), omega(X, Y), metric(IX, Y))` for sampled pairs.
    pub table: Vec<[f64; 3]>,
}

/// The baby geometry of `face` with parameter `b`.
pub fn baby_geometry(face: &WeylFace, b: f64) -> Result<BabyGeometry> {
    if !b.is_finite() {
        return Err(Error::Parameter("b must be finite".into()));
    }
    Ok(BabyGeometry { face: face.clone(), b })
}

impl BabyGeometry {
    fn need_positive_b(&self) -> Result<()> {
        if !(self.b > 0.0) {
            return Err(Error::Parameter(format!("b = {} must be positive", self.b)));
        }
        Ok(())
    }

    /// `b <w, w'> + <v, v'>/b + sum_alpha alpha <v_perp_alpha, v'_perp_alpha>`.
    pub fn metric(&self, x: &TangentCoords, y: &TangentCoords) -> Result<f64> {
        self.need_positive_b()?;
        let perp: f64 = self
            .face
            .roots()
            .iter()
            .map(|r| {
                let p = r.coords(&x.v_perp);
                let q = r.coords(&y.v_perp);
                r.alpha_value * (p[0] * q[0] + p[1] * q[1])
            })
            .sum();
        Ok(self.b * x.w.dot(&y.w) + x.v.dot(&y.v) / self.b + perp)
    }

    /// `I(v + v_perp, w) = (-b w + I_0 v_perp, v/b)`.
    pub fn complex_structure(&self, x: &TangentCoords) -> Result<TangentCoords> {
        self.need_positive_b()?;
        let n = self.face.n();
        let mut v_perp = LieElement::zeros(n);
        for r in self.face.roots() {
            v_perp += &r.element(r.apply_i0(r.coords(&x.v_perp)));
        }
        Ok(TangentCoords { v: &x.w * (-self.b), v_perp, w: &x.v * (1.0 / self.b) })
    }

    /// `<v_1, w_2> - <w_1, v_2> + <tau_1, [v_1perp, v_2perp]>`; has no `b`.
    pub fn symplectic(&self, x: &TangentCoords, y: &TangentCoords) -> f64 {
        x.v.dot(&y.w) - x.w.dot(&y.v) + self.kks(x, y)
    }

    /// `<tau_1, [v_1perp, v_2perp]>`.
    pub fn kks(&self, x: &TangentCoords, y: &TangentCoords) -> f64 {
        self.face.tau1().dot(&x.v_perp.br(&y.v_perp))
    }

    /// The `c^perp` part of `metric(IX, Y)`: `sum_alpha alpha <I_0 v_1alpha, v_2alpha>`.
    pub fn kks_from_roots(&self, x: &TangentCoords, y: &TangentCoords) -> f64 {
        self.face
            .roots()
            .iter()
            .map(|r| {
                let p = r.apply_i0(r.coords(&x.v_perp));
                let q = r.coords(&y.v_perp);
                r.alpha_value * (p[0] * q[0] + p[1] * q[1])
            })
            .sum()
    }

    /// `metric(IX, Y)`.
    pub fn symplectic_from_metric(&self, x: &TangentCoords, y: &TangentCoords) -> Result<f64> {
        self.metric(&self.complex_structure(x)?, y)
    }

    /// Evaluate the three forms on paired coordinates.
    pub fn report(&self, pairs: &[(TangentCoords, TangentCoords)]) -> Result<GeometryReport> {
        let table = pairs
            .iter()
            .map(|(x, y)| Ok([self.metric(x, x)?, self.symplectic(x, y), self.symplectic_from_metric(x, y)?]))
            .collect::<Result<Vec<_>>>()?;
        Ok(GeometryReport { face: self.face.summary(), b: self.b, table })
    }
}

/// Multiplication by `i` on `X_0 + i X_1`: `(X_0, X_1) -> (-X_1, X_0)`.
pub fn baby_i(x: &TangentVector) -> TangentVector {
    x.map(|q| [-&q[1], q[0].clone(), q[2].clone(), q[3].clone()])
}

/// `<baby_i X, Y>` in the Bielawski pairing (plain `L^2` on an interval).
pub fn baby_omega(x: &TangentVector, y: &TangentVector, cfg: &MetricConfig) -> Result<f64> {
    Ok(bielawski_pair(&baby_i(x), y, cfg)?.value)
}

/// The standard form `<psi_2, xi_1> - <psi_1, xi_2>` on `k + k`.
pub fn standard_form(p: &(LieElement, LieElement), q: &(LieElement, LieElement)) -> f64 {
    p.1.dot(&q.0) - p.0.dot(&q.1)
}

/// Central difference `D Psi_{(1,0)}(psi)` of [`baby_psi_interval`] at step `h`.
pub fn psi_differential(grid: &Grid, psi: &(LieElement, LieElement), h: f64) -> Result<TangentVector> {
    let point = |s: f64| baby_psi_interval(grid, &matrix::expm(&(psi.0.matrix() * C64::new(s, 0.0))), &(&psi.1 * s));
    let plus = point(h)?;
    let minus = point(-h)?;
    let samples = plus
        .samples()
        .iter()
        .zip(minus.samples())
        .map(|(a, b)| std::array::from_fn(|i| &(&a[i] - &b[i]) * (0.5 / h)))
        .collect();
    TangentVector::new(grid.clone(), samples, None)
}

/// `(Psi^* omega)_{(1,0)}(psi, xi)` by finite differences, with `omega`
/// built from [`baby_i`] or, when `conjugate` is set, from its negative
/// (the orientation of `alpha = T_0 - i T_1`).
pub fn psi_pullback(
    grid: &Grid,
    psi: &(LieElement, LieElement),
    xi: &(LieElement, LieElement),
    h: f64,
    conjugate: bool,
) -> Result<f64> {
    let x = psi_differential(grid, psi, h)?;
    let y = psi_differential(grid, xi, h)?;
    let w = baby_omega(&x, &y, &MetricConfig::new(0.0))?;
    Ok(if conjugate { -w } else { w })
}
