//! Gauge fixing: killing `T_0` along the whole path, and the centering gauge
//! that removes `tau_0` from the asymptotics.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lie::element::LieElement;
use crate::lie::matrix::{self, CMat};
use crate::nahm::path::NahmPath;

use super::action::apply_gauge;
use super::ode::{solve_right, OdeReport};
use super::path::{AlgebraAsymptotics, Flavor, GaugeAlgebraPath, GaugePath, Profile};

/// Diagnostics of [`gauge_t0_to_zero`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GaugeFixReport {
    pub ode: OdeReport,
    /// `sup |T'_0|` after gauging.
    pub t0_sup: f64,
    /// `sup |D(u) u^{-1} - Ad(u) T_0|` with `D` the grid difference operator;
    /// measures how well the sampled `u` resolves the ODE.
    pub velocity_defect: f64,
}

/// Solve `du/dt = u T_0`, `u(0) = 1` and return `u` together with `u.T`,
/// whose `T_0` vanishes.
///
/// With the samples `u_k`, the velocity `du/dt u^{-1} = Ad(u) T_0` is exact, so
/// `T'_0` is zero up to rounding. On a half-line path the slope of `u` is the
/// `Z(c)` part of `Ad(u) T_0` at the last node, and the asymptotic record
/// moves `tau_0` to `tau_0 - s(u)`.
pub fn gauge_t0_to_zero(t: &NahmPath) -> Result<(GaugePath, NahmPath, GaugeFixReport)> {
    let grid = t.grid();
    let a: Vec<CMat> = t.samples().iter().map(|q| q[0].matrix().clone()).collect();
    let (us, ode) = solve_right(grid, &a, true)?;
    let vel: Vec<CMat> = us
        .iter()
        .zip(t.samples())
        .map(|(u, q)| q[0].ad_unitary(u).into_matrix())
        .collect();
    let fd = grid.derivative(&us);
    let velocity_defect = fd
        .iter()
        .zip(&us)
        .zip(&vel)
        .map(|((du, u), v)| matrix::fro(&(du * u.adjoint() - v)))
        .fold(0.0, f64::max);
    let mut u = GaugePath::new(grid, us, Flavor::Unitary)?.with_velocity(vel.clone())?;
    if let Some(asym) = t.asymptotics() {
        let last = LieElement::project(vel.last().unwrap());
        u = u.with_slope(asym.stratum.proj_z(&last));
    }
    let gauged = apply_gauge(&u, t)?;
    let t0_sup = gauged.samples().iter().map(|q| q[0].norm()).fold(0.0, f64::max);
    Ok((u, gauged, GaugeFixReport { ode, t0_sup, velocity_defect }))
}

/// Output of [`center_tau0_gauge`].
#[derive(Clone, Debug)]
pub struct CenteringGauge {
    /// `u = exp(xi)`.
    pub u: GaugePath,
    /// `xi(t) = (t - b + b e^{-ct}) tau_0`.
    pub xi: GaugeAlgebraPath,
    /// `u.T`, with `tau_0` removed from the asymptotic record.
    pub path: NahmPath,
}

/// Gauge away `tau_0` with `u = exp((t - b + b e^{-ct}) tau_0)`.
pub fn center_tau0_gauge(t: &NahmPath, b: f64, c: f64) -> Result<CenteringGauge> {
    let asym = t.asymptotics().ok_or(Error::MissingAsymptotics)?;
    if !(c > 0.0) || !b.is_finite() {
        return Err(Error::Parameter(format!("need c > 0 and finite b, got b = {b}, c = {c}")));
    }
    let tau0 = asym.tau0.clone();
    let grid = t.grid();
    let f = move |s: f64| s - b + b * (-c * s).exp();
    let df = move |s: f64| 1.0 - c * b * (-c * s).exp();
    let u = GaugePath::exp_product(grid, &[(Profile { f: &f, df: &df }, tau0.matrix().clone())], Flavor::Unitary)?
        .with_slope(tau0.clone());
    let xi = GaugeAlgebraPath::from_fn(
        grid,
        |s| &tau0 * f(s),
        Some(&|s| &tau0 * df(s)),
        Some(AlgebraAsymptotics { slope: tau0.clone(), limit: LieElement::zeros(t.dim()), b }),
    )?;
    let path = apply_gauge(&u, t)?;
    Ok(CenteringGauge { u, xi, path })
}
