//! Decay-rate fits standing in for membership in the weighted spaces:
//! polynomial decay `(1+t)^{-(1+zeta)}` of the `c` part and exponential decay
//! `e^{-eta t}` of the `c^perp` part.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lie::element::LieElement;
use crate::lie::stratum::StratumData;

use super::grid::Grid;

/// Smallest `t_max` accepted by the fits.
pub const MIN_TMAX: f64 = 20.0;

/// Outcome of [`decay_diagnostics`]. An infinite exponent means the
/// component vanished identically on the fit window.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DecayReport {
    pub zeta_fit: f64,
    pub eta_fit: f64,
    /// RMS residual of the log-log fit of the `c` part.
    pub zeta_fit_rms: f64,
    /// RMS residual of the log-linear fit of the `c^perp` part.
    pub eta_fit_rms: f64,
    /// Fit window `[t_max/2, t_max]`.
    pub window: (f64, f64),
    pub nodes_in_window: usize,
    /// `sup (1+t)^{1+zeta} |f^D| + sup (1+t)^{2+zeta} |df^D/dt|` at the fitted zeta.
    pub omega_zeta_sup: f64,
    /// `sup e^{eta t} |f^H| + sup e^{eta t} |df^H/dt|` at the fitted eta.
    pub omega_exp_sup: f64,
}

fn line_fit(x: &[f64], y: &[f64]) -> (f64, f64, f64) {
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let sxx: f64 = x.iter().map(|a| (a - mx).powi(2)).sum();
    let sxy: f64 = x.iter().zip(y).map(|(a, b)| (a - mx) * (b - my)).sum();
    let slope = sxy / sxx;
    let icpt = my - slope * mx;
    let rms = (x.iter().zip(y).map(|(a, b)| (b - icpt - slope * a).powi(2)).sum::<f64>() / n).sqrt();
    (slope, icpt, rms)
}

/// Values this small count as exact zeros.
const ZERO_FLOOR: f64 = 1e-290;

/// Fit the decay of the `c` and `c^perp` parts of `f` on the tail half of
/// a half-line grid.
pub fn decay_diagnostics(f: &[LieElement], grid: &Grid, s: &StratumData) -> Result<DecayReport> {
    if !grid.is_halfline() {
        return Err(Error::Grid("decay fits need a half-line grid".into()));
    }
    if grid.t_max() < MIN_TMAX {
        return Err(Error::Grid(format!("t_max {} below {MIN_TMAX}", grid.t_max())));
    }
    if f.len() != grid.len() {
        return Err(Error::GridMismatch);
    }
    let split: Vec<(LieElement, LieElement)> = f
        .iter()
        .map(|x| {
            let (z, d1, h) = s.split(x);
            (z + d1, h)
        })
        .collect();
    let d: Vec<LieElement> = split.iter().map(|p| p.0.clone()).collect();
    let h: Vec<LieElement> = split.iter().map(|p| p.1.clone()).collect();
    let dd = grid.derivative(&d);
    let dh = grid.derivative(&h);
    let tmax = grid.t_max();
    let start = grid.index_at_or_after(0.5 * tmax);
    let nodes = &grid.nodes()[start..];

    let fit = |series: &[LieElement], xmap: &dyn Fn(f64) -> f64| -> Option<(f64, f64)> {
        let mut xs = Vec::new();
        let mut ys = Vec::new();
        for (t, v) in nodes.iter().zip(&series[start..]) {
            let nv = v.norm();
            if nv > ZERO_FLOOR {
                xs.push(xmap(*t));
                ys.push(nv.ln());
            }
        }
        if xs.len() < 3 {
            return None;
        }
        let (slope, _, rms) = line_fit(&xs, &ys);
        Some((slope, rms))
    };
    let (zeta_fit, zeta_fit_rms) = match fit(&d, &|t| (1.0 + t).ln()) {
        Some((m, rms)) => (-m - 1.0, rms),
        None => (f64::INFINITY, 0.0),
    };
    let (eta_fit, eta_fit_rms) = match fit(&h, &|t| t) {
        Some((m, rms)) => (-m, rms),
        None => (f64::INFINITY, 0.0),
    };
    let t = grid.nodes();
    let omega_zeta_sup = if zeta_fit.is_finite() {
        let a = t.iter().zip(&d).map(|(t, v)| (1.0 + t).powf(1.0 + zeta_fit) * v.norm()).fold(0.0, f64::max);
        let b = t.iter().zip(&dd).map(|(t, v)| (1.0 + t).powf(2.0 + zeta_fit) * v.norm()).fold(0.0, f64::max);
        a + b
    } else {
        0.0
    };
    let omega_exp_sup = if eta_fit.is_finite() {
        let a = t.iter().zip(&h).map(|(t, v)| (eta_fit * t).exp() * v.norm()).fold(0.0, f64::max);
        let b = t.iter().zip(&dh).map(|(t, v)| (eta_fit * t).exp() * v.norm()).fold(0.0, f64::max);
        a + b
    } else {
        0.0
    };
    Ok(DecayReport {
        zeta_fit,
        eta_fit,
        zeta_fit_rms,
        eta_fit_rms,
        window: (nodes[0], tmax),
        nodes_in_window: nodes.len(),
        omega_zeta_sup,
        omega_exp_sup,
    })
}
