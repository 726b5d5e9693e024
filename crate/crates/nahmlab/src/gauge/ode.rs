//! Fourth-order Magnus integrator for `dg/dt = g A(t)`, `g(0) = 1`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lie::matrix::{self, CMat, C64};
use crate::nahm::grid::Grid;

/// Steps between polar re-projections in unitary mode.
pub const REPROJECT_EVERY: usize = 64;
/// Drift level above which the report flags the projection as significant.
pub const DRIFT_WARN: f64 = 1e-6;
/// Blow-up guard on `|g|` in complex mode.
pub const BLOWUP_NORM: f64 = 1e12;

/// Diagnostics from [`solve_right`].
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct OdeReport {
    /// Largest `|g g* - 1|` seen just before a re-projection (unitary mode).
    pub max_drift: f64,
    /// Number of re-projections performed.
    pub projections: usize,
    /// Whether `max_drift` exceeded [`DRIFT_WARN`].
    pub drift_warning: bool,
}

/// Solve `dg/dt = g A(t)` with `A` sampled on `grid`, using the two-point
/// Gauss Magnus step
/// `g_{k+1} = g_k exp(h/2 (A_1 + A_2) + sqrt(3)/12 h^2 [A_1, A_2])`.
/// The Gauss-point values come from cubic interpolation of the samples.
///
/// With `unitary`, `g` is pulled back onto the unitary group every
/// [`REPROJECT_EVERY`] steps and at the end.
pub fn solve_right(grid: &Grid, a: &[CMat], unitary: bool) -> Result<(Vec<CMat>, OdeReport)> {
    if a.len() != grid.len() {
        return Err(Error::GridMismatch);
    }
    let n = a[0].nrows();
    let nodes = grid.nodes();
    let c = 3f64.sqrt() / 6.0;
    let mut g = matrix::identity(n);
    let mut out = Vec::with_capacity(nodes.len());
    out.push(g.clone());
    let mut report = OdeReport::default();
    for k in 0..nodes.len() - 1 {
        let (ta, tb) = (nodes[k], nodes[k + 1]);
        let h = tb - ta;
        let mid = 0.5 * (ta + tb);
        let a1 = grid.interpolate(a, k, mid - c * h);
        let a2 = grid.interpolate(a, k, mid + c * h);
        let omega = (&a1 + &a2) * C64::new(0.5 * h, 0.0)
            + matrix::comm(&a1, &a2) * C64::new(3f64.sqrt() / 12.0 * h * h, 0.0);
        g = &g * matrix::expm(&omega);
        let last = k + 2 == nodes.len();
        if unitary && ((k + 1) % REPROJECT_EVERY == 0 || last) {
            let drift = matrix::unitarity_defect(&g);
            report.max_drift = report.max_drift.max(drift);
            report.projections += 1;
            g = matrix::unitary_part(&g);
        }
        if !unitary {
            let norm = matrix::fro(&g);
            if !(norm <= BLOWUP_NORM) {
                return Err(Error::BlowUp { t: tb, norm });
            }
        }
        out.push(g.clone());
    }
    report.drift_warning = report.max_drift > DRIFT_WARN;
    Ok((out, report))
}
