//! Gluing an interval solution onto a half-line solution, and the
//! homothety `T(t) -> r T(rt)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lie::stratum::centralizer_blocks;
use crate::nahm::grid::{Grid, GridKind};
use crate::nahm::path::{Asymptotics, NahmPath, Quad, TangentAsymptotics, TangentVector};

use super::pairing::{bielawski_pair, MetricConfig};

/// Junction tolerance.
pub const JUNCTION_TOL: f64 = 1e-8;
/// Nodes on each side of the junction where `T_0` must vanish.
pub const JUNCTION_HALO: usize = 4;

/// One matched tangent pair in a [`GlueReport`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GlueCheck {
    /// `|X|^2_{L2} + |X~|^2_{B,b}`.
    pub lhs: f64,
    /// `|X glued|^2_{B,b+L}`.
    pub rhs: f64,
}

/// Result of [`glue_paths`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GlueReport {
    /// Interval length `L`.
    pub shift: f64,
    /// Configuration for the glued path: `b + L`, tail start moved by `L`.
    pub glued_config: MetricConfig,
    pub checks: Vec<GlueCheck>,
}

fn junction_distance(a: &Quad, b: &Quad) -> f64 {
    (0..4).map(|i| (&a[i] - &b[i]).norm()).fold(0.0, f64::max)
}

fn concat(head: &[Quad], tail: &[Quad]) -> Vec<Quad> {
    head.iter().chain(tail.iter().skip(1)).cloned().collect()
}

/// Glue matched tangent vectors `X` on `[0, L]` and `X~` on the half-line.
pub fn glue_tangents(x: &TangentVector, xh: &TangentVector, glued_grid: &Grid) -> Result<TangentVector> {
    let a = xh.asymptotics().ok_or(Error::MissingAsymptotics)?;
    let d = junction_distance(x.samples().last().unwrap(), &xh.samples()[0]);
    if d > JUNCTION_TOL {
        return Err(Error::Junction(format!("tangent mismatch {d:.3e}")));
    }
    let l = x.grid().t_max();
    TangentVector::new(
        glued_grid.clone(),
        concat(x.samples(), xh.samples()),
        Some(TangentAsymptotics { t_offset: a.t_offset + l, ..a.clone() }),
    )
}

/// Concatenate `T` on `[0, L]` with `T~` on the half-line into a half-line
/// path, and check `|X|^2_{L2} + |X~|^2_{B,b} = |X glued|^2_{B,b+L}` for each
/// matched tangent pair.
///
/// Both paths must agree at the junction and have `T_0 = 0` on
/// [`JUNCTION_HALO`] nodes on either side of it.
pub fn glue_paths(
    t: &NahmPath,
    th: &NahmPath,
    cfg: &MetricConfig,
    pairs: &[(TangentVector, TangentVector)],
) -> Result<(NahmPath, GlueReport)> {
    if t.grid().is_halfline() || !th.grid().is_halfline() {
        return Err(Error::Grid("glue an interval path onto a half-line path".into()));
    }
    let a = th.asymptotics().ok_or(Error::MissingAsymptotics)?;
    let d = junction_distance(t.samples().last().unwrap(), &th.samples()[0]);
    if d > JUNCTION_TOL {
        return Err(Error::Junction(format!("mismatch {d:.3e}")));
    }
    let ns = t.samples().len();
    let t0_near = t.samples()[ns.saturating_sub(JUNCTION_HALO)..]
        .iter()
        .chain(th.samples().iter().take(JUNCTION_HALO))
        .map(|q| q[0].norm())
        .fold(0.0, f64::max);
    if t0_near > JUNCTION_TOL {
        return Err(Error::Junction(format!("T_0 = {t0_near:.3e} near the junction")));
    }
    let l = t.grid().t_max();
    let grid = Grid::concatenate(t.grid(), th.grid(), GridKind::HalfLine)?;
    let glued = NahmPath::new(
        grid.clone(),
        concat(t.samples(), th.samples()),
        Some(Asymptotics { t_offset: a.t_offset + l, ..a.clone() }),
    )?;
    let half_ts = th.grid().nodes()[th.grid().index_at_or_after(cfg.tail_start.unwrap_or(0.5 * th.grid().t_max()))];
    let glued_config = MetricConfig { b: cfg.b + l, tail_start: Some(half_ts + l), ..cfg.clone() };
    let plain = MetricConfig { endpoint_weight: false, ..cfg.clone() };
    let mut checks = Vec::with_capacity(pairs.len());
    for (x, xh) in pairs {
        if x.grid() != t.grid() || xh.grid() != th.grid() {
            return Err(Error::GridMismatch);
        }
        let xg = glue_tangents(x, xh, &grid)?;
        let lhs = bielawski_pair(x, x, &plain)?.value + bielawski_pair(xh, xh, &MetricConfig { tail_start: Some(half_ts), ..cfg.clone() })?.value;
        let rhs = bielawski_pair(&xg, &xg, &glued_config)?.value;
        checks.push(GlueCheck { lhs, rhs });
    }
    Ok((glued, GlueReport { shift: l, glued_config, checks }))
}

fn scaled_offset(off: f64, r: f64) -> f64 {
    1.0 - 1.0 / r + off / r
}

/// `T(t) -> r T(rt)` on the grid with nodes divided by `r`.
pub fn homothety(t: &NahmPath, r: f64) -> Result<NahmPath> {
    if !(r > 0.0) {
        return Err(Error::Parameter("scale must be positive".into()));
    }
    let grid = t.grid().scaled(1.0 / r)?;
    let samples = t.samples().iter().map(|q| std::array::from_fn(|i| &q[i] * r)).collect();
    let asym = match t.asymptotics() {
        Some(a) => {
            let tau = std::array::from_fn(|i| &a.tau[i] * r);
            let stratum = centralizer_blocks(&tau)?.with_zeta(a.stratum.zeta());
            Some(Asymptotics {
                tau0: &a.tau0 * r,
                tau,
                sigma: a.sigma.clone(),
                stratum,
                t_offset: scaled_offset(a.t_offset, r),
            })
        }
        None => None,
    };
    NahmPath::new(grid, samples, asym)
}

/// `X(t) -> r X(rt)`, the tangent map of [`homothety`]; `delta` scales by
/// `r` and `epsilon` is unchanged. `|S_r X|^2_{B,b/r} = r |X|^2_{B,b}` with
/// the tail start divided by `r`.
pub fn homothety_tangent(x: &TangentVector, r: f64) -> Result<TangentVector> {
    if !(r > 0.0) {
        return Err(Error::Parameter("scale must be positive".into()));
    }
    let grid = x.grid().scaled(1.0 / r)?;
    let samples = x.samples().iter().map(|q| std::array::from_fn(|i| &q[i] * r)).collect();
    let asym = x.asymptotics().map(|a| TangentAsymptotics {
        delta: std::array::from_fn(|i| &a.delta[i] * r),
        epsilon: a.epsilon.clone(),
        t_offset: scaled_offset(a.t_offset, r),
    });
    TangentVector::new(grid, samples, asym)
}
