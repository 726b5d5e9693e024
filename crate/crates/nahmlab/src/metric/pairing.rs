//! The regularized Bielawski pairing on tangent vectors.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lie::stratum::StratumData;
use crate::nahm::path::{zero_quad, TangentAsymptotics, TangentVector};

/// Largest allowed `|<delta, epsilon>|` cross term.
pub const CROSS_TOL: f64 = 1e-8;

/// Parameters of the pairing.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MetricConfig {
    /// The constant in front of the boundary term.
    pub b: f64,
    /// Integrate the `<epsilon, epsilon'>/(4(1+t)^2)` tail in closed form.
    pub analytic_tail: bool,
    /// Start of the tail region; `None` means `t_max / 2`.
    pub tail_start: Option<f64>,
    /// On interval grids, treat the last node as the point at infinity and
    /// use the same boundary convention as on the half-line.
    pub endpoint_weight: bool,
}

impl MetricConfig {
    /// Analytic tail from `t_max / 2`, plain L2 on intervals.
    pub fn new(b: f64) -> Self {
        MetricConfig { b, analytic_tail: true, tail_start: None, endpoint_weight: false }
    }

    pub fn with_tail_start(mut self, t: f64) -> Self {
        self.tail_start = Some(t);
        self
    }
}

/// The parts of a pairing; `value` is their sum.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PairingReport {
    pub value: f64,
    pub interval_part: f64,
    pub tail_part: f64,
    pub boundary_part: f64,
    /// Node where the tail region starts (the last node on intervals).
    pub tail_start: f64,
    /// `|r(t_max)| (1 + t_max - t_offset)` for the modelled-tail remainder
    /// `r`; an estimate of the neglected integral past `t_max` if `r` decays
    /// like `(1+t)^{-2}`. Reported, not added.
    pub remainder_bound: f64,
}

fn shared(x: &TangentVector, y: &TangentVector) -> Result<()> {
    if x.grid() != y.grid() {
        return Err(Error::GridMismatch);
    }
    if x.dim() != y.dim() {
        return Err(Error::DimensionMismatch(x.dim(), y.dim()));
    }
    Ok(())
}

/// Pointwise `sum_i <X_i(t), Y_i(t)>` at every node.
pub fn pointwise_inner(x: &TangentVector, y: &TangentVector) -> Result<Vec<f64>> {
    shared(x, y)?;
    Ok(x.samples()
        .iter()
        .zip(y.samples())
        .map(|(p, q)| (0..4).map(|i| p[i].dot(&q[i])).sum())
        .collect())
}

fn asymptotic_data<'a>(x: &'a TangentVector, y: &'a TangentVector) -> Result<(&'a TangentAsymptotics, &'a TangentAsymptotics)> {
    let ax = x.asymptotics().ok_or(Error::MissingAsymptotics)?;
    let ay = y.asymptotics().ok_or(Error::MissingAsymptotics)?;
    if (ax.t_offset - ay.t_offset).abs() > 1e-12 {
        return Err(Error::Parameter(format!(
            "tangent vectors have different pole offsets {} and {}",
            ax.t_offset, ay.t_offset
        )));
    }
    let mut cross = 0.0;
    for i in 0..4 {
        cross += ax.delta[i].dot(&ay.epsilon[i]).abs() + ax.epsilon[i].dot(&ay.delta[i]).abs();
    }
    if cross > CROSS_TOL {
        return Err(Error::CrossTerm(cross));
    }
    Ok((ax, ay))
}

/// Regularized pairing
/// `b sum <delta_i, delta'_i> + int (sum <X_i, Y_i> - sum <delta_i, delta'_i>) dt`.
///
/// On the half-line the integral is split at the first node at or past
/// `tail_start`. Before it, the trapezoid rule; after it, the closed form
/// `E / (4(1 + t_s - t_offset))` for `E = sum <epsilon_i, epsilon'_i>` plus
/// the trapezoid rule applied to whatever the `E/(4(1+t)^2)` model misses.
///
/// On intervals the result is the plain L2 pairing unless
/// `endpoint_weight` is set.
pub fn bielawski_pair(x: &TangentVector, y: &TangentVector, cfg: &MetricConfig) -> Result<PairingReport> {
    let f = pointwise_inner(x, y)?;
    let g = x.grid();
    let last = g.len() - 1;
    if !g.is_halfline() {
        if !cfg.endpoint_weight {
            let v = g.trapezoid(&f);
            return Ok(PairingReport {
                value: v,
                interval_part: v,
                tail_part: 0.0,
                boundary_part: 0.0,
                tail_start: g.t_max(),
                remainder_bound: 0.0,
            });
        }
        let end = f[last];
        let sub: Vec<f64> = f.iter().map(|v| v - end).collect();
        let interval_part = g.trapezoid(&sub);
        let boundary_part = cfg.b * end;
        return Ok(PairingReport {
            value: interval_part + boundary_part,
            interval_part,
            tail_part: 0.0,
            boundary_part,
            tail_start: g.t_max(),
            remainder_bound: 0.0,
        });
    }
    let (ax, ay) = asymptotic_data(x, y)?;
    let dd: f64 = (0..4).map(|i| ax.delta[i].dot(&ay.delta[i])).sum();
    let ee: f64 = (0..4).map(|i| ax.epsilon[i].dot(&ay.epsilon[i])).sum();
    let off = ax.t_offset;
    let tail_start = cfg.tail_start.unwrap_or(0.5 * g.t_max());
    if !(tail_start < g.t_max()) {
        return Err(Error::Parameter(format!("tail_start {tail_start} not below t_max {}", g.t_max())));
    }
    let ks = g.index_at_or_after(tail_start);
    let ts = g.nodes()[ks];
    let sub: Vec<f64> = f.iter().map(|v| v - dd).collect();
    let interval_part = g.trapezoid_range(&sub, 0, ks);
    let (tail_part, remainder_bound) = if cfg.analytic_tail {
        let model = |t: f64| ee / (4.0 * (1.0 + t - off).powi(2));
        let rem: Vec<f64> = g.nodes().iter().zip(&sub).map(|(t, v)| v - model(*t)).collect();
        let closed = ee / (4.0 * (1.0 + ts - off));
        let tm = g.t_max();
        (closed + g.trapezoid_range(&rem, ks, last), rem[last].abs() * (1.0 + tm - off))
    } else {
        let tm = g.t_max();
        (g.trapezoid_range(&sub, ks, last), sub[last].abs() * (1.0 + tm - off))
    };
    let boundary_part = cfg.b * dd;
    Ok(PairingReport {
        value: interval_part + tail_part + boundary_part,
        interval_part,
        tail_part,
        boundary_part,
        tail_start: ts,
        remainder_bound,
    })
}

/// `|X|^2_{B,b}`.
pub fn bielawski_norm_sq(x: &TangentVector, cfg: &MetricConfig) -> Result<f64> {
    Ok(bielawski_pair(x, x, cfg)?.value)
}

/// The three pieces of the orthogonal splitting of a norm.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DecomposedNorm {
    /// `|X^H|^2` (plain L2, the `c^perp` part).
    pub perp: f64,
    /// `|X^{D,1}|^2` (the `[c,c]` part; carries `epsilon`).
    pub semisimple: f64,
    /// `|X^{D,0}|^2_{B,b}` (the `Z(c)` part; carries `delta`).
    pub center: f64,
    /// The pairing of `X` with itself.
    pub total: f64,
}

/// Split `X` along `su(n) = Z(c) + [c,c] + c^perp` and pair each part.
pub fn decomposed_norm(x: &TangentVector, s: &StratumData, cfg: &MetricConfig) -> Result<DecomposedNorm> {
    let n = x.dim();
    let part = |which: usize| -> Result<TangentVector> {
        let pick = |q: &[crate::lie::element::LieElement; 4]| {
            std::array::from_fn(|i| {
                let (z, d1, h) = s.split(&q[i]);
                match which {
                    0 => h,
                    1 => d1,
                    _ => z,
                }
            })
        };
        let samples = x.samples().iter().map(pick).collect();
        let asym = x.asymptotics().map(|a| match which {
            0 => TangentAsymptotics { t_offset: a.t_offset, ..TangentAsymptotics::zero(n) },
            1 => TangentAsymptotics { delta: zero_quad(n), epsilon: a.epsilon.clone(), t_offset: a.t_offset },
            _ => TangentAsymptotics { delta: a.delta.clone(), epsilon: zero_quad(n), t_offset: a.t_offset },
        });
        TangentVector::new(x.grid().clone(), samples, asym)
    };
    let plain = MetricConfig { b: 0.0, ..cfg.clone() };
    let h = part(0)?;
    let d1 = part(1)?;
    let d0 = part(2)?;
    Ok(DecomposedNorm {
        perp: bielawski_norm_sq(&h, &plain)?,
        semisimple: bielawski_norm_sq(&d1, &plain)?,
        center: bielawski_norm_sq(&d0, cfg)?,
        total: bielawski_norm_sq(x, cfg)?,
    })
}

/// Smooth bump on `[a, b]` with peak 1.
pub fn bump(t: f64, a: f64, b: f64) -> f64 {
    if t <= a || t >= b {
        return 0.0;
    }
    let x = (t - a) / (b - a);
    (4.0 - 1.0 / (x * (1.0 - x))).exp()
}

/// Outcome of [`nondegeneracy_probe`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NondegeneracyProbe {
    pub value: f64,
    pub threshold: f64,
    pub positive: bool,
}

/// Pair `X` with `h X` for a bump `h` on `support`; the result is
/// `int h |X|^2` and must be positive wherever `X` is nonzero on the support.
/// The threshold `1e-10 sup|X|^2 (b - a)` is a heuristic floor.
pub fn nondegeneracy_probe(x: &TangentVector, support: (f64, f64), cfg: &MetricConfig) -> Result<NondegeneracyProbe> {
    let (a, b) = support;
    if !(b > a) {
        return Err(Error::Parameter("empty support".into()));
    }
    let n = x.dim();
    let samples = x
        .grid()
        .nodes()
        .iter()
        .zip(x.samples())
        .map(|(t, q)| {
            let h = bump(*t, a, b);
            std::array::from_fn(|i| &q[i] * h)
        })
        .collect();
    let asym = x.grid().is_halfline().then(|| TangentAsymptotics {
        t_offset: x.asymptotics().map_or(0.0, |a| a.t_offset),
        ..TangentAsymptotics::zero(n)
    });
    let y = TangentVector::new(x.grid().clone(), samples, asym)?;
    let value = bielawski_pair(x, &y, cfg)?.value;
    let sup = x
        .samples()
        .iter()
        .map(|q| q.iter().map(|v| v.norm_sq()).sum::<f64>())
        .fold(0.0, f64::max);
    let threshold = 1e-10 * sup * (b - a);
    Ok(NondegeneracyProbe { value, threshold, positive: value > threshold })
}
