//! The gauge action on Nahm data and tangent vectors, and fundamental
//! vector fields.

use crate::error::{Error, Result};
use crate::lie::element::LieElement;
use crate::lie::matrix::{self, C64};
use crate::nahm::path::{Asymptotics, NahmPath, Quad, TangentAsymptotics, TangentVector};

use super::path::{Flavor, GaugeAlgebraPath, GaugePath};

/// Tolerance for the slope of a gauge path to lie in `Z(c)`.
pub const SLOPE_TOL: f64 = 1e-8;

fn check_slope(s: &LieElement, a: &Asymptotics) -> Result<()> {
    let off = (s - &a.stratum.proj_z(s)).norm();
    if off > SLOPE_TOL {
        return Err(Error::OutsideCentralizer(off));
    }
    Ok(())
}

/// `T_0 -> u T_0 u^{-1} - du/dt u^{-1}`, `T_i -> u T_i u^{-1}`.
///
/// On a half-line path with asymptotics, `u` must carry a slope in `Z(c)`;
/// the record then moves `tau_0` to `tau_0 - s(u)`.
pub fn apply_gauge(u: &GaugePath, t: &NahmPath) -> Result<NahmPath> {
    if u.grid() != t.grid() {
        return Err(Error::GridMismatch);
    }
    if u.flavor() != Flavor::Unitary {
        return Err(Error::Parameter("real Nahm data needs a unitary gauge path".into()));
    }
    if u.dim() != t.dim() {
        return Err(Error::DimensionMismatch(u.dim(), t.dim()));
    }
    let asym = match t.asymptotics() {
        Some(a) => {
            let s = u.slope().ok_or(Error::MissingAsymptotics)?;
            check_slope(s, a)?;
            Some(Asymptotics { tau0: &a.tau0 - s, ..a.clone() })
        }
        None => None,
    };
    let v = u.velocity()?;
    let samples: Vec<Quad> = t
        .samples()
        .iter()
        .zip(u.samples())
        .zip(&v)
        .map(|((q, uk), vk)| {
            let t0 = LieElement::project(&(uk * q[0].matrix() * uk.adjoint() - vk));
            [t0, q[1].ad_unitary(uk), q[2].ad_unitary(uk), q[3].ad_unitary(uk)]
        })
        .collect();
    NahmPath::new(t.grid().clone(), samples, asym)
}

/// Pushforward of a tangent vector by the gauge action, `X_i -> Ad(u) X_i`.
///
/// `delta` is fixed (it commutes with the limit of `u`); `epsilon` is
/// conjugated by `exp(-t_max s(u)) u(t_max)`, which approximates the limit of
/// `u` with its linear part removed.
pub fn gauge_tangent(u: &GaugePath, x: &TangentVector) -> Result<TangentVector> {
    if u.grid() != x.grid() {
        return Err(Error::GridMismatch);
    }
    if u.flavor() != Flavor::Unitary {
        return Err(Error::Parameter("tangent vectors need a unitary gauge path".into()));
    }
    let samples: Vec<Quad> = x
        .samples()
        .iter()
        .zip(u.samples())
        .map(|(q, uk)| std::array::from_fn(|i| q[i].ad_unitary(uk)))
        .collect();
    let asym = match x.asymptotics() {
        Some(a) => {
            let s = u.slope().ok_or(Error::MissingAsymptotics)?;
            let tmax = x.grid().t_max();
            let w = matrix::expm(&(s.matrix() * C64::new(-tmax, 0.0))) * u.boundary().1;
            let w = matrix::unitary_part(&w);
            Some(TangentAsymptotics {
                delta: a.delta.clone(),
                epsilon: std::array::from_fn(|i| a.epsilon[i].ad_unitary(&w)),
                t_offset: a.t_offset,
            })
        }
        None => None,
    };
    TangentVector::new(x.grid().clone(), samples, asym)
}

/// `X^xi_T = ([xi, T_0] - dxi/dt, [xi, T_1], [xi, T_2], [xi, T_3])`.
///
/// On the half-line, `delta = (-slope, 0, 0, 0)` and
/// `epsilon_i = [limit, sigma_i]`.
pub fn fundamental_vector_field(xi: &GaugeAlgebraPath, t: &NahmPath) -> Result<TangentVector> {
    if xi.grid() != t.grid() {
        return Err(Error::GridMismatch);
    }
    let n = t.dim();
    let dxi = xi.derivative();
    let samples: Vec<Quad> = t
        .samples()
        .iter()
        .zip(xi.samples())
        .zip(&dxi)
        .map(|((q, x), dx)| [&x.br(&q[0]) - dx, x.br(&q[1]), x.br(&q[2]), x.br(&q[3])])
        .collect();
    let asym = match t.asymptotics() {
        Some(a) => {
            let xa = xi.asymptotics().ok_or(Error::MissingAsymptotics)?;
            let s = a.sigma.sigma();
            let mut delta = crate::nahm::path::zero_quad(n);
            delta[0] = -&xa.slope;
            let epsilon = [
                LieElement::zeros(n),
                xa.limit.br(&s[0]),
                xa.limit.br(&s[1]),
                xa.limit.br(&s[2]),
            ];
            Some(TangentAsymptotics { delta, epsilon, t_offset: a.t_offset })
        }
        None => None,
    };
    TangentVector::new(t.grid().clone(), samples, asym)
}
