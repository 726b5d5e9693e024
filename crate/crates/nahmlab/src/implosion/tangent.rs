//! Tangent vectors to a half-line stratum at the model point `(0, tau_1)`.
//!
//! They are `X_0 = -dxi/dt`, `X_1 = [xi, tau_1] + delta_1` with
//! `xi(t) = (t - b) slope + sum_alpha e^{-alpha t} xi_alpha(0)`, which solves
//! `d^2 xi/dt^2 + [tau_1, [tau_1, xi]] = 0`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lie::element::LieElement;
use crate::nahm::dynamics::sup_norm;
use crate::nahm::grid::Grid;
use crate::nahm::path::{zero_quad, TangentAsymptotics, TangentVector};

use super::face::WeylFace;

/// Tolerance for `delta_1` and the slope to lie in `Z(c)`.
pub const CENTER_TOL: f64 = 1e-10;

/// Coordinates `(v + v_perp, w)` of `T_{(1, tau_1)} (K x (t_+)_C)/[C,C]`:
/// `v, w` in `Z(c)` and `v_perp` in `c^perp`.
#[derive(Clone, Debug, PartialEq)]
pub struct TangentCoords {
    pub v: LieElement,
    pub v_perp: LieElement,
    pub w: LieElement,
}

impl TangentCoords {
    pub fn zero(n: usize) -> Self {
        TangentCoords { v: LieElement::zeros(n), v_perp: LieElement::zeros(n), w: LieElement::zeros(n) }
    }

    /// Random coordinates adapted to `face`.
    pub fn random<R: rand::Rng + ?Sized>(face: &WeylFace, rng: &mut R) -> Self {
        let s = face.stratum();
        TangentCoords { v: s.random_z(rng), v_perp: s.random_perp(rng), w: s.random_z(rng) }
    }

    /// Largest entry of the difference with `other`.
    pub fn distance(&self, other: &TangentCoords) -> f64 {
        [(&self.v - &other.v).max_abs(), (&self.v_perp - &other.v_perp).max_abs(), (&self.w - &other.w).max_abs()]
            .into_iter()
            .fold(0.0, f64::max)
    }

    pub fn is_zero(&self) -> bool {
        self.v.norm_sq() + self.v_perp.norm_sq() + self.w.norm_sq() == 0.0
    }
}

/// Data of a tangent vector `X^{xi, delta_1}`.
#[derive(Clone, Debug, PartialEq)]
pub struct ImplosionTangent {
    pub face: WeylFace,
    pub delta1: LieElement,
    /// `dxi/dt(inf)`.
    pub slope: LieElement,
    /// Coordinates of `xi_alpha(0)`, indexed like `face.roots()`.
    pub root_coeffs: Vec<[f64; 2]>,
    pub b: f64,
}

/// Serializable diagnostics of a sampled tangent.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TangentDiagnostics {
    pub closed_norm_sq: f64,
    pub ode_defect: f64,
    pub linearized_residual: f64,
}

fn check_center(face: &WeylFace, x: &LieElement, what: &str) -> Result<()> {
    if x.dim() != face.n() {
        return Err(Error::DimensionMismatch(x.dim(), face.n()));
    }
    let off = (x - &face.stratum().proj_z(x)).max_abs();
    if off > CENTER_TOL {
        return Err(Error::Parameter(format!("{what} is {off:.3e} away from Z(c)")));
    }
    Ok(())
}

impl ImplosionTangent {
    /// Validate and wrap tangent data.
    pub fn new(
        face: &WeylFace,
        delta1: LieElement,
        slope: LieElement,
        root_coeffs: Vec<[f64; 2]>,
        b: f64,
    ) -> Result<Self> {
        check_center(face, &delta1, "delta_1")?;
        check_center(face, &slope, "slope")?;
        if root_coeffs.len() != face.roots().len() {
            return Err(Error::Parameter(format!(
                "{} root coefficients for {} root spaces",
                root_coeffs.len(),
                face.roots().len()
            )));
        }
        if !b.is_finite() {
            return Err(Error::Parameter("b must be finite".into()));
        }
        Ok(ImplosionTangent { face: face.clone(), delta1, slope, root_coeffs, b })
    }

    /// The tangent with `D Phi` equal to `coords`: `slope = -v/b`,
    /// `delta_1 = w`, `xi_alpha(0) = v_perp_alpha`. Needs `b > 0`.
    pub fn from_coords(face: &WeylFace, coords: &TangentCoords, b: f64) -> Result<Self> {
        if !(b > 0.0) {
            return Err(Error::Parameter("b must be positive".into()));
        }
        let coeffs = face.roots().iter().map(|r| r.coords(&coords.v_perp)).collect();
        ImplosionTangent::new(face, coords.w.clone(), &coords.v * (-1.0 / b), coeffs, b)
    }

    fn xi_alpha0(&self) -> Vec<LieElement> {
        self.face.roots().iter().zip(&self.root_coeffs).map(|(r, &c)| r.element(c)).collect()
    }

    /// `xi(t)`.
    pub fn xi_at(&self, t: f64) -> LieElement {
        let mut x = &self.slope * (t - self.b);
        for (r, e) in self.face.roots().iter().zip(self.xi_alpha0()) {
            x += &(&e * (-r.alpha_value * t).exp());
        }
        x
    }

    /// `dxi/dt` and `d^2 xi/dt^2` at `t`.
    pub fn xi_derivatives(&self, t: f64) -> (LieElement, LieElement) {
        let n = self.face.n();
        let mut d1 = self.slope.clone();
        let mut d2 = LieElement::zeros(n);
        for (r, e) in self.face.roots().iter().zip(self.xi_alpha0()) {
            let a = r.alpha_value;
            let f = (-a * t).exp();
            d1 -= &(&e * (a * f));
            d2 += &(&e * (a * a * f));
        }
        (d1, d2)
    }

    /// `(X_0, X_1)` at `t`.
    pub fn value_at(&self, t: f64) -> (LieElement, LieElement) {
        let (d1, _) = self.xi_derivatives(t);
        let x1 = &self.xi_at(t).br(self.face.tau1()) + &self.delta1;
        (-&d1, x1)
    }

    /// Samples `(X_0, X_1, 0, 0)` with limits `delta = (-slope, delta_1, 0, 0)`
    /// and `epsilon = 0`.
    pub fn sample(&self, grid: &Grid) -> Result<TangentVector> {
        if !grid.is_halfline() {
            return Err(Error::Grid("implosion tangents live on a half-line grid".into()));
        }
        let n = self.face.n();
        let mut delta = zero_quad(n);
        delta[0] = -&self.slope;
        delta[1] = self.delta1.clone();
        let asym = TangentAsymptotics { delta, epsilon: zero_quad(n), t_offset: 0.0 };
        TangentVector::from_fn(
            grid,
            |t| {
                let (x0, x1) = self.value_at(t);
                [x0, x1, LieElement::zeros(n), LieElement::zeros(n)]
            },
            Some(asym),
        )
    }

    /// `sup |d^2 xi/dt^2 + [tau_1, [tau_1, xi]]|` over the nodes.
    pub fn ode_defect(&self, grid: &Grid) -> f64 {
        let tau1 = self.face.tau1();
        grid.nodes()
            .iter()
            .map(|&t| {
                let (_, d2) = self.xi_derivatives(t);
                (&d2 + &tau1.br(&tau1.br(&self.xi_at(t)))).max_abs()
            })
            .fold(0.0, f64::max)
    }

    /// `b(|delta_1|^2 + |slope|^2) + sum_alpha alpha |xi_alpha(0)|^2`.
    pub fn closed_norm_sq(&self) -> f64 {
        let perp: f64 = self
            .face
            .roots()
            .iter()
            .zip(&self.root_coeffs)
            .map(|(r, c)| r.alpha_value * (c[0] * c[0] + c[1] * c[1]))
            .sum();
        self.b * (self.delta1.norm_sq() + self.slope.norm_sq()) + perp
    }

    /// `D Phi(X) = (-b slope + sum_alpha xi_alpha(0), delta_1)`.
    pub fn coords(&self) -> TangentCoords {
        let n = self.face.n();
        let mut v_perp = LieElement::zeros(n);
        for e in self.xi_alpha0() {
            v_perp += &e;
        }
        TangentCoords { v: &self.slope * (-self.b), v_perp, w: self.delta1.clone() }
    }

    pub fn diagnostics(&self, grid: &Grid) -> Result<TangentDiagnostics> {
        let x = self.sample(grid)?;
        Ok(TangentDiagnostics {
            closed_norm_sq: self.closed_norm_sq(),
            ode_defect: self.ode_defect(grid),
            linearized_residual: linearized_baby_residual(&x, self.face.tau1())?,
        })
    }
}

/// Build and sample a tangent on `grid`.
pub fn baby_tangent(
    face: &WeylFace,
    delta1: LieElement,
    slope: LieElement,
    root_coeffs: Vec<[f64; 2]>,
    b: f64,
    grid: &Grid,
) -> Result<(ImplosionTangent, TangentVector)> {
    let t = ImplosionTangent::new(face, delta1, slope, root_coeffs, b)?;
    let x = t.sample(grid)?;
    Ok((t, x))
}

/// `sup |dX_0/dt + [tau_1, X_1]| + sup |dX_1/dt + [X_0, tau_1]|`, the
/// linearized Baby Nahm system at `(0, tau_1)`.
pub fn linearized_baby_residual(x: &TangentVector, tau1: &LieElement) -> Result<f64> {
    if x.dim() != tau1.dim() {
        return Err(Error::DimensionMismatch(x.dim(), tau1.dim()));
    }
    let x0 = x.component(0);
    let x1 = x.component(1);
    let d0 = x.grid().derivative(&x0);
    let d1 = x.grid().derivative(&x1);
    let r0: Vec<LieElement> = d0.iter().zip(&x1).map(|(d, y)| d + &tau1.br(y)).collect();
    let r1: Vec<LieElement> = d1.iter().zip(&x0).map(|(d, y)| d + &y.br(tau1)).collect();
    Ok(sup_norm(&r0) + sup_norm(&r1))
}
