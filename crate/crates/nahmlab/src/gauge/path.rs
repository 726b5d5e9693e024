//! Sampled gauge transformations and gauge Lie algebra paths.

use crate::error::{Error, Result};
use crate::lie::element::LieElement;
use crate::lie::matrix::{self, CMat, C64};
use crate::nahm::grid::Grid;

/// Unitarity and determinant tolerance for unitary gauge paths.
pub const UNITARY_TOL: f64 = 1e-10;
/// Determinant tolerance for complexified gauge paths.
pub const COMPLEX_DET_TOL: f64 = 1e-8;

/// Whether a gauge path takes values in `SU(n)` or `SL(n, C)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Flavor {
    Unitary,
    Complexified,
}

/// A sampled path `u(t)` in the gauge group.
///
/// `velocity`, when present, holds exact samples of `du/dt u^{-1}`; otherwise
/// it is computed from the samples by finite differences.
#[derive(Clone, Debug)]
pub struct GaugePath {
    grid: Grid,
    samples: Vec<CMat>,
    flavor: Flavor,
    slope: Option<LieElement>,
    velocity: Option<Vec<CMat>>,
}

/// A scalar profile `f(t)` with derivative `f'(t)`.
pub struct Profile<'a> {
    pub f: &'a dyn Fn(f64) -> f64,
    pub df: &'a dyn Fn(f64) -> f64,
}

impl GaugePath {
    /// Wrap samples after checking the group condition at every node.
    pub fn new(grid: &Grid, samples: Vec<CMat>, flavor: Flavor) -> Result<Self> {
        if samples.len() != grid.len() {
            return Err(Error::GridMismatch);
        }
        let n = samples[0].nrows();
        for (k, u) in samples.iter().enumerate() {
            if u.nrows() != n || u.ncols() != n {
                return Err(Error::DimensionMismatch(n, u.nrows()));
            }
            let d = matrix::det(u);
            match flavor {
                Flavor::Unitary => {
                    let defect = matrix::unitarity_defect(u);
                    if defect > UNITARY_TOL || (d - C64::new(1.0, 0.0)).norm() > UNITARY_TOL {
                        return Err(Error::Parameter(format!(
                            "node {k}: not special unitary (defect {defect:.2e}, det {d})"
                        )));
                    }
                }
                Flavor::Complexified => {
                    if (d - C64::new(1.0, 0.0)).norm() > COMPLEX_DET_TOL {
                        return Err(Error::Singular(format!("node {k}: det {d}")));
                    }
                }
            }
        }
        Ok(GaugePath { grid: grid.clone(), samples, flavor, slope: None, velocity: None })
    }

    /// Constant identity.
    pub fn identity(grid: &Grid, n: usize) -> Self {
        GaugePath {
            grid: grid.clone(),
            samples: vec![matrix::identity(n); grid.len()],
            flavor: Flavor::Unitary,
            slope: Some(LieElement::zeros(n)),
            velocity: Some(vec![CMat::zeros(n, n); grid.len()]),
        }
    }

    /// Constant path at `u`.
    pub fn constant(grid: &Grid, u: &CMat, flavor: Flavor) -> Result<Self> {
        let n = u.nrows();
        let mut p = GaugePath::new(grid, vec![u.clone(); grid.len()], flavor)?;
        p.velocity = Some(vec![CMat::zeros(n, n); grid.len()]);
        p.slope = Some(LieElement::zeros(n));
        Ok(p)
    }

    /// `u(t) = exp(f_1(t) A_1) exp(f_2(t) A_2) ...` with exact velocity.
    pub fn exp_product(grid: &Grid, factors: &[(Profile<'_>, CMat)], flavor: Flavor) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::Parameter("no factors".into()));
        }
        let n = factors[0].1.nrows();
        let mut samples = Vec::with_capacity(grid.len());
        let mut velocity = Vec::with_capacity(grid.len());
        for &t in grid.nodes() {
            let mut p = matrix::identity(n);
            let mut p_inv = matrix::identity(n);
            let mut v = CMat::zeros(n, n);
            for (prof, a) in factors {
                let ft = (prof.f)(t);
                let dft = (prof.df)(t);
                v += &p * (a * C64::new(dft, 0.0)) * &p_inv;
                p = &p * matrix::expm(&(a * C64::new(ft, 0.0)));
                p_inv = matrix::expm(&(a * C64::new(-ft, 0.0))) * &p_inv;
            }
            samples.push(p);
            velocity.push(v);
        }
        let mut g = GaugePath::new(grid, samples, flavor)?;
        g.velocity = Some(velocity);
        Ok(g)
    }

    /// `u(t) = exp(xi(t))` with finite-difference velocity.
    pub fn exp_of(xi: &GaugeAlgebraPath) -> Result<Self> {
        let samples = xi.samples().iter().map(|x| matrix::expm(x.matrix())).collect();
        let mut g = GaugePath::new(xi.grid(), samples, Flavor::Unitary)?;
        g.slope = xi.asymptotics().map(|a| a.slope.clone());
        Ok(g)
    }

    /// Attach `s(u) = lim du/dt u^{-1}`.
    pub fn with_slope(mut self, slope: LieElement) -> Self {
        self.slope = Some(slope);
        self
    }

    /// Attach exact velocity samples `du/dt u^{-1}`.
    pub fn with_velocity(mut self, v: Vec<CMat>) -> Result<Self> {
        if v.len() != self.grid.len() {
            return Err(Error::GridMismatch);
        }
        self.velocity = Some(v);
        Ok(self)
    }

    /// Drop exact velocities so they are recomputed by differences.
    pub fn without_velocity(mut self) -> Self {
        self.velocity = None;
        self
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn samples(&self) -> &[CMat] {
        &self.samples
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn slope(&self) -> Option<&LieElement> {
        self.slope.as_ref()
    }

    /// Matrix size.
    pub fn dim(&self) -> usize {
        self.samples[0].nrows()
    }

    /// `(u(0), u(t_end))`.
    pub fn boundary(&self) -> (&CMat, &CMat) {
        (&self.samples[0], self.samples.last().unwrap())
    }

    /// Inverse at node `k`.
    pub fn inverse_at(&self, k: usize) -> Result<CMat> {
        match self.flavor {
            Flavor::Unitary => Ok(self.samples[k].adjoint()),
            Flavor::Complexified => {
                matrix::inverse(&self.samples[k]).ok_or_else(|| Error::Singular(format!("node {k}")))
            }
        }
    }

    /// Samples of `du/dt u^{-1}`: exact when available, otherwise centered
    /// differences followed by projection onto the Lie algebra.
    pub fn velocity(&self) -> Result<Vec<CMat>> {
        if let Some(v) = &self.velocity {
            return Ok(v.clone());
        }
        let du = self.grid.derivative(&self.samples);
        let n = self.dim();
        du.iter()
            .enumerate()
            .map(|(k, d)| {
                let v = d * self.inverse_at(k)?;
                Ok(match self.flavor {
                    Flavor::Unitary => matrix::skew_traceless(&v),
                    Flavor::Complexified => {
                        let mut w = v.clone();
                        let tr = w.trace() / C64::new(n as f64, 0.0);
                        for i in 0..n {
                            w[(i, i)] -= tr;
                        }
                        w
                    }
                })
            })
            .collect()
    }

    /// Pointwise product `(u v)(t)`, velocity `u' u^-1 + u (v' v^-1) u^-1`.
    pub fn compose(&self, other: &GaugePath) -> Result<GaugePath> {
        if self.grid != other.grid {
            return Err(Error::GridMismatch);
        }
        let vu = self.velocity()?;
        let vv = other.velocity()?;
        let flavor = if self.flavor == Flavor::Unitary && other.flavor == Flavor::Unitary {
            Flavor::Unitary
        } else {
            Flavor::Complexified
        };
        let mut samples = Vec::with_capacity(self.grid.len());
        let mut vel = Vec::with_capacity(self.grid.len());
        for k in 0..self.grid.len() {
            let u = &self.samples[k];
            samples.push(u * &other.samples[k]);
            vel.push(&vu[k] + u * &vv[k] * self.inverse_at(k)?);
        }
        let slope = match (&self.slope, &other.slope) {
            (Some(a), Some(b)) => Some(a + b),
            _ => None,
        };
        Ok(GaugePath { grid: self.grid.clone(), samples, flavor, slope, velocity: Some(vel) })
    }

    /// Pointwise inverse, velocity `-u^{-1} u'`.
    pub fn inverse(&self) -> Result<GaugePath> {
        let v = self.velocity()?;
        let mut samples = Vec::with_capacity(self.grid.len());
        let mut vel = Vec::with_capacity(self.grid.len());
        for k in 0..self.grid.len() {
            let inv = self.inverse_at(k)?;
            vel.push(-(&inv * &v[k] * &self.samples[k]));
            samples.push(inv);
        }
        Ok(GaugePath {
            grid: self.grid.clone(),
            samples,
            flavor: self.flavor,
            slope: self.slope.as_ref().map(|s| -s),
            velocity: Some(vel),
        })
    }

    /// Largest unitarity defect over the nodes.
    pub fn max_unitarity_defect(&self) -> f64 {
        self.samples.iter().map(matrix::unitarity_defect).fold(0.0, f64::max)
    }
}

/// Asymptotic data of a gauge Lie algebra path:
/// `xi(t) = (t - b) slope + xi~(t)` with `xi~ -> limit`.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraAsymptotics {
    pub slope: LieElement,
    pub limit: LieElement,
    pub b: f64,
}

/// A sampled path `xi(t)` in `su(n)` with `xi(0) = 0`.
#[derive(Clone, Debug)]
pub struct GaugeAlgebraPath {
    grid: Grid,
    samples: Vec<LieElement>,
    derivative: Option<Vec<LieElement>>,
    asymptotics: Option<AlgebraAsymptotics>,
}

impl GaugeAlgebraPath {
    /// Wrap samples; `xi(0)` must vanish.
    pub fn new(
        grid: &Grid,
        samples: Vec<LieElement>,
        derivative: Option<Vec<LieElement>>,
        asymptotics: Option<AlgebraAsymptotics>,
    ) -> Result<Self> {
        if samples.len() != grid.len() || derivative.as_ref().is_some_and(|d| d.len() != grid.len()) {
            return Err(Error::GridMismatch);
        }
        let x0 = samples[0].max_abs();
        if x0 > 1e-14 {
            return Err(Error::Parameter(format!("xi(0) = {x0:.3e}, must vanish")));
        }
        Ok(GaugeAlgebraPath { grid: grid.clone(), samples, derivative, asymptotics })
    }

    /// Sample `xi` and optionally its exact derivative.
    pub fn from_fn(
        grid: &Grid,
        xi: impl Fn(f64) -> LieElement,
        dxi: Option<&dyn Fn(f64) -> LieElement>,
        asymptotics: Option<AlgebraAsymptotics>,
    ) -> Result<Self> {
        let samples = grid.nodes().iter().map(|&t| xi(t)).collect();
        let derivative = dxi.map(|d| grid.nodes().iter().map(|&t| d(t)).collect());
        GaugeAlgebraPath::new(grid, samples, derivative, asymptotics)
    }

    /// The zero path.
    pub fn zero(grid: &Grid, n: usize) -> Self {
        GaugeAlgebraPath {
            grid: grid.clone(),
            samples: vec![LieElement::zeros(n); grid.len()],
            derivative: Some(vec![LieElement::zeros(n); grid.len()]),
            asymptotics: Some(AlgebraAsymptotics {
                slope: LieElement::zeros(n),
                limit: LieElement::zeros(n),
                b: 0.0,
            }),
        }
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn samples(&self) -> &[LieElement] {
        &self.samples
    }

    pub fn asymptotics(&self) -> Option<&AlgebraAsymptotics> {
        self.asymptotics.as_ref()
    }

    /// `dxi/dt`: exact when available, otherwise by differences.
    pub fn derivative(&self) -> Vec<LieElement> {
        match &self.derivative {
            Some(d) => d.clone(),
            None => self.grid.derivative(&self.samples),
        }
    }

    /// `theta * xi`.
    pub fn scaled(&self, theta: f64) -> GaugeAlgebraPath {
        GaugeAlgebraPath {
            grid: self.grid.clone(),
            samples: self.samples.iter().map(|x| x * theta).collect(),
            derivative: self.derivative.as_ref().map(|d| d.iter().map(|x| x * theta).collect()),
            asymptotics: self.asymptotics.as_ref().map(|a| AlgebraAsymptotics {
                slope: &a.slope * theta,
                limit: &a.limit * theta,
                b: a.b,
            }),
        }
    }

    /// Residual of the reconstruction `xi(t) - (t - b) slope - limit` at the
    /// last node.
    pub fn reconstruction_defect(&self) -> Option<f64> {
        let a = self.asymptotics.as_ref()?;
        let t = self.grid.t_max();
        let x = self.samples.last().unwrap();
        Some((&(x - &(&a.slope * (t - a.b))) - &a.limit).norm())
    }
}
