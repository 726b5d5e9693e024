//! Sampled Nahm quadruples and tangent vectors with their asymptotic records.

use crate::error::{Error, Result};
use crate::lie::element::LieElement;
use crate::lie::stability::stability_constants;
use crate::lie::stratum::{centralizer_blocks, StratumData};
use crate::lie::triple::Su2Triple;

use super::grid::Grid;

/// Four Lie algebra elements `(T_0, T_1, T_2, T_3)`.
pub type Quad = [LieElement; 4];

/// The zero quadruple in `su(n)`.
pub fn zero_quad(n: usize) -> Quad {
    [LieElement::zeros(n), LieElement::zeros(n), LieElement::zeros(n), LieElement::zeros(n)]
}

/// Limits `(tau_0, tau, sigma)` of a half-line solution.
///
/// The model is `T_0 = tau_0`, `T_i = tau_i + sigma_i / (2(1 + t - t_offset))`.
/// `t_offset` is zero for paths built on `[0, inf)` directly; it changes
/// under gluing and rescaling so that the model keeps describing the samples.
#[derive(Clone, Debug, PartialEq)]
pub struct Asymptotics {
    pub tau0: LieElement,
    pub tau: [LieElement; 3],
    pub sigma: Su2Triple,
    pub stratum: StratumData,
    pub t_offset: f64,
}

impl Asymptotics {
    /// Model value at time `t`.
    pub fn model_at(&self, t: f64) -> Quad {
        let w = 1.0 / (2.0 * (1.0 + t - self.t_offset));
        let s = self.sigma.sigma();
        [
            self.tau0.clone(),
            &self.tau[0] + &(&s[0] * w),
            &self.tau[1] + &(&s[1] * w),
            &self.tau[2] + &(&s[2] * w),
        ]
    }
}

/// A sampled quadruple on a grid.
#[derive(Clone, Debug, PartialEq)]
pub struct NahmPath {
    grid: Grid,
    samples: Vec<Quad>,
    asymptotics: Option<Asymptotics>,
}

fn check_samples(grid: &Grid, samples: &[Quad]) -> Result<usize> {
    if samples.len() != grid.len() {
        return Err(Error::Grid(format!("{} samples on {} nodes", samples.len(), grid.len())));
    }
    let n = samples[0][0].dim();
    for q in samples {
        for x in q {
            if x.dim() != n {
                return Err(Error::DimensionMismatch(n, x.dim()));
            }
        }
    }
    Ok(n)
}

impl NahmPath {
    /// Wrap samples. Interval paths may not carry an asymptotic record.
    pub fn new(grid: Grid, samples: Vec<Quad>, asymptotics: Option<Asymptotics>) -> Result<Self> {
        let n = check_samples(&grid, &samples)?;
        if let Some(a) = &asymptotics {
            if !grid.is_halfline() {
                return Err(Error::Grid("interval paths carry no asymptotic record".into()));
            }
            if a.stratum.n() != n {
                return Err(Error::DimensionMismatch(a.stratum.n(), n));
            }
        }
        Ok(NahmPath { grid, samples, asymptotics })
    }

    /// Sample a function of `t`.
    pub fn from_fn(grid: &Grid, f: impl Fn(f64) -> Quad, asymptotics: Option<Asymptotics>) -> Result<Self> {
        let samples = grid.nodes().iter().map(|&t| f(t)).collect();
        NahmPath::new(grid.clone(), samples, asymptotics)
    }

    /// Baby Nahm data `(T_0, T_1, 0, 0)`.
    pub fn baby(grid: &Grid, t0: Vec<LieElement>, t1: Vec<LieElement>) -> Result<Self> {
        if t0.len() != t1.len() {
            return Err(Error::GridMismatch);
        }
        let n = t0[0].dim();
        let samples = t0
            .into_iter()
            .zip(t1)
            .map(|(a, b)| [a, b, LieElement::zeros(n), LieElement::zeros(n)])
            .collect();
        NahmPath::new(grid.clone(), samples, None)
    }

    /// Attach or replace the asymptotic record.
    pub fn with_asymptotics(self, a: Option<Asymptotics>) -> Result<Self> {
        NahmPath::new(self.grid, self.samples, a)
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn samples(&self) -> &[Quad] {
        &self.samples
    }

    pub fn asymptotics(&self) -> Option<&Asymptotics> {
        self.asymptotics.as_ref()
    }

    /// Matrix size.
    pub fn dim(&self) -> usize {
        self.samples[0][0].dim()
    }

    /// Samples of component `i` as a series.
    pub fn component(&self, i: usize) -> Vec<LieElement> {
        self.samples.iter().map(|q| q[i].clone()).collect()
    }

    /// Largest pointwise distance from another path on the same grid.
    pub fn sup_distance(&self, other: &NahmPath) -> Result<f64> {
        if self.grid != other.grid {
            return Err(Error::GridMismatch);
        }
        Ok(self
            .samples
            .iter()
            .zip(&other.samples)
            .map(|(a, b)| (0..4).map(|i| (&a[i] - &b[i]).norm()).fold(0.0, f64::max))
            .fold(0.0, f64::max))
    }
}

/// Limits of a tangent vector: `X_i -> delta_i + epsilon_i / (2(1 + t - t_offset))`.
///
/// `epsilon` keeps four slots so that the quaternionic action permutes it
/// like the samples; slot 0 is zero for fundamental vector fields.
#[derive(Clone, Debug, PartialEq)]
pub struct TangentAsymptotics {
    pub delta: Quad,
    pub epsilon: Quad,
    pub t_offset: f64,
}

impl TangentAsymptotics {
    /// All limits zero.
    pub fn zero(n: usize) -> Self {
        TangentAsymptotics { delta: zero_quad(n), epsilon: zero_quad(n), t_offset: 0.0 }
    }

    /// Check the algebraic relations against a stratum: each `delta_i`
    /// commutes with `c`, each `epsilon_i` lies in `[c,c]`, and
    /// `<delta_i, epsilon_i> = 0`, all to `tol`.
    pub fn check(&self, s: &StratumData, tol: f64) -> Result<()> {
        let basis = s.basis_c();
        for d in &self.delta {
            for g in &basis {
                let c = d.br(g).max_abs();
                if c > tol {
                    return Err(Error::OutsideCentralizer(c));
                }
            }
        }
        for e in &self.epsilon {
            let (z, _, h) = s.split(e);
            let off = (z.norm_sq() + h.norm_sq()).sqrt();
            if off > tol {
                return Err(Error::OutsideCentralizer(off));
            }
        }
        for i in 0..4 {
            let c = self.delta[i].dot(&self.epsilon[i]);
            if c.abs() > tol {
                return Err(Error::CrossTerm(c));
            }
        }
        Ok(())
    }

    /// Model value at `t`.
    pub fn model_at(&self, t: f64) -> Quad {
        let w = 1.0 / (2.0 * (1.0 + t - self.t_offset));
        std::array::from_fn(|i| &self.delta[i] + &(&self.epsilon[i] * w))
    }
}

/// A sampled tangent quadruple `(X_0, ..., X_3)`.
#[derive(Clone, Debug, PartialEq)]
pub struct TangentVector {
    grid: Grid,
    samples: Vec<Quad>,
    asymptotics: Option<TangentAsymptotics>,
}

impl TangentVector {
    /// Wrap samples. Interval vectors may not carry asymptotics.
    pub fn new(grid: Grid, samples: Vec<Quad>, asymptotics: Option<TangentAsymptotics>) -> Result<Self> {
        let n = check_samples(&grid, &samples)?;
        if let Some(a) = &asymptotics {
            if !grid.is_halfline() {
                return Err(Error::Grid("interval tangent vectors carry no asymptotics".into()));
            }
            if a.delta[0].dim() != n {
                return Err(Error::DimensionMismatch(a.delta[0].dim(), n));
            }
        }
        Ok(TangentVector { grid, samples, asymptotics })
    }

    /// Sample a function of `t`.
    pub fn from_fn(grid: &Grid, f: impl Fn(f64) -> Quad, asymptotics: Option<TangentAsymptotics>) -> Result<Self> {
        let samples = grid.nodes().iter().map(|&t| f(t)).collect();
        TangentVector::new(grid.clone(), samples, asymptotics)
    }

    /// The zero vector.
    pub fn zero(grid: &Grid, n: usize) -> Self {
        let asym = grid.is_halfline().then(|| TangentAsymptotics::zero(n));
        TangentVector { grid: grid.clone(), samples: vec![zero_quad(n); grid.len()], asymptotics: asym }
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn samples(&self) -> &[Quad] {
        &self.samples
    }

    pub fn asymptotics(&self) -> Option<&TangentAsymptotics> {
        self.asymptotics.as_ref()
    }

    pub fn dim(&self) -> usize {
        self.samples[0][0].dim()
    }

    /// Samples of component `i`.
    pub fn component(&self, i: usize) -> Vec<LieElement> {
        self.samples.iter().map(|q| q[i].clone()).collect()
    }

    /// Apply `f` to every sample and every asymptotic slot.
    pub fn map(&self, f: impl Fn(&Quad) -> Quad) -> TangentVector {
        TangentVector {
            grid: self.grid.clone(),
            samples: self.samples.iter().map(&f).collect(),
            asymptotics: self.asymptotics.as_ref().map(|a| TangentAsymptotics {
                delta: f(&a.delta),
                epsilon: f(&a.epsilon),
                t_offset: a.t_offset,
            }),
        }
    }

    /// Linear combination `a X + b Y` on a common grid.
    pub fn combine(&self, a: f64, other: &TangentVector, b: f64) -> Result<TangentVector> {
        if self.grid != other.grid {
            return Err(Error::GridMismatch);
        }
        let lin = |x: &Quad, y: &Quad| -> Quad { std::array::from_fn(|i| &(&x[i] * a) + &(&y[i] * b)) };
        let asymptotics = match (&self.asymptotics, &other.asymptotics) {
            (Some(p), Some(q)) => Some(TangentAsymptotics {
                delta: lin(&p.delta, &q.delta),
                epsilon: lin(&p.epsilon, &q.epsilon),
                t_offset: p.t_offset,
            }),
            (None, None) => None,
            _ => return Err(Error::MissingAsymptotics),
        };
        Ok(TangentVector {
            grid: self.grid.clone(),
            samples: self.samples.iter().zip(&other.samples).map(|(x, y)| lin(x, y)).collect(),
            asymptotics,
        })
    }

    /// Replace the asymptotic record.
    pub fn with_asymptotics(self, a: Option<TangentAsymptotics>) -> Result<Self> {
        TangentVector::new(self.grid, self.samples, a)
    }
}

/// The model solution `(tau_0, tau_i + sigma_i / (2(t+1)))` on a half-line grid.
pub fn model_solution(tau0: &LieElement, tau: &[LieElement; 3], sigma: &Su2Triple, grid: &Grid) -> Result<NahmPath> {
    model_solution_offset(tau0, tau, sigma, grid, 0.0)
}

/// Model solution with the pole moved: `tau_i + sigma_i / (2(1 + t - t_offset))`.
/// Requires `t_offset < 1`.
pub fn model_solution_offset(
    tau0: &LieElement,
    tau: &[LieElement; 3],
    sigma: &Su2Triple,
    grid: &Grid,
    t_offset: f64,
) -> Result<NahmPath> {
    if !grid.is_halfline() {
        return Err(Error::Grid("model solutions live on a half-line grid".into()));
    }
    if !(t_offset < 1.0) {
        return Err(Error::Parameter("t_offset must be below 1".into()));
    }
    let s = centralizer_blocks(tau)?;
    if tau0.dim() != s.n() {
        return Err(Error::DimensionMismatch(tau0.dim(), s.n()));
    }
    let off = (tau0 - &s.proj_z(tau0)).norm();
    if off > 1e-10 {
        return Err(Error::OutsideCentralizer(off));
    }
    sigma.check_in(&s)?;
    let zeta = stability_constants(sigma, &s)?.zeta_bound;
    let asym = Asymptotics {
        tau0: tau0.clone(),
        tau: tau.clone(),
        sigma: sigma.clone(),
        stratum: s.with_zeta(zeta),
        t_offset,
    };
    let samples = grid.nodes().iter().map(|&t| asym.model_at(t)).collect();
    NahmPath::new(grid.clone(), samples, Some(asym))
}
