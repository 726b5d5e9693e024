//! Complex Nahm data `(alpha, beta)`, complex gauge orbits and Kronheimer's
//! map from interval solutions to `SL(n, C) x sl(n, C)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lie::element::LieElement;
use crate::lie::matrix::{self, CMat, C64, I};
use crate::lie::triple::Su2Triple;
use crate::nahm::dynamics::nahm_residual_sup;
use crate::nahm::grid::Grid;
use crate::nahm::path::NahmPath;

use super::ode::{solve_right, OdeReport};
use super::path::GaugePath;

/// Nahm residual above which [`kronheimer_map`] flags its input.
pub const KRONHEIMER_RESIDUAL_TOL: f64 = 1e-6;

/// Sampled complex data `alpha = T_0 - i T_1`, `beta = T_2 + i T_3`.
#[derive(Clone, Debug)]
pub struct ComplexPair {
    grid: Grid,
    alpha: Vec<CMat>,
    beta: Vec<CMat>,
}

impl ComplexPair {
    /// Wrap samples on a grid.
    pub fn new(grid: &Grid, alpha: Vec<CMat>, beta: Vec<CMat>) -> Result<Self> {
        if alpha.len() != grid.len() || beta.len() != grid.len() {
            return Err(Error::GridMismatch);
        }
        Ok(ComplexPair { grid: grid.clone(), alpha, beta })
    }

    /// `alpha = T_0 - i T_1`, `beta = T_2 + i T_3`.
    pub fn from_nahm(t: &NahmPath) -> Self {
        let (alpha, beta) = t
            .samples()
            .iter()
            .map(|q| {
                (q[0].matrix() - q[1].matrix() * I, q[2].matrix() + q[3].matrix() * I)
            })
            .unzip();
        ComplexPair { grid: t.grid().clone(), alpha, beta }
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn alpha(&self) -> &[CMat] {
        &self.alpha
    }

    pub fn beta(&self) -> &[CMat] {
        &self.beta
    }

    /// `d beta/dt - [beta, alpha]` at every node.
    pub fn residual(&self) -> Vec<CMat> {
        self.grid
            .derivative(&self.beta)
            .into_iter()
            .zip(self.beta.iter().zip(&self.alpha))
            .map(|(db, (b, a))| db - matrix::comm(b, a))
            .collect()
    }

    /// Largest Frobenius norm of [`ComplexPair::residual`].
    pub fn residual_sup(&self) -> f64 {
        self.residual().iter().map(matrix::fro).fold(0.0, f64::max)
    }
}

/// The complexified model pair on a half-line grid:
/// `alpha_0 = tau_0 - i tau_1 - i sigma_1 / (2(1+t))`,
/// `beta_0 = (tau_2 + i tau_3) + (sigma_2 + i sigma_3) / (2(1+t))`.
pub fn model_pair(tau0: &LieElement, tau: &[LieElement; 3], sigma: &Su2Triple, grid: &Grid) -> Result<ComplexPair> {
    let s = sigma.sigma();
    let n = tau0.dim();
    for x in tau.iter().chain(s.iter()) {
        if x.dim() != n {
            return Err(Error::DimensionMismatch(n, x.dim()));
        }
    }
    let (alpha, beta) = grid
        .nodes()
        .iter()
        .map(|&t| {
            let w = C64::new(1.0 / (2.0 * (1.0 + t)), 0.0);
            let a = tau0.matrix() - tau[0].matrix() * I - s[0].matrix() * I * w;
            let b = tau[1].matrix() + tau[2].matrix() * I + (s[1].matrix() + s[2].matrix() * I) * w;
            (a, b)
        })
        .unzip();
    ComplexPair::new(grid, alpha, beta)
}

/// `alpha -> g alpha g^{-1} - dg/dt g^{-1}`, `beta -> g beta g^{-1}`.
pub fn complex_gauge_apply(g: &GaugePath, pair: &ComplexPair) -> Result<ComplexPair> {
    if g.grid() != pair.grid() {
        return Err(Error::GridMismatch);
    }
    let v = g.velocity()?;
    let mut alpha = Vec::with_capacity(pair.grid.len());
    let mut beta = Vec::with_capacity(pair.grid.len());
    for k in 0..pair.grid.len() {
        let gk = &g.samples()[k];
        let gi = g.inverse_at(k)?;
        alpha.push(gk * &pair.alpha[k] * &gi - &v[k]);
        beta.push(gk * &pair.beta[k] * &gi);
    }
    ComplexPair::new(&pair.grid, alpha, beta)
}

/// Holomorphic orbit coordinates `(g(0), tau_C + Y)` with
/// `tau_C = tau_2 + i tau_3` and `Y = (sigma_2 + i sigma_3) / 2`.
pub fn orbit_coordinates(g: &GaugePath, tau: &[LieElement; 3], sigma: &Su2Triple) -> (CMat, CMat) {
    let s = sigma.sigma();
    let y = (s[1].matrix() + s[2].matrix() * I) * C64::new(0.5, 0.0);
    (g.boundary().0.clone(), tau[1].matrix() + tau[2].matrix() * I + y)
}

/// Output of [`kronheimer_map`].
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct KronheimerPoint {
    /// `g(t_end)` where `dg/dt = g alpha`, `g(0) = 1`.
    #[serde(with = "complex_matrix")]
    pub g_end: CMat,
    /// `beta(0)`.
    #[serde(with = "complex_matrix")]
    pub beta0: CMat,
    /// Nahm residual of the input.
    pub nahm_residual: f64,
    /// Whether the input failed the residual tolerance.
    pub residual_warning: bool,
    pub ode: OdeReport,
}

/// Kronheimer's map `(alpha, beta) -> (g(1), beta(0))` on an interval.
///
/// The interval may have any positive length; `g` is evaluated at its end.
pub fn kronheimer_map(t: &NahmPath) -> Result<KronheimerPoint> {
    if t.grid().is_halfline() {
        return Err(Error::Grid("Kronheimer's map needs an interval grid".into()));
    }
    let pair = ComplexPair::from_nahm(t);
    let (g, ode) = solve_right(t.grid(), pair.alpha(), false)?;
    let res = nahm_residual_sup(t)?;
    Ok(KronheimerPoint {
        g_end: g.last().unwrap().clone(),
        beta0: pair.beta()[0].clone(),
        nahm_residual: res,
        residual_warning: res > KRONHEIMER_RESIDUAL_TOL,
        ode,
    })
}

/// Serialize complex matrices as nested `[re, im]` arrays, row-major.
pub mod complex_matrix {
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    use crate::lie::matrix::{CMat, C64};

    pub fn to_rows(m: &CMat) -> Vec<Vec<[f64; 2]>> {
        (0..m.nrows()).map(|i| (0..m.ncols()).map(|j| [m[(i, j)].re, m[(i, j)].im]).collect()).collect()
    }

    pub fn from_rows(rows: &[Vec<[f64; 2]>]) -> Option<CMat> {
        let n = rows.len();
        let m = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != m) {
            return None;
        }
        Some(CMat::from_fn(n, m, |i, j| C64::new(rows[i][j][0], rows[i][j][1])))
    }

    pub fn serialize<S: Serializer>(m: &CMat, s: S) -> Result<S::Ok, S::Error> {
        to_rows(m).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<CMat, D::Error> {
        let rows = Vec::<Vec<[f64; 2]>>::deserialize(d)?;
        from_rows(&rows).ok_or_else(|| serde::de::Error::custom("ragged matrix"))
    }
}
