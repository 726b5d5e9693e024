//! Time grids on `[0, L]` or a truncated half-line, with derivative stencils
//! and trapezoid quadrature.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lie::element::LieElement;
use crate::lie::matrix::{CMat, C64};

/// Minimum number of nodes.
pub const MIN_NODES: usize = 16;
/// Points per derivative stencil.
pub const STENCIL: usize = 7;
/// Default half-line truncation.
pub const DEFAULT_TMAX: f64 = 40.0;
/// Default number of half-line intervals.
pub const DEFAULT_INTERVALS: usize = 2048;

/// Whether a grid discretizes a compact interval or a truncated half-line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GridKind {
    Interval,
    HalfLine,
}

#[derive(Debug)]
struct GridInner {
    nodes: Vec<f64>,
    kind: GridKind,
    stencils: Vec<(usize, [f64; STENCIL])>,
}

/// Strictly increasing nodes starting at zero. Cheap to clone.
#[derive(Clone, Debug)]
pub struct Grid {
    inner: Arc<GridInner>,
}

impl PartialEq for Grid {
    fn eq(&self, other: &Grid) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.kind == other.inner.kind && self.inner.nodes == other.inner.nodes)
    }
}

/// Linear spaces that can be sampled along a grid.
pub trait Sampled: Clone {
    fn zero_like(&self) -> Self;
    fn axpy(&mut self, a: f64, x: &Self);
}

impl Sampled for LieElement {
    fn zero_like(&self) -> Self {
        LieElement::zeros(self.dim())
    }
    fn axpy(&mut self, a: f64, x: &Self) {
        *self += &(x * a);
    }
}

impl Sampled for CMat {
    fn zero_like(&self) -> Self {
        CMat::zeros(self.nrows(), self.ncols())
    }
    fn axpy(&mut self, a: f64, x: &Self) {
        *self += x * C64::new(a, 0.0);
    }
}

impl Sampled for f64 {
    fn zero_like(&self) -> Self {
        0.0
    }
    fn axpy(&mut self, a: f64, x: &Self) {
        *self += a * x;
    }
}

/// Finite-difference weights for the first derivative at `z` (Fornberg).
pub fn fornberg_first(z: f64, x: &[f64]) -> Vec<f64> {
    let n = x.len();
    let mut c = vec![[0.0f64; 2]; n];
    let mut c1 = 1.0;
    let mut c4 = x[0] - z;
    c[0][0] = 1.0;
    for i in 1..n {
        let mn = i.min(1);
        let mut c2 = 1.0;
        let c5 = c4;
        c4 = x[i] - z;
        for j in 0..i {
            let c3 = x[i] - x[j];
            c2 *= c3;
            if j == i - 1 {
                for k in (1..=mn).rev() {
                    c[i][k] = c1 * (k as f64 * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
                }
                c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
            }
            for k in (1..=mn).rev() {
                c[j][k] = (c4 * c[j][k] - k as f64 * c[j][k - 1]) / c3;
            }
            c[j][0] = c4 * c[j][0] / c3;
        }
        c1 = c2;
    }
    c.iter().map(|w| w[1]).collect()
}

impl Grid {
    /// Grid from explicit nodes.
    pub fn from_nodes(nodes: Vec<f64>, kind: GridKind) -> Result<Grid> {
        if nodes.len() < MIN_NODES {
            return Err(Error::Grid(format!("{} nodes; at least {MIN_NODES} required", nodes.len())));
        }
        if nodes[0] != 0.0 {
            return Err(Error::Grid("first node must be 0".into()));
        }
        if nodes.windows(2).any(|w| !(w[1] > w[0])) || nodes.iter().any(|t| !t.is_finite()) {
            return Err(Error::Grid("nodes must be finite and strictly increasing".into()));
        }
        let n = nodes.len();
        let stencils = (0..n)
            .map(|i| {
                let start = i.saturating_sub(STENCIL / 2).min(n - STENCIL);
                let w = fornberg_first(nodes[i], &nodes[start..start + STENCIL]);
                let mut arr = [0.0; STENCIL];
                arr.copy_from_slice(&w);
                (start, arr)
            })
            .collect();
        Ok(Grid { inner: Arc::new(GridInner { nodes, kind, stencils }) })
    }

    /// Uniform grid on `[0, length]` with `nodes` nodes.
    pub fn interval(length: f64, nodes: usize) -> Result<Grid> {
        if !(length > 0.0) || nodes < 2 {
            return Err(Error::Grid("interval needs positive length".into()));
        }
        let h = length / (nodes - 1) as f64;
        let mut v: Vec<f64> = (0..nodes).map(|k| k as f64 * h).collect();
        v[nodes - 1] = length;
        Grid::from_nodes(v, GridKind::Interval)
    }

    /// Half-line grid `t_k = (1 + t_max)^{k/N} - 1`, `k = 0..=N`.
    pub fn halfline(t_max: f64, intervals: usize) -> Result<Grid> {
        if !(t_max > 0.0) {
            return Err(Error::Grid("t_max must be positive".into()));
        }
        let base = 1.0 + t_max;
        let mut v: Vec<f64> = (0..=intervals)
            .map(|k| base.powf(k as f64 / intervals as f64) - 1.0)
            .collect();
        v[0] = 0.0;
        v[intervals] = t_max;
        Grid::from_nodes(v, GridKind::HalfLine)
    }

    /// The default half-line grid: `t_max = 40`, 2048 intervals.
    pub fn halfline_default() -> Grid {
        Grid::halfline(DEFAULT_TMAX, DEFAULT_INTERVALS).expect("default grid")
    }

    /// Nodes.
    pub fn nodes(&self) -> &[f64] {
        &self.inner.nodes
    }

    /// Number of nodes.
    pub fn len(&self) -> usize {
        self.inner.nodes.len()
    }

    /// Always false; grids have at least [`MIN_NODES`] nodes.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// Grid kind.
    pub fn kind(&self) -> GridKind {
        self.inner.kind
    }

    /// Whether this is a truncated half-line.
    pub fn is_halfline(&self) -> bool {
        self.inner.kind == GridKind::HalfLine
    }

    /// Last node.
    pub fn t_max(&self) -> f64 {
        *self.inner.nodes.last().unwrap()
    }

    /// Index of the first node `>= t` (clamped to the last node).
    pub fn index_at_or_after(&self, t: f64) -> usize {
        let nodes = &self.inner.nodes;
        nodes.partition_point(|&x| x < t).min(nodes.len() - 1)
    }

    /// Largest spacing between consecutive nodes.
    pub fn max_step(&self) -> f64 {
        self.inner.nodes.windows(2).map(|w| w[1] - w[0]).fold(0.0, f64::max)
    }

    /// First derivative of sampled values by the 7-point stencils.
    pub fn derivative<T: Sampled>(&self, f: &[T]) -> Vec<T> {
        assert_eq!(f.len(), self.len(), "sample count must match grid");
        self.inner
            .stencils
            .iter()
            .map(|(start, w)| {
                let mut acc = f[0].zero_like();
                for (k, wk) in w.iter().enumerate() {
                    acc.axpy(*wk, &f[start + k]);
                }
                acc
            })
            .collect()
    }

    /// Trapezoid rule over all nodes.
    pub fn trapezoid(&self, f: &[f64]) -> f64 {
        self.trapezoid_range(f, 0, self.len() - 1)
    }

    /// Trapezoid rule between node indices `a <= b`.
    pub fn trapezoid_range(&self, f: &[f64], a: usize, b: usize) -> f64 {
        let t = &self.inner.nodes;
        (a..b).map(|k| 0.5 * (t[k + 1] - t[k]) * (f[k] + f[k + 1])).sum()
    }

    /// Cubic Lagrange weights for evaluating at `t` in `[t_k, t_{k+1}]`
    /// from four neighbouring nodes.
    pub fn cubic_weights(&self, k: usize, t: f64) -> (usize, [f64; 4]) {
        let nodes = &self.inner.nodes;
        let start = k.saturating_sub(1).min(nodes.len() - 4);
        let xs = &nodes[start..start + 4];
        let mut w = [1.0; 4];
        for i in 0..4 {
            for j in 0..4 {
                if i != j {
                    w[i] *= (t - xs[j]) / (xs[i] - xs[j]);
                }
            }
        }
        (start, w)
    }

    /// Cubic interpolation of sampled values at `t` in `[t_k, t_{k+1}]`.
    pub fn interpolate<T: Sampled>(&self, f: &[T], k: usize, t: f64) -> T {
        let (start, w) = self.cubic_weights(k, t);
        let mut acc = f[start].zero_like();
        for i in 0..4 {
            acc.axpy(w[i], &f[start + i]);
        }
        acc
    }

    /// Same nodes shifted by `offset` and prefixed by `head` (which must end
    /// at `offset`); used for gluing.
    pub fn concatenate(head: &Grid, tail: &Grid, kind: GridKind) -> Result<Grid> {
        let l = head.t_max();
        let mut v = head.nodes().to_vec();
        v.extend(tail.nodes().iter().skip(1).map(|t| t + l));
        Grid::from_nodes(v, kind)
    }

    /// Nodes scaled by `factor > 0`.
    pub fn scaled(&self, factor: f64) -> Result<Grid> {
        Grid::from_nodes(self.nodes().iter().map(|t| t * factor).collect(), self.kind())
    }
}
