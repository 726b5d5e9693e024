//! Root-space decomposition of `c^perp` under `ad(tau_1)`.

use super::element::{off_diagonal_pair, LieElement};
use super::stratum::StratumData;
use crate::error::{Error, Result};

/// A two-dimensional root space `k_alpha` with its complex structure `I0`.
///
/// `[tau_1, v] = alpha_value * I0(v)` on the span. `i0_matrix[r][c]` is the
/// coefficient of `basis[r]` in `I0(basis[c])`.
#[derive(Clone, Debug, PartialEq)]
pub struct RootSpace {
    pub alpha_value: f64,
    pub basis: [LieElement; 2],
    pub i0_matrix: [[f64; 2]; 2],
    /// Matrix position `(j, k)`, `j < k`, generating the space.
    pub position: (usize, usize),
}

impl RootSpace {
    /// Coordinates of the projection of `v` onto the span.
    pub fn coords(&self, v: &LieElement) -> [f64; 2] {
        [self.basis[0].dot(v), self.basis[1].dot(v)]
    }

    /// The element with the given coordinates.
    pub fn element(&self, c: [f64; 2]) -> LieElement {
        &(&self.basis[0] * c[0]) + &(&self.basis[1] * c[1])
    }

    /// `I0` applied to coordinates.
    pub fn apply_i0(&self, c: [f64; 2]) -> [f64; 2] {
        let m = &self.i0_matrix;
        [m[0][0] * c[0] + m[0][1] * c[1], m[1][0] * c[0] + m[1][1] * c[1]]
    }
}

/// Root spaces of `ad(tau1)` on `c^perp`, sorted by decreasing
/// `alpha_value`, ties broken by matrix position.
pub fn root_spaces(tau1: &LieElement, s: &StratumData) -> Result<Vec<RootSpace>> {
    let n = s.n();
    if tau1.dim() != n {
        return Err(Error::DimensionMismatch(tau1.dim(), n));
    }
    if !tau1.is_diagonal(1e-12) {
        return Err(Error::InvalidElement("tau_1 must be diagonal".into()));
    }
    let a = tau1.diagonal_values();
    let mut out = Vec::new();
    for j in 0..n {
        for k in (j + 1)..n {
            if s.same_block(j, k) {
                continue;
            }
            let d = a[j] - a[k];
            if d.abs() <= 1e-9 {
                return Err(Error::InvalidStratum(format!(
                    "tau_1 does not separate positions {j} and {k} of different blocks"
                )));
            }
            let (e1, e2) = off_diagonal_pair(n, j, k);
            // [tau1, e1] = d e2 and [tau1, e2] = -d e1.
            let i0 = if d > 0.0 { [[0.0, -1.0], [1.0, 0.0]] } else { [[0.0, 1.0], [-1.0, 0.0]] };
            out.push(RootSpace { alpha_value: d.abs(), basis: [e1, e2], i0_matrix: i0, position: (j, k) });
        }
    }
    out.sort_by(|x, y| {
        y.alpha_value
            .partial_cmp(&x.alpha_value)
            .unwrap()
            .then(x.position.cmp(&y.position))
    });
    Ok(out)
}
