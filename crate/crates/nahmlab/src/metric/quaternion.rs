//! The complex structures I, J, K, the symplectic forms and the moment maps.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lie::element::LieElement;
use crate::nahm::path::{NahmPath, Quad, TangentVector};

use super::pairing::{bielawski_pair, MetricConfig};

/// One of the three complex structures.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Axis {
    I,
    J,
    K,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::I, Axis::J, Axis::K];

    /// Signed permutation `(sign, source)`: component `i` of the image is
    /// `sign[i] * X[source[i]]`.
    pub fn table(self) -> ([f64; 4], [usize; 4]) {
        match self {
            Axis::I => ([1.0, -1.0, -1.0, 1.0], [1, 0, 3, 2]),
            Axis::J => ([-1.0, -1.0, 1.0, 1.0], [2, 3, 0, 1]),
            Axis::K => ([-1.0, 1.0, -1.0, 1.0], [3, 2, 1, 0]),
        }
    }

    /// Apply to a single quadruple.
    pub fn apply(self, q: &Quad) -> Quad {
        let (sign, src) = self.table();
        std::array::from_fn(|i| if sign[i] > 0.0 { q[src[i]].clone() } else { -&q[src[i]] })
    }
}

/// `IX = (X_1, -X_0, -X_3, X_2)`, `JX = (-X_2, -X_3, X_0, X_1)`,
/// `KX = (-X_3, X_2, -X_1, X_0)`, applied to samples and asymptotics alike.
pub fn quaternion_act(axis: Axis, x: &TangentVector) -> TangentVector {
    x.map(|q| axis.apply(q))
}

/// `omega_axis(X, Y) = <axis X, Y>_{B,b}`.
pub fn symplectic_pair(axis: Axis, x: &TangentVector, y: &TangentVector, cfg: &MetricConfig) -> Result<f64> {
    Ok(bielawski_pair(&quaternion_act(axis, x), y, cfg)?.value)
}

/// The torus moment map: the limit `tau` from the asymptotic record.
pub fn moment_torus(t: &NahmPath) -> Result<[LieElement; 3]> {
    Ok(t.asymptotics().ok_or(Error::MissingAsymptotics)?.tau.clone())
}

/// The moment map of the action at `t = 0`: `(-T_1(0), -T_2(0), -T_3(0))`.
pub fn moment_boundary(t: &NahmPath) -> [LieElement; 3] {
    let q = &t.samples()[0];
    [-&q[1], -&q[2], -&q[3]]
}
