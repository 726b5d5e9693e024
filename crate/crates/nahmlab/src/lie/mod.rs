//! The `su(n)` structure layer.

pub mod element;
pub mod matrix;
pub mod roots;
pub mod stability;
pub mod stratum;
pub mod triple;

pub use element::LieElement;
pub use roots::{root_spaces, RootSpace};
pub use stability::{chern_simons, stability_constants, StabilityConstants};
pub use stratum::{centralizer_blocks, project_stratum, StratumData};
pub use triple::{su2_triple_from_partition, Su2Triple};

use crate::error::Result;

/// Commutator of two elements.
pub fn bracket(x: &LieElement, y: &LieElement) -> Result<LieElement> {
    x.bracket(y)
}

/// Invariant inner product `-tr(xy)`.
pub fn inner(x: &LieElement, y: &LieElement) -> Result<f64> {
    x.inner(y)
}
