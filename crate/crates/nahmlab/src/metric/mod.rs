//! The Bielawski pairing, the quaternionic structure, symplectic forms,
//! moment maps, gluing and homotheties.

pub mod glue;
pub mod pairing;
pub mod quaternion;

pub use glue::{glue_paths, glue_tangents, homothety, homothety_tangent, GlueCheck, GlueReport};
pub use pairing::{
    bielawski_norm_sq, bielawski_pair, bump, decomposed_norm, nondegeneracy_probe, pointwise_inner,
    DecomposedNorm, MetricConfig, NondegeneracyProbe, PairingReport,
};
pub use quaternion::{moment_boundary, moment_torus, quaternion_act, symplectic_pair, Axis};
