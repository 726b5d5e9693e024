//! Discretized Nahm flows.

pub mod decay;
pub mod dynamics;
pub mod grid;
pub mod path;

pub use decay::{decay_diagnostics, DecayReport};
pub use dynamics::{
    horizontality_residual, integrate_ivp, linearized_residual, nahm_residual, nahm_residual_sup, sup_norm,
    T0Source,
};
pub use grid::{Grid, GridKind};
pub use path::{
    model_solution, model_solution_offset, zero_quad, Asymptotics, NahmPath, Quad, TangentAsymptotics,
    TangentVector,
};
