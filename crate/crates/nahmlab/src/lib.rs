//! Numerical laboratory for Nahm's equations over `su(n)`.
//!
//! The crate integrates and checks Nahm data on an interval or a truncated
//! half-line, evaluates the regularized Bielawski pairing and the
//! quaternionic structures on tangent data, and realizes the Baby Nahm model
//! of the universal symplectic implosion in closed form.
//!
//! Layers, from the bottom up:
//!
//! - [`lie`]: brackets, the invariant inner product, centralizer strata,
//!   root spaces, su(2)-triples and the Chern-Simons stability spectra.
//! - [`nahm`]: grids, sampled paths, model solutions, residuals, the
//!   initial-value integrator and decay diagnostics.
//! - [`gauge`]: gauge actions, gauge fixing, Kronheimer's map, complex
//!   gauge orbits and polar decomposition.
//! - [`metric`]: the Bielawski pairing, I/J/K, symplectic forms, moment maps
//!   and gluing.
//! - [`implosion`]: the Baby Nahm equation, the maps to `K x t+` and the
//!   closed-form Kahler structure on implosion strata.
//! - [`harness`]: scenario files, reports and the acceptance suite.
//!
//! Run `cargo run --example <name>` for a guided tour; the `examples/`
//! directory has one program per capability.

pub mod error;
pub mod gauge;
pub mod harness;
pub mod implosion;
pub mod lie;
pub mod metric;
pub mod nahm;

pub use error::{Error, Result};
pub use lie::{LieElement, StratumData, Su2Triple};
pub use nahm::{Grid, NahmPath, TangentVector};
