//! Error type shared by all modules.

use thiserror::Error;

/// Everything that can go wrong in a computation.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("invalid Lie algebra element: {0}")]
    InvalidElement(String),
    #[error("invalid stratum: {0}")]
    InvalidStratum(String),
    #[error("partition does not match blocks: {0}")]
    Partition(String),
    #[error("invalid su(2)-triple: {0}")]
    InvalidTriple(String),
    #[error("component outside the centralizer algebra: {0:.3e}")]
    OutsideCentralizer(f64),
    #[error("no positive eigenvalue in either stability spectrum")]
    NoPositiveEigenvalue,
    #[error("invalid grid: {0}")]
    Grid(String),
    #[error("paths live on different grids")]
    GridMismatch,
    #[error("half-line data is missing its asymptotic record")]
    MissingAsymptotics,
    #[error("blow-up at t = {t}: norm {norm:.3e}")]
    BlowUp { t: f64, norm: f64 },
    #[error("singular matrix: {0}")]
    Singular(String),
    #[error("cross term <delta, epsilon> = {0:.3e}; the regularized integral diverges")]
    CrossTerm(f64),
    #[error("invalid parameter: {0}")]
    Parameter(String),
    #[error("residual too large: {0:.3e}")]
    Residual(f64),
    #[error("limit outside the declared face: {0}")]
    Face(String),
    #[error("junction mismatch: {0}")]
    Junction(String),
    #[error("scenario: {0}")]
    Scenario(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
