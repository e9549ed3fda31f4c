//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension must be an integer >= 5, got {0}")]
    InvalidDimension(i64),

    #[error("mu = {mu} outside (0, mu*] with mu* = {mu_star}")]
    MuOutOfRange { mu: f64, mu_star: f64 },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("operation only defined in the {expected} regime")]
    WrongRegime { expected: &'static str },

    #[error("cutoff power ell = {ell} too small, need ell >= {min}")]
    EllTooSmall { ell: u32, min: u32 },

    #[error("quadrature did not converge: estimated error {err:e} above tolerance")]
    EstimateFailed { err: f64 },

    #[error("admissible q interval ({lo}, {hi}) is empty")]
    NoAdmissibleQ { lo: f64, hi: f64 },

    #[error("q = {q} outside the admissible interval ({lo}, {hi})")]
    QOutOfRange { q: f64, lo: f64, hi: f64 },

    #[error("sup search failed: {0}")]
    SupFailure(String),

    #[error("certificate failed: {0}")]
    CertificateFailed(String),

    #[error("contract violation: {0}")]
    ContractViolation(String),

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("operator assembly failed: {0}")]
    AssemblyError(String),

    #[error("time step failed: {0}")]
    StepError(String),
}

pub type Result<T> = std::result::Result<T, Error>;
