//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid model parameters: {0}")]
    InvalidParams(String),

    #[error("denominator vanishes within tolerance at u = {u:?} in {what}")]
    PoleAtDenominator { what: &'static str, u: (f64, f64) },

    #[error("evaluation point coincides with a zero of Q: {0}")]
    PoleAtRoot(String),

    #[error("unsupported case: {0}")]
    UnsupportedCase(String),

    #[error("operator-level functional relation is only assembled for q in {{3, 5}}, got q = {0}")]
    UnsupportedQ(u32),

    #[error("matrix dimension {dim} exceeds limit {limit}")]
    DimensionTooLarge { dim: usize, limit: usize },

    #[error("finite-difference derivative unstable: step estimates differ by {0:.3e} relative")]
    DerivativeUnstable(f64),

    #[error("boundary parameters hit a singular point: {0}")]
    BoundarySingularity(String),

    #[error("eigenvalue iteration failed to converge (dim {0})")]
    ConvergenceFailure(usize),

    #[error("Newton refinement did not converge: residual {residual:.3e} after {iterations} iterations")]
    NoConvergence { residual: f64, iterations: usize },

    #[error("null direction not isolated: singular-value ratio {0:.3e} > 0.1")]
    RankDeficiency(f64),

    #[error("energy methods disagree: |closed - generic| = {0:.3e}")]
    MethodDisagreement(f64),

    #[error("spectra have different lengths: {0} vs {1}")]
    LengthMismatch(usize, usize),

    #[error("completeness failed: {unmatched} of {total} levels unmatched (worst deviation {worst:.3e})")]
    IncompleteMatch {
        unmatched: usize,
        total: usize,
        worst: f64,
    },

    #[error("Bethe state residuals too large for {op}: max residual {residual:.3e}")]
    UnconvergedState { op: &'static str, residual: f64 },

    #[error("{0}")]
    Numerical(String),
}

pub type Result<T> = std::result::Result<T, Error>;
