use thiserror::Error;

use crate::quadrature::QuadResult;

/// Failure modes shared by every evaluation in the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the function.
    #[error("domain error: {0}")]
    Domain(String),

    /// A quadrature exhausted its budget before reaching the requested
    /// tolerance. The best estimate is attached.
    #[error(
        "tolerance {requested:e} not reached: best estimate {} with error estimate {:e} after {} evaluations",
        best.value,
        best.abs_error_estimate,
        best.evaluations
    )]
    Accuracy { best: QuadResult, requested: f64 },

    /// The integrand produced NaN or an infinity.
    #[error("integrand is not finite at x = {0}")]
    NonFinite(f64),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn require_positive(name: &str, value: f64) -> Result<()> {
    if value > 0.0 && value.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "{name} must be positive and finite, got {value}"
        )))
    }
}
