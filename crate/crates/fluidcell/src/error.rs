use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A geometric precondition does not hold (e.g. mobile outside the
    /// central cell without the override).
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A model produced a value outside its admissible range. The value is
    /// reported rather than clamped.
    #[error("model violation: {quantity} = {value} outside {expected}")]
    ModelViolation {
        quantity: &'static str,
        value: f64,
        expected: &'static str,
    },

    /// Adaptive quadrature exhausted its subdivision budget.
    #[error("quadrature did not converge: requested {requested:e}, achieved {achieved:e}")]
    QuadratureTolerance { requested: f64, achieved: f64 },

    /// A target value cannot be bracketed by the available data.
    #[error("target {target} outside achievable range [{lo}, {hi}]")]
    OutOfRange { target: f64, lo: f64, hi: f64 },

    /// An internal monotonicity or consistency assumption failed.
    #[error("internal consistency: {0}")]
    Inconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
