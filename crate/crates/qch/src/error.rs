//! Error type shared by every fallible operation in the crate.

/// Errors produced by input validation and by the root finder.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// An input lies outside the mathematical domain of the operation.
    #[error("domain error in {op}: {msg}")]
    Domain {
        /// Name of the operation that rejected the input.
        op: &'static str,
        /// Human-readable description of the violated constraint.
        msg: String,
    },

    /// A root-finding bracket whose endpoint values have the same sign.
    #[error("no sign change on [{lo}, {hi}]: f(lo) = {f_lo:e}, f(hi) = {f_hi:e}")]
    NoSignChange {
        lo: f64,
        hi: f64,
        f_lo: f64,
        f_hi: f64,
    },

    /// The root finder exhausted its iteration budget without meeting
    /// either the residual or the interval-width tolerance.
    #[error("root finder did not converge within {max_iterations} iterations (residual {residual:e}, width {width:e})")]
    NoConvergence {
        max_iterations: usize,
        residual: f64,
        width: f64,
    },

    /// A monotone-inversion target that lies outside the function's range
    /// over the search interval.
    #[error("target {target} outside the attained range [{range_lo}, {range_hi}]")]
    TargetOutOfRange {
        target: f64,
        range_lo: f64,
        range_hi: f64,
    },
}

impl Error {
    /// Convenience constructor for domain errors.
    pub fn domain(op: &'static str, msg: impl Into<String>) -> Self {
        Error::Domain {
            op,
            msg: msg.into(),
        }
    }
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
