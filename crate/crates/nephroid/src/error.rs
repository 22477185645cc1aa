//! Error type shared by every module of the crate.

use std::fmt;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong during evaluation or verification.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Input outside the closed unit disk (beyond the rounding slack).
    Domain(String),
    /// A square-root or logarithm argument landed on the chosen branch cut
    /// and could not be resolved by the upper-half-plane limit convention.
    Branch(String),
    /// Evaluation at or too close to a pole.
    Pole(String),
    /// No evaluation path converges for the requested parameters.
    Convergence(String),
    /// Series at |z| = 1 with c - a - b <= 0 and non-terminating parameters.
    NonConvergentAtBoundary,
    /// Adaptive quadrature exhausted its depth before meeting the tolerance.
    ToleranceNotMet { requested: f64, achieved: f64 },
    /// Root bracketing failed: f(lo) and f(hi) have the same sign.
    NoBracket { lo: f64, hi: f64 },
    /// Iteration cap reached before the bracket shrank to tolerance.
    MaxIterations,
    /// Membership query too close to the sampled boundary to classify.
    OracleInconclusive,
    /// Argument outside an operation's stated hypothesis.
    Parameter(String),
    /// Too many boundary angles had to be skipped during sampling.
    Sampling(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::Branch(msg) => write!(f, "branch error: {msg}"),
            Error::Pole(msg) => write!(f, "pole error: {msg}"),
            Error::Convergence(msg) => write!(f, "convergence error: {msg}"),
            Error::NonConvergentAtBoundary => {
                write!(
                    f,
                    "series does not converge on the unit circle (c - a - b <= 0)"
                )
            }
            Error::ToleranceNotMet {
                requested,
                achieved,
            } => {
                write!(
                    f,
                    "tolerance not met: requested {requested:.3e}, achieved {achieved:.3e}"
                )
            }
            Error::NoBracket { lo, hi } => {
                write!(f, "no sign change on [{lo}, {hi}]")
            }
            Error::MaxIterations => write!(f, "iteration limit reached"),
            Error::OracleInconclusive => {
                write!(f, "point too close to the sampled boundary to classify")
            }
            Error::Parameter(msg) => write!(f, "parameter error: {msg}"),
            Error::Sampling(msg) => write!(f, "sampling error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}
