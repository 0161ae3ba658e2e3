use thiserror::Error;

/// Errors produced by evaluation, root finding, and verification.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Input outside a function's domain (non-finite, non-positive, out of range).
    #[error("domain error: {0}")]
    Domain(String),

    /// A series hit the term cap before meeting the stopping rule. Carries the
    /// partial sum so callers can still inspect it.
    #[error("series did not converge within {max_terms} terms (partial sum {partial})")]
    Convergence { partial: f64, max_terms: usize },

    /// Root bracketing failed: no sign change over the candidate interval.
    #[error("no sign change on [{lo}, {hi}]: f(lo)={f_lo}, f(hi)={f_hi}{diagnostic}")]
    Bracket {
        lo: f64,
        hi: f64,
        f_lo: f64,
        f_hi: f64,
        diagnostic: String,
    },

    /// A function evaluation returned a non-finite value.
    #[error("non-finite evaluation at {at}")]
    Eval { at: f64 },

    /// Adjacent piecewise branches disagreed near a breakpoint beyond the
    /// agreement threshold.
    #[error("piecewise branches disagree at {at}: {left} vs {right}")]
    BranchMismatch { at: f64, left: f64, right: f64 },

    /// A stated postcondition or caller contract failed.
    #[error("contract violation: {0}")]
    Contract(String),

    /// Unknown theorem or sweep identifier.
    #[error("unknown identifier `{0}`")]
    UnknownId(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
