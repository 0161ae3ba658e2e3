//! Numerical library for gamma-family special functions, the Gauss
//! hypergeometric function `₂F₁` on `[0, 1)` (including the zero-balanced
//! case `c = a + b` with its logarithmic singularity at 1), the family of
//! logarithmic-type functions built on it, and machine verification of
//! Bernoulli-type inequalities, monotonicity, and concavity claims over
//! parameter grids.
//!
//! Layout:
//!
//! * [`special_fn`] — log-gamma, digamma, beta, and the boundary constant
//!   `R(a, b) = −2γ − ψ(a) − ψ(b)`.
//! * [`hyp2f1`] — series evaluation of `₂F₁`, its derivative, Gauss value at 1,
//!   Maclaurin coefficients, and `F′/F` ratio coefficients.
//! * [`logtype`] — `g(x) = x·F(c,d;c+d;x)`, the piecewise max-power envelope
//!   `φ`, the `ω` mean, bounded ratios, and related elementary functions.
//! * [`analysis`] — grids, a deterministic bracketing root solver, and
//!   monotonicity/concavity checkers over grids.
//! * [`verify`] — theorem-keyed verification suites producing JSON-friendly
//!   reports with located violations.
//!
//! All evaluation functions are pure; sweeps in [`verify`] fan out over a
//! rayon worker pool and merge results in deterministic order.

pub mod analysis;
mod error;
pub mod hyp2f1;
pub mod logtype;
pub mod special_fn;
pub mod verify;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
