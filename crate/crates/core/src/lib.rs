//! Spin squeezing of the Dicke class of symmetric N-qubit states.
//!
//! A state in this class is the symmetrized product of `k` copies of `|0⟩`
//! and `N - k` copies of the spinor `(a, √(1-a²))`. The crate evaluates the
//! Kitagawa-Ueda squeezing parameter `ξ` two ways:
//!
//! * [`analytic`] evaluates closed-form combinatorial sums for the mean spin
//!   and the minimum perpendicular variance;
//! * [`oracle`] builds the state in the Dicke basis (or the full `2^N`
//!   space for small `N`) and diagonalizes the perpendicular quadratic form
//!   directly.
//!
//! [`verify`] cross-checks the two against each other and against the
//! small-`N` golden tables.

pub mod analytic;
pub mod combinatorics;
pub mod error;
pub mod exact;
pub mod oracle;
pub mod state;
pub mod verify;

pub use analytic::{squeezing_parameter, AnalyticModel, MomentPolynomials};
pub use error::{ConfigError, SqueezeError};
pub use oracle::squeezing_parameter_oracle;
pub use state::{
    DickeClassConfig, FrameBasis, FrameCoefficients, Method, SpinExpectation, SqueezingReport,
    Verdict,
};
