//! Shared error type for the workbench.

use num_complex::Complex64;

/// Errors reported by the special-function, numerics, model and engine layers.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    /// An argument fell outside the validated domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// An iterative solver did not reach its tolerance.
    #[error("no convergence after {iterations} iterations: last iterate {last}, |residual| = {residual:.3e}")]
    NoConvergence {
        iterations: usize,
        last: Complex64,
        residual: f64,
    },

    /// Adaptive quadrature could not meet the requested tolerance.
    #[error("quadrature tolerance not met: achieved {achieved:.3e}, requested {requested:.3e}")]
    QuadTolerance { achieved: f64, requested: f64 },

    /// The winding-number audit of a root search failed.
    #[error("root count mismatch over [{re_min}, {re_max}] x [{im_min}, {im_max}]: winding number {expected}, found {found}")]
    RootAudit {
        re_min: f64,
        re_max: f64,
        im_min: f64,
        im_max: f64,
        expected: i64,
        found: usize,
    },

    /// A zero of the target function sits on (or too close to) a contour.
    #[error("root on or near search-region boundary (|f| = {magnitude:.3e}); perturb the region")]
    BoundaryRoot { magnitude: f64 },

    /// A tracked eigenvalue branch jumped while being continued.
    #[error("branch jump during continuation: step {step}, |Δσ| = {jump:.3e} exceeds bound {bound:.3e}")]
    BranchJump { step: usize, jump: f64, bound: f64 },

    /// Two field-sample sets are not on the same grid.
    #[error("field-sample grids differ; cannot compare")]
    GridMismatch,

    /// A mode window selected no modes.
    #[error("empty mode window")]
    EmptyWindow,

    /// A series truncation criterion was not met.
    #[error("truncation criterion unmet: {0}")]
    Truncation(String),

    /// Malformed input data (config files, oracle grid records).
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
