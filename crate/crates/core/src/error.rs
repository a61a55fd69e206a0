use thiserror::Error;

/// Errors shared by all modules in this crate.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    /// Argument outside the documented domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A configuration of boundary points degenerated (repeated points, ...).
    #[error("degenerate configuration: {0}")]
    Degenerate(String),

    /// Two geodesics share an ideal endpoint; their distance is zero.
    #[error("geodesics share an ideal endpoint")]
    SharedEndpoint,

    /// Two geodesics cross; they have no common perpendicular.
    #[error("geodesics cross")]
    CrossingGeodesics,

    /// A Moebius map was required to be hyperbolic but is not.
    #[error("map is not hyperbolic (|trace| <= 2)")]
    NotHyperbolic,

    /// Points supplied out of the required circular order.
    #[error("ordering error: {0}")]
    Ordering(String),

    /// A quadrature did not reach the requested tolerance within budget.
    #[error("tolerance not reached: {0}")]
    Tolerance(String),

    /// Surface construction failed its own invariants.
    #[error("surface construction failed: {0}")]
    Construction(String),

    /// Invalid run parameter (sample counts, word-length caps, ...).
    #[error("invalid parameter: {0}")]
    Parameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
