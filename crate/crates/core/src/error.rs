use thiserror::Error;

/// Errors surfaced by tensor construction, contraction, and the recovery
/// algorithms built on top of them.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("tensor entries must be finite")]
    NonFinite,

    #[error("operation requires equal dimensions on all axes")]
    UnequalDims,

    #[error("operation supports order-3 tensors only, got order {0}")]
    UnsupportedOrder(usize),

    #[error("tensor order must be at least 3, got {0}")]
    OrderTooSmall(usize),

    #[error("vector is not unit norm (deviation {0:.3e})")]
    NotUnit(f64),

    #[error("contraction produced a degenerate (near-zero) direction")]
    DegenerateDirection,

    #[error("tensor must be symmetric for this operation")]
    NotSymmetric,

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("plateau expression is singular for these inputs")]
    SingularPlateau,

    #[error("all {0} initializations hit degenerate directions")]
    AllTrialsDegenerate(usize),

    #[error("trajectory iterates are thinned (stride {0}); dense recording required")]
    TrajectoryThinned(usize),

    #[error("candidate list is empty")]
    EmptyCandidates,

    #[error("i/o failure on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("malformed tensor file {path}: {reason}")]
    Format { path: String, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
