use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Malformed or out-of-domain input to a geometric primitive.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A gap, side or tangent length collapsed below the degeneracy floor.
    #[error("degenerate geometry: {0}")]
    Degenerate(String),

    /// Side lengths that cannot close a convex polygon.
    #[error("infeasible sides: {0}")]
    InfeasibleSides(String),

    /// A polygon description that does not match its schema.
    #[error("invalid polygon spec: {0}")]
    InvalidSpec(String),

    /// Index arguments outside `1 <= h < k <= n`.
    #[error("invalid arguments: {0}")]
    InvalidArguments(String),

    /// Boundary data whose reconstructed apex tangents are not positive.
    #[error("inconsistent boundary: {0}")]
    InconsistentBoundary(String),

    /// Solver non-convergence or a negative radicand from cancellation.
    #[error("numeric failure: {0}")]
    Numeric(String),
}

impl Error {
    /// Short machine-readable tag used in JSON diagnostics.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidInput(_) => "invalid_input",
            Error::Degenerate(_) => "degenerate",
            Error::InfeasibleSides(_) => "infeasible_sides",
            Error::InvalidSpec(_) => "invalid_spec",
            Error::InvalidArguments(_) => "invalid_arguments",
            Error::InconsistentBoundary(_) => "inconsistent_boundary",
            Error::Numeric(_) => "numeric",
        }
    }
}
