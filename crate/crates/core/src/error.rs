use thiserror::Error;

/// Every failure the toolkit can report.
///
/// Variant names are part of the command-line contract: `zk` prints
/// [`Error::name`] on standard error and picks its exit code from
/// [`Error::is_input_error`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} is outside the ground set 1..={m}")]
    VertexOutOfRange { vertex: i64, m: usize },

    #[error("vertex {0} lies in no facet")]
    GhostVertex(usize),

    #[error("at most {max} vertices are supported, got {requested}")]
    TooManyVertices { requested: usize, max: usize },

    #[error("index set must be nonempty")]
    EmptyIndexSet,

    #[error("the boundary of a single point has a ghost vertex")]
    BoundaryOfPoint,

    #[error("complex has ghost vertices; Z_K is not simply connected")]
    NotSimplyConnectedAssumptionViolated,

    #[error("complex is not elliptic (minimal non-faces {0} and {1} intersect)")]
    NotElliptic(String, String),

    #[error("complex is not hyperbolic (minimal non-faces are pairwise disjoint)")]
    NotHyperbolic,

    #[error("join reconstruction does not reproduce the input complex")]
    ReconstructionMismatch,

    #[error("wedge witness failed its own check: {0}")]
    WitnessCheckFailed(&'static str),

    #[error("census is limited to m <= {max}, got {requested}")]
    CensusTooLarge { requested: usize, max: usize },

    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),

    #[error("the caller must assert that K is a polytopal sphere")]
    AssertionRequired,

    #[error("polynomial division is not exact")]
    InexactDivision,

    #[error("denominator must be a nonzero polynomial with constant term +-1 after reduction")]
    InvalidDenominator,

    #[error("Schur-Cohn chain degenerated: denominator has a boundary root that is not a root of unity")]
    BoundaryRootUnresolved,

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Stable variant name, as printed by the CLI.
    pub fn name(&self) -> &'static str {
        match self {
            Error::VertexOutOfRange { .. } => "VertexOutOfRange",
            Error::GhostVertex(_) => "GhostVertex",
            Error::TooManyVertices { .. } => "TooManyVertices",
            Error::EmptyIndexSet => "EmptyIndexSet",
            Error::BoundaryOfPoint => "BoundaryOfPoint",
            Error::NotSimplyConnectedAssumptionViolated => "NotSimplyConnectedAssumptionViolated",
            Error::NotElliptic(..) => "NotElliptic",
            Error::NotHyperbolic => "NotHyperbolic",
            Error::ReconstructionMismatch => "ReconstructionMismatch",
            Error::WitnessCheckFailed(_) => "WitnessCheckFailed",
            Error::CensusTooLarge { .. } => "CensusTooLarge",
            Error::ParameterOutOfRange(_) => "ParameterOutOfRange",
            Error::AssertionRequired => "AssertionRequired",
            Error::InexactDivision => "InexactDivision",
            Error::InvalidDenominator => "InvalidDenominator",
            Error::BoundaryRootUnresolved => "BoundaryRootUnresolved",
            Error::Parse(_) => "Parse",
        }
    }

    /// True for errors caused by malformed or invalid input values
    /// (exit code 2); everything else is a precondition violation (exit code 3).
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Parse(_)
                | Error::VertexOutOfRange { .. }
                | Error::GhostVertex(_)
                | Error::TooManyVertices { .. }
                | Error::InvalidDenominator
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
