use thiserror::Error;

/// Errors raised by the library.
///
/// Variants that carry a `String` hold a human-readable detail; the variant
/// itself is the stable, machine-checkable part.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not full-dimensional: {0}")]
    NotFullDimensional(String),
    #[error("origin is not in the interior of the polytope")]
    OriginNotInterior,
    #[error("polytope is not integral: {0}")]
    NotIntegral(String),
    #[error("polytope is not reflexive")]
    NotReflexive,
    #[error("cone is not strictly convex")]
    NotStrictlyConvex,
    #[error("vector is not in the span of the lattice")]
    NotInSpan,
    #[error("no smooth Minkowski decomposition for facet {0}")]
    NoSmoothDecomposition(usize),
    #[error("invalid fan: {0}")]
    InvalidFan(String),
    #[error("divisor not nef on slab {0}")]
    NotNef(usize),
    #[error("divisor not Cartier on slab {0}")]
    NotCartier(usize),
    #[error("empty linear system on slab {0}")]
    EmptyLinearSystem(usize),
    #[error("divisor not basepoint free on slab {0}")]
    NotBasepointFree(usize),
    #[error("compatibility violated: {0}")]
    Compatibility(String),
    #[error("unmatched summand direction: {0}")]
    UnmatchedSummandDirection(String),
    #[error("unsupported configuration: {0}")]
    Unsupported(String),
    #[error("Euler formula mismatch: {0}")]
    FormulaMismatch(String),
    #[error("inconsistent invariants: {0}")]
    InconsistentInvariants(String),
    #[error("not rank one: {0}")]
    NotRankOne(String),
    #[error("baseline missing from the Γ system")]
    BaselineMissing,
    #[error("fast path inapplicable: {0}")]
    FastPathInapplicable(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("validation error: {0}")]
    Validation(String),
    #[error("I/O error: {0}")]
    Io(String),
}

impl Error {
    /// A short stable identifier used in machine-readable error output.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NotFullDimensional(_) => "not_full_dimensional",
            Error::OriginNotInterior => "origin_not_interior",
            Error::NotIntegral(_) => "not_integral",
            Error::NotReflexive => "not_reflexive",
            Error::NotStrictlyConvex => "not_strictly_convex",
            Error::NotInSpan => "not_in_span",
            Error::NoSmoothDecomposition(_) => "no_smooth_decomposition",
            Error::InvalidFan(_) => "invalid_fan",
            Error::NotNef(_) => "not_nef",
            Error::NotCartier(_) => "not_cartier",
            Error::EmptyLinearSystem(_) => "empty_linear_system",
            Error::NotBasepointFree(_) => "not_basepoint_free",
            Error::Compatibility(_) => "compatibility",
            Error::UnmatchedSummandDirection(_) => "unmatched_summand_direction",
            Error::Unsupported(_) => "unsupported",
            Error::FormulaMismatch(_) => "formula_mismatch",
            Error::InconsistentInvariants(_) => "inconsistent_invariants",
            Error::NotRankOne(_) => "not_rank_one",
            Error::BaselineMissing => "baseline_missing",
            Error::FastPathInapplicable(_) => "fast_path_inapplicable",
            Error::Parse { .. } => "parse",
            Error::Validation(_) => "validation",
            Error::Io(_) => "io",
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
