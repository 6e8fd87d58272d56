use alloc::string::String;

/// Errors reported by the analysis routines.
///
/// Variable and element indices in messages are 0-based, as used by the API.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("expected {expected} coordinates, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("variable index {index} out of range for {nvars} variables")]
    VariableOutOfRange { index: usize, nvars: usize },
    #[error("kappa is smaller than the degree in variable {var}")]
    KappaTooSmall { var: usize },
    #[error("window [alpha, beta] is invalid: {0}")]
    InvalidWindow(String),
    #[error("direction component {index} is not strictly positive")]
    NonPositiveDirection { index: usize },
    #[error("the zero polynomial is not allowed here")]
    ZeroPolynomial,
    #[error("polynomial is not multi-affine")]
    NotMultiAffine,
    #[error("polynomial has non-real coefficients")]
    NonRealCoefficients,
    #[error("set is empty")]
    EmptySet,
    #[error("point {0} is not a 0/1 vector")]
    NonBinaryPoint(usize),
    #[error("both polynomials are zero")]
    BothZero,
    #[error("polynomial is not real-rooted")]
    NotRealRooted,
    #[error("matrix is not Hermitian")]
    NotHermitian,
    #[error("matrix is neither Hermitian nor skew-Hermitian")]
    NotHermitianOrSkew,
    #[error("pencil matrix {0} is not positive semidefinite")]
    NotPositiveSemidefinite(usize),
    #[error("matrix dimensions do not agree: {0}")]
    ShapeMismatch(String),
    #[error("{what} is {found}, limit is {limit}")]
    SizeGuard { what: &'static str, limit: usize, found: usize },
    #[error("edge {0} has a negative weight")]
    NegativeWeight(usize),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("row count {rows} exceeds column count {cols}")]
    TooManyRows { rows: usize, cols: usize },
    #[error("invalid matroid: {0}")]
    InvalidMatroid(String),
    #[error("expected a rank {expected} matroid, found rank {found}")]
    WrongRank { expected: usize, found: usize },
    #[error("elements must be distinct")]
    SameElement,
    #[error("no candidate alpha preserves the support")]
    RealifyExhausted,
    #[error("{0}")]
    Precondition(String),
}

pub type Result<T> = core::result::Result<T, Error>;
