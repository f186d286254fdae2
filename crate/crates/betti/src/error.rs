use crate::decomposition::Decomposition;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Every domain error the library can report.
///
/// Variant names are stable: the CLI surfaces them verbatim in diagnostics.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("degree sequence must be non-empty")]
    EmptyDegreeSequence,
    #[error("degrees must be strictly increasing: {0} is not less than {1}")]
    NotStrictlyIncreasing(i64, i64),
    #[error("Betti table entries must be strictly positive, got {0}")]
    NonPositiveEntry(String),
    #[error("scaling factor must be strictly positive, got {0}")]
    NonPositiveScalar(String),
    #[error("the zero polynomial has no vanishing order")]
    ZeroPolynomial,
    #[error("series is not the Hilbert series of a pure module: {0}")]
    NotPure(String),
    #[error("residual series still nonzero after {0} steps")]
    NoTermination(usize),
    #[error("ring dimension must be non-negative, got {0}")]
    NegativeDimension(i64),
    #[error("table is not pure: some column has zero or multiple entries")]
    NotPureTable,
    #[error("first degree must be 0, got {0}")]
    NonzeroFirstDegree(i64),
    #[error("parameter {0} must be >= 1")]
    NonPositiveParameter(&'static str),
    #[error("table is not decomposable by the greedy strand algorithm: {reason}")]
    NotDecomposable {
        reason: String,
        partial: Box<Decomposition>,
    },
    #[error("operation requires a monomial ideal")]
    NotMonomial,
    #[error("polynomial terms do not share a common total degree")]
    NotHomogeneous,
    #[error("degree bound {0} is too small: nonzero Betti number in the top computed degree")]
    DegreeBoundTooSmall(i64),
    #[error("syntax error at position {0}: {1}")]
    SyntaxError(usize, String),
    #[error("polynomial is not homogeneous")]
    InhomogeneousPolynomial,
    #[error("unknown variable at position {0}: {1}")]
    UnknownVariable(usize, String),
    #[error("generator must be a nonzero polynomial")]
    ZeroGenerator,
    #[error("variable count mismatch: expected {expected}, got {got}")]
    VariableCountMismatch { expected: usize, got: usize },
    #[error("internal consistency failure: {0}")]
    InternalInconsistency(String),
    #[error("i/o failure: {0}")]
    Io(String),
}

impl Error {
    /// Stable machine-readable name of the error variant.
    pub fn name(&self) -> &'static str {
        match self {
            Error::EmptyDegreeSequence => "EmptyDegreeSequence",
            Error::NotStrictlyIncreasing(..) => "NotStrictlyIncreasing",
            Error::NonPositiveEntry(..) => "NonPositiveEntry",
            Error::NonPositiveScalar(..) => "NonPositiveScalar",
            Error::ZeroPolynomial => "ZeroPolynomial",
            Error::NotPure(..) => "NotPure",
            Error::NoTermination(..) => "NoTermination",
            Error::NegativeDimension(..) => "NegativeDimension",
            Error::NotPureTable => "NotPureTable",
            Error::NonzeroFirstDegree(..) => "NonzeroFirstDegree",
            Error::NonPositiveParameter(..) => "NonPositiveParameter",
            Error::NotDecomposable { .. } => "NotDecomposable",
            Error::NotMonomial => "NotMonomial",
            Error::NotHomogeneous => "NotHomogeneous",
            Error::DegreeBoundTooSmall(..) => "DegreeBoundTooSmall",
            Error::SyntaxError(..) => "SyntaxError",
            Error::InhomogeneousPolynomial => "InhomogeneousPolynomial",
            Error::UnknownVariable(..) => "UnknownVariable",
            Error::ZeroGenerator => "ZeroGenerator",
            Error::VariableCountMismatch { .. } => "VariableCountMismatch",
            Error::InternalInconsistency(..) => "InternalInconsistency",
            Error::Io(..) => "Io",
        }
    }
}
