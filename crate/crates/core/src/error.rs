use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("maps do not compose to zero")]
    NotAComplex,
    #[error("form has non-real entries")]
    NotReal,
    #[error("form is not symmetric")]
    NotSymmetric,
    #[error("form is not Hermitian")]
    NotHermitian,

    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),
    #[error("element is not homogeneous: {0}")]
    MixedDegree(String),
    #[error("invalid Lefschetz class: {0}")]
    InvalidClass(String),
    #[error("class is not in the Kähler cone: {0}")]
    NotInCone(String),
    #[error("operation requires {0}")]
    Unsupported(String),
    #[error("inconsistent result: {0}")]
    Internal(String),

    #[error("element not contained in the Lie algebra")]
    NotInAlgebra,

    #[error("invalid reductive pair: {0}")]
    InvalidPair(String),
    #[error("invalid module: {0}")]
    InvalidModule(String),
    #[error("weight window too small: {0}")]
    InsufficientWindow(String),
    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("unknown module id `{0}`")]
    DanglingModule(String),

    #[error("unknown catalog entry `{0}`")]
    UnknownCatalog(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("file format: {0}")]
    Format(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error("{0}: {1}")]
    InFile(String, Box<Error>),
}
