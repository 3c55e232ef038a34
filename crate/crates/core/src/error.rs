use thiserror::Error;

/// Errors raised by the library.
///
/// Axiom failures of a ring or structure map are not errors: they are reported
/// through [`crate::ring::ValidationReport`]. Errors here are structural
/// problems, refused preconditions and I/O.
#[derive(Debug, Error)]
pub enum Error {
    #[error("structural error: {0}")]
    Structural(String),

    #[error("context mismatch: operands belong to different rings")]
    ContextMismatch,

    #[error("degree {degree} exceeds the cap of {cap}")]
    DegreeCap { degree: usize, cap: usize },

    #[error("polynomial is not monic of degree >= 1")]
    NotMonic,

    #[error("enumeration of {size} elements refused: cap is {cap}")]
    EnumerationCap { size: String, cap: u128 },

    #[error("precondition refused: {0}")]
    Precondition(String),

    #[error("element is not in the twisted centralizer: fails for basis element e_{basis}")]
    NotInCentralizer { basis: usize },

    #[error("invalid structure map: {0}")]
    InvalidMap(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),

    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
