use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("invalid rational `{0}`")]
    Rational(String),
    #[error("{context}: {message}")]
    Json { context: String, message: String },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArrangementError {
    #[error("line coefficients are all zero")]
    ZeroLine,
    #[error("point coordinates are all zero")]
    ZeroPoint,
    #[error("degenerate pair: the two lines coincide")]
    DegeneratePair,
    #[error("duplicate line: L{first} and L{second} are the same line")]
    DuplicateLine { first: usize, second: usize },
    #[error("an arrangement needs at least 2 lines, got {0}")]
    TooFewLines(usize),
    #[error("line index {index} out of range (arrangement has {len} lines)")]
    InvalidIndex { index: usize, len: usize },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LocalSystemError {
    #[error("imaginary parts of the classes sum to {0}, expected 0")]
    ImaginarySum(String),
    #[error("real parts of the classes sum to {0}, expected an integer")]
    RealSumNotIntegral(String),
    #[error("length mismatch: expected {expected} entries, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("residues sum to {0}, expected 0")]
    NonzeroSum(String),
    #[error("base line {index} out of range ({len} lines)")]
    InvalidBase { index: usize, len: usize },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AdmissibilityError {
    #[error(transparent)]
    Arrangement(#[from] ArrangementError),
    #[error(transparent)]
    LocalSystem(#[from] LocalSystemError),
    #[error("lines {0:?} do not cover every point of multiplicity at least 3")]
    NotACover(Vec<usize>),
    #[error("cover has the wrong size: expected {expected}, got {got}")]
    CoverSize { expected: usize, got: usize },
    #[error("cover lines {0:?} are not concurrent")]
    NotConcurrent(Vec<usize>),
    #[error("residue vector has real parts outside [0,1) away from the base line")]
    NotNormalized,
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}
