use thiserror::Error;

/// Which super semistandard condition a filling violates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Condition {
    /// Rows weakly increase; equal neighbours in a row must be even.
    Row,
    /// Columns weakly increase; equal neighbours in a column must be odd.
    Column,
}

impl std::fmt::Display for Condition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Condition::Row => f.write_str("(i) row condition"),
            Condition::Column => f.write_str("(ii) column condition"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate letter `{0}` in alphabet")]
    DuplicateLetter(String),
    #[error("alphabet has {letters} letters but {parities} parities")]
    LengthMismatch { letters: usize, parities: usize },
    #[error("parity must be 0 or 1, got {0}")]
    InvalidParity(i64),
    #[error("unknown letter `{0}`")]
    UnknownLetter(String),
    #[error("letter index {0} is outside the alphabet")]
    ForeignLetter(usize),
    #[error("operands are over different alphabets")]
    AlphabetMismatch,

    #[error("parts are not weakly decreasing positive integers: {0:?}")]
    InvalidPartition(Vec<usize>),
    #[error("inner shape {inner:?} is not contained in outer shape {outer:?}")]
    NotContained { inner: Vec<usize>, outer: Vec<usize> },
    #[error("row lengths are not weakly decreasing at row {row}")]
    RowLengths { row: usize },
    #[error("declared shape {declared:?} does not match rows {actual:?}")]
    ShapeMismatch { declared: Vec<usize>, actual: Vec<usize> },
    #[error("cell ({row},{col}) violates {condition}")]
    Violation { row: usize, col: usize, condition: Condition },
    #[error("operation requires a straight shape")]
    SkewShape,

    #[error("row {0} does not exist or is empty")]
    NoSuchRow(usize),
    #[error("column {0} does not exist or is empty")]
    NoSuchColumn(usize),
    #[error("last cell of row {0} is not a corner")]
    RowNotCorner(usize),
    #[error("last cell of column {0} is not a corner")]
    ColumnNotCorner(usize),
    #[error("letters below the threshold do not fill a straight shape")]
    NotStraightSplit,

    #[error("{what} of size {size} exceeds the bound {bound}")]
    BoundExceeded { what: &'static str, size: usize, bound: usize },

    #[error("array column {index} is out of order")]
    Unsorted { index: usize },
    #[error("array column {index} repeats an odd pair")]
    RepeatedOddPair { index: usize },
    #[error("top and bottom rows have different lengths ({top} vs {bottom})")]
    RowLengthMismatch { top: usize, bottom: usize },
    #[error("tableaux have different shapes: {left:?} vs {right:?}")]
    DifferentShapes { left: Vec<usize>, right: Vec<usize> },
    #[error("hypothesis violated: {0}")]
    Hypothesis(&'static str),

    #[error("invalid input: {0}")]
    Parse(String),
}

impl Error {
    /// Stable identifier used by the CLI when reporting domain errors.
    pub fn name(&self) -> &'static str {
        match self {
            Error::DuplicateLetter(_) => "DuplicateLetter",
            Error::LengthMismatch { .. } => "LengthMismatch",
            Error::InvalidParity(_) => "InvalidParity",
            Error::UnknownLetter(_) => "UnknownLetter",
            Error::ForeignLetter(_) => "ForeignLetter",
            Error::AlphabetMismatch => "AlphabetMismatch",
            Error::InvalidPartition(_) => "InvalidPartition",
            Error::NotContained { .. } => "NotContained",
            Error::RowLengths { .. } => "RowLengths",
            Error::ShapeMismatch { .. } => "ShapeMismatch",
            Error::Violation { condition: Condition::Row, .. } => "RowConditionViolation",
            Error::Violation { condition: Condition::Column, .. } => "ColumnConditionViolation",
            Error::SkewShape => "SkewShape",
            Error::NoSuchRow(_) => "NoSuchRow",
            Error::NoSuchColumn(_) => "NoSuchColumn",
            Error::RowNotCorner(_) => "RowNotCorner",
            Error::ColumnNotCorner(_) => "ColumnNotCorner",
            Error::NotStraightSplit => "NotStraightSplit",
            Error::BoundExceeded { .. } => "BoundExceeded",
            Error::Unsorted { .. } => "Unsorted",
            Error::RepeatedOddPair { .. } => "RepeatedOddPair",
            Error::RowLengthMismatch { .. } => "RowLengthMismatch",
            Error::DifferentShapes { .. } => "DifferentShapes",
            Error::Hypothesis(_) => "HypothesisViolation",
            Error::Parse(_) => "ParseError",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
