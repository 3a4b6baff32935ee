use thiserror::Error;

use crate::partition::Cell;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts are not weakly decreasing: {0:?}")]
    NotWeaklyDecreasing(Vec<i64>),
    #[error("partition has a negative part: {0:?}")]
    NegativePart(Vec<i64>),
    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },
    #[error("inner partition {inner} is not contained in {outer}")]
    NotContained { outer: String, inner: String },
    #[error("cell {0} lies outside the shape")]
    CellOutsideShape(Cell),
    #[error("cell {0} is not in the diagram")]
    CellNotInDiagram(Cell),
    #[error("elementary excitation is not applicable at {0}")]
    ExcitationNotApplicable(Cell),

    #[error("polynomial division leaves a nonzero remainder")]
    InexactDivision,
    #[error("gcd of two zero polynomials is undefined")]
    BothZero,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("reduced denominator vanishes at q = 1")]
    PoleAtOne,
    #[error("denominator constant term {0} is not a unit")]
    NonUnitConstantTerm(String),

    #[error("expected an integer result, got {0}")]
    NonIntegerResult(String),
    #[error("q-integer [{0}]_q with negative argument")]
    NegativeQInt(i64),
    #[error("n = {n} is below the length {length} of the outer partition")]
    BelowLength { n: i64, length: usize },
    #[error("two computation routes disagree: {0}")]
    PathMismatch(String),

    #[error("shape has {cells} cells, above the oracle limit {limit}")]
    SizeLimitExceeded { cells: usize, limit: usize },

    #[error("invalid arguments: {0}")]
    InvalidConfig(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
