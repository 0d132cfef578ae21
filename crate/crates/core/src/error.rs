use thiserror::Error;

/// Everything that can go wrong while building or transforming words and
/// their invariants.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate letter `{0}`")]
    DuplicateLetter(String),
    #[error("letter `{0}` is in two orbits")]
    LetterInTwoOrbits(String),
    #[error("letter `{0}` is in no orbit")]
    LetterWithoutOrbit(String),
    #[error("undeclared letter `{0}`")]
    UndeclaredLetter(String),
    #[error("line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("not a nanoword: {0}")]
    NotGauss(String),
    #[error("{0} needs diagonal homotopy data")]
    NotDiagonal(&'static str),
    #[error("{0} needs a fixed-point-free involution")]
    FixedPoint(&'static str),
    #[error("map is not equivariant at `{0}`")]
    NotEquivariant(String),
    #[error("move `{0}` does not apply")]
    MoveMismatch(String),
    #[error("element does not belong to this orbit table")]
    TableMismatch,
    #[error("beta is not closed under the involution: `{0}`")]
    BadBeta(String),
    #[error("{0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn parse_err(line: usize, col: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, col, msg: msg.into() }
}
