use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),
    #[error("unknown diagram preset `{0}` (expected A1..A8, D4..D8, E6, E7, E8)")]
    UnknownPreset(String),
    #[error("vector has length {found}, expected {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("{0:?} is not a root")]
    NotARoot(Vec<i32>),
    #[error("letter {0} is not a vertex of the diagram")]
    InvalidLetter(i64),
    #[error("word {0:?} is not reduced")]
    NonReducedWord(Vec<usize>),
    #[error("enumeration exceeds the cap of {cap} items")]
    CapExceeded { cap: usize },
    #[error("malformed permutation: {0}")]
    MalformedPermutation(String),
    #[error("({0},{1}) is not a Bruhat inversion")]
    NotBruhatInversion(usize, usize),
    #[error("element is not c-sortable for the given Coxeter element")]
    NotSortable,
    #[error("invalid orientation: {0}")]
    InvalidOrientation(String),
    #[error("the zero representation has no endomorphism ring to test")]
    ZeroRepresentation,
    #[error("representation error: {0}")]
    InvalidRepresentation(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}
