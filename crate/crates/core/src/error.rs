use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("group mismatch: {0} vs {1}")]
    GroupMismatch(String, String),
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("matrix is not square ({0}x{1})")]
    NotSquare(usize, usize),
    #[error("matrix dimension {dim} exceeds the cap {cap}")]
    DimensionCap { dim: usize, cap: usize },
    #[error("operation needs a finite group; use principal comparison for infinite groups")]
    InfiniteGroup,
    #[error("operation needs the Laurent ring Z[t^±1]")]
    NotLaurent,
    #[error("integer overflow")]
    Overflow,
    #[error("parse error: {0}")]
    Parse(String),
}

/// Parse failure with a 1-based line number.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {msg}")]
pub struct ParseError {
    pub line: usize,
    pub msg: String,
}

impl ParseError {
    pub fn new(line: usize, msg: impl Into<String>) -> Self {
        Self { line, msg: msg.into() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuandleError {
    #[error("quandle axioms violated: {0}")]
    Axioms(String),
    #[error("invalid group table: {0}")]
    InvalidGroup(String),
    #[error("element {0} is out of range")]
    OutOfRange(usize),
    #[error("map is not a quandle homomorphism at ({0}, {1})")]
    NotHomomorphism(usize, usize),
    #[error("missing inverse of f1 at ({0}, {1})")]
    MissingInverse(usize, usize),
    #[error("not an Alexander pair: {0}")]
    NotAlexanderPair(String),
    #[error("pair entry at ({0}, {1}) is not an integer scalar")]
    NonScalar(usize, usize),
    #[error("table shape mismatch: {0}")]
    Shape(String),
    #[error(transparent)]
    Ring(#[from] RingError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("crossing {crossing}: {msg}")]
    Crossing { crossing: usize, msg: String },
    #[error("diagram has no crossings")]
    Empty,
    #[error(transparent)]
    Parse(#[from] ParseError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CocycleError {
    #[error("not a 2-cocycle: {0}")]
    NotCocycle(String),
    #[error("modulus must be at least 2, got {0}")]
    Modulus(i64),
    #[error("coefficient group must be cyclic for search")]
    NotCyclic,
    #[error("coloring is invalid at crossing {0}")]
    InvalidColoring(usize),
    #[error("table shape mismatch: {0}")]
    Shape(String),
    #[error(transparent)]
    Ring(#[from] RingError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TwistedError {
    #[error("generator images do not define a homomorphism: relator {index} `{relator}` gives {lhs} vs {rhs}")]
    InvalidHom { index: usize, relator: String, lhs: usize, rhs: usize },
    #[error("expected {expected} generator images, got {got}")]
    ImageCount { expected: usize, got: usize },
    #[error("generator index {0} out of range")]
    Generator(usize),
    #[error("move index out of range: {0}")]
    MoveIndex(String),
    #[error(transparent)]
    Quandle(#[from] QuandleError),
    #[error(transparent)]
    Cocycle(#[from] CocycleError),
    #[error(transparent)]
    Ring(#[from] RingError),
}
