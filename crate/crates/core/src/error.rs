use thiserror::Error;

/// Errors raised by the verification engine.
///
/// Check *failures* (an axiom that does not hold, an identity with a
/// counterexample) are not errors: they are recorded in reports. Errors are
/// reserved for malformed input and violated preconditions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("scalar is not real: {0}")]
    NotReal(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("not a comodule: {identity} fails at {witness:?}")]
    NotAComodule {
        identity: String,
        witness: Vec<usize>,
    },

    #[error("algebra is not semisimple (radical witness found)")]
    NotSemisimple,

    #[error(
        "center does not split over Q(zeta_{conductor}): minimal polynomial of degree {degree} \
         has irreducible factors of degree > 1{}",
        .hint.map(|h| format!(" (try conductor {h})")).unwrap_or_default()
    )]
    SplittingFailure {
        conductor: u32,
        degree: usize,
        hint: Option<u32>,
    },

    #[error("block precondition failed: {0}")]
    BlockPrecondition(String),

    #[error("structural error: {0}")]
    Structural(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("axiom {axiom} fails at basis indices {witness:?}")]
    AxiomFailure { axiom: String, witness: Vec<usize> },

    #[error("subalgebra {name} is invalid: {reason}")]
    SubalgebraValidation { name: String, reason: String },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("dim A = {sub} does not divide dim H = {total}")]
    Divisibility { sub: usize, total: usize },

    #[error("no free basis found after {attempts} attempts")]
    GreedyExhausted { attempts: usize },

    #[error("matrix is not Hermitian at ({row}, {col})")]
    NonHermitian { row: usize, col: usize },

    #[error("{map} does not descend to the quotient")]
    Descent { map: String },

    #[error("no positive intertwiner found within the search bound")]
    NoPositiveSolution,

    #[error("invalid group table: {0}")]
    InvalidGroupTable(String),

    #[error("unknown name: {0}")]
    UnknownName(String),

    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
