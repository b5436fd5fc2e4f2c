use thiserror::Error;

/// Which of the two decision matrices an error refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatrixKind {
    Realized,
    Accurate,
    Citations,
}

impl std::fmt::Display for MatrixKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            MatrixKind::Realized => "realized",
            MatrixKind::Accurate => "accurate",
            MatrixKind::Citations => "citations",
        })
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch in {what}: expected {expected}, found {found}")]
    DimensionMismatch {
        what: String,
        expected: usize,
        found: usize,
    },

    #[error("{matrix} matrix entry at row {row}, column {col} is {value}; expected 0 or 1")]
    NonBinaryEntry {
        matrix: MatrixKind,
        row: usize,
        col: usize,
        value: i64,
    },

    #[error("citing paper `{paper}` references author index {index}, but only {n_authors} authors exist")]
    UnknownAuthor {
        paper: String,
        index: usize,
        n_authors: usize,
    },

    #[error("citing paper `{paper}` names unknown author `{author}`")]
    UnknownAuthorId { paper: String, author: String },

    #[error("author `{0}` owns no citing papers")]
    AuthorWithoutPapers(String),

    #[error("duplicate {kind} id `{id}`")]
    DuplicateId { kind: &'static str, id: String },

    #[error("citation system must contain at least one citing and one cited paper")]
    EmptySystem,

    #[error("{kind} index {index} out of range (len {len})")]
    IndexOutOfRange {
        kind: &'static str,
        index: usize,
        len: usize,
    },

    #[error("invalid generator config: {0}")]
    InvalidConfig(String),

    #[error("at least 2 replicates are required, got {0}")]
    InsufficientReplicates(usize),

    #[error("similarity matrix is not symmetric at ({row}, {col}): {upper} vs {lower}")]
    NonSymmetric {
        row: usize,
        col: usize,
        upper: f64,
        lower: f64,
    },

    #[error("similarity score at ({row}, {col}) is {value}; expected a value in [0, 1]")]
    SimilarityOutOfRange { row: usize, col: usize, value: f64 },

    #[error("most-similar set size must be at least 1")]
    InvalidK,

    #[error("line {line}: malformed row: {reason}")]
    MalformedRow { line: usize, reason: String },

    #[error("line {line}: empty cited-work key")]
    EmptyKey { line: usize },

    #[error("line {line}: empty knowledge-flow text")]
    EmptyReason { line: usize },

    #[error("field cannot be written to a justification table: {0:?}")]
    Unrepresentable(String),

    #[error("unknown fixture `{0}` (expected table1, table2 or table3)")]
    UnknownFixture(String),

    #[error("unsupported schema version `{0}` (supported: \"1\")")]
    SchemaVersionUnsupported(String),

    #[error("{source_name}: parse error at {position}: {message}")]
    Parse {
        source_name: String,
        position: String,
        message: String,
    },

    #[error("{source_name}: {inner}")]
    Located {
        source_name: String,
        #[source]
        inner: Box<Error>,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn located(self, source_name: impl Into<String>) -> Self {
        Error::Located {
            source_name: source_name.into(),
            inner: Box::new(self),
        }
    }

    /// The underlying error, with any source-location wrapper removed.
    pub fn root(&self) -> &Error {
        match self {
            Error::Located { inner, .. } => inner.root(),
            other => other,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
