use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("line {line}: loop at vertex {v}")]
    Loop { line: usize, v: usize },

    #[error("line {line}: duplicate edge ({u}, {v})")]
    DuplicateEdge { line: usize, u: usize, v: usize },

    #[error("line {line}: vertex {v} out of range 1..={n}")]
    VertexOutOfRange { line: usize, v: usize, n: usize },

    #[error("vertex {v} out of range 1..={n}")]
    NoSuchVertex { v: usize, n: usize },

    #[error("edge {e} out of range 1..={m}")]
    NoSuchEdge { e: usize, m: usize },

    #[error("unknown catalog graph `{0}`")]
    UnknownGraph(String),

    #[error("graph is not regular")]
    NotRegular,

    #[error("edge sets over different edge spaces ({0} vs {1})")]
    EdgeSpaceMismatch(usize, usize),

    #[error("permutation degree mismatch ({0} vs {1})")]
    DegreeMismatch(usize, usize),

    #[error("not a bijection: {0}")]
    NotABijection(String),

    #[error("malformed permutation: {0}")]
    BadPermutation(String),

    #[error("class of size {0} (only classes of size <= 2 are searched)")]
    ClassTooLarge(usize),

    #[error("{what}: budget of {limit} exceeded")]
    Budget { what: &'static str, limit: u64 },

    #[error("{what}: n = {n} exceeds bound {bound}")]
    TooLarge { what: &'static str, n: usize, bound: usize },

    #[error("oracle result is truncated")]
    Truncated,
}

impl Error {
    /// True for the errors that mean "a search ran out of room", as opposed
    /// to bad input.
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::Budget { .. } | Error::TooLarge { .. } | Error::Truncated)
    }
}

pub type Result<T> = std::result::Result<T, Error>;
