use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("graph is not tightly connected ({components} tight components)")]
    NotTightlyConnected { components: usize },

    #[error("input too large: size {size} exceeds the guard of {limit}")]
    TooLarge { size: usize, limit: usize },

    #[error("no code found after {attempts} attempts (best attempt had {best_violations} violating triples)")]
    RetriesExhausted {
        attempts: usize,
        best_violations: u64,
    },

    #[error("code is not verified: triple {triple:?} has fewer than r trifferent coordinates")]
    UnverifiedCode { triple: [usize; 3] },

    #[error("red tight component is not tripartite: {edges:?}")]
    NotTripartite { edges: Vec<crate::Triple> },

    #[error("red subgraph is not iterated tripartite")]
    NotIteratedTripartite,

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }
}
