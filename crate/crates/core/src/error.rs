use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("size must be at least {min}, got {got}")]
    InvalidSize { min: usize, got: usize },

    #[error("division leaves a nonzero remainder")]
    NonExactDivision,

    #[error("vertex {vertex} out of range for {count} vertices")]
    InvalidVertex { vertex: usize, count: usize },

    #[error("cannot contract vertex {0} with itself")]
    SelfContract(usize),

    #[error("edge {edge} out of range for {count} edges")]
    InvalidEdge { edge: usize, count: usize },

    #[error("edges do not form a tree: {0}")]
    InvalidTree(String),

    #[error("graph is not outerplanar: {0}")]
    NotOuterplanar(String),

    #[error("graph is not biconnected: {0}")]
    NotBiconnected(String),

    #[error("phi-string has no spokes")]
    NoSpokes,

    #[error("input too large for exhaustive computation: {0}")]
    TooLarge(String),
}

impl Error {
    /// Stable machine-readable code used on the command line.
    pub fn code(&self) -> &'static str {
        match self {
            Error::InvalidSize { .. } => "INVALID_SIZE",
            Error::NonExactDivision => "NON_EXACT_DIVISION",
            Error::InvalidVertex { .. } => "INVALID_VERTEX",
            Error::SelfContract(_) => "SELF_CONTRACT",
            Error::InvalidEdge { .. } => "INVALID_EDGE",
            Error::InvalidTree(_) => "INVALID_TREE",
            Error::NotOuterplanar(_) => "NOT_OUTERPLANAR",
            Error::NotBiconnected(_) => "NOT_BICONNECTED",
            Error::NoSpokes => "NO_SPOKES",
            Error::TooLarge(_) => "TOO_LARGE",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
