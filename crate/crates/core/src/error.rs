use thiserror::Error;

use crate::liealg::Subspace;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("malformed structure constants: {0}")]
    InvalidStructure(String),

    #[error("subspace is not a subalgebra")]
    NotASubalgebra,

    #[error("subspace is not an ideal")]
    NotAnIdeal,

    #[error("subspace is not nilpotent (lower central series stabilizes at dimension {stable_dim})")]
    NotNilpotent { stable_dim: usize },

    #[error("subspace is not contained in {0}")]
    NotContained(&'static str),

    #[error("filtration condition violated: [F({i}), F({j})] is not contained in F({})", i + j)]
    FiltrationViolation { i: usize, j: usize },

    #[error("flag is not descending at position {index}")]
    FlagNotDescending { index: usize },

    #[error("flags do not start from the same space")]
    FlagTopMismatch,

    #[error("basis is not weakly adapted to the filtration at level {level}")]
    BasisNotAdapted { level: usize },

    #[error("bracket of the derivation with generator {generator} leaves m")]
    BracketLeavesM { generator: usize },

    #[error("weight vector has a zero entry at position {index}")]
    NonpositiveWeight { index: usize },

    #[error("denumerant parts must be positive")]
    NonpositivePart,

    #[error("p does not act faithfully on m; kernel has dimension {}", kernel.dim())]
    PNotFaithful { kernel: Subspace },

    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(String),

    #[error("representations belong to different algebras: {0} vs {1}")]
    IncompatibleAlgebras(String, String),

    #[error("inconsistent dimensions: {0}")]
    InconsistentDims(String),

    #[error("not reductive: {0}")]
    NotReductive(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
