use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("graph is too small: {0}")]
    TooSmall(String),

    #[error("vertex {0} is out of range")]
    VertexOutOfRange(usize),

    #[error("vertices {0} and {1} are in different components")]
    Unreachable(usize, usize),

    #[error("weighting has {got} weights but the graph has {expected} edges")]
    WeightCountMismatch { expected: usize, got: usize },

    #[error("weight {weight} on edge {edge} is outside 1..={k}")]
    WeightOutOfRange { edge: usize, weight: u32, k: u32 },

    #[error("input weighting is not proper ({0} conflicting edges)")]
    ImproperInput(usize),

    /// No proper weighting with at most `k_max` weights exists. On a connected graph with at least
    /// three vertices this contradicts the known upper bound of 5.
    #[error("no proper weighting with k <= {k_max}; possible counterexample to the 5-weight bound")]
    NotFoundWithinCap { k_max: u32 },

    #[error("search refused: {edges} edges exceeds the guard of {limit} for k={k} (use force to override)")]
    SearchTooLarge { edges: usize, k: u32, limit: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A construction produced an improper weighting, or a repair step failed to make progress.
    /// Either outcome contradicts the argument the construction is based on.
    #[error("construction failed: {0}")]
    ConstructionFailed(String),

    #[error("inconsistent end-edge behavior: {0}")]
    Inconsistent(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid family spec: {0}")]
    Family(String),
}

pub type Result<T> = std::result::Result<T, Error>;
