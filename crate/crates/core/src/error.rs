use thiserror::Error;

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("expected {expected} edges, found {found}")]
    EdgeCount { expected: usize, found: usize },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Error, PartialEq)]
pub enum ParamError {
    #[error("probability {0} outside [0, 1]")]
    Probability(f64),
    #[error("{family} requires {requirement}, got {got}")]
    FamilySize {
        family: &'static str,
        requirement: &'static str,
        got: usize,
    },
    #[error("decrement list must be nonempty")]
    EmptyDecrements,
    #[error("decrement {0} is not a positive finite number")]
    BadDecrement(f64),
    #[error("approximation parameter r = {0} must be at least 3")]
    RBelowThree(f64),
    #[error("target ratio {target} is below the smallest achievable ratio {min}")]
    RatioTooSmall { target: f64, min: f64 },
    #[error("need at least 3 distinct sizes to fit an exponent, got {0}")]
    TooFewPoints(usize),
    #[error("node counts must be positive")]
    NonPositiveNodes,
}
