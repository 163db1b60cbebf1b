use thiserror::Error;

/// Failure modes shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("gamma pole: argument {0} is a nonpositive integer")]
    Pole(String),
    #[error("confluent hypergeometric parameter c = {0} is not admissible")]
    CDomain(f64),
    #[error("argument out of domain: {0}")]
    Domain(String),
    #[error("{what} did not converge (error estimate {estimate:e})")]
    NonConvergence { what: &'static str, estimate: f64 },
    #[error("index {index} exceeds the closed-form limit {limit}")]
    IndexTooLarge { index: usize, limit: usize },
    #[error("x = {x} is outside the {regime} asymptotic regime")]
    Regime { regime: &'static str, x: f64 },
    #[error("evaluation point {x} is closer to the origin than the excision radius {delta}")]
    SingularityAtBoundary { x: f64, delta: f64 },
    #[error("Newton refinement stalled at node {index}")]
    ConvergenceFailure { index: usize },
    #[error("alpha = {0} is too close to an integer")]
    AlphaNearInteger(f64),
    #[error("evaluation point {x} collides with quadrature node {node}")]
    NodeCollision { x: f64, node: f64 },
    #[error("unknown relation id `{0}`")]
    UnknownRelation(String),
    #[error("parameter schema violation: {0}")]
    ParamSchema(String),
    #[error("kernel expansion evaluated on the diagonal t = x = {0}")]
    Diagonal(f64),
    #[error("linear system is singular")]
    SingularSystem,
    #[error("quadrature failure: {0}")]
    QuadratureFailure(String),
    #[error("i/o: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Io(e.to_string())
    }
}
