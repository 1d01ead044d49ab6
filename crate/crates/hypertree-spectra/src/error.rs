use thiserror::Error;

#[derive(Error, Debug)]
pub enum Error {
    #[error("invalid hypergraph: {0}")]
    InvalidHypergraph(String),
    #[error("unknown vertex {0}")]
    UnknownVertex(usize),
    #[error("unknown edge {0:?}")]
    UnknownEdge(Vec<usize>),
    #[error("not a hypertree")]
    NotHypertree,
    #[error("input must be connected")]
    Disconnected,
    #[error("invalid generator parameters: {0}")]
    BadGenerator(String),
    #[error("polynomial is not square-free")]
    NotSquareFree,
    #[error("repeated interpolation abscissa {0}")]
    RepeatedAbscissa(String),
    #[error("cannot parse number: {0}")]
    BadNumber(String),
    #[error("edge-count guard exceeded: {0} edges")]
    EdgeGuard(usize),
    #[error("degree guard exceeded: characteristic polynomial degree {degree} > guard {guard}")]
    DegreeGuard { degree: u64, guard: u64 },
    #[error("too many bad sample points ({bad} of {attempts} attempts)")]
    TooManyBadPoints { bad: usize, attempts: usize },
    #[error("timeout after {0} ms")]
    Timeout(u64),
    #[error("power iteration did not converge after {iters} iterations (bounds {lo}..{hi})")]
    NoConvergence { iters: usize, lo: f64, hi: f64 },
    #[error("denominator polynomial vanishes near the spectral radius; choose another vertex")]
    NearZeroDenominator,
    #[error("no square-free factor contains the given root interval")]
    NoFactorContainsRoot,
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("json: {0}")]
    Json(String),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
