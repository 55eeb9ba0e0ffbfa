use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("graph is disconnected: vertices {0} and {1} are mutually unreachable")]
    DisconnectedGraph(usize, usize),

    #[error("alpha = {0} is outside [0, 1]")]
    AlphaOutOfRange(f64),

    #[error("edge ({u}, {v}) is invalid for a graph on {n} vertices")]
    InvalidEdge { u: usize, v: usize, n: usize },

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("matrix is not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("Jacobi iteration did not converge within {sweeps} sweeps (off-diagonal {off_norm:e})")]
    NoConvergence { sweeps: usize, off_norm: f64 },

    #[error("quotient spectrum has an eigenvalue with imaginary part {imag:e} beyond tolerance")]
    ComplexSpectrum { imag: f64 },

    #[error("component {index} is not regular")]
    NotRegular { index: usize },

    #[error("invalid joined-union plan: {0}")]
    InvalidPlan(String),

    #[error("invalid group spec: {0}")]
    InvalidSpec(String),

    #[error("unknown group family `{0}`")]
    UnknownFamily(String),

    #[error("power graph of Z_{n} is complete; no joined-union decomposition")]
    DegenerateDecomposition { n: u64 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}
