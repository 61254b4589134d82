//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors produced while parsing the edge-list text format.
///
/// Every variant that refers to file content carries the 1-based line number.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: malformed line: {content:?}")]
    Malformed { line: usize, content: String },
    #[error("line {line}: vertex id {id} out of range [1, {n}]")]
    VertexOutOfRange { line: usize, id: i64, n: usize },
    #[error("line {line}: loop edge at vertex {v}")]
    LoopEdge { line: usize, v: usize },
    #[error("line {line}: duplicate edge {{{u}, {v}}}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("missing header line \"n m_edges\"")]
    MissingHeader,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("enumeration budget exceeded: needs ~{needed:.3e} evaluations, budget {budget:.3e}")]
    BudgetExceeded { needed: f64, budget: f64 },

    #[error(
        "phi polynomial degree out of reach: rho = {rho} gives N ~ {degree_estimate:.3e} \
         (supported: rho >= 0.05 and N <= {max_degree})"
    )]
    PhiDegreeOverflow {
        rho: f64,
        degree_estimate: f64,
        max_degree: u64,
    },

    #[error(
        "zero-free guarantee unavailable: n = {n} is below omega*m = {required:.1} \
         (run with allow_unguaranteed to proceed heuristically)"
    )]
    ZeroFreeUnavailable { n: usize, required: f64 },

    #[error(
        "strip verification failed for rho = {rho}: |{part} ln(1 + z w)| = {value:.6e} \
         exceeds {limit:.6e} at a sampled boundary point"
    )]
    StripViolation {
        rho: f64,
        part: &'static str,
        value: f64,
        limit: f64,
    },

    #[error(
        "root finder did not converge after {iterations} iterations \
         (worst residual {residual:.3e}, allowed {allowed:.3e})"
    )]
    RootsNotConverged {
        iterations: usize,
        residual: f64,
        allowed: f64,
    },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// True for failures of resource limits or iterative convergence, as
    /// opposed to invalid inputs.
    pub fn is_budget_or_convergence(&self) -> bool {
        matches!(
            self,
            Error::BudgetExceeded { .. }
                | Error::PhiDegreeOverflow { .. }
                | Error::RootsNotConverged { .. }
        )
    }
}
