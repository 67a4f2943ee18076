use thiserror::Error;

/// Errors shared across the crate.
///
/// `Degenerate*` variants signal violations of the general-position contract
/// (no three collinear points, no four cocircular points). Operations detect
/// these at the API boundary instead of perturbing silently; the generators
/// are the only place where perturbation happens, explicitly.
#[derive(Debug, Error)]
pub enum Error {
    #[error("degenerate input: collinear points {0}, {1}, {2}")]
    DegenerateCollinear(usize, usize, usize),

    #[error("degenerate input: point {3} lies exactly on the circle through {0}, {1}, {2}")]
    DegenerateCocircular(usize, usize, usize, usize),

    #[error("degenerate input: duplicate point at indices {0} and {1}")]
    DuplicatePoint(usize, usize),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("cap exceeded: {0}")]
    CapExceeded(String),

    #[error("edge ({0}, {1}) is a boundary edge")]
    BoundaryEdge(usize, usize),

    #[error("quadrilateral around edge ({0}, {1}) is not convex")]
    NonConvexQuad(usize, usize),

    #[error("edge ({0}, {1}) is a Delaunay edge; its hull is undefined")]
    EdgeIsDelaunay(usize, usize),

    #[error("numerical non-convergence: {0}")]
    NonConvergence(String),

    #[error("generator audit failed after {0} retries: {1}")]
    AuditFailed(usize, String),

    #[error("internal consistency error: {0}")]
    InternalConsistency(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}
