use thiserror::Error;

/// Everything that can go wrong across the library surface.
#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0} is not allowed")]
    SelfLoop(usize),
    #[error("edge {0}-{1} is not an edge of the graph")]
    NotAnEdge(usize, usize),
    #[error("fibonacci index {0} out of range (supported: 1..=90)")]
    FibOutOfRange(u64),
    #[error(
        "connected component has {size} vertices, exceeding the exhaustive-scan guard of {guard}"
    )]
    ComponentTooLarge { size: usize, guard: usize },
    #[error("graph contains a cycle but a forest is required")]
    NotAForest,
    #[error("invalid matching constraints: {0}")]
    BadConstraints(String),
    #[error("blocks do not partition the vertex set: {0}")]
    NotAPartition(String),
    #[error("block {{{0}}} is not a module: vertex {1} sees only part of it")]
    NotAModule(String, usize),
    #[error("block {{{0}}} is not a clique")]
    NotAClique(String),
    #[error("modular partition must contain at least two modules")]
    TooFewModules,
    #[error("invalid feedback edge set: {0}")]
    BadFeedbackSet(String),
    #[error("{0:?} does not support solution kind {1:?}")]
    UnsupportedKind(crate::verify::Method, crate::enumerate::SolutionKind),
    #[error("cut is not a solution of the kernel instance: {0}")]
    NotAKernelCut(String),
    #[error("{method:?} requires a {what} certificate")]
    MissingCertificate {
        method: crate::verify::Method,
        what: &'static str,
    },
    #[error("family {family} requires parameter --{name}")]
    MissingParameter { family: String, name: &'static str },
    #[error("bad parameter for family {family}: {msg}")]
    BadParameter { family: String, msg: String },
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
