use thiserror::Error;

use crate::recognition::ForbiddenWitness;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("{n} vertices exceeds the cap of {max}")]
    TooManyVertices { n: usize, max: usize },
    #[error("{n} vertices exceeds the limit of {max} for this operation")]
    ScaleExceeded { n: usize, max: usize },
    #[error("graph is not in the class: {0}")]
    NotInClass(ForbiddenWitness),
    #[error("maximum degree {delta} exceeds 2*omega - 3 for omega = {omega}")]
    BoundViolated { delta: usize, omega: usize },
    #[error("vertex {vertex} has no color")]
    PartialColoring { vertex: usize },
    #[error("coloring covers {len} vertices but the graph has {n}")]
    ColoringLength { len: usize, n: usize },
    #[error("color pair must use two distinct colors, got {0} twice")]
    SameColorPair(u32),
    #[error("component is stale: vertex {vertex} no longer carries either color of the pair")]
    StaleComponent { vertex: usize },
    #[error("parameter out of range: {0}")]
    ParamRange(String),
    #[error("line {line}: malformed header: {reason}")]
    MalformedHeader { line: usize, reason: String },
    #[error("line {line}: malformed input: {reason}")]
    MalformedLine { line: usize, reason: String },
    #[error("claim violated: {0}")]
    ClaimViolation(String),
}
