use alloc::string::String;

use crate::graph::{Edge, Vertex};

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("loop edge at vertex {0}")]
    LoopEdge(Vertex),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(Vertex, Vertex),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("malformed graph6: {0}")]
    MalformedGraph6(String),
    #[error("graph is not connected")]
    NotConnected,
    #[error("graph is K4, which has no triangle/diamond partition")]
    IsK4,
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("graph is not cubic")]
    NotCubic,
    #[error("a cubic graph needs an even order, got {0}")]
    OddOrder(usize),
    #[error("bad generator spec: {0}")]
    BadSpec(String),
    #[error("edge {0} is not in the 2-regular part")]
    NotInO(Edge),
    #[error("edge {0} lies on a triangle of the 2-regular part")]
    IsTriangleCycle(Edge),
    #[error("cycle frame assertion failed: {0}")]
    FrameAssertionFailed(String),
    #[error("edge set is not a spanning tree")]
    NotASpanningTree,
    #[error("COUNTEREXAMPLE: exhaustive search found no good decomposition of graph6 {0}")]
    CounterexampleFound(String),
    #[error("internal error: {0}")]
    InternalError(String),
}
