use core::fmt;

/// Errors shared by every module in the crate.
///
/// `Display` always leads with the case name so command-line front ends can
/// surface it verbatim.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Error {
    /// The same hyperedge was listed twice when building a hypergraph.
    DuplicateEdge { edge_bits: u32 },
    /// A vertex label is outside `{1, ..., n}`.
    VertexOutOfRange { vertex: u32, n: u32 },
    /// An operation on a qubit pair was given the same vertex twice.
    SameVertex { vertex: u32 },
    /// Two hypergraphs with different vertex counts were combined.
    VertexCountMismatch { left: u32, right: u32 },
    /// The vertex count exceeds what the requested operation supports.
    TooManyVertices { n: u32, max: u32 },
    /// The vertex count is below what the requested operation needs.
    TooFewQubits { n: u32, min: u32 },
    /// A closed form restricted to low-rank hypergraphs was asked for more.
    RankTooHigh { rank: u32, max: u32 },
    /// The sign-class combination matches no row of the closed-form table.
    TableMiss { signs: [i8; 4] },
    /// The root finder did not reach tolerance within its iteration cap.
    NoConvergence { iterations: u32 },
    /// No closed form applies to the given hypergraph.
    ClosedFormUnavailable,
    /// An operation restricted to graphs was given a general hypergraph.
    NotAGraph,
}

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Error::DuplicateEdge { edge_bits } => {
                write!(f, "DuplicateEdge: edge mask {edge_bits:#b} listed more than once")
            }
            Error::VertexOutOfRange { vertex, n } => {
                write!(f, "VertexOutOfRange: vertex {vertex} not in 1..={n}")
            }
            Error::SameVertex { vertex } => {
                write!(f, "SameVertex: pair operation given vertex {vertex} twice")
            }
            Error::VertexCountMismatch { left, right } => {
                write!(f, "VertexCountMismatch: {left} vs {right} vertices")
            }
            Error::TooManyVertices { n, max } => {
                write!(f, "TooManyVertices: n = {n} exceeds supported maximum {max}")
            }
            Error::TooFewQubits { n, min } => {
                write!(f, "TooFewQubits: n = {n} is below the required minimum {min}")
            }
            Error::RankTooHigh { rank, max } => {
                write!(f, "RankTooHigh: rank {rank} exceeds {max}")
            }
            Error::TableMiss { signs } => {
                write!(
                    f,
                    "TableMiss: sign classes ({}, {}, {}, {}) match no closed-form row",
                    signs[0], signs[1], signs[2], signs[3]
                )
            }
            Error::NoConvergence { iterations } => {
                write!(f, "NoConvergence: root finder exceeded {iterations} iterations")
            }
            Error::ClosedFormUnavailable => write!(f, "ClosedFormUnavailable"),
            Error::NotAGraph => write!(f, "NotAGraph: every hyperedge must have exactly two vertices"),
        }
    }
}

impl core::error::Error for Error {}
