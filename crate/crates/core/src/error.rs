use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph has {0} vertices; at most 32 are supported")]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("{0}-{1} is not an edge of the graph")]
    NotAnEdge(usize, usize),
    #[error("edges are not pairwise disjoint")]
    NotAMatching,
    #[error("malformed edge-list item {0:?}")]
    EdgeListSyntax(String),
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("hamiltonian path search on {n} vertices exceeds the cap of {cap}")]
    HamiltonianCap { n: usize, cap: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 record")]
    Empty,
    #[error("byte {byte} at offset {offset} is outside 63..=126")]
    ByteOutOfRange { offset: usize, byte: u8 },
    #[error("record for {n} vertices needs {expected} data bytes, found {found}")]
    WrongLength { n: usize, expected: usize, found: usize },
    #[error("nonzero padding bits in the final byte")]
    NonzeroPadding,
    #[error("graph6 record describes {0} vertices; at most 32 are supported")]
    TooManyVertices(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdealError {
    #[error("squarefree power exponent must be at least 1, got {0}")]
    ExponentTooSmall(usize),
    #[error("variable x{var} outside the ambient ring of {nvars} variables")]
    VariableOutOfRange { var: usize, nvars: usize },
    #[error("ambient ring of {0} variables exceeds the supported 64")]
    TooManyVariables(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RegularityError {
    #[error("{0} is not a prime")]
    NotPrime(u32),
    #[error("regularity of the zero ideal is not defined")]
    ZeroIdeal,
    #[error("regularity of the unit ideal is not defined")]
    UnitIdeal,
    #[error("{active} active variables exceed the vertex cap of {cap}")]
    CapExceeded { active: usize, cap: usize },
    #[error("generators have mixed degrees")]
    MixedDegrees,
    #[error("subset lies outside the ambient ring")]
    SubsetOutOfRange,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvenConnectionError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("power {s} is outside 1..={max} (matching number {matching_number})")]
    PowerOutOfRange { s: usize, max: usize, matching_number: usize },
    #[error("at most 32 edges are supported in an even-connection query, got {0}")]
    TooManyEdges(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrderError {
    #[error("power {s} is outside 1..={max} (matching number {matching_number})")]
    PowerOutOfRange { s: usize, max: usize, matching_number: usize },
    #[error("ordering is not a permutation of the minimal generators")]
    NotAPermutation,
    #[error("no admissible ordering exists for s = {s}")]
    SearchExhausted { s: usize },
    #[error(transparent)]
    Regularity(#[from] RegularityError),
}
