use thiserror::Error;

/// Errors raised while building or transforming a simplicial complex.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("vertex {vertex} is outside the vertex set [1, {m}]")]
    VertexOutOfRange { vertex: usize, m: usize },
    #[error("vertex {vertex} lies in no facet (ghost vertex)")]
    GhostVertex { vertex: usize },
    #[error("m = {m} exceeds the supported maximum of {max}", max = crate::simplicial::MAX_VERTICES)]
    MTooLarge { m: usize },
    #[error("a complex needs at least one vertex")]
    NoVertices,
    #[error("no facets given; the complex would have only ghost vertices")]
    NoFacets,
    #[error("the Alexander dual of the full simplex is the void complex (it has no faces at all)")]
    VoidDual,
}

/// Errors raised by the chain-complex layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomologyError {
    #[error("boundary in degree {degree} has shape {rows}x{cols}, expected {expected_rows}x{expected_cols}")]
    ShapeMismatch { degree: isize, rows: usize, cols: usize, expected_rows: usize, expected_cols: usize },
    #[error("boundary maps compose to a nonzero map at degree {degree}")]
    NotAComplex { degree: isize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("cubical oracle supports m <= {max}, got m = {m}", max = crate::oracles::MAX_CUBICAL_VERTICES)]
    TooLarge { m: usize },
    #[error("{p} is not a prime")]
    NotPrime { p: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AffineError {
    #[error("the ideal has no generators: its zero locus is all of affine space and the complement is empty")]
    EmptyIdeal,
}

/// Failures of operations that need a complex without ghost vertices.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error("complex has ghost vertices {vertices:?}; the decomposition formulas do not apply")]
    GhostVertex { vertices: Vec<usize> },
}

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("invalid JSON input: {0}")]
    Json(#[from] serde_json::Error),
    #[error("line {line}: {message}")]
    Text { line: usize, message: String },
    #[error("input is empty")]
    Empty,
}
