//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero in Q(i)")]
    DivisionByZero,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("missing assignment for variable `{0}`")]
    MissingAssignment(String),

    #[error("matrix shape error: {0}")]
    MatrixShape(String),

    #[error("ideal has no nonzero generators")]
    EmptyIdeal,

    #[error("basis is not marked as a Groebner basis; run completion first")]
    NotGroebner,

    #[error("computation budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error(
        "zero set is positive-dimensional: the base locus contains a curve, \
         so the quartic is reducible and outside this solver's scope"
    )]
    PositiveDimensional,

    #[error("solution involves roots outside Q(i): {0}")]
    ResidualRoots(String),

    #[error("degenerate pencil: det A(x) vanishes identically")]
    DegeneratePencil,

    #[error("matrix in the pencil is not symmetric (index {0})")]
    NotSymmetric(usize),

    #[error("pencil has no nonzero matrix")]
    ZeroPencil,

    #[error("expected a real (rational-entry) object: {0}")]
    NotReal(String),

    #[error("no sample point found: {0}")]
    NoSamplePoint(String),

    #[error("no positive-definite reference point is known; the spectrahedron is not established")]
    NoDefiniteReference,

    #[error("claim has an unsupported shape: {0}")]
    UnsupportedClaim(String),

    #[error("quadric is not smooth of the expected type: {0}")]
    NotSmoothQuadric(String),

    #[error("pencil classification failed: {0}")]
    PencilClassification(String),

    #[error("base configuration unsupported: {0}")]
    UnsupportedBaseConfiguration(String),
}
