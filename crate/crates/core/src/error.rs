use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("not a permutation of 1..{degree}: {images:?}")]
    InvalidPermutation { degree: usize, images: Vec<usize> },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("not a concrete partition: all p_i and q_i must be natural numbers")]
    NotConcretePartition,

    #[error("invalid multirectangular diagram: {0}")]
    InvalidMultiRect(String),

    #[error("size mismatch: |λ| = {partition} but |μ| = {cycle_type}")]
    SizeMismatch { partition: usize, cycle_type: usize },

    #[error("no value for variable {0}")]
    MissingVariable(String),

    #[error("missing S_{0} in shape vector")]
    MissingShapeValue(usize),

    #[error("degree bound violated: points do not fit a polynomial of degree {0}")]
    DegreeBoundViolated(usize),

    #[error("interpolation needs at least {needed} points with distinct abscissae, got {got}")]
    InsufficientPoints { needed: usize, got: usize },

    #[error("derivative leaves non-shape variables: {0}")]
    NonScalarDerivative(String),

    #[error("Stanley polynomial has {have} rectangles, {need} required")]
    TooFewRectangles { have: usize, need: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("{what} = {value} is out of range (allowed {min}..={max})")]
    OutOfRange {
        what: &'static str,
        value: usize,
        min: usize,
        max: usize,
    },
}
