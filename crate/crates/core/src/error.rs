use thiserror::Error;

/// Errors surfaced by the exact toolkit.
///
/// Everything here is an input-contract violation; the arithmetic itself is
/// total and exact.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("partition parts must be positive and nondecreasing, got {0:?}")]
    InvalidPartition(Vec<u32>),

    #[error("partition {partition} has weight {found}, expected {expected}")]
    WeightMismatch {
        partition: String,
        expected: u32,
        found: u32,
    },

    #[error("genus polynomials are defined for grade k >= 1, got 0")]
    ZeroGrade,

    #[error("flavor mismatch: the {genus} genus pairs with {expected} numbers, got {found}")]
    FlavorMismatch {
        genus: &'static str,
        expected: &'static str,
        found: &'static str,
    },

    #[error("signature linear forms need an even Chern weight, got {0}")]
    OddChernWeight(u32),

    #[error("fixed point {label:?} has a zero weight; fixed points must be isolated")]
    ZeroWeight { label: String },

    #[error("fixed point {label:?} has epsilon {value}, expected 1 or -1")]
    BadEpsilon { label: String, value: i32 },

    #[error("fixed point {label:?} carries {found} weights, model half-dimension is {expected}")]
    WeightCount {
        label: String,
        expected: usize,
        found: usize,
    },

    #[error("class has t-exponent {found}, top degree of the model needs {expected}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("class assigns values to {found} points, model has {expected}")]
    PointCount { expected: usize, found: usize },

    #[error("operation needs a model in {expected} mode, got {found} mode")]
    ModeMismatch {
        expected: &'static str,
        found: &'static str,
    },

    #[error("cannot build the class {class:?} on a model of half-dimension {half_dim}")]
    ClassUnavailable { class: String, half_dim: usize },

    #[error("unrecognised class spec {0:?} (expected \"t^k\", \"p1\" or \"euler\")")]
    BadClassSpec(String),

    #[error("invalid model: {0}")]
    BadModel(String),
}

pub type Result<T> = std::result::Result<T, Error>;
