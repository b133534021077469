use thiserror::Error;

/// Errors produced by the library. Every variant is a domain error; usage
/// errors (bad flags) live in the CLI layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("expected a weight of SU({expected}), got SU({found})")]
    Rank { expected: usize, found: usize },

    #[error("SU(N) requires N in {min}..={max}, got {found}")]
    UnsupportedRank { min: usize, max: usize, found: usize },

    #[error("Dynkin labels must be non-negative, got {0}")]
    NegativeLabel(i64),

    #[error("GL(3) partition {0:?} is not weakly decreasing")]
    NotDecreasing([i64; 3]),

    #[error("triality is not conserved: {lambda:?} x {mu:?} cannot contain {nu:?}")]
    NotInProduct {
        lambda: Vec<u32>,
        mu: Vec<u32>,
        nu: Vec<u32>,
    },

    /// Indices are `(row, position)` into the nine honeycomb inequalities,
    /// rows grouped by the direction of the rhombus short diagonal.
    #[error("alpha = {alpha} violates honeycomb inequalities {violated:?}")]
    InequalityViolation { alpha: i64, violated: Vec<(usize, usize)> },

    #[error("alpha = {alpha} lies outside the interval [{min}, {max}]")]
    AlphaOutOfRange { alpha: i64, min: i64, max: i64 },

    #[error("pictograph labels {0:?} are not a valid pictograph")]
    InvalidPictograph([i64; 9]),

    #[error("stepping by {k} leaves the fiber (label {label} becomes negative)")]
    StepOutOfFiber { k: i64, label: &'static str },

    #[error("conjugation map produced an invalid image: {0}")]
    MapInvariant(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
