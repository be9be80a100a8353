//! Error type shared across the crate.

use num_bigint::BigInt;
use thiserror::Error;

/// Errors produced by order validation, the construction pipeline, and
/// the finite-model checkers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("minimal polynomial is not monic")]
    NotMonic,

    #[error("degree {0} is below the minimum of 2")]
    DegreeTooSmall(usize),

    #[error("not totally real: {real_roots} distinct real roots, degree {degree}")]
    NotTotallyReal { real_roots: usize, degree: usize },

    #[error("minimal polynomial is reducible; factor {}", format_poly(.factor))]
    Reducible { factor: Vec<BigInt> },

    #[error("coefficient vector length {got} does not match order degree {expected}")]
    DegreeMismatch { expected: usize, got: usize },

    #[error("{0} is not squarefree")]
    NotSquarefree(i64),

    #[error("discriminant {0} is below the minimum of 2")]
    DiscriminantTooSmall(i64),

    #[error("matrix size {0} is below the minimum of 2")]
    MatrixTooSmall(usize),

    #[error("matrix rows must all have the same length as the row count")]
    ShapeMismatch,

    #[error("elements belong to different orders")]
    OrderMismatch,

    #[error("image array is not a permutation")]
    InvalidPermutation,

    #[error("division is not exact")]
    InexactDivision,

    #[error("parity condition fails: conjugate power sum or difference is odd")]
    ParityFailure,

    #[error("constructed g is zero; the chosen unit has finite order")]
    ZeroG,

    #[error("no unit found with coefficient height at most {height_bound}")]
    UnitNotFound { height_bound: u32 },

    #[error("supplied element is not a unit of the order")]
    NotAUnit,

    #[error("supplied unit is +1 or -1; an infinite-order unit is required")]
    UnitIsTrivial,

    #[error("no power of the unit lies in the suborder within exponent bound {max_exp}")]
    SuborderPowerNotFound { max_exp: u32 },

    #[error("suborder basis has zero determinant")]
    SuborderSingular,

    #[error("suborder does not contain 1")]
    SuborderMissingIdentity,

    #[error("suborder span is not closed under multiplication")]
    SuborderNotClosed,

    #[error("pigeonhole cap n^d + 1 exceeded; this contradicts the counting bound")]
    PigeonholeCapExceeded,

    #[error("check failed: {0}")]
    CheckFailed(String),

    #[error("exhaustive enumeration needs {required} steps, over the budget of {budget}")]
    BudgetExceeded { required: u128, budget: u64 },

    #[error("modulus {0} is below the minimum of 2")]
    ModulusTooSmall(u64),

    #[error("precondition violated: {0}")]
    Precondition(&'static str),

    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),

    #[error("invalid integer literal {0:?}")]
    ParseInt(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

fn format_poly(coeffs: &[BigInt]) -> String {
    crate::poly::format_poly(coeffs, "x")
}
