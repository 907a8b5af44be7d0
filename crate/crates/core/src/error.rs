use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("gcd of two zero polynomials is undefined")]
    GcdOfZeros,

    #[error("operation requires a non-constant polynomial")]
    ConstantPolynomial,

    #[error("polynomial is reducible over F_3")]
    NotIrreducible,

    #[error("polynomial is divisible by x")]
    DivisibleByX,

    #[error("polynomial is not primitive: order {order}, expected {expected}")]
    NotPrimitive { order: u64, expected: u64 },

    #[error("modulus must be monic")]
    NotMonic,

    #[error("extension degree {0} out of range (1..=40)")]
    DegreeOutOfRange(u32),

    #[error("exhaustive operation needs m <= {cap}, got m = {m} (use --force-large to raise the cap)")]
    CapExceeded { m: u32, cap: u32 },

    #[error("enumeration budget exceeded: {needed} candidates > budget {budget} (minimum distance is at least {lower_bound})")]
    BudgetExceeded {
        needed: u128,
        budget: u64,
        lower_bound: u64,
    },

    #[error("inverse of zero")]
    ZeroInverse,

    #[error("quadratic character of zero is undefined")]
    ZeroCharacter,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
