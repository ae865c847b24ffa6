use thiserror::Error;

use crate::coeff_ring::Field;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(Field, Field),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("division by zero")]
    DivisionByZero,

    #[error("polynomial does not lie in KN (it involves c): {0}")]
    NotInKn(String),

    #[error("gcd of two zero polynomials is undefined")]
    GcdOfZeros,

    #[error("specialization value must be nonzero")]
    ZeroSpecialization,

    #[error("element is not a unit (det = {det})")]
    NotAUnit { det: String },

    #[error("inverse verification failed: α·α⁻¹ = {product}")]
    InverseCheckFailed { product: String },

    #[error("images ({x}, {y}) do not satisfy the defining relations")]
    InvalidAutomorphism { x: String, y: String },

    #[error("invalid linear factor: {0}")]
    InvalidFactor(String),

    #[error("split form factors must alternate between x and y")]
    NotAlternating,

    #[error("invalid chain: {0}")]
    InvalidChain(String),

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("unknown symbol {symbol:?} at position {pos}")]
    UnknownSymbol { pos: usize, symbol: char },

    #[error("candidate count {count} exceeds budget {budget}")]
    BudgetExceeded { count: u128, budget: u128 },

    #[error("invalid search space: {0}")]
    InvalidSearchSpace(String),

    #[error("{0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, Error>;
