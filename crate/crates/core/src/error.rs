use thiserror::Error;

use crate::gf::FieldError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error(transparent)]
    Field(#[from] FieldError),

    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("gcd of two zero polynomials is undefined")]
    BothZero,
    #[error("reciprocal requires a nonzero constant term")]
    ZeroConstantTerm,
    #[error("reciprocal requires a polynomial of positive degree")]
    ConstantPolynomial,
    #[error("length n = {n} must be coprime to the characteristic {p}")]
    LengthNotCoprime { n: usize, p: u64 },
    #[error("n must be at least {min}, got {n}")]
    LengthTooSmall { n: usize, min: usize },
    #[error("alpha0 has multiplicative order 1; the binomial criterion needs order > 1")]
    TrivialOrder,
    #[error("polynomial is not square-free")]
    NotSquareFree,
    #[error("cannot parse {what}: {detail}")]
    Parse { what: &'static str, detail: String },

    #[error("{0} is a zero divisor in F_q + uF_q")]
    NotUnit(String),
    #[error("polynomial of degree {degree} is outside the allowed range (< {bound})")]
    DegreeOutOfRange { degree: usize, bound: usize },
    #[error("{0} must be nonzero")]
    ZeroParameter(&'static str),

    #[error("exponent vector has {got} entries, expected {expected}")]
    ExponentCount { expected: usize, got: usize },
    #[error("exponent {value} at position {index} outside 0..={max}")]
    ExponentOutOfRange { index: usize, value: u32, max: u32 },
    #[error("operation requires a single irreducible factor, found {0}")]
    NotSingleFactor(usize),
    #[error("{what} needs {required} steps, over the budget of {budget}")]
    BudgetExceeded {
        what: &'static str,
        required: String,
        budget: u64,
    },
    #[error("brute-force search found an ideal that is not principal")]
    NonPrincipalIdeal,
    #[error("descriptor is inconsistent: {0}")]
    InconsistentDescriptor(String),
}
