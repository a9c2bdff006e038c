use std::io;

use thiserror::Error;

use crate::field::FieldId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("extension degree must be at least 1")]
    ZeroDegree,

    #[error("field order {p}^{m} exceeds the cap of {cap}")]
    OrderTooLarge { p: u64, m: u32, cap: u64 },

    #[error("index {index} is out of range for a field of order {order}")]
    IndexOutOfRange { index: u64, order: u64 },

    #[error("cannot combine an element of {found} with {expected}")]
    MixedFields { expected: FieldId, found: FieldId },

    #[error("zero has no multiplicative inverse")]
    DivisionByZero,

    #[error("operation requires odd characteristic")]
    CharacteristicTwo,

    #[error("{sub} does not divide the extension degree {degree}")]
    NotASubfield { sub: u32, degree: u32 },

    #[error("exponent {exponent} exceeds the supported bound {bound}")]
    ExponentTooLarge { exponent: u64, bound: u64 },

    #[error("denominator is the zero polynomial")]
    ZeroDenominator,

    #[error("denominator vanishes at element {input}")]
    Pole { input: u32 },

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("domain mismatch: {0}")]
    Domain(String),

    #[error("inversion produced {0} candidates instead of exactly one")]
    InverterSurvivors(usize),

    #[error(transparent)]
    Io(#[from] io::Error),
}
