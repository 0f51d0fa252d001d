use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid beta-set: {0}")]
    InvalidBetaSet(String),

    #[error("invalid core spec: {0}")]
    InvalidSpec(String),

    #[error("infinite family: gcd of moduli is {gcd}")]
    InfiniteFamily { gcd: usize },

    #[error("moduli {0} and {1} are not coprime")]
    NotCoprime(usize, usize),

    #[error("inexact division: {numerator} / {denominator}")]
    InexactDivision {
        numerator: String,
        denominator: String,
    },

    #[error("series square root needs constant term 1")]
    SqrtConstantTerm,

    #[error("numerator coefficient {index} should vanish but is {value}")]
    NonVanishingNumerator { index: usize, value: String },

    #[error("coefficient {index} is not a nonnegative integer: {value}")]
    NonIntegralCoefficient { index: usize, value: String },

    #[error("element {0} is outside the poset ground set")]
    OutsideGround(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
