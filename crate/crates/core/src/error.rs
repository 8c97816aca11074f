use thiserror::Error;

use crate::contact::ValidationReport;

/// Why a single fixed point fails the contact identities.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ContactError {
    #[error("contact dimension parameter n = {n} must be positive")]
    InvalidDimension { n: i64 },
    #[error("no fixed points")]
    NoFixedPoints,
    #[error("expected {expected} tangent weights, found {found}")]
    WrongWeightCount { expected: usize, found: usize },
    #[error("zero tangent weight: fixed point is not isolated")]
    NotIsolated,
    #[error("weight sum {sum} is not divisible by n+1 = {divisor}")]
    NonIntegralH { sum: i64, divisor: i64 },
    #[error("contact weight h is zero")]
    ZeroH,
    #[error("contact weight h = {h} does not occur among the tangent weights")]
    NoContactWeight { h: i64 },
    #[error("contact-distribution weights admit no pairing summing to h = {h}")]
    NoSigmaPairing { h: i64 },
    #[error("contact-distribution weights sum to {sum}, expected n*h = {expected}")]
    DistributionSum { sum: i64, expected: i64 },
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("rational function is not a Laurent polynomial")]
    NotPolynomial,
    #[error("zero rational function has no order bounds")]
    ZeroFunction,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("exponential of an element with nonzero constant term")]
    NonNilpotentExp,
    #[error("invalid bundle spec: {0}")]
    InvalidSpec(String),
    #[error("p = {p} out of range for n = {n}")]
    OutOfRangeP { n: i64, p: i64 },
    #[error("index has a non-integral coefficient")]
    NonIntegralCoefficient,
    #[error("characteristic-class integral {0} is not an integer")]
    NonIntegralResult(String),
    #[error("degenerate weights: {0}")]
    DegenerateWeights(String),
    #[error("fixed point {label}: {source}")]
    Contact {
        label: String,
        #[source]
        source: ContactError,
    },
    #[error("data failed validation with {} violation(s)", .0.violations.len())]
    ValidationFailed(ValidationReport),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl ContactError {
    /// Stable identifier used in serialized reports.
    pub fn kind(&self) -> &'static str {
        match self {
            ContactError::InvalidDimension { .. } => "InvalidDimension",
            ContactError::NoFixedPoints => "NoFixedPoints",
            ContactError::WrongWeightCount { .. } => "WrongWeightCount",
            ContactError::NotIsolated => "NotIsolated",
            ContactError::NonIntegralH { .. } => "NonIntegralH",
            ContactError::ZeroH => "ZeroH",
            ContactError::NoContactWeight { .. } => "NoContactWeight",
            ContactError::NoSigmaPairing { .. } => "NoSigmaPairing",
            ContactError::DistributionSum { .. } => "DistributionSum",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
