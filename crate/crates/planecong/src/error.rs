use thiserror::Error;

/// Errors shared across the series, periodicity, congruence, and search layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus must be at least 2, got {0}")]
    ModulusTooSmall(u64),

    #[error("modulus {0} does not fit in 32 bits")]
    ModulusTooLarge(u64),

    #[error("series order must be at least 1")]
    EmptyOrder,

    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u64, u64),

    #[error("coefficient index {index} out of range for order {order}")]
    CoefficientOutOfRange { index: usize, order: usize },

    #[error("stride must be at least 1")]
    ZeroStride,

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("argument must be positive")]
    NotPositive,

    #[error("part multiset is empty")]
    EmptyMultiset,

    #[error("part multiset entry has a zero {0}")]
    ZeroEntry(&'static str),

    #[error("component count must be at least 1")]
    ZeroComponents,

    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),

    #[error("oracle limit exceeded: {what} = {value} exceeds cap {cap}")]
    OracleLimitExceeded {
        what: &'static str,
        value: u64,
        cap: u64,
    },

    #[error("series order {order} is too short to test claimed period {claimed}; need at least {needed}")]
    WindowTooShort {
        order: usize,
        claimed: u64,
        needed: u64,
    },

    #[error("claimed period {claimed} is not a period of the series over its window")]
    NotAPeriod { claimed: u64 },

    #[error("progression step must be at least 1")]
    ZeroStep,

    #[error(
        "bounded verification requires components = step = modulus = a prime; \
         got components {components}, modulus {modulus}, step {step}"
    )]
    OutsideTheoremScope {
        components: u64,
        modulus: u64,
        step: u64,
    },

    #[error("horizon must be at least 1")]
    ZeroHorizon,

    #[error("residue {residue} is at least the prime {prime}")]
    ResidueOutOfRange { residue: u64, prime: u64 },

    #[error("prime must be at least 5, got {0}")]
    PrimeTooSmall(u64),

    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),

    #[error("search requires max_terms_per_side of at least 1")]
    ZeroTerms,

    #[error("scan prime limit must be at least 2, got {0}")]
    ScanLimitTooSmall(u64),
}

pub type Result<T> = std::result::Result<T, Error>;
