use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("exponent vectors have different lengths ({0} vs {1})")]
    LengthMismatch(usize, usize),

    #[error("ordinal {0} is not a limit")]
    NotALimit(String),

    #[error("ordinal {ordinal} does not fit below w^{}", .d + 1)]
    DimensionTooSmall { ordinal: String, d: usize },

    #[error("B(l) must exceed 2^(l+2)")]
    PreconditionB,

    #[error("function decreases at argument {0}")]
    NotMonotone(u64),

    #[error("inverse scan gave up after {0} steps")]
    ScanExhausted(u64),

    #[error("a fast-growing value needed by the construction exceeds cap {0}")]
    CapExceeded(String),

    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("sequences live over different dimensions ({0} vs {1})")]
    DimensionMismatch(usize, usize),

    #[error("sequence metadata lacks {0}")]
    MissingMeta(&'static str),

    #[error("length target overflowed its cap")]
    TargetOverflow,

    #[error("ideal {0} contains ideal {1}")]
    NotBad(usize, usize),

    #[error("triple ({0}, {1}, {2}) is outside the coloring domain")]
    OutOfDomain(u64, u64, u64),

    #[error("malformed input: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
