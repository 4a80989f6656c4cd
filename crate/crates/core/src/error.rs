use thiserror::Error;

/// Errors raised by the engine. Every variant names the violated constraint.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("binomial top argument must be nonnegative, got {0}")]
    NegativeBinomialTop(i64),

    #[error("multinomial parts sum to {sum}, which exceeds n = {n}")]
    MultinomialOverflow { n: u64, sum: u64 },

    #[error("number of variables must be positive, got {0}")]
    NonPositiveArity(i64),

    #[error("a complete intersection needs at least one degree (k >= 1)")]
    NoDegrees,

    #[error("dimension must be at least 2, got N = {0}")]
    DimensionTooSmall(u32),

    #[error("every degree must be at least 2, got d = {0}")]
    DegreeTooSmall(u32),

    #[error("not Fano: sum of degrees {sum} exceeds N + k = {bound}")]
    NotFano { sum: u64, bound: u64 },

    #[error("factor index {index} outside 1..={k}")]
    FactorIndex { index: usize, k: usize },

    #[error("hypersurface degree {d} outside 2..={max} for N = {n}")]
    HypersurfaceDegree { n: u32, d: u32, max: u32 },

    #[error("resolution counts need d >= 1, got d = {0}")]
    NonPositiveDegree(i64),

    #[error("degree vector must be nonempty")]
    EmptyDegreeVector,

    #[error("chart exponents must be positive, got {0:?}")]
    ZeroChartExponent(Vec<u32>),

    #[error("chart {0} is terminal (smooth); nothing to blow up")]
    TerminalChart(String),

    #[error("resolution trace exceeded the node limit of {0}")]
    NodeLimitExceeded(usize),

    #[error("exponent vector has length {got}, expected arity {arity}")]
    ArityMismatch { arity: usize, got: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
