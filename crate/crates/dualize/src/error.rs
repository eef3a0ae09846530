use thiserror::Error;

/// Errors produced by library operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("row index {index} out of range 1..={max}")]
    RowOutOfRange { index: usize, max: usize },
    #[error("column index {index} out of range 1..={max}")]
    ColOutOfRange { index: usize, max: usize },
    #[error("matrix shape {m}x{n} is invalid; both dimensions must be at least 1")]
    InvalidShape { m: usize, n: usize },
    #[error("row selection is empty")]
    EmptyRowSelection,
    #[error("column set is empty")]
    EmptyColumnSet,
    #[error("covering indices must be 1-based and strictly increasing")]
    InvalidCovering,
    #[error("column {column} is not a member of the covering")]
    ColumnNotInCovering { column: usize },
    #[error("column {column} is already a member of the covering")]
    ColumnInCovering { column: usize },
    #[error("index {index} out of range 1..={domain}")]
    IndexOutOfDomain { index: usize, domain: usize },
    #[error("matrix parse error: {0}")]
    ParseMatrix(#[from] ParseMatrixError),
    #[error("estimate parse error: {0}")]
    ParseEstimate(#[from] ParseEstimateError),
    #[error("matrix has {columns} columns, over the brute-force cap of {cap}")]
    BruteForceCapExceeded { columns: usize, cap: usize },
    #[error("vector lengths differ: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("not a probability vector: entries sum to {sum}")]
    NotProbabilityVector { sum: f64 },
    #[error("chi-squared statistic must be nonnegative (got {0})")]
    NegativeStatistic(f64),
    #[error("degrees of freedom must be at least 1")]
    ZeroDof,
    #[error("invalid sample config: {0}")]
    InvalidSampleConfig(String),
    #[error(
        "discarded {0} consecutive row subsets whose submatrix has no irreducible covering; \
         the matrix likely contains an all-zero row"
    )]
    TooManyDiscards(u64),
    #[error("density {0} out of range; must satisfy 0 < density < 1")]
    InvalidDensity(f64),
    #[error("worker count {p} out of range 1..={n}")]
    WorkerCountOutOfRange { p: usize, n: usize },
    #[error("negative subtask size estimate {value} at index {index}")]
    NegativeEstimate { index: usize, value: f64 },
    #[error("estimate at index {index} is not finite")]
    NonFiniteEstimate { index: usize },
    #[error("schedule assigns {assigned} subtasks but the matrix has {columns} columns")]
    ScheduleMismatch { assigned: usize, columns: usize },
    #[error("schedule references worker {worker}, outside 1..={p}")]
    WorkerOutOfRange { worker: usize, p: usize },
    #[error("worker thread panicked: {0}")]
    WorkerPanic(String),
    #[error("measured wall time is zero; timer resolution too coarse, rerun with repetitions")]
    ZeroRunTime,
    #[error("baseline report must come from a p = 1 run (got p = {0})")]
    BaselineNotSerial(usize),
    #[error("requested {p} workers but only {cores} cores are available; enable oversubscription explicitly")]
    Oversubscribed { p: usize, cores: usize },
}

/// Errors from the strict matrix text format parser.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseMatrixError {
    #[error("line 1: expected header \"m n\" with two decimal dimensions")]
    Header,
    #[error("line 1: dimensions must be at least 1")]
    ZeroDimension,
    #[error("header declares {expected} rows but the input has {found} data lines")]
    RowCount { expected: usize, found: usize },
    #[error("line {line}: expected {expected} characters, found {found}")]
    LineLength { line: usize, expected: usize, found: usize },
    #[error("line {line}: invalid character {found:?}; matrix rows may contain only '0' and '1'")]
    BadChar { line: usize, found: char },
}

/// Errors from the estimate dump parser (`j f_star_j` lines).
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParseEstimateError {
    #[error("input is empty")]
    Empty,
    #[error("line {line}: expected \"j value\"")]
    Fields { line: usize },
    #[error("line {line}: expected index {expected}, found {found}")]
    IndexOrder { line: usize, expected: usize, found: usize },
    #[error("line {line}: value must be a finite nonnegative number")]
    BadValue { line: usize },
}
