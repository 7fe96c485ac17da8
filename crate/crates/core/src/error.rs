use thiserror::Error;

/// Errors produced by estimators, selectors and dataset utilities.
#[derive(Debug, Error)]
pub enum Error {
    #[error("sample is empty")]
    EmptySample,
    #[error("sample contains a non-finite value at index {0}")]
    NonFiniteValue(usize),
    #[error("sample needs at least two distinct values (n = {n}, std = {std})")]
    DegenerateSample { n: usize, std: f64 },
    #[error("bandwidth must be positive and finite, got {0}")]
    InvalidBandwidth(f64),
    #[error("standard deviation must be positive and finite, got {0}")]
    InvalidStd(f64),
    #[error("interval [{lo}, {hi}] is empty or not finite")]
    InvalidInterval { lo: f64, hi: f64 },
    #[error("support [{lo}, {hi}] carries only {mass} of the density mass")]
    SupportTooNarrow { lo: f64, hi: f64, mass: f64 },
    #[error("quadrature grid needs at least two points, got {0}")]
    InvalidGrid(usize),
    #[error("integrand is not finite at x = {x}")]
    NonFiniteIntegrand { x: f64 },
    #[error("objective is not finite at bandwidth {h}")]
    NonFiniteObjective { h: f64 },
    #[error("optimum sits on the {side} boundary of the search interval [{lo}, {hi}]")]
    BoundaryOptimum {
        side: &'static str,
        lo: f64,
        hi: f64,
    },
    #[error("scaling maxima must be positive and finite (e_max = {e_max}, p_max = {p_max})")]
    InvalidScaling { e_max: f64, p_max: f64 },
    #[error("plug-in iteration did not converge within {max_iter} iterations")]
    NoConvergence {
        max_iter: usize,
        trace: Vec<(f64, f64)>,
    },
    #[error("plug-in iteration diverged to bandwidth {0}")]
    DivergedBandwidth(f64),
    #[error("validation set is empty")]
    EmptyValidation,
    #[error("lag {tau} leaves no usable pairs in a series of length {m}")]
    EmptyLagRange { tau: usize, m: usize },
    #[error("PIT value at index {index} is outside [0, 1]: {value}")]
    PitOutOfRange { index: usize, value: f64 },
    #[error("max lag {nu} must be smaller than the validation size {m}")]
    LagExceedsSample { nu: usize, m: usize },
    #[error("sign probabilities are degenerate (p_pos = {p_pos:e}, p_neg = {p_neg:e})")]
    DegenerateSigns { p_pos: f64, p_neg: f64 },
    #[error("need at least {need} trials, got {got}")]
    TooFewTrials { need: usize, got: usize },
    #[error("series of length {got} is too short, need at least {need}")]
    SeriesTooShort { need: usize, got: usize },
    #[error("every window of size {window} has zero variance")]
    DegenerateWindows { window: usize },
    #[error("Hurst exponent estimate {0} lies outside (0, 1)")]
    HurstOutOfRange(f64),
    #[error("simulation needs n >= 2, got {0}")]
    SimTooSmall(usize),
    #[error("CSV row {row}: {msg}")]
    CsvRow { row: usize, msg: String },
    #[error("column {0:?} is missing from the CSV header")]
    MissingColumn(String),
    #[error("duplicate dates in price series: {0}")]
    DuplicateDates(String),
    #[error("need at least 2 valid price rows, got {0}")]
    TooFewRows(usize),
    #[error("no observations in year {0}")]
    EmptyYear(i32),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
