//! Error types shared across the engine.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Per-quote calibration residual, reported on success and on failure.
#[derive(Debug, Clone)]
pub struct QuoteResidual {
    pub low_strike: f64,
    pub high_strike: f64,
    pub maturity: f64,
    pub market: f64,
    pub model: f64,
    /// Residual in quote units (bp for spreads, percentage points for upfronts).
    pub residual: f64,
    /// Residual divided by the acceptance tolerance of its quote kind.
    pub scaled: f64,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("numerical failure: {0}")]
    Numerical(String),

    #[error("internal consistency check failed: {0}")]
    InternalConsistency(String),

    #[error("calibration failed after {iterations} iterations: {message}")]
    CalibrationFailure {
        iterations: usize,
        message: String,
        residuals: Vec<QuoteResidual>,
    },

    #[error("bracketing failed for cell (strikes {low_strike}-{high_strike}, maturity {maturity}): {message}")]
    BracketingFailure {
        low_strike: f64,
        high_strike: f64,
        maturity: f64,
        message: String,
    },

    #[error("large-step adjustment unstable at level {level}, time {time}: required factor {factor}")]
    LargeStepInstability { level: usize, time: f64, factor: f64 },

    #[error("degenerate instrument: {0}")]
    DegenerateInstrument(String),

    #[error("option value {value} outside no-arbitrage bounds [{lower}, {upper}]")]
    ImpliedVolBounds { value: f64, lower: f64, upper: f64 },

    #[error("delta undefined: {0}")]
    UndefinedDelta(String),

    #[error("no stationary density: {0}")]
    NoStationaryDensity(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("snapshot error: {0}")]
    Snapshot(String),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }

    pub fn numerical(msg: impl Into<String>) -> Self {
        Error::Numerical(msg.into())
    }

    /// Stable machine-readable code for structured error records.
    pub fn code(&self) -> &'static str {
        match self {
            Error::InvalidParameter(_) => "invalid_parameter",
            Error::DimensionMismatch(_) => "dimension_mismatch",
            Error::Numerical(_) => "numerical",
            Error::InternalConsistency(_) => "internal_consistency",
            Error::CalibrationFailure { .. } => "calibration_failure",
            Error::BracketingFailure { .. } => "bracketing_failure",
            Error::LargeStepInstability { .. } => "large_step_instability",
            Error::DegenerateInstrument(_) => "degenerate_instrument",
            Error::ImpliedVolBounds { .. } => "implied_vol_bounds",
            Error::UndefinedDelta(_) => "undefined_delta",
            Error::NoStationaryDensity(_) => "no_stationary_density",
            Error::Io(_) => "io",
            Error::Parse { .. } => "parse",
            Error::Snapshot(_) => "snapshot",
        }
    }
}
