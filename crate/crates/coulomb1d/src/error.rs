use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{function}: pole at {at}")]
    Pole { function: &'static str, at: String },

    #[error("{function}: result overflows the scalar range")]
    Overflow { function: &'static str },

    #[error("{function}: no convergence after {terms} terms")]
    NonConvergence { function: &'static str, terms: usize },

    #[error("{function}: {reason}")]
    ParameterRestriction { function: &'static str, reason: String },

    #[error("{function}: estimated relative accuracy {achieved:.3e} does not meet {required:.3e}")]
    UnreachableAccuracy { function: &'static str, achieved: f64, required: f64 },

    #[error("{0}")]
    Domain(String),

    #[error("{id} is defined on the {side} half-axis, got x = {x}")]
    WrongHalfAxis { id: &'static str, side: &'static str, x: f64 },

    #[error("division by zero: {0}")]
    DivisionByZero(&'static str),

    #[error("boundary denominator vanishes (|D| = {0:.3e})")]
    DegenerateDenominator(f64),

    #[error("linear system is singular (condition estimate {condition:.3e})")]
    SingularSystem { condition: f64 },

    #[error("non-finite value in {context}")]
    NonFinite { context: String },

    #[error("requested {requested} digits, only {available} available")]
    PrecisionExhausted { requested: u32, available: u32 },

    #[error("no sign change for level n = {n} in [{lo}, {hi}]")]
    ZeroNotBracketed { n: u32, lo: f64, hi: f64 },

    #[error("empty range: {0}")]
    EmptyRange(String),

    #[error("coupling alpha must be non-zero here")]
    AlphaZero,
}

pub type Result<T> = core::result::Result<T, Error>;
