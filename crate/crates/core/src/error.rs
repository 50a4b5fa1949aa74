use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A registry row could not be parsed.
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    /// A code record failed validation.
    #[error("validation error for [[{n},{k},{d}]]: {message}")]
    Validation {
        n: usize,
        k: usize,
        d: usize,
        message: String,
    },

    /// The code uses more syndromes than it has.
    #[error("syndrome budget exceeded for [[{n},{k},{d}]]: {used} > {total}")]
    Budget {
        n: usize,
        k: usize,
        d: usize,
        used: String,
        total: String,
    },

    /// Every fit point shares the same abscissa.
    #[error("degenerate fit: all points have n = {0}")]
    DegenerateFit(usize),

    #[error("empty code set")]
    EmptySet,

    /// The bracket handed to the root finder does not straddle a root.
    #[error("no sign change over [{lo}, {hi}] (f(lo) = {f_lo}, f(hi) = {f_hi})")]
    NoSignChange {
        lo: f64,
        hi: f64,
        f_lo: f64,
        f_hi: f64,
    },

    #[error("unknown figure id {0} (expected 1..=5)")]
    UnknownFigure(u8),

    /// Exhaustive enumeration was requested for too many qubits.
    #[error("size error: n = {n} exceeds the enumeration limit {limit}")]
    SizeLimit { n: usize, limit: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
