use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Division by the zero polynomial.
    #[error("division by zero polynomial")]
    DivisionByZero,

    /// `exact_div` found a nonzero remainder: no exact quotient exists in the ring.
    #[error("polynomial is not exactly divisible")]
    NotDivisible,

    /// Evaluation at `q = 0` of a polynomial with a negative `q`-exponent.
    #[error("evaluation at q = 0 with a negative q-exponent")]
    EvalAtZero,

    /// Text input violated the polynomial or region grammar.
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    /// An enumeration would exceed its size bound.
    #[error("{what} exceeds the enumeration bound ({actual} > {limit})")]
    TooLarge {
        what: &'static str,
        actual: usize,
        limit: usize,
    },

    /// A division that is guaranteed exact by construction failed.
    /// Indicates an implementation bug, never a user error.
    #[error("internal error: an exact division left a remainder")]
    InternalNonDivisible,

    /// Region parameters violate the constructor invariants.
    #[error("invalid region: {0}")]
    InvalidRegion(String),

    /// Endpoint lists are not strictly increasing sequences of equal length.
    #[error("invalid endpoint configuration: {0}")]
    InvalidConfig(String),

    /// Path tracking left the region somewhere other than a right dent.
    #[error("invalid tiling: {0}")]
    InvalidTiling(String),
}

pub type Result<T> = std::result::Result<T, Error>;
