//! Crate-wide error type.

use thiserror::Error;

/// Errors surfaced by the search and certification engines.
#[derive(Debug, Error)]
pub enum Error {
    /// A brute-force routine was asked to process more vertices than its
    /// factorial-time budget allows.
    #[error("vertex count {n} exceeds the brute-force limit {limit}")]
    LimitExceeded { n: usize, limit: usize },

    /// An enumeration would produce more items than the configured cap.
    #[error("enumeration size {count} exceeds the cap {cap}")]
    CapExceeded { count: u128, cap: u128 },

    /// A construction or engine was handed a malformed graph.
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    /// A generic argument violated a documented precondition.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// The given edge ordering is not lexicographic under any vertex bijection.
    #[error("edge ordering is not lexicographic under any consistent map")]
    NotLexicographic,

    /// Blow-up requires a complete base graph.
    #[error("blow-up base must be a complete graph")]
    InvalidBase,

    /// A greedy embedding instance violates its structural invariants.
    #[error("invalid greedy instance: {0}")]
    InvalidInstance(String),

    /// An exact decomposition needs one parameter to divide another.
    #[error("{divisor} does not divide {value}")]
    NotDivisible { divisor: usize, value: usize },

    /// Two objects that must agree on a dimension do not.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// Host and target are not the same flavor of ordered graph.
    #[error("host kind {host} does not match target kind {target}")]
    KindMismatch {
        host: &'static str,
        target: &'static str,
    },

    /// The queried pair of vertices is not an edge of the graph.
    #[error("({u}, {v}) is not an edge")]
    NotAnEdge { u: usize, v: usize },

    /// The translated subset coloring is not constant on the witness's
    /// composed words, so no single color can be certified.
    #[error("composed-word colors are not constant: saw colors {first} and {second}")]
    NotMonochromaticWord { first: u8, second: u8 },

    /// A Monte Carlo estimate was requested with zero trials.
    #[error("empty sample: at least one trial is required")]
    EmptySample,

    /// Numeric overflow while evaluating a bound.
    #[error("numeric overflow while evaluating {0}")]
    Overflow(&'static str),

    /// An emitted certificate failed independent re-verification.
    #[error("certificate verification failed: {0}")]
    VerificationFailed(String),

    /// Cache or certificate I/O failed.
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    /// Cache or certificate JSON was malformed.
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
