//! Shared error type for every module in the crate.

use thiserror::Error;

/// Errors surfaced by the number-theoretic operations.
///
/// The CLI maps these onto exit codes: refusals and bad inputs
/// (`Domain`, `NonResidue`, `NotInvertible`, `NormMinusOne`,
/// `TotallyRamifiedTwo`, `Unsupported`, `InvalidSophieGermain`) are exit 2,
/// exhausted budgets (`EffortExceeded`, `SearchExhausted`) are exit 3.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    /// Input violates a precondition (wrong parity, non-coprime moduli, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// Requested a square root of a quadratic non-residue.
    #[error("non-residue: {0}")]
    NonResidue(String),

    /// Modular inverse of a non-unit.
    #[error("not invertible: {0}")]
    NotInvertible(String),

    /// `norm_u_plus_one` called on a unit of norm -1.
    #[error("fundamental unit has norm -1")]
    NormMinusOne,

    /// A configured computation budget was hit (factorization rounds,
    /// continued-fraction steps, closure size). Says nothing about existence.
    #[error("effort exceeded: {0}")]
    EffortExceeded(String),

    /// A prime scan hit its bound. Signals the bound, not nonexistence.
    #[error("search exhausted: {0}")]
    SearchExhausted(String),

    /// The rational prime 2 is totally ramified in the bi-quadratic field;
    /// the 2-torsion rank predictor does not apply.
    #[error("2 is totally ramified; H^1 predictor refuses")]
    TotallyRamifiedTwo,

    /// Outside the supported regime (e.g. non-square-free h(n)).
    #[error("unsupported: {0}")]
    Unsupported(String),

    /// Tuple construction requires p = 2q + 1 with both prime.
    #[error("invalid Sophie Germain pair: {0}")]
    InvalidSophieGermain(String),
}

pub type Result<T> = std::result::Result<T, Error>;
