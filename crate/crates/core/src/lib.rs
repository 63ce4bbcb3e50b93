//! Polya groups of real quadratic, bi-quadratic and simplest cubic number
//! fields, computed two independent ways at desk scale.
//!
//! The cohomological route predicts rank Po(K) from ramified primes and
//! fundamental-unit data through the exact sequence
//! 0 -> H^1(G, O_K^*) -> (+)_i Z/e_i -> Po(K) -> 0; the form-theoretic
//! route ([`formoracle`]) recomputes Po for quadratic fields from scratch
//! with reduction cycles and Gauss composition, and the two are required to
//! agree. On top sit executable versions of two constructions: consecutive
//! bi-quadratic pairs with Po = (Z/2)^r, and simplest cubic fields with
//! |Po| exceeding any requested bound, plus the square-free density
//! machinery that makes the cubic scan terminate.

pub mod arith;
pub mod biquad;
pub mod constructors;
mod contfrac;
pub mod cubic;
pub mod density;
pub mod error;
pub mod formoracle;
pub mod quadfield;
pub mod sqclass;

pub use arith::Factorization;
pub use biquad::BiquadField;
pub use constructors::{BiquadTheoremReport, TupleCertificate, TupleStep};
pub use contfrac::DEFAULT_CF_STEPS;
pub use cubic::{CubicCertificate, SimplestCubic};
pub use density::DensityReport;
pub use error::{Error, Result};
pub use formoracle::{NarrowClassGroup, QuadraticForm};
pub use quadfield::{QuadField, QuadUnit};
pub use sqclass::SquareClass;
