//! Exact-arithmetic engine for Jack and interpolation Jack polynomials.
//!
//! The crate constructs Jack polynomials from their triangularity and
//! eigenfunction characterization, and interpolation Jack polynomials from
//! their vanishing characterization, over exact rationals or over the
//! rational function field in the parameter d. On top of these it verifies
//! Pieri formulas, twisted Pieri formulas, difference equations, binomial
//! formulas, and kernel intertwining relations with zero tolerance.

pub mod combinatorics;
pub mod field;
pub mod identities;
pub mod interpjack;
pub mod jack;
pub mod kernel;
pub mod operators;
pub mod polyring;

pub use combinatorics::{IntVector, Partition, Subset};
pub use field::{DValue, FieldElement, Mode, Rat};
pub use identities::{SuiteConfig, UMode, VerificationReport};
pub use interpjack::InterpJackPolynomial;
pub use jack::{JackError, JackPolynomial, Session};
pub use kernel::TruncatedKernel;
pub use polyring::{MultiPoly, SymPoly};
