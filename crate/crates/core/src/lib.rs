//! Exact multiparameter poly-Cauchy and poly-Bernoulli numbers and polynomials.
//!
//! All families are generic over [`Scalar`]; exact computation uses the
//! [`Rational`] aliases re-exported here.

pub mod algebra;
pub mod bernoulli;
pub mod cauchy;
pub mod error;
pub mod harness;
pub mod scalar;
pub mod stirling;

pub use error::{Error, Result};
pub use scalar::{Rational, Scalar};

pub type Poly = algebra::Polynomial<Rational>;
pub type Series = algebra::TruncatedSeries<Rational>;
pub type Alpha = stirling::AlphaSeq<Rational>;
pub type Lens = stirling::Lengths<Rational>;
pub type Table = stirling::CoeffTable<Rational>;
