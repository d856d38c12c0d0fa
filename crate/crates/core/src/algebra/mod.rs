//! Exact polynomial and truncated power-series arithmetic.

mod integrate;
mod polynomial;
mod series;

pub use integrate::{box_integral_monomial, poly_definite_integral};
pub use polynomial::Polynomial;
pub use series::TruncatedSeries;

use crate::error::Result;
use crate::scalar::Scalar;

/// `∏ (X - α_i)`; the coefficients are the Comtet numbers of the first kind.
pub fn poly_from_roots<T: Scalar>(shifts: &[T]) -> Polynomial<T> {
    Polynomial::from_roots(shifts)
}

pub fn series_compose<T: Scalar>(
    outer: &TruncatedSeries<T>,
    inner: &TruncatedSeries<T>,
) -> Result<TruncatedSeries<T>> {
    outer.compose(inner)
}

pub fn series_exp<T: Scalar>(s: &TruncatedSeries<T>) -> Result<TruncatedSeries<T>> {
    s.exp()
}

pub fn series_log<T: Scalar>(s: &TruncatedSeries<T>) -> Result<TruncatedSeries<T>> {
    s.log()
}
