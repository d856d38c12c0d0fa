use crate::algebra::Polynomial;
use crate::error::{Error, Result};
use crate::scalar::{from_usize, pow, Scalar};

/// `∫…∫ (x_1⋯x_k)^m` over the box `[0,ℓ_1]×…×[0,ℓ_k]`, one factor
/// `ℓ_i^{m+1}/(m+1)` per axis.
pub fn box_integral_monomial<T: Scalar>(m: usize, lengths: &[T], k: usize) -> Result<T> {
    if lengths.len() != k {
        return Err(Error::LengthCount {
            expected: k,
            found: lengths.len(),
        });
    }
    let denom = from_usize::<T>(m + 1);
    Ok(lengths
        .iter()
        .fold(T::one(), |acc, l| acc * pow(l, m + 1) / denom.clone()))
}

/// `∫_0^upper p(x) dx`, integrated termwise.
pub fn poly_definite_integral<T: Scalar>(p: &Polynomial<T>, upper: &T) -> T {
    p.apply_linear(|m| pow(upper, m + 1) / from_usize::<T>(m + 1))
}
