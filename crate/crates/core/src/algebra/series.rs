use std::ops::{Add, Mul, Neg, Sub};

use crate::algebra::Polynomial;
use crate::error::{Error, Result};
use crate::scalar::{factorial, from_usize, Scalar};

/// Prefix `a_0 + a_1 t + … + a_N t^N` of a formal power series.
///
/// Every operation works modulo `t^{N+1}`; binary operations require equal orders.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncatedSeries<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> TruncatedSeries<T> {
    /// Pads with zeros or truncates `coeffs` to exactly `order + 1` entries.
    pub fn new(order: usize, mut coeffs: Vec<T>) -> Self {
        coeffs.resize(order + 1, T::zero());
        Self { coeffs }
    }

    pub fn from_fn<F: FnMut(usize) -> T>(order: usize, f: F) -> Self {
        Self {
            coeffs: (0..=order).map(f).collect(),
        }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(order, Vec::new())
    }

    pub fn one(order: usize) -> Self {
        Self::new(order, vec![T::one()])
    }

    /// The series `t`.
    pub fn variable(order: usize) -> Self {
        Self::new(order, vec![T::zero(), T::one()])
    }

    pub fn from_polynomial(order: usize, p: &Polynomial<T>) -> Self {
        Self::new(order, p.coeffs().iter().take(order + 1).cloned().collect())
    }

    /// `e^{a t}`
    pub fn exp_linear(order: usize, a: &T) -> Self {
        let mut term = T::one();
        Self::from_fn(order, |m| {
            if m > 0 {
                term = term.clone() * a.clone() / from_usize::<T>(m);
            }
            term.clone()
        })
    }

    /// `ln(1 + t)`
    pub fn log1p(order: usize) -> Self {
        Self::from_fn(order, |m| match m {
            0 => T::zero(),
            _ if m % 2 == 1 => T::one() / from_usize::<T>(m),
            _ => -T::one() / from_usize::<T>(m),
        })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    /// `n! a_n`, the coefficient read as an exponential generating function.
    pub fn egf_coeff(&self, n: usize) -> T {
        self.coeff(n) * factorial::<T>(n)
    }

    pub fn scale(&self, c: &T) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|x| x.clone() * c.clone()).collect(),
        }
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch(self.order(), other.order()));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(self + other)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(self * other)
    }

    /// `outer(inner(t))`, evaluated by Horner's rule.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        self.check_order(inner)?;
        if !inner.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let order = self.order();
        let mut acc = Self::zero(order);
        for c in self.coeffs.iter().rev() {
            acc = &acc * inner;
            acc.coeffs[0] = acc.coeffs[0].clone() + c.clone();
        }
        Ok(acc)
    }

    /// `exp(s)` for `s(0) = 0`, via `n f_n = Σ_{j=1}^{n} j s_j f_{n-j}`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let order = self.order();
        let mut out: Vec<T> = Vec::with_capacity(order + 1);
        out.push(T::one());
        for n in 1..=order {
            let acc = (1..=n).fold(T::zero(), |acc, j| {
                acc + from_usize::<T>(j) * self.coeffs[j].clone() * out[n - j].clone()
            });
            out.push(acc / from_usize::<T>(n));
        }
        Ok(Self { coeffs: out })
    }

    /// `log(s)` for `s(0) = 1`, via `n g_n = n s_n - Σ_{j=1}^{n-1} j g_j s_{n-j}`.
    pub fn log(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::ConstantTermNotOne);
        }
        let order = self.order();
        let mut out: Vec<T> = Vec::with_capacity(order + 1);
        out.push(T::zero());
        for n in 1..=order {
            let mut acc = from_usize::<T>(n) * self.coeffs[n].clone();
            for (j, g) in out.iter().enumerate().take(n).skip(1) {
                acc = acc - from_usize::<T>(j) * g.clone() * self.coeffs[n - j].clone();
            }
            out.push(acc / from_usize::<T>(n));
        }
        Ok(Self { coeffs: out })
    }

    pub fn pow(&self, exp: usize) -> Self {
        (0..exp).fold(Self::one(self.order()), |acc, _| &acc * self)
    }
}

impl<T: Scalar> Add for &TruncatedSeries<T> {
    type Output = TruncatedSeries<T>;

    fn add(self, rhs: Self) -> TruncatedSeries<T> {
        TruncatedSeries::from_fn(self.order().min(rhs.order()), |i| {
            self.coeffs[i].clone() + rhs.coeffs[i].clone()
        })
    }
}

impl<T: Scalar> Sub for &TruncatedSeries<T> {
    type Output = TruncatedSeries<T>;

    fn sub(self, rhs: Self) -> TruncatedSeries<T> {
        TruncatedSeries::from_fn(self.order().min(rhs.order()), |i| {
            self.coeffs[i].clone() - rhs.coeffs[i].clone()
        })
    }
}

impl<T: Scalar> Mul for &TruncatedSeries<T> {
    type Output = TruncatedSeries<T>;

    fn mul(self, rhs: Self) -> TruncatedSeries<T> {
        TruncatedSeries::from_fn(self.order().min(rhs.order()), |n| {
            (0..=n).fold(T::zero(), |acc, i| {
                acc + self.coeffs[i].clone() * rhs.coeffs[n - i].clone()
            })
        })
    }
}

impl<T: Scalar> Neg for &TruncatedSeries<T> {
    type Output = TruncatedSeries<T>;

    fn neg(self) -> TruncatedSeries<T> {
        self.scale(&-T::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rational, Rational};

    fn series(order: usize, cs: &[Rational]) -> TruncatedSeries<Rational> {
        TruncatedSeries::new(order, cs.to_vec())
    }

    #[test]
    fn exp_and_log_definitions() {
        let zero = TruncatedSeries::<Rational>::zero(3);
        assert_eq!(zero.exp().unwrap(), TruncatedSeries::one(3));
        let t = TruncatedSeries::<Rational>::variable(3);
        assert_eq!(
            t.exp().unwrap(),
            series(3, &[int(1), int(1), rational(1, 2), rational(1, 6)])
        );
        let one_plus_t = series(3, &[int(1), int(1)]);
        assert_eq!(
            one_plus_t.log().unwrap(),
            series(3, &[int(0), int(1), rational(-1, 2), rational(1, 3)])
        );
        assert_eq!(
            TruncatedSeries::<Rational>::log1p(3),
            one_plus_t.log().unwrap()
        );
    }

    #[test]
    fn preconditions() {
        let one = TruncatedSeries::<Rational>::one(2);
        assert_eq!(one.exp(), Err(Error::NonzeroConstantTerm));
        assert_eq!(
            TruncatedSeries::<Rational>::zero(2).log(),
            Err(Error::ConstantTermNotOne)
        );
        assert_eq!(one.compose(&one), Err(Error::NonzeroConstantTerm));
        assert_eq!(
            one.compose(&TruncatedSeries::zero(3)),
            Err(Error::OrderMismatch(2, 3))
        );
    }

    #[test]
    fn compose_examples() {
        let g = series(4, &[int(0), int(3), rational(-1, 2), int(0), int(5)]);
        let t = TruncatedSeries::variable(4);
        assert_eq!(t.compose(&g).unwrap(), g);

        let exp_prefix = TruncatedSeries::exp_linear(3, &int(1));
        let log_prefix = TruncatedSeries::log1p(3);
        assert_eq!(
            exp_prefix.compose(&log_prefix).unwrap(),
            series(3, &[int(1), int(1)])
        );
    }

    #[test]
    fn lif_one_composed_with_log() {
        // Lif_1(z) = Σ z^m / (m+1)!, so Lif_1(ln(1+t)) = 1 + t/2 - t^2/12 + …
        let lif = TruncatedSeries::from_fn(2, |m| int(1) / factorial::<Rational>(m + 1));
        let composed = lif.compose(&TruncatedSeries::log1p(2)).unwrap();
        assert_eq!(
            composed,
            series(2, &[int(1), rational(1, 2), rational(-1, 12)])
        );
        // as an egf: C_0 = 1, C_1 = 1/2, C_2 = -1/6
        assert_eq!(composed.egf_coeff(2), rational(-1, 6));
    }

    #[test]
    fn exp_linear_matches_exp() {
        let a = rational(-3, 2);
        let at = TruncatedSeries::variable(6).scale(&a);
        assert_eq!(at.exp().unwrap(), TruncatedSeries::exp_linear(6, &a));
    }
}
