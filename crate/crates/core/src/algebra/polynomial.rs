use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::scalar::{binomial, from_usize, pow, Scalar};

/// Dense univariate polynomial; `coeffs[i]` is the coefficient of `X^i`.
///
/// Trailing zeros are always stripped, so the zero polynomial has no
/// coefficients and [`degree`](Self::degree) `None`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Polynomial<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    /// `c * X^power`
    pub fn monomial(c: T, power: usize) -> Self {
        let mut coeffs = vec![T::zero(); power + 1];
        coeffs[power] = c;
        Self::new(coeffs)
    }

    /// `X - root`
    pub fn linear_factor(root: &T) -> Self {
        Self::new(vec![-root.clone(), T::one()])
    }

    /// `∏ (X - shift)` over `shifts`; the empty product is 1.
    pub fn from_roots<'a, I>(shifts: I) -> Self
    where
        I: IntoIterator<Item = &'a T>,
    {
        // multiply in place by (X - a): c'_i = c_{i-1} - a c_i
        let mut coeffs = vec![T::one()];
        for a in shifts {
            coeffs.push(T::zero());
            for i in (0..coeffs.len()).rev() {
                let lower = if i > 0 {
                    coeffs[i - 1].clone()
                } else {
                    T::zero()
                };
                coeffs[i] = lower - a.clone() * coeffs[i].clone();
            }
        }
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading_coeff(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|x| x.clone() * c.clone()).collect())
    }

    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    /// `p(-X)`
    pub fn reflect(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 0 { c.clone() } else { -c.clone() })
                .collect(),
        )
    }

    /// `p(X + shift)` by binomial expansion of every monomial.
    pub fn shift(&self, shift: &T) -> Self {
        let mut out = vec![T::zero(); self.coeffs.len()];
        for (m, c) in self.coeffs.iter().enumerate() {
            for (i, slot) in out.iter_mut().enumerate().take(m + 1) {
                *slot = slot.clone() + c.clone() * binomial::<T>(m, i) * pow(shift, m - i);
            }
        }
        Self::new(out)
    }

    /// Antiderivative vanishing at 0.
    pub fn antiderivative(&self) -> Self {
        let mut out = vec![T::zero()];
        out.extend(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(m, c)| c.clone() / from_usize::<T>(m + 1)),
        );
        Self::new(out)
    }

    /// Substitutes `f(X)` for every coefficient position, i.e. `Σ c_i f(i)`.
    pub fn apply_linear<F>(&self, mut f: F) -> T
    where
        F: FnMut(usize) -> T,
    {
        self.coeffs
            .iter()
            .enumerate()
            .fold(T::zero(), |acc, (i, c)| acc + c.clone() * f(i))
    }
}

impl<T: Scalar> Default for Polynomial<T> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<T: Scalar + fmt::Display> fmt::Display for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})X")?,
                _ => write!(f, "({c})X^{i}")?,
            }
        }
        Ok(())
    }
}

impl<T: fmt::Debug> fmt::Debug for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("Polynomial").field(&self.coeffs).finish()
    }
}

impl<T: Scalar> Add for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn add(self, rhs: Self) -> Polynomial<T> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<T: Scalar> Sub for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn sub(self, rhs: Self) -> Polynomial<T> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<T: Scalar> Mul for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn mul(self, rhs: Self) -> Polynomial<T> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Polynomial::new(out)
    }
}

impl<T: Scalar> Neg for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn neg(self) -> Polynomial<T> {
        Polynomial::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $method:ident),*) => {$(
        impl<T: Scalar> $tr for Polynomial<T> {
            type Output = Polynomial<T>;
            fn $method(self, rhs: Self) -> Polynomial<T> {
                (&self).$method(&rhs)
            }
        }
    )*};
}

forward_owned!(Add::add, Sub::sub, Mul::mul);

impl<T: Scalar> Neg for Polynomial<T> {
    type Output = Polynomial<T>;

    fn neg(self) -> Polynomial<T> {
        -&self
    }
}

impl<T: Scalar> std::iter::Product for Polynomial<T> {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::one(), |acc, p| &acc * &p)
    }
}
