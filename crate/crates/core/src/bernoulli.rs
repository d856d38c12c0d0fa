//! Classical and multiparameter poly-Bernoulli numbers and polynomials.

use std::fmt;
use std::str::FromStr;

use crate::algebra::{box_integral_monomial, Polynomial, TruncatedSeries};
use crate::cauchy::{moment, FamilyPoint};
use crate::error::{Error, Result};
use crate::scalar::{binomial, factorial, from_usize, pow, sign, Scalar};
use crate::stirling::{comtet_second, stirling_second, AlphaSeq, Lengths};

/// `B_n^{(k)} = (-1)^n Σ_m S(n,m) (-1)^m m! / (m+1)^k`.
pub fn classic_poly_bernoulli<T: Scalar>(n: usize, k: usize) -> T {
    let big_s = stirling_second::<T>(n);
    let sum = (0..=n).fold(T::zero(), |acc, m| {
        acc + big_s.get(n, m) * sign::<T>(m) * factorial::<T>(m) / pow(&from_usize::<T>(m + 1), k)
    });
    sign::<T>(n) * sum
}

/// `Li_k(1-e^{-t}) / (1-e^{-t}) = Σ_{m≥1} (1-e^{-t})^{m-1} / m^k` to `t^order`.
fn li_quotient_series<T: Scalar>(k: usize, order: usize) -> TruncatedSeries<T> {
    let one = TruncatedSeries::one(order);
    let u = &one - &TruncatedSeries::exp_linear(order, &-T::one());
    let mut power = one;
    let mut series = TruncatedSeries::zero(order);
    // u has no constant term, so terms beyond m = order + 1 vanish mod t^{order+1}
    for m in 1..=order + 1 {
        series = &series + &power.scale(&(T::one() / pow(&from_usize::<T>(m), k)));
        power = &power * &u;
    }
    series
}

/// Both sides of `Li_k(1-e^{-t}) / (1-e^{-t}) = Σ B_n^{(k)} t^n / n!` as egf
/// coefficient lists.
pub fn li_gf_sides<T: Scalar>(k: usize, order: usize) -> (Vec<T>, Vec<T>) {
    let series = li_quotient_series::<T>(k, order);
    let lhs = (0..=order).map(|n| series.egf_coeff(n)).collect();
    let rhs = (0..=order).map(|n| classic_poly_bernoulli(n, k)).collect();
    (lhs, rhs)
}

/// Classical poly-Bernoulli polynomial
/// `B_n^{(k)}(z) = (-1)^n Σ_m S(n,m) (-1)^m m! Σ_i C(m,i) (-z)^i / (m-i+1)^k`.
pub fn classic_poly_bernoulli_poly<T: Scalar>(n: usize, k: usize) -> Polynomial<T> {
    let big_s = stirling_second::<T>(n);
    let mut coeffs = vec![T::zero(); n + 1];
    for m in 0..=n {
        let outer = sign::<T>(n + m) * big_s.get(n, m) * factorial::<T>(m);
        for (i, c) in coeffs.iter_mut().enumerate().take(m + 1) {
            let term = binomial::<T>(m, i) * sign::<T>(i) / pow(&from_usize::<T>(m - i + 1), k);
            *c = c.clone() + outer.clone() * term;
        }
    }
    Polynomial::new(coeffs)
}

pub fn li_gf_check<T: Scalar>(k: usize, order: usize) -> bool {
    let (lhs, rhs) = li_gf_sides::<T>(k, order);
    lhs == rhs
}

/// How many factorials multiply `S_α(n,m)` in the defining sum.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Convention {
    /// `(-1)^{n-m} m! S_α(n,m) m! / (m+1)^k ⋯`, with the factorial doubled.
    Verbatim,
    /// A single `m!`; reduces to the classical numbers on the unit cube.
    #[default]
    Corrected,
}

impl Convention {
    pub fn name(self) -> &'static str {
        match self {
            Convention::Verbatim => "verbatim",
            Convention::Corrected => "corrected",
        }
    }

    fn weight<T: Scalar>(self, m: usize) -> T {
        match self {
            Convention::Verbatim => factorial::<T>(m) * factorial::<T>(m),
            Convention::Corrected => factorial::<T>(m),
        }
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Convention {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "verbatim" => Ok(Convention::Verbatim),
            "corrected" => Ok(Convention::Corrected),
            other => Err(Error::UnknownKind(other.to_string())),
        }
    }
}

/// Summands `(-1)^{n-m} m! S_α(n,m) (ℓ_1⋯ℓ_k)^{m+1} / (m+1)^k` for `m = 0..=n`.
pub fn mp_bernoulli_terms<T: Scalar>(p: &FamilyPoint<T>, convention: Convention) -> Result<Vec<T>> {
    let n = p.n;
    let big_s = comtet_second(&p.alpha, n)?;
    Ok((0..=n)
        .map(|m| sign::<T>(n - m) * convention.weight::<T>(m) * big_s.get(n, m) * p.moment(m))
        .collect())
}

/// `B_{n,α,L}^{(k)}`.
pub fn mp_bernoulli<T: Scalar>(p: &FamilyPoint<T>, convention: Convention) -> Result<T> {
    Ok(mp_bernoulli_terms(p, convention)?
        .into_iter()
        .fold(T::zero(), |acc, x| acc + x))
}

/// Coefficient lists of a generating-function comparison, both as reconstructed
/// and as printed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GfComparison<T> {
    pub lhs: Vec<T>,
    pub rhs: Vec<T>,
    pub literal_lhs: Vec<T>,
    pub literal_rhs: Vec<T>,
}

impl<T: Scalar> GfComparison<T> {
    /// Per-coefficient verdicts of the reconstructed identity.
    pub fn verdicts(&self) -> Vec<bool> {
        self.lhs
            .iter()
            .zip(&self.rhs)
            .map(|(a, b)| a == b)
            .collect()
    }

    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }

    pub fn literal_verdicts(&self) -> Vec<bool> {
        self.literal_lhs
            .iter()
            .zip(&self.literal_rhs)
            .map(|(a, b)| a == b)
            .collect()
    }

    pub fn literal_holds(&self) -> bool {
        self.literal_lhs == self.literal_rhs
    }
}

/// `Σ_{j≤m} e^{-α_j t} / ∏_{i≤m, i≠j} (α_j - α_i)`, the egf of `S_α(n,m)` at `-t`.
fn lagrange_exponentials<T: Scalar>(alpha: &[T], m: usize, order: usize) -> TruncatedSeries<T> {
    let head = &alpha[..=m];
    head.iter()
        .enumerate()
        .fold(TruncatedSeries::zero(order), |acc, (j, aj)| {
            let denom = head
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != j)
                .fold(T::one(), |d, (_, ai)| d * (aj.clone() - ai.clone()));
            let term = TruncatedSeries::exp_linear(order, &-aj.clone()).scale(&(T::one() / denom));
            &acc + &term
        })
}

fn gf_point<T: Scalar>(
    alpha: &AlphaSeq<T>,
    lengths: &Lengths<T>,
    n: usize,
) -> Result<FamilyPoint<T>> {
    FamilyPoint::new(n, lengths.k(), alpha.clone(), lengths.clone())
}

/// `J_m(z) = ∫_box (x_1⋯x_k - z)^m = Σ_i C(m,i) (-z)^i (ℓ_1⋯ℓ_k)^{m-i+1} / (m-i+1)^k`.
fn shifted_moment<T: Scalar>(volume: &T, k: usize, m: usize, z: &T) -> T {
    let minus_z = -z.clone();
    (0..=m).fold(T::zero(), |acc, i| {
        acc + binomial::<T>(m, i) * pow(&minus_z, i) * moment(volume, k, m - i)
    })
}

fn bernoulli_gf<T: Scalar>(
    alpha: &AlphaSeq<T>,
    lengths: &Lengths<T>,
    z: &T,
    order: usize,
) -> Result<GfComparison<T>> {
    alpha.require_distinct(order + 1)?;
    let head = alpha.prefix(order + 1)?;
    let (volume, k) = (lengths.product(), lengths.k());

    let lhs = (0..=order)
        .map(|n| {
            Ok(mp_bernoulli_poly(&gf_point(alpha, lengths, n)?, Convention::Corrected)?.eval(z))
        })
        .collect::<Result<Vec<T>>>()?;
    let literal_lhs = if z.is_zero() {
        (0..=order)
            .map(|n| mp_bernoulli(&gf_point(alpha, lengths, n)?, Convention::Verbatim))
            .collect::<Result<Vec<T>>>()?
    } else {
        lhs.clone()
    };

    let mut rhs = TruncatedSeries::zero(order);
    let mut literal = TruncatedSeries::zero(order);
    for m in 0..=order {
        let weight = sign::<T>(m) * shifted_moment(&volume, k, m, z);
        let exps = lagrange_exponentials(head, m, order);
        rhs = &rhs + &exps.scale(&(weight.clone() * factorial::<T>(m)));
        let printed_weight = if z.is_zero() {
            weight * factorial::<T>(m)
        } else {
            // the polynomial generating function is printed without m!
            weight
        };
        literal = &literal + &exps.scale(&printed_weight);
    }
    Ok(GfComparison {
        lhs,
        rhs: (0..=order).map(|n| rhs.egf_coeff(n)).collect(),
        literal_lhs,
        literal_rhs: (0..=order).map(|n| literal.egf_coeff(n)).collect(),
    })
}

/// Generating function of `B_{n,α,L}^{(k)}` to order `t^order`.
///
/// The literal side evaluates the printed sum with the duplicated factorial
/// of the number definition on the left and the printed `j ≤ m ≤ order`
/// ranges on the right.
pub fn mp_bernoulli_gf_check<T: Scalar>(
    alpha: &AlphaSeq<T>,
    lengths: &Lengths<T>,
    order: usize,
) -> Result<GfComparison<T>> {
    bernoulli_gf(alpha, lengths, &T::zero(), order)
}

/// Generating function of `B_{n,α,L}^{(k)}(z_0)`; the literal side drops the
/// `m!` the printed double sum omits.
pub fn mp_bernoulli_poly_gf_check<T: Scalar>(
    alpha: &AlphaSeq<T>,
    lengths: &Lengths<T>,
    z0: &T,
    order: usize,
) -> Result<GfComparison<T>> {
    if z0.is_zero() {
        return mp_bernoulli_gf_check(alpha, lengths, order);
    }
    bernoulli_gf(alpha, lengths, z0, order)
}

/// `B_{n,α,L}^{(k)}(z) = (-1)^n Σ_i Σ_{m≥i} (-1)^m m! C(m,i) S_α(n,m)
/// (ℓ_1⋯ℓ_k)^{m-i+1} / (m-i+1)^k (-z)^i`.
///
/// With [`Convention::Verbatim`] the doubled factorial of the number
/// definition is carried over, so the constant term matches
/// `mp_bernoulli(p, Verbatim)`.
pub fn mp_bernoulli_poly<T: Scalar>(
    p: &FamilyPoint<T>,
    convention: Convention,
) -> Result<Polynomial<T>> {
    let n = p.n;
    let big_s = comtet_second(&p.alpha, n)?;
    Ok(Polynomial::new(
        (0..=n)
            .map(|i| {
                let sum = (i..=n).fold(T::zero(), |acc, m| {
                    acc + sign::<T>(m)
                        * convention.weight::<T>(m)
                        * binomial::<T>(m, i)
                        * big_s.get(n, m)
                        * p.moment(m - i)
                });
                sign::<T>(n) * sum * sign::<T>(i)
            })
            .collect(),
    ))
}

/// `B_{n,α,L}^{(k)}(z)` at one point, integrating `(x_1⋯x_k - z)^m` over the box
/// monomial by monomial.
pub fn mp_bernoulli_poly_oracle<T: Scalar>(p: &FamilyPoint<T>, z: &T) -> Result<T> {
    let n = p.n;
    let big_s = comtet_second(&p.alpha, n)?;
    let lengths = p.lengths.as_slice();
    let mut power = Polynomial::one();
    let shifted = Polynomial::linear_factor(z);
    let mut total = T::zero();
    for m in 0..=n {
        let integral = power.apply_linear(|j| {
            box_integral_monomial(j, lengths, lengths.len()).expect("k matches lengths")
        });
        total = total + sign::<T>(n - m) * factorial::<T>(m) * big_s.get(n, m) * integral;
        power = &power * &shifted;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rational, Rational};

    fn point(n: usize, alpha: &[Rational], lengths: &[Rational]) -> FamilyPoint<Rational> {
        FamilyPoint::new(
            n,
            lengths.len(),
            AlphaSeq::new(alpha.to_vec()),
            Lengths::new(lengths.to_vec()).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn classical_polynomials() {
        // B_1^{(1)}(z) = 1/2 - z
        assert_eq!(
            classic_poly_bernoulli_poly::<Rational>(1, 1),
            Polynomial::new(vec![rational(1, 2), int(-1)])
        );
        for k in 1..4 {
            for n in 0..7 {
                let poly = classic_poly_bernoulli_poly::<Rational>(n, k);
                assert_eq!(poly.eval(&int(0)), classic_poly_bernoulli(n, k));
                let p = FamilyPoint::classical(n, k).unwrap();
                assert_eq!(mp_bernoulli_poly(&p, Convention::Corrected).unwrap(), poly);
            }
        }
    }

    #[test]
    fn classical_examples() {
        for k in 1..4 {
            assert_eq!(classic_poly_bernoulli::<Rational>(0, k), int(1));
        }
        assert_eq!(classic_poly_bernoulli::<Rational>(1, 1), rational(1, 2));
        assert_eq!(classic_poly_bernoulli::<Rational>(2, 1), rational(1, 6));
        assert_eq!(classic_poly_bernoulli::<Rational>(1, 2), rational(1, 4));
    }

    #[test]
    fn li_generating_function() {
        assert!(li_gf_check::<Rational>(1, 5));
        assert!(li_gf_check::<Rational>(3, 5));
        assert!(li_gf_check::<Rational>(2, 0));
    }

    #[test]
    fn multiparameter_examples() {
        for n in 0..6 {
            let p = FamilyPoint::<Rational>::classical(n, 1).unwrap();
            assert_eq!(
                mp_bernoulli(&p, Convention::Corrected).unwrap(),
                classic_poly_bernoulli(n, 1)
            );
        }
        let p = FamilyPoint::<Rational>::classical(2, 1).unwrap();
        assert_eq!(
            mp_bernoulli(&p, Convention::Corrected).unwrap(),
            rational(1, 6)
        );
        assert_ne!(
            mp_bernoulli(&p, Convention::Verbatim).unwrap(),
            rational(1, 6)
        );

        let empty = point(0, &[], &[int(2), rational(3, 4)]);
        assert_eq!(
            mp_bernoulli(&empty, Convention::Corrected).unwrap(),
            rational(3, 2)
        );

        let (a, l) = (rational(-2, 3), int(5));
        let p = point(1, std::slice::from_ref(&a), std::slice::from_ref(&l));
        let expected = l.clone() * l.clone() / int(2) - a * l;
        assert_eq!(mp_bernoulli(&p, Convention::Corrected).unwrap(), expected);
    }

    #[test]
    fn generating_function_examples() {
        let alpha = AlphaSeq::new((1..=4).map(int).collect());
        let unit = Lengths::unit(1).unwrap();
        let gf = mp_bernoulli_gf_check(&alpha, &unit, 3).unwrap();
        assert!(gf.holds());
        assert_eq!(gf.verdicts(), vec![true; 4]);

        let lengths = Lengths::new(vec![rational(3, 2), int(-2)]).unwrap();
        let gf = mp_bernoulli_gf_check(&alpha, &lengths, 0).unwrap();
        assert!(gf.holds());
        assert_eq!(gf.lhs, vec![int(-3)]);

        let repeated = AlphaSeq::new(vec![int(1), int(2), int(1)]);
        assert_eq!(
            mp_bernoulli_gf_check(&repeated, &unit, 2),
            Err(Error::RepeatedAlpha {
                first: 0,
                second: 2
            })
        );
    }

    #[test]
    fn polynomial_examples() {
        let p = point(2, &[rational(1, 2), int(-3)], &[int(2), rational(1, 3)]);
        let poly = mp_bernoulli_poly(&p, Convention::Corrected).unwrap();
        assert_eq!(
            poly.eval(&int(0)),
            mp_bernoulli(&p, Convention::Corrected).unwrap()
        );
        let empty = point(0, &[], &[int(7)]);
        assert_eq!(
            mp_bernoulli_poly(&empty, Convention::Corrected)
                .unwrap()
                .coeffs(),
            &[int(7)]
        );
        // n = 1 on [0,1] with α = (0): S(1,1) = 1 so B_1(z) = ∫_0^1 (x - z) dx
        let p = point(1, &[int(0)], &[int(1)]);
        assert_eq!(
            mp_bernoulli_poly(&p, Convention::Corrected)
                .unwrap()
                .coeffs(),
            &[rational(1, 2), int(-1)]
        );
    }

    #[test]
    fn polynomial_generating_function() {
        let alpha = AlphaSeq::new((1..=4).map(int).collect());
        let unit = Lengths::unit(1).unwrap();
        let gf = mp_bernoulli_poly_gf_check(&alpha, &unit, &int(1), 3).unwrap();
        assert!(gf.holds());
        assert!(!gf.literal_holds());
        let at_zero = mp_bernoulli_poly_gf_check(&alpha, &unit, &int(0), 3).unwrap();
        assert_eq!(at_zero, mp_bernoulli_gf_check(&alpha, &unit, 3).unwrap());
    }
}
