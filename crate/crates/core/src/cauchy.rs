//! Multiparameter poly-Cauchy numbers and polynomials of both kinds.
//!
//! The `*_def` functions integrate the defining product directly (expand in the
//! single indeterminate `T = x_1⋯x_k`, then integrate monomials over the box);
//! every other route goes through connection tables and must agree exactly.

use std::fmt;
use std::str::FromStr;

use crate::algebra::{box_integral_monomial, poly_definite_integral, Polynomial, TruncatedSeries};
use crate::error::{Error, Result};
use crate::scalar::{binomial, factorial, from_usize, pow, sign, Scalar};
use crate::stirling::{
    absolute_comtet_first, comtet_first, lah_signed, noncentral_first, noncentral_second,
    signless_comtet_first, stirling_first, AlphaSeq, CoeffTable, Lengths,
};

/// The tuple `(n, k, α, L)`; `k` is the number of lengths.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FamilyPoint<T> {
    pub n: usize,
    pub alpha: AlphaSeq<T>,
    pub lengths: Lengths<T>,
}

impl<T: Scalar> FamilyPoint<T> {
    pub fn new(n: usize, k: usize, alpha: AlphaSeq<T>, lengths: Lengths<T>) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidK);
        }
        if lengths.k() != k {
            return Err(Error::LengthCount {
                expected: k,
                found: lengths.k(),
            });
        }
        alpha.prefix(n)?;
        Ok(Self { n, alpha, lengths })
    }

    /// `α = (0, 1, …, n-1)` on the unit cube.
    pub fn classical(n: usize, k: usize) -> Result<Self> {
        Self::new(n, k, AlphaSeq::classical(n), Lengths::unit(k)?)
    }

    pub fn k(&self) -> usize {
        self.lengths.k()
    }

    /// `ℓ_1 ℓ_2 ⋯ ℓ_k`
    pub fn volume(&self) -> T {
        self.lengths.product()
    }

    /// `α_0, …, α_{n-1}`
    pub fn active_alpha(&self) -> &[T] {
        self.alpha
            .prefix(self.n)
            .expect("validated on construction")
    }

    pub fn with_alpha(&self, alpha: AlphaSeq<T>) -> Result<Self> {
        Self::new(self.n, self.k(), alpha, self.lengths.clone())
    }

    pub fn with_n(&self, n: usize) -> Result<Self> {
        Self::new(n, self.k(), self.alpha.clone(), self.lengths.clone())
    }

    /// `(ℓ_1⋯ℓ_k)^{m+1} / (m+1)^k`, the box integral of `T^m` in closed form.
    pub fn moment(&self, m: usize) -> T {
        moment(&self.volume(), self.k(), m)
    }
}

pub(crate) fn moment<T: Scalar>(volume: &T, k: usize, m: usize) -> T {
    pow(volume, m + 1) / pow(&from_usize::<T>(m + 1), k)
}

/// Integrates a polynomial in `T = x_1⋯x_k` over the box, monomial by monomial.
fn box_integral<T: Scalar>(p: &Polynomial<T>, lengths: &Lengths<T>) -> T {
    p.apply_linear(|m| {
        box_integral_monomial(m, lengths.as_slice(), lengths.k()).expect("k matches lengths")
    })
}

fn row_sum<T: Scalar, F: Fn(usize) -> T>(row: &[T], weight: F) -> T {
    row.iter()
        .enumerate()
        .fold(T::zero(), |acc, (m, c)| acc + c.clone() * weight(m))
}

/// `C_{n,L}^{(k)}(α) = ∫_box ∏_{i<n} (x_1⋯x_k - α_i)`.
pub fn mp_first_def<T: Scalar>(p: &FamilyPoint<T>) -> T {
    box_integral(&Polynomial::from_roots(p.active_alpha()), &p.lengths)
}

/// `Σ_m s_α(n,m) (ℓ_1⋯ℓ_k)^{m+1} / (m+1)^k`.
pub fn mp_first_closed<T: Scalar>(p: &FamilyPoint<T>) -> Result<T> {
    let s = comtet_first(&p.alpha, p.n)?;
    Ok(row_sum(s.row(p.n), |m| p.moment(m)))
}

/// `Σ_j Σ_{m≥j} S(n,m;α) s(m,j) (ℓ_1⋯ℓ_k)^{j+1} / (j+1)^k`.
pub fn mp_first_noncentral<T: Scalar>(p: &FamilyPoint<T>) -> Result<T> {
    let noncentral = noncentral_second(&p.alpha, p.n)?;
    let s = stirling_first::<T>(p.n);
    let n = p.n;
    Ok((0..=n).fold(T::zero(), |acc, j| {
        let inner = (j..=n).fold(T::zero(), |a, m| a + noncentral.get(n, m) * s.get(m, j));
        acc + inner * p.moment(j)
    }))
}

/// Classical-parameter poly-Cauchy number on a general box:
/// `C_{m,L}^{(k)} = Σ_j s(m,j) (ℓ_1⋯ℓ_k)^{j+1} / (j+1)^k`.
pub fn poly_cauchy_on_box<T: Scalar>(m: usize, lengths: &Lengths<T>) -> T {
    let s = stirling_first::<T>(m);
    let volume = lengths.product();
    row_sum(s.row(m), |j| moment(&volume, lengths.k(), j))
}

/// `C_n^{(k)} = Σ_m s(n,m) / (m+1)^k`.
pub fn poly_cauchy<T: Scalar>(n: usize, k: usize) -> T {
    let s = stirling_first::<T>(n);
    row_sum(s.row(n), |m| T::one() / pow(&from_usize::<T>(m + 1), k))
}

/// `Σ_m S(n,m;α) C_{m,L}^{(k)}`, the non-central expansion with the summation
/// index inside the poly-Cauchy factor and the box carried through.
pub fn mp_first_via_polycauchy<T: Scalar>(p: &FamilyPoint<T>) -> Result<T> {
    let noncentral = noncentral_second(&p.alpha, p.n)?;
    Ok(row_sum(noncentral.row(p.n), |m| {
        poly_cauchy_on_box(m, &p.lengths)
    }))
}

/// The same sum read literally: `Σ_m S(n,m;α) C_n^{(k)}` on the unit cube.
pub fn mp_first_via_polycauchy_literal<T: Scalar>(p: &FamilyPoint<T>) -> Result<T> {
    let noncentral = noncentral_second(&p.alpha, p.n)?;
    let c = poly_cauchy::<T>(p.n, p.k());
    Ok(row_sum(noncentral.row(p.n), |_| c.clone()))
}

/// `H^{(1)}, …, H^{(M)}` with `H^{(j)} = Σ_{i<n} α_i^{-j}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HarmonicVector<T>(Vec<T>);

impl<T: Scalar> HarmonicVector<T> {
    pub fn new(alpha: &AlphaSeq<T>, n: usize, upto: usize) -> Result<Self> {
        alpha.require_nonzero(n)?;
        let inverses: Vec<T> = alpha
            .prefix(n)?
            .iter()
            .map(|a| T::one() / a.clone())
            .collect();
        Ok(Self(
            (1..=upto)
                .map(|j| inverses.iter().fold(T::zero(), |acc, x| acc + pow(x, j)))
                .collect(),
        ))
    }

    /// `H^{(j)}` for `j ≥ 1`.
    pub fn get(&self, j: usize) -> &T {
        &self.0[j - 1]
    }

    pub fn as_slice(&self) -> &[T] {
        &self.0
    }

    pub fn negated(&self) -> Vec<T> {
        self.0.iter().map(|h| -h.clone()).collect()
    }
}

/// Coefficient of `t^m` in `exp(Σ_{j≥1} x_j t^j / j)`.
pub fn modified_bell<T: Scalar>(m: usize, xs: &[T]) -> Result<T> {
    if xs.len() < m {
        return Err(Error::TooFewArguments {
            needed: m,
            found: xs.len(),
        });
    }
    let exponent = TruncatedSeries::from_fn(m, |j| match j {
        0 => T::zero(),
        _ => xs[j - 1].clone() / from_usize::<T>(j),
    });
    Ok(exponent.exp()?.coeff(m))
}

/// `(-1)^n ∏α_i Σ_{m≤n} P_m(-H^{(1)}, …, -H^{(m)}) (ℓ_1⋯ℓ_k)^{m+1} / (m+1)^k`.
///
/// Undefined when any active `α_i` is zero.
pub fn mp_first_bell<T: Scalar>(p: &FamilyPoint<T>) -> Result<T> {
    let n = p.n;
    let harmonic = HarmonicVector::new(&p.alpha, n, n)?.negated();
    // all P_m for m ≤ n from one exponential
    let exponent = TruncatedSeries::from_fn(n, |j| match j {
        0 => T::zero(),
        _ => harmonic[j - 1].clone() / from_usize::<T>(j),
    });
    let bell = exponent.exp()?;
    let product = p
        .active_alpha()
        .iter()
        .fold(T::one(), |acc, a| acc * a.clone());
    let sum = (0..=n).fold(T::zero(), |acc, m| acc + bell.coeff(m) * p.moment(m));
    Ok(sign::<T>(n) * product * sum)
}

/// `Ĉ_{n,L}^{(k)}(α) = ∫_box ∏_{i<n} (-x_1⋯x_k - α_i)`.
pub fn mp_second_def<T: Scalar>(p: &FamilyPoint<T>) -> T {
    let integrand: Polynomial<T> = p
        .active_alpha()
        .iter()
        .map(|a| Polynomial::new(vec![-a.clone(), -T::one()]))
        .product();
    box_integral(&integrand, &p.lengths)
}

/// `Σ_m (-1)^n |s_α|(n,m) (ℓ_1⋯ℓ_k)^{m+1} / (m+1)^k` with `|s_α|` the
/// coefficients of `∏(x + α_i)`.
pub fn mp_second_closed<T: Scalar>(p: &FamilyPoint<T>) -> Result<T> {
    let signless = signless_comtet_first(&p.alpha, p.n)?;
    Ok(sign::<T>(p.n) * row_sum(signless.row(p.n), |m| p.moment(m)))
}

/// [`mp_second_closed`] with `|s_α(n,m)|` taken as an absolute value.
pub fn mp_second_closed_abs<T: Scalar>(p: &FamilyPoint<T>) -> Result<T> {
    let abs = absolute_comtet_first(&p.alpha, p.n)?;
    Ok(sign::<T>(p.n) * row_sum(abs.row(p.n), |m| p.moment(m)))
}

fn lah_sum<T: Scalar, F: Fn(usize) -> T>(p: &FamilyPoint<T>, cauchy: F) -> Result<T> {
    let n = p.n;
    let noncentral = noncentral_first(&p.alpha, n)?;
    let lah = lah_signed::<T>(n);
    Ok((0..=n).fold(T::zero(), |acc, l| {
        let inner = (l..=n).fold(T::zero(), |a, m| a + noncentral.get(n, m) * lah.get(m, l));
        acc + inner * cauchy(l)
    }))
}

/// `Σ_ℓ Σ_{m≥ℓ} s(n,m;α) L(m,ℓ) C_{ℓ,L}^{(k)}` with signed Lah numbers.
pub fn mp_second_lah<T: Scalar>(p: &FamilyPoint<T>) -> Result<T> {
    lah_sum(p, |l| poly_cauchy_on_box(l, &p.lengths))
}

/// The Lah expansion with unit-cube poly-Cauchy factors `C_ℓ^{(k)}`.
pub fn mp_second_lah_literal<T: Scalar>(p: &FamilyPoint<T>) -> Result<T> {
    lah_sum(p, |l| poly_cauchy::<T>(l, p.k()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    First,
    Second,
}

/// Named specializations of the multiparameter families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// Cauchy numbers: `α = (0,1,…)`, `k = 1`, `ℓ = 1`.
    Classic,
    /// Poly-Cauchy numbers: `α = (0,1,…)` on the unit cube.
    Poly,
    /// Poly-Cauchy numbers with a `q` parameter: `α = (0,q,2q,…)` on the unit cube.
    QPoly,
    /// Cauchy numbers with a `q` parameter: `α = (0,q,2q,…)`, `k = 1`, `ℓ = 1`.
    QClassic,
    /// Extended `q` family: `α = (0,q,2q,…)` on a general box.
    ExtendedQ,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::Classic,
        Family::Poly,
        Family::QPoly,
        Family::QClassic,
        Family::ExtendedQ,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Classic => "classic",
            Family::Poly => "poly",
            Family::QPoly => "q-poly",
            Family::QClassic => "q-classic",
            Family::ExtendedQ => "extended-q",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::UnknownKind(s.to_string()))
    }
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "first" | "1" => Ok(Kind::First),
            "second" | "2" => Ok(Kind::Second),
            other => Err(Error::UnknownKind(other.to_string())),
        }
    }
}

/// Builds the `FamilyPoint` a specialization denotes.
pub fn special_point<T: Scalar>(
    family: Family,
    n: usize,
    k: usize,
    q: &T,
    lengths: &Lengths<T>,
) -> Result<FamilyPoint<T>> {
    match family {
        Family::Classic => FamilyPoint::new(n, 1, AlphaSeq::classical(n), Lengths::unit(1)?),
        Family::Poly => FamilyPoint::new(n, k, AlphaSeq::classical(n), Lengths::unit(k)?),
        Family::QPoly => FamilyPoint::new(n, k, AlphaSeq::arithmetic(n, q), Lengths::unit(k)?),
        Family::QClassic => FamilyPoint::new(n, 1, AlphaSeq::arithmetic(n, q), Lengths::unit(1)?),
        Family::ExtendedQ => {
            FamilyPoint::new(n, lengths.k(), AlphaSeq::arithmetic(n, q), lengths.clone())
        }
    }
}

/// Evaluates a named specialization through the multiparameter definition.
pub fn specialize<T: Scalar>(
    family: Family,
    kind: Kind,
    n: usize,
    k: usize,
    q: &T,
    lengths: &Lengths<T>,
) -> Result<T> {
    let point = special_point(family, n, k, q, lengths)?;
    Ok(match kind {
        Kind::First => mp_first_def(&point),
        Kind::Second => mp_second_def(&point),
    })
}

/// The same specialization from the classical formulas: single-variable
/// integrals of `(±x)_n` for the Cauchy numbers, and
/// `Σ_m (±1) s(n,m) q^{n-m} (ℓ_1⋯ℓ_k)^{m+1} / (m+1)^k` otherwise.
pub fn classical_reference<T: Scalar>(
    family: Family,
    kind: Kind,
    n: usize,
    k: usize,
    q: &T,
    lengths: &Lengths<T>,
) -> Result<T> {
    let falling = Polynomial::from_roots(AlphaSeq::<T>::classical(n).as_slice());
    if family == Family::Classic {
        let integrand = match kind {
            Kind::First => falling,
            Kind::Second => falling.reflect(),
        };
        return Ok(poly_definite_integral(&integrand, &T::one()));
    }
    let (q, k, volume) = match family {
        Family::Poly => (T::one(), k, T::one()),
        Family::QPoly => (q.clone(), k, T::one()),
        Family::QClassic => (q.clone(), 1, T::one()),
        Family::ExtendedQ => (q.clone(), lengths.k(), lengths.product()),
        Family::Classic => unreachable!(),
    };
    let s = stirling_first::<T>(n);
    let sum = (0..=n).fold(T::zero(), |acc, m| {
        let coeff = match kind {
            Kind::First => s.get(n, m),
            Kind::Second => sign::<T>(n) * s.get(n, m).abs(),
        };
        acc + coeff * pow(&q, n - m) * moment(&volume, k, m)
    });
    Ok(sum)
}

/// `Lif_k(z) = Σ_m z^m / (m! (m+1)^k)` truncated at `order`.
pub fn lif_series<T: Scalar>(k: usize, order: usize) -> TruncatedSeries<T> {
    TruncatedSeries::from_fn(order, |m| {
        T::one() / (factorial::<T>(m) * pow(&from_usize::<T>(m + 1), k))
    })
}

/// Both sides of `Lif_k(ln(1+t)) = Σ C_n^{(k)} t^n / n!` as egf coefficient lists.
pub fn lif_gf_sides<T: Scalar>(k: usize, order: usize) -> Result<(Vec<T>, Vec<T>)> {
    let composed = lif_series::<T>(k, order).compose(&TruncatedSeries::log1p(order))?;
    let lhs = (0..=order).map(|n| composed.egf_coeff(n)).collect();
    let unit = Lengths::unit(k)?;
    let rhs = (0..=order)
        .map(|n| specialize(Family::Poly, Kind::First, n, k, &T::one(), &unit))
        .collect::<Result<_>>()?;
    Ok((lhs, rhs))
}

pub fn lif_gf_check<T: Scalar>(k: usize, order: usize) -> Result<bool> {
    let (lhs, rhs) = lif_gf_sides::<T>(k, order)?;
    Ok(lhs == rhs)
}

/// Shared shape of the polynomial expansions:
/// `Σ_i Σ_{m≥i} (-1)^i C(m,i) row[m] (ℓ_1⋯ℓ_k)^{m-i+1} / (m-i+1)^k z^i`.
fn binomial_expansion<T: Scalar>(p: &FamilyPoint<T>, row: &[T]) -> Polynomial<T> {
    let n = row.len() - 1;
    Polynomial::new(
        (0..=n)
            .map(|i| {
                let sum = (i..=n).fold(T::zero(), |acc, m| {
                    acc + binomial::<T>(m, i) * row[m].clone() * p.moment(m - i)
                });
                sign::<T>(i) * sum
            })
            .collect(),
    )
}

/// `C_{n,L}^{(k)}(z;α)` as a polynomial in `z`, from the generalized Stirling
/// numbers of the first kind.
pub fn mp_poly_first<T: Scalar>(p: &FamilyPoint<T>) -> Result<Polynomial<T>> {
    let s = comtet_first(&p.alpha, p.n)?;
    Ok(binomial_expansion(p, s.row(p.n)))
}

/// `C_{n,L}^{(k)}(z;α)` at one point: the first-kind definition with `α_i + z`.
pub fn mp_poly_first_oracle<T: Scalar>(p: &FamilyPoint<T>, z: &T) -> Result<T> {
    Ok(mp_first_def(&p.with_alpha(p.alpha.shifted(z))?))
}

fn second_kind_expansion<T: Scalar>(p: &FamilyPoint<T>, table: &CoeffTable<T>) -> Polynomial<T> {
    binomial_expansion(p, table.row(p.n)).scale(&sign::<T>(p.n))
}

/// `Ĉ_{n,L}^{(k)}(z;α)` from the signless generalized Stirling numbers.
pub fn mp_poly_second<T: Scalar>(p: &FamilyPoint<T>) -> Result<Polynomial<T>> {
    Ok(second_kind_expansion(
        p,
        &signless_comtet_first(&p.alpha, p.n)?,
    ))
}

/// [`mp_poly_second`] with `|s_α(n,m)|` taken as an absolute value.
pub fn mp_poly_second_abs<T: Scalar>(p: &FamilyPoint<T>) -> Result<Polynomial<T>> {
    Ok(second_kind_expansion(
        p,
        &absolute_comtet_first(&p.alpha, p.n)?,
    ))
}

/// `Ĉ_{n,L}^{(k)}(z;α)` at one point: the second-kind definition with `α_i - z`.
pub fn mp_poly_second_oracle<T: Scalar>(p: &FamilyPoint<T>, z: &T) -> Result<T> {
    Ok(mp_second_def(&p.with_alpha(p.alpha.shifted(&-z.clone()))?))
}

/// The `k = 1` polynomials on `[0, ℓ]`.
pub fn generalized_cauchy_poly<T: Scalar>(
    kind: Kind,
    n: usize,
    alpha: &AlphaSeq<T>,
    ell: &T,
) -> Result<Polynomial<T>> {
    let point = FamilyPoint::new(n, 1, alpha.clone(), Lengths::new(vec![ell.clone()])?)?;
    match kind {
        Kind::First => mp_poly_first(&point),
        Kind::Second => mp_poly_second(&point),
    }
}

/// `0, 1, -1, 2, -2, …`, the first `count` integers by absolute value.
pub fn z_sample_points<T: Scalar>(count: usize) -> Vec<T> {
    (0..count)
        .map(|i| {
            let magnitude = from_usize::<T>(i.div_ceil(2));
            if i % 2 == 1 {
                magnitude
            } else {
                -magnitude
            }
        })
        .collect()
}

/// Compares a polynomial against point evaluations at `degree + 1` sample points.
pub fn agrees_with_oracle<T, F>(poly: &Polynomial<T>, degree: usize, oracle: F) -> Result<bool>
where
    T: Scalar,
    F: Fn(&T) -> Result<T>,
{
    for z in z_sample_points::<T>(degree + 1) {
        if poly.eval(&z) != oracle(&z)? {
            return Ok(false);
        }
    }
    Ok(true)
}
