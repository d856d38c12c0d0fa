//! Connection coefficients between polynomial bases.
//!
//! Every named triangle (Comtet, classical Stirling, Lah, non-central) is a
//! thin wrapper over [`connection_coeffs`]; the recurrences and closed forms
//! in this module exist to cross-check that one kernel.

use std::hash::Hash;

use num_traits::{One, Zero};

use crate::algebra::Polynomial;
use crate::error::{Error, Result};
use crate::scalar::{binomial, factorial, from_usize, pow, sign, Scalar};

/// Parameter vector `(α_0, …, α_{n-1})`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct AlphaSeq<T>(Vec<T>);

impl<T: Scalar> AlphaSeq<T> {
    pub fn new(entries: Vec<T>) -> Self {
        Self(entries)
    }

    /// `(0, 1, …, n-1)`, which turns `(x;α)_n` into the falling factorial.
    pub fn classical(n: usize) -> Self {
        Self((0..n).map(from_usize).collect())
    }

    /// `(0, q, 2q, …, (n-1)q)`
    pub fn arithmetic(n: usize, q: &T) -> Self {
        Self((0..n).map(|i| from_usize::<T>(i) * q.clone()).collect())
    }

    /// `(α_0 + delta, α_1 + delta, …)`
    pub fn shifted(&self, delta: &T) -> Self {
        Self(self.0.iter().map(|a| a.clone() + delta.clone()).collect())
    }

    pub fn negated(&self) -> Self {
        Self(self.0.iter().map(|a| -a.clone()).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[T] {
        &self.0
    }

    /// The first `n` entries, or an error when fewer exist.
    pub fn prefix(&self, n: usize) -> Result<&[T]> {
        self.0.get(..n).ok_or(Error::AlphaTooShort {
            needed: n,
            found: self.0.len(),
        })
    }

    pub fn truncated(&self, n: usize) -> Self {
        Self(self.0.iter().take(n).cloned().collect())
    }

    pub fn all_nonnegative(&self, n: usize) -> bool {
        self.0.iter().take(n).all(|a| !a.is_negative())
    }

    /// Errors with the first zero among the first `n` entries.
    pub fn require_nonzero(&self, n: usize) -> Result<()> {
        match self.prefix(n)?.iter().position(Zero::is_zero) {
            Some(index) => Err(Error::ZeroAlpha { index }),
            None => Ok(()),
        }
    }

    /// Errors with the first coinciding pair among the first `n` entries.
    pub fn require_distinct(&self, n: usize) -> Result<()> {
        let head = self.prefix(n)?;
        for (second, b) in head.iter().enumerate() {
            if let Some(first) = head[..second].iter().position(|a| a == b) {
                return Err(Error::RepeatedAlpha { first, second });
            }
        }
        Ok(())
    }
}

impl<T> From<Vec<T>> for AlphaSeq<T> {
    fn from(entries: Vec<T>) -> Self {
        Self(entries)
    }
}

/// Box side lengths `(ℓ_1, …, ℓ_k)`, all nonzero, `k ≥ 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Lengths<T>(Vec<T>);

impl<T: Scalar> Lengths<T> {
    pub fn new(entries: Vec<T>) -> Result<Self> {
        if entries.is_empty() || entries.iter().any(Zero::is_zero) {
            return Err(Error::InvalidLengths);
        }
        Ok(Self(entries))
    }

    /// The unit cube `(1, …, 1)` in `k` dimensions.
    pub fn unit(k: usize) -> Result<Self> {
        Self::new(vec![T::one(); k])
    }

    pub fn k(&self) -> usize {
        self.0.len()
    }

    pub fn as_slice(&self) -> &[T] {
        &self.0
    }

    /// `ℓ_1 ℓ_2 ⋯ ℓ_k`
    pub fn product(&self) -> T {
        self.0.iter().fold(T::one(), |acc, l| acc * l.clone())
    }

    pub fn is_unit(&self) -> bool {
        self.0.iter().all(One::is_one)
    }
}

/// A polynomial basis `{b_n}` with `deg b_n = n` and leading coefficient `±1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum BasisSpec<T> {
    /// `x^n`
    Monomial,
    /// `(x)_n = x(x-1)⋯(x-n+1)`
    FallingFactorial,
    /// `(-x)_n`
    NegatedFallingFactorial,
    /// `(x;α)_n = ∏_{i<n} (x - α_i)`
    Multiparam(AlphaSeq<T>),
}

impl<T: Scalar> BasisSpec<T> {
    /// The `n`-th basis element expanded in monomials.
    pub fn element(&self, n: usize) -> Result<Polynomial<T>> {
        Ok(match self {
            Self::Monomial => Polynomial::monomial(T::one(), n),
            Self::FallingFactorial => Polynomial::from_roots(AlphaSeq::classical(n).as_slice()),
            Self::NegatedFallingFactorial => {
                Polynomial::from_roots(AlphaSeq::classical(n).as_slice()).reflect()
            }
            Self::Multiparam(alpha) => Polynomial::from_roots(alpha.prefix(n)?),
        })
    }

    fn require(&self, size: usize) -> Result<()> {
        match self {
            Self::Multiparam(alpha) => alpha.prefix(size).map(|_| ()),
            _ => Ok(()),
        }
    }

    fn truncated(&self, size: usize) -> Self {
        match self {
            Self::Multiparam(alpha) => Self::Multiparam(alpha.truncated(size)),
            other => other.clone(),
        }
    }
}

/// Lower-triangular table with rows `0..=size`; row `n` has `n + 1` entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoeffTable<T> {
    rows: Vec<Vec<T>>,
}

impl<T: Scalar> CoeffTable<T> {
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        debug_assert!(rows.iter().enumerate().all(|(n, r)| r.len() == n + 1));
        Self { rows }
    }

    pub fn from_fn<F: FnMut(usize, usize) -> T>(size: usize, mut f: F) -> Self {
        Self {
            rows: (0..=size)
                .map(|n| (0..=n).map(|m| f(n, m)).collect())
                .collect(),
        }
    }

    pub fn identity(size: usize) -> Self {
        Self::from_fn(size, |n, m| if n == m { T::one() } else { T::zero() })
    }

    pub fn size(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn rows(&self) -> &[Vec<T>] {
        &self.rows
    }

    pub fn row(&self, n: usize) -> &[T] {
        &self.rows[n]
    }

    /// Entry `(n, m)`; zero above the diagonal.
    pub fn get(&self, n: usize, m: usize) -> T {
        self.rows
            .get(n)
            .and_then(|r| r.get(m))
            .cloned()
            .unwrap_or_else(T::zero)
    }

    pub fn map<F: FnMut(usize, usize, &T) -> T>(&self, mut f: F) -> Self {
        Self::from_fn(self.size(), |n, m| f(n, m, &self.rows[n][m]))
    }

    /// Matrix product over the common size.
    pub fn matmul(&self, other: &Self) -> Self {
        let size = self.size().min(other.size());
        Self::from_fn(size, |n, m| {
            (m..=n).fold(T::zero(), |acc, j| acc + self.get(n, j) * other.get(j, m))
        })
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.size())
    }
}

/// Memoization key: one table per basis pair, parameter prefix and size.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TableKey<T> {
    pub from: BasisSpec<T>,
    pub to: BasisSpec<T>,
    pub size: usize,
}

/// Table `T` with `from_n(x) = Σ_m T(n,m) to_m(x)` for every `n ≤ size`.
///
/// Each `from_n` is expanded into monomials and then peeled off against the
/// target basis from the top degree down.
pub fn connection_coeffs<T: Scalar>(
    from: &BasisSpec<T>,
    to: &BasisSpec<T>,
    size: usize,
) -> Result<CoeffTable<T>> {
    from.require(size)?;
    to.require(size)?;
    let key = TableKey {
        from: from.truncated(size),
        to: to.truncated(size),
        size,
    };
    let mut failure = None;
    let table = T::cached_table(&key, || match build_connection(&key) {
        Ok(table) => table,
        Err(err) => {
            failure = Some(err);
            CoeffTable::identity(0)
        }
    });
    match failure {
        Some(err) => Err(err),
        None => Ok(table),
    }
}

fn build_connection<T: Scalar>(key: &TableKey<T>) -> Result<CoeffTable<T>> {
    let targets = (0..=key.size)
        .map(|m| key.to.element(m))
        .collect::<Result<Vec<_>>>()?;
    let mut rows = Vec::with_capacity(key.size + 1);
    for n in 0..=key.size {
        let mut rest = key.from.element(n)?;
        let mut row = vec![T::zero(); n + 1];
        for m in (0..=n).rev() {
            let lead = targets[m].coeff(m);
            let c = rest.coeff(m) / lead;
            if !c.is_zero() {
                rest = &rest - &targets[m].scale(&c);
            }
            row[m] = c;
        }
        debug_assert!(rest.is_zero());
        rows.push(row);
    }
    Ok(CoeffTable::from_rows(rows))
}

/// `s_α(n,m)`: `(x;α)_n = Σ_m s_α(n,m) x^m`.
pub fn comtet_first<T: Scalar>(alpha: &AlphaSeq<T>, size: usize) -> Result<CoeffTable<T>> {
    connection_coeffs(
        &BasisSpec::Multiparam(alpha.clone()),
        &BasisSpec::Monomial,
        size,
    )
}

/// `s_α(n+1,m) = s_α(n,m-1) - α_n s_α(n,m)`, `s_α(0,0) = 1`.
pub fn comtet_first_recurrence<T: Scalar>(
    alpha: &AlphaSeq<T>,
    size: usize,
) -> Result<CoeffTable<T>> {
    let alpha = alpha.prefix(size)?;
    let mut rows = vec![vec![T::one()]];
    for n in 0..size {
        let prev = &rows[n];
        let row = (0..=n + 1)
            .map(|m| {
                let shifted = if m > 0 {
                    prev[m - 1].clone()
                } else {
                    T::zero()
                };
                let kept = prev.get(m).cloned().unwrap_or_else(T::zero);
                shifted - alpha[n].clone() * kept
            })
            .collect();
        rows.push(row);
    }
    Ok(CoeffTable::from_rows(rows))
}

/// `S_α(n,m)`: `x^n = Σ_m S_α(n,m) (x;α)_m`.
pub fn comtet_second<T: Scalar>(alpha: &AlphaSeq<T>, size: usize) -> Result<CoeffTable<T>> {
    connection_coeffs(
        &BasisSpec::Monomial,
        &BasisSpec::Multiparam(alpha.clone()),
        size,
    )
}

/// `S_α(n+1,m) = S_α(n,m-1) + α_m S_α(n,m)`, `S_α(0,0) = 1`.
pub fn comtet_second_recurrence<T: Scalar>(
    alpha: &AlphaSeq<T>,
    size: usize,
) -> Result<CoeffTable<T>> {
    let alpha = alpha.prefix(size)?;
    let mut rows = vec![vec![T::one()]];
    for n in 0..size {
        let prev = &rows[n];
        let row = (0..=n + 1)
            .map(|m| {
                let shifted = if m > 0 {
                    prev[m - 1].clone()
                } else {
                    T::zero()
                };
                match prev.get(m) {
                    Some(kept) => shifted + alpha[m].clone() * kept.clone(),
                    None => shifted,
                }
            })
            .collect();
        rows.push(row);
    }
    Ok(CoeffTable::from_rows(rows))
}

/// Lagrange form `S_α(n,m) = Σ_{j≤m} α_j^n / ∏_{i≤m, i≠j} (α_j - α_i)`.
///
/// Needs `α_0, …, α_m` pairwise distinct.
pub fn comtet_second_explicit<T: Scalar>(alpha: &AlphaSeq<T>, n: usize, m: usize) -> Result<T> {
    alpha.require_distinct(m + 1)?;
    let head = alpha.prefix(m + 1)?;
    Ok(head.iter().enumerate().fold(T::zero(), |acc, (j, aj)| {
        let denom = head
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != j)
            .fold(T::one(), |d, (_, ai)| d * (aj.clone() - ai.clone()));
        acc + pow(aj, n) / denom
    }))
}

/// `|s_α|(n,m)`: `∏_{i<n} (x + α_i) = Σ_m |s_α|(n,m) x^m`.
///
/// As polynomial coefficients this always equals `(-1)^{n-m} s_α(n,m)`; it
/// coincides with the entrywise absolute value only when every `α_i ≥ 0`.
pub fn signless_comtet_first<T: Scalar>(alpha: &AlphaSeq<T>, size: usize) -> Result<CoeffTable<T>> {
    connection_coeffs(
        &BasisSpec::Multiparam(alpha.negated()),
        &BasisSpec::Monomial,
        size,
    )
}

/// Entrywise `|s_α(n,m)|`.
pub fn absolute_comtet_first<T: Scalar>(alpha: &AlphaSeq<T>, size: usize) -> Result<CoeffTable<T>> {
    Ok(comtet_first(alpha, size)?.map(|_, _, v| v.abs()))
}

/// Signed Stirling numbers of the first kind `s(n,m)`.
pub fn stirling_first<T: Scalar>(size: usize) -> CoeffTable<T> {
    connection_coeffs(&BasisSpec::FallingFactorial, &BasisSpec::Monomial, size)
        .expect("classical bases need no parameters")
}

/// Stirling numbers of the second kind `S(n,m)`.
pub fn stirling_second<T: Scalar>(size: usize) -> CoeffTable<T> {
    connection_coeffs(&BasisSpec::Monomial, &BasisSpec::FallingFactorial, size)
        .expect("classical bases need no parameters")
}

/// Signed Lah numbers: `(-x)_m = Σ_ℓ L(m,ℓ) (x)_ℓ`.
pub fn lah_signed<T: Scalar>(size: usize) -> CoeffTable<T> {
    connection_coeffs(
        &BasisSpec::NegatedFallingFactorial,
        &BasisSpec::FallingFactorial,
        size,
    )
    .expect("classical bases need no parameters")
}

/// `L(m,ℓ) = (-1)^m (m!/ℓ!) C(m-1, ℓ-1)`, with `L(0,0) = 1`.
pub fn lah_closed<T: Scalar>(m: usize, l: usize) -> T {
    match (m, l) {
        (0, 0) => T::one(),
        (0, _) | (_, 0) => T::zero(),
        _ if l > m => T::zero(),
        _ => sign::<T>(m) * factorial::<T>(m) / factorial::<T>(l) * binomial::<T>(m - 1, l - 1),
    }
}

/// `S(n,m;α)`: `(x;α)_n = Σ_m S(n,m;α) (x)_m`.
pub fn noncentral_second<T: Scalar>(alpha: &AlphaSeq<T>, size: usize) -> Result<CoeffTable<T>> {
    connection_coeffs(
        &BasisSpec::Multiparam(alpha.clone()),
        &BasisSpec::FallingFactorial,
        size,
    )
}

/// `s(n,m;α)` as it enters the second-kind Lah expansion: the same
/// `(y;α)_n → (y)_m` expansion as [`noncentral_second`], read at `y = -x_1⋯x_k`.
pub fn noncentral_first<T: Scalar>(alpha: &AlphaSeq<T>, size: usize) -> Result<CoeffTable<T>> {
    noncentral_second(alpha, size)
}

/// Outcome of the Comtet orthogonality check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InversionReport {
    /// `Σ_j s_α(n,j) S_α(j,m) = δ_{nm}` and the reverse product.
    pub unsigned: bool,
    /// `Σ_j (-1)^{j-m} s_α(n,j) S_α(j,m) = δ_{nm}`.
    pub signed: bool,
}

impl InversionReport {
    pub fn holds(&self) -> bool {
        self.unsigned
    }
}

pub fn inversion_check<T: Scalar>(alpha: &AlphaSeq<T>, size: usize) -> Result<InversionReport> {
    let first = comtet_first(alpha, size)?;
    let second = comtet_second(alpha, size)?;
    let unsigned = first.matmul(&second).is_identity() && second.matmul(&first).is_identity();
    let signed_first = first.map(|_, j, v| sign::<T>(j) * v.clone());
    let signed_second = second.map(|_, m, v| sign::<T>(m) * v.clone());
    let signed = signed_first.matmul(&signed_second).is_identity();
    Ok(InversionReport { unsigned, signed })
}
