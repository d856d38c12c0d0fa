use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::Error;

/// One checkable statement: a theorem, corollary, generating function or
/// specialization list.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdentityId {
    T2_1,
    C2_1,
    T2_2,
    C2_2,
    T2_3,
    T2_4,
    T3_1,
    C3_1,
    T3_2,
    C3_2,
    T4_1,
    T4_2a,
    T4_2b,
    C4_1a,
    C4_1b,
    T4_3a,
    T4_3b,
    C4_2a,
    C4_2b,
    T5_1a,
    T5_1b,
    C5_1a,
    C5_1b,
    T5_2a,
    T5_2b,
    T5_2c,
    T5_2d,
    GfLif,
    GfLi,
    Cases2,
    Cases3,
}

use IdentityId::*;

/// Which inputs an identity consumes, so the grid knows how to sample it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shape {
    /// Numbers at `(n, k, α, L)`.
    Number,
    /// Polynomials in `z` at `(n, k, α, L)`, plus an optional extra point `z0`.
    Polynomial,
    /// A series comparison at `(k, order)` with no free parameters.
    ClassicalSeries,
    /// A series comparison at `(k, α, L, order)` with distinct `α`.
    ParametricSeries,
    /// Specializations at `(n, k, q, L)`.
    Specialization,
}

impl IdentityId {
    pub const ALL: [IdentityId; 31] = [
        T2_1, C2_1, T2_2, C2_2, T2_3, T2_4, T3_1, C3_1, T3_2, C3_2, T4_1, T4_2a, T4_2b, C4_1a,
        C4_1b, T4_3a, T4_3b, C4_2a, C4_2b, T5_1a, T5_1b, C5_1a, C5_1b, T5_2a, T5_2b, T5_2c, T5_2d,
        GfLif, GfLi, Cases2, Cases3,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            T2_1 => "T2.1",
            C2_1 => "C2.1",
            T2_2 => "T2.2",
            C2_2 => "C2.2",
            T2_3 => "T2.3",
            T2_4 => "T2.4",
            T3_1 => "T3.1",
            C3_1 => "C3.1",
            T3_2 => "T3.2",
            C3_2 => "C3.2",
            T4_1 => "T4.1",
            T4_2a => "T4.2a",
            T4_2b => "T4.2b",
            C4_1a => "C4.1a",
            C4_1b => "C4.1b",
            T4_3a => "T4.3a",
            T4_3b => "T4.3b",
            C4_2a => "C4.2a",
            C4_2b => "C4.2b",
            T5_1a => "T5.1a",
            T5_1b => "T5.1b",
            C5_1a => "C5.1a",
            C5_1b => "C5.1b",
            T5_2a => "T5.2a",
            T5_2b => "T5.2b",
            T5_2c => "T5.2c",
            T5_2d => "T5.2d",
            GfLif => "GF-Lif",
            GfLi => "GF-Li",
            Cases2 => "CASES-2",
            Cases3 => "CASES-3",
        }
    }

    pub fn index(self) -> usize {
        self as usize
    }

    /// Corollaries are the `k = 1` forms of their theorems.
    pub fn fixes_k_to_one(self) -> bool {
        matches!(
            self,
            C2_1 | C2_2 | C3_1 | C3_2 | C4_1a | C4_1b | C4_2a | C4_2b | C5_1a | C5_1b
        )
    }

    pub fn shape(self) -> Shape {
        match self {
            T5_1a | T5_1b | C5_1a | C5_1b | T5_2a | T5_2b | T5_2c | T5_2d => Shape::Polynomial,
            GfLif | GfLi => Shape::ClassicalSeries,
            T4_1 => Shape::ParametricSeries,
            Cases2 | Cases3 => Shape::Specialization,
            _ => Shape::Number,
        }
    }

    /// What the identity asserts, in words.
    pub fn statement(self) -> &'static str {
        match self {
            T2_1 | C2_1 => "first-kind numbers as a Comtet (generalized Stirling first kind) sum",
            T2_2 | C2_2 => {
                "first-kind numbers via non-central Stirling and classical Stirling numbers"
            }
            T2_3 => "first-kind numbers via non-central Stirling and poly-Cauchy numbers",
            T2_4 => "first-kind numbers via modified Bell polynomials of harmonic numbers",
            T3_1 | C3_1 => "second-kind numbers via signless Comtet numbers",
            T3_2 | C3_2 => {
                "second-kind numbers via non-central Stirling, Lah and poly-Cauchy numbers"
            }
            T4_1 => "exponential generating function of multiparameter poly-Bernoulli numbers",
            T4_2a | C4_1a => "second-kind numbers from multiparameter poly-Bernoulli numbers",
            T4_2b | C4_1b => "multiparameter poly-Bernoulli numbers from second-kind numbers",
            T4_3a | C4_2a => "first-kind numbers from multiparameter poly-Bernoulli numbers",
            T4_3b | C4_2b => "multiparameter poly-Bernoulli numbers from first-kind numbers",
            T5_1a | C5_1a => "first-kind polynomials via Comtet numbers",
            T5_1b | C5_1b => "second-kind polynomials via signless Comtet numbers",
            T5_2a => "poly-Bernoulli polynomials from first-kind polynomials",
            T5_2b => "poly-Bernoulli polynomials from second-kind polynomials",
            T5_2c => "first-kind polynomials from poly-Bernoulli polynomials",
            T5_2d => "second-kind polynomials from poly-Bernoulli polynomials",
            GfLif => "Lif_k(ln(1+t)) generates the poly-Cauchy numbers",
            GfLi => "Li_k(1-e^{-t})/(1-e^{-t}) generates the poly-Bernoulli numbers",
            Cases2 => "first-kind specializations (cases 1-5)",
            Cases3 => "second-kind specializations (cases 1-5)",
        }
    }

    /// The reading used in corrected mode where it differs from the printed one.
    pub fn corrected_reading(self) -> &'static str {
        match self {
            T2_3 => "sum S(n,m;a) C_{m,L}^{(k)}: index m inside the poly-Cauchy factor, which carries the box lengths",
            T3_1 | C3_1 | T5_1b | C5_1b => {
                "|s_a(n,m)| read as the coefficients of prod(x + a_i), not as absolute values of s_a(n,m)"
            }
            T3_2 | C3_2 => "poly-Cauchy factors C_{l,L}^{(k)} carry the box lengths; the summation index is renamed away from l_1",
            T4_1 => "single m! in the number definition; printed ranges read with the unbound n as the truncation order",
            T4_2a | C4_1a => "sign (-1)^{n+m+j} and single-m! poly-Bernoulli numbers",
            T4_2b | C4_1b => "sign (-1)^n and factor m! in place of 1/m!",
            T4_3a | C4_2a => "sign (-1)^{m+j} and single-m! poly-Bernoulli numbers",
            T4_3b | C4_2b => "factor m! in place of 1/m!",
            T5_2b => "sign (-1)^n in place of (-1)^{n-m}",
            T5_2c => "sign (-1)^{m+j}",
            T5_2d => "sign (-1)^{n+m+j}",
            Cases2 | Cases3 => "cases 4 and 5 hold on the unit interval only (l = 1)",
            _ => "as printed",
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        IdentityId::ALL
            .into_iter()
            .find(|id| id.tag().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::UnknownKind(s.to_string()))
    }
}

impl Serialize for IdentityId {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.tag())
    }
}

/// Parses `"all"` or a comma-separated tag list into a sorted, deduplicated set.
pub fn parse_ids(text: &str) -> Result<Vec<IdentityId>, Error> {
    if text.trim().eq_ignore_ascii_case("all") {
        return Ok(IdentityId::ALL.to_vec());
    }
    let mut ids = text
        .split(',')
        .filter(|s| !s.trim().is_empty())
        .map(str::parse)
        .collect::<Result<Vec<IdentityId>, _>>()?;
    ids.sort();
    ids.dedup();
    Ok(ids)
}
