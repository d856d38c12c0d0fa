use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::cauchy::FamilyPoint;
use crate::error::Result;
use crate::harness::ids::{IdentityId, Shape};
use crate::scalar::{format_rational, height, int, Rational};
use crate::stirling::{AlphaSeq, Lengths};
use crate::{Alpha, Lens};

/// Parameters for one identity evaluation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamPoint {
    pub n: usize,
    pub k: usize,
    pub alpha: Alpha,
    pub lengths: Lens,
    pub z0: Option<Rational>,
    pub q: Option<Rational>,
    pub order: Option<usize>,
}

impl ParamPoint {
    /// `α = (0, 1, …, n-1)` on the unit cube.
    pub fn classical(n: usize, k: usize) -> Result<Self> {
        Ok(Self {
            n,
            k,
            alpha: AlphaSeq::classical(n),
            lengths: Lengths::unit(k)?,
            z0: None,
            q: None,
            order: None,
        })
    }

    pub fn family_point(&self) -> Result<FamilyPoint<Rational>> {
        FamilyPoint::new(self.n, self.k, self.alpha.clone(), self.lengths.clone())
    }

    /// Ordering key for picking a smallest counterexample: `n`, then `k`,
    /// then the total height of every rational involved.
    pub fn size_key(&self) -> (usize, usize, BigInt) {
        let heights = self
            .alpha
            .as_slice()
            .iter()
            .chain(self.lengths.as_slice())
            .chain(self.z0.iter())
            .chain(self.q.iter())
            .map(height)
            .fold(BigInt::zero(), |acc, h| acc + h);
        (self.n, self.k, heights)
    }
}

impl Serialize for ParamPoint {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let render = |xs: &[Rational]| xs.iter().map(format_rational).collect::<Vec<_>>();
        let mut map = serializer.serialize_map(None)?;
        map.serialize_entry("n", &self.n)?;
        map.serialize_entry("k", &self.k)?;
        map.serialize_entry("alpha", &render(self.alpha.as_slice()))?;
        map.serialize_entry("lengths", &render(self.lengths.as_slice()))?;
        if let Some(z0) = &self.z0 {
            map.serialize_entry("z0", &format_rational(z0))?;
        }
        if let Some(q) = &self.q {
            map.serialize_entry("q", &format_rational(q))?;
        }
        if let Some(order) = self.order {
            map.serialize_entry("order", &order)?;
        }
        map.end()
    }
}

/// Bounds of a verification sweep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridSpec {
    pub n_max: usize,
    pub k_max: usize,
    /// Random points per `(identity, n, k)` cell, on top of the classical point.
    pub points: usize,
    /// Truncation order of every series comparison.
    pub order: usize,
    /// Bound on `|numerator|` and denominator of sampled rationals.
    pub height: u32,
}

impl Default for GridSpec {
    fn default() -> Self {
        Self {
            n_max: 6,
            k_max: 1,
            points: 0,
            order: 6,
            height: 20,
        }
    }
}

pub(crate) fn random_rational(rng: &mut ChaCha8Rng, height: u32) -> Rational {
    let h = i64::from(height.max(1));
    Rational::new(rng.gen_range(-h..=h).into(), rng.gen_range(1..=h).into())
}

fn random_nonzero(rng: &mut ChaCha8Rng, height: u32) -> Rational {
    loop {
        let r = random_rational(rng, height);
        if !r.is_zero() {
            return r;
        }
    }
}

fn random_alpha(
    rng: &mut ChaCha8Rng,
    len: usize,
    height: u32,
    distinct: bool,
    nonzero: bool,
) -> Alpha {
    let mut entries: Vec<Rational> = Vec::with_capacity(len);
    while entries.len() < len {
        let r = random_rational(rng, height);
        if (nonzero && r.is_zero()) || (distinct && entries.contains(&r)) {
            continue;
        }
        entries.push(r);
    }
    AlphaSeq::new(entries)
}

/// The deterministic point of a grid cell: classical parameters, unit box.
pub(crate) fn classical_point(id: IdentityId, n: usize, k: usize, grid: &GridSpec) -> ParamPoint {
    let mut point = ParamPoint::classical(n, k).expect("k >= 1");
    match id.shape() {
        Shape::ClassicalSeries => point.order = Some(grid.order),
        Shape::ParametricSeries => {
            point.alpha = AlphaSeq::classical(grid.order + 1);
            point.order = Some(grid.order);
        }
        Shape::Specialization => point.q = Some(int(1)),
        Shape::Polynomial | Shape::Number => {}
    }
    point
}

/// A random point inside the identity's precondition domain.
pub(crate) fn random_point(
    id: IdentityId,
    n: usize,
    k: usize,
    grid: &GridSpec,
    rng: &mut ChaCha8Rng,
) -> ParamPoint {
    let h = grid.height;
    let lengths = Lengths::new((0..k).map(|_| random_nonzero(rng, h)).collect()).expect("nonzero");
    let mut point = ParamPoint {
        n,
        k,
        alpha: AlphaSeq::default(),
        lengths,
        z0: None,
        q: None,
        order: None,
    };
    match id.shape() {
        Shape::Number => {
            point.alpha = random_alpha(rng, n, h, false, id == IdentityId::T2_4);
        }
        Shape::Polynomial => {
            point.alpha = random_alpha(rng, n, h, false, false);
            point.z0 = Some(random_rational(rng, h));
        }
        Shape::ParametricSeries => {
            point.alpha = random_alpha(rng, grid.order + 1, h, true, false);
            point.order = Some(grid.order);
        }
        Shape::Specialization => {
            point.alpha = AlphaSeq::classical(n);
            point.q = Some(random_rational(rng, h));
        }
        Shape::ClassicalSeries => {
            point.order = Some(grid.order);
        }
    }
    point
}

/// Whether every active `α_i` is nonnegative.
pub fn nonnegative_alpha(point: &ParamPoint) -> bool {
    point
        .alpha
        .as_slice()
        .iter()
        .take(point.n)
        .all(|a| !a.is_negative())
}
