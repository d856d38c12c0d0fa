#![allow(dead_code)]

use polyfam_core::scalar::{rational, Rational};
use polyfam_core::{Alpha, Lens};
use proptest::prelude::*;

pub fn small_rational() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=12).prop_map(|(p, q)| rational(p, q))
}

pub fn nonzero_rational() -> impl Strategy<Value = Rational> {
    small_rational().prop_filter("nonzero", |r| *r != rational(0, 1))
}

pub fn alpha(len: usize) -> impl Strategy<Value = Alpha> {
    prop::collection::vec(small_rational(), len).prop_map(Alpha::new)
}

pub fn nonzero_alpha(len: usize) -> impl Strategy<Value = Alpha> {
    prop::collection::vec(nonzero_rational(), len).prop_map(Alpha::new)
}

pub fn distinct_alpha(len: usize) -> impl Strategy<Value = Alpha> {
    prop::collection::btree_set(small_rational(), len)
        .prop_map(|set| set.into_iter().collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(Alpha::new)
}

pub fn lengths(k: usize) -> impl Strategy<Value = Lens> {
    prop::collection::vec(nonzero_rational(), k).prop_map(|v| Lens::new(v).unwrap())
}
