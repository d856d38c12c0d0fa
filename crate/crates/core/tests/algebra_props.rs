mod common;

use common::{lengths, small_rational};
use polyfam_core::algebra::{
    box_integral_monomial, poly_definite_integral, Polynomial, TruncatedSeries,
};
use polyfam_core::scalar::{int, Rational};
use polyfam_core::Poly;
use proptest::prelude::*;

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(small_rational(), 0..6).prop_map(Polynomial::new)
}

fn series_no_constant(order: usize) -> impl Strategy<Value = TruncatedSeries<Rational>> {
    prop::collection::vec(small_rational(), order).prop_map(move |mut tail| {
        tail.insert(0, int(0));
        TruncatedSeries::new(order, tail)
    })
}

proptest! {
    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &Polynomial::one(), a.clone());
    }

    #[test]
    fn eval_is_a_homomorphism(a in poly(), b in poly(), x in small_rational()) {
        prop_assert_eq!((&a * &b).eval(&x), a.eval(&x) * b.eval(&x));
        prop_assert_eq!((&a + &b).eval(&x), a.eval(&x) + b.eval(&x));
        prop_assert_eq!(a.shift(&x).eval(&int(0)), a.eval(&x));
        prop_assert_eq!(a.reflect().eval(&x), a.eval(&-x.clone()));
    }

    #[test]
    fn from_roots_vanishes_at_roots(roots in prop::collection::vec(small_rational(), 0..7)) {
        let p = Polynomial::from_roots(roots.iter());
        prop_assert_eq!(p.degree(), Some(roots.len()));
        prop_assert_eq!(p.leading_coeff(), Some(&int(1)));
        for r in &roots {
            prop_assert_eq!(p.eval(r), int(0));
        }
    }

    #[test]
    fn definite_integral_differences(p in poly(), a in small_rational(), b in small_rational()) {
        let f = p.antiderivative();
        prop_assert_eq!(poly_definite_integral(&p, &b) - poly_definite_integral(&p, &a), f.eval(&b) - f.eval(&a));
    }

    #[test]
    fn box_integral_factorizes(m in 0usize..8, ls in lengths(3)) {
        let monomial = Polynomial::monomial(int(1), m);
        let expected = ls
            .as_slice()
            .iter()
            .fold(int(1), |acc, l| acc * poly_definite_integral(&monomial, l));
        prop_assert_eq!(box_integral_monomial(m, ls.as_slice(), 3).unwrap(), expected);
    }

    #[test]
    fn exp_log_inverse(order in 0usize..=12, seed in series_no_constant(12)) {
        let s = TruncatedSeries::new(order, seed.coeffs().to_vec());
        let e = s.exp().unwrap();
        prop_assert_eq!(e.log().unwrap(), s.clone());
        let one_plus = &TruncatedSeries::one(order) + &s;
        prop_assert_eq!(one_plus.log().unwrap().exp().unwrap(), one_plus);
    }

    #[test]
    fn exp_turns_sums_into_products(a in series_no_constant(8), b in series_no_constant(8)) {
        prop_assert_eq!((&a + &b).exp().unwrap(), &a.exp().unwrap() * &b.exp().unwrap());
    }

    #[test]
    fn compose_with_variable_is_identity(s in series_no_constant(8)) {
        let x = TruncatedSeries::variable(8);
        prop_assert_eq!(s.compose(&x).unwrap(), s.clone());
        prop_assert_eq!(x.compose(&s).unwrap(), s);
    }
}

#[test]
fn generic_over_floats() {
    let p = Polynomial::<f64>::from_roots([0.0, 1.0, 2.0, 3.0].iter());
    let integral = poly_definite_integral(&p, &1.0);
    assert!((integral + 19.0 / 30.0).abs() < 1e-12);
    let e = TruncatedSeries::<f64>::variable(6).exp().unwrap();
    assert!((e.egf_coeff(5) - 1.0).abs() < 1e-12);
}
