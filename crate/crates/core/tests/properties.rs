use degbern_core::combinatorics::{degen_falling_factorial, oplus_power, unit_falling};
use degbern_core::rational::rat;
use degbern_core::series::TruncSeries;
use degbern_core::{BiPoly, Rational};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=9).prop_map(|(p, q)| rat(p, q))
}

fn bipoly() -> impl Strategy<Value = BiPoly> {
    prop::collection::vec(((0u32..4, 0u32..4), small_rational()), 0..6).prop_map(BiPoly::from_terms)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_laws(a in bipoly(), b in bipoly(), c in bipoly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, BiPoly::zero());
        prop_assert_eq!(&a * &BiPoly::one(), a.clone());
    }

    #[test]
    fn no_zero_terms_survive(a in bipoly(), b in bipoly()) {
        for p in [&a + &b, &a - &b, &a * &b] {
            prop_assert!(p.terms().all(|(_, c)| !c.is_zero()));
        }
    }

    #[test]
    fn text_round_trip(a in bipoly()) {
        let text = a.to_string();
        let back: BiPoly = text.parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn eval_is_a_homomorphism(a in bipoly(), b in bipoly(), x in small_rational(), l in small_rational()) {
        prop_assert_eq!((&a * &b).eval(&x, &l), a.eval(&x, &l) * b.eval(&x, &l));
        prop_assert_eq!((&a + &b).eval(&x, &l), a.eval(&x, &l) + b.eval(&x, &l));
    }

    #[test]
    fn series_inverse(order in 0usize..=16, c0 in small_rational(), rest in prop::collection::vec(small_rational(), 16)) {
        prop_assume!(!c0.is_zero());
        let mut coeffs: Vec<Rational> = vec![c0];
        coeffs.extend(rest.into_iter().take(order));
        let a = TruncSeries::new(order, coeffs).unwrap();
        let prod = a.mul(&a.invert().unwrap()).unwrap();
        prop_assert_eq!(prod, TruncSeries::one(order));
    }

    #[test]
    fn vandermonde(n in 0usize..=8, x in small_rational(), y in small_rational(), l in small_rational()) {
        let lhs = degen_falling_factorial(&(x.clone() + y.clone()), n, &l);
        prop_assert_eq!(oplus_power(&x, &y, n, &l), lhs);
    }

    #[test]
    fn oplus_collapse(n in 0usize..=10, x in small_rational(), l in small_rational()) {
        let y = Rational::one() - x.clone();
        prop_assert_eq!(oplus_power(&x, &y, n, &l), unit_falling(n, &l));
    }
}
