#![allow(clippy::needless_range_loop)]

mod support;
use support as oracles;

use degbern_core::bernoulli::{degen_bernoulli, degen_bernoulli_row};
use degbern_core::bernstein::{
    bernstein, bernstein_genfun_coeff, bernstein_operator, connection_difference_operator,
    connection_stirling_bernoulli, connection_stirling_bernoulli_cached, first_moment, ratio_step,
    symmetry_pair, three_term_check, triangular_eval, weighted_sum, RatioForm,
};
use degbern_core::combinatorics::{
    degen_stirling2, degen_stirling2_from_series, falling_factorial, StirlingTable,
};
use degbern_core::rational::{int, rat};
use degbern_core::verify::random_points;
use degbern_core::{BiPoly, Rational};
use num_traits::{One, Signed, Zero};

fn x() -> BiPoly {
    BiPoly::x()
}

fn lam() -> BiPoly {
    BiPoly::lambda()
}

#[test]
fn stirling_matches_degenerate_recurrence() {
    let oracle = oracles::degenerate_stirling(8);
    for n in 0..=8 {
        for k in 0..=n {
            let direct = degen_stirling2(n, k, &lam());
            assert_eq!(direct, oracle[n][k], "S({n},{k})");
            assert_eq!(degen_stirling2_from_series(n, k, &lam()).unwrap(), direct);
        }
    }
}

#[test]
fn stirling_classical_limit() {
    let oracle = oracles::classical_stirling(10);
    let table = StirlingTable::symbolic(10).at_lambda(&int(0));
    for n in 0..=10 {
        for k in 0..=n {
            assert_eq!(table.get(n, k), oracle[n][k], "S({n},{k})");
        }
    }
    assert_eq!(oracle[4][2], int(7));
    assert_eq!(oracle[5][3], int(25));
}

#[test]
fn bernoulli_classical_limit() {
    let oracle = oracles::classical_bernoulli(10);
    assert_eq!(oracle[1], rat(-1, 2));
    assert_eq!(oracle[4], rat(-1, 30));
    for n in 0..=10 {
        assert_eq!(degen_bernoulli(n, 1, &int(0), &int(0)), oracle[n], "B_{n}");
    }
}

#[test]
fn bernoulli_matches_convolution_oracle() {
    let oracle = oracles::degenerate_bernoulli(8);
    assert_eq!(
        oracle[1].subst_x(&BiPoly::zero()),
        (lam() - BiPoly::one()).scale(&rat(1, 2))
    );
    let row = degen_bernoulli_row(8, 1, &lam());
    for n in 0..=8 {
        assert_eq!(degen_bernoulli(n, 1, &x(), &lam()), oracle[n], "n = {n}");
        assert_eq!(row.get(n), oracle[n]);
    }
}

#[test]
fn bernoulli_order_additivity() {
    let x1 = rat(1, 3);
    let x2 = rat(-2, 5);
    let l = rat(1, 7);
    for n in 0..=6 {
        let lhs = degen_bernoulli(n, 3, &(x1.clone() + x2.clone()), &l);
        let rhs: Rational = (0..=n)
            .map(|j| {
                Rational::from_integer(degbern_core::rational::binomial(n, j))
                    * degen_bernoulli(j, 1, &x1, &l)
                    * degen_bernoulli(n - j, 2, &x2, &l)
            })
            .sum();
        assert_eq!(lhs, rhs, "n = {n}");
    }
}

#[test]
fn row_sum_invariant() {
    for n in 0..=12 {
        assert_eq!(
            triangular_eval(n, &x(), &lam()).sum(),
            oracles::row_sum(n),
            "n = {n}"
        );
    }
}

#[test]
fn triangle_agrees_with_direct_formula() {
    for (px, pl) in random_points(0xbe57, 10) {
        for n in 0..=12 {
            let row = triangular_eval(n, &px, &pl);
            for k in 0..=n {
                assert_eq!(row.values[k], oracles::bernstein_at(k, n, &px, &pl));
            }
        }
    }
}

#[test]
fn classical_limit_and_operator() {
    for n in 0..=10 {
        for k in 0..=n {
            let b = bernstein(k, n, &x(), &BiPoly::zero()).unwrap();
            assert_eq!(b, oracles::classical_bernstein(k, n));
            assert_eq!(
                bernstein(k, n, &x(), &lam()).unwrap().subst_lambda(&int(0)),
                b
            );
        }
    }
    for n in 1..=8 {
        let ones = vec![int(1); n + 1];
        let linear: Vec<Rational> = (0..=n).map(|k| rat(k as i64, n as i64)).collect();
        assert_eq!(
            bernstein_operator(&ones, &x(), &BiPoly::zero()).unwrap(),
            BiPoly::one()
        );
        assert_eq!(
            bernstein_operator(&linear, &x(), &BiPoly::zero()).unwrap(),
            x()
        );
        assert_eq!(first_moment(n, &x(), &BiPoly::zero()).unwrap(), x());
    }
}

#[test]
fn symmetry_and_three_term() {
    for n in 0..=8 {
        for k in 0..=n {
            let (a, b) = symmetry_pair(k, n, &lam()).unwrap();
            assert_eq!(a, b);
        }
        for k in 0..n {
            assert!(three_term_check(k, n, &x(), &lam()).unwrap().is_zero());
        }
    }
}

#[test]
fn generating_function_and_connection() {
    let table = StirlingTable::symbolic(7);
    for n in 0..=7 {
        for k in 0..=n {
            let b = bernstein(k, n, &x(), &lam()).unwrap();
            let g = bernstein_genfun_coeff(k, n, &x(), &lam());
            assert!(!g.out_of_support);
            assert_eq!(g.value, b);
            assert_eq!(
                connection_stirling_bernoulli(k, n, &x(), &lam()).unwrap(),
                b
            );
            assert_eq!(
                connection_difference_operator(k, n, &x(), &lam()).unwrap(),
                b
            );
            assert_eq!(
                connection_stirling_bernoulli_cached(k, n, &table, &lam()).unwrap(),
                b
            );
        }
    }
    assert!(bernstein_genfun_coeff(3, 2, &x(), &lam()).out_of_support);
}

#[test]
fn falling_factorial_expansion_of_powers() {
    // x^n = Σ_k S(n,k)(x)_k at λ = 0.
    let oracle = oracles::classical_stirling(8);
    for n in 0..=8 {
        let sum = (0..=n).fold(BiPoly::zero(), |acc, k| {
            acc + falling_factorial(&x(), k).scale(&oracle[n][k])
        });
        assert_eq!(sum, BiPoly::monomial(int(1), n as u32, 0));
    }
}

#[test]
fn positivity_and_degrees() {
    let pts = [rat(0, 1), rat(1, 5), rat(1, 2), rat(4, 5), rat(1, 1)];
    for n in 1..=8 {
        let l = rat(-1, n as i64);
        for p in &pts {
            for v in triangular_eval(n, p, &l).values {
                assert!(!v.is_negative(), "n = {n}, x = {p}");
            }
        }
        for k in 0..=n {
            let b = bernstein(k, n, &x(), &lam()).unwrap();
            assert_eq!(b.deg_x(), Some(n as u32));
            assert!(b.deg_lambda().unwrap() < n.max(1) as u32);
        }
    }
}

#[test]
fn ratio_step_corrected_walks_the_row() {
    let (px, pl) = (rat(1, 3), rat(1, 11));
    for n in 1..=8 {
        let row = triangular_eval(n, &px, &pl);
        for k in 1..=n {
            let next =
                ratio_step(k, n, &px, &pl, &row.values[k - 1], RatioForm::Corrected).unwrap();
            assert_eq!(next, row.values[k], "n = {n}, k = {k}");
        }
    }
}

#[test]
fn weighted_sum_closed_form() {
    // Σ_k C(k,i)/C(n,i) B_{k,n} = (x)_{i,λ}(1−iλ)_{n−i,λ}.
    for n in 1..=7 {
        for i in 1..=n {
            let shifted = BiPoly::one() - lam().scale(&Rational::from_integer(i.into()));
            let expected =
                &oracles::degen_product(&x(), i) * &oracles::degen_product(&shifted, n - i);
            assert_eq!(
                weighted_sum(i, n, &x(), &lam()).unwrap(),
                expected,
                "n = {n}, i = {i}"
            );
        }
    }
}
