//! Degenerate falling factorials, binomials, Stirling numbers of the second
//! kind, the forward difference at zero, and the `⊕_λ` power.
//!
//! Every function is generic over [`Scalar`]: pass [`BiPoly::x`] and
//! [`BiPoly::lambda`] for symbolic results or rationals for point values.

use alloc::vec::Vec;

use num_traits::Zero;

use crate::bipoly::BiPoly;
use crate::rational::{binomial, factorial, Rational};
use crate::scalar::Scalar;
use crate::series::{exp_minus_one_series, SeriesError, TruncSeries};

fn from_usize<T: Scalar>(n: usize) -> T {
    T::from_rational(Rational::from_integer(n.into()))
}

fn inv_factorial(n: usize) -> Rational {
    Rational::from_integer(factorial(n)).recip()
}

fn binom_rational(n: usize, k: usize) -> Rational {
    Rational::from_integer(binomial(n, k))
}

/// `(x)_n = x(x−1)···(x−n+1)`, with `(x)_0 = 1`.
pub fn falling_factorial<T: Scalar>(x: &T, n: usize) -> T {
    (0..n).fold(T::one(), |acc, j| acc * &(x.clone() - from_usize::<T>(j)))
}

/// `(x)_{n,λ} = x(x−λ)···(x−(n−1)λ)`, with `(x)_{0,λ} = 1`.
pub fn degen_falling_factorial<T: Scalar>(x: &T, n: usize, lambda: &T) -> T {
    (0..n).fold(T::one(), |acc, j| {
        acc * &(x.clone() - lambda.scale(&Rational::from_integer(j.into())))
    })
}

/// `{x choose n}_λ = (x)_{n,λ}/n!`.
pub fn degen_binom<T: Scalar>(x: &T, n: usize, lambda: &T) -> T {
    degen_falling_factorial(x, n, lambda).scale(&inv_factorial(n))
}

/// `(x ⊕_λ y)^n = Σ_k C(n,k)(x)_{k,λ}(y)_{n−k,λ}`, summed term by term.
pub fn oplus_power<T: Scalar>(x: &T, y: &T, n: usize, lambda: &T) -> T {
    (0..=n).fold(T::zero(), |acc, k| {
        let term =
            degen_falling_factorial(x, k, lambda) * &degen_falling_factorial(y, n - k, lambda);
        acc + term.scale(&binom_rational(n, k))
    })
}

/// `Δ^k (0)_{m,λ} = Σ_{j=0}^k C(k,j)(−1)^{k−j}(j)_{m,λ}`.
pub fn forward_difference_at_zero<T: Scalar>(m: usize, k: usize, lambda: &T) -> T {
    (0..=k).fold(T::zero(), |acc, j| {
        let term =
            degen_falling_factorial(&from_usize::<T>(j), m, lambda).scale(&binom_rational(k, j));
        if (k - j).is_multiple_of(2) {
            acc + term
        } else {
            acc - term
        }
    })
}

/// `S_{2,λ}(n,k)` by the finite difference sum `Δ^k (0)_{n,λ} / k!`.
/// Vanishes for `n < k`.
pub fn degen_stirling2<T: Scalar>(n: usize, k: usize, lambda: &T) -> T {
    if n < k {
        return T::zero();
    }
    forward_difference_at_zero(n, k, lambda).scale(&inv_factorial(k))
}

/// `S_{2,λ}(n,k)` read off `((1+λt)^{1/λ} − 1)^k / k!` as `n!·[t^n]`.
///
/// This is the generating-function route; [`degen_stirling2`] is the one
/// used elsewhere, and the verifier compares the two.
pub fn degen_stirling2_from_series<T: Scalar>(
    n: usize,
    k: usize,
    lambda: &T,
) -> Result<T, SeriesError> {
    let series = exp_minus_one_series(lambda, n)
        .pow(k)
        .scale(&inv_factorial(k));
    series.egf_coeff(n)
}

/// `(1/k!)·((1+λt)^{1/λ} − 1)^k`, truncated at `order`.
pub fn stirling2_column_series<T: Scalar>(k: usize, lambda: &T, order: usize) -> TruncSeries<T> {
    exp_minus_one_series(lambda, order)
        .pow(k)
        .scale(&inv_factorial(k))
}

/// Lower-triangular table of `S_{2,λ}(n,k)` for `0 ≤ k ≤ n ≤ max_n`.
#[derive(Debug, Clone, PartialEq)]
pub struct StirlingTable<T = BiPoly> {
    rows: Vec<Vec<T>>,
}

impl<T: Scalar> StirlingTable<T> {
    pub fn build(max_n: usize, lambda: &T) -> Self {
        let rows = (0..=max_n)
            .map(|n| (0..=n).map(|k| degen_stirling2(n, k, lambda)).collect())
            .collect();
        Self { rows }
    }

    pub fn max_n(&self) -> usize {
        self.rows.len() - 1
    }

    /// Entry `(n, k)`; zero above the diagonal. Panics past `max_n`.
    pub fn get(&self, n: usize, k: usize) -> T {
        assert!(
            n <= self.max_n(),
            "row {n} beyond table bound {}",
            self.max_n()
        );
        self.rows[n].get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn row(&self, n: usize) -> &[T] {
        &self.rows[n]
    }
}

impl StirlingTable<BiPoly> {
    /// Symbolic table with `λ` left formal.
    pub fn symbolic(max_n: usize) -> Self {
        Self::build(max_n, &BiPoly::lambda())
    }

    /// Specializes every entry at a rational `λ`.
    pub fn at_lambda(&self, lambda: &Rational) -> StirlingTable<Rational> {
        StirlingTable {
            rows: self
                .rows
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|p| p.eval(&Rational::zero(), lambda))
                        .collect()
                })
                .collect(),
        }
    }
}

/// `(1)_{n,λ} = Π_{j=1}^{n−1}(1 − jλ)`, the degenerate row sum.
pub fn unit_falling<T: Scalar>(n: usize, lambda: &T) -> T {
    degen_falling_factorial(&T::one(), n, lambda)
}
