//! Higher-order degenerate Bernoulli polynomials `β^{(k)}_{n,λ}(x)`, the
//! coefficients of `(t/((1+λt)^{1/λ} − 1))^k (1+λt)^{x/λ}`.

use alloc::vec::Vec;

use crate::bipoly::BiPoly;
use crate::rational::{factorial, Rational};
use crate::scalar::Scalar;
use crate::series::{binomial_series, SeriesError, TruncSeries};

/// `((1+λt)^{1/λ} − 1)/t`, coefficient `t^m` equal to `(1)_{m+1,λ}/(m+1)!`.
pub fn divided_difference_series<T: Scalar>(lambda: &T, order: usize) -> TruncSeries<T> {
    let shifted = binomial_series(&T::one(), lambda, order + 1);
    TruncSeries::from_fn(order, |m| shifted.coeffs()[m + 1].clone())
}

/// `(t/((1+λt)^{1/λ} − 1))^k`, the `x`-free factor.
pub fn bernoulli_kernel<T: Scalar>(k: usize, lambda: &T, order: usize) -> TruncSeries<T> {
    divided_difference_series(lambda, order)
        .invert()
        .expect("constant term is 1")
        .pow(k)
}

/// Full generating function of `β^{(k)}_{n,λ}(x)/n!` up to `order`.
pub fn bernoulli_series<T: Scalar>(k: usize, x: &T, lambda: &T, order: usize) -> TruncSeries<T> {
    bernoulli_kernel(k, lambda, order)
        .mul(&binomial_series(x, lambda, order))
        .expect("same order")
}

/// `β^{(k)}_{n,λ}(x)` with an explicit truncation order.
pub fn degen_bernoulli_with_order<T: Scalar>(
    n: usize,
    k: usize,
    x: &T,
    lambda: &T,
    order: usize,
) -> Result<T, SeriesError> {
    if n > order {
        return Err(SeriesError::TruncationExceeded {
            requested: n,
            order,
        });
    }
    bernoulli_series(k, x, lambda, order).egf_coeff(n)
}

/// `β^{(k)}_{n,λ}(x)`, truncating at `n + 1`.
pub fn degen_bernoulli<T: Scalar>(n: usize, k: usize, x: &T, lambda: &T) -> T {
    degen_bernoulli_with_order(n, k, x, lambda, n + 1).expect("order covers n")
}

/// All `β^{(k)}_{m,λ}(x)/m!` for `m ≤ n_max` with `x` formal, from a single
/// series computation. `λ` may be the formal symbol or a constant.
#[derive(Debug, Clone, PartialEq)]
pub struct BernoulliSeriesCache {
    order_k: usize,
    trunc_order: usize,
    coeffs: Vec<BiPoly>,
}

impl BernoulliSeriesCache {
    pub fn order_k(&self) -> usize {
        self.order_k
    }

    pub fn trunc_order(&self) -> usize {
        self.trunc_order
    }

    /// Number of cached polynomials, `n_max + 1`.
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `β^{(k)}_{m,λ}(x)/m!`.
    pub fn scaled(&self, m: usize) -> &BiPoly {
        &self.coeffs[m]
    }

    /// `β^{(k)}_{m,λ}(x)`.
    pub fn get(&self, m: usize) -> BiPoly {
        self.coeffs[m].scale(&Rational::from_integer(factorial(m)))
    }

    /// `β^{(k)}_{m,λ}(arg)` for a polynomial argument, e.g. `1 − x`.
    pub fn get_at(&self, m: usize, arg: &BiPoly) -> BiPoly {
        self.get(m).subst_x(arg)
    }

    /// The cached coefficients as a truncated series of order `n_max`.
    pub fn to_series(&self) -> TruncSeries<BiPoly> {
        TruncSeries::new(self.coeffs.len() - 1, self.coeffs.clone()).expect("length matches")
    }
}

pub fn degen_bernoulli_row(n_max: usize, k: usize, lambda: &BiPoly) -> BernoulliSeriesCache {
    let trunc_order = n_max + 1;
    let series = bernoulli_series(k, &BiPoly::x(), lambda, trunc_order);
    BernoulliSeriesCache {
        order_k: k,
        trunc_order,
        coeffs: series.coeffs()[..=n_max].to_vec(),
    }
}
