//! Degenerate Bernstein polynomials
//! `B_{k,n}(x|λ) = C(n,k)·(x)_{k,λ}·(1−x)_{n−k,λ}` and the relations they
//! satisfy: generating function, symmetry, the three-term and ratio
//! relations, the triangular recurrence, and the connections to degenerate
//! Stirling and Bernoulli numbers.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use crate::bernoulli::{bernoulli_series, degen_bernoulli_row};
use crate::bipoly::BiPoly;
use crate::combinatorics::{
    degen_falling_factorial, falling_factorial, forward_difference_at_zero, StirlingTable,
};
use crate::rational::{binomial, factorial, Rational};
use crate::scalar::Scalar;
use crate::series::{binomial_series, TruncSeries};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BernsteinError {
    IndexOutOfRange {
        k: usize,
        n: usize,
    },
    /// The ratio denominator `1 − x − (n−k)λ` vanishes.
    Singular {
        k: usize,
        n: usize,
    },
    SampleCount {
        expected: usize,
        got: usize,
    },
    DegreeZero,
}

impl fmt::Display for BernsteinError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::IndexOutOfRange { k, n } => {
                write!(f, "index k = {k} out of range for degree n = {n}")
            }
            Self::Singular { k, n } => {
                write!(
                    f,
                    "ratio denominator 1 - x - (n-k)*lambda vanishes at n = {n}, k = {k}"
                )
            }
            Self::SampleCount { expected, got } => {
                write!(f, "expected {expected} samples, got {got}")
            }
            Self::DegreeZero => write!(f, "operator degree must be at least 1"),
        }
    }
}

fn rational_of(n: usize) -> Rational {
    Rational::from_integer(n.into())
}

fn binom_rational(n: usize, k: usize) -> Rational {
    Rational::from_integer(binomial(n, k))
}

/// `1 − x`, the argument of the second degenerate factor.
pub fn complement<T: Scalar>(x: &T) -> T {
    T::one() - x.clone()
}

/// `B_{k,n}(x|λ)` by the direct product formula.
pub fn bernstein<T: Scalar>(k: usize, n: usize, x: &T, lambda: &T) -> Result<T, BernsteinError> {
    if k > n {
        return Err(BernsteinError::IndexOutOfRange { k, n });
    }
    let head = degen_falling_factorial(x, k, lambda);
    let tail = degen_falling_factorial(&complement(x), n - k, lambda);
    Ok((head * &tail).scale(&binom_rational(n, k)))
}

/// `B_{k,n}` with the zero convention outside `0 ≤ k ≤ n`.
pub fn bernstein_or_zero<T: Scalar>(k: i64, n: usize, x: &T, lambda: &T) -> T {
    if k < 0 {
        return T::zero();
    }
    bernstein(k as usize, n, x, lambda).unwrap_or_else(|_| T::zero())
}

/// One coefficient of the generating function
/// `(x)_{k,λ}/k! · t^k · (1+λt)^{(1−x)/λ} = Σ_{n≥k} B_{k,n}(x|λ) t^n/n!`.
#[derive(Debug, Clone, PartialEq)]
pub struct GenfunCoeff<T> {
    pub value: T,
    /// `n < k`: the coefficient lies outside the sum's support.
    pub out_of_support: bool,
}

/// `n!·[t^n]` of the Bernstein generating function for column `k`.
pub fn bernstein_genfun_coeff<T: Scalar>(k: usize, n: usize, x: &T, lambda: &T) -> GenfunCoeff<T> {
    if n < k {
        return GenfunCoeff {
            value: T::zero(),
            out_of_support: true,
        };
    }
    let lead =
        degen_falling_factorial(x, k, lambda).scale(&Rational::from_integer(factorial(k)).recip());
    let t_k = TruncSeries::monomial(n, lead, k);
    let tail = binomial_series(&complement(x), lambda, n);
    let series = t_k.mul(&tail).expect("same order");
    GenfunCoeff {
        value: series.egf_coeff(n).expect("n within order"),
        out_of_support: false,
    }
}

/// A full basis row `B_{0,n}, …, B_{n,n}` at one argument.
#[derive(Debug, Clone, PartialEq)]
pub struct BernsteinBasisRow<T = Rational> {
    pub n: usize,
    pub values: Vec<T>,
}

impl<T: Scalar> BernsteinBasisRow<T> {
    pub fn sum(&self) -> T {
        self.values.iter().fold(T::zero(), |acc, v| acc + v)
    }
}

/// Rows `0..=n` built by
/// `B_{k,m} = (1−x−(m−k−1)λ)·B_{k,m−1} + (x−(k−1)λ)·B_{k−1,m−1}`
/// from `B_{0,0} = 1`, with `B_{k,m} = 0` outside the triangle.
pub fn triangle<T: Scalar>(n: usize, x: &T, lambda: &T) -> Vec<BernsteinBasisRow<T>> {
    let mut rows = Vec::with_capacity(n + 1);
    rows.push(BernsteinBasisRow {
        n: 0,
        values: vec![T::one()],
    });
    let one_minus_x = complement(x);
    for m in 1..=n {
        let prev = &rows[m - 1].values;
        let values = (0..=m)
            .map(|k| {
                // k ≤ m−1 here means m−k−1 ≥ 0; at k = m the left term is zero.
                let left = match prev.get(k) {
                    Some(b) => {
                        let shift = lambda.scale(&rational_of(m - k - 1));
                        (one_minus_x.clone() - shift) * b
                    }
                    None => T::zero(),
                };
                let right = if k == 0 {
                    T::zero()
                } else {
                    // (x − (k−1)λ)
                    let shift = lambda.scale(&rational_of(k - 1));
                    (x.clone() - shift) * &prev[k - 1]
                };
                left + right
            })
            .collect();
        rows.push(BernsteinBasisRow { n: m, values });
    }
    rows
}

/// Degree-`n` basis row via the triangular recurrence.
pub fn triangular_eval<T: Scalar>(n: usize, x: &T, lambda: &T) -> BernsteinBasisRow<T> {
    triangle(n, x, lambda).pop().expect("at least row 0")
}

/// Which multiplier to use for the `B_{k−1,n} → B_{k,n}` ratio.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RatioForm {
    /// `((n−k+1)/k)·((n−(k−1)λ)/(1−x−(n−k)λ))`, as stated.
    Printed,
    /// `((n−k+1)/k)·((x−(k−1)λ)/(1−x−(n−k)λ))`, what the product formula
    /// gives for `B_{k,n}/B_{k−1,n}`.
    Corrected,
}

impl RatioForm {
    pub fn name(self) -> &'static str {
        match self {
            RatioForm::Printed => "printed",
            RatioForm::Corrected => "corrected",
        }
    }
}

/// Numerator and denominator of the ratio multiplier, kept apart so the
/// symbolic check can cross-multiply.
pub fn ratio_multiplier_parts<T: Scalar>(
    k: usize,
    n: usize,
    x: &T,
    lambda: &T,
    form: RatioForm,
) -> (T, T) {
    let lead = match form {
        RatioForm::Printed => T::from_rational(rational_of(n)),
        RatioForm::Corrected => x.clone(),
    };
    let numer = (lead - lambda.scale(&rational_of(k - 1))).scale(&rational_of(n - k + 1));
    let denom = (complement(x) - lambda.scale(&rational_of(n - k))).scale(&rational_of(k));
    (numer, denom)
}

/// Applies the ratio multiplier to `b_prev`. With [`RatioForm::Corrected`]
/// and `b_prev = B_{k−1,n}(x|λ)` the result is `B_{k,n}(x|λ)`.
pub fn ratio_step(
    k: usize,
    n: usize,
    x: &Rational,
    lambda: &Rational,
    b_prev: &Rational,
    form: RatioForm,
) -> Result<Rational, BernsteinError> {
    if k == 0 || k > n {
        return Err(BernsteinError::IndexOutOfRange { k, n });
    }
    let (numer, denom) = ratio_multiplier_parts(k, n, x, lambda, form);
    if denom.is_zero() {
        return Err(BernsteinError::Singular { k, n });
    }
    Ok(numer / denom * b_prev)
}

/// `(n−k)B_{k,n} + (k+1)B_{k+1,n} − n(1+λ(1−n))B_{k,n−1}`.
///
/// Zero for every `0 ≤ k ≤ n−1`. The factor `n` on the right comes from
/// clearing the `1/n` weights of the averaged form.
pub fn three_term_check<T: Scalar>(
    k: usize,
    n: usize,
    x: &T,
    lambda: &T,
) -> Result<T, BernsteinError> {
    let (lhs, rhs) = three_term_sides(k, n, x, lambda, true)?;
    Ok(lhs - rhs)
}

/// Same difference with the right-hand factor `n` omitted, as the
/// three-term relation is usually quoted. Nonzero once `n ≥ 2`.
pub fn three_term_check_printed<T: Scalar>(
    k: usize,
    n: usize,
    x: &T,
    lambda: &T,
) -> Result<T, BernsteinError> {
    let (lhs, rhs) = three_term_sides(k, n, x, lambda, false)?;
    Ok(lhs - rhs)
}

pub(crate) fn three_term_sides<T: Scalar>(
    k: usize,
    n: usize,
    x: &T,
    lambda: &T,
    with_degree_factor: bool,
) -> Result<(T, T), BernsteinError> {
    if n == 0 || k >= n {
        return Err(BernsteinError::IndexOutOfRange { k, n });
    }
    let lhs = bernstein(k, n, x, lambda)?.scale(&rational_of(n - k))
        + bernstein(k + 1, n, x, lambda)?.scale(&rational_of(k + 1));
    // 1 + λ(1−n)
    let factor = T::one() - lambda.scale(&rational_of(n - 1));
    let mut rhs = factor * &bernstein(k, n - 1, x, lambda)?;
    if with_degree_factor {
        rhs = rhs.scale(&rational_of(n));
    }
    Ok((lhs, rhs))
}

/// `(B_{k,n}(1−x|λ), B_{n−k,n}(x|λ))`, which agree as polynomials.
pub fn symmetry_pair(
    k: usize,
    n: usize,
    lambda: &BiPoly,
) -> Result<(BiPoly, BiPoly), BernsteinError> {
    let x = BiPoly::x();
    let reflected = bernstein(k, n, &complement(&x), lambda)?;
    let mirrored = bernstein(n - k, n, &x, lambda)?;
    Ok((reflected, mirrored))
}

/// `(x)_{k,λ} Σ_{m=k}^n C(n,m)·S_{2,λ}(m,k)·β^{(k)}_{n−m,λ}(1−x)`.
pub fn connection_stirling_bernoulli<T: Scalar>(
    k: usize,
    n: usize,
    x: &T,
    lambda: &T,
) -> Result<T, BernsteinError> {
    connection_with(k, n, x, lambda, |m| {
        crate::combinatorics::degen_stirling2(m, k, lambda)
    })
}

/// The same connection with `Δ^k(0)_{m,λ}/k!` in place of `S_{2,λ}(m,k)`.
pub fn connection_difference_operator<T: Scalar>(
    k: usize,
    n: usize,
    x: &T,
    lambda: &T,
) -> Result<T, BernsteinError> {
    let inv_k_fact = Rational::from_integer(factorial(k)).recip();
    connection_with(k, n, x, lambda, |m| {
        forward_difference_at_zero(m, k, lambda).scale(&inv_k_fact)
    })
}

fn connection_with<T: Scalar>(
    k: usize,
    n: usize,
    x: &T,
    lambda: &T,
    stirling: impl Fn(usize) -> T,
) -> Result<T, BernsteinError> {
    if k > n {
        return Err(BernsteinError::IndexOutOfRange { k, n });
    }
    let beta = bernoulli_series(k, &complement(x), lambda, n - k + 1);
    let sum = (k..=n).fold(T::zero(), |acc, m| {
        let b = beta.egf_coeff(n - m).expect("n - m within order");
        acc + (stirling(m) * &b).scale(&binom_rational(n, m))
    });
    Ok(degen_falling_factorial(x, k, lambda) * &sum)
}

/// Symbolic connection formula driven by a prebuilt Stirling table and a
/// Bernoulli row with `x` formal, substituting `1 − x` afterwards.
pub fn connection_stirling_bernoulli_cached(
    k: usize,
    n: usize,
    table: &StirlingTable<BiPoly>,
    lambda: &BiPoly,
) -> Result<BiPoly, BernsteinError> {
    if k > n {
        return Err(BernsteinError::IndexOutOfRange { k, n });
    }
    let x = BiPoly::x();
    let one_minus_x = complement(&x);
    let row = degen_bernoulli_row(n - k, k, lambda);
    let sum = (k..=n).fold(BiPoly::zero(), |acc, m| {
        let term = &table.get(m, k) * &row.get_at(n - m, &one_minus_x);
        acc + term.scale(&binom_rational(n, m))
    });
    Ok(degen_falling_factorial(&x, k, lambda) * &sum)
}

/// `Σ_{k=0}^n (x)_k·S_{2,λ}(n,k)`, which reproduces `(x)_{n,λ}`.
pub fn falling_expansion<T: Scalar>(n: usize, x: &T, lambda: &T) -> T {
    (0..=n).fold(T::zero(), |acc, k| {
        acc + falling_factorial(x, k) * &crate::combinatorics::degen_stirling2(n, k, lambda)
    })
}

/// `Σ_k f(k/n)·B_{k,n}(x|λ)` for samples `f(0/n), …, f(n/n)`. At `λ = 0`
/// this is the classical Bernstein operator.
pub fn bernstein_operator<T: Scalar>(
    samples: &[Rational],
    x: &T,
    lambda: &T,
) -> Result<T, BernsteinError> {
    let n = samples
        .len()
        .checked_sub(1)
        .ok_or(BernsteinError::DegreeZero)?;
    if n == 0 {
        return Err(BernsteinError::DegreeZero);
    }
    bernstein_operator_of_degree(samples, n, x, lambda)
}

/// As [`bernstein_operator`] with the degree given explicitly; the sample
/// count must be `n + 1`.
pub fn bernstein_operator_of_degree<T: Scalar>(
    samples: &[Rational],
    n: usize,
    x: &T,
    lambda: &T,
) -> Result<T, BernsteinError> {
    if n == 0 {
        return Err(BernsteinError::DegreeZero);
    }
    if samples.len() != n + 1 {
        return Err(BernsteinError::SampleCount {
            expected: n + 1,
            got: samples.len(),
        });
    }
    let row = triangular_eval(n, x, lambda);
    Ok(samples
        .iter()
        .zip(&row.values)
        .fold(T::zero(), |acc, (f, b)| acc + b.scale(f)))
}

/// `Σ_{k=i}^n [C(k,i)/C(n,i)]·B_{k,n}(x|λ)`.
pub fn weighted_sum<T: Scalar>(i: usize, n: usize, x: &T, lambda: &T) -> Result<T, BernsteinError> {
    if i == 0 || i > n {
        return Err(BernsteinError::IndexOutOfRange { k: i, n });
    }
    let denom = binom_rational(n, i).recip();
    (i..=n).try_fold(T::zero(), |acc, k| {
        let w = binom_rational(k, i) * &denom;
        Ok(acc + bernstein(k, n, x, lambda)?.scale(&w))
    })
}

/// `Σ_{k=0}^n (k/n)·B_{k,n}(x|λ)`, the first moment of the basis.
pub fn first_moment<T: Scalar>(n: usize, x: &T, lambda: &T) -> Result<T, BernsteinError> {
    if n == 0 {
        return Err(BernsteinError::DegreeZero);
    }
    (0..=n).try_fold(T::zero(), |acc, k| {
        let w = Rational::new(k.into(), n.into());
        Ok(acc + bernstein(k, n, x, lambda)?.scale(&w))
    })
}
