//! Reference values computed without the library's series machinery:
//! plain recurrences and explicit products over `BiPoly` or `Rational`.
#![allow(dead_code)]

use degbern_core::rational::{binomial, int};
use degbern_core::{BiPoly, Rational};
use num_traits::{One, Zero};

fn r(n: usize) -> Rational {
    Rational::from_integer(n.into())
}

fn c(n: usize, k: usize) -> Rational {
    Rational::from_integer(binomial(n, k))
}

/// Classical Stirling triangle from `S(n,k) = k·S(n−1,k) + S(n−1,k−1)`.
pub fn classical_stirling(max_n: usize) -> Vec<Vec<Rational>> {
    let mut t = vec![vec![Rational::zero(); max_n + 1]; max_n + 1];
    t[0][0] = Rational::one();
    for n in 1..=max_n {
        for k in 1..=n {
            t[n][k] = r(k) * &t[n - 1][k] + &t[n - 1][k - 1];
        }
    }
    t
}

/// Degenerate Stirling triangle in `λ` from
/// `S(n+1,k) = S(n,k−1) + (k − nλ)·S(n,k)`.
pub fn degenerate_stirling(max_n: usize) -> Vec<Vec<BiPoly>> {
    let lam = BiPoly::lambda();
    let mut t = vec![vec![BiPoly::zero(); max_n + 1]; max_n + 1];
    t[0][0] = BiPoly::one();
    for n in 0..max_n {
        for k in 1..=n + 1 {
            let stay = BiPoly::constant(r(k)) - lam.scale(&r(n));
            t[n + 1][k] = &t[n][k - 1] + &(&stay * &t[n][k]);
        }
    }
    t
}

/// Classical Bernoulli numbers from `Σ_{j≤n} C(n+1,j)·B_j = 0`, `B_1 = −1/2`.
pub fn classical_bernoulli(max_n: usize) -> Vec<Rational> {
    let mut b = vec![Rational::one()];
    for n in 1..=max_n {
        let s: Rational = (0..n).map(|j| c(n + 1, j) * &b[j]).sum();
        b.push(-s / r(n + 1));
    }
    b
}

/// `∏_{j<n}(a − jλ)` over `BiPoly`, written out.
pub fn degen_product(a: &BiPoly, n: usize) -> BiPoly {
    let lam = BiPoly::lambda();
    (0..n).fold(BiPoly::one(), |acc, j| &acc * &(a - &lam.scale(&r(j))))
}

/// `β_{n,λ}(x)` (first order) from the convolution
/// `Σ_j C(n,j)·d_j·β_{n−j} = (x)_{n,λ}`, `d_j = (1)_{j+1,λ}/(j+1)`.
pub fn degenerate_bernoulli(max_n: usize) -> Vec<BiPoly> {
    let x = BiPoly::x();
    let d: Vec<BiPoly> = (0..=max_n)
        .map(|j| degen_product(&BiPoly::one(), j + 1).scale(&r(j + 1).recip()))
        .collect();
    let mut beta: Vec<BiPoly> = Vec::new();
    for n in 0..=max_n {
        let mut v = degen_product(&x, n);
        for j in 1..=n {
            v -= (&d[j] * &beta[n - j]).scale(&c(n, j));
        }
        beta.push(v);
    }
    beta
}

/// `C(n,k)·x^k·(1−x)^{n−k}`, expanded.
pub fn classical_bernstein(k: usize, n: usize) -> BiPoly {
    let x = BiPoly::x();
    let y = BiPoly::one() - x.clone();
    let mut p = BiPoly::constant(c(n, k));
    for _ in 0..k {
        p = &p * &x;
    }
    for _ in k..n {
        p = &p * &y;
    }
    p
}

/// `C(n,k)·∏(x − jλ)·∏(1 − x − jλ)` at a point.
pub fn bernstein_at(k: usize, n: usize, x: &Rational, l: &Rational) -> Rational {
    let head: Rational = (0..k).map(|j| x - l * r(j)).product();
    let tail: Rational = (0..n - k).map(|j| int(1) - x - l * r(j)).product();
    c(n, k) * head * tail
}

/// `∏_{j=1}^{n−1}(1 − jλ)`.
pub fn row_sum(n: usize) -> BiPoly {
    let lam = BiPoly::lambda();
    (1..n).fold(BiPoly::one(), |acc, j| {
        &acc * &(BiPoly::one() - lam.scale(&r(j)))
    })
}
