//! Formal power series in `t`, truncated at a fixed order.

use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::bipoly::BiPoly;
use crate::rational::{factorial, Rational};
use crate::scalar::Scalar;

/// Truncation order used when a caller does not pick one.
pub const DEFAULT_ORDER: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SeriesError {
    OrderMismatch {
        left: usize,
        right: usize,
    },
    /// Constant term is zero or still carries a symbol.
    NotInvertible,
    /// Coefficient list length disagrees with the declared order.
    Length {
        order: usize,
        len: usize,
    },
    TruncationExceeded {
        requested: usize,
        order: usize,
    },
}

impl fmt::Display for SeriesError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::OrderMismatch { left, right } => {
                write!(f, "series order mismatch: {left} vs {right}")
            }
            Self::NotInvertible => {
                write!(
                    f,
                    "series constant term is not an invertible rational constant"
                )
            }
            Self::Length { order, len } => {
                write!(
                    f,
                    "order {order} series needs {} coefficients, got {len}",
                    order + 1
                )
            }
            Self::TruncationExceeded { requested, order } => {
                write!(
                    f,
                    "coefficient t^{requested} is beyond truncation order {order}"
                )
            }
        }
    }
}

/// `Σ_{m=0}^{order} coeffs[m]·t^m`.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncSeries<T = BiPoly> {
    coeffs: Vec<T>,
}

impl<T: Scalar> TruncSeries<T> {
    pub fn new(order: usize, coeffs: Vec<T>) -> Result<Self, SeriesError> {
        if coeffs.len() != order + 1 {
            return Err(SeriesError::Length {
                order,
                len: coeffs.len(),
            });
        }
        Ok(Self { coeffs })
    }

    /// Builds from a generator over `0..=order`.
    pub fn from_fn(order: usize, f: impl FnMut(usize) -> T) -> Self {
        Self {
            coeffs: (0..=order).map(f).collect(),
        }
    }

    pub fn zero(order: usize) -> Self {
        Self::from_fn(order, |_| T::zero())
    }

    pub fn one(order: usize) -> Self {
        Self::from_fn(order, |m| if m == 0 { T::one() } else { T::zero() })
    }

    /// `c·t^power`, or the zero series if `power > order`.
    pub fn monomial(order: usize, c: T, power: usize) -> Self {
        let mut s = Self::zero(order);
        if power <= order {
            s.coeffs[power] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, m: usize) -> Result<&T, SeriesError> {
        self.coeffs.get(m).ok_or(SeriesError::TruncationExceeded {
            requested: m,
            order: self.order(),
        })
    }

    /// `m!·[t^m]`, the exponential-generating-function reading.
    pub fn egf_coeff(&self, m: usize) -> Result<T, SeriesError> {
        Ok(self.coeff(m)?.scale(&Rational::from_integer(factorial(m))))
    }

    fn check_order(&self, other: &Self) -> Result<(), SeriesError> {
        if self.order() != other.order() {
            return Err(SeriesError::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_order(other)?;
        Ok(Self::from_fn(self.order(), |m| {
            self.coeffs[m].clone() + &other.coeffs[m]
        }))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_order(other)?;
        Ok(Self::from_fn(self.order(), |m| {
            self.coeffs[m].clone() - &other.coeffs[m]
        }))
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c.scale(factor)).collect(),
        }
    }

    /// Cauchy product truncated at the common order.
    pub fn mul(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_order(other)?;
        let order = self.order();
        let mut out = Self::zero(order);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=order - i].iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let prod = a.clone() * b;
                out.coeffs[i + j] = core::mem::replace(&mut out.coeffs[i + j], T::zero()) + &prod;
            }
        }
        Ok(out)
    }

    /// Multiplicative inverse. The constant term must be a nonzero rational
    /// constant; no polynomial division ever happens.
    pub fn invert(&self) -> Result<Self, SeriesError> {
        let a0 = self.coeffs[0]
            .as_constant()
            .ok_or(SeriesError::NotInvertible)?;
        if a0.is_zero() {
            return Err(SeriesError::NotInvertible);
        }
        let inv0 = a0.recip();
        let order = self.order();
        let mut out: Vec<T> = Vec::with_capacity(order + 1);
        out.push(T::from_rational(inv0.clone()));
        for m in 1..=order {
            let mut acc = T::zero();
            for j in 1..=m {
                if self.coeffs[j].is_zero() {
                    continue;
                }
                acc = acc + &(self.coeffs[j].clone() * &out[m - j]);
            }
            out.push((-acc).scale(&inv0));
        }
        Ok(Self { coeffs: out })
    }

    /// Repeated squaring; `a^0` is the one-series.
    pub fn pow(&self, k: usize) -> Self {
        let order = self.order();
        let mut result = Self::one(order);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul(&base).expect("same order");
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base).expect("same order");
            }
        }
        result
    }

    /// Divides by `t^shift`, dropping the first `shift` coefficients and
    /// padding the tail with zeros. The dropped coefficients must be zero.
    pub fn shift_down(&self, shift: usize) -> Option<Self> {
        if self.coeffs.iter().take(shift).any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::from_fn(self.order(), |m| {
            self.coeffs.get(m + shift).cloned().unwrap_or_else(T::zero)
        }))
    }
}

/// `(1+λt)^{exponent/λ}` as `Σ_n (exponent)_{n,λ}/n!·t^n`, built from the
/// degenerate falling-factorial product.
pub fn binomial_series<T: Scalar>(exponent: &T, lambda: &T, order: usize) -> TruncSeries<T> {
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut falling = T::one();
    let mut fact = Rational::one();
    for n in 0..=order {
        if n > 0 {
            let step = lambda.scale(&Rational::from_integer((n - 1).into()));
            falling = falling * &(exponent.clone() - step);
            fact *= Rational::from_integer(n.into());
        }
        coeffs.push(falling.scale(&fact.recip()));
    }
    TruncSeries { coeffs }
}

/// `(1+λt)^{1/λ} − 1`, whose `t^m` coefficient is `(1)_{m,λ}/m!` for
/// `m ≥ 1`.
pub fn exp_minus_one_series<T: Scalar>(lambda: &T, order: usize) -> TruncSeries<T> {
    let mut s = binomial_series(&T::one(), lambda, order);
    s.coeffs[0] = T::zero();
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn rs(coeffs: &[Rational]) -> TruncSeries<Rational> {
        TruncSeries::new(coeffs.len() - 1, coeffs.to_vec()).unwrap()
    }

    #[test]
    fn mul_examples() {
        let a = rs(&[int(1), int(1), int(0)]);
        let b = rs(&[int(1), int(-1), int(0)]);
        assert_eq!(a.mul(&b).unwrap(), rs(&[int(1), int(0), int(-1)]));
        assert_eq!(a.mul(&TruncSeries::one(2)).unwrap(), a);
    }

    #[test]
    fn exp_times_exp_inverse_is_one() {
        let order = 6;
        let e = TruncSeries::<Rational>::from_fn(order, |m| {
            Rational::from_integer(factorial(m)).recip()
        });
        let e_neg = TruncSeries::<Rational>::from_fn(order, |m| {
            let s = if m % 2 == 0 { int(1) } else { int(-1) };
            s / Rational::from_integer(factorial(m))
        });
        assert_eq!(e.mul(&e_neg).unwrap(), TruncSeries::one(order));
    }

    #[test]
    fn order_mismatch_is_an_error() {
        let a = TruncSeries::<Rational>::one(2);
        let b = TruncSeries::<Rational>::one(3);
        assert_eq!(
            a.mul(&b),
            Err(SeriesError::OrderMismatch { left: 2, right: 3 })
        );
        assert!(TruncSeries::<Rational>::new(2, alloc::vec![int(1)]).is_err());
    }

    #[test]
    fn invert_examples() {
        assert_eq!(
            TruncSeries::<Rational>::one(4).invert().unwrap(),
            TruncSeries::one(4)
        );
        let a = rs(&[int(1), int(1), int(0), int(0)]);
        assert_eq!(a.invert().unwrap(), rs(&[int(1), int(-1), int(1), int(-1)]));
        let b = rs(&[int(2), int(0)]);
        assert_eq!(b.invert().unwrap(), rs(&[rat(1, 2), int(0)]));
    }

    #[test]
    fn invert_rejects_singular_constant_terms() {
        let z = rs(&[int(0), int(1)]);
        assert_eq!(z.invert(), Err(SeriesError::NotInvertible));
        let sym = TruncSeries::new(1, alloc::vec![BiPoly::x(), BiPoly::one()]).unwrap();
        assert_eq!(sym.invert(), Err(SeriesError::NotInvertible));
    }

    #[test]
    fn pow_examples() {
        let a = rs(&[int(3), int(1), int(4), int(1), int(5)]);
        assert_eq!(a.pow(0), TruncSeries::one(4));
        let t = TruncSeries::<Rational>::monomial(4, int(1), 1);
        assert_eq!(t.pow(2), TruncSeries::monomial(4, int(1), 2));
        assert_eq!(a.pow(3), a.mul(&a).unwrap().mul(&a).unwrap());
    }

    #[test]
    fn binomial_series_leading_coefficients() {
        let s = binomial_series(&BiPoly::x(), &BiPoly::lambda(), 4);
        assert_eq!(s.coeffs()[0], BiPoly::one());
        assert_eq!(s.coeffs()[1], BiPoly::x());
        let x2_minus_lx = BiPoly::from_terms([((2, 0), rat(1, 2)), ((1, 1), rat(-1, 2))]);
        assert_eq!(s.coeffs()[2], x2_minus_lx);
    }

    #[test]
    fn shift_down_requires_leading_zeros() {
        let t2 = TruncSeries::<Rational>::monomial(3, int(5), 2);
        assert_eq!(
            t2.shift_down(2).unwrap(),
            rs(&[int(5), int(0), int(0), int(0)])
        );
        assert!(t2.shift_down(3).is_none());
    }
}
