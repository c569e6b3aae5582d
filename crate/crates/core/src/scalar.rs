use core::fmt::Debug;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::bipoly::BiPoly;
use crate::rational::{int, Rational};

/// The commutative rings the degenerate formulas are evaluated over: exact
/// rationals for numeric points and [`BiPoly`] for formal `x` and `λ`.
///
/// Every operation in this crate is written once against this trait, so the
/// same code path serves symbolic verification and point evaluation.
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    fn from_rational(value: Rational) -> Self;

    fn from_int(value: i64) -> Self {
        Self::from_rational(int(value))
    }

    /// Multiplies by an exact rational constant.
    fn scale(&self, factor: &Rational) -> Self;

    /// The value as a rational if it carries no symbols.
    fn as_constant(&self) -> Option<Rational>;
}

impl Scalar for Rational {
    fn from_rational(value: Rational) -> Self {
        value
    }

    fn scale(&self, factor: &Rational) -> Self {
        self * factor
    }

    fn as_constant(&self) -> Option<Rational> {
        Some(self.clone())
    }
}

impl Scalar for BiPoly {
    fn from_rational(value: Rational) -> Self {
        BiPoly::constant(value)
    }

    fn scale(&self, factor: &Rational) -> Self {
        BiPoly::scale(self, factor)
    }

    fn as_constant(&self) -> Option<Rational> {
        BiPoly::as_constant(self)
    }
}
