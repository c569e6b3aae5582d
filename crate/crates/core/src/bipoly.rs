//! Canonical sparse polynomials in the two formal symbols `x` and `λ`.
//!
//! Terms live in a `BTreeMap` keyed by `(deg_x, deg_λ)` and zero
//! coefficients are never stored, so structural equality of two values is
//! exactly polynomial equality. The identity verifier relies on this.
//!
//! The canonical text form lists terms in ascending key order as
//! `c*x^a*l^b` joined by ` + `, with `c` an exact rational (`p` or `p/q`,
//! sign on the numerator). The zero polynomial renders as `0`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use core::str::FromStr;

use num_traits::{One, Zero};

use crate::rational::{parse_rational, ParseRationalError, Rational};

/// Exponent pair `(deg_x, deg_λ)`.
pub type Monomial = (u32, u32);

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BiPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl BiPoly {
    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0, 0)
    }

    /// The formal symbol `x`.
    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1, 0)
    }

    /// The formal symbol `λ`.
    pub fn lambda() -> Self {
        Self::monomial(Rational::one(), 0, 1)
    }

    pub fn monomial(c: Rational, deg_x: u32, deg_lambda: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((deg_x, deg_lambda), c);
        }
        Self { terms }
    }

    /// Builds from arbitrary `(monomial, coefficient)` pairs, merging
    /// duplicates and dropping zeros.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use alloc::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, deg_x: u32, deg_lambda: u32) -> Rational {
        self.terms
            .get(&(deg_x, deg_lambda))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Degree in `x`; `None` for the zero polynomial.
    pub fn deg_x(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.0).max()
    }

    /// Degree in `λ`; `None` for the zero polynomial.
    pub fn deg_lambda(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.1).max()
    }

    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&(0, 0)).cloned(),
            _ => None,
        }
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        if factor.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(m, c)| (*m, c * factor)).collect(),
        }
    }

    pub fn eval(&self, x: &Rational, lambda: &Rational) -> Rational {
        self.terms
            .iter()
            .fold(Rational::zero(), |acc, ((a, b), c)| {
                acc + c * pow(x, *a) * pow(lambda, *b)
            })
    }

    /// Substitutes a polynomial for `x`, keeping `λ` formal.
    pub fn subst_x(&self, value: &BiPoly) -> BiPoly {
        let max = self.deg_x().unwrap_or(0);
        let mut powers = alloc::vec::Vec::with_capacity(max as usize + 1);
        powers.push(BiPoly::one());
        for d in 1..=max as usize {
            let next = &powers[d - 1] * value;
            powers.push(next);
        }
        let mut out = BiPoly::zero();
        for ((a, b), c) in &self.terms {
            let lam = BiPoly::monomial(c.clone(), 0, *b);
            out += &(&powers[*a as usize] * &lam);
        }
        out
    }

    /// Substitutes a rational for `λ`, keeping `x` formal.
    pub fn subst_lambda(&self, lambda: &Rational) -> BiPoly {
        BiPoly::from_terms(
            self.terms
                .iter()
                .map(|((a, b), c)| ((*a, 0), c * pow(lambda, *b))),
        )
    }
}

fn pow(base: &Rational, exp: u32) -> Rational {
    num_traits::pow(base.clone(), exp as usize)
}

impl Zero for BiPoly {
    fn zero() -> Self {
        Self::default()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for BiPoly {
    fn one() -> Self {
        Self::constant(Rational::one())
    }
}

impl From<Rational> for BiPoly {
    fn from(c: Rational) -> Self {
        Self::constant(c)
    }
}

impl AddAssign<&BiPoly> for BiPoly {
    fn add_assign(&mut self, rhs: &BiPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl SubAssign<&BiPoly> for BiPoly {
    fn sub_assign(&mut self, rhs: &BiPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c);
        }
    }
}

impl Neg for BiPoly {
    type Output = BiPoly;

    fn neg(mut self) -> BiPoly {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;

    fn neg(self) -> BiPoly {
        -self.clone()
    }
}

impl Mul<&BiPoly> for &BiPoly {
    type Output = BiPoly;

    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for ((a1, b1), c1) in &self.terms {
            for ((a2, b2), c2) in &rhs.terms {
                out.add_term((a1 + a2, b1 + b2), c1 * c2);
            }
        }
        out
    }
}

macro_rules! forward_binop {
    ($Trait:ident, $method:ident, $assign:ident) => {
        impl $Trait<&BiPoly> for &BiPoly {
            type Output = BiPoly;
            fn $method(self, rhs: &BiPoly) -> BiPoly {
                let mut out = self.clone();
                out.$assign(rhs);
                out
            }
        }
        impl $Trait<&BiPoly> for BiPoly {
            type Output = BiPoly;
            fn $method(mut self, rhs: &BiPoly) -> BiPoly {
                self.$assign(rhs);
                self
            }
        }
        impl $Trait<BiPoly> for BiPoly {
            type Output = BiPoly;
            fn $method(mut self, rhs: BiPoly) -> BiPoly {
                self.$assign(&rhs);
                self
            }
        }
        impl $Trait<BiPoly> for &BiPoly {
            type Output = BiPoly;
            fn $method(self, rhs: BiPoly) -> BiPoly {
                let mut out = self.clone();
                out.$assign(&rhs);
                out
            }
        }
    };
}

forward_binop!(Add, add, add_assign);
forward_binop!(Sub, sub, sub_assign);

impl Mul<BiPoly> for BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: BiPoly) -> BiPoly {
        &self * &rhs
    }
}

impl Mul<&BiPoly> for BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        &self * rhs
    }
}

impl Mul<BiPoly> for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: BiPoly) -> BiPoly {
        self * &rhs
    }
}

impl AddAssign for BiPoly {
    fn add_assign(&mut self, rhs: BiPoly) {
        *self += &rhs;
    }
}

impl SubAssign for BiPoly {
    fn sub_assign(&mut self, rhs: BiPoly) {
        *self -= &rhs;
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, ((a, b), c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}*x^{a}*l^{b}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly({self})")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseBiPolyError {
    MalformedTerm(String),
    Coefficient(ParseRationalError),
    Exponent(String),
}

impl fmt::Display for ParseBiPolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::MalformedTerm(t) => write!(f, "malformed term `{t}`, expected `c*x^a*l^b`"),
            Self::Coefficient(e) => write!(f, "bad coefficient: {e}"),
            Self::Exponent(e) => write!(f, "bad exponent `{e}`"),
        }
    }
}

impl From<ParseRationalError> for ParseBiPolyError {
    fn from(e: ParseRationalError) -> Self {
        Self::Coefficient(e)
    }
}

fn parse_exponent(s: &str, prefix: &str) -> Result<u32, ParseBiPolyError> {
    let digits = s
        .strip_prefix(prefix)
        .ok_or_else(|| ParseBiPolyError::Exponent(s.into()))?;
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(ParseBiPolyError::Exponent(s.into()));
    }
    digits
        .parse()
        .map_err(|_| ParseBiPolyError::Exponent(s.into()))
}

/// Parses the canonical text form. Terms may come in any order and repeat;
/// the result is canonicalized.
impl FromStr for BiPoly {
    type Err = ParseBiPolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "0" {
            return Ok(BiPoly::zero());
        }
        let mut out = BiPoly::zero();
        for term in s.split(" + ") {
            let mut parts = term.trim().split('*');
            let (Some(c), Some(xe), Some(le), None) =
                (parts.next(), parts.next(), parts.next(), parts.next())
            else {
                return Err(ParseBiPolyError::MalformedTerm(term.into()));
            };
            let c = parse_rational(c)?;
            let a = parse_exponent(xe, "x^")?;
            let b = parse_exponent(le, "l^")?;
            out.add_term((a, b), c);
        }
        Ok(out)
    }
}
