//! Exact arithmetic in Q(i, √2, √3).
//!
//! A [`Scalar`] stores eight rational coordinates over the basis
//! `{1, √2, √3, √6} × {1, i}`. The representation is canonical, so
//! structural equality is field equality.

mod format;
mod parse;

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::linalg::{self, Solution};

pub use parse::{parse_scalar, ParseError};

pub type Rational = BigRational;

/// Real quadratic radicals spanning the real subfield over Q.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Radical {
    One = 0,
    Sqrt2 = 1,
    Sqrt3 = 2,
    Sqrt6 = 3,
}

impl Radical {
    pub const ALL: [Radical; 4] = [Radical::One, Radical::Sqrt2, Radical::Sqrt3, Radical::Sqrt6];

    fn from_bits(bits: usize) -> Radical {
        Self::ALL[bits]
    }

    /// `√r · √s = k · √t`, returned as `(k, t)`.
    ///
    /// Bit 0 of the discriminant tracks the power of 2, bit 1 the power of 3.
    fn product(self, other: Radical) -> (i64, Radical) {
        let (a, b) = (self as usize, other as usize);
        let common = a & b;
        let mut k = 1;
        if common & 1 != 0 {
            k *= 2;
        }
        if common & 2 != 0 {
            k *= 3;
        }
        (k, Radical::from_bits(a ^ b))
    }

    pub fn token(self) -> Option<&'static str> {
        match self {
            Radical::One => None,
            Radical::Sqrt2 => Some("sqrt2"),
            Radical::Sqrt3 => Some("sqrt3"),
            Radical::Sqrt6 => Some("sqrt6"),
        }
    }

    fn value(self) -> f64 {
        match self {
            Radical::One => 1.0,
            Radical::Sqrt2 => 2f64.sqrt(),
            Radical::Sqrt3 => 3f64.sqrt(),
            Radical::Sqrt6 => 6f64.sqrt(),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    // index = 2 * radical + (1 if imaginary)
    coords: [Rational; 8],
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Applies one field operation; `Div` by zero is the only failure.
pub fn scalar_arithmetic(a: &Scalar, b: &Scalar, op: ArithOp) -> Result<Scalar> {
    match op {
        ArithOp::Add => Ok(a + b),
        ArithOp::Sub => Ok(a - b),
        ArithOp::Mul => Ok(a * b),
        ArithOp::Div => a.checked_div(b),
    }
}

fn idx(radical: Radical, imaginary: bool) -> usize {
    2 * radical as usize + imaginary as usize
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar {
            coords: std::array::from_fn(|_| Rational::zero()),
        }
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn i() -> Self {
        Self::term(Rational::one(), Radical::One, true)
    }

    pub fn sqrt2() -> Self {
        Self::term(Rational::one(), Radical::Sqrt2, false)
    }

    pub fn sqrt3() -> Self {
        Self::term(Rational::one(), Radical::Sqrt3, false)
    }

    pub fn sqrt6() -> Self {
        Self::term(Rational::one(), Radical::Sqrt6, false)
    }

    /// `coeff · radical · (i if imaginary)`.
    pub fn term(coeff: Rational, radical: Radical, imaginary: bool) -> Self {
        let mut s = Self::zero();
        s.coords[idx(radical, imaginary)] = coeff;
        s
    }

    pub fn from_rational(q: Rational) -> Self {
        Self::term(q, Radical::One, false)
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(n.into()))
    }

    pub fn from_ratio(numer: i64, denom: i64) -> Self {
        Self::from_rational(Rational::new(numer.into(), denom.into()))
    }

    pub fn coord(&self, radical: Radical, imaginary: bool) -> &Rational {
        &self.coords[idx(radical, imaginary)]
    }

    /// All eight coordinates, ordered (1, √2, √3, √6) × (real, imaginary).
    pub fn coords(&self) -> &[Rational; 8] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// The value as a rational, if it has no radical or imaginary part.
    pub fn as_rational(&self) -> Option<&Rational> {
        self.coords[1..]
            .iter()
            .all(Zero::is_zero)
            .then_some(&self.coords[0])
    }

    pub fn is_real(&self) -> bool {
        self.coords.iter().skip(1).step_by(2).all(Zero::is_zero)
    }

    /// Complex conjugate (`i ↦ −i`).
    pub fn conj(&self) -> Self {
        let mut s = self.clone();
        for k in (1..8).step_by(2) {
            s.coords[k] = -s.coords[k].clone();
        }
        s
    }

    /// Inverse by solving `self · x = 1` as an 8×8 system over Q.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // column k holds the coordinates of self · e_k
        let columns: Vec<Vec<Rational>> = (0..8)
            .map(|k| {
                let mut e = Scalar::zero();
                e.coords[k] = Rational::one();
                (self * &e).coords.to_vec()
            })
            .collect();
        let rhs = Scalar::one().coords.to_vec();
        match linalg::solve(&columns, &rhs) {
            Solution::Unique(x) => Ok(Scalar {
                coords: x.try_into().expect("eight coordinates"),
            }),
            _ => unreachable!("multiplication by a nonzero field element is invertible"),
        }
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    /// Square root of a nonzero rational value, when it lies in the field.
    ///
    /// Negative rationals give `i · √|q|`. Values with radical or imaginary
    /// parts are not handled.
    pub fn sqrt(&self) -> Option<Self> {
        let q = self.as_rational()?;
        if q.is_zero() {
            return Some(Self::zero());
        }
        let imaginary = q.is_negative();
        let q = q.abs();
        // q = r² · f for some squarefree f ∈ {1, 2, 3, 6}
        for (radical, f) in Radical::ALL.into_iter().zip([1, 2, 3, 6]) {
            let reduced = &q / Rational::from_integer(BigInt::from(f));
            if let (Some(n), Some(d)) = (
                exact_sqrt(reduced.numer()),
                exact_sqrt(reduced.denom()),
            ) {
                return Some(Self::term(Rational::new(n, d), radical, imaginary));
            }
        }
        None
    }

    /// Nearest complex binary64 value, as `(re, im)`.
    pub fn to_f64(&self) -> (f64, f64) {
        let mut re = 0.0;
        let mut im = 0.0;
        for radical in Radical::ALL {
            let r = radical.value();
            re += self.coord(radical, false).to_f64().unwrap_or(f64::NAN) * r;
            im += self.coord(radical, true).to_f64().unwrap_or(f64::NAN) * r;
        }
        (re, im)
    }
}

fn exact_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

impl Default for Scalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_integer(n)
    }
}

impl From<Rational> for Scalar {
    fn from(q: Rational) -> Self {
        Scalar::from_rational(q)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format::format_scalar(self))
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({})", self)
    }
}

impl FromStr for Scalar {
    type Err = ParseError;

    fn from_str(s: &str) -> std::result::Result<Self, ParseError> {
        parse_scalar(s)
    }
}

pub use format::format_scalar;

impl serde::Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar {
            coords: std::array::from_fn(|k| &self.coords[k] + &rhs.coords[k]),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar {
            coords: std::array::from_fn(|k| &self.coords[k] - &rhs.coords[k]),
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        let mut out = Scalar::zero();
        for (a, x) in self.coords.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (b, y) in rhs.coords.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let (k, radical) =
                    Radical::from_bits(a / 2).product(Radical::from_bits(b / 2));
                let (ia, ib) = (a % 2 == 1, b % 2 == 1);
                // i·i = −1
                let sign = if ia && ib { -k } else { k };
                let target = idx(radical, ia ^ ib);
                out.coords[target] += x * y * Rational::from_integer(sign.into());
            }
        }
        out
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            coords: std::array::from_fn(|k| -self.coords[k].clone()),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar { (&self).$m(&rhs) }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar { (&self).$m(rhs) }
        }
        impl<'a> $tr<Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        for k in 0..8 {
            self.coords[k] += &rhs.coords[k];
        }
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        for k in 0..8 {
            self.coords[k] -= &rhs.coords[k];
        }
    }
}

impl std::iter::Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |acc, x| acc + x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(text: &str) -> Scalar {
        text.parse().unwrap()
    }

    #[test]
    fn radical_table() {
        assert_eq!(Scalar::sqrt3() * Scalar::sqrt3(), Scalar::from(3));
        assert_eq!(Scalar::sqrt2() * Scalar::sqrt3(), Scalar::sqrt6());
        assert_eq!(Scalar::sqrt2() * Scalar::sqrt6(), Scalar::from(2) * Scalar::sqrt3());
        assert_eq!(Scalar::sqrt3() * Scalar::sqrt6(), Scalar::from(3) * Scalar::sqrt2());
        assert_eq!(Scalar::sqrt6() * Scalar::sqrt6(), Scalar::from(6));
        assert_eq!(Scalar::i() * Scalar::i(), Scalar::from(-1));
    }

    #[test]
    fn inverse_of_one_plus_sqrt3() {
        let x = s("1 + sqrt3");
        let inv = x.inv().unwrap();
        assert_eq!(inv, s("-1/2 + 1/2*sqrt3"));
        assert!((&x * &inv).is_one());
    }

    #[test]
    fn division_by_zero() {
        assert!(matches!(
            scalar_arithmetic(&Scalar::one(), &Scalar::zero(), ArithOp::Div),
            Err(Error::DivisionByZero)
        ));
        assert_eq!(
            scalar_arithmetic(&Scalar::sqrt6(), &Scalar::sqrt2(), ArithOp::Div).unwrap(),
            Scalar::sqrt3()
        );
    }

    #[test]
    fn square_roots() {
        assert_eq!(Scalar::from(12).sqrt(), Some(s("2*sqrt3")));
        assert_eq!(Scalar::from(6).sqrt(), Some(Scalar::sqrt6()));
        assert_eq!(Scalar::from(9).sqrt(), Some(Scalar::from(3)));
        assert_eq!(Scalar::from_ratio(1, 12).sqrt(), Some(s("1/6*sqrt3")));
        assert_eq!(Scalar::from(-4).sqrt(), Some(s("2*i")));
        assert_eq!(Scalar::from(5).sqrt(), None);
        assert_eq!(Scalar::sqrt2().sqrt(), None);
    }

    #[test]
    fn conjugate_and_float() {
        assert_eq!(s("1 + 2*i").conj(), s("1 - 2*i"));
        let (re, im) = s("1/2*sqrt3 - i").to_f64();
        assert!((re - 0.75f64.sqrt()).abs() < 1e-15);
        assert_eq!(im, -1.0);
    }
}
