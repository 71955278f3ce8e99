//! Exact rational scalars and vectors with the Chebyshev metric.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Div, Index, Mul, MulAssign, Neg, Sub, SubAssign};
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::{Error, Result};

/// Arbitrary-precision integer used for translate indices and floors.
pub type Integer = BigInt;

/// An exact rational number in canonical form: reduced, positive denominator.
///
/// Values whose numerator and denominator fit in `i64` are stored inline and
/// combined through `i128` intermediates; anything larger falls back to
/// arbitrary precision. The representation of a value is unique, so equality
/// and hashing are structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rational(Repr);

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    /// Reduced `n/d` with `d > 0`.
    Small(i64, i64),
    /// A value that does not fit `Small`.
    Big(BigRational),
}

impl Rational {
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<Self> {
        let (numer, denom) = (numer.into(), denom.into());
        if denom.is_zero() {
            return Err(Error::ZeroDenominator(alloc::format!("{numer}/0")));
        }
        Ok(Self::from_big(BigRational::new(numer, denom)))
    }

    /// Rational from small integers. Panics on a zero denominator.
    pub fn ratio(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "nonzero denominator");
        Self::from_i128(i128::from(numer), i128::from(denom))
    }

    pub fn integer(value: impl Into<BigInt>) -> Self {
        let value = value.into();
        match value.to_i64() {
            Some(n) => Rational(Repr::Small(n, 1)),
            None => Rational(Repr::Big(BigRational::from_integer(value))),
        }
    }

    pub fn zero() -> Self {
        Rational(Repr::Small(0, 1))
    }

    pub fn one() -> Self {
        Rational(Repr::Small(1, 1))
    }

    /// Canonical value of `n/d`, `d != 0`.
    fn from_i128(n: i128, d: i128) -> Self {
        let g = n.unsigned_abs().gcd(&d.unsigned_abs()) as i128;
        let (mut n, mut d) = (n / g, d / g);
        if d < 0 {
            match (n.checked_neg(), d.checked_neg()) {
                (Some(nn), Some(dd)) => (n, d) = (nn, dd),
                _ => return Self::from_big(BigRational::new(BigInt::from(n), BigInt::from(d))),
            }
        }
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(n), Ok(d)) => Rational(Repr::Small(n, d)),
            _ => Rational(Repr::Big(BigRational::new_raw(BigInt::from(n), BigInt::from(d)))),
        }
    }

    fn from_big(value: BigRational) -> Self {
        match (value.numer().to_i64(), value.denom().to_i64()) {
            (Some(n), Some(d)) => Rational(Repr::Small(n, d)),
            _ => Rational(Repr::Big(value)),
        }
    }

    fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Repr::Big(r) => r.clone(),
        }
    }

    /// Exact value of a finite binary float. `None` for NaN and infinities.
    pub fn from_f64(value: f64) -> Option<Self> {
        BigRational::from_float(value).map(Self::from_big)
    }

    /// Nearest float; only for display and approximate norm oracles.
    pub fn to_f64(&self) -> f64 {
        match &self.0 {
            Repr::Small(n, d) => *n as f64 / *d as f64,
            Repr::Big(r) => r.to_f64().unwrap_or(f64::NAN),
        }
    }

    pub fn numer(&self) -> Integer {
        match &self.0 {
            Repr::Small(n, _) => BigInt::from(*n),
            Repr::Big(r) => r.numer().clone(),
        }
    }

    pub fn denom(&self) -> Integer {
        match &self.0 {
            Repr::Small(_, d) => BigInt::from(*d),
            Repr::Big(r) => r.denom().clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small(0, _))
    }

    pub fn is_positive(&self) -> bool {
        match &self.0 {
            Repr::Small(n, _) => *n > 0,
            Repr::Big(r) => r.is_positive(),
        }
    }

    pub fn is_negative(&self) -> bool {
        match &self.0 {
            Repr::Small(n, _) => *n < 0,
            Repr::Big(r) => r.is_negative(),
        }
    }

    pub fn is_integer(&self) -> bool {
        match &self.0 {
            Repr::Small(_, d) => *d == 1,
            Repr::Big(r) => r.is_integer(),
        }
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    /// Largest integer not exceeding `self`.
    pub fn floor(&self) -> Integer {
        match &self.0 {
            Repr::Small(n, d) => BigInt::from(n.div_euclid(*d)),
            Repr::Big(r) => r.numer().div_floor(r.denom()),
        }
    }

    /// Smallest integer not below `self`.
    pub fn ceil(&self) -> Integer {
        match &self.0 {
            Repr::Small(n, d) => BigInt::from(-(-i128::from(*n)).div_euclid(i128::from(*d))),
            Repr::Big(r) => r.numer().div_ceil(r.denom()),
        }
    }

    /// `self - floor(self)`, always in `[0, 1)`.
    pub fn fract(&self) -> Self {
        match &self.0 {
            Repr::Small(n, d) => Rational(Repr::Small(n.rem_euclid(*d), *d)),
            Repr::Big(_) => self - &Rational::integer(self.floor()),
        }
    }

    pub fn recip(&self) -> Option<Self> {
        Rational::one().checked_div(self)
    }

    pub fn checked_div(&self, rhs: &Rational) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        Some(match (&self.0, &rhs.0) {
            (Repr::Small(n1, d1), Repr::Small(n2, d2)) => {
                Self::from_i128(i128::from(*n1) * i128::from(*d2), i128::from(*d1) * i128::from(*n2))
            }
            _ => Self::from_big(self.to_big() / rhs.to_big()),
        })
    }

    pub fn pow(&self, exp: u32) -> Self {
        Self::from_big(num_traits::Pow::pow(&self.to_big(), exp))
    }

    pub fn min(self, other: Self) -> Self {
        core::cmp::min(self, other)
    }

    pub fn max(self, other: Self) -> Self {
        core::cmp::max(self, other)
    }
}

impl Default for Rational {
    fn default() -> Self {
        Rational::zero()
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        match (&self.0, &other.0) {
            (Repr::Small(n1, d1), Repr::Small(n2, d2)) => {
                (i128::from(*n1) * i128::from(*d2)).cmp(&(i128::from(*n2) * i128::from(*d1)))
            }
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl From<i64> for Rational {
    fn from(value: i64) -> Self {
        Rational(Repr::Small(value, 1))
    }
}

impl From<BigInt> for Rational {
    fn from(value: BigInt) -> Self {
        Rational::integer(value)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(n, 1) => write!(f, "{n}"),
            Repr::Small(n, d) => write!(f, "{n}/{d}"),
            Repr::Big(r) if r.is_integer() => write!(f, "{}", r.numer()),
            Repr::Big(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_integer(text: &str) -> Option<BigInt> {
    let digits = text.strip_prefix(['+', '-']).unwrap_or(text);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    BigInt::from_str(text.strip_prefix('+').unwrap_or(text)).ok()
}

impl FromStr for Rational {
    type Err = Error;

    /// Accepts `p/q`, integers and finite decimals such as `-0.5` or `3.25`.
    fn from_str(text: &str) -> Result<Self> {
        let malformed = || Error::MalformedRational(text.to_string());
        let s = text.trim();
        if let Some((p, q)) = s.split_once('/') {
            let numer = parse_integer(p.trim()).ok_or_else(malformed)?;
            let q = q.trim();
            if q.starts_with(['+', '-']) {
                return Err(malformed());
            }
            let denom = parse_integer(q).ok_or_else(malformed)?;
            if denom.is_zero() {
                return Err(Error::ZeroDenominator(text.to_string()));
            }
            return Rational::new(numer, denom);
        }
        if let Some((whole, frac)) = s.split_once('.') {
            if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
                return Err(malformed());
            }
            let negative = whole.starts_with('-');
            let whole_digits = whole.strip_prefix(['+', '-']).unwrap_or(whole);
            if !whole_digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(malformed());
            }
            let mut digits = String::with_capacity(whole_digits.len() + frac.len() + 1);
            if negative {
                digits.push('-');
            }
            digits.push_str(if whole_digits.is_empty() { "0" } else { whole_digits });
            digits.push_str(frac);
            let numer = BigInt::from_str(&digits).map_err(|_| malformed())?;
            return Rational::new(numer, num_traits::pow(BigInt::from(10u8), frac.len()));
        }
        parse_integer(s).map(Rational::integer).ok_or_else(malformed)
    }
}

fn add(x: &Rational, y: &Rational) -> Rational {
    match (&x.0, &y.0) {
        (Repr::Small(n1, d1), Repr::Small(n2, d2)) => {
            let (n1, d1, n2, d2) = (i128::from(*n1), i128::from(*d1), i128::from(*n2), i128::from(*d2));
            if d1 == d2 {
                Rational::from_i128(n1 + n2, d1)
            } else {
                Rational::from_i128(n1 * d2 + n2 * d1, d1 * d2)
            }
        }
        _ => Rational::from_big(x.to_big() + y.to_big()),
    }
}

fn sub(x: &Rational, y: &Rational) -> Rational {
    add(x, &-y)
}

fn mul(x: &Rational, y: &Rational) -> Rational {
    match (&x.0, &y.0) {
        (Repr::Small(n1, d1), Repr::Small(n2, d2)) => {
            Rational::from_i128(i128::from(*n1) * i128::from(*n2), i128::from(*d1) * i128::from(*d2))
        }
        _ => Rational::from_big(x.to_big() * y.to_big()),
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $assign_trait:ident, $assign_method:ident) => {
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                $method(self, rhs)
            }
        }
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                $method(&self, &rhs)
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                $method(&self, rhs)
            }
        }
        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                $method(self, &rhs)
            }
        }
        impl $assign_trait<&Rational> for Rational {
            fn $assign_method(&mut self, rhs: &Rational) {
                *self = $method(self, rhs);
            }
        }
        impl $assign_trait<Rational> for Rational {
            fn $assign_method(&mut self, rhs: Rational) {
                *self = $method(self, &rhs);
            }
        }
    };
}

forward_binop!(Add, add, AddAssign, add_assign);
forward_binop!(Sub, sub, SubAssign, sub_assign);
forward_binop!(Mul, mul, MulAssign, mul_assign);

impl Div<&Rational> for &Rational {
    type Output = Rational;
    /// Panics on division by zero, like integer division.
    fn div(self, rhs: &Rational) -> Rational {
        self.checked_div(rhs).expect("division by zero rational")
    }
}

impl Div<Rational> for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        &self / &rhs
    }
}

impl Div<&Rational> for Rational {
    type Output = Rational;
    fn div(self, rhs: &Rational) -> Rational {
        &self / rhs
    }
}

impl Div<Rational> for &Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        self / &rhs
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        match &self.0 {
            Repr::Small(n, d) if *n != i64::MIN => Rational(Repr::Small(-n, *d)),
            _ => Rational::from_big(-self.to_big()),
        }
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        -&self
    }
}

impl core::iter::Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl<'a> core::iter::Sum<&'a Rational> for Rational {
    fn sum<I: Iterator<Item = &'a Rational>>(iter: I) -> Self {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

/// A point (or direction) of `R^d` with exact coordinates, `d >= 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RVector {
    coords: Vec<Rational>,
}

impl RVector {
    pub fn new(coords: Vec<Rational>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::ZeroDimension);
        }
        Ok(RVector { coords })
    }

    pub fn from_ints(coords: &[i64]) -> Result<Self> {
        Self::new(coords.iter().copied().map(Rational::from).collect())
    }

    pub fn zeros(dim: usize) -> Result<Self> {
        Self::new(alloc::vec![Rational::zero(); dim])
    }

    /// The all-ones vector `1_d`.
    pub fn ones(dim: usize) -> Result<Self> {
        Self::new(alloc::vec![Rational::one(); dim])
    }

    /// Standard basis vector `e_i` (zero-based `i`).
    pub fn basis(dim: usize, i: usize) -> Result<Self> {
        if i >= dim {
            return Err(Error::DirectionOutOfRange { direction: i, dim });
        }
        let mut v = Self::zeros(dim)?;
        v.coords[i] = Rational::one();
        Ok(v)
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.coords
    }

    pub fn last(&self) -> &Rational {
        self.coords.last().expect("nonempty vector")
    }

    pub(crate) fn check_dim(&self, expected: usize) -> Result<()> {
        if self.dim() == expected {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected, found: self.dim() })
        }
    }

    fn zip_with(&self, other: &RVector, f: impl Fn(&Rational, &Rational) -> Rational) -> Result<RVector> {
        other.check_dim(self.dim())?;
        Ok(RVector {
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| f(a, b)).collect(),
        })
    }

    pub fn try_add(&self, other: &RVector) -> Result<RVector> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn try_sub(&self, other: &RVector) -> Result<RVector> {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn scaled(&self, factor: &Rational) -> RVector {
        RVector { coords: self.coords.iter().map(|c| c * factor).collect() }
    }

    /// `self + s·1_d`.
    pub fn shifted_diag(&self, s: &Rational) -> RVector {
        RVector { coords: self.coords.iter().map(|c| c + s).collect() }
    }

    pub fn dot(&self, other: &RVector) -> Result<Rational> {
        other.check_dim(self.dim())?;
        Ok(self.coords.iter().zip(&other.coords).map(|(a, b)| a * b).sum())
    }

    /// `‖x‖∞ = max_i |x_i|`.
    pub fn linf_norm(&self) -> Rational {
        self.coords.iter().map(Rational::abs).max().expect("nonempty vector")
    }

    /// Appends one coordinate, moving to `R^{d+1}`.
    pub fn extended(&self, last: Rational) -> RVector {
        let mut coords = self.coords.clone();
        coords.push(last);
        RVector { coords }
    }
}

impl Index<usize> for RVector {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.coords[i]
    }
}

impl fmt::Display for RVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for RVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for RVector {
    type Err = Error;

    /// Comma-separated rationals, e.g. `0,7/4,-1/2`.
    fn from_str(text: &str) -> Result<Self> {
        let coords = text
            .split(',')
            .map(Rational::from_str)
            .collect::<Result<Vec<_>>>()?;
        RVector::new(coords)
    }
}

/// Chebyshev distance `max_i |x_i - y_i|`.
pub fn linf_dist(x: &RVector, y: &RVector) -> Result<Rational> {
    y.check_dim(x.dim())?;
    Ok(x.coords
        .iter()
        .zip(&y.coords)
        .map(|(a, b)| (a - b).abs())
        .max()
        .expect("nonempty vector"))
}

/// `lo <= value < hi`.
pub(crate) fn in_half_open(value: &Rational, lo: &Rational, hi: &Rational) -> bool {
    value >= lo && value < hi
}
