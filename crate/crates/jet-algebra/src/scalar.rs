use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Rational = num_rational::BigRational;

/// Shorthand for the rational `n/d`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Coefficient field for jets.
pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + 'static
{
    /// True when arithmetic never rounds.
    const EXACT: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    fn from_ratio(n: i64, d: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn is_positive(&self) -> bool;
    fn to_f64(&self) -> f64;
    /// The positive real `n`-th root, when it exists in this field.
    fn nth_root(&self, n: u32) -> Option<Self>;

    /// Zero test: exact in rational mode, `|x| <= tol` in float mode.
    fn is_negligible(&self, tol: f64) -> bool {
        if Self::EXACT {
            self.is_zero()
        } else {
            self.to_f64().abs() <= tol
        }
    }

    fn powi(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc * self.clone();
        }
        acc
    }
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_i64(n: i64) -> Self {
        n as f64
    }
    fn from_ratio(n: i64, d: i64) -> Self {
        n as f64 / d as f64
    }
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
    fn is_positive(&self) -> bool {
        *self > 0.0
    }
    fn to_f64(&self) -> f64 {
        *self
    }
    fn nth_root(&self, n: u32) -> Option<Self> {
        match n {
            1 => Some(*self),
            2 if *self >= 0.0 => Some(self.sqrt()),
            4 if *self >= 0.0 => Some(self.sqrt().sqrt()),
            _ if *self > 0.0 => Some(self.powf(1.0 / n as f64)),
            _ => None,
        }
    }
}

fn exact_int_root(x: &BigInt, n: u32) -> Option<BigInt> {
    if x.is_negative() {
        return None;
    }
    let r = x.nth_root(n);
    (num_traits::pow(r.clone(), n as usize) == *x).then_some(r)
}

impl Scalar for Rational {
    const EXACT: bool = true;

    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(n: i64) -> Self {
        Rational::from_integer(BigInt::from(n))
    }
    fn from_ratio(n: i64, d: i64) -> Self {
        rat(n, d)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_positive(&self) -> bool {
        Signed::is_positive(self)
    }
    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
    fn nth_root(&self, n: u32) -> Option<Self> {
        let num = exact_int_root(self.numer(), n)?;
        let den = exact_int_root(self.denom(), n)?;
        Some(Rational::new(num, den))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_roots() {
        assert_eq!(rat(81, 16).nth_root(4), Some(rat(3, 2)));
        assert_eq!(rat(9, 4).nth_root(2), Some(rat(3, 2)));
        assert_eq!(rat(2, 1).nth_root(2), None);
        assert_eq!(rat(-4, 1).nth_root(2), None);
    }

    #[test]
    fn float_roots() {
        assert_eq!(16f64.nth_root(4), Some(2.0));
        assert_eq!((-1f64).nth_root(2), None);
    }
}
