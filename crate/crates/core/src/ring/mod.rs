//! Exact coefficient arithmetic.
//!
//! Everything above this module is generic over [`Ring`]: the integers, the
//! rationals, univariate polynomials over either, and the tagged
//! [`RingElement`] tower used by the command line.

mod element;
mod fraction;
mod parse;
mod poly;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use element::RingElement;
pub use fraction::Fraction;
pub use parse::parse_polynomial;
pub use poly::Polynomial;

/// A commutative ring of characteristic zero with decidable exact division.
pub trait Ring:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
{
    fn from_int(n: i64) -> Self;

    /// Returns `q` with `q * divisor == self`, if such `q` exists in this ring.
    fn exact_div(&self, divisor: &Self) -> Result<Self>;

    /// True when the value has integer coefficients.
    fn is_integral(&self) -> bool;
}

impl Ring for BigInt {
    fn from_int(n: i64) -> Self {
        BigInt::from(n)
    }

    fn exact_div(&self, divisor: &Self) -> Result<Self> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if (self % divisor).is_zero() {
            Ok(self / divisor)
        } else {
            Err(Error::NotDivisible)
        }
    }

    fn is_integral(&self) -> bool {
        true
    }
}

impl Ring for BigRational {
    fn from_int(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn exact_div(&self, divisor: &Self) -> Result<Self> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self / divisor)
    }

    fn is_integral(&self) -> bool {
        self.is_integer()
    }
}

/// Coefficient types a [`Polynomial`] can print and parse with explicit signs.
pub trait Coefficient: Ring + Signed {}

impl<T: Ring + Signed> Coefficient for T {}

/// `a == b` decided as `a - b == 0` on canonical forms.
pub fn ring_eq<T: Ring>(a: &T, b: &T) -> bool {
    (a.clone() - b.clone()).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integer_division_is_partial() {
        let six = BigInt::from(6);
        assert_eq!(six.exact_div(&BigInt::from(3)), Ok(BigInt::from(2)));
        assert_eq!(six.exact_div(&BigInt::from(4)), Err(Error::NotDivisible));
        assert_eq!(six.exact_div(&BigInt::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn rational_division_is_total() {
        let q = BigRational::from_int(6).exact_div(&BigRational::from_int(4)).unwrap();
        assert_eq!(q, BigRational::new(3.into(), 2.into()));
        assert!(!q.is_integral());
    }
}
