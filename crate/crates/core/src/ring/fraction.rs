use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::Ring;
use crate::error::{Error, Result};

/// Unreduced quotient `num / den` over a ring, compared by cross-multiplication.
///
/// Used where a coefficient lives in the fraction field but not in the ring
/// itself (mixed coefficients over `Q[x]`, for instance), so identities can
/// still be checked exactly without a reduced rational-function type.
#[derive(Clone, Debug)]
pub struct Fraction<T> {
    num: T,
    den: T,
}

impl<T: Ring> Fraction<T> {
    pub fn new(num: T, den: T) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self { num, den })
    }

    pub fn numerator(&self) -> &T {
        &self.num
    }

    pub fn denominator(&self) -> &T {
        &self.den
    }

    /// The ring element this fraction equals, if any.
    pub fn reduce(&self) -> Result<T> {
        self.num.exact_div(&self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Scales by an element of the base ring.
    pub fn scale(&self, c: &T) -> Self {
        Self {
            num: c.clone() * self.num.clone(),
            den: self.den.clone(),
        }
    }
}

impl<T: Ring> From<T> for Fraction<T> {
    fn from(value: T) -> Self {
        Self {
            num: value,
            den: T::one(),
        }
    }
}

impl<T: Ring> PartialEq for Fraction<T> {
    fn eq(&self, other: &Self) -> bool {
        (self.num.clone() * other.den.clone() - other.num.clone() * self.den.clone()).is_zero()
    }
}

impl<T: Ring> Add for Fraction<T> {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        if self.den == rhs.den {
            return Self {
                num: self.num + rhs.num,
                den: self.den,
            };
        }
        Self {
            num: self.num * rhs.den.clone() + rhs.num * self.den.clone(),
            den: self.den * rhs.den,
        }
    }
}

impl<T: Ring> Neg for Fraction<T> {
    type Output = Self;

    fn neg(self) -> Self {
        Self {
            num: -self.num,
            den: self.den,
        }
    }
}

impl<T: Ring> Sub for Fraction<T> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<T: Ring> Mul for Fraction<T> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        Self {
            num: self.num * rhs.num,
            den: self.den * rhs.den,
        }
    }
}

impl<T: Ring> Zero for Fraction<T> {
    fn zero() -> Self {
        T::zero().into()
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl<T: Ring> One for Fraction<T> {
    fn one() -> Self {
        T::one().into()
    }
}

impl<T: Ring> fmt::Display for Fraction<T> {
    /// The reduced value when it exists in the ring, else `(num)/(den)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.reduce() {
            Ok(v) => write!(f, "{v}"),
            Err(_) => write!(f, "({})/({})", self.num, self.den),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RingElement;

    fn el(s: &str) -> RingElement {
        s.parse().unwrap()
    }

    #[test]
    fn cross_multiplied_equality() {
        let a = Fraction::new(el("x^2-1"), el("x-1")).unwrap();
        assert_eq!(a, Fraction::from(el("x+1")));
        let b = Fraction::new(el("2*x+2"), el("2*x-2")).unwrap();
        assert_eq!(b, Fraction::new(el("x+1"), el("x-1")).unwrap());
        assert_ne!(b, Fraction::from(el("1")));
    }

    #[test]
    fn display_prefers_reduced_form() {
        assert_eq!(Fraction::new(el("x^2-1"), el("x-1")).unwrap().to_string(), "x+1");
        assert_eq!(Fraction::new(el("x^2+1"), el("x+1")).unwrap().to_string(), "(x^2+1)/(x+1)");
    }

    #[test]
    fn arithmetic_matches_field_rules() {
        let half = Fraction::new(el("1"), el("x")).unwrap();
        let sum = half.clone() + half.clone();
        assert_eq!(sum, Fraction::new(el("2"), el("x")).unwrap());
        assert_eq!(half.clone() * Fraction::from(el("x")), Fraction::one());
        assert!((half.clone() - half).is_zero());
        assert_eq!(Fraction::new(el("1"), el("0")).unwrap_err(), Error::DivisionByZero);
    }
}
