use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{parse_polynomial, Polynomial, Ring};
use crate::error::{Error, Result};

/// Exact scalar drawn from the tower `Z ⊂ Q ⊂ Q[x]`.
///
/// Values are always stored in the narrowest variant that holds them: a
/// rational with denominator one is an `Integer`, and a polynomial of degree
/// zero is a scalar. Derived equality is therefore ring equality, and mixed
/// arithmetic promotes to the wider operand before demoting the result.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RingElement {
    Integer(BigInt),
    Rational(BigRational),
    Polynomial(Polynomial<BigRational>),
}

impl RingElement {
    pub fn integer(n: impl Into<BigInt>) -> Self {
        RingElement::Integer(n.into())
    }

    /// `num/den` reduced; panics when `den == 0`.
    pub fn rational(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Self {
        RingElement::Rational(BigRational::new(num.into(), den.into())).normalize()
    }

    pub fn polynomial(p: Polynomial<BigRational>) -> Self {
        RingElement::Polynomial(p).normalize()
    }

    /// The indeterminate `x`.
    pub fn x() -> Self {
        RingElement::Polynomial(Polynomial::x())
    }

    /// Polynomial from ascending integer coefficients.
    pub fn from_coeffs(coeffs: &[i64]) -> Self {
        Self::polynomial(Polynomial::new(
            coeffs.iter().map(|&c| BigRational::from_int(c)).collect(),
        ))
    }

    pub fn is_polynomial(&self) -> bool {
        matches!(self, RingElement::Polynomial(_))
    }

    pub fn as_integer(&self) -> Option<&BigInt> {
        match self {
            RingElement::Integer(n) => Some(n),
            _ => None,
        }
    }

    fn normalize(self) -> Self {
        match self {
            RingElement::Rational(q) if q.is_integer() => RingElement::Integer(q.to_integer()),
            RingElement::Polynomial(p) => match p.as_constant() {
                Some(c) => RingElement::Rational(c).normalize(),
                None => RingElement::Polynomial(p),
            },
            other => other,
        }
    }

    fn to_rational(&self) -> Option<BigRational> {
        match self {
            RingElement::Integer(n) => Some(BigRational::from_integer(n.clone())),
            RingElement::Rational(q) => Some(q.clone()),
            RingElement::Polynomial(_) => None,
        }
    }

    fn to_polynomial(&self) -> Polynomial<BigRational> {
        match self {
            RingElement::Polynomial(p) => p.clone(),
            scalar => Polynomial::constant(scalar.to_rational().unwrap()),
        }
    }

    fn combine(
        self,
        rhs: Self,
        int: impl FnOnce(BigInt, BigInt) -> BigInt,
        rat: impl FnOnce(BigRational, BigRational) -> BigRational,
        poly: impl FnOnce(Polynomial<BigRational>, Polynomial<BigRational>) -> Polynomial<BigRational>,
    ) -> Self {
        use RingElement::*;
        let out = match (self, rhs) {
            (Integer(a), Integer(b)) => Integer(int(a, b)),
            (a, b) if a.is_polynomial() || b.is_polynomial() => {
                Polynomial(poly(a.to_polynomial(), b.to_polynomial()))
            }
            (a, b) => Rational(rat(a.to_rational().unwrap(), b.to_rational().unwrap())),
        };
        out.normalize()
    }
}

impl Zero for RingElement {
    fn zero() -> Self {
        RingElement::Integer(BigInt::zero())
    }

    fn is_zero(&self) -> bool {
        matches!(self, RingElement::Integer(n) if n.is_zero())
    }
}

impl One for RingElement {
    fn one() -> Self {
        RingElement::Integer(BigInt::one())
    }
}

impl Add for RingElement {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        self.combine(rhs, |a, b| a + b, |a, b| a + b, |a, b| a + b)
    }
}

impl Sub for RingElement {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self.combine(rhs, |a, b| a - b, |a, b| a - b, |a, b| a - b)
    }
}

impl Mul for RingElement {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        self.combine(rhs, |a, b| a * b, |a, b| a * b, |a, b| a * b)
    }
}

impl Neg for RingElement {
    type Output = Self;

    fn neg(self) -> Self {
        match self {
            RingElement::Integer(n) => RingElement::Integer(-n),
            RingElement::Rational(q) => RingElement::Rational(-q),
            RingElement::Polynomial(p) => RingElement::Polynomial(-p),
        }
    }
}

impl From<i64> for RingElement {
    fn from(n: i64) -> Self {
        RingElement::Integer(n.into())
    }
}

impl From<BigInt> for RingElement {
    fn from(n: BigInt) -> Self {
        RingElement::Integer(n)
    }
}

impl From<BigRational> for RingElement {
    fn from(q: BigRational) -> Self {
        RingElement::Rational(q).normalize()
    }
}

impl From<Polynomial<BigRational>> for RingElement {
    fn from(p: Polynomial<BigRational>) -> Self {
        RingElement::polynomial(p)
    }
}

impl Ring for RingElement {
    fn from_int(n: i64) -> Self {
        n.into()
    }

    /// Scalars always divide (landing in `Q` if needed); anything involving a
    /// polynomial must leave a zero remainder.
    fn exact_div(&self, divisor: &Self) -> Result<Self> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match (self.to_rational(), divisor.to_rational()) {
            (Some(a), Some(b)) => Ok(RingElement::Rational(a / b).normalize()),
            _ => self
                .to_polynomial()
                .div_exact(&divisor.to_polynomial())
                .map(RingElement::polynomial),
        }
    }

    fn is_integral(&self) -> bool {
        match self {
            RingElement::Integer(_) => true,
            RingElement::Rational(_) => false,
            RingElement::Polynomial(p) => p.is_integral(),
        }
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingElement::Integer(n) => write!(f, "{n}"),
            RingElement::Rational(q) => write!(f, "{q}"),
            RingElement::Polynomial(p) => write!(f, "{p}"),
        }
    }
}

impl FromStr for RingElement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_polynomial(s).map(RingElement::polynomial)
    }
}
