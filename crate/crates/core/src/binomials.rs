//! Generalized factorials and the coefficient families built from them.
//!
//! Every coefficient is one exact division of a fully multiplied numerator by
//! a fully multiplied denominator. The recurrence-based route lives in
//! [`crate::identities`] and never calls into this module's quotients.

use std::fmt;

use crate::error::{Error, Result};
use crate::ring::{Fraction, Ring};
use crate::sequences::{LucasPair, RecurrenceParams, SequenceHandle};

/// An exact coefficient together with whether it has integer coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct BinomialValue<T> {
    pub value: T,
    pub integral: bool,
}

impl<T: Ring> BinomialValue<T> {
    pub fn new(value: T) -> Self {
        let integral = value.is_integral();
        Self { value, integral }
    }
}

impl<T: Ring> fmt::Display for BinomialValue<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.value, f)
    }
}

fn ensure_nonzero<T: Ring>(h: &SequenceHandle<T>, upto: usize) -> Result<()> {
    match (1..=upto).find(|&i| h.term(i).is_zero()) {
        Some(index) => Err(Error::ZeroTerm { index }),
        None => Ok(()),
    }
}

/// `H_n·H_{n−1}·…·H_1`; `H_0` never enters, and the empty product is one.
pub fn gen_factorial<T: Ring>(h: &SequenceHandle<T>, n: usize) -> Result<T> {
    ensure_nonzero(h, n)?;
    Ok((1..=n).fold(T::one(), |acc, i| acc * h.term(i)))
}

/// `H_n·H_{n−1}·…·H_{n−k+1}`.
pub fn falling_factorial<T: Ring>(h: &SequenceHandle<T>, n: usize, k: usize) -> Result<T> {
    if k > n {
        return Err(Error::IndexOutOfRange { n, k });
    }
    Ok((n - k + 1..=n).fold(T::one(), |acc, i| acc * h.term(i)))
}

/// Numerator and denominator of `H_n!/(H_k!·H_{n−k}!)` before division.
///
/// Requires `k ≤ n` and `H_1..H_n` nonzero.
pub fn binomial_quotient<T: Ring>(h: &SequenceHandle<T>, n: usize, k: usize) -> Result<Fraction<T>> {
    if k > n {
        return Err(Error::IndexOutOfRange { n, k });
    }
    ensure_nonzero(h, n)?;
    // the falling factorial is H_n!/H_{n−k}!; the smaller side goes below
    let k = k.min(n - k);
    Fraction::new(falling_factorial(h, n, k)?, gen_factorial(h, k)?)
}

/// `{n choose k}` over any sequence; zero when `k > n`.
pub fn sequence_binomial<T: Ring>(h: &SequenceHandle<T>, n: usize, k: usize) -> Result<BinomialValue<T>> {
    if k > n {
        return Ok(BinomialValue::new(T::zero()));
    }
    binomial_quotient(h, n, k)?.reduce().map(BinomialValue::new)
}

pub fn u_binomial<T: Ring>(s: T, t: T, n: usize, k: usize) -> Result<BinomialValue<T>> {
    sequence_binomial(&crate::sequences::lucas_u(s, t)?, n, k)
}

/// May be a proper fraction: `V`-binomials need not be integral.
pub fn v_binomial<T: Ring>(s: T, t: T, n: usize, k: usize) -> Result<BinomialValue<T>> {
    sequence_binomial(&crate::sequences::lucas_v(s, t)?, n, k)
}

pub fn h_binomial<T: Ring>(params: &RecurrenceParams<T>, n: usize, k: usize) -> Result<BinomialValue<T>> {
    sequence_binomial(&SequenceHandle::new(params.clone()), n, k)
}

/// Numerator and denominator of `V_{r+j}!/(V_r!·U_j!)` before division.
pub fn mixed_quotient<T: Ring>(pair: &LucasPair<T>, r: usize, j: usize) -> Result<Fraction<T>> {
    ensure_nonzero(&pair.v, r + j)?;
    ensure_nonzero(&pair.u, j)?;
    Fraction::new(falling_factorial(&pair.v, r + j, j)?, gen_factorial(&pair.u, j)?)
}

/// The mixed coefficient `V_{r+j}!/(V_r!·U_j!)`.
///
/// Not symmetric: `(r, j)` and `(j, r)` generally differ. In the one-index
/// reading `{n choose k}` the lower index is `k = j`, so `{n choose 0} = 1`.
pub fn mixed_binomial<T: Ring>(s: T, t: T, r: usize, j: usize) -> Result<BinomialValue<T>> {
    mixed_quotient(&LucasPair::new(s, t)?, r, j)?
        .reduce()
        .map(BinomialValue::new)
}

/// Numerator and denominator of `H_n!/(H_{k₁}!·…·H_{k_m}!)` with `n = Σ kᵢ`.
pub fn multinomial_quotient<T: Ring>(h: &SequenceHandle<T>, parts: &[usize]) -> Result<Fraction<T>> {
    let n: usize = parts.iter().sum();
    ensure_nonzero(h, n)?;
    let den = parts
        .iter()
        .try_fold(T::one(), |acc, &k| Ok::<_, Error>(acc * gen_factorial(h, k)?))?;
    Fraction::new(gen_factorial(h, n)?, den)
}

pub fn multinomial<T: Ring>(h: &SequenceHandle<T>, parts: &[usize]) -> Result<BinomialValue<T>> {
    multinomial_quotient(h, parts)?.reduce().map(BinomialValue::new)
}
