//! Brute-force reference values.
//!
//! Each coefficient is one fraction of two term products built from scratch.
//! Nothing here calls into [`crate::binomials`] or [`crate::identities`]; the
//! mixed oracle even iterates its own `U` and `V` terms.

use crate::error::{Error, Result};
use crate::ring::Ring;
use crate::sequences::SequenceHandle;

#[derive(Clone, Debug, PartialEq)]
pub struct OracleResult<T> {
    pub numerator: T,
    pub denominator: T,
    /// `numerator / denominator` when the division is exact in the ring.
    pub reduced: Option<T>,
}

impl<T: Ring> OracleResult<T> {
    fn divide(numerator: T, denominator: T) -> Self {
        let reduced = numerator.exact_div(&denominator).ok();
        Self {
            numerator,
            denominator,
            reduced,
        }
    }
}

fn product<T: Ring>(terms: &[T], upto: usize) -> Result<T> {
    let mut acc = T::one();
    for (i, v) in terms.iter().enumerate().take(upto + 1).skip(1) {
        if v.is_zero() {
            return Err(Error::ZeroTerm { index: i });
        }
        acc = acc * v.clone();
    }
    Ok(acc)
}

/// `H_n!/(H_k!·H_{n−k}!)` with all three factorials multiplied out.
pub fn oracle_binomial<T: Ring>(h: &SequenceHandle<T>, n: usize, k: usize) -> Result<OracleResult<T>> {
    if k > n {
        return Err(Error::IndexOutOfRange { n, k });
    }
    let terms: Vec<T> = (0..=n).map(|i| h.term(i)).collect();
    let numerator = product(&terms, n)?;
    let denominator = product(&terms, k)? * product(&terms, n - k)?;
    Ok(OracleResult::divide(numerator, denominator))
}

/// `H_n!/(H_{k₁}!·…·H_{k_m}!)`.
pub fn oracle_multinomial<T: Ring>(h: &SequenceHandle<T>, parts: &[usize]) -> Result<OracleResult<T>> {
    let n: usize = parts.iter().sum();
    let terms: Vec<T> = (0..=n).map(|i| h.term(i)).collect();
    let numerator = product(&terms, n)?;
    let mut denominator = T::one();
    for &k in parts {
        denominator = denominator * product(&terms, k)?;
    }
    Ok(OracleResult::divide(numerator, denominator))
}

fn iterate<T: Ring>(s: &T, t: &T, first: T, second: T, upto: usize) -> Vec<T> {
    let mut out = vec![first, second];
    while out.len() <= upto {
        let n = out.len();
        out.push(s.clone() * out[n - 1].clone() + t.clone() * out[n - 2].clone());
    }
    out
}

/// `V_{r+j}!/(V_r!·U_j!)` from freshly iterated `U` and `V`.
pub fn oracle_mixed<T: Ring>(s: &T, t: &T, r: usize, j: usize) -> Result<OracleResult<T>> {
    if t.is_zero() {
        return Err(Error::DegenerateRecurrence);
    }
    let n = r + j;
    let u = iterate(s, t, T::zero(), T::one(), n);
    let v = iterate(s, t, T::from_int(2), s.clone(), n);
    let numerator = product(&v, n)?;
    let denominator = product(&v, r)? * product(&u, j)?;
    Ok(OracleResult::divide(numerator, denominator))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RingElement;
    use crate::sequences::{lucas_u, lucas_v};

    fn el(s: &str) -> RingElement {
        s.parse().unwrap()
    }

    #[test]
    fn hand_products() {
        let fib = lucas_u(el("1"), el("1")).unwrap();
        let r = oracle_binomial(&fib, 5, 2).unwrap();
        assert_eq!(r.reduced, Some(el("15")));
        // F₅F₄/(F₂F₁) without the shared F₃!
        assert_eq!(r.numerator, el("30"));
        assert_eq!(r.denominator, el("2"));
        assert_eq!(oracle_binomial(&fib, 9, 0).unwrap().reduced, Some(el("1")));

        let lucas = lucas_v(el("1"), el("1")).unwrap();
        assert_eq!(oracle_binomial(&lucas, 3, 1).unwrap().reduced, Some(el("4")));
        assert_eq!(oracle_binomial(&lucas, 4, 2).unwrap().reduced, Some(el("28/3")));
    }

    #[test]
    fn mixed_hand_products() {
        let (s, t) = (el("1"), el("1"));
        assert_eq!(oracle_mixed(&s, &t, 1, 1).unwrap().reduced, Some(el("3")));
        assert_eq!(oracle_mixed(&s, &t, 0, 0).unwrap().reduced, Some(el("1")));
        assert_eq!(oracle_mixed(&s, &t, 2, 1).unwrap().reduced, Some(el("4")));
    }

    #[test]
    fn non_divisible_polynomial_quotient() {
        let (s, t) = (el("x+1"), el("-x"));
        let r = oracle_mixed(&s, &t, 0, 3).unwrap();
        assert_eq!(r.reduced, None);
        let gauss = lucas_u(s, t).unwrap();
        assert_eq!(oracle_binomial(&gauss, 4, 2).unwrap().reduced, Some(el("x^4+x^3+2*x^2+x+1")));
    }

    #[test]
    fn zero_factor() {
        let u = lucas_u(el("0"), el("2")).unwrap();
        assert_eq!(oracle_binomial(&u, 3, 1).unwrap_err(), Error::ZeroTerm { index: 2 });
    }
}
