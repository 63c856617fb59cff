//! Ward-Horadam sequences `H_{n+2} = s·H_{n+1} + t·H_n` and their Lucas
//! specializations.
//!
//! Terms are produced by iterating the recurrence, which is exact in any ring.
//! Binet forms `A·pⁿ + B·qⁿ` are kept as a separate path for cross-checking
//! when the characteristic roots are available explicitly.

use std::sync::RwLock;

use crate::error::{Error, Result};
use crate::ring::Ring;

/// Recurrence coefficients and initial values: `H₀ = a`, `H₁ = b`.
#[derive(Clone, Debug, PartialEq)]
pub struct RecurrenceParams<T> {
    pub s: T,
    pub t: T,
    pub a: T,
    pub b: T,
}

impl<T: Ring> RecurrenceParams<T> {
    pub fn new(s: T, t: T, a: T, b: T) -> Result<Self> {
        if t.is_zero() {
            return Err(Error::DegenerateRecurrence);
        }
        Ok(Self { s, t, a, b })
    }

    /// Lucas sequence of the first kind: `U₀ = 0`, `U₁ = 1`.
    pub fn lucas_u(s: T, t: T) -> Result<Self> {
        Self::new(s, t, T::zero(), T::one())
    }

    /// Lucas sequence of the second kind: `V₀ = 2`, `V₁ = s`.
    pub fn lucas_v(s: T, t: T) -> Result<Self> {
        let b = s.clone();
        Self::new(s, t, T::from_int(2), b)
    }

    /// Parameters in the `H_{n+2} = P·H_{n+1} − Q·H_n` convention.
    pub fn from_pq(p: T, q: T, a: T, b: T) -> Result<Self> {
        Self::new(p, -q, a, b)
    }

    pub fn discriminant(&self) -> T {
        discriminant(&self.s, &self.t)
    }

    /// True when the characteristic polynomial has a double root.
    pub fn has_repeated_root(&self) -> bool {
        self.discriminant().is_zero()
    }
}

/// `(p − q)²` for the roots of `z² = s·z + t`, i.e. `s² + 4t`.
pub fn discriminant<T: Ring>(s: &T, t: &T) -> T {
    s.clone() * s.clone() + T::from_int(4) * t.clone()
}

/// A sequence with a memoized prefix `H₀..H_N`.
///
/// The cache only ever grows; `term` takes `&self` and may be shared across
/// threads.
#[derive(Debug)]
pub struct SequenceHandle<T> {
    params: RecurrenceParams<T>,
    cache: RwLock<Vec<T>>,
}

impl<T: Ring> SequenceHandle<T> {
    pub fn new(params: RecurrenceParams<T>) -> Self {
        let cache = vec![params.a.clone(), params.b.clone()];
        Self {
            params,
            cache: RwLock::new(cache),
        }
    }

    pub fn params(&self) -> &RecurrenceParams<T> {
        &self.params
    }

    pub fn term(&self, n: usize) -> T {
        if let Some(v) = self.cache.read().unwrap().get(n) {
            return v.clone();
        }
        let mut cache = self.cache.write().unwrap();
        while cache.len() <= n {
            let len = cache.len();
            let next = self.params.s.clone() * cache[len - 1].clone()
                + self.params.t.clone() * cache[len - 2].clone();
            cache.push(next);
        }
        cache[n].clone()
    }

    /// `H₀..=H_n`.
    pub fn terms(&self, n: usize) -> Vec<T> {
        self.term(n);
        self.cache.read().unwrap()[..=n].to_vec()
    }
}

impl<T: Ring> Clone for SequenceHandle<T> {
    fn clone(&self) -> Self {
        Self {
            params: self.params.clone(),
            cache: RwLock::new(self.cache.read().unwrap().clone()),
        }
    }
}

pub fn lucas_u<T: Ring>(s: T, t: T) -> Result<SequenceHandle<T>> {
    RecurrenceParams::lucas_u(s, t).map(SequenceHandle::new)
}

pub fn lucas_v<T: Ring>(s: T, t: T) -> Result<SequenceHandle<T>> {
    RecurrenceParams::lucas_v(s, t).map(SequenceHandle::new)
}

/// The companion sequences `U` and `V` for one `(s, t)`.
#[derive(Debug)]
pub struct LucasPair<T> {
    pub u: SequenceHandle<T>,
    pub v: SequenceHandle<T>,
}

impl<T: Ring> Clone for LucasPair<T> {
    fn clone(&self) -> Self {
        Self {
            u: self.u.clone(),
            v: self.v.clone(),
        }
    }
}

impl<T: Ring> LucasPair<T> {
    pub fn new(s: T, t: T) -> Result<Self> {
        Ok(Self {
            u: lucas_u(s.clone(), t.clone())?,
            v: lucas_v(s, t)?,
        })
    }

    pub fn s(&self) -> &T {
        &self.u.params().s
    }

    pub fn t(&self) -> &T {
        &self.u.params().t
    }

    pub fn discriminant(&self) -> T {
        self.u.params().discriminant()
    }
}

/// Explicit roots `p ≠ q` and weights for `H_n = A·pⁿ + B·qⁿ`.
#[derive(Clone, Debug, PartialEq)]
pub struct BinetParams<T> {
    pub p: T,
    pub q: T,
    pub weight_p: T,
    pub weight_q: T,
}

impl<T: Ring> BinetParams<T> {
    pub fn new(p: T, q: T, weight_p: T, weight_q: T) -> Result<Self> {
        let bp = Self {
            p,
            q,
            weight_p,
            weight_q,
        };
        bp.validate()?;
        Ok(bp)
    }

    fn validate(&self) -> Result<()> {
        if self.p == self.q {
            return Err(Error::InvalidRoots("p = q"));
        }
        if self.p.is_zero() || self.q.is_zero() {
            return Err(Error::InvalidRoots("p·q = 0"));
        }
        if self.weight_p.is_zero() && self.weight_q.is_zero() {
            return Err(Error::InvalidRoots("both weights vanish"));
        }
        Ok(())
    }

    /// The recurrence this closed form solves: `s = p + q`, `t = −p·q`.
    pub fn recurrence(&self) -> RecurrenceParams<T> {
        RecurrenceParams {
            s: self.p.clone() + self.q.clone(),
            t: -(self.p.clone() * self.q.clone()),
            a: self.weight_p.clone() + self.weight_q.clone(),
            b: self.weight_p.clone() * self.p.clone() + self.weight_q.clone() * self.q.clone(),
        }
    }

    /// `p + q = s` and `p·q = −t`.
    pub fn matches(&self, params: &RecurrenceParams<T>) -> bool {
        let own = self.recurrence();
        own.s == params.s && own.t == params.t
    }
}

/// `A·pⁿ + B·qⁿ` by explicit powering.
pub fn binet_term<T: Ring>(bp: &BinetParams<T>, n: usize) -> Result<T> {
    bp.validate()?;
    let pn = num_traits::pow(bp.p.clone(), n);
    let qn = num_traits::pow(bp.q.clone(), n);
    Ok(bp.weight_p.clone() * pn + bp.weight_q.clone() * qn)
}

#[cfg(test)]
mod tests {
    use num_traits::Zero;

    use super::*;
    use crate::ring::RingElement;

    fn el(s: &str) -> RingElement {
        s.parse().unwrap()
    }

    fn ints(h: &SequenceHandle<RingElement>, n: usize) -> Vec<i64> {
        h.terms(n)
            .iter()
            .map(|v| i64::try_from(v.as_integer().unwrap()).unwrap())
            .collect()
    }

    #[test]
    fn fibonacci_and_initial_values() {
        let h = SequenceHandle::new(RecurrenceParams::new(el("1"), el("1"), el("0"), el("1")).unwrap());
        assert_eq!(h.term(6), el("8"));
        assert_eq!(h.term(0), el("0"));
        assert_eq!(h.term(1), el("1"));
        let v = SequenceHandle::new(RecurrenceParams::new(el("1"), el("1"), el("2"), el("1")).unwrap());
        assert_eq!(v.term(4), el("7"));
    }

    #[test]
    fn lucas_specializations() {
        assert_eq!(ints(&lucas_u(el("1"), el("1")).unwrap(), 6), [0, 1, 1, 2, 3, 5, 8]);
        assert_eq!(ints(&lucas_u(el("2"), el("1")).unwrap(), 5), [0, 1, 2, 5, 12, 29]);
        assert_eq!(ints(&lucas_v(el("1"), el("1")).unwrap(), 5), [2, 1, 3, 4, 7, 11]);
        let v = lucas_v(el("-3/2"), el("5")).unwrap();
        assert_eq!(v.term(0), el("2"));
        assert_eq!(v.term(1), el("-3/2"));
    }

    #[test]
    fn q_integers() {
        let u = lucas_u(el("x+1"), el("-x")).unwrap();
        assert_eq!(u.term(3), el("x^2+x+1"));
        assert_eq!(u.term(5), el("x^4+x^3+x^2+x+1"));
        let v = lucas_v(el("x+1"), el("-x")).unwrap();
        assert_eq!(v.term(2), el("x^2+1"));
        assert_eq!(v.term(7), el("x^7+1"));
    }

    #[test]
    fn zero_t_is_rejected() {
        assert_eq!(lucas_u(el("1"), el("0")).unwrap_err(), Error::DegenerateRecurrence);
        assert_eq!(lucas_v(el("x"), el("0")).unwrap_err(), Error::DegenerateRecurrence);
    }

    #[test]
    fn pq_convention() {
        let params = RecurrenceParams::from_pq(el("3"), el("2"), el("0"), el("1")).unwrap();
        assert_eq!(params.t, el("-2"));
    }

    #[test]
    fn discriminants() {
        assert_eq!(discriminant(&el("1"), &el("1")), el("5"));
        assert_eq!(discriminant(&el("x+1"), &el("-x")), el("x^2-2*x+1"));
        // z² = 2z − 1 has the double root 1
        assert!(discriminant(&el("2"), &el("-1")).is_zero());
        assert_eq!(discriminant(&el("2"), &el("1")), el("8"));
    }

    #[test]
    fn binet_matches_iteration() {
        let bp = BinetParams::new(el("2"), el("1"), el("1"), el("1")).unwrap();
        assert_eq!(binet_term(&bp, 3).unwrap(), el("9"));
        assert_eq!(lucas_v(el("3"), el("-2")).unwrap().term(3), el("9"));
        assert_eq!(binet_term(&bp, 0).unwrap(), el("2"));

        let mersenne = BinetParams::new(el("2"), el("1"), el("1"), el("-1")).unwrap();
        let u = lucas_u(el("3"), el("-2")).unwrap();
        for n in 0..20 {
            let direct = binet_term(&mersenne, n).unwrap();
            assert_eq!(direct, RingElement::from((1i64 << n) - 1));
            assert_eq!(direct, u.term(n));
        }
    }

    #[test]
    fn binet_rejects_bad_roots() {
        assert!(BinetParams::new(el("2"), el("2"), el("1"), el("1")).is_err());
        assert!(BinetParams::new(el("0"), el("2"), el("1"), el("1")).is_err());
        assert!(BinetParams::new(el("1"), el("2"), el("0"), el("0")).is_err());
    }

    #[test]
    fn binet_recurrence_consistency() {
        let bp = BinetParams::new(el("3"), el("-1"), el("1"), el("1")).unwrap();
        let rec = bp.recurrence();
        assert_eq!((rec.s.clone(), rec.t.clone()), (el("2"), el("3")));
        assert!(bp.matches(&RecurrenceParams::lucas_v(el("2"), el("3")).unwrap()));
    }

    #[test]
    fn concurrent_reads_agree() {
        let h = lucas_u(el("1"), el("1")).unwrap();
        let shared = &h;
        let results: Vec<RingElement> = std::thread::scope(|scope| {
            let handles: Vec<_> = (0..8)
                .map(|i| scope.spawn(move || shared.term(40 + i % 3)))
                .collect();
            handles.into_iter().map(|j| j.join().unwrap()).collect()
        });
        for (i, v) in results.iter().enumerate() {
            assert_eq!(*v, h.term(40 + i % 3));
        }
        assert_eq!(h.term(40), el("102334155"));
    }
}
