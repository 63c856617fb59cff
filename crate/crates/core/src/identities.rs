//! Exact two-sided evaluation of the recurrence and addition identities
//! relating `U`, `V`, their binomials and the mixed coefficients.
//!
//! Binomial cells are taken from the factorial quotients in
//! [`crate::binomials`] as unreduced fractions, so identities involving
//! coefficients that are not polynomials (mixed coefficients over `Q[x]`)
//! are still decided exactly by cross-multiplication.
//!
//! The recurrence-side evaluator [`recurrence_table`] builds the whole
//! triangle from the boundary ones and the decomposition coefficients alone;
//! comparing it against the quotient triangle is the equivalence check.

use std::fmt;

use crate::binomials::{binomial_quotient, mixed_quotient};
use crate::error::{Error, Result};
use crate::ring::{Fraction, Ring};
use crate::sequences::{LucasPair, RecurrenceParams, SequenceHandle};

/// Which identity a report row belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Identity {
    /// `F_{r+j} = g₁·F_r + g₂·F_j` with the Lucas coefficients on `U`.
    Decomposition,
    /// `2·U_{r+j} = U_r·V_j + U_j·V_r`.
    AdditionU,
    /// `2·V_{r+j} = V_r·V_j + Δ·U_j·U_r`.
    AdditionV,
    /// `2·{r+j; r,j}_U = V_j·{r+j−1; r−1,j}_U + V_r·{r+j−1; r,j−1}_U`.
    DoubledU,
    /// `V_{r+j} = U_{j+1}·V_r + t·V_{r−1}·U_j`.
    VFromU,
    /// Mixed-coefficient recurrence with the given second coefficient.
    MixedRecurrence(SecondCoefficient),
    /// `2·M(r,j) = V_j·M(r−1,j) + Δ·U_r·M(r,j−1)`.
    MixedDoubled,
    /// Recurrence-built triangle against the factorial quotient.
    RecurrenceEquivalence,
}

impl Identity {
    /// Label used on the command line and in serialized reports.
    pub fn label(self) -> &'static str {
        match self {
            Identity::Decomposition => "eq7",
            Identity::AdditionU => "eq8-u",
            Identity::AdditionV => "eq8-v",
            Identity::DoubledU => "eq9",
            Identity::VFromU => "eq12",
            Identity::MixedRecurrence(SecondCoefficient::TimesU) => "eq14-paper",
            Identity::MixedRecurrence(SecondCoefficient::TimesVPrev) => "eq14-derived",
            Identity::MixedDoubled => "eq15",
            Identity::RecurrenceEquivalence => "thm1-equiv",
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Second coefficient of the mixed-coefficient recurrence
/// `M(r,j) = U_{j+1}·M(r−1,j) + c·M(r,j−1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SecondCoefficient {
    /// `c = t·U_j`.
    TimesU,
    /// `c = t·V_{r−1}`, the coefficient forced by `V_{r+j} = U_{j+1}V_r + t·V_{r−1}U_j`.
    TimesVPrev,
}

impl SecondCoefficient {
    pub const ALL: [SecondCoefficient; 2] = [SecondCoefficient::TimesU, SecondCoefficient::TimesVPrev];
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    Holds,
    Fails,
    /// Some factorial factor vanished; the cell is outside the hypotheses.
    SkippedZeroTerm,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Holds => "HOLDS",
            Status::Fails => "FAILS",
            Status::SkippedZeroTerm => "SKIPPED-ZERO-TERM",
        })
    }
}

/// One evaluated cell of one identity.
#[derive(Clone, Debug)]
pub struct IdentityReport<T> {
    pub identity: Identity,
    pub params: RecurrenceParams<T>,
    pub r: usize,
    pub j: usize,
    pub lhs: Option<Fraction<T>>,
    pub rhs: Option<Fraction<T>>,
    pub status: Status,
}

impl<T: Ring> IdentityReport<T> {
    pub fn holds(&self) -> bool {
        self.status == Status::Holds
    }

    pub fn fails(&self) -> bool {
        self.status == Status::Fails
    }
}

fn evaluate<T: Ring>(
    identity: Identity,
    params: &RecurrenceParams<T>,
    r: usize,
    j: usize,
    sides: impl FnOnce() -> Result<(Fraction<T>, Fraction<T>)>,
) -> IdentityReport<T> {
    let (lhs, rhs, status) = match sides() {
        Ok((lhs, rhs)) => {
            let status = if lhs == rhs { Status::Holds } else { Status::Fails };
            (Some(lhs), Some(rhs), status)
        }
        Err(Error::ZeroTerm { .. }) => (None, None, Status::SkippedZeroTerm),
        Err(_) => (None, None, Status::Fails),
    };
    IdentityReport {
        identity,
        params: params.clone(),
        r,
        j,
        lhs,
        rhs,
        status,
    }
}

/// Cells `(r, j)` with `r ≥ r_min`, `j ≥ j_min`, `r + j ≤ maxn`, in `(r, j)` order.
fn cells(maxn: usize, r_min: usize, j_min: usize) -> impl Iterator<Item = (usize, usize)> {
    (r_min..=maxn).flat_map(move |r| (j_min..=maxn.saturating_sub(r)).map(move |j| (r, j)))
}

fn lift<T: Ring>(v: T) -> Fraction<T> {
    Fraction::from(v)
}

/// Coefficients `g₁(r,j)`, `g₂(r,j)` and an integer-like scale `c` meant to
/// satisfy `c·F_{r+j} = g₁(r,j)·F_r + g₂(r,j)·F_j`.
pub struct DecompositionCoeffs<'a, T> {
    pub g1: Box<dyn Fn(usize, usize) -> T + Send + Sync + 'a>,
    pub g2: Box<dyn Fn(usize, usize) -> T + Send + Sync + 'a>,
    pub scale: T,
}

impl<'a, T: Ring> DecompositionCoeffs<'a, T> {
    pub fn new(
        g1: impl Fn(usize, usize) -> T + Send + Sync + 'a,
        g2: impl Fn(usize, usize) -> T + Send + Sync + 'a,
    ) -> Self {
        Self::scaled(T::one(), g1, g2)
    }

    pub fn scaled(
        scale: T,
        g1: impl Fn(usize, usize) -> T + Send + Sync + 'a,
        g2: impl Fn(usize, usize) -> T + Send + Sync + 'a,
    ) -> Self {
        Self {
            g1: Box::new(g1),
            g2: Box::new(g2),
            scale,
        }
    }

    /// `g₁ = U_{j+1}`, `g₂ = t·U_{r−1}`: the decomposition
    /// `U_{r+j} = U_{j+1}·U_r + t·U_{r−1}·U_j`.
    pub fn lucas(u: &'a SequenceHandle<T>) -> Self {
        let t = u.params().t.clone();
        Self::new(move |_, j| u.term(j + 1), move |r, _| t.clone() * u.term(r - 1))
    }

    /// `c = 2`, `g₁ = V_j`, `g₂ = V_r`: the doubled addition formula for `U`.
    pub fn doubled(v: &'a SequenceHandle<T>) -> Self {
        Self::scaled(T::from_int(2), move |_, j| v.term(j), move |r, _| v.term(r))
    }

    pub fn g1(&self, r: usize, j: usize) -> T {
        (self.g1)(r, j)
    }

    pub fn g2(&self, r: usize, j: usize) -> T {
        (self.g2)(r, j)
    }
}

/// `c·H_{r+j}` against `g₁·H_r + g₂·H_j`. Needs `r, j > 0`.
pub fn check_sequence_decomposition<T: Ring>(
    h: &SequenceHandle<T>,
    c: &DecompositionCoeffs<'_, T>,
    r: usize,
    j: usize,
) -> IdentityReport<T> {
    evaluate(Identity::Decomposition, h.params(), r, j, || {
        let lhs = c.scale.clone() * h.term(r + j);
        let rhs = c.g1(r, j) * h.term(r) + c.g2(r, j) * h.term(j);
        Ok((lift(lhs), lift(rhs)))
    })
}

/// Triangle `B(r, j)` for `r + j ≤ maxn` (indexed `[r][j]`) built only from
/// `B(r,0) = B(0,j) = 1` and `c·B(r,j) = g₁·B(r−1,j) + g₂·B(r,j−1)`.
pub fn recurrence_table<T: Ring>(c: &DecompositionCoeffs<'_, T>, maxn: usize) -> Result<Vec<Vec<Fraction<T>>>> {
    let mut table: Vec<Vec<Fraction<T>>> = Vec::with_capacity(maxn + 1);
    for r in 0..=maxn {
        let mut row = Vec::with_capacity(maxn - r + 1);
        for j in 0..=maxn - r {
            let cell = if r == 0 || j == 0 {
                Fraction::from(T::one())
            } else {
                let up: &Fraction<T> = &table[r - 1][j];
                let left: &Fraction<T> = &row[j - 1];
                let sum = up.scale(&c.g1(r, j)) + left.scale(&c.g2(r, j));
                if c.scale.is_one() {
                    sum
                } else {
                    sum * Fraction::new(T::one(), c.scale.clone())?
                }
            };
            row.push(cell);
        }
        table.push(row);
    }
    Ok(table)
}

/// `B(r, j)` by the recurrence alone; never touches factorial quotients.
pub fn binomial_by_recurrence<T: Ring>(c: &DecompositionCoeffs<'_, T>, r: usize, j: usize) -> Result<T> {
    recurrence_table(c, r + j)?[r][j].reduce()
}

/// Outcome of comparing the decomposition against the recurrence-built triangle.
#[derive(Clone, Debug)]
pub struct EquivalenceCheck<T> {
    /// Per cell: recurrence value (lhs) against factorial quotient (rhs).
    pub reports: Vec<IdentityReport<T>>,
    /// Per cell: the sequence decomposition itself.
    pub decomposition: Vec<IdentityReport<T>>,
    /// First failing cell of each, in `(r + j, r)` order.
    pub first_decomposition_failure: Option<(usize, usize)>,
    pub first_recurrence_failure: Option<(usize, usize)>,
    /// At every cell whose two predecessors agree, the decomposition holds
    /// exactly when the recurrence value matches the quotient, and the first
    /// failures coincide on cells where the quotient is defined.
    pub consistent: bool,
}

impl<T: Ring> EquivalenceCheck<T> {
    pub fn all_hold(&self) -> bool {
        self.consistent && self.reports.iter().chain(&self.decomposition).all(|r| !r.fails())
    }
}

/// Checks that the decomposition holds exactly where the recurrence-built
/// triangle agrees with the factorial-quotient triangle, for `r + j ≤ maxn`.
pub fn check_recurrence_equivalence<T: Ring>(
    h: &SequenceHandle<T>,
    c: &DecompositionCoeffs<'_, T>,
    maxn: usize,
) -> Result<EquivalenceCheck<T>> {
    let table = recurrence_table(c, maxn)?;
    let params = h.params();

    // agree[r][j]: Some(dp == quotient), None when the quotient is undefined
    let mut agree: Vec<Vec<Option<bool>>> = (0..=maxn).map(|r| vec![None; maxn - r + 1]).collect();
    for (r, row) in agree.iter_mut().enumerate() {
        for (j, slot) in row.iter_mut().enumerate() {
            *slot = match binomial_quotient(h, r + j, r) {
                Ok(q) => Some(q == table[r][j]),
                Err(Error::ZeroTerm { .. }) => None,
                Err(e) => return Err(e),
            };
        }
    }

    let mut order: Vec<(usize, usize)> = cells(maxn, 1, 1).collect();
    order.sort_by_key(|&(r, j)| (r + j, r));

    let mut reports = Vec::new();
    let mut decomposition = Vec::new();
    let mut first_decomposition_failure = None;
    let mut first_recurrence_failure = None;
    // first decomposition failure among cells where the quotient is defined
    let mut first_checkable_failure = None;
    let mut consistent = true;
    for &(r, j) in &order {
        let dec = check_sequence_decomposition(h, c, r, j);
        let rep = evaluate(Identity::RecurrenceEquivalence, params, r, j, || {
            Ok((table[r][j].clone(), binomial_quotient(h, r + j, r)?))
        });
        if dec.fails() && first_decomposition_failure.is_none() {
            first_decomposition_failure = Some((r, j));
        }
        if dec.fails() && agree[r][j].is_some() && first_checkable_failure.is_none() {
            first_checkable_failure = Some((r, j));
        }
        if rep.fails() && first_recurrence_failure.is_none() {
            first_recurrence_failure = Some((r, j));
        }
        if let (Some(here), Some(true), Some(true)) = (agree[r][j], agree[r - 1][j], agree[r][j - 1]) {
            if here != dec.holds() {
                consistent = false;
            }
        }
        reports.push(rep);
        decomposition.push(dec);
    }
    consistent &= first_checkable_failure == first_recurrence_failure;
    Ok(EquivalenceCheck {
        reports,
        decomposition,
        first_decomposition_failure,
        first_recurrence_failure,
        consistent,
    })
}

/// Decomposition sweep with the Lucas coefficients over `r, j ≥ 1`.
pub fn check_lucas_decomposition<T: Ring>(pair: &LucasPair<T>, maxn: usize) -> Vec<IdentityReport<T>> {
    let c = DecompositionCoeffs::lucas(&pair.u);
    cells(maxn, 1, 1)
        .map(|(r, j)| check_sequence_decomposition(&pair.u, &c, r, j))
        .collect()
}

/// Both doubled addition formulas over `r, j ≥ 0`, `r + j ≤ maxn`.
pub fn check_addition_formulas<T: Ring>(pair: &LucasPair<T>, maxn: usize) -> Vec<IdentityReport<T>> {
    let (u, v) = (&pair.u, &pair.v);
    let params = u.params();
    let two = T::from_int(2);
    let delta = pair.discriminant();
    let mut out: Vec<_> = cells(maxn, 0, 0)
        .map(|(r, j)| {
            evaluate(Identity::AdditionU, params, r, j, || {
                let lhs = two.clone() * u.term(r + j);
                let rhs = u.term(r) * v.term(j) + u.term(j) * v.term(r);
                Ok((lift(lhs), lift(rhs)))
            })
        })
        .collect();
    out.extend(cells(maxn, 0, 0).map(|(r, j)| {
        evaluate(Identity::AdditionV, params, r, j, || {
            let lhs = two.clone() * v.term(r + j);
            let rhs = v.term(r) * v.term(j) + delta.clone() * u.term(j) * u.term(r);
            Ok((lift(lhs), lift(rhs)))
        })
    }));
    out
}

/// The doubled `U`-binomial recurrence with the factor two kept on the left.
pub fn check_u_binomial_doubled<T: Ring>(pair: &LucasPair<T>, maxn: usize) -> Vec<IdentityReport<T>> {
    let (u, v) = (&pair.u, &pair.v);
    let two = T::from_int(2);
    cells(maxn, 1, 1)
        .map(|(r, j)| {
            evaluate(Identity::DoubledU, u.params(), r, j, || {
                let lhs = binomial_quotient(u, r + j, r)?.scale(&two);
                let rhs = binomial_quotient(u, r + j - 1, r - 1)?.scale(&v.term(j))
                    + binomial_quotient(u, r + j - 1, r)?.scale(&v.term(r));
                Ok((lhs, rhs))
            })
        })
        .collect()
}

/// `V_{r+j} = U_{j+1}·V_r + t·V_{r−1}·U_j` over `r ≥ 1`, `j ≥ 0`.
pub fn check_v_u_identity<T: Ring>(pair: &LucasPair<T>, maxn: usize) -> Vec<IdentityReport<T>> {
    let (u, v, t) = (&pair.u, &pair.v, pair.t());
    cells(maxn, 1, 0)
        .map(|(r, j)| {
            evaluate(Identity::VFromU, u.params(), r, j, || {
                let lhs = v.term(r + j);
                let rhs = u.term(j + 1) * v.term(r) + t.clone() * v.term(r - 1) * u.term(j);
                Ok((lift(lhs), lift(rhs)))
            })
        })
        .collect()
}

/// `M(r,j) = U_{j+1}·M(r−1,j) + c·M(r,j−1)` over `r, j ≥ 1`, with `c`
/// chosen by `variant`.
pub fn check_mixed_recurrence<T: Ring>(
    pair: &LucasPair<T>,
    maxn: usize,
    variant: SecondCoefficient,
) -> Vec<IdentityReport<T>> {
    let (u, v, t) = (&pair.u, &pair.v, pair.t());
    cells(maxn, 1, 1)
        .map(|(r, j)| {
            evaluate(Identity::MixedRecurrence(variant), u.params(), r, j, || {
                let second = match variant {
                    SecondCoefficient::TimesU => t.clone() * u.term(j),
                    SecondCoefficient::TimesVPrev => t.clone() * v.term(r - 1),
                };
                let lhs = mixed_quotient(pair, r, j)?;
                let rhs = mixed_quotient(pair, r - 1, j)?.scale(&u.term(j + 1))
                    + mixed_quotient(pair, r, j - 1)?.scale(&second);
                Ok((lhs, rhs))
            })
        })
        .collect()
}

/// `2·M(r,j) = V_j·M(r−1,j) + Δ·U_r·M(r,j−1)` over `r, j ≥ 1`.
pub fn check_mixed_doubled<T: Ring>(pair: &LucasPair<T>, maxn: usize) -> Vec<IdentityReport<T>> {
    let (u, v) = (&pair.u, &pair.v);
    let two = T::from_int(2);
    let delta = pair.discriminant();
    cells(maxn, 1, 1)
        .map(|(r, j)| {
            evaluate(Identity::MixedDoubled, u.params(), r, j, || {
                let lhs = mixed_quotient(pair, r, j)?.scale(&two);
                let rhs = mixed_quotient(pair, r - 1, j)?.scale(&v.term(j))
                    + mixed_quotient(pair, r, j - 1)?.scale(&(delta.clone() * u.term(r)));
                Ok((lhs, rhs))
            })
        })
        .collect()
}

/// Which second coefficient of the mixed recurrence survives a sweep.
#[derive(Clone, Debug)]
pub struct MixedVerdict<T> {
    /// The variant with no failing cell, when exactly one has none.
    pub survivor: Option<SecondCoefficient>,
    /// Smallest failing cell per variant, by `(r + j, r)` then sweep order.
    pub counterexamples: Vec<(SecondCoefficient, IdentityReport<T>)>,
    pub reports: Vec<IdentityReport<T>>,
    /// Exactly one variant held everywhere and the other failed somewhere.
    pub clean: bool,
}

/// Runs both variants of the mixed recurrence over every pair.
pub fn mixed_experiment<'p, T: Ring + 'p>(
    sweep: impl IntoIterator<Item = (&'p LucasPair<T>, usize)>,
) -> MixedVerdict<T> {
    let mut reports = Vec::new();
    for (pair, maxn) in sweep {
        for variant in SecondCoefficient::ALL {
            reports.extend(check_mixed_recurrence(pair, maxn, variant));
        }
    }
    let mut counterexamples = Vec::new();
    let mut clean_variants = Vec::new();
    for variant in SecondCoefficient::ALL {
        let minimal = reports
            .iter()
            .enumerate()
            .filter(|(_, rep)| rep.identity == Identity::MixedRecurrence(variant) && rep.fails())
            .min_by_key(|(i, rep)| (rep.r + rep.j, rep.r, *i))
            .map(|(_, rep)| rep.clone());
        match minimal {
            Some(rep) => counterexamples.push((variant, rep)),
            None => clean_variants.push(variant),
        }
    }
    let survivor = match clean_variants.as_slice() {
        [only] => Some(*only),
        _ => None,
    };
    let clean = survivor.is_some() && counterexamples.len() == 1;
    MixedVerdict {
        survivor,
        counterexamples,
        reports,
        clean,
    }
}
