//! Exact generalized binomial, multinomial and mixed `V`/`U` coefficients of
//! second-order linear recurrences `H_{n+2} = s·H_{n+1} + t·H_n`, together
//! with exact verification of the identities that connect them.
//!
//! The algorithms are generic over [`Ring`]; [`RingElement`] is the tagged
//! integer/rational/polynomial scalar the command line works in.

pub mod binomials;
pub mod cli;
pub mod error;
pub mod identities;
pub mod oracle;
pub mod ring;
pub mod sequences;
pub mod verify;

pub use error::{Error, Result};
pub use ring::{Fraction, Polynomial, Ring, RingElement};
pub use sequences::{BinetParams, LucasPair, RecurrenceParams, SequenceHandle};

pub type Integer = num_bigint::BigInt;
pub type Rational = num_rational::BigRational;
pub type RationalPolynomial = Polynomial<Rational>;
pub type IntegerPolynomial = Polynomial<Integer>;

/// Sequence over the integer/rational/polynomial tower.
pub type Sequence = SequenceHandle<RingElement>;
pub type RationalSequence = SequenceHandle<Rational>;
pub type PolynomialSequence = SequenceHandle<RationalPolynomial>;
