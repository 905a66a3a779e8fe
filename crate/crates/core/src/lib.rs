//! Bijective codecs between arbitrary-size natural numbers and finite
//! combinatorial objects.
//!
//! Everything in this crate is built on one idea: a natural number *is* the
//! finite set of its 1-bit positions, and that reading can be iterated until
//! the structure is hereditary. On top of it sit codecs for
//!
//! * positional and bijective base-2 numerals ([`numerals`]),
//! * finite sets of naturals, powersets, ordinals, hypergraphs ([`natset`]),
//! * hereditarily finite sets with an optional urelement block ([`hfs`]),
//! * pairing functions, Kuratowski / Cantor / bit-interleaving ([`pairing`]),
//! * membership DAGs, their decorations and duals, and a digraph code
//!   ([`graphcodec`]).
//!
//! Each decoder is total on naturals; each encoder checks that its input is
//! in canonical form and reports [`Error`] otherwise, so decode/encode pairs
//! are exact bijections. All values are [`Nat`]s; nothing here overflows.

pub mod graphcodec;
pub mod hfs;
pub mod natset;
pub mod numerals;
pub mod pairing;

use num_traits::{One, Zero};
use thiserror::Error;

/// Arbitrary-precision natural number; every codec speaks these.
pub type Nat = num_bigint::BigUint;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors shared by the codec modules.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum Error {
    /// A positional base below 2.
    #[error("invalid base {0}: positional bases start at 2")]
    InvalidBase(Nat),
    /// A digit (or bit) at or above its base.
    #[error("invalid digit {digit} for base {base}")]
    InvalidDigit { digit: Nat, base: Nat },
    /// Input that had to be a canonical (strictly increasing) set was not.
    #[error("not a canonical set: {0}")]
    NotCanonical(&'static str),
    /// An urelement at or above the ambient limit.
    #[error("urelement {value} is not below the urelement limit {limit}")]
    UrelementOutOfRange { value: Nat, limit: Nat },
    /// A variadic set operation applied to an empty family.
    #[error("empty fold: set operations over a family need at least one member")]
    EmptyFold,
    /// A choice function asked of a family containing the empty set.
    #[error("the family coded by {0} contains the empty set, so no choice exists")]
    EmptySetInFamily(Nat),
    /// A value whose representation would exceed what memory can hold.
    #[error("result too large to materialize: {0}")]
    TooLarge(String),
    /// Von Neumann ordinals code as iterated powers of two; past 5 the code
    /// has more bits than any machine can store.
    #[error("ordinal {0} cannot be represented: its code outgrows memory")]
    OrdinalOverflow(Nat),
    /// A walk that was promised a DAG ran into a cycle.
    #[error("cycle reachable from vertex {0}")]
    CyclicGraph(usize),
    /// A vertex index outside the graph.
    #[error("vertex {vertex} is out of range (graph has {count} vertices)")]
    VertexOutOfRange { vertex: usize, count: usize },
    /// A label list that does not cover the vertices exactly.
    #[error("got {got} labels for {expected} vertices")]
    LabelCountMismatch { got: usize, expected: usize },
}

/// Largest bit position any encoder will materialize (a 128 MiB value).
/// Positions are exponents of 2, so this is really a cap on result size,
/// not on how big the *numbers used as elements* may be.
pub(crate) const MAX_BIT_INDEX: u64 = 1 << 30;

/// A set element used as a bit position, checked against [`MAX_BIT_INDEX`].
pub(crate) fn bit_index(e: &Nat) -> Result<u64> {
    u64::try_from(e)
        .ok()
        .filter(|&i| i <= MAX_BIT_INDEX)
        .ok_or_else(|| Error::TooLarge(format!("2^{e} as a set code")))
}

/// 0, 1, 2, ... without end; drives the enumeration streams.
pub(crate) fn nats() -> impl Iterator<Item = Nat> {
    std::iter::successors(Some(Nat::zero()), |n| Some(n + 1u32))
}

/// 2^e with the standard size guard; the workhorse behind singletons and
/// decorations.
pub(crate) fn exp2(e: &Nat) -> Result<Nat> {
    Ok(Nat::one() << bit_index(e)?)
}
