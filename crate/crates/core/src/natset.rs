//! The exponent-set code: a natural number *is* the finite set of its 1-bit
//! positions, so `42 = 2^1 + 2^3 + 2^5` decodes to `{1, 3, 5}` and encoding
//! is just summing powers of two. Iterating the same reading one level into
//! the elements gives hypergraphs; set algebra becomes bit algebra.

use num_traits::{One, Zero};

use crate::hfs::list_subsets;
use crate::pairing::bitmerge_pair;
use crate::{bit_index, exp2, Error, Nat, Result};

/// Decode `n` into the strictly increasing list of its 1-bit positions.
pub fn nat_to_set(n: &Nat) -> Vec<Nat> {
    (0..n.bits()).filter(|&i| n.bit(i)).map(Nat::from).collect()
}

/// Encode a strictly increasing list of naturals as `Σ 2^e`.
pub fn set_to_nat(elems: &[Nat]) -> Result<Nat> {
    ensure_increasing(elems)?;
    let mut n = Nat::zero();
    for e in elems {
        n.set_bit(bit_index(e)?, true);
    }
    Ok(n)
}

pub(crate) fn ensure_increasing(elems: &[Nat]) -> Result<()> {
    if elems.windows(2).all(|w| w[0] < w[1]) {
        Ok(())
    } else {
        Err(Error::NotCanonical("elements must be strictly increasing"))
    }
}

/// 2^i, the code of the singleton {i}.
pub fn nat_singleton(i: &Nat) -> Result<Nat> {
    exp2(i)
}

/// Adjoin `i` to the set coded by `is`: sets bit `i`.
pub fn nat_adduction(i: &Nat, is: &Nat) -> Result<Nat> {
    let mut n = is.clone();
    n.set_bit(bit_index(i)?, true);
    Ok(n)
}

/// Union of coded sets is bitwise or.
pub fn nat_union(i: &Nat, j: &Nat) -> Nat {
    i | j
}

/// Intersection of coded sets is bitwise and.
pub fn nat_intersect(i: &Nat, j: &Nat) -> Nat {
    i & j
}

/// Union over a whole family. The family may not be empty: there is no
/// universe here to act as an identity for intersection, so neither fold
/// gets one.
pub fn nat_union_all(family: &[Nat]) -> Result<Nat> {
    variadic(family, nat_union)
}

/// Intersection over a whole (nonempty) family.
pub fn nat_intersect_all(family: &[Nat]) -> Result<Nat> {
    variadic(family, nat_intersect)
}

fn variadic(family: &[Nat], op: fn(&Nat, &Nat) -> Nat) -> Result<Nat> {
    let (first, rest) = family.split_first().ok_or(Error::EmptyFold)?;
    Ok(rest.iter().fold(first.clone(), |acc, j| op(&acc, j)))
}

/// Set-valued equality: 1 (the code of {{}}... i.e. {0}) when equal, 0 when
/// not, so the answer can itself be used as a set.
pub fn nat_equal(i: &Nat, j: &Nat) -> Nat {
    if i == j {
        Nat::one()
    } else {
        Nat::zero()
    }
}

/// Code of the powerset of the set coded by `i`.
///
/// The result has 2^popcount(i) bits set, at positions as large as
/// 2^(highest element + 1), so it explodes quickly; pointlessly large
/// requests fail with [`Error::TooLarge`].
pub fn nat_powset(i: &Nat) -> Result<Nat> {
    let elems = nat_to_set(i);
    // Subsets of an increasing list come out increasing by code, so the
    // outer encode never trips the canonical check.
    let codes: Vec<Nat> = list_subsets(&elems)?
        .iter()
        .map(|subset| set_to_nat(subset))
        .collect::<Result<_>>()?;
    set_to_nat(&codes)
}

/// [`nat_powset`] computed as the product `Π (1 + 2^(2^e))` over the
/// elements, one multiplication per element instead of one bit per subset.
pub fn nat_powset_alt(i: &Nat) -> Result<Nat> {
    let elems = nat_to_set(i);
    if elems.len() > 30 {
        return Err(Error::TooLarge(format!(
            "powerset of a {}-element set",
            elems.len()
        )));
    }
    let mut code = Nat::one();
    for e in &elems {
        code *= Nat::one() + exp2(&exp2(e)?)?;
    }
    Ok(code)
}

/// The von Neumann ordinal n = {0, 1, ..., n-1}, hereditarily, as a code.
///
/// The codes run 0, 1, 3, 11, 2059, 2^2059 + 2059, ... so 5 is the last one
/// that fits in a machine; larger inputs fail rather than try.
pub fn nat_ordinal(n: &Nat) -> Result<Nat> {
    if *n > Nat::from(5u32) {
        return Err(Error::OrdinalOverflow(n.clone()));
    }
    fn ordinal(k: u64) -> Nat {
        let elems: Vec<Nat> = (0..k).map(ordinal).collect();
        set_to_nat(&elems).expect("ordinal codes increase strictly")
    }
    Ok(ordinal(u64::try_from(n).expect("checked against 5")))
}

/// A choice function for the family coded by `i`: pick the least element of
/// every member, and return the code of the set of (member, pick) pairs,
/// pairs coded with [`bitmerge_pair`].
///
/// Families containing the empty set (odd `i`) have nothing to pick there.
pub fn nat_choice_fun(i: &Nat) -> Result<Nat> {
    if i.bit(0) {
        return Err(Error::EmptySetInFamily(i.clone()));
    }
    let mut pairs: Vec<Nat> = nat_to_set(i)
        .iter()
        .map(|member| {
            // every member is nonzero here; its least element is the lowest set bit
            let least = Nat::from(member.trailing_zeros().expect("member is nonzero"));
            bitmerge_pair(member, &least)
        })
        .collect();
    // pair codes are distinct (bitmerge is injective) but not monotone in
    // the member, so order them before the canonical encode
    pairs.sort_unstable();
    set_to_nat(&pairs)
}

/// Decode `n` as a hypergraph: the set of its bit positions, each read as a
/// set again. Hyperedges come out in increasing code order.
pub fn nat_to_hypergraph(n: &Nat) -> Vec<Vec<Nat>> {
    nat_to_set(n).iter().map(nat_to_set).collect()
}

/// Encode a hypergraph whose hyperedges are canonical sets listed in
/// strictly increasing code order.
pub fn hypergraph_to_nat(edges: &[Vec<Nat>]) -> Result<Nat> {
    let codes: Vec<Nat> = edges.iter().map(|e| set_to_nat(e)).collect::<Result<_>>()?;
    set_to_nat(&codes)
}

/// Every hypergraph on naturals, one per code, in code order.
pub fn hypergraph_stream() -> impl Iterator<Item = Vec<Vec<Nat>>> {
    crate::nats().map(|n| nat_to_hypergraph(&n))
}
