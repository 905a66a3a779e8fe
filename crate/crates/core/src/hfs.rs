//! Hereditarily finite sets over an optional block of urelements, and their
//! codes.
//!
//! With urelement limit `u`, the numbers 0..u are opaque atoms; everything
//! else is a set. A set gets the code `u + Σ 2^code(member)`, which makes
//! decoding total and encoding exact: at `u = 0` this is the classical
//! bijection between naturals and pure hereditarily finite sets.

use std::collections::HashSet;
use std::fmt;

use num_traits::{One, Zero};

use crate::natset::{nat_to_set, set_to_nat};
use crate::{Error, Nat, Result};

/// A hereditarily finite set over urelements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Hfs {
    /// An atom below the ambient urelement limit.
    Urelement(Nat),
    /// A set, members kept in strictly increasing code order.
    Set(Vec<Hfs>),
}

impl fmt::Display for Hfs {
    /// Constructor-style rendering: `U 3`, `S [U 0,S []]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Hfs::Urelement(n) => write!(f, "U {n}"),
            Hfs::Set(members) => {
                write!(f, "S [")?;
                for (i, m) in members.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{m}")?;
                }
                write!(f, "]")
            }
        }
    }
}

/// Decode `n` at urelement limit `u`.
pub fn nat_to_hfs(u: &Nat, n: &Nat) -> Hfs {
    if n < u {
        Hfs::Urelement(n.clone())
    } else {
        Hfs::Set(
            nat_to_set(&(n - u))
                .iter()
                .map(|e| nat_to_hfs(u, e))
                .collect(),
        )
    }
}

/// Encode a tree back into its code at urelement limit `u`.
///
/// Fails on atoms at or above `u` and on member lists that are not in
/// strictly increasing code order (in particular, on duplicates).
pub fn hfs_to_nat(u: &Nat, h: &Hfs) -> Result<Nat> {
    match h {
        Hfs::Urelement(n) => {
            if n < u {
                Ok(n.clone())
            } else {
                Err(Error::UrelementOutOfRange {
                    value: n.clone(),
                    limit: u.clone(),
                })
            }
        }
        Hfs::Set(members) => {
            let codes: Vec<Nat> = members
                .iter()
                .map(|m| hfs_to_nat(u, m))
                .collect::<Result<_>>()?;
            Ok(u + set_to_nat(&codes)?)
        }
    }
}

/// Render the set coded by `n` with braces, atoms as plain numerals.
///
/// At limit 1 the lone atom 0 stands for the empty set itself, and prints
/// that way.
pub fn hfs_show(u: &Nat, n: &Nat) -> String {
    if u.is_one() && n.is_zero() {
        return "{}".to_string();
    }
    if n < u {
        return n.to_string();
    }
    let members: Vec<String> = nat_to_set(&(n - u))
        .iter()
        .map(|e| hfs_show(u, e))
        .collect();
    format!("{{{}}}", members.join(","))
}

/// Tear a tree down: `set` combines the already-folded members of a set,
/// `atom` maps an urelement.
pub fn hfold<R>(set: &impl Fn(Vec<R>) -> R, atom: &impl Fn(&Nat) -> R, h: &Hfs) -> R {
    match h {
        Hfs::Urelement(n) => atom(n),
        Hfs::Set(members) => set(members.iter().map(|m| hfold(set, atom, m)).collect()),
    }
}

/// The fold of [`hfold`] driven straight off the code, no tree built:
/// `nfold(u, s, a, n) == hfold(s, a, &nat_to_hfs(u, n))` for every `n`.
pub fn nfold<R>(u: &Nat, set: &impl Fn(Vec<R>) -> R, atom: &impl Fn(&Nat) -> R, n: &Nat) -> R {
    if n < u {
        atom(n)
    } else {
        set(nat_to_set(&(n - u))
            .iter()
            .map(|e| nfold(u, set, atom, e))
            .collect())
    }
}

/// Node count of a tree.
pub fn hsize(h: &Hfs) -> Nat {
    hfold(
        &|sizes: Vec<Nat>| sizes.into_iter().sum::<Nat>() + 1u32,
        &|_| Nat::one(),
        h,
    )
}

/// [`hsize`] read off the code alone.
pub fn nsize(u: &Nat, n: &Nat) -> Nat {
    nfold(
        u,
        &|sizes: Vec<Nat>| sizes.into_iter().sum::<Nat>() + 1u32,
        &|_| Nat::one(),
        n,
    )
}

/// Lift a function on codes to one on trees at limit `u`.
pub fn to_nat_lift1<F>(u: Nat, f: F) -> impl Fn(&Hfs) -> Result<Hfs>
where
    F: Fn(&Nat) -> Nat,
{
    move |h| Ok(nat_to_hfs(&u, &f(&hfs_to_nat(&u, h)?)))
}

/// Binary version of [`to_nat_lift1`].
pub fn to_nat_lift2<F>(u: Nat, f: F) -> impl Fn(&Hfs, &Hfs) -> Result<Hfs>
where
    F: Fn(&Nat, &Nat) -> Nat,
{
    move |a, b| {
        let x = hfs_to_nat(&u, a)?;
        let y = hfs_to_nat(&u, b)?;
        Ok(nat_to_hfs(&u, &f(&x, &y)))
    }
}

/// Variadic version of [`to_nat_lift1`].
pub fn to_nat_lift_n<F>(u: Nat, f: F) -> impl Fn(&[Hfs]) -> Result<Hfs>
where
    F: Fn(&[Nat]) -> Nat,
{
    move |hs| {
        let ns: Vec<Nat> = hs
            .iter()
            .map(|h| hfs_to_nat(&u, h))
            .collect::<Result<_>>()?;
        Ok(nat_to_hfs(&u, &f(&ns)))
    }
}

/// Lift a function on trees to one on codes at limit `u`.
pub fn to_hfs_lift1<F>(u: Nat, f: F) -> impl Fn(&Nat) -> Result<Nat>
where
    F: Fn(Hfs) -> Hfs,
{
    move |n| hfs_to_nat(&u, &f(nat_to_hfs(&u, n)))
}

/// Binary version of [`to_hfs_lift1`]; the two arguments are decoded
/// independently.
pub fn to_hfs_lift2<F>(u: Nat, f: F) -> impl Fn(&Nat, &Nat) -> Result<Nat>
where
    F: Fn(Hfs, Hfs) -> Hfs,
{
    move |x, y| hfs_to_nat(&u, &f(nat_to_hfs(&u, x), nat_to_hfs(&u, y)))
}

/// Variadic version of [`to_hfs_lift1`].
pub fn to_hfs_lift_n<F>(u: Nat, f: F) -> impl Fn(&[Nat]) -> Result<Nat>
where
    F: Fn(Vec<Hfs>) -> Hfs,
{
    move |ns| {
        let hs: Vec<Hfs> = ns.iter().map(|n| nat_to_hfs(&u, n)).collect();
        hfs_to_nat(&u, &f(hs))
    }
}

/// Successor on trees.
pub fn hsucc(u: &Nat, h: &Hfs) -> Result<Hfs> {
    to_nat_lift1(u.clone(), |n| n + 1u32)(h)
}

/// Sum of a list of trees.
pub fn hsum(u: &Nat, hs: &[Hfs]) -> Result<Hfs> {
    to_nat_lift_n(u.clone(), |ns| ns.iter().sum())(hs)
}

/// Product of a list of trees (empty product is 1).
pub fn hproduct(u: &Nat, hs: &[Hfs]) -> Result<Hfs> {
    to_nat_lift_n(u.clone(), |ns| ns.iter().product())(hs)
}

/// Set-valued equality on trees: the tree of 1 when equal, of 0 when not.
pub fn hequal(u: &Nat, a: &Hfs, b: &Hfs) -> Result<Hfs> {
    to_nat_lift2(u.clone(), crate::natset::nat_equal)(a, b)
}

/// 2^n on trees: sends the tree of n to the tree of the singleton {n}.
pub fn hexp2(u: &Nat, h: &Hfs) -> Result<Hfs> {
    let n = hfs_to_nat(u, h)?;
    Ok(nat_to_hfs(u, &crate::exp2(&n)?))
}

/// Every subsequence of `xs`, in binary-counter order: the subset at index
/// j keeps `xs[i]` exactly when bit i of j is set. Refuses more than 30
/// elements (2^30 subsets).
pub fn list_subsets<T: Clone>(xs: &[T]) -> Result<Vec<Vec<T>>> {
    if xs.len() > 30 {
        return Err(Error::TooLarge(format!("2^{} subsets", xs.len())));
    }
    match xs.split_first() {
        None => Ok(vec![Vec::new()]),
        Some((x, rest)) => {
            let tails = list_subsets(rest)?;
            let mut out = Vec::with_capacity(tails.len() * 2);
            for ys in tails {
                out.push(ys.clone());
                let mut with_x = Vec::with_capacity(ys.len() + 1);
                with_x.push(x.clone());
                with_x.extend(ys);
                out.push(with_x);
            }
            Ok(out)
        }
    }
}

/// All trees at urelement limit `u`, in code order.
pub fn iterative_hfs_stream(u: &Nat) -> impl Iterator<Item = Hfs> {
    let u = u.clone();
    crate::nats().map(move |n| nat_to_hfs(&u, &n))
}

/// All pure trees again, grown structurally instead of decoded: iterate
/// the powerset of the empty set and emit each member of each generation
/// the first time it appears. Agrees with `iterative_hfs_stream(0)`
/// element by element.
pub fn direct_hfs_stream() -> impl Iterator<Item = Hfs> {
    DirectStream {
        level: Vec::new(),
        subset_index: Nat::zero(),
        emitted: HashSet::new(),
    }
}

/// One powerset generation, each member paired with its code. Codes double
/// as the dedup key and as bit positions when coding a subset.
struct DirectStream {
    level: Vec<(Hfs, Nat)>,
    subset_index: Nat,
    emitted: HashSet<Nat>,
}

impl DirectStream {
    /// The subsets just enumerated become the next generation. Advancing
    /// past a generation of width w takes 2^w pulls, so the widths ever
    /// reached here are tiny (0, 1, 2, 4, 16, 65536 and that is the end of
    /// anyone's patience); the shift below cannot overflow in a run that
    /// terminates.
    fn advance_level(&mut self) {
        let size = 1usize << self.level.len();
        let mut next = Vec::with_capacity(size);
        for j in 0..size {
            let mut code = Nat::zero();
            let mut members = Vec::new();
            for (i, (tree, member_code)) in self.level.iter().enumerate() {
                if j >> i & 1 == 1 {
                    code.set_bit(small_code(member_code), true);
                    members.push(tree.clone());
                }
            }
            next.push((Hfs::Set(members), code));
        }
        self.level = next;
        self.subset_index = Nat::zero();
    }
}

/// Codes of generation members stay far below u64 at any reachable depth.
fn small_code(code: &Nat) -> u64 {
    u64::try_from(code).expect("generation member codes stay small")
}

impl Iterator for DirectStream {
    type Item = Hfs;

    fn next(&mut self) -> Option<Hfs> {
        loop {
            let width = self.level.len() as u64;
            if self.subset_index.bits() > width {
                self.advance_level();
                continue;
            }
            let mut code = Nat::zero();
            for i in 0..width {
                if self.subset_index.bit(i) {
                    code.set_bit(small_code(&self.level[i as usize].1), true);
                }
            }
            let index = self.subset_index.clone();
            self.subset_index += 1u32;
            if self.emitted.insert(code) {
                let members: Vec<Hfs> = (0..width)
                    .filter(|&i| index.bit(i))
                    .map(|i| self.level[i as usize].0.clone())
                    .collect();
                return Some(Hfs::Set(members));
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nat(n: u64) -> Nat {
        Nat::from(n)
    }

    fn set(members: Vec<Hfs>) -> Hfs {
        Hfs::Set(members)
    }

    fn empty() -> Hfs {
        set(vec![])
    }

    fn atom(n: u64) -> Hfs {
        Hfs::Urelement(nat(n))
    }

    fn pure_tree_42() -> Hfs {
        // 42 = {1, 3, 5} = {{{}}, {{},{{}}}, {{},{{{}}}}}
        let t1 = set(vec![empty()]);
        let t2 = set(vec![t1.clone()]);
        let t3 = set(vec![empty(), t1.clone()]);
        let t5 = set(vec![empty(), t2]);
        set(vec![t1, t3, t5])
    }

    #[test]
    fn decode_42_pure() {
        assert_eq!(nat_to_hfs(&nat(0), &nat(42)), pure_tree_42());
    }

    #[test]
    fn decode_42_with_three_urelements() {
        let expected = set(vec![atom(0), atom(1), atom(2), set(vec![atom(1)])]);
        assert_eq!(nat_to_hfs(&nat(3), &nat(42)), expected);
        assert_eq!(hfs_to_nat(&nat(3), &expected).unwrap(), nat(42));
    }

    #[test]
    fn display_matches_constructor_notation() {
        assert_eq!(
            pure_tree_42().to_string(),
            "S [S [S []],S [S [],S [S []]],S [S [],S [S [S []]]]]"
        );
        assert_eq!(
            nat_to_hfs(&nat(3), &nat(42)).to_string(),
            "S [U 0,U 1,U 2,S [U 1]]"
        );
        assert_eq!(empty().to_string(), "S []");
        assert_eq!(atom(7).to_string(), "U 7");
    }

    #[test]
    fn show_examples() {
        assert_eq!(hfs_show(&nat(0), &nat(42)), "{{{}},{{},{{}}},{{},{{{}}}}}");
        assert_eq!(hfs_show(&nat(3), &nat(42)), "{0,1,2,{1}}");
        assert_eq!(hfs_show(&nat(0), &nat(0)), "{}");
        // at limit 1 the single atom is the empty set and reads as such
        assert_eq!(hfs_show(&nat(1), &nat(0)), "{}");
        assert_eq!(hfs_show(&nat(2), &nat(1)), "1");
    }

    #[test]
    fn encode_rejects_noncanonical_trees() {
        assert!(matches!(
            hfs_to_nat(&nat(0), &atom(0)),
            Err(Error::UrelementOutOfRange { .. })
        ));
        assert!(matches!(
            hfs_to_nat(&nat(0), &set(vec![empty(), empty()])),
            Err(Error::NotCanonical(_))
        ));
        let one = set(vec![empty()]);
        assert!(matches!(
            hfs_to_nat(&nat(0), &set(vec![one, empty()])),
            Err(Error::NotCanonical(_))
        ));
    }

    #[test]
    fn roundtrip_small_at_three_limits() {
        for u in [0u64, 1, 3] {
            let u = nat(u);
            for k in 0..2000u64 {
                let n = nat(k);
                assert_eq!(hfs_to_nat(&u, &nat_to_hfs(&u, &n)).unwrap(), n);
            }
        }
    }

    #[test]
    fn small_codes_below_the_limit_are_atoms() {
        assert_eq!(nat_to_hfs(&nat(5), &nat(3)), atom(3));
        assert_eq!(nat_to_hfs(&nat(5), &nat(5)), empty());
    }

    #[test]
    fn sizes() {
        assert_eq!(hsize(&empty()), nat(1));
        assert_eq!(hsize(&nat_to_hfs(&nat(0), &nat(1))), nat(2));
        assert_eq!(hsize(&pure_tree_42()), nat(12));
        assert_eq!(nsize(&nat(0), &nat(42)), nat(12));
        assert_eq!(nsize(&nat(3), &nat(42)), nat(6));
    }

    #[test]
    fn nfold_agrees_with_hfold_after_decoding() {
        for u in [0u64, 1, 3] {
            let u = nat(u);
            for k in 0..500u64 {
                let n = nat(k);
                assert_eq!(nsize(&u, &n), hsize(&nat_to_hfs(&u, &n)));
            }
        }
    }

    #[test]
    fn lifted_arithmetic() {
        let u = nat(0);
        let tree = |k: u64| nat_to_hfs(&u, &nat(k));
        assert_eq!(hsucc(&u, &tree(41)).unwrap(), tree(42));
        assert_eq!(hsum(&u, &[tree(2), tree(3)]).unwrap(), tree(5));
        assert_eq!(hproduct(&u, &[tree(6), tree(7)]).unwrap(), tree(42));
        assert_eq!(hproduct(&u, &[]).unwrap(), tree(1));
        assert_eq!(hequal(&u, &tree(4), &tree(4)).unwrap(), tree(1));
        assert_eq!(hequal(&u, &tree(4), &tree(5)).unwrap(), tree(0));
        assert_eq!(hexp2(&u, &tree(3)).unwrap(), tree(8));
    }

    #[test]
    fn lifts_in_both_directions() {
        let double = to_nat_lift1(nat(0), |n| n * 2u32);
        let t21 = nat_to_hfs(&nat(0), &nat(21));
        let t42 = nat_to_hfs(&nat(0), &nat(42));
        assert_eq!(double(&t21).unwrap(), t42);

        let wrap = to_hfs_lift1(nat(0), |h| Hfs::Set(vec![h]));
        assert_eq!(wrap(&nat(0)).unwrap(), nat(1));
        assert_eq!(wrap(&nat(1)).unwrap(), nat(2));

        // the binary lift must hand f both arguments, not the first twice
        let second = to_hfs_lift2(nat(0), |_, y| y);
        assert_eq!(second(&nat(3), &nat(5)).unwrap(), nat(5));

        let union_members = to_nat_lift_n(nat(0), |ns: &[Nat]| {
            ns.iter().fold(Nat::zero(), |acc, n| acc | n)
        });
        let t43 = nat_to_hfs(&nat(0), &nat(43));
        assert_eq!(
            union_members(&[t42, nat_to_hfs(&nat(0), &nat(1))]).unwrap(),
            t43
        );

        let identity = to_hfs_lift1(nat(0), |h| h);
        assert_eq!(identity(&nat(42)).unwrap(), nat(42));

        // union performed wholly on trees comes back as the bitwise union
        let tree_union = to_hfs_lift2(nat(0), |a, b| {
            let (Hfs::Set(mut xs), Hfs::Set(ys)) = (a, b) else {
                unreachable!("no atoms at u = 0")
            };
            for y in ys {
                if !xs.contains(&y) {
                    xs.push(y);
                }
            }
            xs.sort_by_key(|m| hfs_to_nat(&nat(0), m).expect("pure tree"));
            Hfs::Set(xs)
        });
        assert_eq!(tree_union(&nat(42), &nat(1)).unwrap(), nat(43));
    }

    #[test]
    fn lifts_propagate_encoding_errors() {
        assert!(matches!(
            hsucc(&nat(0), &atom(0)),
            Err(Error::UrelementOutOfRange { .. })
        ));
    }

    #[test]
    fn subsets_come_out_in_counter_order() {
        assert_eq!(list_subsets::<u8>(&[]).unwrap(), vec![Vec::<u8>::new()]);
        assert_eq!(
            list_subsets(&['a', 'b']).unwrap(),
            vec![vec![], vec!['a'], vec!['b'], vec!['a', 'b']]
        );
        assert_eq!(
            list_subsets(&[0, 1, 2]).unwrap(),
            vec![
                vec![],
                vec![0],
                vec![1],
                vec![0, 1],
                vec![2],
                vec![0, 2],
                vec![1, 2],
                vec![0, 1, 2],
            ]
        );
        assert_eq!(list_subsets(&[0u8; 5].map(|_| ())).unwrap().len(), 32);
    }

    #[test]
    fn subsets_guard() {
        let too_many = vec![0u8; 31];
        assert!(matches!(list_subsets(&too_many), Err(Error::TooLarge(_))));
    }

    #[test]
    fn iterative_stream_prefixes() {
        let pure: Vec<Hfs> = iterative_hfs_stream(&nat(0)).take(4).collect();
        assert_eq!(
            pure,
            vec![
                empty(),
                set(vec![empty()]),
                set(vec![set(vec![empty()])]),
                set(vec![empty(), set(vec![empty()])]),
            ]
        );
        // with one urelement, 0 is the atom and sets start one code later
        let one: Vec<Hfs> = iterative_hfs_stream(&nat(1)).take(5).collect();
        assert_eq!(
            one,
            vec![
                atom(0),
                empty(),
                set(vec![atom(0)]),
                set(vec![empty()]),
                set(vec![atom(0), empty()]),
            ]
        );
    }

    #[test]
    fn direct_stream_first_five() {
        let got: Vec<Hfs> = direct_hfs_stream().take(5).collect();
        let t1 = set(vec![empty()]);
        let t2 = set(vec![t1.clone()]);
        let t3 = set(vec![empty(), t1.clone()]);
        let t4 = set(vec![t2.clone()]);
        assert_eq!(got, vec![empty(), t1, t2, t3, t4]);
    }

    #[test]
    fn direct_stream_agrees_with_decoding_and_never_repeats() {
        let direct: Vec<Hfs> = direct_hfs_stream().take(64).collect();
        let decoded: Vec<Hfs> = iterative_hfs_stream(&nat(0)).take(64).collect();
        assert_eq!(direct, decoded);
        let mut codes = HashSet::new();
        for h in &direct {
            assert!(codes.insert(hfs_to_nat(&nat(0), h).unwrap()));
        }
    }
}
