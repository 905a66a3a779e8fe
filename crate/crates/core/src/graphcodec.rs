//! Membership graphs and graph codes.
//!
//! Unfolding "n contains the positions of its 1 bits" hereditarily turns a
//! number into a DAG whose vertices are its distinct parts; decorating a
//! DAG plays the unfolding backwards. Transposing the compact DAG before
//! decorating yields the intensional dual of a number. Independently of all
//! that, [`nat_to_digraph`] reads a number as an edge set directly, one
//! edge per bit through [`bitmerge_unpair`].

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;

use num_traits::Zero;

use crate::natset::{nat_to_set, set_to_nat};
use crate::pairing::{bitmerge_pair, bitmerge_unpair};
use crate::{exp2, Error, Nat, Result};

/// Direction to give the membership relation's edges.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientation {
    /// element -> container
    Member,
    /// container -> element
    Contains,
}

/// Vertex cap for [`build_raw_dag`], whose vertex space is the *value* of
/// the number, mostly as isolated vertices.
const RAW_VERTEX_LIMIT: usize = 1 << 24;

/// A finite directed graph on vertices 0..count, as successor lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dag {
    adjacency: Vec<Vec<usize>>,
}

impl Dag {
    /// Build from successor lists, which are kept as given.
    pub fn from_adjacency(adjacency: Vec<Vec<usize>>) -> Result<Self> {
        let count = adjacency.len();
        for targets in &adjacency {
            for &t in targets {
                if t >= count {
                    return Err(Error::VertexOutOfRange { vertex: t, count });
                }
            }
        }
        Ok(Dag { adjacency })
    }

    /// Build on vertices 0..=hi from an edge list; successors come out
    /// sorted.
    pub fn from_edges(hi: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adjacency = vec![Vec::new(); hi + 1];
        for &(v, t) in edges {
            if v > hi || t > hi {
                return Err(Error::VertexOutOfRange {
                    vertex: v.max(t),
                    count: hi + 1,
                });
            }
            adjacency[v].push(t);
        }
        for targets in &mut adjacency {
            targets.sort_unstable();
        }
        Ok(Dag { adjacency })
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    /// Successors of `v` in stored order.
    pub fn successors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    /// All edges, grouped by source vertex.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(v, targets)| targets.iter().map(move |&t| (v, t)))
            .collect()
    }
}

/// Every number reachable from `n` by repeatedly taking bit positions,
/// `n` itself and 0 included, in ascending order.
///
/// These are the vertices of n's membership graph; the walk memoizes on
/// the fly, so shared parts cost once.
pub fn nat_to_parts(n: &Nat) -> Vec<Nat> {
    let mut seen = BTreeSet::new();
    let mut pending = vec![n.clone()];
    while let Some(p) = pending.pop() {
        let fresh = seen.insert(p.clone());
        if fresh {
            pending.extend(nat_to_set(&p));
        }
    }
    seen.into_iter().collect()
}

/// The membership edges among [`nat_to_parts`], oriented as asked,
/// lexicographically sorted and duplicate-free.
pub fn nat_to_pairs(orientation: Orientation, n: &Nat) -> Vec<(Nat, Nat)> {
    let mut edges = Vec::new();
    for container in nat_to_parts(n) {
        for element in nat_to_set(&container) {
            edges.push(match orientation {
                Orientation::Member => (element, container.clone()),
                Orientation::Contains => (container.clone(), element),
            });
        }
    }
    edges.sort_unstable();
    edges.dedup();
    edges
}

/// Membership graph on raw vertices: vertex i stands for the number i, so
/// all but the parts of `n` are isolated. Fine for desk-sized n, guarded
/// beyond that.
pub fn build_raw_dag(orientation: Orientation, n: &Nat) -> Result<Dag> {
    let parts = nat_to_parts(n);
    let hi = parts.last().expect("0 is always a part");
    let hi = usize::try_from(hi)
        .ok()
        .filter(|&hi| hi < RAW_VERTEX_LIMIT)
        .ok_or_else(|| Error::TooLarge(format!("raw membership graph on {n} vertices")))?;
    let edges: Vec<(usize, usize)> = nat_to_pairs(orientation, n)
        .iter()
        .map(|(a, b)| {
            (
                usize::try_from(a).expect("parts fit: bounded by n"),
                usize::try_from(b).expect("parts fit: bounded by n"),
            )
        })
        .collect();
    Dag::from_edges(hi, &edges)
}

/// Compact membership DAG of `n`: one vertex per part, labelled by the
/// parts in *descending* order, so vertex 0 is n itself and the last
/// vertex is the empty set. Edges point container -> element; successor
/// lists are ascending.
pub fn to_compact_dag(n: &Nat) -> Dag {
    let parts = nat_to_parts(n);
    let count = parts.len();
    let index: HashMap<Nat, usize> = parts
        .into_iter()
        .rev()
        .enumerate()
        .map(|(i, p)| (p, i))
        .collect();
    let mut adjacency = vec![Vec::new(); count];
    for (container, element) in nat_to_pairs(Orientation::Contains, n) {
        adjacency[index[&container]].push(index[&element]);
    }
    for targets in &mut adjacency {
        targets.sort_unstable();
    }
    Dag { adjacency }
}

/// Reverse every edge. Successor order within a vertex is not preserved
/// (it comes out ascending); only the edge set is meaningful.
pub fn transpose(g: &Dag) -> Dag {
    let mut adjacency = vec![Vec::new(); g.vertex_count()];
    for v in 0..g.vertex_count() {
        for &t in g.successors(v) {
            adjacency[t].push(v);
        }
    }
    Dag { adjacency }
}

/// The Ackermann decoration of `root`: sinks decorate to 0, every other
/// vertex to the sum of 2^decoration(successor).
///
/// Memoized, so shared substructure is computed once; iterative, so deep
/// graphs do not exhaust the call stack; cycle-checked, so a non-DAG fails
/// with [`Error::CyclicGraph`] instead of looping.
pub fn decorate(g: &Dag, root: usize) -> Result<Nat> {
    const WHITE: u8 = 0; // untouched
    const GRAY: u8 = 1; // on the current path
    const BLACK: u8 = 2; // decorated
    let count = g.vertex_count();
    if root >= count {
        return Err(Error::VertexOutOfRange {
            vertex: root,
            count,
        });
    }
    let mut color = vec![WHITE; count];
    let mut memo: Vec<Option<Nat>> = vec![None; count];
    let mut stack = vec![(root, false)];
    while let Some((v, ready)) = stack.pop() {
        if ready {
            let mut code = Nat::zero();
            for &t in g.successors(v) {
                let d = memo[t].as_ref().expect("successors decorate first");
                code += exp2(d)?;
            }
            memo[v] = Some(code);
            color[v] = BLACK;
        } else {
            match color[v] {
                BLACK => {}
                GRAY => return Err(Error::CyclicGraph(v)),
                _ => {
                    color[v] = GRAY;
                    stack.push((v, true));
                    for &t in g.successors(v) {
                        match color[t] {
                            GRAY => return Err(Error::CyclicGraph(t)),
                            WHITE => stack.push((t, false)),
                            _ => {}
                        }
                    }
                }
            }
        }
    }
    Ok(memo[root].clone().expect("root was decorated"))
}

/// Decoration of the first vertex; inverts [`to_compact_dag`].
pub fn from_dag(g: &Dag) -> Result<Nat> {
    decorate(g, 0)
}

/// Decoration of the last vertex, the natural root after a transpose.
pub fn from_ddag(g: &Dag) -> Result<Nat> {
    let count = g.vertex_count();
    if count == 0 {
        return Err(Error::VertexOutOfRange { vertex: 0, count });
    }
    decorate(g, count - 1)
}

/// `n` with all membership arrows reversed: unfold, transpose, decorate.
///
/// Not an involution in general (distinct vertices of the transpose may
/// carry equal decorations, so information can collapse); the interesting
/// fixpoints are the [`self_duals`].
pub fn intensional_dual(n: &Nat) -> Result<Nat> {
    from_ddag(&transpose(&to_compact_dag(n)))
}

/// Numbers in [from, to] equal to their own intensional dual, ascending.
/// An empty range yields an empty list.
pub fn self_duals(from: &Nat, to: &Nat) -> Result<Vec<Nat>> {
    let mut out = Vec::new();
    let mut i = from.clone();
    while i <= *to {
        if intensional_dual(&i)? == i {
            out.push(i.clone());
        }
        i += 1u32;
    }
    Ok(out)
}

/// Decode `n` as a digraph on naturals: one edge per bit position, each
/// position split by [`bitmerge_unpair`]. Edges come out in increasing
/// pair-code order.
pub fn nat_to_digraph(n: &Nat) -> Vec<(Nat, Nat)> {
    nat_to_set(n).iter().map(bitmerge_unpair).collect()
}

/// Encode an edge list, any order, duplicates rejected.
pub fn digraph_to_nat(edges: &[(Nat, Nat)]) -> Result<Nat> {
    let mut codes: Vec<Nat> = edges.iter().map(|(x, y)| bitmerge_pair(x, y)).collect();
    codes.sort_unstable();
    if codes.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::NotCanonical("duplicate edge"));
    }
    set_to_nat(&codes)
}

/// Deterministic DOT rendering; labels, when given, must cover every
/// vertex exactly.
pub fn dag_to_dot(g: &Dag, labels: Option<&[String]>) -> Result<String> {
    if let Some(ls) = labels {
        if ls.len() != g.vertex_count() {
            return Err(Error::LabelCountMismatch {
                got: ls.len(),
                expected: g.vertex_count(),
            });
        }
    }
    let mut out = String::from("digraph {\n");
    for v in 0..g.vertex_count() {
        match labels {
            Some(ls) => {
                let text = ls[v].replace('\\', "\\\\").replace('"', "\\\"");
                let _ = writeln!(out, "  {v} [label=\"{text}\"];");
            }
            None => {
                let _ = writeln!(out, "  {v};");
            }
        }
    }
    for (v, t) in g.edges() {
        let _ = writeln!(out, "  {v} -> {t};");
    }
    out.push_str("}\n");
    Ok(out)
}
