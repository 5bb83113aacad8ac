//! Hypergraphs as bit-encoded vertex subsets, plus the derived
//! subhypergraphs the density-matrix formulas are built from.
//!
//! Vertices are labeled `1..=n`. A hyperedge is stored as a bitmask with
//! bit `k-1` set exactly when vertex `k` is a member; the empty hyperedge
//! is a legal edge. Edge sets are kept sorted and duplicate-free so
//! equality and hashing are canonical.

use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// Hard representation limit: hyperedges are 32-bit masks.
pub const MAX_VERTICES: u32 = 32;

/// A subset of the vertices `{1, ..., n}`, possibly empty.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Hyperedge(u32);

impl Hyperedge {
    /// The empty hyperedge.
    pub const EMPTY: Hyperedge = Hyperedge(0);

    /// Builds an edge from raw mask bits (bit `k-1` is vertex `k`).
    pub const fn from_bits(bits: u32) -> Hyperedge {
        Hyperedge(bits)
    }

    /// Builds an edge from vertex labels. Labels must lie in
    /// `1..=MAX_VERTICES`; membership in a particular hypergraph is checked
    /// when the hypergraph is constructed.
    pub fn from_vertices<I: IntoIterator<Item = u32>>(vertices: I) -> Result<Hyperedge> {
        let mut bits = 0u32;
        for v in vertices {
            if v < 1 || v > MAX_VERTICES {
                return Err(Error::VertexOutOfRange { vertex: v, n: MAX_VERTICES });
            }
            bits |= 1 << (v - 1);
        }
        Ok(Hyperedge(bits))
    }

    pub const fn bits(self) -> u32 {
        self.0
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Number of member vertices.
    pub const fn cardinality(self) -> u32 {
        self.0.count_ones()
    }

    pub const fn contains(self, vertex: u32) -> bool {
        vertex >= 1 && vertex <= MAX_VERTICES && (self.0 >> (vertex - 1)) & 1 == 1
    }

    /// Member vertices in increasing order.
    pub fn vertices(self) -> impl Iterator<Item = u32> {
        let bits = self.0;
        (1..=MAX_VERTICES).filter(move |v| (bits >> (v - 1)) & 1 == 1)
    }

    /// Removes `vertex` (member or not) and compacts every higher label
    /// down by one, so the result lives on `{1, ..., n-1}`.
    fn delete_vertex(self, vertex: u32) -> Hyperedge {
        let bit = vertex - 1;
        let low = self.0 & ((1u32 << bit) - 1);
        let high = ((self.0 as u64 >> (bit + 1)) as u32) << bit;
        Hyperedge(low | high)
    }
}

impl fmt::Debug for Hyperedge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, v) in self.vertices().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// A hypergraph: a vertex count `n` and a set of hyperedges.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Hypergraph {
    n: u32,
    /// Strictly increasing by mask; never contains duplicates.
    edges: Vec<Hyperedge>,
}

/// The partition of `{1, ..., n}` into connected components, each block a
/// vertex bitmask, ordered by least member.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ComponentPartition {
    n: u32,
    blocks: Vec<u32>,
}

impl ComponentPartition {
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Component vertex sets as bitmasks.
    pub fn blocks(&self) -> &[u32] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn contains_block(&self, mask: u32) -> bool {
        self.blocks.iter().any(|&b| b == mask)
    }

    /// Vertex labels of block `idx`, increasing.
    pub fn block_vertices(&self, idx: usize) -> impl Iterator<Item = u32> + '_ {
        Hyperedge::from_bits(self.blocks[idx]).vertices()
    }
}

impl Hypergraph {
    /// Builds a hypergraph, rejecting duplicate edges rather than deduping
    /// them silently.
    pub fn new<I: IntoIterator<Item = Hyperedge>>(n: u32, edges: I) -> Result<Hypergraph> {
        if n < 1 || n > MAX_VERTICES {
            return Err(Error::VertexOutOfRange { vertex: n, n: MAX_VERTICES });
        }
        let mask = vertex_mask(n);
        let mut list: Vec<Hyperedge> = edges.into_iter().collect();
        for e in &list {
            if e.bits() & !mask != 0 {
                let bad = Hyperedge::from_bits(e.bits() & !mask)
                    .vertices()
                    .next()
                    .unwrap_or(0);
                return Err(Error::VertexOutOfRange { vertex: bad, n });
            }
        }
        list.sort_unstable();
        for w in list.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateEdge { edge_bits: w[0].bits() });
            }
        }
        Ok(Hypergraph { n, edges: list })
    }

    /// Convenience constructor from vertex-label lists.
    pub fn from_edge_lists(n: u32, lists: &[&[u32]]) -> Result<Hypergraph> {
        let mut edges = Vec::with_capacity(lists.len());
        for list in lists {
            edges.push(Hyperedge::from_vertices(list.iter().copied())?);
        }
        Hypergraph::new(n, edges)
    }

    /// The hypergraph on `n` vertices with no edges at all.
    pub fn empty(n: u32) -> Hypergraph {
        Hypergraph::new(n, []).expect("vertex count out of range")
    }

    /// The hypergraph whose single hyperedge contains every vertex.
    pub fn single_full_edge(n: u32) -> Hypergraph {
        Hypergraph::new(n, [Hyperedge::from_bits(vertex_mask(n))])
            .expect("vertex count out of range")
    }

    /// Internal constructor for derived hypergraphs; `edges` must already be
    /// sorted and duplicate-free, and `n = 0` is allowed (a pair reduction
    /// of a two-vertex hypergraph has no vertices left).
    fn from_sorted(n: u32, edges: Vec<Hyperedge>) -> Hypergraph {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        Hypergraph { n, edges }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Edges in increasing mask order.
    pub fn edges(&self) -> &[Hyperedge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn contains_edge(&self, e: Hyperedge) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    /// Maximum hyperedge cardinality; 0 for an empty edge set or `{∅}`.
    pub fn rank(&self) -> u32 {
        self.edges.iter().map(|e| e.cardinality()).max().unwrap_or(0)
    }

    /// True when every hyperedge is the empty edge or a loop, in which case
    /// the associated state is fully separable.
    pub fn is_trivial(&self) -> bool {
        self.rank() <= 1
    }

    /// Three-valued classifier of the edge set driving the closed-form
    /// densities: `1` for no edges, `-1` for exactly the empty hyperedge,
    /// `0` once any vertex is involved (rank >= 1).
    pub fn edge_set_sign(&self) -> i8 {
        match self.edges.as_slice() {
            [] => 1,
            [e] if e.is_empty() => -1,
            _ => 0,
        }
    }

    fn check_vertex(&self, v: u32) -> Result<()> {
        if v < 1 || v > self.n {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    fn check_pair(&self, i: u32, j: u32) -> Result<()> {
        self.check_vertex(i)?;
        self.check_vertex(j)?;
        if i == j {
            return Err(Error::SameVertex { vertex: i });
        }
        Ok(())
    }

    /// The subhypergraph on `V - {t}` collecting `e - {t}` for every edge
    /// containing `t`, with the remaining labels compacted order-preservingly.
    pub fn t_adjacent(&self, t: u32) -> Result<Hypergraph> {
        self.check_vertex(t)?;
        let reduced = self
            .edges
            .iter()
            .filter(|e| e.contains(t))
            .map(|e| e.delete_vertex(t));
        Ok(Hypergraph::from_sorted(self.n - 1, cancel_pairs(reduced.collect())))
    }

    /// The subhypergraph on `V - {i, j}` collecting `e - {i, j}` for every
    /// edge containing both `i` and `j`.
    pub fn pair_adjacent(&self, i: u32, j: u32) -> Result<Hypergraph> {
        self.check_pair(i, j)?;
        let (lo, hi) = if i < j { (i, j) } else { (j, i) };
        let reduced = self
            .edges
            .iter()
            .filter(|e| e.contains(i) && e.contains(j))
            .map(|e| e.delete_vertex(hi).delete_vertex(lo));
        Ok(Hypergraph::from_sorted(self.n - 2, cancel_pairs(reduced.collect())))
    }

    /// The subhypergraph on `V - {i, j}` collecting `e - {i}` for every edge
    /// containing `i` but not `j`. Order matters: swapping the arguments
    /// selects a different edge family.
    pub fn ordered_adjacent(&self, i: u32, j: u32) -> Result<Hypergraph> {
        self.check_pair(i, j)?;
        let (lo, hi) = if i < j { (i, j) } else { (j, i) };
        let reduced = self
            .edges
            .iter()
            .filter(|e| e.contains(i) && !e.contains(j))
            .map(|e| e.delete_vertex(hi).delete_vertex(lo));
        Ok(Hypergraph::from_sorted(self.n - 2, cancel_pairs(reduced.collect())))
    }

    /// Symmetric difference of the edge sets; both hypergraphs must have the
    /// same vertex count.
    pub fn sym_diff(&self, other: &Hypergraph) -> Result<Hypergraph> {
        if self.n != other.n {
            return Err(Error::VertexCountMismatch { left: self.n, right: other.n });
        }
        let mut out = Vec::with_capacity(self.edges.len() + other.edges.len());
        let (mut a, mut b) = (self.edges.iter().peekable(), other.edges.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&x), Some(&&y)) => {
                    if x < y {
                        out.push(x);
                        a.next();
                    } else if y < x {
                        out.push(y);
                        b.next();
                    } else {
                        a.next();
                        b.next();
                    }
                }
                (Some(&&x), None) => {
                    out.push(x);
                    a.next();
                }
                (None, Some(&&y)) => {
                    out.push(y);
                    b.next();
                }
                (None, None) => break,
            }
        }
        Ok(Hypergraph::from_sorted(self.n, out))
    }

    /// Connected components under "shares a hyperedge" adjacency. Loops and
    /// the empty hyperedge connect nothing; isolated vertices are singleton
    /// blocks.
    pub fn components(&self) -> ComponentPartition {
        let mut uf = UnionFind::new(self.n as usize);
        for e in &self.edges {
            let mut vs = e.vertices();
            if let Some(first) = vs.next() {
                for v in vs {
                    uf.union(first as usize - 1, v as usize - 1);
                }
            }
        }
        let mut masks = alloc::vec![0u32; self.n as usize];
        for v in 0..self.n as usize {
            masks[uf.find(v)] |= 1 << v;
        }
        let mut blocks: Vec<u32> = masks.into_iter().filter(|&m| m != 0).collect();
        blocks.sort_unstable_by_key(|m| m.trailing_zeros());
        ComponentPartition { n: self.n, blocks }
    }

    /// True iff some connected component has vertex set exactly `{i, j}`.
    pub fn has_pair_component(&self, i: u32, j: u32) -> Result<bool> {
        self.check_pair(i, j)?;
        let mask = (1 << (i - 1)) | (1 << (j - 1));
        Ok(self.components().contains_block(mask))
    }
}

pub(crate) fn vertex_mask(n: u32) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

/// Collapses a multiset of reduced edges by parity: an even number of
/// preimages cancels, an odd number leaves one edge. This is the symmetric
/// difference semantics that keeps derived edge sets consistent with the
/// parity function they represent.
fn cancel_pairs(mut edges: Vec<Hyperedge>) -> Vec<Hyperedge> {
    edges.sort_unstable();
    let mut out = Vec::with_capacity(edges.len());
    let mut i = 0;
    while i < edges.len() {
        let run = edges[i..].iter().take_while(|e| **e == edges[i]).count();
        if run % 2 == 1 {
            out.push(edges[i]);
        }
        i += run;
    }
    out
}

struct UnionFind {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect(), rank: alloc::vec![0; n] }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, x: usize, y: usize) {
        let (rx, ry) = (self.find(x), self.find(y));
        if rx == ry {
            return;
        }
        if self.rank[rx] < self.rank[ry] {
            self.parent[rx] = ry;
        } else if self.rank[rx] > self.rank[ry] {
            self.parent[ry] = rx;
        } else {
            self.parent[ry] = rx;
            self.rank[rx] += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The four-vertex example with edges {1,2}, {2,3}, {3,4}, {2,3,4}.
    pub(crate) fn sample_chain() -> Hypergraph {
        Hypergraph::from_edge_lists(4, &[&[1, 2], &[2, 3], &[3, 4], &[2, 3, 4]]).unwrap()
    }

    fn edge(vs: &[u32]) -> Hyperedge {
        Hyperedge::from_vertices(vs.iter().copied()).unwrap()
    }

    #[test]
    fn construction_and_accessors() {
        let g = sample_chain();
        assert_eq!(g.n(), 4);
        assert_eq!(g.edge_count(), 4);
        assert!(g.contains_edge(edge(&[2, 3, 4])));
        assert!(!g.contains_edge(edge(&[1, 3])));

        let empty = Hypergraph::empty(3);
        assert_eq!(empty.n(), 3);
        assert_eq!(empty.edge_count(), 0);
    }

    #[test]
    fn duplicate_edges_are_rejected() {
        let err = Hypergraph::from_edge_lists(4, &[&[1, 2], &[1, 2]]).unwrap_err();
        assert_eq!(err, Error::DuplicateEdge { edge_bits: 0b11 });
    }

    #[test]
    fn out_of_range_vertices_are_rejected() {
        let err = Hypergraph::from_edge_lists(4, &[&[1, 5]]).unwrap_err();
        assert_eq!(err, Error::VertexOutOfRange { vertex: 5, n: 4 });
        assert!(Hypergraph::new(0, []).is_err());
        assert!(Hypergraph::new(33, []).is_err());
        assert!(Hyperedge::from_vertices([0]).is_err());
        assert!(Hyperedge::from_vertices([33]).is_err());
    }

    #[test]
    fn rank_cases() {
        assert_eq!(sample_chain().rank(), 3);
        assert_eq!(Hypergraph::empty(3).rank(), 0);
        let g = Hypergraph::new(2, [Hyperedge::EMPTY, edge(&[2])]).unwrap();
        assert_eq!(g.rank(), 1);
    }

    #[test]
    fn triviality_cases() {
        let loops = Hypergraph::new(3, [Hyperedge::EMPTY, edge(&[1]), edge(&[3])]).unwrap();
        assert!(loops.is_trivial());
        assert!(!sample_chain().is_trivial());
        assert!(Hypergraph::empty(2).is_trivial());
    }

    #[test]
    fn t_adjacent_matches_worked_examples() {
        // Deleting vertex 4 from the sample keeps {3} and {2,3}.
        let g4 = sample_chain().t_adjacent(4).unwrap();
        assert_eq!(g4, Hypergraph::from_edge_lists(3, &[&[3], &[2, 3]]).unwrap());

        let e = Hypergraph::empty(3).t_adjacent(2).unwrap();
        assert_eq!(e, Hypergraph::empty(2));

        // {1} - {1} = ∅ and {1,2} - {1} = {2} (relabeled to {1}).
        let g = Hypergraph::from_edge_lists(2, &[&[1], &[1, 2]]).unwrap();
        let gt = g.t_adjacent(1).unwrap();
        assert_eq!(gt.n(), 1);
        assert_eq!(gt.edges(), &[Hyperedge::EMPTY, edge(&[1])]);

        assert!(sample_chain().t_adjacent(5).is_err());
    }

    #[test]
    fn pair_adjacent_matches_worked_examples() {
        let g = sample_chain().pair_adjacent(3, 4).unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(g.edges(), &[Hyperedge::EMPTY, edge(&[2])]);

        assert_eq!(Hypergraph::empty(4).pair_adjacent(1, 3).unwrap(), Hypergraph::empty(2));

        let full = Hypergraph::single_full_edge(5).pair_adjacent(2, 4).unwrap();
        assert_eq!(full, Hypergraph::single_full_edge(3));

        assert_eq!(
            sample_chain().pair_adjacent(2, 2).unwrap_err(),
            Error::SameVertex { vertex: 2 }
        );
    }

    #[test]
    fn ordered_adjacent_matches_worked_examples() {
        let g = sample_chain().ordered_adjacent(3, 4).unwrap();
        assert_eq!(g.edges(), &[edge(&[2])]);

        let h = sample_chain().ordered_adjacent(4, 3).unwrap();
        assert_eq!(h.edge_count(), 0);

        let full = Hypergraph::single_full_edge(4).ordered_adjacent(1, 2).unwrap();
        assert_eq!(full.edge_count(), 0);
    }

    #[test]
    fn sym_diff_cases() {
        let a = Hypergraph::new(2, [Hyperedge::EMPTY, edge(&[2])]).unwrap();
        let b = Hypergraph::new(2, [edge(&[2])]).unwrap();
        assert_eq!(a.sym_diff(&b).unwrap().edges(), &[Hyperedge::EMPTY]);

        let g = sample_chain();
        assert_eq!(g.sym_diff(&g).unwrap().edge_count(), 0);

        let x = Hypergraph::from_edge_lists(2, &[&[1]]).unwrap();
        let y = Hypergraph::from_edge_lists(2, &[&[2]]).unwrap();
        assert_eq!(x.sym_diff(&y).unwrap().edges(), &[edge(&[1]), edge(&[2])]);

        assert_eq!(
            x.sym_diff(&Hypergraph::empty(3)).unwrap_err(),
            Error::VertexCountMismatch { left: 2, right: 3 }
        );
    }

    #[test]
    fn components_cases() {
        let p = sample_chain().components();
        assert_eq!(p.blocks(), &[0b1111]);

        let g = Hypergraph::from_edge_lists(4, &[&[1, 2], &[3]]).unwrap();
        assert_eq!(g.components().blocks(), &[0b0011, 0b0100, 0b1000]);

        let e = Hypergraph::empty(3).components();
        assert_eq!(e.blocks(), &[0b001, 0b010, 0b100]);
        assert_eq!(e.block_vertices(1).collect::<Vec<_>>(), vec![2]);
    }

    #[test]
    fn pair_component_cases() {
        let g = Hypergraph::from_edge_lists(4, &[&[1, 2], &[3, 4]]).unwrap();
        assert!(g.has_pair_component(1, 2).unwrap());
        assert!(g.has_pair_component(4, 3).unwrap());
        assert!(!g.has_pair_component(1, 3).unwrap());

        let path = Hypergraph::from_edge_lists(3, &[&[1, 2], &[2, 3]]).unwrap();
        assert!(!path.has_pair_component(1, 2).unwrap());

        // Loops on the pair do not enlarge its component.
        let looped = Hypergraph::from_edge_lists(2, &[&[1, 2], &[1], &[2]]).unwrap();
        assert!(looped.has_pair_component(1, 2).unwrap());

        assert!(path.has_pair_component(2, 2).is_err());
    }

    #[test]
    fn edge_set_sign_cases() {
        assert_eq!(Hypergraph::empty(3).edge_set_sign(), 1);
        let only_empty = Hypergraph::new(3, [Hyperedge::EMPTY]).unwrap();
        assert_eq!(only_empty.edge_set_sign(), -1);
        let mixed = Hypergraph::new(3, [Hyperedge::EMPTY, edge(&[2])]).unwrap();
        assert_eq!(mixed.edge_set_sign(), 0);
    }

    #[test]
    fn sign_multiplies_over_sym_diff_at_rank_zero() {
        let empty = Hypergraph::empty(2);
        let only_empty = Hypergraph::new(2, [Hyperedge::EMPTY]).unwrap();
        for a in [&empty, &only_empty] {
            for b in [&empty, &only_empty] {
                let d = a.sym_diff(b).unwrap();
                assert_eq!(d.edge_set_sign(), a.edge_set_sign() * b.edge_set_sign());
            }
        }
    }

    #[test]
    fn adjacency_families_are_disjoint_in_the_source() {
        let g = sample_chain();
        for i in 1..=4u32 {
            for j in 1..=4u32 {
                if i == j {
                    continue;
                }
                let total = g.pair_adjacent(i, j).unwrap().edge_count()
                    + g.ordered_adjacent(i, j).unwrap().edge_count()
                    + g.ordered_adjacent(j, i).unwrap().edge_count();
                assert!(total <= g.edge_count());
            }
        }
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn pair_adjacent_is_iterated_single_deletion(g in arb_hypergraph(2, 6)) {
                let n = g.n();
                for j in 1..=n {
                    for i in 1..=n {
                        if i == j { continue; }
                        let direct = g.pair_adjacent(i, j).unwrap();
                        let i_after = if i > j { i - 1 } else { i };
                        let steps = g.t_adjacent(j).unwrap().t_adjacent(i_after).unwrap();
                        // pair-adjacency keeps only edges containing BOTH i
                        // and j; deleting j first keeps edges containing j,
                        // then deleting i' keeps those also containing i.
                        prop_assert_eq!(direct, steps);
                    }
                }
            }

            #[test]
            fn sym_diff_group_laws((a, b, c) in arb_hypergraph_triple(3, 5)) {
                let ab = a.sym_diff(&b).unwrap();
                let ba = b.sym_diff(&a).unwrap();
                prop_assert_eq!(&ab, &ba);
                let ab_c = ab.sym_diff(&c).unwrap();
                let a_bc = a.sym_diff(&b.sym_diff(&c).unwrap()).unwrap();
                prop_assert_eq!(ab_c, a_bc);
                prop_assert_eq!(a.sym_diff(&a).unwrap().edge_count(), 0);
            }

            #[test]
            fn adjacency_edge_budget(g in arb_hypergraph(2, 6)) {
                let n = g.n();
                for i in 1..=n {
                    for j in (i + 1)..=n {
                        let total = g.pair_adjacent(i, j).unwrap().edge_count()
                            + g.ordered_adjacent(i, j).unwrap().edge_count()
                            + g.ordered_adjacent(j, i).unwrap().edge_count();
                        prop_assert!(total <= g.edge_count());
                    }
                }
            }

            #[test]
            fn pair_component_is_symmetric(g in arb_hypergraph(2, 6)) {
                let n = g.n();
                for i in 1..=n {
                    for j in (i + 1)..=n {
                        prop_assert_eq!(
                            g.has_pair_component(i, j).unwrap(),
                            g.has_pair_component(j, i).unwrap()
                        );
                    }
                }
            }
        }
    }
}

#[cfg(test)]
pub(crate) mod strategies {
    //! Hypergraph generators shared by the test suites.

    use super::{Hyperedge, Hypergraph};
    use proptest::prelude::*;

    /// Random hypergraph on exactly `n` vertices; every edge mask is drawn
    /// uniformly, with the edge count capped so large n stays manageable.
    pub(crate) fn arb_hypergraph_n(n: u32) -> impl Strategy<Value = Hypergraph> {
        let cap = 1usize << n.min(6);
        proptest::collection::btree_set(0u32..(1u32 << n), 0..=cap).prop_map(move |picks| {
            Hypergraph::new(n, picks.into_iter().map(Hyperedge::from_bits)).unwrap()
        })
    }

    pub(crate) fn arb_hypergraph(lo: u32, hi: u32) -> impl Strategy<Value = Hypergraph> {
        (lo..=hi).prop_flat_map(arb_hypergraph_n)
    }

    /// Two hypergraphs sharing a vertex count.
    pub(crate) fn arb_hypergraph_pair(
        lo: u32,
        hi: u32,
    ) -> impl Strategy<Value = (Hypergraph, Hypergraph)> {
        (lo..=hi).prop_flat_map(|n| (arb_hypergraph_n(n), arb_hypergraph_n(n)))
    }

    /// Three hypergraphs sharing a vertex count.
    pub(crate) fn arb_hypergraph_triple(
        lo: u32,
        hi: u32,
    ) -> impl Strategy<Value = (Hypergraph, Hypergraph, Hypergraph)> {
        (lo..=hi).prop_flat_map(|n| (arb_hypergraph_n(n), arb_hypergraph_n(n), arb_hypergraph_n(n)))
    }
}

#[cfg(test)]
pub(crate) use strategies::{arb_hypergraph, arb_hypergraph_pair, arb_hypergraph_triple};
#[cfg(test)]
pub(crate) use tests::sample_chain;
