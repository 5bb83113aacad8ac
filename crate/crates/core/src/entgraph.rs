//! Entangled graphs: one vertex per qubit, one edge per qubit pair whose
//! concurrence clears the entanglement threshold.
//!
//! Also houses the exhaustive small-scale sweeps: enumerating the distinct
//! entangled graphs of all graph states on up to six vertices, checking the
//! pair-component criterion for graphs, and the W-state comparison.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::concurrence::{concurrence_pair, Method, ENTANGLEMENT_THRESHOLD};
use crate::hypergraph::{Hyperedge, Hypergraph};
use crate::statesim::{reduce_pair, w_state, StateVector};
use crate::{concurrence, Error, Result};

/// A simple graph on `{1, ..., n}` whose edges mark entangled qubit pairs,
/// each weighted by its concurrence.
#[derive(Clone, PartialEq, Debug)]
pub struct EntangledGraph {
    n: u32,
    weights: BTreeMap<(u32, u32), f64>,
}

impl EntangledGraph {
    /// Collects pair concurrences, keeping those above the entanglement
    /// threshold. Pairs are normalized to `i < j`.
    pub fn from_pair_concurrences<I>(n: u32, pairs: I) -> EntangledGraph
    where
        I: IntoIterator<Item = ((u32, u32), f64)>,
    {
        let mut weights = BTreeMap::new();
        for ((i, j), c) in pairs {
            if c > ENTANGLEMENT_THRESHOLD {
                let key = if i < j { (i, j) } else { (j, i) };
                weights.insert(key, c);
            }
        }
        EntangledGraph { n, weights }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.weights.len()
    }

    /// Edges in sorted order.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.weights.keys().copied()
    }

    /// Edges with their concurrences, sorted.
    pub fn weighted_edges(&self) -> impl Iterator<Item = ((u32, u32), f64)> + '_ {
        self.weights.iter().map(|(&p, &w)| (p, w))
    }

    pub fn weight(&self, i: u32, j: u32) -> Option<f64> {
        let key = if i < j { (i, j) } else { (j, i) };
        self.weights.get(&key).copied()
    }

    pub fn contains_edge(&self, i: u32, j: u32) -> bool {
        self.weight(i, j).is_some()
    }

    pub fn degree(&self, v: u32) -> usize {
        self.weights.keys().filter(|(i, j)| *i == v || *j == v).count()
    }

    /// The edge set alone, sorted; the deduplication key for enumeration.
    pub fn edge_set(&self) -> Vec<(u32, u32)> {
        self.weights.keys().copied().collect()
    }

    /// True iff every vertex meets at most one edge.
    pub fn is_matching(&self) -> bool {
        (1..=self.n).all(|v| self.degree(v) <= 1)
    }
}

/// Sweeps all pairs of the hypergraph state and keeps the entangled ones.
pub fn entangled_graph(g: &Hypergraph, method: Method) -> Result<EntangledGraph> {
    let n = g.n();
    if n < 2 {
        return Err(Error::TooFewQubits { n, min: 2 });
    }
    let mut pairs = Vec::with_capacity(n as usize * (n as usize - 1) / 2);
    for i in 1..=n {
        for j in (i + 1)..=n {
            let c = concurrence_pair(g, i, j, method)?;
            pairs.push(((i, j), c.value));
        }
    }
    Ok(EntangledGraph::from_pair_concurrences(n, pairs))
}

/// Entangled graph of an arbitrary real pure state via statevector
/// reduction.
pub fn state_entangled_graph(psi: &StateVector) -> Result<EntangledGraph> {
    let n = psi.n();
    let mut pairs = Vec::new();
    for i in 1..=n {
        for j in (i + 1)..=n {
            let c = concurrence::concurrence_of(&reduce_pair(psi, i, j)?)?;
            pairs.push(((i, j), c.value));
        }
    }
    Ok(EntangledGraph::from_pair_concurrences(n, pairs))
}

/// Entangled graph of the n-qubit W state, computed from the statevector.
pub fn w_state_entangled_graph(n: u32) -> Result<EntangledGraph> {
    state_entangled_graph(&w_state(n)?)
}

/// For a graph (every hyperedge exactly two vertices), checks that a pair
/// is entangled exactly when it forms its own connected component.
pub fn entanglement_matches_pair_components(g: &Hypergraph) -> Result<bool> {
    if g.edges().iter().any(|e| e.cardinality() != 2) {
        return Err(Error::NotAGraph);
    }
    let n = g.n();
    for i in 1..=n {
        for j in (i + 1)..=n {
            let entangled = concurrence_pair(g, i, j, Method::Combinatorial)?.value
                > ENTANGLEMENT_THRESHOLD;
            if entangled != g.has_pair_component(i, j)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Number of unordered vertex pairs of an n-vertex graph.
pub fn pair_count(n: u32) -> u32 {
    n * (n - 1) / 2
}

/// The graph on `n` vertices selected by `bits`: pairs `(1,2), (1,3), ...,
/// (n-1,n)` in lexicographic order, one bit each. This fixes the index
/// space that graph-state enumeration (and its parallel drivers) walk.
pub fn graph_with_edge_bits(n: u32, bits: u64) -> Hypergraph {
    let mut edges = Vec::new();
    let mut k = 0;
    for i in 1..=n {
        for j in (i + 1)..=n {
            if (bits >> k) & 1 == 1 {
                edges.push(Hyperedge::from_vertices([i, j]).unwrap());
            }
            k += 1;
        }
    }
    Hypergraph::new(n, edges).unwrap()
}

/// Enumerates all `2^(n(n-1)/2)` graphs on `n` labeled vertices, computes
/// each graph state's entangled graph combinatorially, and returns the
/// distinct labeled edge sets in sorted order.
pub fn enumerate_graph_state_entangled_graphs(n: u32) -> Result<Vec<EntangledGraph>> {
    if n < 2 {
        return Err(Error::TooFewQubits { n, min: 2 });
    }
    if n > 6 {
        return Err(Error::TooManyVertices { n, max: 6 });
    }
    let mut seen: BTreeMap<Vec<(u32, u32)>, EntangledGraph> = BTreeMap::new();
    for bits in 0..1u64 << pair_count(n) {
        let g = graph_with_edge_bits(n, bits);
        let ent = entangled_graph(&g, Method::Combinatorial)?;
        seen.entry(ent.edge_set()).or_insert(ent);
    }
    Ok(seen.into_values().collect())
}

/// Secondary statistic for enumeration output: the entangled graphs of
/// graph states are matchings, so their isomorphism class is just the edge
/// count; this counts the distinct classes.
pub fn matching_class_count(graphs: &[EntangledGraph]) -> usize {
    let mut sizes: Vec<usize> = graphs.iter().map(|g| g.edge_count()).collect();
    sizes.sort_unstable();
    sizes.dedup();
    sizes.len()
}
