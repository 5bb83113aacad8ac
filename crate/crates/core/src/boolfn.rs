//! The Boolean-function view of a hypergraph.
//!
//! Every hyperedge is one monomial of an algebraic normal form: the edge
//! `{2, 3}` is the term `x2*x3`, a loop `{k}` is `xk`, and the empty edge
//! is the constant 1. Evaluating the hypergraph's function is taking the
//! parity of the monomials that fire. Bulk evaluation seeds the ANF
//! coefficient vector with one bit per edge and runs the subset-sum
//! (Möbius) transform over GF(2), word-parallel on 64-bit blocks, so a
//! full table costs O(n * 2^n / 64) word operations.

use alloc::vec::Vec;

use crate::hypergraph::Hypergraph;
use crate::{Error, Result};

/// Largest vertex count for which tables (and statevectors) are built:
/// 2^24 entries keep every dense object under ~128 MiB.
pub const MAX_TABLE_VERTICES: u32 = 24;

/// One input point: bit `k-1` holds the value of variable `x_k`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Assignment(pub u32);

impl Assignment {
    /// Builds an assignment from explicit values `(x_1, x_2, ...)`.
    pub fn from_values(values: &[bool]) -> Assignment {
        let mut bits = 0u32;
        for (k, &v) in values.iter().enumerate() {
            if v {
                bits |= 1 << k;
            }
        }
        Assignment(bits)
    }

    /// Value of variable `x_k` (1-based).
    pub fn value(self, k: u32) -> bool {
        (self.0 >> (k - 1)) & 1 == 1
    }
}

/// Dense truth table of a Boolean function on `n` variables, packed into
/// 64-bit blocks. Entry `a` is the function value on the assignment whose
/// bits are `a`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruthTable {
    n: u32,
    blocks: Vec<u64>,
}

impl TruthTable {
    fn zeros(n: u32) -> TruthTable {
        let words = if n >= 6 { 1usize << (n - 6) } else { 1 };
        TruthTable { n, blocks: alloc::vec![0u64; words] }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Number of entries, `2^n`.
    pub fn len(&self) -> u64 {
        1u64 << self.n
    }

    pub fn get(&self, index: u32) -> bool {
        debug_assert!((index as u64) < self.len());
        (self.blocks[(index >> 6) as usize] >> (index & 63)) & 1 == 1
    }

    fn toggle(&mut self, index: u32) {
        self.blocks[(index >> 6) as usize] ^= 1 << (index & 63);
    }

    /// Number of 1-entries.
    pub fn count_ones(&self) -> u64 {
        self.blocks.iter().map(|w| w.count_ones() as u64).sum()
    }

    /// Entrywise XOR with another table on the same variable count.
    pub fn xor(&self, other: &TruthTable) -> Result<TruthTable> {
        if self.n != other.n {
            return Err(Error::VertexCountMismatch { left: self.n, right: other.n });
        }
        let blocks = self
            .blocks
            .iter()
            .zip(&other.blocks)
            .map(|(a, b)| a ^ b)
            .collect();
        Ok(TruthTable { n: self.n, blocks })
    }

    /// In-place subset-sum transform over GF(2): afterwards entry `x` is
    /// the XOR of the seeded coefficients at all subsets of `x`.
    fn subset_zeta(&mut self) {
        // Butterfly strides below one word run inside each block: bits
        // whose index has bit k clear feed the partner 2^k above.
        const IN_WORD: [u64; 6] = [
            0x5555_5555_5555_5555,
            0x3333_3333_3333_3333,
            0x0f0f_0f0f_0f0f_0f0f,
            0x00ff_00ff_00ff_00ff,
            0x0000_ffff_0000_ffff,
            0x0000_0000_ffff_ffff,
        ];
        for k in 0..self.n.min(6) {
            let shift = 1u32 << k;
            let mask = IN_WORD[k as usize];
            for w in &mut self.blocks {
                *w ^= (*w & mask) << shift;
            }
        }
        for k in 6..self.n {
            let stride = 1usize << (k - 6);
            for chunk in self.blocks.chunks_mut(2 * stride) {
                let (lo, hi) = chunk.split_at_mut(stride);
                for (h, l) in hi.iter_mut().zip(lo.iter()) {
                    *h ^= *l;
                }
            }
        }
    }
}

/// Evaluates the hypergraph's function at one assignment: the parity over
/// edges of "all member variables are 1" (the empty edge always fires).
pub fn evaluate(g: &Hypergraph, a: Assignment) -> bool {
    let x = a.0;
    let mut acc = false;
    for e in g.edges() {
        acc ^= x & e.bits() == e.bits();
    }
    acc
}

/// Builds the full truth table by seeding the ANF coefficients (one bit at
/// each edge's mask) and applying the fast subset-sum transform. Agrees
/// bit-for-bit with evaluating every assignment.
pub fn truth_table(g: &Hypergraph) -> Result<TruthTable> {
    if g.n() > MAX_TABLE_VERTICES {
        return Err(Error::TooManyVertices { n: g.n(), max: MAX_TABLE_VERTICES });
    }
    let mut t = TruthTable::zeros(g.n());
    for e in g.edges() {
        t.toggle(e.bits());
    }
    t.subset_zeta();
    Ok(t)
}

/// Number of assignments on which the hypergraph's function is 1.
pub fn hamming_weight(g: &Hypergraph) -> Result<u64> {
    Ok(truth_table(g)?.count_ones())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::{arb_hypergraph, arb_hypergraph_pair, sample_chain, Hyperedge};
    use proptest::prelude::*;

    fn slow_table(g: &Hypergraph) -> Vec<bool> {
        (0..1u32 << g.n()).map(|a| evaluate(g, Assignment(a))).collect()
    }

    #[test]
    fn evaluate_single_full_edge() {
        let g = Hypergraph::single_full_edge(4);
        for a in 0..16u32 {
            assert_eq!(evaluate(&g, Assignment(a)), a == 15);
        }
    }

    #[test]
    fn evaluate_constant_one() {
        let g = Hypergraph::new(3, [Hyperedge::EMPTY]).unwrap();
        for a in 0..8u32 {
            assert!(evaluate(&g, Assignment(a)));
        }
    }

    #[test]
    fn evaluate_sample_chain_point() {
        // At x = (1,1,0,0) only the {1,2} monomial fires.
        let a = Assignment::from_values(&[true, true, false, false]);
        assert_eq!(a.0, 0b0011);
        assert!(a.value(1) && a.value(2) && !a.value(3));
        assert!(evaluate(&sample_chain(), a));
    }

    #[test]
    fn table_small_cases() {
        let and2 = truth_table(&Hypergraph::single_full_edge(2)).unwrap();
        let got: Vec<bool> = (0..4).map(|i| and2.get(i)).collect();
        assert_eq!(got, [false, false, false, true]);

        let zero = truth_table(&Hypergraph::empty(3)).unwrap();
        assert_eq!(zero.count_ones(), 0);

        let ident = truth_table(&Hypergraph::from_edge_lists(1, &[&[1]]).unwrap()).unwrap();
        assert!(!ident.get(0));
        assert!(ident.get(1));
    }

    #[test]
    fn table_rejects_oversized_inputs() {
        let g = Hypergraph::empty(25);
        assert_eq!(
            truth_table(&g).unwrap_err(),
            Error::TooManyVertices { n: 25, max: 24 }
        );
        assert!(hamming_weight(&g).is_err());
    }

    #[test]
    fn weight_examples() {
        for n in 1..=12 {
            assert_eq!(hamming_weight(&Hypergraph::single_full_edge(n)).unwrap(), 1);
        }
        for n in 1..=10 {
            let g = Hypergraph::new(n, [Hyperedge::EMPTY]).unwrap();
            assert_eq!(hamming_weight(&g).unwrap(), 1 << n);
        }
        let and2 = Hypergraph::single_full_edge(2);
        assert_eq!(hamming_weight(&and2).unwrap(), 1);
        assert_eq!(hamming_weight(&Hypergraph::empty(4)).unwrap(), 0);
    }

    #[test]
    fn single_edge_weight_is_a_power_of_two() {
        // A lone monomial on |e| variables is satisfied by 2^(n-|e|) points.
        for n in 1..=8u32 {
            for bits in 1..(1u32 << n) {
                let g = Hypergraph::new(n, [Hyperedge::from_bits(bits)]).unwrap();
                let expect = 1u64 << (n - bits.count_ones());
                assert_eq!(hamming_weight(&g).unwrap(), expect, "n={n} bits={bits:#b}");
            }
        }
    }

    proptest! {
        #[test]
        fn fast_table_equals_slow_table(g in arb_hypergraph(1, 8)) {
            let t = truth_table(&g).unwrap();
            let slow = slow_table(&g);
            for (i, &bit) in slow.iter().enumerate() {
                prop_assert_eq!(t.get(i as u32), bit);
            }
            prop_assert_eq!(t.count_ones(), slow.iter().filter(|&&b| b).count() as u64);
        }

        #[test]
        fn table_xor_tracks_sym_diff((a, b) in arb_hypergraph_pair(2, 8)) {
            let lhs = truth_table(&a.sym_diff(&b).unwrap()).unwrap();
            let rhs = truth_table(&a).unwrap().xor(&truth_table(&b).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn weight_is_bounded(g in arb_hypergraph(1, 8)) {
            let w = hamming_weight(&g).unwrap();
            prop_assert!(w <= 1 << g.n());
        }
    }
}
