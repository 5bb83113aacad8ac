//! Brute-force statevector oracle.
//!
//! Builds the real equally weighted state of a hypergraph (amplitude
//! `(-1)^{u(x)} / sqrt(2^n)` at basis index `x`) and reduces any real pure
//! state to the 4x4 density matrix of a chosen qubit pair by tracing out
//! the rest. Everything here is real arithmetic: the states this crate
//! handles have no complex amplitudes anywhere.

use alloc::vec::Vec;

use crate::boolfn::{truth_table, MAX_TABLE_VERTICES};
use crate::hypergraph::Hypergraph;
use crate::math;
use crate::{Error, Result};

/// An n-qubit real pure state. Basis index convention: `x = x_1 x_2 .. x_n`
/// with `x_1` (qubit 1) the most significant bit.
#[derive(Clone, PartialEq, Debug)]
pub struct StateVector {
    n: u32,
    amps: Vec<f64>,
}

impl StateVector {
    /// Wraps raw amplitudes; the length must be a power of two matching `n`.
    pub fn from_amplitudes(n: u32, amps: Vec<f64>) -> Result<StateVector> {
        if n > MAX_TABLE_VERTICES {
            return Err(Error::TooManyVertices { n, max: MAX_TABLE_VERTICES });
        }
        assert_eq!(amps.len(), 1usize << n, "amplitude count must be 2^n");
        Ok(StateVector { n, amps })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn amplitudes(&self) -> &[f64] {
        &self.amps
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|a| a * a).sum()
    }
}

/// The 4x4 reduced density matrix of a qubit pair `(i, j)`. Row/column
/// index is `z = x_i x_j` with `x_i` the high bit: `z = 2` means
/// `x_i = 1, x_j = 0`.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct PairDensity {
    entries: [[f64; 4]; 4],
}

impl PairDensity {
    pub fn from_rows(entries: [[f64; 4]; 4]) -> PairDensity {
        PairDensity { entries }
    }

    pub fn entries(&self) -> &[[f64; 4]; 4] {
        &self.entries
    }

    pub fn entry(&self, r: usize, s: usize) -> f64 {
        self.entries[r][s]
    }

    pub fn trace(&self) -> f64 {
        (0..4).map(|k| self.entries[k][k]).sum()
    }

    /// Largest entrywise absolute difference against another matrix.
    pub fn max_abs_diff(&self, other: &PairDensity) -> f64 {
        let mut worst = 0.0f64;
        for r in 0..4 {
            for s in 0..4 {
                worst = worst.max(math::abs(self.entries[r][s] - other.entries[r][s]));
            }
        }
        worst
    }

    /// Largest violation of `a_rs = a_sr`.
    pub fn symmetry_defect(&self) -> f64 {
        let mut worst = 0.0f64;
        for r in 0..4 {
            for s in (r + 1)..4 {
                worst = worst.max(math::abs(self.entries[r][s] - self.entries[s][r]));
            }
        }
        worst
    }
}

/// Builds the hypergraph state: equal magnitudes `1/sqrt(2^n)` with the
/// sign pattern of the hypergraph's parity function. Hyperedge gates are
/// never materialized; the sign pattern comes straight from the truth
/// table.
pub fn hypergraph_state(g: &Hypergraph) -> Result<StateVector> {
    let n = g.n();
    if n > MAX_TABLE_VERTICES {
        return Err(Error::TooManyVertices { n, max: MAX_TABLE_VERTICES });
    }
    let table = truth_table(g)?;
    let scale = 1.0 / math::sqrt((1u64 << n) as f64);
    // Truth-table indices put x_1 in the LOW bit; basis indices put x_1 in
    // the HIGH bit, so each lookup reverses the n-bit index.
    let amps = (0..1u32 << n)
        .map(|x| {
            let a = reverse_index(x, n);
            if table.get(a) {
                -scale
            } else {
                scale
            }
        })
        .collect();
    Ok(StateVector { n, amps })
}

/// Equal superposition of the n one-hot basis states.
pub fn w_state(n: u32) -> Result<StateVector> {
    if n < 2 {
        return Err(Error::TooFewQubits { n, min: 2 });
    }
    if n > MAX_TABLE_VERTICES {
        return Err(Error::TooManyVertices { n, max: MAX_TABLE_VERTICES });
    }
    let mut amps = alloc::vec![0.0f64; 1usize << n];
    let amp = 1.0 / math::sqrt(n as f64);
    for k in 0..n {
        amps[1usize << k] = amp;
    }
    Ok(StateVector { n, amps })
}

/// Traces out every qubit except `i` and `j`, returning the pair's density
/// matrix. Works for any real pure state, not just hypergraph states.
pub fn reduce_pair(psi: &StateVector, i: u32, j: u32) -> Result<PairDensity> {
    let n = psi.n;
    if n < 2 {
        return Err(Error::TooFewQubits { n, min: 2 });
    }
    if i < 1 || i > n {
        return Err(Error::VertexOutOfRange { vertex: i, n });
    }
    if j < 1 || j > n {
        return Err(Error::VertexOutOfRange { vertex: j, n });
    }
    if i == j {
        return Err(Error::SameVertex { vertex: i });
    }

    // Bit positions of the pair inside a basis index (qubit k sits at bit
    // n-k). `y` runs over the remaining qubits in their original order.
    let pos_i = n - i;
    let pos_j = n - j;
    let (lo, hi) = if pos_i < pos_j { (pos_i, pos_j) } else { (pos_j, pos_i) };

    let mut acc = [[0.0f64; 4]; 4];
    for y in 0..1u32 << (n - 2) {
        let base = insert_zero_bit(insert_zero_bit(y, lo), hi);
        let mut v = [0.0f64; 4];
        for (z, slot) in v.iter_mut().enumerate() {
            let z = z as u32;
            let idx = base | (((z >> 1) & 1) << pos_i) | ((z & 1) << pos_j);
            *slot = psi.amps[idx as usize];
        }
        for r in 0..4 {
            for s in 0..4 {
                acc[r][s] += v[r] * v[s];
            }
        }
    }
    Ok(PairDensity { entries: acc })
}

fn reverse_index(x: u32, n: u32) -> u32 {
    if n == 0 {
        0
    } else {
        x.reverse_bits() >> (32 - n)
    }
}

/// Shifts the bits of `x` at positions `>= p` up by one, leaving bit `p`
/// clear.
fn insert_zero_bit(x: u32, p: u32) -> u32 {
    ((x >> p) << (p + 1)) | (x & ((1u32 << p) - 1))
}
