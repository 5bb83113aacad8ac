//! Pair density matrices assembled from Hamming weights.
//!
//! For a qubit pair `(i, j)` of a hypergraph state, the 4x4 reduced density
//! matrix is determined by the weights of six derived hypergraphs on the
//! remaining n-2 vertices: the two ordered adjacents, the pair adjacent,
//! and their symmetric differences. Every entry is `1/4 - w / 2^(n-1)` for
//! one of those weights, so the whole matrix is computed in exact dyadic
//! arithmetic and only converted to floating point at the boundary. The
//! 2^n statevector is never touched.
//!
//! For hypergraphs of rank at most two a closed form replaces the weight
//! computation entirely: the matrix is one of a fixed family of Pauli
//! tensor combinations selected by the sign classes of the derived edge
//! sets ([`rank2_density`]).

use crate::boolfn::{hamming_weight, MAX_TABLE_VERTICES};
use crate::hypergraph::Hypergraph;
use crate::statesim::PairDensity;
use crate::{Error, Result};

/// A pair density with exact entries `num[r][s] / 2^n`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct DyadicDensity {
    log_denom: u32,
    num: [[i64; 4]; 4],
}

impl DyadicDensity {
    /// Exponent of the common power-of-two denominator.
    pub fn log_denom(&self) -> u32 {
        self.log_denom
    }

    /// Integer numerators over `2^log_denom`.
    pub fn numerators(&self) -> &[[i64; 4]; 4] {
        &self.num
    }

    /// Converts to floating point. Exact: every numerator fits well inside
    /// the f64 mantissa and the denominator is a power of two.
    pub fn to_pair_density(&self) -> PairDensity {
        let scale = 1.0 / (1u64 << self.log_denom) as f64;
        let mut entries = [[0.0f64; 4]; 4];
        for r in 0..4 {
            for s in 0..4 {
                entries[r][s] = self.num[r][s] as f64 * scale;
            }
        }
        PairDensity::from_rows(entries)
    }
}

/// Computes the pair density in exact dyadic form from the six subhypergraph
/// weights.
pub fn pair_density_dyadic(g: &Hypergraph, i: u32, j: u32) -> Result<DyadicDensity> {
    let n = g.n();
    if n < 2 {
        return Err(Error::TooFewQubits { n, min: 2 });
    }
    if n > MAX_TABLE_VERTICES {
        return Err(Error::TooManyVertices { n, max: MAX_TABLE_VERTICES });
    }

    // h1 carries the edges through i only when read as (j, i); the three
    // weight sources and their pairwise/triple differences fill the six
    // independent off-diagonal entries.
    let h1 = g.ordered_adjacent(j, i)?;
    let h2 = g.ordered_adjacent(i, j)?;
    let h3 = g.pair_adjacent(i, j)?;

    let w01 = hamming_weight(&h1)?;
    let w02 = hamming_weight(&h2)?;
    let w12 = hamming_weight(&h2.sym_diff(&h1)?)?;
    let w13 = hamming_weight(&h3.sym_diff(&h2)?)?;
    let w23 = hamming_weight(&h3.sym_diff(&h1)?)?;
    let w03 = hamming_weight(&h3.sym_diff(&h2)?.sym_diff(&h1)?)?;

    let diag = 1i64 << (n - 2);
    let off = |w: u64| diag - 2 * w as i64;

    let mut num = [[0i64; 4]; 4];
    for (r, row) in num.iter_mut().enumerate() {
        row[r] = diag;
    }
    let pairs = [(0, 1, w01), (0, 2, w02), (0, 3, w03), (1, 2, w12), (1, 3, w13), (2, 3, w23)];
    for (r, s, w) in pairs {
        num[r][s] = off(w);
        num[s][r] = num[r][s];
    }
    Ok(DyadicDensity { log_denom: n, num })
}

/// Floating-point view of [`pair_density_dyadic`].
pub fn pair_density_comb(g: &Hypergraph, i: u32, j: u32) -> Result<PairDensity> {
    Ok(pair_density_dyadic(g, i, j)?.to_pair_density())
}

/// Sign classes of the derived edge sets, in table order: pair adjacent,
/// ordered `(i, j)`, ordered `(j, i)`, and the symmetric difference of the
/// two ordered ones.
pub(crate) fn rank2_signs(g: &Hypergraph, i: u32, j: u32) -> Result<(i8, [i8; 3])> {
    if g.rank() > 2 {
        return Err(Error::RankTooHigh { rank: g.rank(), max: 2 });
    }
    let pair_sign = g.pair_adjacent(i, j)?.edge_set_sign();
    let gij = g.ordered_adjacent(i, j)?;
    let gji = g.ordered_adjacent(j, i)?;
    let s = [gij.edge_set_sign(), gji.edge_set_sign(), gij.sym_diff(&gji)?.edge_set_sign()];
    Ok((pair_sign, s))
}

/// True when the sign triple is one of the eleven realizable rows. The
/// third sign is forced once either of the first two is nonzero.
pub(crate) fn signs_covered(s: [i8; 3]) -> bool {
    match (s[0] != 0, s[1] != 0) {
        (false, false) => true,
        (true, true) => s[2] == s[0] * s[1],
        _ => s[2] == 0,
    }
}

const ID2: [[f64; 2]; 2] = [[1.0, 0.0], [0.0, 1.0]];
const SIGMA_X: [[f64; 2]; 2] = [[0.0, 1.0], [1.0, 0.0]];
const SIGMA_Z: [[f64; 2]; 2] = [[1.0, 0.0], [0.0, -1.0]];

fn kron2(a: &[[f64; 2]; 2], b: &[[f64; 2]; 2]) -> [[f64; 4]; 4] {
    let mut out = [[0.0f64; 4]; 4];
    for r in 0..4 {
        for s in 0..4 {
            out[r][s] = a[r >> 1][s >> 1] * b[r & 1][s & 1];
        }
    }
    out
}

fn matmul4(a: &[[f64; 4]; 4], b: &[[f64; 4]; 4]) -> [[f64; 4]; 4] {
    let mut out = [[0.0f64; 4]; 4];
    for r in 0..4 {
        for s in 0..4 {
            out[r][s] = (0..4).map(|k| a[r][k] * b[k][s]).sum();
        }
    }
    out
}

/// Closed-form pair density for hypergraphs of rank at most two.
///
/// When the pair-adjacent sign is +1 the building blocks are `sx (x) I` and
/// `I (x) sx`; when it is -1 each picks up a `sz` on the other side. The
/// fourth term is always the matrix product of the first two, weighted by
/// the sign of the ordered-adjacent symmetric difference.
pub fn rank2_density(g: &Hypergraph, i: u32, j: u32) -> Result<PairDensity> {
    let (pair_sign, s) = rank2_signs(g, i, j)?;
    rank2_template(pair_sign, s)
}

pub(crate) fn rank2_template(pair_sign: i8, s: [i8; 3]) -> Result<PairDensity> {
    if pair_sign == 0 || !signs_covered(s) {
        return Err(Error::TableMiss { signs: [pair_sign, s[0], s[1], s[2]] });
    }
    let with_z = pair_sign == -1;
    let t1 = kron2(&SIGMA_X, if with_z { &SIGMA_Z } else { &ID2 });
    let t2 = kron2(if with_z { &SIGMA_Z } else { &ID2 }, &SIGMA_X);
    let t3 = matmul4(&t1, &t2);

    let mut entries = [[0.0f64; 4]; 4];
    for r in 0..4 {
        for c in 0..4 {
            let ident = if r == c { 1.0 } else { 0.0 };
            entries[r][c] = 0.25
                * (ident
                    + s[0] as f64 * t1[r][c]
                    + s[1] as f64 * t2[r][c]
                    + s[2] as f64 * t3[r][c]);
        }
    }
    Ok(PairDensity::from_rows(entries))
}
