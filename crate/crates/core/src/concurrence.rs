//! Wootters concurrence of a two-qubit real density matrix.
//!
//! For a real density matrix the spin flip is conjugation by the real
//! signed antidiagonal `sy (x) sy`, and the four concurrence eigenvalues
//! are the squared magnitudes of the eigenvalues of `rho * (sy (x) sy)`.
//! The eigensolver is self-contained: the characteristic polynomial comes
//! from the Faddeev-LeVerrier trace recursion and its roots from a
//! simultaneous (Durand-Kerner) iteration, so the fixed 4x4 problem never
//! pulls in a general eigenvalue package.

use crate::hypergraph::{vertex_mask, Hyperedge, Hypergraph};
use crate::math;
use crate::pairdensity::{pair_density_comb, rank2_density, rank2_signs, rank2_template};
use crate::statesim::{hypergraph_state, reduce_pair, PairDensity};
use crate::{Error, Result};

/// Pairs with concurrence above this are considered entangled. The exact
/// values arising here are dyadic or quadratic irrationals far from zero,
/// so the cut sits orders of magnitude above accumulated roundoff.
pub const ENTANGLEMENT_THRESHOLD: f64 = 1e-9;

const ROOT_TOLERANCE: f64 = 1e-13;
const MAX_ROOT_ITERATIONS: u32 = 200;

/// The product `rho * (sy (x) sy)`, a real 4x4 matrix whose squared
/// eigenvalue magnitudes are the concurrence eigenvalues.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct SpinFlipProduct {
    matrix: [[f64; 4]; 4],
}

impl SpinFlipProduct {
    pub fn matrix(&self) -> &[[f64; 4]; 4] {
        &self.matrix
    }
}

/// Multiplies a pair density by `sy (x) sy`. The two imaginary units cancel,
/// leaving the real signed antidiagonal with -1 at the corners:
/// column `s` of the product is `sign(s) * rho[., 3-s]` with signs
/// `(-1, 1, 1, -1)`.
pub fn spin_flip_product(rho: &PairDensity) -> SpinFlipProduct {
    const COLUMN_SIGN: [f64; 4] = [-1.0, 1.0, 1.0, -1.0];
    let mut m = [[0.0f64; 4]; 4];
    for r in 0..4 {
        for s in 0..4 {
            m[r][s] = COLUMN_SIGN[s] * rho.entry(r, 3 - s);
        }
    }
    SpinFlipProduct { matrix: m }
}

/// Monic characteristic polynomial of a 4x4 matrix via the
/// Faddeev-LeVerrier recursion; returns `[c0, c1, c2, c3]` for
/// `x^4 + c3 x^3 + c2 x^2 + c1 x + c0`.
pub fn characteristic_coefficients(m: &[[f64; 4]; 4]) -> [f64; 4] {
    let mut b = *m;
    let c3 = -trace(&b);
    b = matmul(m, &add_diag(&b, c3));
    let c2 = -trace(&b) / 2.0;
    b = matmul(m, &add_diag(&b, c2));
    let c1 = -trace(&b) / 3.0;
    b = matmul(m, &add_diag(&b, c1));
    let c0 = -trace(&b) / 4.0;
    [c0, c1, c2, c3]
}

/// Eigenvalue magnitudes of a spin-flip product, sorted descending.
///
/// The quartic roots are found by simultaneous iteration to an update
/// tolerance of 1e-13 within 200 sweeps; multiple roots (the generic case
/// here, where zero is a double root) converge linearly but comfortably
/// within the cap.
pub fn eigenvalues_4(m: &[[f64; 4]; 4]) -> Result<[f64; 4]> {
    let coeffs = characteristic_coefficients(m);
    let roots = durand_kerner(&coeffs)?;
    let mut mags = [0.0f64; 4];
    for (slot, z) in mags.iter_mut().zip(roots) {
        *slot = z.norm();
    }
    mags.sort_unstable_by(|a, b| b.total_cmp(a));
    Ok(mags)
}

/// A concurrence value together with the four square-root eigenvalues
/// (eigenvalue magnitudes of the spin-flip product) in decreasing order.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct ConcurrenceResult {
    pub value: f64,
    pub sqrt_eigs: [f64; 4],
}

/// Concurrence of a two-qubit real density matrix:
/// `max(0, m1 - m2 - m3 - m4)` over the sorted eigenvalue magnitudes of
/// its spin-flip product.
pub fn concurrence_of(rho: &PairDensity) -> Result<ConcurrenceResult> {
    let mags = eigenvalues_4(spin_flip_product(rho).matrix())?;
    let value = (mags[0] - mags[1] - mags[2] - mags[3]).max(0.0);
    Ok(ConcurrenceResult { value, sqrt_eigs: mags })
}

/// How to obtain the pair density behind a concurrence.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Method {
    /// Hamming weights of derived subhypergraphs; never builds the state.
    Combinatorial,
    /// Brute-force statevector reduction.
    Oracle,
    /// Closed forms: the rank <= 2 table or the single-full-edge family.
    ClosedForm,
}

/// Concurrence between qubits `i` and `j` of the hypergraph state, by the
/// requested route.
pub fn concurrence_pair(
    g: &Hypergraph,
    i: u32,
    j: u32,
    method: Method,
) -> Result<ConcurrenceResult> {
    match method {
        Method::Combinatorial => concurrence_of(&pair_density_comb(g, i, j)?),
        Method::Oracle => concurrence_of(&reduce_pair(&hypergraph_state(g)?, i, j)?),
        Method::ClosedForm => closed_form(g, i, j),
    }
}

fn closed_form(g: &Hypergraph, i: u32, j: u32) -> Result<ConcurrenceResult> {
    // Validate the pair the same way the other routes do.
    let n = g.n();
    if n < 2 {
        return Err(Error::TooFewQubits { n, min: 2 });
    }
    for v in [i, j] {
        if v < 1 || v > n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
    }
    if i == j {
        return Err(Error::SameVertex { vertex: i });
    }

    if g.edges() == [Hyperedge::from_bits(vertex_mask(n))] {
        let d = 1.0 / (1u64 << (n - 1)) as f64;
        let s = 1.0 / math::sqrt((1u64 << n) as f64);
        return Ok(ConcurrenceResult {
            value: full_hyperedge_concurrence(n),
            sqrt_eigs: [d + s, math::abs(d - s), 0.0, 0.0],
        });
    }
    // (The full-edge branch precedes the rank table: at n = 2 the single
    // full edge is also rank 2 and both forms give 1.)
    if g.rank() <= 2 {
        let value = rank2_concurrence(g, i, j)? as f64;
        let sqrt_eigs = eigenvalues_4(spin_flip_product(&rank2_density(g, i, j)?).matrix())?;
        return Ok(ConcurrenceResult { value, sqrt_eigs });
    }
    Err(Error::ClosedFormUnavailable)
}

/// Pairwise concurrence of the state whose hypergraph is the single
/// hyperedge over all `n >= 2` vertices; the same for every pair.
///
/// The spin-flip spectrum of any pair is `{d + s, s - d, 0, 0}` with
/// `d = 1/2^(n-1)` and `s = 1/2^(n/2)`, and `s >= d` for `n >= 2`, so the
/// concurrence is `(d + s) - (s - d) = 2/2^(n-1)`. (Taking the signed
/// `d - s` instead of its magnitude would give `2/2^(n/2)`, a value that
/// already violates the CKW monogamy bound at n = 3.)
pub fn full_hyperedge_concurrence(n: u32) -> f64 {
    2.0 / (1u64 << (n - 1)) as f64
}

/// Concurrence of a rank <= 2 hypergraph state by table lookup: exactly 1
/// when the pair shares an edge and neither qubit touches any other edge
/// (both ordered sign classes nonzero), else exactly 0.
pub fn rank2_concurrence(g: &Hypergraph, i: u32, j: u32) -> Result<u8> {
    let (pair_sign, s) = rank2_signs(g, i, j)?;
    // Reject combinations outside the printed rows rather than guessing.
    rank2_template(pair_sign, s)?;
    Ok(u8::from(pair_sign == -1 && s[0] != 0 && s[1] != 0))
}

fn trace(m: &[[f64; 4]; 4]) -> f64 {
    m[0][0] + m[1][1] + m[2][2] + m[3][3]
}

fn add_diag(m: &[[f64; 4]; 4], c: f64) -> [[f64; 4]; 4] {
    let mut out = *m;
    for (k, row) in out.iter_mut().enumerate() {
        row[k] += c;
    }
    out
}

fn matmul(a: &[[f64; 4]; 4], b: &[[f64; 4]; 4]) -> [[f64; 4]; 4] {
    let mut out = [[0.0f64; 4]; 4];
    for r in 0..4 {
        for s in 0..4 {
            out[r][s] = (0..4).map(|k| a[r][k] * b[k][s]).sum();
        }
    }
    out
}

#[derive(Clone, Copy, PartialEq, Debug)]
struct Complex {
    re: f64,
    im: f64,
}

impl Complex {
    const ZERO: Complex = Complex { re: 0.0, im: 0.0 };

    fn norm(self) -> f64 {
        math::sqrt(self.re * self.re + self.im * self.im)
    }

    fn mul(self, other: Complex) -> Complex {
        Complex {
            re: self.re * other.re - self.im * other.im,
            im: self.re * other.im + self.im * other.re,
        }
    }

    fn sub(self, other: Complex) -> Complex {
        Complex { re: self.re - other.re, im: self.im - other.im }
    }

    fn div(self, other: Complex) -> Complex {
        let d = other.re * other.re + other.im * other.im;
        Complex {
            re: (self.re * other.re + self.im * other.im) / d,
            im: (self.im * other.re - self.re * other.im) / d,
        }
    }

    fn scale(self, k: f64) -> Complex {
        Complex { re: self.re * k, im: self.im * k }
    }
}

/// Evaluates a polynomial with real coefficients (low order first) at a
/// complex point by Horner's rule.
fn poly_at(coeffs: &[f64], z: Complex) -> Complex {
    let mut acc = Complex::ZERO;
    for &c in coeffs.iter().rev() {
        acc = acc.mul(z);
        acc.re += c;
    }
    acc
}

/// Scale of the rounding noise in a Horner evaluation at magnitude `zabs`:
/// the sum of the term magnitudes. A computed value at or below a small
/// multiple of `EPSILON` times this is indistinguishable from zero.
fn noise_scale(coeffs: &[f64], zabs: f64) -> f64 {
    let mut acc = 0.0f64;
    for &c in coeffs.iter().rev() {
        acc = acc * zabs + math::abs(c);
    }
    acc
}

fn derivative(coeffs: &[f64]) -> alloc::vec::Vec<f64> {
    coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, &c)| k as f64 * c)
        .collect()
}

const SETTLE_FACTOR: f64 = 16.0 * f64::EPSILON;
const CLUSTER_FACTOR: f64 = 64.0 * f64::EPSILON;

/// Simultaneous root iteration for the monic quartic with coefficients
/// `[c0, c1, c2, c3]`. Starts from scaled powers of a non-real seed and
/// applies Weierstrass corrections with immediate updates.
///
/// A root whose residual sits at the Horner rounding floor is frozen: at a
/// multiple root, steps stall at the floor instead of shrinking, so the
/// absolute step tolerance alone would never be met. Frozen clusters are
/// then tightened by [`refine_clusters`], which recovers the accuracy a
/// multiple root loses to cancellation.
fn durand_kerner(c: &[f64; 4]) -> Result<[Complex; 4]> {
    let monic = [c[0], c[1], c[2], c[3], 1.0];
    let bound = 1.0
        + math::abs(c[0])
            .max(math::abs(c[1]))
            .max(math::abs(c[2]))
            .max(math::abs(c[3]));
    let seed = Complex { re: 0.4, im: 0.9 };
    let mut z = [Complex::ZERO; 4];
    let mut p = seed;
    for slot in &mut z {
        *slot = p.scale(bound);
        p = p.mul(seed);
    }

    for _ in 0..MAX_ROOT_ITERATIONS {
        let mut worst = 0.0f64;
        for k in 0..4 {
            let value = poly_at(&monic, z[k]);
            if value.norm() <= SETTLE_FACTOR * noise_scale(&monic, z[k].norm()) {
                continue;
            }
            let mut denom = Complex { re: 1.0, im: 0.0 };
            for m in 0..4 {
                if m != k {
                    denom = denom.mul(z[k].sub(z[m]));
                }
            }
            if denom.norm() == 0.0 {
                // Collided approximations; nudge apart and retry next sweep.
                z[k].re += 1e-12 * (k as f64 + 1.0);
                worst = worst.max(1.0);
                continue;
            }
            let step = value.div(denom);
            z[k] = z[k].sub(step);
            worst = worst.max(step.norm());
        }
        if worst <= ROOT_TOLERANCE {
            refine_clusters(&mut z, &monic);
            return Ok(z);
        }
    }
    Err(Error::NoConvergence { iterations: MAX_ROOT_ITERATIONS })
}

/// Collapses groups of approximations that are indistinguishable from one
/// multiple root and re-derives the root from the appropriate derivative:
/// an m-fold root of p is a simple root of the (m-1)-th derivative, where
/// Newton recovers full precision. A proposed merge is kept only if every
/// lower derivative vanishes there to within its own rounding floor, so
/// genuinely distinct close roots are left alone.
fn refine_clusters(z: &mut [Complex; 4], monic: &[f64; 5]) {
    let scale = z.iter().fold(1.0f64, |m, w| m.max(w.norm()));
    let radius = 1e-3 * scale;

    // Greedy partition into clusters by proximity.
    let mut cluster_of = [usize::MAX; 4];
    let mut next = 0;
    for k in 0..4 {
        if cluster_of[k] != usize::MAX {
            continue;
        }
        cluster_of[k] = next;
        for m in (k + 1)..4 {
            if cluster_of[m] == usize::MAX && z[m].sub(z[k]).norm() <= radius {
                cluster_of[m] = next;
            }
        }
        next += 1;
    }

    let mut derivs: alloc::vec::Vec<alloc::vec::Vec<f64>> = alloc::vec![monic.to_vec()];
    for _ in 0..3 {
        derivs.push(derivative(derivs.last().unwrap()));
    }

    for cluster in 0..next {
        let members: alloc::vec::Vec<usize> =
            (0..4).filter(|&k| cluster_of[k] == cluster).collect();
        let m = members.len();
        if m < 2 {
            continue;
        }
        let mut center = Complex::ZERO;
        for &k in &members {
            center.re += z[k].re / m as f64;
            center.im += z[k].im / m as f64;
        }
        // Newton on the (m-1)-th derivative, starting from the centroid.
        let target = &derivs[m - 1];
        let slope = derivative(target);
        for _ in 0..40 {
            let value = poly_at(target, center);
            let d = poly_at(&slope, center);
            if d.norm() == 0.0 {
                break;
            }
            let step = value.div(d);
            center = center.sub(step);
            if step.norm() <= f64::EPSILON * (1.0 + center.norm()) {
                break;
            }
        }
        // Accept only when p and every derivative below order m vanish at
        // the refined point to within evaluation noise.
        let genuine = derivs[..m].iter().all(|poly| {
            poly_at(poly, center).norm() <= CLUSTER_FACTOR * noise_scale(poly, center.norm())
        });
        if genuine {
            for &k in &members {
                z[k] = center;
            }
        }
    }
}
