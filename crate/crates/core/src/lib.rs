//! Quantum hypergraph states and their pairwise entanglement.
//!
//! A hypergraph over vertices `{1, ..., n}` maps to an n-qubit state whose
//! sign pattern is the parity function with one monomial per hyperedge
//! (the empty hyperedge is the constant 1). This crate builds those states
//! and measures the Wootters concurrence between any two qubits by two
//! independent routes:
//!
//! * [`pairdensity`] assembles the two-qubit reduced density matrix from
//!   Hamming weights of derived subhypergraphs, never touching the
//!   2^n-element statevector;
//! * [`statesim`] is the brute-force oracle: it materializes the full
//!   statevector and traces out all but the chosen pair.
//!
//! [`concurrence`] turns either density matrix into a concurrence via a
//! self-contained 4x4 eigensolver, and [`entgraph`] sweeps all pairs to
//! build the graph of entangled qubit pairs, including the exhaustive
//! small-scale enumerations used for verification.
//!
//! The crate is `no_std`-compatible (requires `alloc`); the default `std`
//! feature only switches float math from `libm` to the standard library.

#![cfg_attr(not(any(feature = "std", test)), no_std)]

extern crate alloc;

pub mod boolfn;
pub mod concurrence;
pub mod entgraph;
mod error;
pub mod hypergraph;
mod math;
pub mod pairdensity;
pub mod statesim;

pub use error::{Error, Result};
pub use hypergraph::{ComponentPartition, Hyperedge, Hypergraph};
