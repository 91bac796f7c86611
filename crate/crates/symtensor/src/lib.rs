//! Symmetric tensor powers of permutations.
//!
//! A permutation `σ` of `[n]` induces a permutation `σ^⊙k` of the weakly
//! increasing k-tuples over `[n]` (compositions). This crate builds `σ^⊙k`
//! by independent routes — the diagonal action on compositions and the
//! normalized orbit-sum entry formula for matrices — and counts the cycle
//! structure of the result (fixed points, s-cycles, generating functions),
//! with every closed form checked against a brute-force oracle.
//!
//! The `parallel` feature (on by default) runs the data-parallel kernels on
//! rayon; without it everything falls back to sequential loops.

pub mod combinatorics;
pub mod compositions;
pub mod counting;
pub mod error;
pub mod oracle;
pub mod perm;
pub mod series;
pub mod spectral;
pub mod tensor;
pub mod verify;

pub use error::{Error, Result};

/// Exact non-negative count; all counting results use arbitrary precision.
pub type Count = num_bigint::BigUint;

/// Default limit on the number of compositions an exhaustive computation
/// (oracle census, CLI `power`) is allowed to materialize.
pub const DEFAULT_COMPOSITION_CAP: u64 = 1_000_000;
