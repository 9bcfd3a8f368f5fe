//! Annular non-crossing permutations and partitions of types B and D.
//!
//! The crate works on the ground set `X = {±1, …, ±n}` and provides:
//!
//! * [`signed_perm`]: the hyperoctahedral group `B_n` and its subgroup `D_n`,
//!   absolute length, absolute order and covers, plus breadth-first
//!   word-length oracles.
//! * [`noncross`]: the genus test for a permutation against a reference
//!   permutation, and the equivalent crossing-pattern tests for the disc and
//!   the annulus.
//! * [`partitions`]: symmetric set partitions, the orbit maps `Ω` and `Ω̃`,
//!   intersection meets and the gluing/splitting maps between disc and
//!   annular partitions.
//! * [`poset`]: a small finite-poset engine (Hasse diagram, meets, lattice
//!   test, Möbius function, order-isomorphism check, DOT/JSON export).
//! * [`annular`]: builders for the annular posets and exhaustive verifiers.
//!
//! Points are compared in the canonical order `1 < 2 < … < n < -1 < … < -n`
//! everywhere (see [`point`]).

pub mod annular;
pub mod error;
pub mod noncross;
pub mod partitions;
pub mod point;
pub mod poset;
pub mod signed_perm;

pub use error::{Error, Result};
pub use noncross::{AnnulusConfig, CrossingKind, CrossingWitness, GroundPermutation};
pub use partitions::SignedPartition;
pub use poset::FinitePoset;
pub use signed_perm::{OrbitSet, SignedPermutation};
