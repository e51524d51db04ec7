//! Integer multiplicative inverses modulo `2^w`.
//!
//! Every odd integer `a` has a unique `x` with `a*x ≡ 1 (mod 2^w)`; even
//! integers have none. This crate computes that inverse several ways and
//! ships the machinery around it:
//!
//! * [`modring`] — wrapping arithmetic modulo `2^w` for any width from 1 to
//!   4096 bits, native machine words where they exist and `u64` limbs
//!   elsewhere.
//! * [`seeds`] — closed-form starting values correct to `k ∈ {1..5}` low
//!   bits.
//! * [`inverse`] — the residual-squaring ("improved") iteration, Newton's
//!   method, the original Dumas form, and an extended-Euclidean oracle,
//!   with optional per-iteration traces.
//! * [`native`] — allocation-free versions on `u8`..`u128` for benchmarks.
//! * [`seed_search`] — brute-force rediscovery of two-operation seed
//!   formulas.
//! * [`latency`] — a dataflow cost model that counts the cycles each
//!   algorithm needs on a pipelined superscalar core.
//! * [`montgomery`], [`exact_div`] — the classic applications: REDC
//!   precomputation/reduction and exact division by an odd constant.

pub mod error;
pub mod exact_div;
pub mod inverse;
pub mod latency;
pub mod modring;
pub mod montgomery;
pub mod native;
pub mod seed_search;
pub mod seeds;

pub use error::{Error, Result};
pub use inverse::{
    invert, invert_dumas_original, invert_dumas_original_traced, invert_euclid, invert_improved,
    invert_improved_traced, invert_newton, invert_newton_traced, residual, AlgoKind,
    IterationTrace, TraceStep,
};
pub use modring::{OddResidue, Residue, Width, Word};
pub use seeds::{seed_x0, SeedKind};
