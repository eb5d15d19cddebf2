//! Bit-level substrate for the rest of the workspace: dense GF(2) vectors,
//! Pauli strings in the `(zmask, xmask)` form, generated groups with exact
//! enumeration, and small linear solvers.
//!
//! Everything here is phase-free. CSS work only ever multiplies operators of
//! one type, so signs are tracked by the callers that need them.

pub mod bits;
pub mod gf2;
pub mod group;
pub mod pauli;

pub use bits::BitVec;
pub use gf2::{left_kernel, rank, solve_combination, solve_linear, XorBasis};
pub use group::{in_group, span_weights_mod, GroupKind, PauliGroup, MAX_ENUM_GENERATORS};
pub use pauli::{commutes, weight, PauliString, PauliType};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PauliError {
    #[error("qubit count mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("group with {generators} generators is too large to enumerate (bound {bound})")]
    TooLarge { generators: usize, bound: usize },
    #[error("generators {i} and {j} anticommute")]
    NonCommuting { i: usize, j: usize },
    #[error("invalid Pauli character {ch:?} at position {pos}")]
    Parse { ch: char, pos: usize },
    #[error("modulus must be positive")]
    InvalidModulus,
}
