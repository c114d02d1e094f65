//! Exact GF(2) coset algebra, dense quantum state/operator machinery, and
//! game-value verification for monogamy games built on subspace coset states
//! and BB'84 states.
//!
//! The crate is organised around the objects the verification suites need:
//!
//! * [`f2`] — bitstring vectors, matrices, subspaces and cosets over F₂,
//!   with canonical (RREF) representations so equality is structural.
//! * [`qstate`] — dense complex state vectors and operators: coset states
//!   |A_{s,s′}⟩, BB'84 states |x⟩_θ, Pauli strings, the basis-change
//!   permutation unitary U_B and the coset↔BB'84 translation.
//! * [`permcover`] — the family of C(n, n/2) mutually orthogonal
//!   permutations of the balanced strings, built from cycle covers of the
//!   overlap graphs.
//! * [`game`] — game operators Π^A and Π^θ, strategy evaluation for the
//!   coset- and basis-monogamy games, the lemma verifiers, the
//!   coset→basis strategy reduction, and see-saw lower bounds.
//! * [`bounds`] — closed-form bound tables (binomial sum, √e·cos(π/8)ⁿ,
//!   and the all-string reference bound).
//!
//! Conventions used throughout: bit 1 of a string is the leftmost bit and
//! the first tensor factor, so a string x maps to the computational basis
//! index Σ xᵢ·2^{n−i}. All randomised routines take explicit seeds and are
//! reproducible.

pub mod bounds;
pub mod f2;
pub mod game;
pub mod permcover;
pub mod qstate;

mod error;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
