//! Exact invariants of n-qudit states through their complete-intersection
//! curve models.
//!
//! A state `η ∈ V₁⊗⋯⊗Vₙ` is read as a map `V_n^∨ → V₁⊗⋯⊗V_{n−1}`; its image
//! `V_η` is a space of multilinear forms cutting out `Y_η ⊂ P(V₁)×⋯×P(V_{n−1})`.
//! For 3×3×3 and 2×2×2×2 states `Y_η` is generically an elliptic curve and its
//! j-invariant is an exact SLOCC invariant.

pub mod arith;
pub mod error;
pub mod geometry;
pub mod invariants;
pub mod poly;
pub mod states;
pub mod zalgebra;

pub use error::{Error, Result};
