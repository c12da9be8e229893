//! Special 2-fold coverings of circle bundles over closed orientable surfaces.
//!
//! The crate computes, over GF(2) and the group rings `Z[Z₂]` and `Z₂[Z₂]`:
//! Arf invariants of quadratic refinements, the action of `Sp(Z₂, 2g)` on
//! special coverings, explicit generators of the stabilizers of the two
//! reference forms, Fox-calculus derived matrices, and congruence of those
//! matrices.

pub mod congruence;
pub mod covering;
pub mod error;
pub mod fox;
pub mod gf2;
pub mod group_ring;
pub mod quadform;
pub mod stabilizers;
pub mod suites;
pub mod symplectic;

pub use error::{Error, Result};
pub use gf2::{BitMatrix, BitVector};
