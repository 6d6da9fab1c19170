//! Lie algebras given by structure constants, and their subspaces.

mod algebra;
pub mod examples;
mod structure;
mod subspace;

pub use algebra::{JacobiViolation, LieAlgebra};
pub use subspace::Subspace;

/// Coordinates of an element with respect to a fixed basis.
pub type Vector = Vec<crate::exactalg::Scalar>;
