//! Explicit faithful matrix representations of finite-dimensional Lie
//! algebras over the rationals.
//!
//! The construction takes a decomposition `g = p ⋉ m` with `m` a nilpotent
//! ideal and a nilpotent ideal `h ⊆ m`, and realizes `g` as matrices acting
//! on a finite quotient of the universal enveloping algebra `U(m)`. The
//! quotient keeps the standard monomials whose weights for the two
//! filtrations `(m, m)` and `(m, h)` stay below the class thresholds.

pub mod bounds;
pub mod error;
pub mod exactalg;
pub mod filtration;
pub mod io;
pub mod liealg;
pub mod pbw;
pub mod repbuilder;

pub use error::{Error, Result};
pub use exactalg::{Matrix, Scalar};
pub use liealg::{LieAlgebra, Subspace, Vector};
