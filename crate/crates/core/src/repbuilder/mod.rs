//! Matrix representations of `g = p ⋉ m` on finite quotients of `U(m)`.

mod assemble;
mod decomposition;
mod quotient;
mod representation;

pub use assemble::{assemble_full, reductive_rep, split_p0, Assembly};
pub use decomposition::Decomposition;
pub use quotient::{build_quotient_rep, build_quotient_rep_default, QuotientModule};
pub use representation::{abelian_rep, HomomorphismFailure, Representation, RepresentationJson};
