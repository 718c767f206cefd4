//! Exact-arithmetic computation with finite-dimensional bilinear pairs.
//!
//! A *bilinear pair* is a vector space `V` together with an arbitrary
//! bilinear map `f: V × V → V`, described by structure constants
//! `c[i][j][k]` (`e_i · e_j = Σ_k c[i][j][k] e_k`). No algebra identities
//! are assumed. The crate computes radicals, second cohomology spaces,
//! radical (annihilator) extensions, equivalence witnesses and orbit-based
//! classifications over prime fields F_p and over ℚ, and ships a
//! machine-readable catalog of low-dimensional families with a
//! verification harness.

pub mod catalog;
pub mod classify;
pub mod cohom;
pub mod equiv;
pub mod exactlin;
pub mod pair;

pub use exactlin::field::{FieldDescriptor, FieldElement};
pub use exactlin::matrix::Matrix;
pub use exactlin::subspace::Subspace;
pub use pair::BilinearPair;
