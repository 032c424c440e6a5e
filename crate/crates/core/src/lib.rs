//! Exact computational algebra for Takasaki quandles.
//!
//! A Takasaki quandle is a finite abelian group `H` equipped with the binary
//! operation `a ▷ b = 2b − a`. This crate constructs such quandles (and
//! trivial quandles and direct products), enumerates the permutation group
//! generated by their right translations, certifies its generalized dihedral
//! presentation, builds the character table of that group, and decomposes the
//! quandle ring `K[T]` (`K = ℝ` or `ℂ`) into simple right ideals — verifying
//! the decomposition numerically with explicit isotypic projectors.
//!
//! Everything is computed by exact enumeration at desk scale (group orders up
//! to a few hundred); [`sweep`] batch-verifies the whole theory over every
//! abelian group presentation up to a given order.

pub mod abelian;
pub mod chartab;
pub mod decomp;
pub mod error;
pub mod gdh;
pub mod matrix;
pub mod perm;
pub mod quandle;
pub mod sweep;

pub use abelian::{Embedding, GroupElement, GroupSpec};
pub use chartab::{CharacterTable, Irrep, IrrepKind};
pub use decomp::{CaseTag, Decomposition, DecompositionReport, Field, OrbitAction};
pub use error::Error;
pub use gdh::{ClassProfile, DihElement};
pub use perm::{PermGroup, Permutation, PresentationCertificate};
pub use quandle::{AxiomReport, Quandle};

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
