//! Endomorphism monoids of the cycle graph `C_n`.
//!
//! Covers membership in the five monoids `Aut ⊆ sEnd ⊆ End, swEnd ⊆ wEnd`,
//! enumeration and sizes, regularity, Green's relations, and minimal
//! generating sets.

pub mod cycle;
pub mod dihedral;
pub mod enumerate;
pub mod error;
pub mod green;
pub mod rank;
pub mod verify;

pub use cycle::{is_member, normalize_image, Arc, CycleContext, KernelPartition, MonoidKind, Transformation};
pub use dihedral::DihedralElement;
pub use enumerate::{cardinality, closure, collect_monoid, enumerate_monoid, Monoid};
pub use error::{Error, Result};
