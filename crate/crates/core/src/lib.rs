//! Plane triangulations, 2-colored-cycle transversals and defective
//! acyclic colorings, with brute-force oracles at desk scale.
//!
//! The crate is `no_std` (alloc required). All graph values are immutable
//! after construction; rewrites return new values.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod coloring;
pub mod defect;
pub mod graph;
pub mod instances;
pub mod oracle;
pub mod transversal;

mod uf;

pub use coloring::Coloring;
pub use graph::{DecompositionTree, PlaneGraph, ValidationReport};
pub use transversal::TransversalCertificate;
