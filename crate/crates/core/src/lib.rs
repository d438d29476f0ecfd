//! Normal loops on the boundary of a tetrahedron and the topology of their
//! edge-compressing disk complexes.
//!
//! The crate is organized as a pipeline:
//!
//! * [`tet`] — the fixed labeled tetrahedron, its symmetry group, and the
//!   twelve normal arc types.
//! * [`curves`] — enumeration and classification of connected embedded
//!   normal loops (triangles, quadrilaterals, and spirals of length `4k`).
//! * [`chords`] — the flat-disk chord model of a spiral boundary: two
//!   families of parallel chords, their offset, and pairwise compatibility.
//! * [`complex`] — the compatibility graph and its flag (clique) complex.
//! * [`topology`] — strong collapse, cross-polytope recognition, integral
//!   simplicial homology, and the index decision procedure.
//! * [`json`] — versioned serializable records for every artifact.
//! * [`render`] — deterministic SVG export of chord diagrams.

pub mod chords;
pub mod complex;
pub mod curves;
pub mod json;
pub mod render;
pub mod tet;
pub mod topology;

mod error;
mod snf;
pub use error::{Error, Result};
