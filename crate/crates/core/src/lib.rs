//! Graph burnings, their configuration complexes, and burning homology.
//!
//! A burning of a graph ignites one source per step while fire spreads one
//! hop per step; [`burning`] validates and enumerates them. The source sets
//! of all burnings generate a simplicial complex ([`complex`]) whose
//! homology is computed exactly in [`homology`].

pub mod burning;
pub mod complex;
pub mod corpus;
pub mod format;
pub mod graph;
pub mod homology;
pub mod verify;

pub use burning::{burning_number, enumerate_burnings, validate_burning, Burning, SourceSequence};
pub use complex::{configuration_space, SimplicialComplex};
pub use graph::{Graph, NamedGraph, VertexSet};
pub use homology::{homology, Coefficients, HomologyGroup};
