//! Simplicial complexes described by their missing faces: Laplacian spectra,
//! real cohomology, domination parameters and matroid general position.

pub mod complex;
pub mod domination;
pub mod error;
pub mod formats;
pub mod homology;
pub mod matroid;
pub mod named;
pub mod numerics;
pub mod report;
pub mod vertex_set;

pub use complex::{Complex, MissingFaceStats, Partition};
pub use error::{Error, Result};
pub use report::{CheckReport, Outcome};
pub use vertex_set::VertexSet;
