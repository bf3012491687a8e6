//! Exact computation of the Laplacian parameter sigma, the number of
//! Laplacian eigenvalues at least the average degree, together with the
//! graph-class recognizers and law audits used to check statements about it
//! over whole graph corpora.
//!
//! * [`graph`] and [`families`]: immutable graphs, structural operations and
//!   named families.
//! * [`spectral`]: Laplacians, floating spectra, exact shifted inertia, sigma,
//!   and the join/union spectrum calculus.
//! * [`classes`]: forests, split, pseudo-split, cographs, extended
//!   P4-laden graphs, spiders and the conjectured sigma-one shapes.
//! * [`laws`]: one audit per law, each with exact evidence.
//! * [`graph6`], [`enumerate`], [`harness`]: corpus ingestion, exhaustive
//!   generation and deterministic parallel reports.

pub mod bitset;
pub mod classes;
pub mod eigen;
pub mod enumerate;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod harness;
pub mod inertia;
pub mod laws;
pub mod spectral;

pub use graph::{Graph, GraphError};
pub use inertia::Inertia;
pub use laws::{AuditRecord, Law, Verdict};
pub use spectral::{Rational, Spectrum};
