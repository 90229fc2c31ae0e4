//! Degree, distance-frequency and neighboring arrays of undirected networks,
//! the generalized (non-normalized) Lorenz majorization order between them,
//! and classification of network families under degree- and distance-based
//! small-world notions.
//!
//! Data-parallel loops (all-pairs traversals, exhaustive enumeration,
//! family sweeps) run on rayon when the default `parallel` feature is on and
//! sequentially otherwise; results are identical either way.
//!
//! ```
//! use netorder::families::catalog_figure;
//! use netorder::sequences::{degree_array, gamma_array};
//! use netorder::{majorize_compare, make_family, FamilySpec, Relation};
//!
//! let star = make_family(&FamilySpec::Star, 4)?;
//! let cycle = catalog_figure("fig19_b")?.graph;
//! let g = majorize_compare(gamma_array(&star).values(), gamma_array(&cycle).values())?;
//! assert_eq!(g.relation, Relation::Less);
//! let d = majorize_compare(degree_array(&star).values(), degree_array(&cycle).values())?;
//! assert_eq!(d.relation, Relation::Incomparable);
//! # Ok::<(), netorder::Error>(())
//! ```

pub mod error;
pub mod families;
pub mod graph;
pub mod lorenz;
mod par;
pub mod report;
pub mod sequences;
pub mod smallworld;
pub mod stats;
pub mod verify;

pub use error::{Error, Result};
pub use families::{make_family, FamilySpec};
pub use graph::Graph;
pub use lorenz::{majorize_compare, MajorizationVerdict, Relation};
pub use sequences::{AlphaArray, DeltaArray, GammaArray};
