//! Totally-colored graph homomorphisms and the structures built on them.
//!
//! - [`graph`]: simple graphs, bipartitions, isomorphism, disjoint union
//! - [`coloring`]: total colorings, W-type verification, search, transforms
//! - [`hom`]: homomorphism checks and search, colored homomorphisms
//! - [`sequence`]: the growth algorithm and its homomorphism chain
//! - [`group`]: every-zero graphic groups and group homomorphisms
//! - [`lattice`]: edge-join / vertex-coincide lattices and their homomorphisms
//! - [`topcode`]: Topcode-matrices, number strings and their decomposition
//! - [`oracle`], [`generate`]: brute-force cross-checks and test graphs

pub mod coloring;
pub mod error;
pub mod generate;
pub mod graph;
pub mod group;
pub mod hom;
pub mod lattice;
pub mod oracle;
pub mod report;
pub mod sequence;
pub mod topcode;

pub use coloring::{TotalColoring, WType};
pub use error::{Error, Result};
pub use graph::{Bipartition, Edge, Graph, Side};
pub use hom::{ColoredHom, VertexMapping};
pub use report::VerifyReport;
