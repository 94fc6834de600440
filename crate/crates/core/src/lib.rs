//! Hole detection, class membership, levellings and colouring for graphs with
//! girth and odd-hole restrictions.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod checks;
pub mod coloring;
pub mod exact;
pub mod format;
pub mod generate;
pub mod graph;
pub mod holes;
pub mod levelling;
pub mod vertex_set;

pub use coloring::{certified_class_color, dsatur, four_color_a3, CertifiedColoring, Coloring, FourColorOutcome};
pub use exact::{chromatic_number, is_k_colorable, ChromaResult};
pub use format::{parse_graph, serialize_graph, Format, ParseError};
pub use graph::{Bipartition, Graph, GraphError};
pub use holes::{class_membership, ClassSpec, Family, HoleKind, HoleWitness, MembershipVerdict};
pub use levelling::{Levelling, StabilityKind};
pub use vertex_set::VertexSet;
