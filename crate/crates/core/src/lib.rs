//! Stack and queue layouts of graphs.
//!
//! * [`graph`]: graphs, family generators, products, subdivisions.
//! * [`layout`]: orders, layouts, validation, fixed-order optimizers.
//! * [`exact`]: exhaustive stack and queue numbers and closed-form bounds.
//! * [`families`]: constructive layouts for the classical families.
//! * [`counterexample`]: the `S_a □ H_n` construction and twist extraction.
//! * [`render`]: SVG arc diagrams.

pub mod counterexample;
pub mod error;
pub mod exact;
pub mod families;
pub mod graph;
pub mod layout;
pub mod render;

pub use error::{Error, Result};
pub use graph::{Edge, Graph, Label, Vertex};
pub use layout::{Kind, Layout, LinearOrder, ValidationReport, Witness, WitnessKind};
