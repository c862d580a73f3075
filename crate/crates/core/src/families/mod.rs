//! Constructive layouts with certified page counts for the classical graph
//! families. Every construction is deterministic; ties break by ascending
//! vertex id.

mod complete;
mod ktree;
mod outerplanar;
mod product;
mod subdivision;
mod trees;
mod xtree;

pub use complete::{complete_bipartite_queue_layout, complete_queue_layout, complete_stack_layout};
pub use ktree::k_tree_stack_layout;
pub use outerplanar::{one_stack_to_two_queue, outerplanar_stack_layout};
pub use product::{hex_strict_queue_layout, product_queue_layout};
pub use subdivision::{three_stack_subdivision, ThreeStackSubdivision};
pub use trees::{tree_queue_layout, tree_stack_layout, unicyclic_queue_layout};
pub use xtree::x_tree_layouts;
