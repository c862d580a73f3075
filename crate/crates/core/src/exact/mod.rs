//! Exhaustive stack and queue numbers for small graphs, reductions, and
//! closed-form bounds.
//!
//! Both solvers work per connected component and concatenate the component
//! orders, since edges of different components are separated and never
//! conflict. Vertex limits therefore apply per component.

mod bounds;
mod queue;
mod stack;

pub use bounds::{bound_formulas, complete_stack_number};
pub use queue::{queue_number_exact, queue_number_exact_with};
pub use stack::{sn_via_components, stack_number_exact, stack_number_exact_with, vc_stack_upper};

use crate::graph::{Edge, Graph, Vertex, DEFAULT_VERTEX_COVER_LIMIT};
use crate::layout::{Kind, Layout, LinearOrder, DEFAULT_COLORING_EDGE_LIMIT};
use std::collections::BTreeMap;

pub const DEFAULT_QUEUE_VERTEX_LIMIT: usize = 9;
pub const DEFAULT_STACK_VERTEX_LIMIT: usize = 8;

/// All exact-search limits in one place.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub vertex_cover: usize,
    pub coloring_edges: usize,
    pub queue_vertices: usize,
    pub stack_vertices: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            vertex_cover: DEFAULT_VERTEX_COVER_LIMIT,
            coloring_edges: DEFAULT_COLORING_EDGE_LIMIT,
            queue_vertices: DEFAULT_QUEUE_VERTEX_LIMIT,
            stack_vertices: DEFAULT_STACK_VERTEX_LIMIT,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExactOptions {
    /// Skip orders that are the reversal (and, for stacks, a rotation) of
    /// another enumerated order.
    pub symmetry: bool,
    /// Prune partial orders and orders whose lower bound meets the incumbent.
    pub pruning: bool,
    /// Largest component the search accepts.
    pub vertex_limit: usize,
    /// Worker threads; 1 runs on the calling thread. The result does not
    /// depend on this value.
    pub threads: usize,
}

impl ExactOptions {
    pub fn queue() -> Self {
        ExactOptions {
            symmetry: true,
            pruning: true,
            vertex_limit: DEFAULT_QUEUE_VERTEX_LIMIT,
            threads: 1,
        }
    }

    pub fn stack() -> Self {
        ExactOptions {
            vertex_limit: DEFAULT_STACK_VERTEX_LIMIT,
            ..Self::queue()
        }
    }
}

/// Best result of one search branch. Branches are combined by the smallest
/// `(k, branch)` pair so the answer is independent of scheduling.
#[derive(Clone, Debug)]
struct BranchBest {
    k: usize,
    order: Vec<Vertex>,
    pages: Vec<usize>,
}

/// Runs `branch(i)` for every `i` in `0..count`, in parallel when asked, and
/// returns the winning branch.
fn best_branch<F>(count: usize, threads: usize, branch: F) -> Option<BranchBest>
where
    F: Fn(usize) -> Option<BranchBest> + Sync,
{
    let pick = |results: Vec<Option<BranchBest>>| {
        results
            .into_iter()
            .enumerate()
            .filter_map(|(i, b)| b.map(|b| (i, b)))
            .min_by_key(|(i, b)| (b.k, *i))
            .map(|(_, b)| b)
    };
    if threads <= 1 || count <= 1 {
        return pick((0..count).map(&branch).collect());
    }
    use rayon::prelude::*;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .expect("thread pool");
    pool.install(|| pick((0..count).into_par_iter().map(&branch).collect()))
}

/// Glues per-component results: orders concatenated, pages mapped back.
fn combine(g: &Graph, kind: Kind, parts: Vec<(Vec<Vertex>, Graph, BranchBest)>) -> (usize, Layout) {
    let mut order = Vec::with_capacity(g.n());
    let mut pages = BTreeMap::new();
    let mut k = 0;
    for (map, sub, best) in parts {
        k = k.max(best.k);
        order.extend(best.order.iter().map(|&v| map[v]));
        for (e, &p) in sub.edges().iter().zip(&best.pages) {
            pages.insert(Edge::new(map[e.0], map[e.1]), p);
        }
    }
    let order = LinearOrder::new(order).expect("components partition the vertices");
    (k, Layout::new(kind, order, k, pages))
}
