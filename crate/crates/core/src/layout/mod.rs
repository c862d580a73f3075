//! Vertex orders, stack and queue layouts, and their validation.
//!
//! Two edges `ab` and `cd` with `a ≺ b`, `c ≺ d` cross when their endpoints
//! interleave (`a ≺ c ≺ b ≺ d`) and nest when one lies strictly inside the
//! other (`a ≺ c ≺ d ≺ b`). A stack page holds no crossing pair, a queue page
//! no nested pair. Edges that share an endpoint neither cross nor nest.

mod fixed;
mod json;
mod leveled;
mod order;
mod two_stack;

pub(crate) use fixed::ConflictGraph;
pub use fixed::{
    max_rainbow, max_twist, min_stacks_fixed_order, min_stacks_fixed_order_limited, Mode, Rainbow,
    DEFAULT_COLORING_EDGE_LIMIT,
};
pub use json::{layout_from_json, layout_to_json};
pub use leveled::{
    leveled_to_queue, queue_to_arched_leveled, validate_embedding, LeveledEmbedding,
};
pub use order::LinearOrder;
pub use two_stack::two_stack_from_hamiltonian;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// Maximum number of violating pairs kept in a [`ValidationReport`].
pub const VIOLATION_CAP: usize = 1000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Stack,
    Queue,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Stack => "stack",
            Kind::Queue => "queue",
        })
    }
}

/// An order plus an assignment of every edge to a page in `1..=k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Layout {
    pub kind: Kind,
    /// Only meaningful for queues.
    pub strict: bool,
    pub order: LinearOrder,
    pub k: usize,
    pub pages: BTreeMap<Edge, usize>,
}

impl Layout {
    pub fn new(kind: Kind, order: LinearOrder, k: usize, pages: BTreeMap<Edge, usize>) -> Self {
        Layout {
            kind,
            strict: false,
            order,
            k,
            pages,
        }
    }

    /// Sets `k` to the largest page actually used.
    pub fn compact(kind: Kind, order: LinearOrder, pages: BTreeMap<Edge, usize>) -> Self {
        let k = pages.values().copied().max().unwrap_or(0);
        Layout::new(kind, order, k, pages)
    }

    pub fn with_strict(mut self, strict: bool) -> Self {
        self.strict = strict;
        self
    }

    pub fn page(&self, e: Edge) -> Option<usize> {
        self.pages.get(&e).copied()
    }

    /// Number of distinct pages holding at least one edge.
    pub fn pages_used(&self) -> usize {
        let mut used: Vec<usize> = self.pages.values().copied().collect();
        used.sort_unstable();
        used.dedup();
        used.len()
    }

    pub fn edges_on_page(&self, page: usize) -> Vec<Edge> {
        self.pages
            .iter()
            .filter(|&(_, &p)| p == page)
            .map(|(&e, _)| e)
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ViolationKind {
    Crossing,
    Nesting,
    /// Two same-page edges `ab`, `ac` with `b` and `c` on the same side of `a`.
    StrictEndpoint,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub first: Edge,
    pub second: Edge,
    pub page: usize,
    pub kind: ViolationKind,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub valid: bool,
    /// Exact number of violating pairs.
    pub total: usize,
    /// The first [`VIOLATION_CAP`] violations in edge order.
    pub violations: Vec<Violation>,
}

pub fn edges_cross(g: &Graph, order: &LinearOrder, e: Edge, f: Edge) -> Result<bool> {
    check_edges(g, order, [e, f])?;
    Ok(order.crosses(e, f))
}

pub fn edges_nest(g: &Graph, order: &LinearOrder, e: Edge, f: Edge) -> Result<bool> {
    check_edges(g, order, [e, f])?;
    Ok(order.nests(e, f))
}

fn check_edges(g: &Graph, order: &LinearOrder, edges: [Edge; 2]) -> Result<()> {
    if order.len() != g.n() {
        return Err(Error::MalformedLayout(format!(
            "order has {} vertices, graph has {}",
            order.len(),
            g.n()
        )));
    }
    match edges.into_iter().find(|e| g.edge_index(*e).is_none()) {
        Some(e) => Err(Error::InvalidEdge(e)),
        None => Ok(()),
    }
}

/// Checks that `layout` is well formed for `g` and lists every same-page
/// conflict.
pub fn validate(g: &Graph, layout: &Layout) -> Result<ValidationReport> {
    check_shape(g, layout)?;
    let strict = layout.kind == Kind::Queue && layout.strict;
    let order = &layout.order;
    let mut by_page: Vec<Vec<Edge>> = vec![Vec::new(); layout.k + 1];
    for (&e, &p) in &layout.pages {
        by_page[p].push(e);
    }
    let mut found = Vec::new();
    let mut total = 0;
    for (page, edges) in by_page.iter().enumerate() {
        for (i, &e) in edges.iter().enumerate() {
            for &f in &edges[i + 1..] {
                let kind = match layout.kind {
                    Kind::Stack if order.crosses(e, f) => Some(ViolationKind::Crossing),
                    Kind::Queue if order.nests(e, f) => Some(ViolationKind::Nesting),
                    Kind::Queue if strict && strict_conflict(order, e, f) => {
                        Some(ViolationKind::StrictEndpoint)
                    }
                    _ => None,
                };
                if let Some(kind) = kind {
                    total += 1;
                    found.push(Violation {
                        first: e,
                        second: f,
                        page,
                        kind,
                    });
                }
            }
        }
    }
    found.sort_by_key(|v| (v.first, v.second));
    found.truncate(VIOLATION_CAP);
    Ok(ValidationReport {
        valid: total == 0,
        total,
        violations: found,
    })
}

/// Same-page edges sharing an endpoint with both other ends on one side of it.
fn strict_conflict(order: &LinearOrder, e: Edge, f: Edge) -> bool {
    let shared = if f.has_endpoint(e.0) {
        e.0
    } else if f.has_endpoint(e.1) {
        e.1
    } else {
        return false;
    };
    let a = order.pos(shared);
    let b = order.pos(e.other(shared));
    let c = order.pos(f.other(shared));
    (a < b) == (a < c)
}

fn check_shape(g: &Graph, layout: &Layout) -> Result<()> {
    if layout.order.len() != g.n() {
        return Err(Error::MalformedLayout(format!(
            "order has {} vertices, graph has {}",
            layout.order.len(),
            g.n()
        )));
    }
    if let Some(e) = g.edges().iter().find(|e| !layout.pages.contains_key(e)) {
        return Err(Error::MalformedLayout(format!("edge {e} has no page")));
    }
    if layout.pages.len() != g.m() {
        let extra = layout
            .pages
            .keys()
            .find(|e| g.edge_index(**e).is_none())
            .expect("more pages than edges implies a foreign edge");
        return Err(Error::MalformedLayout(format!(
            "edge {extra} is not in the graph"
        )));
    }
    if let Some((e, p)) = layout.pages.iter().find(|&(_, &p)| p == 0 || p > layout.k) {
        return Err(Error::MalformedLayout(format!(
            "edge {e} is on page {p}, outside 1..={}",
            layout.k
        )));
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum WitnessKind {
    /// Pairwise crossing edges.
    Twist,
    /// Pairwise nested edges.
    Rainbow,
}

/// A certified lower bound: edges pairwise crossing or pairwise nested under
/// some order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub kind: WitnessKind,
    pub edges: Vec<Edge>,
}

impl Witness {
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn verify(&self, order: &LinearOrder) -> Result<()> {
        for (i, &e) in self.edges.iter().enumerate() {
            for &f in &self.edges[i + 1..] {
                let ok = match self.kind {
                    WitnessKind::Twist => order.crosses(e, f),
                    WitnessKind::Rainbow => order.nests(e, f),
                };
                if !ok {
                    return Err(Error::InvalidLayout(format!(
                        "{e} and {f} do not form a {:?} pair",
                        self.kind
                    )));
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::complete;

    fn one_queue_k4() -> (Graph, Layout) {
        let g = complete(4).unwrap();
        let pages = g.edges().iter().map(|&e| (e, 1)).collect();
        (
            g,
            Layout::new(Kind::Queue, LinearOrder::identity(4), 1, pages),
        )
    }

    #[test]
    fn k4_single_queue_has_one_violation() {
        let (g, l) = one_queue_k4();
        let r = validate(&g, &l).unwrap();
        assert!(!r.valid);
        assert_eq!(r.total, 1);
        assert_eq!(
            (r.violations[0].first, r.violations[0].second),
            (Edge(0, 3), Edge(1, 2))
        );
    }

    #[test]
    fn k4_two_queues_by_length() {
        let (g, mut l) = one_queue_k4();
        for (e, p) in l.pages.iter_mut() {
            *p = (e.1 - e.0).div_ceil(2);
        }
        l.k = 2;
        assert!(validate(&g, &l).unwrap().valid);
    }

    #[test]
    fn malformed_layouts() {
        let (g, mut l) = one_queue_k4();
        l.pages.remove(&Edge(0, 1));
        assert!(matches!(validate(&g, &l), Err(Error::MalformedLayout(_))));
        let (g, mut l) = one_queue_k4();
        l.pages.insert(Edge(0, 1), 2);
        assert!(validate(&g, &l).is_err());
        let (g, mut l) = one_queue_k4();
        l.pages.insert(Edge(0, 9), 1);
        assert!(validate(&g, &l).is_err());
    }

    #[test]
    fn strict_endpoint_rule() {
        let g = Graph::from_edges(3, [(0, 1), (0, 2)]).unwrap();
        let pages: BTreeMap<_, _> = g.edges().iter().map(|&e| (e, 1)).collect();
        let l = Layout::new(Kind::Queue, LinearOrder::identity(3), 1, pages.clone());
        assert!(validate(&g, &l).unwrap().valid);
        let r = validate(&g, &l.clone().with_strict(true)).unwrap();
        assert_eq!(r.violations[0].kind, ViolationKind::StrictEndpoint);
        // the shared vertex in the middle is allowed
        let mid = LinearOrder::new(vec![1, 0, 2]).unwrap();
        let l = Layout::new(Kind::Queue, mid, 1, pages).with_strict(true);
        assert!(validate(&g, &l).unwrap().valid);
    }

    #[test]
    fn predicates_reject_foreign_edges() {
        let g = complete(3).unwrap();
        let o = LinearOrder::identity(3);
        assert!(matches!(
            edges_cross(&g, &o, Edge(0, 1), Edge(0, 5)),
            Err(Error::InvalidEdge(_))
        ));
        assert!(!edges_nest(&g, &o, Edge(0, 2), Edge(0, 1)).unwrap());
    }
}
