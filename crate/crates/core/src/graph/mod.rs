//! Simple undirected graphs with integer vertex ids.
//!
//! A [`Graph`] keeps its edge list sorted and deduplicated, with every edge
//! normalized so that `u < v`. Vertices may carry structured [`Label`]s that
//! record where they came from (grid coordinates, product pairs, subdivision
//! markers).

mod format;
mod generators;
mod ktree;
mod label;
mod ops;
pub mod random;

pub use format::{parse_graph, write_graph};
pub use generators::{
    complete, complete_bipartite, cycle, fan, generate_basic, hex_dual, path, star, x_tree,
    BasicFamily,
};
pub use ktree::{make_k_tree, KTreeBuild};
pub use label::Label;
pub use ops::{
    biconnected_components, cartesian_product, subdivide, vertex_cover_exact,
    vertex_cover_exact_limited, BiconnectedComponent, DEFAULT_VERTEX_COVER_LIMIT,
};

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::VecDeque;
use std::fmt;

pub type Vertex = usize;

/// An undirected edge stored with its smaller endpoint first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge(pub Vertex, pub Vertex);

impl Edge {
    /// Builds the normalized edge between `a` and `b`.
    pub fn new(a: Vertex, b: Vertex) -> Self {
        if a <= b {
            Edge(a, b)
        } else {
            Edge(b, a)
        }
    }

    pub fn u(self) -> Vertex {
        self.0
    }

    pub fn v(self) -> Vertex {
        self.1
    }

    pub fn has_endpoint(self, x: Vertex) -> bool {
        self.0 == x || self.1 == x
    }

    pub fn shares_endpoint(self, other: Edge) -> bool {
        self.has_endpoint(other.0) || self.has_endpoint(other.1)
    }

    /// The endpoint that is not `x`.
    pub fn other(self, x: Vertex) -> Vertex {
        if self.0 == x {
            self.1
        } else {
            self.0
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.0, self.1)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<Vertex>>,
    labels: Option<Vec<Label>>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
            labels: None,
        }
    }

    /// Builds a graph, rejecting self-loops, duplicate edges and out-of-range
    /// endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut list = Vec::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::InvalidInput(format!("self-loop at vertex {a}")));
            }
            if a >= n || b >= n {
                return Err(Error::InvalidInput(format!(
                    "edge ({a},{b}) has an endpoint outside 0..{n}"
                )));
            }
            list.push(Edge::new(a, b));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidInput(format!("duplicate edge {}", w[0])));
        }
        Ok(Self::from_sorted_unique(n, list))
    }

    /// Like [`Graph::from_edges`] but silently drops duplicates.
    pub(crate) fn from_edges_dedup<I>(n: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut list: Vec<Edge> = edges
            .into_iter()
            .filter(|(a, b)| a != b)
            .map(|(a, b)| Edge::new(a, b))
            .collect();
        list.sort_unstable();
        list.dedup();
        Self::from_sorted_unique(n, list)
    }

    fn from_sorted_unique(n: usize, edges: Vec<Edge>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for e in &edges {
            adj[e.0].push(e.1);
            adj[e.1].push(e.0);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph {
            n,
            edges,
            adj,
            labels: None,
        }
    }

    /// Attaches labels; they must cover every vertex and be pairwise distinct.
    pub fn with_labels(mut self, labels: Vec<Label>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::InvalidInput(format!(
                "{} labels given for {} vertices",
                labels.len(),
                self.n
            )));
        }
        let mut sorted: Vec<&Label> = labels.iter().collect();
        sorted.sort();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidInput(format!("duplicate label {}", w[0])));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        a < self.n && b < self.n && self.adj[a].binary_search(&b).is_ok()
    }

    /// Index of `e` in [`Graph::edges`].
    pub fn edge_index(&self, e: Edge) -> Option<usize> {
        self.edges.binary_search(&Edge::new(e.0, e.1)).ok()
    }

    pub fn labels(&self) -> Option<&[Label]> {
        self.labels.as_deref()
    }

    /// The label of `v`, or `Plain(v)` when the graph is unlabeled.
    pub fn label(&self, v: Vertex) -> Label {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => Label::Plain(v),
        }
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                for &y in &self.adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                        queue.push_back(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.m() + 1 == self.n && self.is_connected()
    }

    /// Subgraph induced on `vertices`, renumbered in the given order. Returns the
    /// subgraph and the map from new ids back to original ids.
    pub fn induced_subgraph(&self, vertices: &[Vertex]) -> (Graph, Vec<Vertex>) {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| index[e.0] != usize::MAX && index[e.1] != usize::MAX)
            .map(|e| (index[e.0], index[e.1]));
        let mut sub = Graph::from_edges_dedup(vertices.len(), edges);
        if let Some(labels) = &self.labels {
            sub.labels = Some(vertices.iter().map(|&v| labels[v].clone()).collect());
        }
        (sub, vertices.to_vec())
    }

    /// Renames vertex `v` to `perm[v]`. `perm` must be a permutation of `0..n`.
    pub fn relabel(&self, perm: &[Vertex]) -> Result<Graph> {
        check_permutation(perm, self.n)?;
        let mut g =
            Graph::from_edges_dedup(self.n, self.edges.iter().map(|e| (perm[e.0], perm[e.1])));
        if let Some(labels) = &self.labels {
            let mut out = vec![Label::Plain(0); self.n];
            for (v, l) in labels.iter().enumerate() {
                out[perm[v]] = l.clone();
            }
            g.labels = Some(out);
        }
        Ok(g)
    }

    /// Checks the structural invariants. Always true for graphs built through
    /// the public constructors; kept for tests and external inputs.
    pub fn check_invariants(&self) -> Result<()> {
        for w in self.edges.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::InvalidInput(format!(
                    "edge list not strictly sorted at {}",
                    w[1]
                )));
            }
        }
        for e in &self.edges {
            if e.0 >= e.1 || e.1 >= self.n {
                return Err(Error::InvalidInput(format!("bad edge {e}")));
            }
        }
        if let Some(labels) = &self.labels {
            if labels.len() != self.n {
                return Err(Error::InvalidInput("label count mismatch".into()));
            }
            let mut sorted: Vec<&Label> = labels.iter().collect();
            sorted.sort();
            if sorted.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidInput("duplicate labels".into()));
            }
        }
        Ok(())
    }
}

pub(crate) fn check_permutation(perm: &[usize], n: usize) -> Result<()> {
    if perm.len() != n {
        return Err(Error::InvalidInput(format!(
            "sequence has length {} but the graph has {n} vertices",
            perm.len()
        )));
    }
    let mut seen = vec![false; n];
    for &v in perm {
        if v >= n || seen[v] {
            return Err(Error::InvalidInput(format!(
                "sequence is not a permutation of 0..{n} (offending entry {v})"
            )));
        }
        seen[v] = true;
    }
    Ok(())
}
