use super::{best_branch, combine, BranchBest, ExactOptions};
use crate::error::{Error, Result};
use crate::graph::{biconnected_components, vertex_cover_exact, Edge, Graph, Vertex};
use crate::layout::{ConflictGraph, Kind, Layout, LinearOrder, DEFAULT_COLORING_EDGE_LIMIT};
use std::collections::BTreeMap;
use std::sync::atomic::{AtomicUsize, Ordering};

/// Stack number by enumerating vertex orders, with the default options.
pub fn stack_number_exact(g: &Graph) -> Result<(usize, Layout)> {
    stack_number_exact_with(g, &ExactOptions::stack())
}

/// Crossing depends only on the cyclic order of the spine, so with symmetry
/// enabled vertex 0 of each component is pinned first and reversals are
/// skipped.
pub fn stack_number_exact_with(g: &Graph, opts: &ExactOptions) -> Result<(usize, Layout)> {
    let mut parts = Vec::new();
    for comp in g.components() {
        if comp.len() > opts.vertex_limit {
            return Err(Error::SizeLimit {
                what: "stack-number component (vertices)",
                size: comp.len(),
                limit: opts.vertex_limit,
            });
        }
        let (sub, map) = g.induced_subgraph(&comp);
        if sub.m() > DEFAULT_COLORING_EDGE_LIMIT {
            return Err(Error::SizeLimit {
                what: "stack-number component (edges)",
                size: sub.m(),
                limit: DEFAULT_COLORING_EDGE_LIMIT,
            });
        }
        let best = component_stack_number(&sub, opts);
        parts.push((map, sub, best));
    }
    Ok(combine(g, Kind::Stack, parts))
}

fn evaluate(g: &Graph, order: &[Vertex], below: usize) -> Option<BranchBest> {
    let o = LinearOrder::new(order.to_vec()).expect("complete order");
    let conflicts = ConflictGraph::crossings(g, &o);
    let colors = conflicts.color_exact_below(below)?;
    Some(BranchBest {
        k: ConflictGraph::color_count(&colors),
        order: order.to_vec(),
        pages: colors.iter().map(|c| c + 1).collect(),
    })
}

fn component_stack_number(g: &Graph, opts: &ExactOptions) -> BranchBest {
    let n = g.n();
    let identity: Vec<Vertex> = (0..n).collect();
    let incumbent = evaluate(g, &identity, usize::MAX).expect("unbounded colouring");
    let lower = usize::from(g.m() > 0);
    if incumbent.k <= lower || n <= 3 {
        return incumbent;
    }
    let global = AtomicUsize::new(incumbent.k);
    // with symmetry the branch picks the second vertex, otherwise the first
    let found = best_branch(n, opts.threads, |b| {
        let mut s = Search {
            g,
            opts,
            used: vec![false; n],
            order: Vec::with_capacity(n),
            best: None,
            best_k: incumbent.k,
            lower,
            global: &global,
        };
        if opts.symmetry {
            if b == 0 {
                return None;
            }
            s.used[0] = true;
            s.order.push(0);
        }
        s.extend(b);
        s.best
    });
    found.unwrap_or(incumbent)
}

struct Search<'a> {
    g: &'a Graph,
    opts: &'a ExactOptions,
    used: Vec<bool>,
    order: Vec<Vertex>,
    best: Option<BranchBest>,
    best_k: usize,
    lower: usize,
    global: &'a AtomicUsize,
}

impl Search<'_> {
    fn extend(&mut self, v: Vertex) {
        self.used[v] = true;
        self.order.push(v);
        if self.order.len() == self.g.n() {
            self.leaf();
        } else {
            for w in 0..self.g.n() {
                if !self.used[w] {
                    self.extend(w);
                    if self.best_k <= self.lower {
                        break;
                    }
                }
            }
        }
        self.order.pop();
        self.used[v] = false;
    }

    fn leaf(&mut self) {
        let n = self.order.len();
        if self.opts.symmetry && self.order[1] > self.order[n - 1] {
            return;
        }
        let below = if self.opts.pruning {
            let o = LinearOrder::new(self.order.clone()).expect("complete order");
            let twist = ConflictGraph::crossings(self.g, &o).greedy_clique().len();
            if twist >= self.best_k || twist > self.global.load(Ordering::Relaxed) {
                return;
            }
            self.best_k
        } else {
            usize::MAX
        };
        if let Some(found) = evaluate(self.g, &self.order, below) {
            if found.k < self.best_k {
                self.best_k = found.k;
                self.global.fetch_min(found.k, Ordering::Relaxed);
                self.best = Some(found);
            }
        }
    }
}

/// Maximum of the exact stack numbers of the biconnected components.
pub fn sn_via_components(g: &Graph) -> Result<usize> {
    let mut k = 0;
    for block in biconnected_components(g) {
        let (sub, _) = g.induced_subgraph(&block.vertices);
        k = k.max(stack_number_exact(&sub)?.0);
    }
    Ok(k)
}

/// One stack per vertex of a minimum vertex cover, holding the star of edges
/// assigned to it. Stars never self-cross, so any order works; the identity
/// is used.
pub fn vc_stack_upper(g: &Graph) -> Result<(usize, Layout)> {
    let cover = vertex_cover_exact(g)?;
    let mut slot = vec![usize::MAX; g.n()];
    for (i, &c) in cover.iter().enumerate() {
        slot[c] = i;
    }
    let raw: Vec<(Edge, usize)> = g
        .edges()
        .iter()
        .map(|&e| (e, slot[e.0].min(slot[e.1])))
        .collect();
    let mut used: Vec<usize> = raw.iter().map(|&(_, s)| s).collect();
    used.sort_unstable();
    used.dedup();
    let pages: BTreeMap<Edge, usize> = raw
        .into_iter()
        .map(|(e, s)| (e, used.binary_search(&s).unwrap() + 1))
        .collect();
    let layout = Layout::compact(Kind::Stack, LinearOrder::identity(g.n()), pages);
    Ok((cover.len(), layout))
}
