//! Optimal page assignment for a fixed vertex order.
//!
//! Queues: the minimum page count equals the largest rainbow, and the depth of
//! each edge in its longest enclosing rainbow is a valid page. Stacks: pages
//! are colour classes of the crossing-conflict graph (a circle graph), so the
//! exact answer is its chromatic number.

use super::{Kind, Layout, LinearOrder, Witness, WitnessKind};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use std::collections::BTreeMap;

pub const DEFAULT_COLORING_EDGE_LIMIT: usize = 40;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Exact,
    Greedy,
}

#[derive(Clone, Debug)]
pub struct Rainbow {
    pub size: usize,
    pub witness: Witness,
    /// Queue layout on the given order with exactly `size` pages.
    pub layout: Layout,
}

pub fn max_rainbow(g: &Graph, order: &LinearOrder) -> Rainbow {
    let mut edges: Vec<(usize, usize, Edge)> = g
        .edges()
        .iter()
        .map(|&e| {
            let (l, r) = order.span(e);
            (l, r, e)
        })
        .collect();
    // every edge enclosing e comes before it
    edges.sort_by_key(|&(l, r, _)| (l, std::cmp::Reverse(r)));
    let m = edges.len();
    let mut depth = vec![1usize; m];
    let mut parent = vec![usize::MAX; m];
    for i in 0..m {
        let (l, r, _) = edges[i];
        for j in 0..i {
            let (lj, rj, _) = edges[j];
            if lj < l && r < rj && depth[j] + 1 > depth[i] {
                depth[i] = depth[j] + 1;
                parent[i] = j;
            }
        }
    }
    let size = depth.iter().copied().max().unwrap_or(0);
    let mut chain = Vec::new();
    if let Some(mut i) = (0..m).find(|&i| depth[i] == size) {
        loop {
            chain.push(edges[i].2);
            if parent[i] == usize::MAX {
                break;
            }
            i = parent[i];
        }
    }
    chain.reverse();
    let pages = (0..m).map(|i| (edges[i].2, depth[i])).collect();
    Rainbow {
        size,
        witness: Witness {
            kind: WitnessKind::Rainbow,
            edges: chain,
        },
        layout: Layout::new(Kind::Queue, order.clone(), size, pages),
    }
}

pub fn min_stacks_fixed_order(g: &Graph, order: &LinearOrder, mode: Mode) -> Result<Layout> {
    min_stacks_fixed_order_limited(g, order, mode, DEFAULT_COLORING_EDGE_LIMIT)
}

/// Exact mode refuses graphs with more than `edge_limit` edges.
pub fn min_stacks_fixed_order_limited(
    g: &Graph,
    order: &LinearOrder,
    mode: Mode,
    edge_limit: usize,
) -> Result<Layout> {
    let conflicts = ConflictGraph::crossings(g, order);
    let colors = match mode {
        Mode::Exact => {
            check_limit(g, edge_limit)?;
            conflicts
                .color_exact_below(usize::MAX)
                .expect("unbounded search succeeds")
        }
        Mode::Greedy => conflicts.color_greedy(),
    };
    Ok(conflicts.to_layout(order, &colors))
}

pub fn max_twist(g: &Graph, order: &LinearOrder, mode: Mode) -> Result<Witness> {
    let conflicts = ConflictGraph::crossings(g, order);
    let clique = match mode {
        Mode::Exact => {
            check_limit(g, DEFAULT_COLORING_EDGE_LIMIT)?;
            conflicts.max_clique()
        }
        Mode::Greedy => conflicts.greedy_clique(),
    };
    Ok(Witness {
        kind: WitnessKind::Twist,
        edges: clique.into_iter().map(|i| conflicts.edges[i]).collect(),
    })
}

fn check_limit(g: &Graph, limit: usize) -> Result<()> {
    if g.m() > limit {
        return Err(Error::SizeLimit {
            what: "exact colouring input (edges)",
            size: g.m(),
            limit,
        });
    }
    Ok(())
}

/// Crossing-conflict graph: one node per edge, adjacent when the edges cross.
pub(crate) struct ConflictGraph {
    pub edges: Vec<Edge>,
    adj: Vec<Vec<bool>>,
    nbrs: Vec<Vec<usize>>,
}

const NONE: usize = usize::MAX;

impl ConflictGraph {
    pub fn crossings(g: &Graph, order: &LinearOrder) -> Self {
        let edges = g.edges().to_vec();
        let m = edges.len();
        let mut adj = vec![vec![false; m]; m];
        let mut nbrs = vec![Vec::new(); m];
        for i in 0..m {
            for j in i + 1..m {
                if order.crosses(edges[i], edges[j]) {
                    adj[i][j] = true;
                    adj[j][i] = true;
                    nbrs[i].push(j);
                    nbrs[j].push(i);
                }
            }
        }
        ConflictGraph { edges, adj, nbrs }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.nbrs[i]
    }

    pub fn to_layout(&self, order: &LinearOrder, colors: &[usize]) -> Layout {
        let pages: BTreeMap<Edge, usize> = self
            .edges
            .iter()
            .zip(colors)
            .map(|(&e, &c)| (e, c + 1))
            .collect();
        Layout::compact(Kind::Stack, order.clone(), pages)
    }

    /// DSATUR: colour the most saturated node next, ties by degree then index.
    pub fn color_greedy(&self) -> Vec<usize> {
        let m = self.len();
        let mut colors = vec![NONE; m];
        let mut seen: Vec<Vec<bool>> = vec![vec![false; m + 1]; m];
        let mut sat = vec![0usize; m];
        for _ in 0..m {
            let v = (0..m)
                .filter(|&v| colors[v] == NONE)
                .max_by_key(|&v| (sat[v], self.nbrs[v].len(), std::cmp::Reverse(v)))
                .unwrap();
            let c = (0..=m).find(|&c| !seen[v][c]).unwrap();
            colors[v] = c;
            for &w in &self.nbrs[v] {
                if !seen[w][c] {
                    seen[w][c] = true;
                    sat[w] += 1;
                }
            }
        }
        colors
    }

    pub fn color_count(colors: &[usize]) -> usize {
        colors.iter().map(|&c| c + 1).max().unwrap_or(0)
    }

    /// Minimum colouring if it uses fewer than `limit` colours.
    pub fn color_exact_below(&self, limit: usize) -> Option<Vec<usize>> {
        let m = self.len();
        if m == 0 {
            return (limit > 0).then(Vec::new);
        }
        let lb = self.max_clique().len();
        if lb >= limit {
            return None;
        }
        let greedy = self.color_greedy();
        let greedy_k = Self::color_count(&greedy);
        let mut search = ColorSearch {
            g: self,
            colors: vec![NONE; m],
            counts: vec![vec![0u32; m]; m],
            sat: vec![0; m],
            best: None,
            best_k: limit,
            lb,
        };
        if greedy_k < limit {
            search.best_k = greedy_k;
            search.best = Some(greedy);
        }
        if search.best_k > lb {
            search.run(0, 0);
        }
        search.best
    }

    pub fn max_clique(&self) -> Vec<usize> {
        let mut best = Vec::new();
        let mut current = Vec::new();
        let candidates: Vec<usize> = (0..self.len()).collect();
        self.clique_branch(&mut current, candidates, &mut best);
        best.sort_unstable();
        best
    }

    fn clique_branch(&self, current: &mut Vec<usize>, mut cand: Vec<usize>, best: &mut Vec<usize>) {
        if cand.is_empty() {
            if current.len() > best.len() {
                *best = current.clone();
            }
            return;
        }
        while let Some(&v) = cand.first() {
            if current.len() + cand.len() <= best.len() {
                return;
            }
            cand.remove(0);
            let next: Vec<usize> = cand.iter().copied().filter(|&w| self.adj[v][w]).collect();
            current.push(v);
            self.clique_branch(current, next, best);
            current.pop();
        }
        if current.len() > best.len() {
            *best = current.clone();
        }
    }

    pub fn greedy_clique(&self) -> Vec<usize> {
        let Some(start) =
            (0..self.len()).max_by_key(|&v| (self.nbrs[v].len(), std::cmp::Reverse(v)))
        else {
            return Vec::new();
        };
        let mut clique = vec![start];
        let mut cand: Vec<usize> = self.nbrs[start].clone();
        while !cand.is_empty() {
            let v = *cand
                .iter()
                .max_by_key(|&&v| {
                    let inside = cand.iter().filter(|&&w| self.adj[v][w]).count();
                    (inside, std::cmp::Reverse(v))
                })
                .unwrap();
            clique.push(v);
            cand.retain(|&w| self.adj[v][w]);
        }
        clique.sort_unstable();
        clique
    }
}

struct ColorSearch<'a> {
    g: &'a ConflictGraph,
    colors: Vec<usize>,
    counts: Vec<Vec<u32>>,
    sat: Vec<usize>,
    best: Option<Vec<usize>>,
    best_k: usize,
    lb: usize,
}

impl ColorSearch<'_> {
    fn run(&mut self, colored: usize, used: usize) {
        let m = self.g.len();
        if colored == m {
            if used < self.best_k {
                self.best_k = used;
                self.best = Some(self.colors.clone());
            }
            return;
        }
        let v = (0..m)
            .filter(|&v| self.colors[v] == NONE)
            .max_by_key(|&v| (self.sat[v], self.g.nbrs[v].len(), std::cmp::Reverse(v)))
            .unwrap();
        let top = (used + 1).min(self.best_k - 1);
        for c in 0..top {
            if self.counts[v][c] > 0 {
                continue;
            }
            self.assign(v, c);
            self.run(colored + 1, used.max(c + 1));
            self.unassign(v, c);
            if self.best_k <= self.lb {
                return;
            }
        }
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.colors[v] = c;
        for &w in &self.g.nbrs[v] {
            if self.counts[w][c] == 0 {
                self.sat[w] += 1;
            }
            self.counts[w][c] += 1;
        }
    }

    fn unassign(&mut self, v: usize, c: usize) {
        self.colors[v] = NONE;
        for &w in &self.g.nbrs[v] {
            self.counts[w][c] -= 1;
            if self.counts[w][c] == 0 {
                self.sat[w] -= 1;
            }
        }
    }
}
