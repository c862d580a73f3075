use super::{best_branch, combine, BranchBest, ExactOptions};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::layout::{max_rainbow, Kind, Layout, LinearOrder};
use std::sync::atomic::{AtomicUsize, Ordering};

/// Queue number by enumerating vertex orders, with the default options.
pub fn queue_number_exact(g: &Graph) -> Result<(usize, Layout)> {
    queue_number_exact_with(g, &ExactOptions::queue())
}

pub fn queue_number_exact_with(g: &Graph, opts: &ExactOptions) -> Result<(usize, Layout)> {
    let mut parts = Vec::new();
    for comp in g.components() {
        if comp.len() > opts.vertex_limit {
            return Err(Error::SizeLimit {
                what: "queue-number component (vertices)",
                size: comp.len(),
                limit: opts.vertex_limit,
            });
        }
        let (sub, map) = g.induced_subgraph(&comp);
        let best = component_queue_number(&sub, opts);
        parts.push((map, sub, best));
    }
    Ok(combine(g, Kind::Queue, parts))
}

fn component_queue_number(g: &Graph, opts: &ExactOptions) -> BranchBest {
    let n = g.n();
    let identity = max_rainbow(g, &LinearOrder::identity(n));
    let incumbent = BranchBest {
        k: identity.size,
        order: (0..n).collect(),
        pages: g.edges().iter().map(|e| identity.layout.pages[e]).collect(),
    };
    let lower = usize::from(g.m() > 0);
    if incumbent.k <= lower {
        return incumbent;
    }
    let global = AtomicUsize::new(incumbent.k);
    let found = best_branch(n, opts.threads, |first| {
        let mut s = Search {
            g,
            opts,
            pos: vec![NONE; n],
            order: Vec::with_capacity(n),
            placed: Vec::new(),
            best: None,
            best_k: incumbent.k,
            lower,
            global: &global,
        };
        s.place(first, 0);
        s.best
    });
    found.unwrap_or(incumbent)
}

const NONE: usize = usize::MAX;

struct Search<'a> {
    g: &'a Graph,
    opts: &'a ExactOptions,
    pos: Vec<usize>,
    order: Vec<Vertex>,
    /// (left position, right position, height, edge index)
    placed: Vec<(usize, usize, usize, usize)>,
    best: Option<BranchBest>,
    best_k: usize,
    lower: usize,
    global: &'a AtomicUsize,
}

impl Search<'_> {
    /// Appends `v` and recurses. `current` is the largest rainbow among edges
    /// with both ends placed, a lower bound for every completion.
    fn place(&mut self, v: Vertex, current: usize) {
        let p = self.order.len();
        self.pos[v] = p;
        self.order.push(v);
        let before = self.placed.len();
        let mut current = current;
        for &w in self.g.neighbors(v) {
            let l = self.pos[w];
            if l == NONE || w == v {
                continue;
            }
            // only edges strictly inside [l, p] can nest in the new edge
            let h = 1 + self.placed[..before]
                .iter()
                .filter(|&&(fl, _, _, _)| fl > l)
                .map(|&(_, _, fh, _)| fh)
                .max()
                .unwrap_or(0);
            let idx = self.g.edge_index(crate::graph::Edge::new(v, w)).unwrap();
            self.placed.push((l, p, h, idx));
            current = current.max(h);
        }
        let prune = self.opts.pruning
            && (current >= self.best_k || current > self.global.load(Ordering::Relaxed));
        if !prune {
            if p + 1 == self.g.n() {
                self.leaf(current);
            } else {
                for w in 0..self.g.n() {
                    if self.pos[w] == NONE {
                        self.place(w, current);
                        if self.best_k <= self.lower {
                            break;
                        }
                    }
                }
            }
        }
        self.placed.truncate(before);
        self.order.pop();
        self.pos[v] = NONE;
    }

    fn leaf(&mut self, k: usize) {
        if self.opts.symmetry && self.order[0] > self.order[self.order.len() - 1] {
            return;
        }
        if k >= self.best_k {
            return;
        }
        let mut pages = vec![0; self.g.m()];
        for &(_, _, h, idx) in &self.placed {
            pages[idx] = h;
        }
        self.best_k = k;
        self.global.fetch_min(k, Ordering::Relaxed);
        self.best = Some(BranchBest {
            k,
            order: self.order.clone(),
            pages,
        });
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, path, x_tree};
    use crate::layout::validate;

    fn naive(g: &Graph) -> usize {
        fn rec(g: &Graph, order: &mut Vec<usize>, used: &mut Vec<bool>, best: &mut usize) {
            if order.len() == g.n() {
                let o = LinearOrder::new(order.clone()).unwrap();
                *best = (*best).min(max_rainbow(g, &o).size);
                return;
            }
            for v in 0..g.n() {
                if !used[v] {
                    used[v] = true;
                    order.push(v);
                    rec(g, order, used, best);
                    order.pop();
                    used[v] = false;
                }
            }
        }
        let mut best = usize::MAX;
        rec(g, &mut Vec::new(), &mut vec![false; g.n()], &mut best);
        best
    }

    #[test]
    fn small_known_values() {
        let (k, l) = queue_number_exact(&complete(4).unwrap()).unwrap();
        assert_eq!(k, 2);
        assert!(validate(&complete(4).unwrap(), &l).unwrap().valid);
        assert_eq!(queue_number_exact(&cycle(5).unwrap()).unwrap().0, 1);
        assert_eq!(queue_number_exact(&path(3).unwrap()).unwrap().0, 1);
        assert_eq!(queue_number_exact(&Graph::empty(3)).unwrap().0, 0);
        assert_eq!(queue_number_exact(&x_tree(2).unwrap()).unwrap().0, 2);
    }

    #[test]
    fn agrees_with_naive_enumeration() {
        let mut rng = crate::graph::random::seeded(5);
        for i in 0..25 {
            let n = 3 + i % 4;
            let m = (i * 7) % (n * (n - 1) / 2 + 1);
            let g = crate::graph::random::random_graph(n, m, &mut rng).unwrap();
            if !g.is_connected() {
                continue;
            }
            assert_eq!(
                queue_number_exact(&g).unwrap().0,
                naive(&g),
                "graph {:?}",
                g.edges()
            );
        }
    }

    #[test]
    fn options_do_not_change_the_answer() {
        let g = complete(6).unwrap();
        let plain = ExactOptions {
            symmetry: false,
            pruning: false,
            ..ExactOptions::queue()
        };
        let threaded = ExactOptions {
            threads: 4,
            ..ExactOptions::queue()
        };
        let a = queue_number_exact(&g).unwrap();
        let b = queue_number_exact_with(&g, &plain).unwrap();
        let c = queue_number_exact_with(&g, &threaded).unwrap();
        assert_eq!(a.0, 3);
        assert_eq!(b.0, 3);
        assert_eq!(a.1, c.1);
    }

    #[test]
    fn limit_is_per_component() {
        assert!(matches!(
            queue_number_exact(&path(10).unwrap()),
            Err(Error::SizeLimit { .. })
        ));
        let two = crate::graph::Graph::from_edges(
            10,
            (0..4).map(|i| (i, i + 1)).chain((5..9).map(|i| (i, i + 1))),
        )
        .unwrap();
        let (k, l) = queue_number_exact(&two).unwrap();
        assert_eq!(k, 1);
        assert!(validate(&two, &l).unwrap().valid);
    }
}
