//! Graph families with fixed canonical numbering.
//!
//! * complete `K_n`: vertices `0..n`.
//! * complete bipartite `K_{m,n}`: part A is `0..m`, part B is `m..m+n`.
//! * path `P_n`: `0 - 1 - ... - n-1`.
//! * cycle `C_n`: the path plus the edge `(0, n-1)`.
//! * star `S_a`: root `0`, leaves `1..=a`.
//! * fan `F_n`: apex `0` joined to every vertex of the path `1 - ... - n-1`.
//! * X-tree `X(d)`: heap numbering (children of `i` are `2i+1`, `2i+2`),
//!   labeled `grid(layer, index)`.
//! * hex dual `H_n`: row-major, vertex `(r-1)*n + (c-1)` labeled `grid(r,c)`
//!   with `r, c` in `1..=n`.

use super::{Graph, Label};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BasicFamily {
    Complete(usize),
    CompleteBipartite(usize, usize),
    Path(usize),
    Cycle(usize),
    Star(usize),
}

pub fn generate_basic(family: BasicFamily) -> Result<Graph> {
    match family {
        BasicFamily::Complete(n) => complete(n),
        BasicFamily::CompleteBipartite(m, n) => complete_bipartite(m, n),
        BasicFamily::Path(n) => path(n),
        BasicFamily::Cycle(n) => cycle(n),
        BasicFamily::Star(a) => star(a),
    }
}

fn positive(name: &str, value: usize) -> Result<()> {
    if value == 0 {
        Err(Error::InvalidParameter(format!(
            "{name} must be at least 1"
        )))
    } else {
        Ok(())
    }
}

pub fn complete(n: usize) -> Result<Graph> {
    positive("complete graph size", n)?;
    let edges = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
    Graph::from_edges(n, edges)
}

pub fn complete_bipartite(m: usize, n: usize) -> Result<Graph> {
    positive("first part size", m)?;
    positive("second part size", n)?;
    let edges = (0..m).flat_map(|a| (0..n).map(move |b| (a, m + b)));
    Graph::from_edges(m + n, edges)
}

pub fn path(n: usize) -> Result<Graph> {
    positive("path length", n)?;
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "a simple cycle needs at least 3 vertices, got {n}"
        )));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn star(a: usize) -> Result<Graph> {
    positive("number of leaves", a)?;
    Graph::from_edges(a + 1, (1..=a).map(|leaf| (0, leaf)))
}

pub fn fan(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "a fan needs at least 2 vertices, got {n}"
        )));
    }
    let spokes = (1..n).map(|i| (0, i));
    let rim = (2..n).map(|i| (i - 1, i));
    Graph::from_edges(n, spokes.chain(rim))
}

/// Complete binary tree of depth `d` with every layer joined into a path.
pub fn x_tree(d: usize) -> Result<Graph> {
    positive("X-tree depth", d)?;
    let n = (1usize << (d + 1)) - 1;
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push(((v - 1) / 2, v));
    }
    let mut labels = Vec::with_capacity(n);
    for layer in 0..=d {
        let first = (1usize << layer) - 1;
        let width = 1usize << layer;
        for index in 0..width {
            labels.push(Label::Grid {
                row: layer,
                col: index,
            });
            if index + 1 < width {
                edges.push((first + index, first + index + 1));
            }
        }
    }
    Graph::from_edges(n, edges)?.with_labels(labels)
}

/// Dual of the `n x n` hexagonal grid: orthogonal neighbours plus the
/// diagonal `(r,c) - (r+1,c+1)`.
pub fn hex_dual(n: usize) -> Result<Graph> {
    positive("grid size", n)?;
    let id = |r: usize, c: usize| r * n + c;
    let mut edges = Vec::new();
    for r in 0..n {
        for c in 0..n {
            if c + 1 < n {
                edges.push((id(r, c), id(r, c + 1)));
            }
            if r + 1 < n {
                edges.push((id(r, c), id(r + 1, c)));
            }
            if r + 1 < n && c + 1 < n {
                edges.push((id(r, c), id(r + 1, c + 1)));
            }
        }
    }
    let labels = (0..n * n)
        .map(|v| Label::Grid {
            row: v / n + 1,
            col: v % n + 1,
        })
        .collect();
    Graph::from_edges(n * n, edges)?.with_labels(labels)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_counts() {
        let k6 = generate_basic(BasicFamily::Complete(6)).unwrap();
        assert_eq!(k6.m(), 15);
        let k23 = generate_basic(BasicFamily::CompleteBipartite(2, 3)).unwrap();
        assert_eq!((k23.n(), k23.m()), (5, 6));
        let s5 = generate_basic(BasicFamily::Star(5)).unwrap();
        assert_eq!((s5.n(), s5.m(), s5.degree(0)), (6, 5, 5));
        assert_eq!(path(5).unwrap().m(), 4);
        assert_eq!(cycle(5).unwrap().m(), 5);
        assert_eq!(fan(5).unwrap().m(), 7);
    }

    #[test]
    fn zero_sizes_rejected() {
        for fam in [
            BasicFamily::Complete(0),
            BasicFamily::CompleteBipartite(0, 2),
            BasicFamily::Path(0),
            BasicFamily::Cycle(2),
            BasicFamily::Star(0),
        ] {
            assert!(matches!(
                generate_basic(fam),
                Err(Error::InvalidParameter(_))
            ));
        }
        assert!(x_tree(0).is_err());
        assert!(hex_dual(0).is_err());
    }

    #[test]
    fn x_tree_counts() {
        let x2 = x_tree(2).unwrap();
        assert_eq!((x2.n(), x2.m()), (7, 10));
        let x3 = x_tree(3).unwrap();
        assert_eq!((x3.n(), x3.m()), (15, 25));
        assert_eq!(x3.label(14), Label::Grid { row: 3, col: 7 });
        let x1 = x_tree(1).unwrap();
        assert_eq!((x1.n(), x1.m()), (3, 3));
    }

    #[test]
    fn hex_dual_counts() {
        let h3 = hex_dual(3).unwrap();
        assert_eq!((h3.n(), h3.m()), (9, 16));
        // diagonal (1,1)-(2,2) present, anti-diagonal (1,2)-(2,1) absent
        assert!(h3.has_edge(0, 4));
        assert!(!h3.has_edge(1, 3));
        let h1 = hex_dual(1).unwrap();
        assert_eq!((h1.n(), h1.m()), (1, 0));
        for n in 1..6 {
            let h = hex_dual(n).unwrap();
            assert_eq!(h.m(), 2 * n * (n - 1) + (n - 1) * (n - 1));
            h.check_invariants().unwrap();
        }
    }
}
