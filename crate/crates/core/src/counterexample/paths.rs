use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, Vertex};
use crate::layout::{LinearOrder, Witness, WitnessKind};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PairKind {
    /// Some edge of one path crosses some edge of the other.
    Crossing,
    /// The vertex intervals of the two paths are disjoint.
    Separated,
}

/// Symmetric pair classification; the diagonal is `None`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PairMatrix {
    entries: Vec<Vec<Option<PairKind>>>,
}

impl PairMatrix {
    /// Builds a matrix from `kind(i, j)` evaluated for `i < j`.
    #[allow(clippy::needless_range_loop)]
    pub fn from_fn(n: usize, mut kind: impl FnMut(usize, usize) -> PairKind) -> Self {
        let mut entries = vec![vec![None; n]; n];
        for i in 0..n {
            for j in i + 1..n {
                let k = kind(i, j);
                entries[i][j] = Some(k);
                entries[j][i] = Some(k);
            }
        }
        PairMatrix { entries }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, i: usize, j: usize) -> Option<PairKind> {
        self.entries[i][j]
    }
}

fn path_edges(path: &[Vertex]) -> impl Iterator<Item = Edge> + '_ {
    path.windows(2).map(|w| Edge::new(w[0], w[1]))
}

fn check_paths(g: &Graph, paths: &[Vec<Vertex>]) -> Result<()> {
    for (i, p) in paths.iter().enumerate() {
        if let Some(e) = path_edges(p).find(|e| !g.has_edge(e.0, e.1)) {
            return Err(Error::InvalidInput(format!("path {i} uses non-edge {e}")));
        }
    }
    Ok(())
}

/// Labels every pair of paths crossing or separated. A pair that is neither
/// (one nested inside the other) is a [`Error::MonotonicityViolation`].
pub fn classify_path_pairs(
    g: &Graph,
    order: &LinearOrder,
    paths: &[Vec<Vertex>],
) -> Result<PairMatrix> {
    check_paths(g, paths)?;
    let interval = |p: &[Vertex]| {
        let ps = p.iter().map(|&v| order.pos(v));
        (ps.clone().min().unwrap_or(0), ps.max().unwrap_or(0))
    };
    let spans: Vec<(usize, usize)> = paths.iter().map(|p| interval(p)).collect();
    let mut bad = None;
    let matrix = PairMatrix::from_fn(paths.len(), |i, j| {
        let crossing =
            path_edges(&paths[i]).any(|e| path_edges(&paths[j]).any(|f| order.crosses(e, f)));
        if crossing {
            return PairKind::Crossing;
        }
        if spans[i].1 >= spans[j].0 && spans[j].1 >= spans[i].0 && bad.is_none() {
            bad = Some((i, j));
        }
        PairKind::Separated
    });
    match bad {
        Some((i, j)) => Err(Error::MonotonicityViolation(i, j)),
        None => Ok(matrix),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Homogeneous {
    /// Indices of `c` pairwise separated paths.
    Case1(Vec<usize>),
    /// Indices of `d` pairwise crossing paths.
    Case2(Vec<usize>),
    Insufficient {
        paths: usize,
        max_separated: usize,
        max_crossing: usize,
    },
}

/// Lexicographically first clique of size `target`, or a maximum clique if
/// there is none.
fn clique_search(n: usize, adj: &dyn Fn(usize, usize) -> bool, target: usize) -> Vec<usize> {
    fn grow(
        adj: &dyn Fn(usize, usize) -> bool,
        current: &mut Vec<usize>,
        candidates: &[usize],
        target: usize,
        best: &mut Vec<usize>,
    ) -> bool {
        if current.len() > best.len() {
            *best = current.clone();
        }
        if best.len() >= target {
            return true;
        }
        for (i, &v) in candidates.iter().enumerate() {
            if current.len() + candidates.len() - i <= best.len() {
                break;
            }
            let next: Vec<usize> = candidates[i + 1..]
                .iter()
                .copied()
                .filter(|&w| adj(v, w))
                .collect();
            current.push(v);
            if grow(adj, current, &next, target, best) {
                return true;
            }
            current.pop();
        }
        false
    }
    let all: Vec<usize> = (0..n).collect();
    let mut best = Vec::new();
    grow(adj, &mut Vec::new(), &all, target, &mut best);
    best.truncate(target);
    best
}

/// A set of `c` pairwise separated paths, otherwise a set of `d` pairwise
/// crossing paths, otherwise the largest sizes that do exist.
pub fn homogeneous_paths(matrix: &PairMatrix, c: usize, d: usize) -> Homogeneous {
    let n = matrix.len();
    let separated = clique_search(n, &|i, j| matrix.get(i, j) == Some(PairKind::Separated), c);
    if separated.len() >= c {
        return Homogeneous::Case1(separated);
    }
    let crossing = clique_search(n, &|i, j| matrix.get(i, j) == Some(PairKind::Crossing), d);
    if crossing.len() >= d {
        return Homogeneous::Case2(crossing);
    }
    Homogeneous::Insufficient {
        paths: n,
        max_separated: separated.len(),
        max_crossing: crossing.len(),
    }
}

fn star_edge(g: &Graph, path: &[Vertex], spine_vertex: Vertex) -> Result<Edge> {
    path.iter()
        .find(|&&r| g.has_edge(r, spine_vertex))
        .map(|&r| Edge::new(r, spine_vertex))
        .ok_or_else(|| {
            Error::Internal(format!(
                "spine vertex {spine_vertex} has no neighbour on a leaf path"
            ))
        })
}

/// Twist of size `min(⌊c/2⌋, ⌈n/2⌉)` from `c ≥ 2` pairwise separated leaf
/// paths and the root path, using edges between the root and leaf copies.
pub fn extract_twist_case1(
    g: &Graph,
    order: &LinearOrder,
    separated: &[Vec<Vertex>],
    spine: &[Vertex],
) -> Result<Witness> {
    let c = separated.len();
    let n = spine.len();
    if c < 2 || n == 0 {
        return Err(Error::InvalidParameter(format!(
            "case 1 needs at least 2 paths and a non-empty spine, got {c} and {n}"
        )));
    }
    check_paths(g, separated)?;
    let lo = |p: &[Vertex]| p.iter().map(|&v| order.pos(v)).min().unwrap_or(0);
    let hi = |p: &[Vertex]| p.iter().map(|&v| order.pos(v)).max().unwrap_or(0);
    let mut r: Vec<&[Vertex]> = separated.iter().map(|p| p.as_slice()).collect();
    r.sort_by_key(|p| lo(p));
    let mut s = spine.to_vec();
    s.sort_by_key(|&v| order.pos(v));

    let (half_c, half_n) = (c / 2, n.div_ceil(2));
    let t = half_c.min(half_n);
    let mid = order.pos(s[half_n - 1]);
    let edges = if hi(r[half_c - 1]) < mid {
        (0..t)
            .map(|i| star_edge(g, r[i], s[half_n - 1 + i]))
            .collect::<Result<Vec<_>>>()?
    } else if mid < lo(r[c.div_ceil(2)]) {
        (0..t)
            .map(|i| star_edge(g, r[c.div_ceil(2) + i], s[i]))
            .collect::<Result<Vec<_>>>()?
    } else {
        return Err(Error::Internal(
            "the middle root vertex is inside a separated path".into(),
        ));
    };
    let w = Witness {
        kind: WitnessKind::Twist,
        edges,
    };
    w.verify(order)
        .map_err(|e| Error::Internal(format!("case 1 twist: {e}")))?;
    Ok(w)
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Side {
    Left,
    Right,
}

/// Twist from `d ≥ 2` pairwise crossing copies of the same path, of size at
/// least `⌈(d-1)/(4n²)⌉` where `n` is the path length.
///
/// Every other path contributes one edge crossing the first path. The edge
/// `e` of the first path hit most often is kept, and its crossers are grouped
/// by the path indices of their inner and outer endpoints and the side of `e`
/// holding the outer one. The largest group is returned.
pub fn extract_twist_case2(
    g: &Graph,
    order: &LinearOrder,
    crossing: &[Vec<Vertex>],
) -> Result<Witness> {
    let d = crossing.len();
    if d < 2 {
        return Err(Error::InvalidParameter(format!(
            "case 2 needs at least 2 paths, got {d}"
        )));
    }
    check_paths(g, crossing)?;
    let first = &crossing[0];
    let mut by_edge: BTreeMap<usize, Vec<(usize, usize)>> = BTreeMap::new();
    for (pi, other) in crossing.iter().enumerate().skip(1) {
        let hit = (0..other.len().saturating_sub(1)).find_map(|fi| {
            let f = Edge::new(other[fi], other[fi + 1]);
            (0..first.len() - 1)
                .find(|&ei| order.crosses(Edge::new(first[ei], first[ei + 1]), f))
                .map(|ei| (ei, fi))
        });
        let (ei, fi) =
            hit.ok_or_else(|| Error::Internal(format!("path {pi} does not cross path 0")))?;
        by_edge.entry(ei).or_default().push((pi, fi));
    }
    let (&ei, crossers) = by_edge
        .iter()
        .max_by_key(|(&ei, v)| (v.len(), std::cmp::Reverse(ei)))
        .expect("d >= 2");
    let (l, r) = order.span(Edge::new(first[ei], first[ei + 1]));
    let mut buckets: BTreeMap<(usize, usize, Side), Vec<Edge>> = BTreeMap::new();
    for &(pi, fi) in crossers {
        let path = &crossing[pi];
        let (x, y) = (fi, fi + 1);
        let inside = |k: usize| (l..=r).contains(&order.pos(path[k]));
        let (inner, outer) = if inside(x) { (x, y) } else { (y, x) };
        let side = if order.pos(path[outer]) < l {
            Side::Left
        } else {
            Side::Right
        };
        buckets
            .entry((inner, outer, side))
            .or_default()
            .push(Edge::new(path[x], path[y]));
    }
    let edges = buckets
        .into_values()
        .rev()
        .max_by_key(|b| b.len())
        .expect("at least one crosser");
    let w = Witness {
        kind: WitnessKind::Twist,
        edges,
    };
    w.verify(order)
        .map_err(|e| Error::Internal(format!("case 2 twist: {e}")))?;
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counterexample::product_id;
    use crate::graph::{cartesian_product, hex_dual, star};

    /// Leaf paths along the first grid row of `S_a □ H_n`.
    fn row_paths(a: usize, n: usize) -> (Graph, Vec<Vec<Vertex>>, Vec<Vertex>) {
        let g = cartesian_product(&star(a).unwrap(), &hex_dual(n).unwrap());
        let row = |s: usize| (0..n).map(|p| product_id(n, s, p)).collect::<Vec<_>>();
        (g, (1..=a).map(row).collect(), row(0))
    }

    #[test]
    fn matrix_is_symmetric() {
        let m = PairMatrix::from_fn(4, |i, j| {
            if (i + j) % 2 == 0 {
                PairKind::Crossing
            } else {
                PairKind::Separated
            }
        });
        for i in 0..4 {
            assert_eq!(m.get(i, i), None);
            for j in 0..4 {
                assert_eq!(m.get(i, j), m.get(j, i));
            }
        }
    }

    #[test]
    fn blocks_separate_and_interleaving_crosses() {
        let (g, paths, _) = row_paths(2, 2);
        let m = classify_path_pairs(&g, &LinearOrder::identity(12), &paths[..]).unwrap();
        assert_eq!(m.get(0, 1), Some(PairKind::Separated));
        // grid-major: copies of each grid vertex together
        let order = LinearOrder::new(
            (0..4)
                .flat_map(|p| (0..3).map(move |s| product_id(2, s, p)))
                .collect(),
        )
        .unwrap();
        let m = classify_path_pairs(&g, &order, &paths[..]).unwrap();
        assert_eq!(m.get(0, 1), Some(PairKind::Crossing));
    }

    #[test]
    fn nesting_is_rejected() {
        let (g, paths, _) = row_paths(2, 2);
        // leaf 2 copies sit strictly inside leaf 1 copies at different grid vertices
        let order = vec![4, 8, 9, 5, 0, 1, 2, 3, 6, 7, 10, 11];
        let r = classify_path_pairs(&g, &LinearOrder::new(order).unwrap(), &paths[..]);
        assert!(matches!(r, Err(Error::MonotonicityViolation(0, 1))));
    }

    #[test]
    fn homogeneous_trivial_cases() {
        let sep = PairMatrix::from_fn(5, |_, _| PairKind::Separated);
        assert_eq!(
            homogeneous_paths(&sep, 3, 3),
            Homogeneous::Case1(vec![0, 1, 2])
        );
        let cross = PairMatrix::from_fn(5, |_, _| PairKind::Crossing);
        assert_eq!(
            homogeneous_paths(&cross, 3, 3),
            Homogeneous::Case2(vec![0, 1, 2])
        );
        let one = PairMatrix::from_fn(1, |_, _| PairKind::Crossing);
        assert_eq!(
            homogeneous_paths(&one, 3, 3),
            Homogeneous::Insufficient {
                paths: 1,
                max_separated: 1,
                max_crossing: 1
            }
        );
    }

    #[test]
    fn six_paths_always_homogeneous() {
        let pairs: Vec<(usize, usize)> = (0..6)
            .flat_map(|i| (i + 1..6).map(move |j| (i, j)))
            .collect();
        for mask in 0u32..1 << 15 {
            let m = PairMatrix::from_fn(6, |i, j| {
                let k = pairs.iter().position(|&p| p == (i, j)).unwrap();
                if mask >> k & 1 == 1 {
                    PairKind::Crossing
                } else {
                    PairKind::Separated
                }
            });
            let (set, kind) = match homogeneous_paths(&m, 3, 3) {
                Homogeneous::Case1(s) => (s, PairKind::Separated),
                Homogeneous::Case2(s) => (s, PairKind::Crossing),
                other => panic!("mask {mask}: {other:?}"),
            };
            assert_eq!(set.len(), 3);
            for (x, &i) in set.iter().enumerate() {
                for &j in &set[x + 1..] {
                    assert_eq!(m.get(i, j), Some(kind));
                }
            }
        }
    }

    /// Leaves `1..=half` first, then the root copies, then the remaining leaves.
    fn split_order(a: usize, n: usize, half: usize) -> LinearOrder {
        let block = |s: usize| (0..n * n).map(move |p| product_id(n, s, p));
        let order: Vec<Vertex> = (1..=half)
            .flat_map(block)
            .chain(block(0))
            .chain((half + 1..=a).flat_map(block))
            .collect();
        LinearOrder::new(order).unwrap()
    }

    #[test]
    fn case1_subcases() {
        // R_2 precedes s_2
        let (g, paths, spine) = row_paths(4, 3);
        let w = extract_twist_case1(&g, &split_order(4, 3, 2), &paths, &spine).unwrap();
        assert_eq!(w.size(), 2);
        // root first: second subcase
        let w = extract_twist_case1(&g, &LinearOrder::identity(5 * 9), &paths, &spine).unwrap();
        assert_eq!(w.size(), 2);
        let (g, paths, spine) = row_paths(6, 5);
        let w = extract_twist_case1(&g, &split_order(6, 5, 3), &paths, &spine).unwrap();
        assert_eq!(w.size(), 3);
        let (g, paths, spine) = row_paths(2, 1);
        let w = extract_twist_case1(&g, &LinearOrder::identity(3), &paths, &spine).unwrap();
        assert_eq!(w.size(), 1);
    }

    #[test]
    fn case1_needs_separated_paths() {
        let (g, paths, spine) = row_paths(2, 3);
        // grid-major order makes the two leaf paths cross around s_2
        let order = LinearOrder::new(
            (0..9)
                .flat_map(|p| (0..3).map(move |s| product_id(3, s, p)))
                .collect(),
        )
        .unwrap();
        let r = extract_twist_case1(&g, &order, &paths, &spine);
        assert!(matches!(r, Err(Error::Internal(_))));
    }

    #[test]
    fn case2_bound() {
        for (a, n) in [(2, 2), (6, 2), (9, 2), (10, 3)] {
            let (g, paths, _) = row_paths(a, n);
            let order = LinearOrder::new(
                (0..n * n)
                    .flat_map(|p| (0..=a).map(move |s| product_id(n, s, p)))
                    .collect(),
            )
            .unwrap();
            let w = extract_twist_case2(&g, &order, &paths).unwrap();
            assert!(w.size() >= (a - 1).div_ceil(4 * n * n).max(1));
            assert!(w.size() >= 1);
        }
    }
}
