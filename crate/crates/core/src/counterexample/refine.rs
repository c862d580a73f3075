use crate::error::{Error, Result};
use crate::graph::{hex_dual, Vertex};
use crate::layout::LinearOrder;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    /// Retained leaves appear in increasing order at this grid vertex.
    Red,
    Blue,
}

/// Id of `(s, p)` in `S_a □ H_n`: star vertex `s` (root 0) times grid vertex `p`.
pub fn product_id(n: usize, s: usize, p: usize) -> Vertex {
    s * n * n + p
}

fn check_order(order: &LinearOrder, a: usize, n: usize) -> Result<()> {
    if a == 0 || n == 0 {
        return Err(Error::InvalidParameter("need a >= 1 and n >= 1".into()));
    }
    let expected = (a + 1) * n * n;
    if order.len() != expected {
        return Err(Error::InvalidInput(format!(
            "order has {} vertices but S_{a} x H_{n} has {expected}",
            order.len()
        )));
    }
    Ok(())
}

/// Smallest `x` with `x^(2^(n²-1)) >= a`: the length every refinement reaches.
pub fn refinement_guarantee(a: usize, n: usize) -> usize {
    if a <= 1 {
        return a;
    }
    let squarings = n * n - 1;
    let reaches = |x: usize| {
        let mut v = x;
        for _ in 0..squarings {
            if v >= a {
                break;
            }
            v = v.saturating_mul(v);
        }
        v >= a
    };
    (1..=a).find(|&x| reaches(x)).unwrap_or(a)
}

/// Indices of a longest strictly increasing subsequence of `seq`.
pub(crate) fn longest_increasing(seq: &[usize]) -> Vec<usize> {
    // tails[k]: index ending the best increasing run of length k+1
    let mut tails: Vec<usize> = Vec::new();
    let mut prev = vec![usize::MAX; seq.len()];
    for i in 0..seq.len() {
        let k = tails.partition_point(|&t| seq[t] < seq[i]);
        if k > 0 {
            prev[i] = tails[k - 1];
        }
        if k == tails.len() {
            tails.push(i);
        } else {
            tails[k] = i;
        }
    }
    let mut out = Vec::with_capacity(tails.len());
    let mut cur = tails.last().copied().unwrap_or(usize::MAX);
    while cur != usize::MAX {
        out.push(cur);
        cur = prev[cur];
    }
    out.reverse();
    out
}

/// Leaves `u_1 .. u_b` of `S_a` whose copies appear monotonically at every
/// grid vertex of `H_n`, listed in their order at grid vertex 0.
///
/// Grid vertices are visited in id order; at each one the longer of a longest
/// increasing and a longest decreasing subsequence survives, increasing on ties.
pub fn monotone_refinement(order: &LinearOrder, a: usize, n: usize) -> Result<Vec<Vertex>> {
    check_order(order, a, n)?;
    let pos = |s: usize, p: usize| order.pos(product_id(n, s, p));
    let mut leaves: Vec<Vertex> = (1..=a).collect();
    leaves.sort_by_key(|&u| pos(u, 0));
    for p in 1..n * n {
        let seq: Vec<usize> = leaves.iter().map(|&u| pos(u, p)).collect();
        let inc = longest_increasing(&seq);
        let rev: Vec<usize> = seq.iter().map(|&x| usize::MAX - x).collect();
        let dec = longest_increasing(&rev);
        let keep = if dec.len() > inc.len() { dec } else { inc };
        leaves = keep.into_iter().map(|i| leaves[i]).collect();
    }
    let guaranteed = refinement_guarantee(a, n);
    if leaves.len() < guaranteed {
        return Err(Error::TheoremViolation(format!(
            "refinement kept {} leaves, fewer than the guaranteed {guaranteed}",
            leaves.len()
        )));
    }
    Ok(leaves)
}

/// Red where the copies of `leaves` appear in increasing order, blue otherwise.
/// Fewer than two leaves colour everything red.
pub fn grid_coloring(
    order: &LinearOrder,
    leaves: &[Vertex],
    a: usize,
    n: usize,
) -> Result<Vec<Color>> {
    check_order(order, a, n)?;
    Ok((0..n * n)
        .map(|p| {
            let increasing = leaves
                .windows(2)
                .all(|w| order.pos(product_id(n, w[0], p)) < order.pos(product_id(n, w[1], p)));
            if increasing {
                Color::Red
            } else {
                Color::Blue
            }
        })
        .collect())
}

/// A monochromatic path on `n` vertices in `H_n`, searched red first, then by
/// ascending start vertex and ascending neighbours.
pub fn find_mono_path(n: usize, coloring: &[Color]) -> Result<(Color, Vec<Vertex>)> {
    let h = hex_dual(n)?;
    if coloring.len() != h.n() {
        return Err(Error::InvalidInput(format!(
            "colouring has {} entries but H_{n} has {} vertices",
            coloring.len(),
            h.n()
        )));
    }
    fn extend(
        h: &crate::graph::Graph,
        coloring: &[Color],
        color: Color,
        target: usize,
        path: &mut Vec<Vertex>,
        used: &mut [bool],
    ) -> bool {
        if path.len() == target {
            return true;
        }
        let last = *path.last().unwrap();
        for &w in h.neighbors(last) {
            if !used[w] && coloring[w] == color {
                used[w] = true;
                path.push(w);
                if extend(h, coloring, color, target, path, used) {
                    return true;
                }
                path.pop();
                used[w] = false;
            }
        }
        false
    }
    for color in [Color::Red, Color::Blue] {
        let mut used = vec![false; h.n()];
        for start in (0..h.n()).filter(|&v| coloring[v] == color) {
            let mut path = vec![start];
            used[start] = true;
            if extend(&h, coloring, color, n, &mut path, &mut used) {
                return Ok((color, path));
            }
            used[start] = false;
        }
    }
    Err(Error::TheoremViolation(format!(
        "no monochromatic path on {n} vertices in H_{n}"
    )))
}
