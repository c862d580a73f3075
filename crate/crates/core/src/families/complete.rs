use crate::error::{Error, Result};
use crate::graph::{complete_bipartite, Edge, Vertex};
use crate::layout::{Kind, Layout, LinearOrder};
use std::collections::BTreeMap;

fn at_least_two(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "complete graph layouts need n >= 2, got {n}"
        )));
    }
    Ok(())
}

/// Stack layout of `K_n` on the natural order.
///
/// For even `n` the vertices sit on a circle and page `w + 1` is the zig-zag
/// path `w, w+1, w-1, w+2, w-2, .., w+n/2` (indices mod `n`), for
/// `w < n/2`; these paths partition the edges and each is non-crossing. Odd
/// `n >= 5` reuses the layout of `K_{n+1}` without its last vertex, which
/// gives `⌈n/2⌉` pages, the stack number of `K_n` from four vertices on.
/// Up to three vertices one page suffices.
pub fn complete_stack_layout(n: usize) -> Result<Layout> {
    at_least_two(n)?;
    let order = LinearOrder::identity(n);
    if n <= 3 {
        let pages = all_edges(n).map(|e| (e, 1)).collect();
        return Ok(Layout::new(Kind::Stack, order, 1, pages));
    }
    let even = n + n % 2;
    let half = even / 2;
    let mut pages = BTreeMap::new();
    for w in 0..half {
        let mut walk = vec![w];
        for i in 1..half {
            walk.push((w + i) % even);
            walk.push((w + even - i) % even);
        }
        walk.push((w + half) % even);
        for pair in walk.windows(2) {
            if pair[0] < n && pair[1] < n {
                pages.insert(Edge::new(pair[0], pair[1]), w + 1);
            }
        }
    }
    Ok(Layout::new(Kind::Stack, order, half, pages))
}

/// Natural order; an edge of length `l` goes to queue `⌈l/2⌉`.
pub fn complete_queue_layout(n: usize) -> Result<Layout> {
    at_least_two(n)?;
    let pages = all_edges(n).map(|e| (e, (e.1 - e.0).div_ceil(2))).collect();
    Ok(Layout::new(
        Kind::Queue,
        LinearOrder::identity(n),
        n / 2,
        pages,
    ))
}

/// Queue layout of `K_{m,n}` with the generator's numbering. The smaller side
/// `s_1 .. s_p` is split around the larger side and queue `i` holds the edges
/// of `s_i` and `s_{p+1-i}`.
pub fn complete_bipartite_queue_layout(m: usize, n: usize) -> Result<Layout> {
    let g = complete_bipartite(m, n)?;
    let (small, large): (Vec<Vertex>, Vec<Vertex>) = if m <= n {
        ((0..m).collect(), (m..m + n).collect())
    } else {
        ((m..m + n).collect(), (0..m).collect())
    };
    let p = small.len();
    let split = p.div_ceil(2);
    let order: Vec<Vertex> = small[..split]
        .iter()
        .chain(&large)
        .chain(&small[split..])
        .copied()
        .collect();
    let mut queue_of = vec![0; m + n];
    for (j, &s) in small.iter().enumerate() {
        queue_of[s] = (j + 1).min(p - j);
    }
    let pages = g
        .edges()
        .iter()
        .map(|&e| (e, queue_of[e.0].max(queue_of[e.1])))
        .collect();
    Ok(Layout::new(
        Kind::Queue,
        LinearOrder::new(order)?,
        split,
        pages,
    ))
}

fn all_edges(n: usize) -> impl Iterator<Item = Edge> {
    (0..n).flat_map(move |i| (i + 1..n).map(move |j| Edge(i, j)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::complete;
    use crate::layout::validate;

    #[test]
    fn stack_layouts_validate() {
        for n in 2..=12 {
            let g = complete(n).unwrap();
            let l = complete_stack_layout(n).unwrap();
            assert!(validate(&g, &l).unwrap().valid, "n = {n}");
            let expected = if n <= 3 { 1 } else { n.div_ceil(2) };
            assert_eq!(l.k, expected);
        }
        let six = complete_stack_layout(6).unwrap();
        for p in 1..=3 {
            assert_eq!(six.edges_on_page(p).len(), 5);
        }
    }

    #[test]
    fn queue_layouts_validate() {
        for n in 2..=12 {
            let l = complete_queue_layout(n).unwrap();
            assert_eq!(l.k, n / 2);
            assert!(validate(&complete(n).unwrap(), &l).unwrap().valid);
        }
        let five = complete_queue_layout(5).unwrap();
        assert_eq!(five.page(Edge(0, 2)), Some(1));
        assert_eq!(five.page(Edge(0, 3)), Some(2));
        assert_eq!(five.page(Edge(0, 4)), Some(2));
    }

    #[test]
    fn bipartite_layouts_validate() {
        for m in 1..=6 {
            for n in 1..=6 {
                let l = complete_bipartite_queue_layout(m, n).unwrap();
                assert_eq!(l.k, m.min(n).div_ceil(2));
                assert!(
                    validate(&complete_bipartite(m, n).unwrap(), &l)
                        .unwrap()
                        .valid
                );
            }
        }
        let l = complete_bipartite_queue_layout(4, 4).unwrap();
        let q1 = l.edges_on_page(1);
        assert!(q1.iter().all(|e| e.0 == 0 || e.0 == 3));
        assert_eq!(q1.len(), 8);
    }
}
