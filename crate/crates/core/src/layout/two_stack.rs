use super::{ConflictGraph, Layout, LinearOrder};
use crate::error::{Error, Result};
use crate::graph::Graph;
use std::collections::VecDeque;

/// Two-colours the chord conflict graph of `cycle_order`. Each colour class is
/// one side of the cycle, so a bipartite conflict graph gives a 2-stack layout.
pub fn two_stack_from_hamiltonian(g: &Graph, cycle_order: &LinearOrder) -> Result<Layout> {
    if cycle_order.len() != g.n() {
        return Err(Error::InvalidInput(format!(
            "cycle order has {} vertices, graph has {}",
            cycle_order.len(),
            g.n()
        )));
    }
    let conflicts = ConflictGraph::crossings(g, cycle_order);
    let m = conflicts.len();
    const NONE: usize = usize::MAX;
    let mut side = vec![NONE; m];
    let mut parent = vec![NONE; m];
    for root in 0..m {
        if side[root] != NONE {
            continue;
        }
        side[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            for &y in conflicts.neighbors(x) {
                if side[y] == NONE {
                    side[y] = 1 - side[x];
                    parent[y] = x;
                    queue.push_back(y);
                } else if side[y] == side[x] {
                    let cycle = odd_cycle(&parent, x, y);
                    return Err(Error::NotTwoPageEmbeddable {
                        odd_cycle: cycle.into_iter().map(|i| conflicts.edges[i]).collect(),
                    });
                }
            }
        }
    }
    Ok(conflicts.to_layout(cycle_order, &side))
}

/// Closes the BFS-tree paths from `x` and `y` at their lowest common ancestor.
fn odd_cycle(parent: &[usize], x: usize, y: usize) -> Vec<usize> {
    let chain = |mut v: usize| {
        let mut out = vec![v];
        while parent[v] != usize::MAX {
            v = parent[v];
            out.push(v);
        }
        out
    };
    let (px, py) = (chain(x), chain(y));
    let lca = *px.iter().find(|v| py.contains(v)).expect("same BFS tree");
    let mut cycle: Vec<usize> = px.iter().copied().take_while(|&v| v != lca).collect();
    cycle.push(lca);
    let back: Vec<usize> = py.iter().copied().take_while(|&v| v != lca).collect();
    cycle.extend(back.into_iter().rev());
    cycle
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle};
    use crate::layout::validate;

    #[test]
    fn cycle_needs_one_page() {
        let c = cycle(6).unwrap();
        let l = two_stack_from_hamiltonian(&c, &LinearOrder::identity(6)).unwrap();
        assert_eq!(l.k, 1);
        assert!(validate(&c, &l).unwrap().valid);
    }

    #[test]
    fn k5_fails_with_an_odd_cycle() {
        let k5 = complete(5).unwrap();
        let o = LinearOrder::identity(5);
        match two_stack_from_hamiltonian(&k5, &o) {
            Err(Error::NotTwoPageEmbeddable { odd_cycle }) => {
                assert_eq!(odd_cycle.len() % 2, 1);
                let k = odd_cycle.len();
                for i in 0..k {
                    assert!(o.crosses(odd_cycle[i], odd_cycle[(i + 1) % k]));
                }
            }
            other => panic!("expected failure, got {other:?}"),
        }
    }
}
