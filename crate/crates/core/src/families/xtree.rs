use crate::error::Result;
use crate::graph::{x_tree, Vertex};
use crate::layout::{two_stack_from_hamiltonian, Kind, Layout, LinearOrder};

/// Stack and queue layouts of `X(d)`, two pages each.
///
/// Stack: the Hamiltonian order root, layer 1 left to right, layer 2 right to
/// left, alternating, split into two pages by chord conflicts. Queue: heap
/// order with tree edges on queue 1 and layer paths on queue 2.
pub fn x_tree_layouts(d: usize) -> Result<(Layout, Layout)> {
    let g = x_tree(d)?;
    let mut ham: Vec<Vertex> = Vec::with_capacity(g.n());
    for layer in 0..=d {
        let first = (1usize << layer) - 1;
        let ids = first..first + (1usize << layer);
        if layer % 2 == 1 {
            ham.extend(ids);
        } else {
            ham.extend(ids.rev());
        }
    }
    let stack = two_stack_from_hamiltonian(&g, &LinearOrder::new(ham)?)?;
    let pages = g
        .edges()
        .iter()
        .map(|&e| {
            let tree_edge = e.0 == (e.1 - 1) / 2;
            (e, if tree_edge { 1 } else { 2 })
        })
        .collect();
    let queue = Layout::new(Kind::Queue, LinearOrder::identity(g.n()), 2, pages);
    Ok((stack, queue))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::layout::validate;

    #[test]
    fn both_layouts_validate() {
        for d in 1..=6 {
            let g = x_tree(d).unwrap();
            let (s, q) = x_tree_layouts(d).unwrap();
            assert!(s.k <= 2 && q.k == 2);
            assert!(validate(&g, &s).unwrap().valid, "stack d = {d}");
            assert!(validate(&g, &q).unwrap().valid, "queue d = {d}");
        }
        assert_eq!(x_tree_layouts(3).unwrap().0.k, 2);
    }
}
