use crate::error::{Error, Result};
use crate::graph::{make_k_tree, KTreeBuild, Vertex};
use crate::layout::{Kind, Layout, LinearOrder};

/// At most `k + 1` stacks for a k-tree.
///
/// Bag 0 is the base clique and bag `i + 1` is attachment `i` plus its new
/// vertex; the parent of a bag is the bag that introduced the latest
/// attachment member. Vertices are ordered by a depth-first walk of the bags
/// (children ascending). Colouring vertices greedily in build order uses at
/// most `k + 1` colours since earlier neighbours form a clique of size `k`,
/// and each edge takes the colour of its endpoint that comes first.
pub fn k_tree_stack_layout(build: &KTreeBuild) -> Result<Layout> {
    let g = make_k_tree(build).map_err(|e| Error::InvalidInput(e.to_string()))?;
    let k = build.k;
    let bags = build.attachments.len() + 1;
    let mut children = vec![Vec::new(); bags];
    for (i, set) in build.attachments.iter().enumerate() {
        let latest = *set.iter().max().expect("attachments have k >= 1 members");
        let parent = if latest < k { 0 } else { latest - k + 1 };
        children[parent].push(i + 1);
    }
    let mut order: Vec<Vertex> = Vec::with_capacity(g.n());
    let mut stack = vec![0usize];
    while let Some(bag) = stack.pop() {
        if bag == 0 {
            order.extend(0..k);
        } else {
            order.push(k + bag - 1);
        }
        stack.extend(children[bag].iter().rev());
    }
    let order = LinearOrder::new(order)?;

    let mut color = vec![0usize; g.n()];
    for v in 0..g.n() {
        let taken: Vec<usize> = g
            .neighbors(v)
            .iter()
            .filter(|&&w| w < v)
            .map(|&w| color[w])
            .collect();
        color[v] = (0..).find(|c| !taken.contains(c)).unwrap();
    }
    let pages = g
        .edges()
        .iter()
        .map(|&e| {
            let first = if order.precedes(e.0, e.1) { e.0 } else { e.1 };
            (e, color[first] + 1)
        })
        .collect();
    Ok(Layout::compact(Kind::Stack, order, pages))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::random::{random_k_tree_build, seeded};
    use crate::layout::validate;

    #[test]
    fn triangle_and_small_builds() {
        let l = k_tree_stack_layout(&KTreeBuild::new(3)).unwrap();
        assert!(l.k <= 3);
        let b = KTreeBuild::new(2)
            .attach([0, 1])
            .attach([1, 2])
            .attach([0, 2]);
        let g = make_k_tree(&b).unwrap();
        assert!(
            validate(&g, &k_tree_stack_layout(&b).unwrap())
                .unwrap()
                .valid
        );
        assert!(k_tree_stack_layout(&KTreeBuild::new(2).attach([0, 5])).is_err());
    }

    #[test]
    fn random_builds_stay_within_k_plus_one() {
        let mut rng = seeded(4);
        for i in 0..300 {
            let k = 1 + i % 4;
            let n = k + (i * 7) % 14;
            let b = random_k_tree_build(k, n, &mut rng).unwrap();
            let g = make_k_tree(&b).unwrap();
            let l = k_tree_stack_layout(&b).unwrap();
            assert!(l.k <= k + 1);
            let r = validate(&g, &l).unwrap();
            assert!(
                r.valid,
                "k={k} build {:?}: {:?}",
                b.attachments, r.violations
            );
        }
    }
}
