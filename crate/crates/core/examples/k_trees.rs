//! k-trees laid out on at most k+1 stacks from their build sequence.

use linear_layouts::exact::stack_number_exact;
use linear_layouts::families::k_tree_stack_layout;
use linear_layouts::graph::random::{random_k_tree_build, seeded};
use linear_layouts::graph::{make_k_tree, KTreeBuild};
use linear_layouts::layout::validate;

fn main() -> linear_layouts::Result<()> {
    // the 2-tree of three triangles glued along edges
    let build = KTreeBuild::new(2)
        .attach([0, 1])
        .attach([1, 2])
        .attach([2, 3]);
    let g = make_k_tree(&build)?;
    let l = k_tree_stack_layout(&build)?;
    println!(
        "fixed 2-tree: order {:?}, {} stacks",
        l.order.as_slice(),
        l.k
    );

    let mut rng = seeded(7);
    for k in 1..=4 {
        let build = random_k_tree_build(k, 8, &mut rng)?;
        let g = make_k_tree(&build)?;
        let l = k_tree_stack_layout(&build)?;
        let (sn, _) = stack_number_exact(&g)?;
        println!(
            "random {k}-tree on 8 vertices: constructive {} stacks (valid {}), exact {sn}, bound {}",
            l.k,
            validate(&g, &l)?.valid,
            k + 1
        );
    }
    assert!(validate(&g, &l)?.valid);
    Ok(())
}
