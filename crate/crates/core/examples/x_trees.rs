//! X-trees: two stacks along a layer-snaking Hamiltonian path, two queues in
//! heap order, and the exhaustive proof that X(2) has no one-queue layout.

use linear_layouts::exact::queue_number_exact;
use linear_layouts::families::x_tree_layouts;
use linear_layouts::graph::x_tree;
use linear_layouts::layout::validate;

fn main() -> linear_layouts::Result<()> {
    for d in 1..=5 {
        let g = x_tree(d)?;
        let (s, q) = x_tree_layouts(d)?;
        println!(
            "X({d}): {} vertices, {} edges, {} stacks ({}), {} queues ({})",
            g.n(),
            g.m(),
            s.k,
            validate(&g, &s)?.valid,
            q.k,
            validate(&g, &q)?.valid
        );
    }
    let (qn, witness) = queue_number_exact(&x_tree(2)?)?;
    println!(
        "exact qn(X(2)) = {qn}, optimal order {:?}",
        witness.order.as_slice()
    );
    Ok(())
}
