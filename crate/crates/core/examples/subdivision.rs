//! Every graph has a subdivision with a 3-stack layout.

use linear_layouts::families::three_stack_subdivision;
use linear_layouts::graph::random::{random_graph, seeded};
use linear_layouts::graph::{complete, complete_bipartite};
use linear_layouts::layout::validate;
use linear_layouts::Graph;

fn report(name: &str, g: &Graph) -> linear_layouts::Result<()> {
    let sub = three_stack_subdivision(g);
    let total: usize = sub.divisions.iter().sum();
    println!(
        "{name:<10} {:>3} edges -> {:>4} vertices, {:>3} division vertices, {} stacks, valid {}",
        g.m(),
        sub.graph.n(),
        total,
        sub.layout.k,
        validate(&sub.graph, &sub.layout)?.valid
    );
    Ok(())
}

fn main() -> linear_layouts::Result<()> {
    for n in [4, 5, 6, 8, 10] {
        report(&format!("K{n}"), &complete(n)?)?;
    }
    report("K_{3,3}", &complete_bipartite(3, 3)?)?;
    let mut rng = seeded(1);
    report("G(12, 30)", &random_graph(12, 30, &mut rng)?)?;
    let k5 = three_stack_subdivision(&complete(5)?);
    println!("K5 divisions per edge {:?}", k5.divisions);
    Ok(())
}
