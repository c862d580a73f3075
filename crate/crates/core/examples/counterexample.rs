//! `S_a x H_n` has a 4-queue layout, yet every vertex order of it carries a
//! large twist once `a` is big enough. This runs the extraction on a few
//! orders and prints the parameters the full argument needs.
//!
//! `cargo run --example counterexample -- 9 2 random 5` runs `a = 9`, `n = 2`
//! on a random order with seed 5.

use linear_layouts::counterexample::{
    counterexample_graph, parameters_for, ramsey_number, run_pipeline, verify_ramsey, RamseyMode,
};
use linear_layouts::graph::random::{random_permutation, seeded};
use linear_layouts::LinearOrder;

fn main() -> linear_layouts::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let a = args.first().and_then(|x| x.parse().ok()).unwrap_or(6);
    let n = args.get(1).and_then(|x| x.parse().ok()).unwrap_or(2);
    let which = args.get(2).map(String::as_str).unwrap_or("all");
    let seed = args.get(3).and_then(|x| x.parse().ok()).unwrap_or(0);

    let (g, layout) = counterexample_graph(a, n)?;
    println!(
        "S_{a} x H_{n}: {} vertices, {} edges, {} queues",
        g.n(),
        g.m(),
        layout.k
    );

    let orders = [
        ("layout", layout.order.clone()),
        ("identity", LinearOrder::identity(g.n())),
        (
            "random",
            LinearOrder::new(random_permutation(g.n(), &mut seeded(seed)))?,
        ),
    ];
    for (name, order) in orders
        .iter()
        .filter(|(name, _)| which == "all" || which == *name)
    {
        let t = run_pipeline(a, n, order, 3, 3)?;
        println!("\n{name} order");
        println!("  refined leaves {:?}", t.leaf_subsequence);
        println!("  {:?} grid path {:?}", t.path_color, t.mono_path);
        match (&t.case_tag, &t.twist) {
            (Some(case), Some(w)) => println!(
                "  {case:?}: twist {:?}, so at least {} stacks",
                w.edges, t.stack_lower_bound
            ),
            _ => println!("  insufficient: {:?}", t.insufficiency),
        }
    }

    println!(
        "\nR(3,3) = {}, confirmed: {}",
        ramsey_number(3, 3, RamseyMode::ExactSmall)?,
        verify_ramsey(3, 3, 6)? && !verify_ramsey(3, 3, 5)?
    );
    for s in 1..=3 {
        let p = parameters_for(s)?;
        println!(
            "s = {s}: n = {}, R({}, {}) <= b with log2 b = {:.1}, log2 a = 2^{} * log2 b = {:.3e}",
            p.n, p.c, p.d, p.log2_b, p.exponent_log2, p.log2_a
        );
    }
    Ok(())
}
