//! Exhaustive stack and queue numbers, search options, and cheap upper bounds.
//!
//! `cargo run --release --example exact_search -- 4` uses four threads.

use linear_layouts::exact::{
    queue_number_exact_with, sn_via_components, stack_number_exact_with, vc_stack_upper,
    ExactOptions,
};
use linear_layouts::graph::{complete, complete_bipartite, cycle, hex_dual, x_tree};
use linear_layouts::{Error, Graph};
use std::time::Instant;

fn main() -> linear_layouts::Result<()> {
    let threads = std::env::args()
        .nth(1)
        .and_then(|t| t.parse().ok())
        .unwrap_or(1);
    let graphs: Vec<(&str, Graph)> = vec![
        ("C7", cycle(7)?),
        ("K_{2,3}", complete_bipartite(2, 3)?),
        ("K_{3,3}", complete_bipartite(3, 3)?),
        ("X(2)", x_tree(2)?),
        ("H_2", hex_dual(2)?),
        ("K6", complete(6)?),
        ("K7", complete(7)?),
    ];
    println!(
        "{:<8} {:>3} {:>3} {:>9} {:>8}",
        "graph", "sn", "qn", "vc bound", "time"
    );
    for (name, g) in &graphs {
        let start = Instant::now();
        let sopts = ExactOptions {
            threads,
            ..ExactOptions::stack()
        };
        let qopts = ExactOptions {
            threads,
            ..ExactOptions::queue()
        };
        let sn = match stack_number_exact_with(g, &sopts) {
            Ok((k, _)) => k.to_string(),
            Err(Error::SizeLimit { .. }) => "-".into(),
            Err(e) => return Err(e),
        };
        let (qn, _) = queue_number_exact_with(g, &qopts)?;
        let (vc, _) = vc_stack_upper(g)?;
        println!(
            "{name:<8} {sn:>3} {qn:>3} {vc:>9} {:>7.2?}",
            start.elapsed()
        );
    }

    // disjoint union of two K4s: blocks are solved separately
    let two = Graph::from_edges(
        8,
        complete(4)?
            .edges()
            .iter()
            .flat_map(|e| [(e.0, e.1), (e.0 + 4, e.1 + 4)]),
    )?;
    println!("2 x K4 by blocks: {}", sn_via_components(&two)?);

    let unpruned = ExactOptions {
        symmetry: false,
        pruning: false,
        ..ExactOptions::queue()
    };
    let (k, _) = queue_number_exact_with(&complete(6)?, &unpruned)?;
    println!("K6 queue number without pruning: {k}");
    Ok(())
}
