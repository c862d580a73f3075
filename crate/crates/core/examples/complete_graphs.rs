//! Constructive layouts of complete and complete bipartite graphs, checked
//! against exhaustive search.

use linear_layouts::exact::{queue_number_exact, stack_number_exact};
use linear_layouts::families::{
    complete_bipartite_queue_layout, complete_queue_layout, complete_stack_layout,
};
use linear_layouts::graph::{complete, complete_bipartite};
use linear_layouts::layout::validate;

fn main() -> linear_layouts::Result<()> {
    println!(" n  stacks  queues  exact sn  exact qn");
    for n in 2..=8 {
        let g = complete(n)?;
        let s = complete_stack_layout(n)?;
        let q = complete_queue_layout(n)?;
        assert!(validate(&g, &s)?.valid && validate(&g, &q)?.valid);
        let sn = if n <= 7 {
            stack_number_exact(&g)?.0.to_string()
        } else {
            "-".into()
        };
        let qn = if n <= 7 {
            queue_number_exact(&g)?.0.to_string()
        } else {
            "-".into()
        };
        println!("{n:>2}  {:>6}  {:>6}  {sn:>8}  {qn:>8}", s.k, q.k);
    }

    println!("\nK_{{m,n}} queue layouts:");
    for m in 1..=4 {
        let row: Vec<String> = (1..=4)
            .map(|n| {
                let l = complete_bipartite_queue_layout(m, n).unwrap();
                assert!(
                    validate(&complete_bipartite(m, n).unwrap(), &l)
                        .unwrap()
                        .valid
                );
                l.k.to_string()
            })
            .collect();
        println!("  m={m}: {}", row.join(" "));
    }
    Ok(())
}
