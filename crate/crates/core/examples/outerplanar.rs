//! Outerplanar graphs: one stack along the boundary, two queues by
//! breadth-first layers.

use linear_layouts::families::{one_stack_to_two_queue, outerplanar_stack_layout};
use linear_layouts::graph::random::{random_polygon_triangulation, seeded};
use linear_layouts::graph::{complete, fan};
use linear_layouts::layout::validate;
use linear_layouts::Error;

fn main() -> linear_layouts::Result<()> {
    let f = fan(8)?;
    let boundary: Vec<usize> = (0..8).collect();
    let s = outerplanar_stack_layout(&f, &boundary)?;
    let q = one_stack_to_two_queue(&f, &boundary)?;
    println!(
        "fan F8: {} stack, {} queues, queue order {:?}",
        s.k,
        q.k,
        q.order.as_slice()
    );

    let mut rng = seeded(3);
    for n in [6, 9, 12] {
        let (g, boundary) = random_polygon_triangulation(n, &mut rng)?;
        let q = one_stack_to_two_queue(&g, &boundary)?;
        println!(
            "triangulated {n}-gon: {} queues, valid {}",
            q.k,
            validate(&g, &q)?.valid
        );
    }

    match outerplanar_stack_layout(&complete(4)?, &[0, 1, 2, 3]) {
        Err(Error::NotOuterplanar(e, f)) => println!("K4 on a 4-cycle boundary: {e} crosses {f}"),
        other => println!("K4: unexpected {other:?}"),
    }
    Ok(())
}
