//! One-page layouts of trees and one-queue layouts of unicyclic graphs via
//! arched leveled planar embeddings.

use linear_layouts::families::{tree_queue_layout, tree_stack_layout, unicyclic_queue_layout};
use linear_layouts::graph::cycle;
use linear_layouts::graph::random::{random_tree, random_unicyclic, seeded};
use linear_layouts::layout::{queue_to_arched_leveled, validate};

fn main() -> linear_layouts::Result<()> {
    let mut rng = seeded(2024);
    let t = random_tree(12, &mut rng)?;
    let s = tree_stack_layout(&t, 0)?;
    let (q, levels) = tree_queue_layout(&t, 0)?;
    println!("tree edges {:?}", t.edges());
    println!(
        "  depth-first stack order {:?}, valid {}",
        s.order.as_slice(),
        validate(&t, &s)?.valid
    );
    println!(
        "  breadth-first levels {:?}, valid {}",
        levels.levels,
        validate(&t, &q)?.valid
    );

    for n in [6, 7] {
        let c = cycle(n)?;
        let (l, emb) = unicyclic_queue_layout(&c)?;
        println!(
            "C{n}: levels {:?}, arches {:?}, {} queue",
            emb.levels, emb.arches, l.k
        );
    }

    let u = random_unicyclic(11, &mut rng)?;
    let (l, emb) = unicyclic_queue_layout(&u)?;
    println!("unicyclic {:?}", u.edges());
    println!("  levels {:?} arches {:?}", emb.levels, emb.arches);
    let back = queue_to_arched_leveled(&u, &l)?;
    println!("  re-leveled from the queue order: {:?}", back.levels);
    Ok(())
}
