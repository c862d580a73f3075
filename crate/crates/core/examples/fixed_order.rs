//! Page assignment for a fixed vertex order: rainbows bound queues, twists
//! bound stacks, and conflict-graph colouring assigns stack pages.

use linear_layouts::graph::{complete, cycle, x_tree};
use linear_layouts::layout::{
    max_rainbow, max_twist, min_stacks_fixed_order, two_stack_from_hamiltonian, validate, Mode,
};
use linear_layouts::{Error, LinearOrder};

fn main() -> linear_layouts::Result<()> {
    let k6 = complete(6)?;
    let order = LinearOrder::identity(6);

    let rainbow = max_rainbow(&k6, &order);
    println!("K6, natural order: rainbow {:?}", rainbow.witness.edges);
    println!(
        "  queue layout with {} queues, valid = {}",
        rainbow.layout.k,
        validate(&k6, &rainbow.layout)?.valid
    );

    let twist = max_twist(&k6, &order, Mode::Exact)?;
    println!("  twist {:?}", twist.edges);
    let stacks = min_stacks_fixed_order(&k6, &order, Mode::Exact)?;
    println!("  minimum stacks for this order: {}", stacks.k);

    let shuffled = LinearOrder::new(vec![0, 3, 1, 4, 2, 5])?;
    let greedy = min_stacks_fixed_order(&k6, &shuffled, Mode::Greedy)?;
    let exact = min_stacks_fixed_order(&k6, &shuffled, Mode::Exact)?;
    println!(
        "order {:?}: greedy {} stacks, exact {}",
        shuffled.as_slice(),
        greedy.k,
        exact.k
    );

    // two pages along a Hamiltonian cycle, when the chords allow it
    let c8 = cycle(8)?;
    let l = two_stack_from_hamiltonian(&c8, &LinearOrder::identity(8))?;
    println!("C8 along its cycle: {} page(s)", l.k);
    match two_stack_from_hamiltonian(&complete(5)?, &LinearOrder::identity(5)) {
        Err(Error::NotTwoPageEmbeddable { odd_cycle }) => {
            println!("K5: chords conflict along the odd cycle {odd_cycle:?}")
        }
        other => println!("K5: unexpected {other:?}"),
    }
    let x3 = x_tree(3)?;
    println!(
        "X(3) identity order needs {} queues",
        max_rainbow(&x3, &LinearOrder::identity(x3.n())).size
    );
    Ok(())
}
