//! Queue layouts of Cartesian products from a strict queue layout of the
//! first factor and any queue layout of the second.

use linear_layouts::exact::{queue_number_exact_with, ExactOptions};
use linear_layouts::families::{hex_strict_queue_layout, product_queue_layout, tree_queue_layout};
use linear_layouts::graph::{path, star};
use linear_layouts::layout::validate;
use linear_layouts::{Kind, Layout, LinearOrder};

fn main() -> linear_layouts::Result<()> {
    // P3 has a strict 1-queue layout along the path
    let p3 = path(3)?;
    let lp = Layout::new(
        Kind::Queue,
        LinearOrder::identity(3),
        1,
        p3.edges().iter().map(|&e| (e, 1)).collect(),
    )
    .with_strict(true);
    let s3 = star(3)?;
    let (ls, _) = tree_queue_layout(&s3, 0)?;
    let (x, lx) = product_queue_layout(&p3, &lp, &s3, &ls)?;
    let opts = ExactOptions {
        vertex_limit: 12,
        threads: 4,
        ..ExactOptions::queue()
    };
    let (exact, _) = queue_number_exact_with(&x, &opts)?;
    println!("P3 x S3: {} vertices, {} edges", x.n(), x.m());
    println!("  order {:?}", lx.order.as_slice());
    println!(
        "  {} queues (valid {}), exact {}",
        lx.k,
        validate(&x, &lx)?.valid,
        exact
    );

    // the hex grid dual is strictly 3-queue, so H_n x S_a needs at most 4
    let (h, lh) = hex_strict_queue_layout(3)?;
    let s5 = star(5)?;
    let (ls5, _) = tree_queue_layout(&s5, 0)?;
    let (y, ly) = product_queue_layout(&h, &lh, &s5, &ls5)?;
    println!(
        "H3 x S5: {} vertices, {} edges, {} queues, valid {}",
        y.n(),
        y.m(),
        ly.k,
        validate(&y, &ly)?.valid
    );
    Ok(())
}
