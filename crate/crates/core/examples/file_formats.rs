//! Graph text files and JSON layout files, and validation reports.

use linear_layouts::families::hex_strict_queue_layout;
use linear_layouts::graph::{complete, parse_graph, write_graph};
use linear_layouts::layout::{layout_from_json, layout_to_json, validate};
use linear_layouts::{Kind, Layout, LinearOrder};

fn main() -> linear_layouts::Result<()> {
    let (h, l) = hex_strict_queue_layout(2)?;
    let text = write_graph(&h);
    println!("graph file:\n{text}");
    assert_eq!(parse_graph(&text)?, h);
    let json = layout_to_json(&l);
    println!("layout file:\n{json}");
    assert_eq!(layout_from_json(&json)?, l);

    // K4 on one queue: exactly one nesting pair
    let k4 = complete(4)?;
    let one = Layout::new(
        Kind::Queue,
        LinearOrder::identity(4),
        1,
        k4.edges().iter().map(|&e| (e, 1)).collect(),
    );
    let report = validate(&k4, &one)?;
    println!(
        "K4 on one queue: valid {}, violations {:?}",
        report.valid, report.violations
    );

    match parse_graph("3 2\n0 1\n1 7\n") {
        Err(e) => println!("bad file: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
