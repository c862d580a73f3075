//! Writes arc diagrams of a few layouts as SVG files into a directory
//! (default: the system temp directory).

use linear_layouts::families::{complete_queue_layout, complete_stack_layout, x_tree_layouts};
use linear_layouts::graph::{complete, x_tree};
use linear_layouts::render::render_svg;
use std::path::PathBuf;

fn main() -> linear_layouts::Result<()> {
    let dir = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(std::env::temp_dir);
    let k6 = complete(6)?;
    let x3 = x_tree(3)?;
    let (xs, xq) = x_tree_layouts(3)?;
    let drawings = [
        ("k6-stack.svg", render_svg(&k6, &complete_stack_layout(6)?)?),
        ("k6-queue.svg", render_svg(&k6, &complete_queue_layout(6)?)?),
        ("x3-stack.svg", render_svg(&x3, &xs)?),
        ("x3-queue.svg", render_svg(&x3, &xq)?),
    ];
    for (name, svg) in drawings {
        let path = dir.join(name);
        std::fs::write(&path, svg)?;
        println!("wrote {}", path.display());
    }
    Ok(())
}
