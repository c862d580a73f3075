//! Closed-form bounds, evaluated with arbitrary precision.

use linear_layouts::exact::bound_formulas;

fn main() -> linear_layouts::Result<()> {
    let rows: [(&str, &[u64]); 8] = [
        ("subdivision-queue", &[1, 1]),
        ("subdivision-queue", &[2, 3]),
        ("subdivision-queue", &[4, 20]),
        ("treewidth-queue", &[2]),
        ("treewidth-queue", &[70]),
        ("complete-stack", &[7]),
        ("complete-queue", &[7]),
        ("complete-bipartite-queue", &[3, 4]),
    ];
    for (name, params) in rows {
        println!("{name}{params:?} = {}", bound_formulas(name, params)?);
    }
    Ok(())
}
