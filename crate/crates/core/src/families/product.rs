use crate::error::{Error, Result};
use crate::graph::{cartesian_product, hex_dual, Edge, Graph};
use crate::layout::{validate, Kind, Layout, LinearOrder};

fn require_valid_queue(g: &Graph, l: &Layout, strict: bool, which: &str) -> Result<()> {
    if l.kind != Kind::Queue || (strict && !l.strict) {
        let need = if strict { "a strict queue" } else { "a queue" };
        return Err(Error::InvalidLayout(format!(
            "{which} must be {need} layout"
        )));
    }
    let report = validate(g, l).map_err(|e| Error::InvalidLayout(format!("{which}: {e}")))?;
    if !report.valid {
        return Err(Error::InvalidLayout(format!(
            "{which} has {} violations",
            report.total
        )));
    }
    Ok(())
}

/// Queue layout of `G □ H` from a strict queue layout of `G` and a queue
/// layout of `H`, with `lg.k + lh.k` queues.
///
/// `(v, a)` precedes `(w, b)` when `v` precedes `w`, or `v = w` and `a`
/// precedes `b`. Copies of `H` keep their queues; a `G`-edge in strict queue
/// `i` goes to queue `lh.k + i`. Vertex ids follow [`cartesian_product`].
pub fn product_queue_layout(
    g: &Graph,
    lg: &Layout,
    h: &Graph,
    lh: &Layout,
) -> Result<(Graph, Layout)> {
    require_valid_queue(g, lg, true, "layout of the first factor")?;
    require_valid_queue(h, lh, false, "layout of the second factor")?;
    let x = cartesian_product(g, h);
    let nh = h.n();
    let order: Vec<usize> = lg
        .order
        .as_slice()
        .iter()
        .flat_map(|&v| lh.order.as_slice().iter().map(move |&a| v * nh + a))
        .collect();
    let pages = x
        .edges()
        .iter()
        .map(|&e| {
            let (v, a) = (e.0 / nh, e.0 % nh);
            let (w, b) = (e.1 / nh, e.1 % nh);
            let page = if v == w {
                lh.pages[&Edge::new(a, b)]
            } else {
                lh.k + lg.pages[&Edge::new(v, w)]
            };
            (e, page)
        })
        .collect();
    let layout = Layout::new(Kind::Queue, LinearOrder::new(order)?, lg.k + lh.k, pages);
    Ok((x, layout))
}

/// Row-major order of `H_n`; horizontal edges on queue 1, vertical on 2,
/// diagonal on 3. Same-queue edges all have the same length, so nothing nests
/// and no two of them leave a vertex on the same side.
pub fn hex_strict_queue_layout(n: usize) -> Result<(Graph, Layout)> {
    let g = hex_dual(n)?;
    let pages = g
        .edges()
        .iter()
        .map(|&e| {
            let page = match e.1 - e.0 {
                1 => 1,
                d if d == n => 2,
                _ => 3,
            };
            (e, page)
        })
        .collect();
    let layout = Layout::new(Kind::Queue, LinearOrder::identity(g.n()), 3, pages).with_strict(true);
    Ok((g, layout))
}
