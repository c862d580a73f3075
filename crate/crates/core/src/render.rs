//! SVG arc diagrams: vertices on a horizontal spine, stack pages as arcs above
//! it and queue pages as arcs below it tagged with their queue number.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::layout::{validate, Kind, Layout};
use std::fmt::Write;

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 400.0;
const MARGIN: f64 = 40.0;
const PALETTE: [&str; 8] = [
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf",
];

pub fn page_color(page: usize) -> &'static str {
    PALETTE[(page.max(1) - 1) % PALETTE.len()]
}

/// Renders a valid layout. One `<path>` per edge; output depends only on the
/// inputs.
pub fn render_svg(g: &Graph, layout: &Layout) -> Result<String> {
    let report = validate(g, layout)?;
    if !report.valid {
        return Err(Error::InvalidLayout(format!(
            "refusing to render a layout with {} violations",
            report.total
        )));
    }
    let n = g.n();
    let spine_y = match layout.kind {
        Kind::Stack => HEIGHT - MARGIN,
        Kind::Queue => MARGIN,
    };
    let step = if n > 1 {
        (WIDTH - 2.0 * MARGIN) / (n - 1) as f64
    } else {
        0.0
    };
    let x = |v: usize| MARGIN + step * layout.order.pos(v) as f64;
    // semicircles taller than the free space are flattened into ellipses
    let max_radius = step * n.saturating_sub(1) as f64 / 2.0;
    let scale = if max_radius > 0.0 {
        ((HEIGHT - 2.0 * MARGIN) / max_radius).min(1.0)
    } else {
        1.0
    };

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    );
    let _ = writeln!(
        out,
        r#"<line x1="{MARGIN}" y1="{spine_y}" x2="{}" y2="{spine_y}" stroke="black" stroke-width="1"/>"#,
        WIDTH - MARGIN
    );
    for e in g.edges() {
        let page = layout.pages[e];
        let (a, b) = (x(e.0).min(x(e.1)), x(e.0).max(x(e.1)));
        let rx = (b - a) / 2.0;
        let ry = rx * scale;
        // sweep 1 bends the arc upwards when drawn left to right
        let sweep = match layout.kind {
            Kind::Stack => 1,
            Kind::Queue => 0,
        };
        let _ = write!(
            out,
            r#"<path d="M {a:.2} {spine_y:.2} A {rx:.2} {ry:.2} 0 0 {sweep} {b:.2} {spine_y:.2}" fill="none" stroke="{}" stroke-width="1.5" data-page="{page}"/>"#,
            page_color(page)
        );
        out.push('\n');
        if layout.kind == Kind::Queue {
            let _ = writeln!(
                out,
                r#"<text x="{:.2}" y="{:.2}" font-size="10" text-anchor="middle" fill="{}">q{page}</text>"#,
                (a + b) / 2.0,
                spine_y + ry + 10.0,
                page_color(page)
            );
        }
    }
    for v in layout.order.as_slice() {
        let _ = writeln!(
            out,
            r#"<circle cx="{:.2}" cy="{spine_y:.2}" r="4" fill="black"/><text x="{:.2}" y="{:.2}" font-size="10" text-anchor="middle">{v}</text>"#,
            x(*v),
            x(*v),
            if layout.kind == Kind::Stack {
                spine_y + 16.0
            } else {
                spine_y - 10.0
            }
        );
    }
    out.push_str("</svg>\n");
    Ok(out)
}
