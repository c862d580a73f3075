use super::{Kind, Layout, LinearOrder};
use crate::error::{Error, Result};
use crate::graph::{Edge, Vertex};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct LayoutFile {
    kind: Kind,
    strict: bool,
    order: Vec<Vertex>,
    k: usize,
    pages: Vec<PageEntry>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PageEntry {
    u: Vertex,
    v: Vertex,
    page: usize,
}

/// Canonical JSON: fixed field order, edges sorted.
pub fn layout_to_json(layout: &Layout) -> String {
    let file = LayoutFile {
        kind: layout.kind,
        strict: layout.strict,
        order: layout.order.as_slice().to_vec(),
        k: layout.k,
        pages: layout
            .pages
            .iter()
            .map(|(e, &page)| PageEntry {
                u: e.0,
                v: e.1,
                page,
            })
            .collect(),
    };
    serde_json::to_string_pretty(&file).expect("layout serializes") + "\n"
}

pub fn layout_from_json(text: &str) -> Result<Layout> {
    let file: LayoutFile = serde_json::from_str(text)?;
    let order = LinearOrder::new(file.order)?;
    let mut pages = BTreeMap::new();
    for entry in file.pages {
        if entry.u == entry.v {
            return Err(Error::MalformedLayout(format!("self-loop at {}", entry.u)));
        }
        if pages
            .insert(Edge::new(entry.u, entry.v), entry.page)
            .is_some()
        {
            return Err(Error::MalformedLayout(format!(
                "edge ({},{}) listed twice",
                entry.u, entry.v
            )));
        }
    }
    Ok(Layout::new(file.kind, order, file.k, pages).with_strict(file.strict))
}
