//! Plain-text graph files.
//!
//! ```text
//! n m
//! u v        (m lines, sorted)
//! L u label  (optional, one per vertex)
//! ```
//! Blank lines and lines starting with `#` are ignored when reading.

use super::{Graph, Label};
use crate::error::{Error, Result};

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for e in g.edges() {
        out.push_str(&format!("{} {}\n", e.0, e.1));
    }
    if let Some(labels) = g.labels() {
        for (v, l) in labels.iter().enumerate() {
            out.push_str(&format!("L {v} {l}\n"));
        }
    }
    out
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (line, header) = lines.next().ok_or(Error::Parse {
        line: 0,
        msg: "empty graph file".into(),
    })?;
    let [n, m] = numbers::<2>(header, line)?;

    let mut edges = Vec::with_capacity(m);
    let mut labels: Vec<Option<Label>> = Vec::new();
    for (line, content) in lines {
        if let Some(rest) = content.strip_prefix("L ") {
            let rest = rest.trim_start();
            let (vertex, text) = rest.split_once(char::is_whitespace).ok_or(Error::Parse {
                line,
                msg: "label line needs a vertex and a label".into(),
            })?;
            let v: usize = vertex.parse().map_err(|_| Error::Parse {
                line,
                msg: format!("bad vertex `{vertex}`"),
            })?;
            if v >= n {
                return Err(Error::Parse {
                    line,
                    msg: format!("label for vertex {v} outside 0..{n}"),
                });
            }
            let label: Label = text.parse().map_err(|e: Error| Error::Parse {
                line,
                msg: e.to_string(),
            })?;
            if labels.is_empty() {
                labels = vec![None; n];
            }
            if labels[v].replace(label).is_some() {
                return Err(Error::Parse {
                    line,
                    msg: format!("vertex {v} labeled twice"),
                });
            }
        } else {
            if !labels.is_empty() {
                return Err(Error::Parse {
                    line,
                    msg: "edge line after label lines".into(),
                });
            }
            let [u, v] = numbers::<2>(content, line)?;
            edges.push((u, v));
        }
    }
    if edges.len() != m {
        return Err(Error::Parse {
            line: 1,
            msg: format!("header announces {m} edges but {} were given", edges.len()),
        });
    }
    let g = Graph::from_edges(n, edges).map_err(|e| Error::Parse {
        line: 1,
        msg: e.to_string(),
    })?;
    if labels.is_empty() {
        return Ok(g);
    }
    let labels: Option<Vec<Label>> = labels.into_iter().collect();
    let labels = labels.ok_or(Error::Parse {
        line: 1,
        msg: "labels must cover every vertex".into(),
    })?;
    g.with_labels(labels).map_err(|e| Error::Parse {
        line: 1,
        msg: e.to_string(),
    })
}

fn numbers<const N: usize>(text: &str, line: usize) -> Result<[usize; N]> {
    let parts: Vec<&str> = text.split_whitespace().collect();
    if parts.len() != N {
        return Err(Error::Parse {
            line,
            msg: format!("expected {N} integers, found `{text}`"),
        });
    }
    let mut out = [0; N];
    for (slot, p) in out.iter_mut().zip(parts) {
        *slot = p.parse().map_err(|_| Error::Parse {
            line,
            msg: format!("`{p}` is not a non-negative integer"),
        })?;
    }
    Ok(out)
}
