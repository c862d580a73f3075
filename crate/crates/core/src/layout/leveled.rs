//! Arched leveled planar embeddings, the combinatorial form of 1-queue layouts.

use super::{validate, Kind, Layout, LinearOrder};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, Vertex};
use serde::{Deserialize, Serialize};

/// `levels[0]` is the first level; each level lists its vertices bottom to top.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeveledEmbedding {
    pub levels: Vec<Vec<Vertex>>,
    pub arches: Vec<Edge>,
}

impl LeveledEmbedding {
    /// Levels concatenated left to right, each bottom to top.
    pub fn induced_order(&self) -> Vec<Vertex> {
        self.levels.iter().flatten().copied().collect()
    }
}

/// Checks the partition, the leveled edges, and the arch condition: an arch
/// joins the top vertex `t` of a level to a vertex at index `j` with
/// `b <= j <= min(t - 1, s)`, where `s` is the first vertex of the level
/// adjacent to the next level (or `t` when there is none).
pub fn validate_embedding(g: &Graph, emb: &LeveledEmbedding) -> Result<()> {
    let bad = |msg: String| Err(Error::InvalidEmbedding(msg));
    let n = g.n();
    let mut level_of = vec![usize::MAX; n];
    let mut index = vec![0; n];
    let mut next = 0;
    for (li, level) in emb.levels.iter().enumerate() {
        if level.is_empty() {
            return bad(format!("level {li} is empty"));
        }
        for &v in level {
            if v >= n || level_of[v] != usize::MAX {
                return bad(format!("vertex {v} is out of range or placed twice"));
            }
            level_of[v] = li;
            index[v] = next;
            next += 1;
        }
    }
    if next != n {
        return bad(format!("levels cover {next} of {n} vertices"));
    }

    let mut arches = emb.arches.clone();
    arches.sort_unstable();
    if arches.windows(2).any(|w| w[0] == w[1]) {
        return bad("duplicate arch".into());
    }
    if let Some(a) = arches.iter().find(|a| g.edge_index(**a).is_none()) {
        return bad(format!("arch {a} is not an edge"));
    }

    // first vertex of each level adjacent to the following level
    let mut s = vec![usize::MAX; emb.levels.len()];
    for e in g.edges() {
        let (la, lb) = (level_of[e.0], level_of[e.1]);
        let is_arch = arches.binary_search(e).is_ok();
        if la == lb {
            if !is_arch {
                return bad(format!(
                    "edge {e} lies inside level {la} but is not an arch"
                ));
            }
        } else {
            if is_arch {
                return bad(format!("arch {e} joins different levels"));
            }
            if la.abs_diff(lb) != 1 {
                return bad(format!("edge {e} skips a level"));
            }
            let low = if la < lb { e.0 } else { e.1 };
            let l = level_of[low];
            s[l] = s[l].min(index[low]);
        }
    }

    let order = LinearOrder::new(emb.induced_order())?;
    let leveled: Vec<Edge> = g
        .edges()
        .iter()
        .copied()
        .filter(|e| level_of[e.0] != level_of[e.1])
        .collect();
    for (i, &e) in leveled.iter().enumerate() {
        for &f in &leveled[i + 1..] {
            if order.nests(e, f) {
                return bad(format!("leveled edges {e} and {f} cross in the drawing"));
            }
        }
    }

    for a in &arches {
        let l = level_of[a.0];
        let b = index[emb.levels[l][0]];
        let t = index[*emb.levels[l].last().unwrap()];
        let s_l = if s[l] == usize::MAX { t } else { s[l] };
        let j = if index[a.0] == t {
            index[a.1]
        } else if index[a.1] == t {
            index[a.0]
        } else {
            return bad(format!("arch {a} does not end at the top of level {l}"));
        };
        if j < b || j > (t - 1).min(s_l) {
            return bad(format!(
                "arch {a} has its low end outside the allowed range"
            ));
        }
    }
    Ok(())
}

/// The induced order of a valid embedding is a 1-queue layout.
pub fn leveled_to_queue(g: &Graph, emb: &LeveledEmbedding) -> Result<Layout> {
    validate_embedding(g, emb)?;
    let order = LinearOrder::new(emb.induced_order())?;
    let pages = g.edges().iter().map(|&e| (e, 1)).collect();
    let layout = Layout::new(Kind::Queue, order, 1, pages);
    let report = validate(g, &layout)?;
    if !report.valid {
        return Err(Error::Internal(format!(
            "leveled order has {} nested pairs",
            report.total
        )));
    }
    Ok(layout)
}

/// Cuts the order of a connected 1-queue layout into levels: the first level
/// is the first vertex, and each later level ends at the last vertex adjacent
/// to the previous level.
pub fn queue_to_arched_leveled(g: &Graph, layout: &Layout) -> Result<LeveledEmbedding> {
    if layout.kind != Kind::Queue || layout.k != 1 || !validate(g, layout)?.valid {
        return Err(Error::InvalidLayout(
            "expected a valid 1-queue layout".into(),
        ));
    }
    if !g.is_connected() {
        return Err(Error::InvalidInput("the graph must be connected".into()));
    }
    let order = &layout.order;
    let n = g.n();
    if n == 0 {
        return Ok(LeveledEmbedding {
            levels: Vec::new(),
            arches: Vec::new(),
        });
    }
    let mut levels: Vec<Vec<Vertex>> = vec![vec![order.at(0)]];
    let mut start = 0;
    let mut end = 0;
    while end + 1 < n {
        let last = (start..=end)
            .flat_map(|p| g.neighbors(order.at(p)).iter().map(|&w| order.pos(w)))
            .filter(|&q| q > end)
            .max()
            .ok_or_else(|| Error::Internal("connected graph with an unreachable suffix".into()))?;
        start = end + 1;
        end = last;
        levels.push((start..=end).map(|p| order.at(p)).collect());
    }
    let mut level_of = vec![0; n];
    for (i, level) in levels.iter().enumerate() {
        for &v in level {
            level_of[v] = i;
        }
    }
    let arches = g
        .edges()
        .iter()
        .copied()
        .filter(|e| level_of[e.0] == level_of[e.1])
        .collect();
    let emb = LeveledEmbedding { levels, arches };
    validate_embedding(g, &emb)?;
    Ok(emb)
}
