use super::{Edge, Graph, Label, Vertex};
use crate::error::{Error, Result};

pub const DEFAULT_VERTEX_COVER_LIMIT: usize = 20;

/// `G □ H`. Vertex `(g, h)` gets id `g * |V(H)| + h` and label `prod(g, h)`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Graph {
    let nh = h.n();
    let id = |a: Vertex, b: Vertex| a * nh + b;
    let mut edges = Vec::with_capacity(g.m() * nh + g.n() * h.m());
    for e in g.edges() {
        for b in 0..nh {
            edges.push((id(e.0, b), id(e.1, b)));
        }
    }
    for a in 0..g.n() {
        for e in h.edges() {
            edges.push((id(a, e.0), id(a, e.1)));
        }
    }
    let labels = (0..g.n())
        .flat_map(|a| (0..nh).map(move |b| (a, b)))
        .map(|(a, b)| Label::product(g.label(a), h.label(b)))
        .collect();
    Graph::from_edges_dedup(g.n() * nh, edges)
        .with_labels(labels)
        .expect("product labels are distinct")
}

/// Replaces every edge by a path with `k` internal vertices. The internal
/// vertices of the `i`-th edge (in sorted order) are `n + i*k .. n + (i+1)*k`,
/// running from the smaller endpoint to the larger one.
pub fn subdivide(g: &Graph, k: usize) -> Graph {
    let n = g.n();
    let mut edges = Vec::with_capacity((k + 1) * g.m());
    let mut labels: Vec<Label> = (0..n).map(|v| g.label(v)).collect();
    for (i, e) in g.edges().iter().enumerate() {
        let mut prev = e.0;
        for j in 1..=k {
            let d = n + i * k + (j - 1);
            edges.push((prev, d));
            labels.push(Label::Division { edge: *e, index: j });
            prev = d;
        }
        edges.push((prev, e.1));
    }
    let plain = Graph::from_edges_dedup(n + k * g.m(), edges);
    // labels can collide when the input already carries division labels
    plain.clone().with_labels(labels).unwrap_or(plain)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiconnectedComponent {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<Edge>,
}

/// Blocks of the graph (Hopcroft–Tarjan). Bridges form two-vertex blocks;
/// isolated vertices belong to no block.
pub fn biconnected_components(g: &Graph) -> Vec<BiconnectedComponent> {
    const NONE: usize = usize::MAX;
    let n = g.n();
    let mut disc = vec![NONE; n];
    let mut low = vec![0; n];
    let mut timer = 0;
    let mut edge_stack: Vec<Edge> = Vec::new();
    let mut out = Vec::new();

    for root in 0..n {
        if disc[root] != NONE {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        // (vertex, parent, next neighbour index)
        let mut stack = vec![(root, NONE, 0usize)];
        while let Some(frame) = stack.last_mut() {
            let (v, parent, i) = *frame;
            if i < g.degree(v) {
                frame.2 += 1;
                let w = g.neighbors(v)[i];
                if disc[w] == NONE {
                    edge_stack.push(Edge::new(v, w));
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    stack.push((w, v, 0));
                } else if w != parent && disc[w] < disc[v] {
                    edge_stack.push(Edge::new(v, w));
                    low[v] = low[v].min(disc[w]);
                }
                continue;
            }
            stack.pop();
            if let Some(&(u, _, _)) = stack.last() {
                low[u] = low[u].min(low[v]);
                if low[v] >= disc[u] {
                    let target = Edge::new(u, v);
                    let mut edges = Vec::new();
                    while let Some(e) = edge_stack.pop() {
                        edges.push(e);
                        if e == target {
                            break;
                        }
                    }
                    edges.sort_unstable();
                    let mut vertices: Vec<Vertex> = edges.iter().flat_map(|e| [e.0, e.1]).collect();
                    vertices.sort_unstable();
                    vertices.dedup();
                    out.push(BiconnectedComponent { vertices, edges });
                }
            }
        }
    }
    out.sort_by(|a, b| a.edges.cmp(&b.edges));
    out
}

/// Minimum vertex cover by branch and bound, limited to
/// [`DEFAULT_VERTEX_COVER_LIMIT`] vertices.
pub fn vertex_cover_exact(g: &Graph) -> Result<Vec<Vertex>> {
    vertex_cover_exact_limited(g, DEFAULT_VERTEX_COVER_LIMIT)
}

pub fn vertex_cover_exact_limited(g: &Graph, limit: usize) -> Result<Vec<Vertex>> {
    if g.n() > limit {
        return Err(Error::SizeLimit {
            what: "vertex cover input",
            size: g.n(),
            limit,
        });
    }
    let mut best: Vec<Vertex> = (0..g.n()).filter(|&v| g.degree(v) > 0).collect();
    let mut in_cover = vec![false; g.n()];
    let mut chosen = Vec::new();
    cover_branch(g, &mut in_cover, &mut chosen, &mut best);
    best.sort_unstable();
    Ok(best)
}

fn cover_branch(
    g: &Graph,
    in_cover: &mut [bool],
    chosen: &mut Vec<Vertex>,
    best: &mut Vec<Vertex>,
) {
    let uncovered: Vec<Edge> = g
        .edges()
        .iter()
        .copied()
        .filter(|e| !in_cover[e.0] && !in_cover[e.1])
        .collect();
    if uncovered.is_empty() {
        if chosen.len() < best.len() {
            *best = chosen.clone();
        }
        return;
    }
    // a maximal matching among uncovered edges needs one cover vertex per edge
    let mut matched = vec![false; g.n()];
    let mut matching = 0;
    for e in &uncovered {
        if !matched[e.0] && !matched[e.1] {
            matched[e.0] = true;
            matched[e.1] = true;
            matching += 1;
        }
    }
    if chosen.len() + matching >= best.len() {
        return;
    }
    let mut degree = vec![0usize; g.n()];
    for e in &uncovered {
        degree[e.0] += 1;
        degree[e.1] += 1;
    }
    let v = (0..g.n())
        .max_by_key(|&x| (degree[x], usize::MAX - x))
        .unwrap();

    in_cover[v] = true;
    chosen.push(v);
    cover_branch(g, in_cover, chosen, best);
    chosen.pop();
    in_cover[v] = false;

    // otherwise every uncovered neighbour of v is in the cover
    let nbrs: Vec<Vertex> = g
        .neighbors(v)
        .iter()
        .copied()
        .filter(|&w| !in_cover[w])
        .collect();
    for &w in &nbrs {
        in_cover[w] = true;
        chosen.push(w);
    }
    cover_branch(g, in_cover, chosen, best);
    for &w in &nbrs {
        in_cover[w] = false;
        chosen.pop();
    }
}
