use crate::graph::{Edge, Graph, Label, Vertex};
use crate::layout::{Kind, Layout, LinearOrder};
use std::collections::{BTreeMap, VecDeque};

#[derive(Clone, Debug)]
pub struct ThreeStackSubdivision {
    pub graph: Graph,
    pub layout: Layout,
    /// Division vertices on each original edge, in sorted edge order.
    pub divisions: Vec<usize>,
}

const NONE: usize = usize::MAX;

/// A subdivision of `g` with a stack layout on at most three pages.
///
/// Original vertices keep ids `0..n` and follow a depth-first preorder.
/// Edges that fit on page 1 without crossing stay undivided, depth-first tree
/// edges first. Every other edge `uv` gets a division vertex right after `u`
/// and one right after `v`; those stubs share page 1 with the direct edges.
/// The remaining matching between stub ends is drawn on pages 2 and 3 as
/// non-crossing curves, one edge at a time: a breadth-first search over the
/// faces of what is already drawn finds the fewest spine crossings, and each
/// crossing becomes another division vertex. Division vertices follow the
/// originals in sorted edge order, each edge's in path order from its smaller
/// endpoint.
pub fn three_stack_subdivision(g: &Graph) -> ThreeStackSubdivision {
    let n = g.n();
    let (preorder, tree_edges) = dfs_preorder(g);
    let base = LinearOrder::new(preorder.clone()).expect("preorder is a permutation");

    let mut direct: Vec<Edge> = Vec::new();
    let candidates = tree_edges.iter().copied().chain(
        g.edges()
            .iter()
            .copied()
            .filter(|e| !tree_edges.contains(e)),
    );
    for e in candidates {
        if direct.iter().all(|&f| !base.crosses(e, f)) {
            direct.push(e);
        }
    }
    direct.sort_unstable();
    let failed: Vec<Edge> = g
        .edges()
        .iter()
        .copied()
        .filter(|e| direct.binary_search(e).is_err())
        .collect();

    // temporary node ids: originals, then allocation order
    let mut next_id = n;
    let mut paths: Vec<Vec<usize>> = Vec::with_capacity(failed.len());
    let mut stubs_after = vec![Vec::new(); n];
    for e in &failed {
        let (x, y) = (next_id, next_id + 1);
        next_id += 2;
        stubs_after[e.0].push(x);
        stubs_after[e.1].push(y);
        paths.push(vec![e.0, x, y, e.1]);
    }
    let mut spine: Vec<usize> = Vec::with_capacity(next_id);
    for &u in &preorder {
        spine.push(u);
        spine.extend(&stubs_after[u]);
    }

    let mut arcs: [Vec<(usize, usize)>; 2] = [Vec::new(), Vec::new()];
    let mut arc_page: Vec<(usize, usize, usize)> = Vec::new();
    for path in paths.iter_mut() {
        let (x, y) = (path[1], path[2]);
        let route = route(&spine, &arcs, next_id, x, y);
        let mut chain = vec![x];
        let mut ids = Vec::with_capacity(route.gaps.len());
        for _ in &route.gaps {
            ids.push(next_id);
            next_id += 1;
        }
        let mut by_gap: Vec<(usize, usize)> = route
            .gaps
            .iter()
            .copied()
            .zip(ids.iter().copied())
            .collect();
        by_gap.sort_unstable_by_key(|&(gap, _)| std::cmp::Reverse(gap));
        for (gap, id) in by_gap {
            spine.insert(gap, id);
        }
        chain.extend(&ids);
        chain.push(y);
        for (i, pair) in chain.windows(2).enumerate() {
            let side = route.sides[i];
            arcs[side].push((pair[0], pair[1]));
            arc_page.push((pair[0], pair[1], side + 2));
        }
        path.splice(1..3, chain);
    }

    // final numbering
    let mut final_id = vec![NONE; next_id];
    for (v, id) in final_id.iter_mut().enumerate().take(n) {
        *id = v;
    }
    let mut labels: Vec<Label> = (0..n).map(|v| g.label(v)).collect();
    let mut divisions = vec![0; g.m()];
    let mut fresh = n;
    let mut fi = 0;
    for (ei, e) in g.edges().iter().enumerate() {
        if fi < failed.len() && failed[fi] == *e {
            let inner = &paths[fi][1..paths[fi].len() - 1];
            divisions[ei] = inner.len();
            for (j, &t) in inner.iter().enumerate() {
                final_id[t] = fresh;
                fresh += 1;
                labels.push(Label::Division {
                    edge: *e,
                    index: j + 1,
                });
            }
            fi += 1;
        }
    }
    let mut pages: BTreeMap<Edge, usize> = BTreeMap::new();
    for &e in &direct {
        pages.insert(e, 1);
    }
    for path in &paths {
        let last = path.len() - 1;
        pages.insert(Edge::new(final_id[path[0]], final_id[path[1]]), 1);
        pages.insert(Edge::new(final_id[path[last - 1]], final_id[path[last]]), 1);
    }
    for &(a, b, p) in &arc_page {
        pages.insert(Edge::new(final_id[a], final_id[b]), p);
    }
    let plain = Graph::from_edges(fresh, pages.keys().map(|e| (e.0, e.1)))
        .expect("subdivision edges are simple");
    let graph = plain.clone().with_labels(labels).unwrap_or(plain);
    let order = LinearOrder::new(spine.iter().map(|&t| final_id[t]).collect())
        .expect("spine holds every vertex once");
    ThreeStackSubdivision {
        graph,
        layout: Layout::compact(Kind::Stack, order, pages),
        divisions,
    }
}

/// Preorder from vertex 0 with ascending children, restarting at the smallest
/// unvisited vertex; also returns the tree edges.
fn dfs_preorder(g: &Graph) -> (Vec<Vertex>, Vec<Edge>) {
    let mut seen = vec![false; g.n()];
    let mut order = Vec::with_capacity(g.n());
    let mut tree = Vec::new();
    for root in 0..g.n() {
        if seen[root] {
            continue;
        }
        let mut stack = vec![(root, NONE)];
        while let Some((v, parent)) = stack.pop() {
            if seen[v] {
                continue;
            }
            seen[v] = true;
            order.push(v);
            if parent != NONE {
                tree.push(Edge::new(parent, v));
            }
            for &w in g.neighbors(v).iter().rev() {
                if !seen[w] {
                    stack.push((w, v));
                }
            }
        }
    }
    (order, tree)
}

struct Route {
    /// Spine insertion indices of the crossings, in path order.
    gaps: Vec<usize>,
    /// Side (0 = page 2, 1 = page 3) of each segment, one more than `gaps`.
    sides: Vec<usize>,
}

/// Fewest spine crossings from `x` to `y` avoiding the drawn arcs. A face on
/// one side is named by the innermost arc above a gap; gap `g` sits between
/// `spine[g-1]` and `spine[g]` and joins the faces on both sides.
fn route(
    spine: &[usize],
    arcs: &[Vec<(usize, usize)>; 2],
    ids: usize,
    x: usize,
    y: usize,
) -> Route {
    let mut pos = vec![NONE; ids];
    for (i, &t) in spine.iter().enumerate() {
        pos[t] = i;
    }
    let gaps = spine.len() + 1;
    let mut face = [vec![0usize; gaps], vec![0usize; gaps]];
    for side in 0..2 {
        let mut width = vec![usize::MAX; gaps];
        for (ai, &(a, b)) in arcs[side].iter().enumerate() {
            let (l, r) = if pos[a] < pos[b] {
                (pos[a], pos[b])
            } else {
                (pos[b], pos[a])
            };
            for gap in l + 1..=r {
                if r - l < width[gap] {
                    width[gap] = r - l;
                    face[side][gap] = ai + 1;
                }
            }
        }
    }
    let stride = arcs[0].len().max(arcs[1].len()) + 1;
    let node = |side: usize, gap: usize| side * stride + face[side][gap];
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); 2 * stride];
    for gap in 0..gaps {
        let (a, b) = (node(0, gap), node(1, gap));
        adj[a].push((gap, b));
        adj[b].push((gap, a));
    }
    let (px, py) = (pos[x], pos[y]);
    let targets = [node(0, py), node(1, py)];
    let mut prev = vec![(NONE, NONE); 2 * stride];
    let mut seen = vec![false; 2 * stride];
    let mut queue = VecDeque::new();
    for start in [node(0, px), node(1, px)] {
        if !seen[start] {
            seen[start] = true;
            queue.push_back(start);
        }
    }
    let mut end = NONE;
    while let Some(r) = queue.pop_front() {
        if targets.contains(&r) {
            end = r;
            break;
        }
        for &(gap, s) in &adj[r] {
            if !seen[s] {
                seen[s] = true;
                prev[s] = (r, gap);
                queue.push_back(s);
            }
        }
    }
    assert!(
        end != NONE,
        "the complement of disjoint curves is connected"
    );
    let mut faces = vec![end];
    let mut crossings = Vec::new();
    let mut cur = end;
    while prev[cur].0 != NONE {
        crossings.push(prev[cur].1);
        cur = prev[cur].0;
        faces.push(cur);
    }
    faces.reverse();
    crossings.reverse();
    Route {
        gaps: crossings,
        sides: faces.iter().map(|&f| f / stride).collect(),
    }
}
