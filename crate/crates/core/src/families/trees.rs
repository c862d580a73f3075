use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, Vertex};
use crate::layout::{leveled_to_queue, Kind, Layout, LeveledEmbedding, LinearOrder};

fn check_tree(t: &Graph, root: Vertex) -> Result<()> {
    if !t.is_tree() {
        return Err(Error::InvalidInput("the graph is not a tree".into()));
    }
    if root >= t.n() {
        return Err(Error::InvalidInput(format!("root {root} is not a vertex")));
    }
    Ok(())
}

/// Depth-first discovery order, children ascending, every edge on page 1.
pub fn tree_stack_layout(t: &Graph, root: Vertex) -> Result<Layout> {
    check_tree(t, root)?;
    let mut order = Vec::with_capacity(t.n());
    let mut seen = vec![false; t.n()];
    let mut stack = vec![root];
    while let Some(v) = stack.pop() {
        if seen[v] {
            continue;
        }
        seen[v] = true;
        order.push(v);
        stack.extend(t.neighbors(v).iter().rev().filter(|&&w| !seen[w]));
    }
    let pages = t.edges().iter().map(|&e| (e, 1)).collect();
    Ok(Layout::compact(
        Kind::Stack,
        LinearOrder::new(order)?,
        pages,
    ))
}

/// Breadth-first layers as levels; within a layer children follow their
/// parents' order, then ascending id.
pub fn tree_queue_layout(t: &Graph, root: Vertex) -> Result<(Layout, LeveledEmbedding)> {
    check_tree(t, root)?;
    let mut assigned = vec![false; t.n()];
    assigned[root] = true;
    let mut levels = vec![vec![root]];
    loop {
        let mut next = Vec::new();
        for &v in levels.last().unwrap() {
            for &w in t.neighbors(v) {
                if !assigned[w] {
                    assigned[w] = true;
                    next.push(w);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        levels.push(next);
    }
    let emb = LeveledEmbedding {
        levels,
        arches: Vec::new(),
    };
    let layout = leveled_to_queue(t, &emb)?;
    Ok((
        Layout::compact(Kind::Queue, layout.order, layout.pages),
        emb,
    ))
}

#[derive(Clone, Copy)]
enum Role {
    Tree,
    /// Cycle vertex on the lower strand, with its successor.
    Lower(Vertex),
    /// Cycle vertex on the upper strand, with its successor.
    Upper(Vertex),
    /// `u_1` of an even cycle, alone on the first level.
    Start(Vertex, Vertex),
}

/// One queue for a connected graph with exactly one cycle `u_1 .. u_k`.
///
/// Cycle levels are `{u_1}, {u_2, u_k}, ..` for even `k` and
/// `{u_1, u_k}, {u_2, u_{k-1}}, ..` with the single arch `u_1 u_k` for odd
/// `k`. Pendant trees grow breadth first from their cycle roots. Lower-strand
/// vertices list their tree children before their cycle successor and
/// upper-strand vertices after it, so nothing ends up between the strands.
pub fn unicyclic_queue_layout(g: &Graph) -> Result<(Layout, LeveledEmbedding)> {
    let n = g.n();
    if n < 3 || g.m() != n || !g.is_connected() {
        return Err(Error::InvalidInput("the graph is not unicyclic".into()));
    }
    let cycle = find_cycle(g);
    let k = cycle.len();
    let on_cycle = {
        let mut c = vec![false; n];
        for &u in &cycle {
            c[u] = true;
        }
        c
    };
    let u = |i: usize| cycle[i - 1];
    let mut role = vec![Role::Tree; n];
    let first: Vec<Vertex>;
    if k.is_multiple_of(2) {
        role[u(1)] = Role::Start(u(2), u(k));
        for i in 2..=k / 2 {
            role[u(i)] = Role::Lower(u(i + 1));
            role[u(k - i + 2)] = Role::Upper(u(k - i + 1));
        }
        first = vec![u(1)];
    } else {
        for i in 1..k.div_ceil(2) {
            role[u(i)] = Role::Lower(u(i + 1));
            role[u(k - i + 1)] = Role::Upper(u(k - i));
        }
        first = vec![u(1), u(k)];
    }

    let mut assigned = vec![false; n];
    for &v in &first {
        assigned[v] = true;
    }
    let mut levels = vec![first];
    loop {
        let mut next = Vec::new();
        for &v in levels.last().unwrap() {
            let trees: Vec<Vertex> = g
                .neighbors(v)
                .iter()
                .copied()
                .filter(|&w| !on_cycle[w] && !assigned[w])
                .collect();
            let children: Vec<Vertex> = match role[v] {
                Role::Tree => trees,
                Role::Lower(s) => trees.into_iter().chain([s]).collect(),
                Role::Upper(s) => [s].into_iter().chain(trees).collect(),
                Role::Start(a, b) => trees.into_iter().chain([a, b]).collect(),
            };
            for w in children {
                if !assigned[w] {
                    assigned[w] = true;
                    next.push(w);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        levels.push(next);
    }
    let arches = if k % 2 == 1 {
        vec![Edge::new(u(1), u(k))]
    } else {
        Vec::new()
    };
    let emb = LeveledEmbedding { levels, arches };
    let layout = leveled_to_queue(g, &emb)?;
    Ok((layout, emb))
}

/// The cycle of a unicyclic graph, from its smallest vertex towards the
/// smaller of that vertex's two cycle neighbours.
fn find_cycle(g: &Graph) -> Vec<Vertex> {
    let n = g.n();
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut leaves: Vec<Vertex> = (0..n).filter(|&v| degree[v] == 1).collect();
    while let Some(v) = leaves.pop() {
        removed[v] = true;
        for &w in g.neighbors(v) {
            if !removed[w] {
                degree[w] -= 1;
                if degree[w] == 1 {
                    leaves.push(w);
                }
            }
        }
    }
    let start = (0..n).find(|&v| !removed[v]).expect("a cycle remains");
    let next_on_cycle = |v: Vertex, not: Vertex| {
        g.neighbors(v)
            .iter()
            .copied()
            .find(|&w| !removed[w] && w != not)
            .expect("cycle vertices have two cycle neighbours")
    };
    let mut cycle = vec![start];
    let mut prev = start;
    let mut cur = next_on_cycle(start, usize::MAX);
    while cur != start {
        cycle.push(cur);
        let nxt = next_on_cycle(cur, prev);
        prev = cur;
        cur = nxt;
    }
    cycle
}
