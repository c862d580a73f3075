//! Seeded random corpora. All generators take the RNG explicitly so a seed
//! fixes the output byte for byte.

use super::{Graph, KTreeBuild, Vertex};
use crate::error::{Error, Result};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_permutation<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Vec<Vertex> {
    let mut p: Vec<Vertex> = (0..n).collect();
    p.shuffle(rng);
    p
}

/// Uniform random recursive tree with shuffled vertex ids.
pub fn random_tree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "tree needs at least 1 vertex".into(),
        ));
    }
    let edges: Vec<_> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    Graph::from_edges(n, edges)?.relabel(&random_permutation(n, rng))
}

/// Connected graph with exactly one cycle, of length between 3 and `n`.
pub fn random_unicyclic<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "unicyclic graph needs at least 3 vertices, got {n}"
        )));
    }
    let k = rng.gen_range(3..=n);
    let mut edges: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    edges.extend((k..n).map(|v| (rng.gen_range(0..v), v)));
    Graph::from_edges(n, edges)?.relabel(&random_permutation(n, rng))
}

/// Random k-tree build on `n` vertices; each attachment picks a uniform
/// k-clique among those created so far.
pub fn random_k_tree_build<R: Rng + ?Sized>(k: usize, n: usize, rng: &mut R) -> Result<KTreeBuild> {
    if k == 0 || n < k {
        return Err(Error::InvalidParameter(format!(
            "a {k}-tree needs k >= 1 and at least k vertices, got {n}"
        )));
    }
    let mut cliques: Vec<Vec<Vertex>> = vec![(0..k).collect()];
    let mut build = KTreeBuild::new(k);
    for new in k..n {
        let base = cliques[rng.gen_range(0..cliques.len())].clone();
        for skip in 0..k {
            let mut c: Vec<Vertex> = base
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != skip)
                .map(|(_, &v)| v)
                .collect();
            c.push(new);
            cliques.push(c);
        }
        build.attachments.push(base);
    }
    Ok(build)
}

/// Random triangulation of a convex `n`-gon. Returns the graph and its
/// outer boundary in cyclic order.
pub fn random_polygon_triangulation<R: Rng + ?Sized>(
    n: usize,
    rng: &mut R,
) -> Result<(Graph, Vec<Vertex>)> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "polygon needs at least 3 vertices, got {n}"
        )));
    }
    let mut edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    let mut stack = vec![(0, n - 1)];
    while let Some((i, j)) = stack.pop() {
        if j - i < 2 {
            continue;
        }
        let apex = rng.gen_range(i + 1..j);
        if apex - i >= 2 {
            edges.push((i, apex));
        }
        if j - apex >= 2 {
            edges.push((apex, j));
        }
        stack.push((i, apex));
        stack.push((apex, j));
    }
    let perm = random_permutation(n, rng);
    let g = Graph::from_edges(n, edges)?.relabel(&perm)?;
    let boundary = (0..n).map(|i| perm[i]).collect();
    Ok((g, boundary))
}

/// Uniform graph with `n` vertices and `m` edges.
pub fn random_graph<R: Rng + ?Sized>(n: usize, m: usize, rng: &mut R) -> Result<Graph> {
    let all: Vec<(Vertex, Vertex)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect();
    if m > all.len() {
        return Err(Error::InvalidParameter(format!(
            "{m} edges do not fit on {n} vertices"
        )));
    }
    let edges = all.choose_multiple(rng, m).copied();
    Graph::from_edges(n, edges)
}
