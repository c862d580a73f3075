use super::{Graph, Vertex};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Recipe for a k-tree: start from `K_k` on vertices `0..k`, then attachment
/// `i` adds vertex `k + i` adjacent to the listed k-clique.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KTreeBuild {
    pub k: usize,
    pub attachments: Vec<Vec<Vertex>>,
}

impl KTreeBuild {
    pub fn new(k: usize) -> Self {
        KTreeBuild {
            k,
            attachments: Vec::new(),
        }
    }

    pub fn attach(mut self, clique: impl Into<Vec<Vertex>>) -> Self {
        self.attachments.push(clique.into());
        self
    }

    pub fn vertex_count(&self) -> usize {
        self.k + self.attachments.len()
    }

    /// Reverse build order. Every vertex's later neighbours form a clique.
    pub fn perfect_elimination_order(&self) -> Vec<Vertex> {
        (0..self.vertex_count()).rev().collect()
    }

    /// Checks every attachment against the graph built so far.
    pub fn validate(&self) -> Result<()> {
        self.edges().map(|_| ())
    }

    #[allow(clippy::needless_range_loop)]
    fn edges(&self) -> Result<Vec<(Vertex, Vertex)>> {
        if self.k == 0 {
            return Err(Error::InvalidBuild("k must be at least 1".into()));
        }
        let total = self.vertex_count();
        let mut adj = vec![vec![false; total]; total];
        let mut edges = Vec::new();
        for a in 0..self.k {
            for b in a + 1..self.k {
                adj[a][b] = true;
                adj[b][a] = true;
                edges.push((a, b));
            }
        }
        for (i, set) in self.attachments.iter().enumerate() {
            let new = self.k + i;
            if set.len() != self.k {
                return Err(Error::InvalidBuild(format!(
                    "attachment {i} has {} vertices, expected {}",
                    set.len(),
                    self.k
                )));
            }
            if let Some(&x) = set.iter().find(|&&x| x >= new) {
                return Err(Error::InvalidBuild(format!(
                    "attachment {i} references vertex {x}, which does not exist yet"
                )));
            }
            for (j, &x) in set.iter().enumerate() {
                for &y in &set[j + 1..] {
                    if x == y {
                        return Err(Error::InvalidBuild(format!(
                            "attachment {i} repeats vertex {x}"
                        )));
                    }
                    if !adj[x][y] {
                        return Err(Error::InvalidBuild(format!(
                            "attachment {i}: vertices {x} and {y} are not adjacent"
                        )));
                    }
                }
            }
            for &x in set {
                adj[x][new] = true;
                adj[new][x] = true;
                edges.push((x, new));
            }
        }
        Ok(edges)
    }
}

pub fn make_k_tree(build: &KTreeBuild) -> Result<Graph> {
    let edges = build.edges()?;
    Graph::from_edges(build.vertex_count(), edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn base_case_is_complete() {
        let g = make_k_tree(&KTreeBuild::new(2)).unwrap();
        assert_eq!((g.n(), g.m()), (2, 1));
    }

    #[test]
    fn two_tree_with_two_attachments() {
        let b = KTreeBuild::new(2).attach([0, 1]).attach([1, 2]);
        let g = make_k_tree(&b).unwrap();
        assert_eq!((g.n(), g.m()), (4, 5));
        let expected = [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)];
        assert!(expected.iter().all(|&(a, b)| g.has_edge(a, b)));
        assert_eq!(b.perfect_elimination_order(), vec![3, 2, 1, 0]);
    }

    #[test]
    fn three_tree_edge_count() {
        let mut b = KTreeBuild::new(3);
        for i in 0..5 {
            b = b.attach([i, i + 1, i + 2]);
        }
        let g = make_k_tree(&b).unwrap();
        assert_eq!((g.n(), g.m()), (8, 3 + 3 * 5));
    }

    #[test]
    fn invalid_builds() {
        // vertices 2 and 3 were both attached to {0,1} and are not adjacent
        let b = KTreeBuild::new(2)
            .attach([0, 1])
            .attach([0, 1])
            .attach([2, 3]);
        assert!(matches!(make_k_tree(&b), Err(Error::InvalidBuild(_))));
        let b = KTreeBuild::new(2).attach([0, 2]);
        assert!(make_k_tree(&b).is_err());
        let b = KTreeBuild::new(2).attach([0]);
        assert!(make_k_tree(&b).is_err());
        assert!(make_k_tree(&KTreeBuild::new(0)).is_err());
    }
}
