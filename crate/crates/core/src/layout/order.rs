use crate::error::{Error, Result};
use crate::graph::{check_permutation, Edge, Vertex};
use serde::{Deserialize, Serialize};

/// A bijection between vertices and spine positions `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vertex>", into = "Vec<Vertex>")]
pub struct LinearOrder {
    order: Vec<Vertex>,
    pos: Vec<usize>,
}

impl LinearOrder {
    /// `order[i]` is the vertex at position `i`.
    pub fn new(order: Vec<Vertex>) -> Result<Self> {
        check_permutation(&order, order.len())
            .map_err(|e| Error::MalformedLayout(format!("order is not a permutation: {e}")))?;
        let mut pos = vec![0; order.len()];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        Ok(LinearOrder { order, pos })
    }

    pub fn identity(n: usize) -> Self {
        LinearOrder {
            order: (0..n).collect(),
            pos: (0..n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn pos(&self, v: Vertex) -> usize {
        self.pos[v]
    }

    pub fn at(&self, i: usize) -> Vertex {
        self.order[i]
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.order
    }

    pub fn positions(&self) -> &[usize] {
        &self.pos
    }

    pub fn precedes(&self, a: Vertex, b: Vertex) -> bool {
        self.pos[a] < self.pos[b]
    }

    pub fn reversed(&self) -> Self {
        let mut order = self.order.clone();
        order.reverse();
        LinearOrder::new(order).expect("reversal of a permutation")
    }

    /// Endpoint positions of `e`, left first.
    pub fn span(&self, e: Edge) -> (usize, usize) {
        let (a, b) = (self.pos[e.0], self.pos[e.1]);
        if a < b {
            (a, b)
        } else {
            (b, a)
        }
    }

    /// Strictly interleaving endpoints. Edges sharing an endpoint never cross.
    pub fn crosses(&self, e: Edge, f: Edge) -> bool {
        let (a, b) = self.span(e);
        let (c, d) = self.span(f);
        (a < c && c < b && b < d) || (c < a && a < d && d < b)
    }

    /// One edge strictly inside the other. Edges sharing an endpoint never nest.
    pub fn nests(&self, e: Edge, f: Edge) -> bool {
        let (a, b) = self.span(e);
        let (c, d) = self.span(f);
        (a < c && d < b) || (c < a && b < d)
    }
}

impl TryFrom<Vec<Vertex>> for LinearOrder {
    type Error = Error;

    fn try_from(order: Vec<Vertex>) -> Result<Self> {
        LinearOrder::new(order)
    }
}

impl From<LinearOrder> for Vec<Vertex> {
    fn from(o: LinearOrder) -> Self {
        o.order
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn positions_invert_order() {
        let o = LinearOrder::new(vec![2, 0, 1]).unwrap();
        assert_eq!(o.pos(2), 0);
        assert_eq!(o.at(2), 1);
        assert_eq!(o.reversed().as_slice(), &[1, 0, 2]);
        assert!(LinearOrder::new(vec![0, 0]).is_err());
        assert!(LinearOrder::new(vec![1, 2]).is_err());
    }

    #[test]
    fn cross_and_nest() {
        let o = LinearOrder::identity(6);
        assert!(o.crosses(Edge(0, 3), Edge(1, 4)));
        assert!(o.nests(Edge(0, 5), Edge(1, 4)));
        assert!(!o.crosses(Edge(0, 1), Edge(0, 2)));
        assert!(!o.nests(Edge(0, 2), Edge(0, 1)));
        assert!(!o.crosses(Edge(0, 1), Edge(2, 3)));
        assert!(!o.nests(Edge(0, 2), Edge(1, 3)));
    }
}
