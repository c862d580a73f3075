use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::layout::{validate, Kind, Layout, LinearOrder};
use std::collections::VecDeque;

fn boundary_order(g: &Graph, boundary: &[Vertex]) -> Result<LinearOrder> {
    if boundary.len() != g.n() {
        return Err(Error::InvalidInput(format!(
            "boundary lists {} vertices, graph has {}",
            boundary.len(),
            g.n()
        )));
    }
    LinearOrder::new(boundary.to_vec()).map_err(|e| Error::InvalidInput(e.to_string()))
}

/// The boundary order with every edge on one page.
pub fn outerplanar_stack_layout(g: &Graph, boundary: &[Vertex]) -> Result<Layout> {
    let order = boundary_order(g, boundary)?;
    let edges = g.edges();
    for (i, &e) in edges.iter().enumerate() {
        if let Some(&f) = edges[i + 1..].iter().find(|&&f| order.crosses(e, f)) {
            return Err(Error::NotOuterplanar(e, f));
        }
    }
    let pages = edges.iter().map(|&e| (e, 1)).collect();
    Ok(Layout::compact(Kind::Stack, order, pages))
}

/// Two queues from a one-page layout: breadth-first layers from the first
/// boundary vertex, vertices ordered by layer and then by boundary position,
/// edges inside a layer on queue 1, edges between layers on queue 2.
pub fn one_stack_to_two_queue(g: &Graph, boundary: &[Vertex]) -> Result<Layout> {
    let stack = outerplanar_stack_layout(g, boundary)?;
    let mut layer = vec![usize::MAX; g.n()];
    for &s in boundary {
        if layer[s] != usize::MAX {
            continue;
        }
        layer[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                if layer[w] == usize::MAX {
                    layer[w] = layer[v] + 1;
                    queue.push_back(w);
                }
            }
        }
    }
    let pages = g
        .edges()
        .iter()
        .map(|&e| (e, if layer[e.0] == layer[e.1] { 1 } else { 2 }))
        .collect();
    let mut order = boundary.to_vec();
    order.sort_by_key(|&v| (layer[v], stack.order.pos(v)));
    let layout = Layout::compact(Kind::Queue, LinearOrder::new(order)?, pages);
    let report = validate(g, &layout)?;
    if !report.valid {
        return Err(Error::InvalidLayout(format!(
            "layered assignment has {} nested pairs for this boundary",
            report.total
        )));
    }
    Ok(layout)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::random::{random_polygon_triangulation, seeded};
    use crate::graph::{complete, cycle, fan};

    #[test]
    fn fixed_examples() {
        let c5 = cycle(5).unwrap();
        assert_eq!(
            outerplanar_stack_layout(&c5, &[0, 1, 2, 3, 4]).unwrap().k,
            1
        );
        let f5 = fan(5).unwrap();
        let boundary = [1, 2, 3, 4, 0];
        assert!(outerplanar_stack_layout(&f5, &boundary).is_ok());
        assert!(matches!(
            outerplanar_stack_layout(&complete(4).unwrap(), &[0, 1, 2, 3]),
            Err(Error::NotOuterplanar(_, _))
        ));
        let f6 = fan(6).unwrap();
        let l = one_stack_to_two_queue(&f6, &[0, 1, 2, 3, 4, 5]).unwrap();
        assert!(l.k <= 2);
        let c6 = cycle(6).unwrap();
        assert!(one_stack_to_two_queue(&c6, &[0, 1, 2, 3, 4, 5]).unwrap().k <= 2);
    }

    #[test]
    fn random_triangulations() {
        let mut rng = seeded(8);
        for i in 0..200 {
            let n = 3 + i % 10;
            let (g, boundary) = random_polygon_triangulation(n, &mut rng).unwrap();
            let l = one_stack_to_two_queue(&g, &boundary).unwrap();
            assert!(l.k <= 2);
        }
    }
}
