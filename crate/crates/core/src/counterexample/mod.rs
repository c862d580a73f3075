//! Graphs `S_a □ H_n` with bounded queue number, and the extraction of large
//! twists from any vertex order of them.
//!
//! [`run_pipeline`] chains the stages: keep leaves that are monotone at every
//! grid vertex, colour grid vertices by direction, find a monochromatic grid
//! path `Q`, classify the leaf copies of `Q` pairwise as crossing or
//! separated, pick a homogeneous set and read off a twist. Every twist is
//! checked pairwise before it is returned.

mod paths;
mod ramsey;
mod refine;

pub use paths::{
    classify_path_pairs, extract_twist_case1, extract_twist_case2, homogeneous_paths, Homogeneous,
    PairKind, PairMatrix,
};
pub use ramsey::{binomial, ramsey_number, verify_ramsey, RamseyMode, RAMSEY_VERIFY_EDGE_LIMIT};
pub use refine::{
    find_mono_path, grid_coloring, monotone_refinement, product_id, refinement_guarantee, Color,
};

use crate::error::{Error, Result};
use crate::families::{hex_strict_queue_layout, product_queue_layout, tree_queue_layout};
use crate::graph::{cartesian_product, hex_dual, star, Graph, Vertex};
use crate::layout::{validate, Kind, Layout, LinearOrder, Witness};
use num_bigint::BigUint;
use serde::{Serialize, Serializer};

/// `S_a □ H_n` with ids `s·n² + p` ([`product_id`]) and a queue layout on at
/// most 4 queues: 3 strict queues for the grid, 1 for the star copies.
pub fn counterexample_graph(a: usize, n: usize) -> Result<(Graph, Layout)> {
    let s = star(a)?;
    let (h, lh) = hex_strict_queue_layout(n)?;
    let (ls, _) = tree_queue_layout(&s, 0)?;
    // grid-major product: vertex p·(a+1) + s
    let (_, lx) = product_queue_layout(&h, &lh, &s, &ls)?;
    let g = cartesian_product(&s, &hex_dual(n)?);
    let to_g = |v: Vertex| product_id(n, v % (a + 1), v / (a + 1));
    let order = LinearOrder::new(lx.order.as_slice().iter().map(|&v| to_g(v)).collect())?;
    let pages = lx
        .pages
        .iter()
        .map(|(e, &p)| (crate::graph::Edge::new(to_g(e.0), to_g(e.1)), p))
        .collect();
    let layout = Layout::compact(Kind::Queue, order, pages);
    let report = validate(&g, &layout)?;
    if !report.valid || layout.k > 4 {
        return Err(Error::TheoremViolation(format!(
            "product layout uses {} queues with {} violations",
            layout.k, report.total
        )));
    }
    Ok((g, layout))
}

fn as_decimal<S: Serializer>(b: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&b.to_string())
}

/// Parameters forcing more than `s` stacks: grid size `n = 2s+1`, `c = 2s+2`
/// separated or `d = 4n²(s+1)+1` crossing paths, `b` paths enough for either,
/// and `a = b^(2^(n²-1))` leaves, reported through `log2_a`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PipelineParams {
    pub s: usize,
    pub n: usize,
    pub c: usize,
    pub d: usize,
    #[serde(serialize_with = "as_decimal")]
    pub b: BigUint,
    pub log2_b: f64,
    /// `log2` of the exponent `2^(n²-1)`.
    pub exponent_log2: usize,
    pub log2_a: f64,
}

pub(crate) fn log2_big(b: &BigUint) -> f64 {
    let bits = b.bits();
    if bits == 0 {
        return f64::NEG_INFINITY;
    }
    let shift = bits.saturating_sub(53);
    let top = (b >> shift).to_u64_digits().first().copied().unwrap_or(0);
    shift as f64 + (top as f64).log2()
}

pub fn parameters_for(s: usize) -> Result<PipelineParams> {
    if s == 0 {
        return Err(Error::InvalidParameter("s must be at least 1".into()));
    }
    let n = 2 * s + 1;
    let c = 2 * s + 2;
    let d = 4 * n * n * (s + 1) + 1;
    let b = ramsey_number(c, d, RamseyMode::Upper)?;
    let log2_b = log2_big(&b);
    let exponent_log2 = n * n - 1;
    Ok(PipelineParams {
        s,
        n,
        c,
        d,
        b,
        log2_b,
        exponent_log2,
        log2_a: 2f64.powi(exponent_log2 as i32) * log2_b,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CaseTag {
    Case1,
    Case2,
}

/// Why a run ended without a twist.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Insufficiency {
    pub paths: usize,
    pub c: usize,
    pub d: usize,
    pub max_separated: usize,
    pub max_crossing: usize,
}

/// Everything one run of [`run_pipeline`] derived from its order.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ProofTrace {
    pub a: usize,
    pub n: usize,
    /// Refined leaves in their order at grid vertex 0.
    pub leaf_subsequence: Vec<Vertex>,
    pub grid_coloring: Vec<Color>,
    pub path_color: Color,
    /// Grid vertices `q_1 .. q_n`.
    pub mono_path: Vec<Vertex>,
    /// Leaves indexing the paths, reversed from `leaf_subsequence` when the
    /// path is blue so that they are increasing along it.
    pub path_leaves: Vec<Vertex>,
    pub pair_matrix: PairMatrix,
    pub case_tag: Option<CaseTag>,
    /// Leaves of the homogeneous paths.
    pub chosen_leaves: Vec<Vertex>,
    pub twist: Option<Witness>,
    /// Stacks needed by any stack layout with this order.
    pub stack_lower_bound: usize,
    pub insufficiency: Option<Insufficiency>,
}

/// Runs the extraction on an order of `S_a □ H_n` looking for `c` separated or
/// `d` crossing leaf paths.
pub fn run_pipeline(
    a: usize,
    n: usize,
    order: &LinearOrder,
    c: usize,
    d: usize,
) -> Result<ProofTrace> {
    if c < 2 || d < 2 {
        return Err(Error::InvalidParameter(format!(
            "need c >= 2 and d >= 2, got {c} and {d}"
        )));
    }
    let leaves = monotone_refinement(order, a, n)?;
    let coloring = grid_coloring(order, &leaves, a, n)?;
    let (path_color, mono_path) = find_mono_path(n, &coloring)?;
    let mut path_leaves = leaves.clone();
    if path_color == Color::Blue {
        path_leaves.reverse();
    }
    let g = cartesian_product(&star(a)?, &hex_dual(n)?);
    let copy =
        |s: usize| -> Vec<Vertex> { mono_path.iter().map(|&q| product_id(n, s, q)).collect() };
    let paths: Vec<Vec<Vertex>> = path_leaves.iter().map(|&u| copy(u)).collect();
    let pair_matrix = classify_path_pairs(&g, order, &paths)?;

    let (case_tag, chosen, twist, insufficiency) = match homogeneous_paths(&pair_matrix, c, d) {
        Homogeneous::Case1(idx) => {
            let picked: Vec<Vec<Vertex>> = idx.iter().map(|&i| paths[i].clone()).collect();
            let w = extract_twist_case1(&g, order, &picked, &copy(0))?;
            (Some(CaseTag::Case1), idx, Some(w), None)
        }
        Homogeneous::Case2(idx) => {
            let picked: Vec<Vec<Vertex>> = idx.iter().map(|&i| paths[i].clone()).collect();
            let w = extract_twist_case2(&g, order, &picked)?;
            (Some(CaseTag::Case2), idx, Some(w), None)
        }
        Homogeneous::Insufficient {
            paths,
            max_separated,
            max_crossing,
        } => (
            None,
            Vec::new(),
            None,
            Some(Insufficiency {
                paths,
                c,
                d,
                max_separated,
                max_crossing,
            }),
        ),
    };
    Ok(ProofTrace {
        a,
        n,
        leaf_subsequence: leaves,
        grid_coloring: coloring,
        path_color,
        mono_path,
        chosen_leaves: chosen.iter().map(|&i| path_leaves[i]).collect(),
        path_leaves,
        pair_matrix,
        case_tag,
        stack_lower_bound: twist.as_ref().map_or(0, Witness::size),
        twist,
        insufficiency,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::layout::min_stacks_fixed_order;
    use crate::layout::Mode;

    #[test]
    fn small_products_have_four_queues() {
        let (g, l) = counterexample_graph(5, 3).unwrap();
        assert_eq!((g.n(), g.m()), (54, 141));
        assert!(l.k <= 4);
        let (g, l) = counterexample_graph(1, 1).unwrap();
        assert_eq!((g.m(), l.pages_used()), (1, 1));
        assert!(counterexample_graph(20, 4).unwrap().1.k <= 4);
    }

    #[test]
    fn parameters_for_one() {
        let p = parameters_for(1).unwrap();
        assert_eq!((p.n, p.c, p.d, p.exponent_log2), (3, 4, 73, 8));
        assert_eq!(p.b, binomial(75, 3));
        assert!((p.log2_a - 256.0 * p.log2_b).abs() < 1e-6);
        assert!((p.log2_b - 67525f64.log2()).abs() < 1e-9);
        assert!(parameters_for(0).is_err());
    }

    #[test]
    fn log2_of_large_integers() {
        let big = BigUint::from(1u32) << 200u32;
        assert_eq!(log2_big(&big), 200.0);
        assert!((log2_big(&(big * 3u32)) - (200.0 + 3f64.log2())).abs() < 1e-9);
    }

    #[test]
    fn identity_order_gives_case1() {
        let t = run_pipeline(6, 2, &LinearOrder::identity(28), 3, 3).unwrap();
        assert_eq!(t.leaf_subsequence, (1..=6).collect::<Vec<_>>());
        assert_eq!(t.case_tag, Some(CaseTag::Case1));
        assert!(t.stack_lower_bound >= 1);
    }

    #[test]
    fn layout_order_gives_case2() {
        let (g, l) = counterexample_graph(6, 2).unwrap();
        let t = run_pipeline(6, 2, &l.order, 3, 3).unwrap();
        assert_eq!(t.case_tag, Some(CaseTag::Case2));
        assert!(t.stack_lower_bound >= 2);
        let w = t.twist.unwrap();
        w.verify(&l.order).unwrap();
        let stacks = min_stacks_fixed_order(&g, &l.order, Mode::Greedy).unwrap();
        assert!(stacks.k >= w.size());
    }

    #[test]
    fn one_leaf_is_insufficient() {
        let t = run_pipeline(1, 2, &LinearOrder::identity(8), 3, 3).unwrap();
        assert!(t.twist.is_none());
        assert_eq!(
            t.insufficiency,
            Some(Insufficiency {
                paths: 1,
                c: 3,
                d: 3,
                max_separated: 1,
                max_crossing: 1
            })
        );
    }

    #[test]
    fn trace_serializes() {
        let t = run_pipeline(3, 2, &LinearOrder::identity(16), 2, 2).unwrap();
        let json = serde_json::to_value(&t).unwrap();
        assert_eq!(json["case_tag"], "case1");
        assert_eq!(json["pair_matrix"][0][0], serde_json::Value::Null);
        assert_eq!(json["pair_matrix"][0][1], "separated");
    }
}
