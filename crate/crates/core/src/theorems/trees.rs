use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Leaf and support structure of a tree together with the three lower
/// bounds evaluated on it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TreeProfile {
    pub leaves: VertexSet,
    pub supports: VertexSet,
    pub strong_supports: VertexSet,
    /// Number of strong support vertices.
    pub k: usize,
    /// Sum of `deg(v) - 1` over the strong support vertices.
    pub strong_degree_sum: usize,
    /// `2k + 2(|leaves| - strong_degree_sum)`; may be non-positive.
    pub bound_t54: i64,
    pub bound_c55: usize,
    pub bound_c56: usize,
    pub diameter: usize,
    pub is_star: bool,
}

impl TreeProfile {
    /// The tree bound clamped to the universal floor of 2.
    pub fn bound_t54_reported(&self) -> usize {
        self.bound_t54.max(2) as usize
    }

    /// Every leaf hangs off a strong support vertex.
    pub fn all_leaves_on_strong_supports(&self) -> bool {
        self.strong_supports == self.supports
    }

    pub fn has_strong_support(&self) -> bool {
        self.k > 0
    }
}

pub fn tree_profile(t: &Graph) -> Result<TreeProfile> {
    if !t.is_tree() {
        return Err(Error::NotATree(format!(
            "order {} and size {}{}",
            t.n(),
            t.m(),
            if t.is_connected() {
                ""
            } else {
                ", disconnected"
            }
        )));
    }
    let n = t.n();
    let profile = t.degree_profile();
    let mut leaves = VertexSet::new(n);
    let mut supports = VertexSet::new(n);
    let mut leaf_count = vec![0usize; n];
    for &l in &profile.leaves {
        leaves.insert(l);
        let s = t.neighbors(l)[0];
        supports.insert(s);
        leaf_count[s] += 1;
    }
    let strong_supports = VertexSet::from_vertices(n, (0..n).filter(|&v| leaf_count[v] >= 2))?;
    let k = strong_supports.len();
    let strong_degree_sum: usize = strong_supports.iter().map(|v| t.degree(v) - 1).sum();
    let bound_t54 = 2 * k as i64 + 2 * (leaves.len() as i64 - strong_degree_sum as i64);
    Ok(TreeProfile {
        bound_c55: 2 * k,
        bound_c56: 2 * leaves.len(),
        k,
        strong_degree_sum,
        bound_t54,
        diameter: t.diameter()?,
        is_star: n >= 3 && profile.max_degree == n - 1,
        leaves,
        supports,
        strong_supports,
    })
}

/// Center `0` joined to `k` strong supports, each carrying two leaves.
pub fn strong_spider(k: usize) -> Graph {
    let edges = (0..k).flat_map(|i| {
        let s = 1 + 3 * i;
        [(0, s), (s, s + 1), (s, s + 2)]
    });
    Graph::from_edges(1 + 3 * k, edges).expect("spider edges are simple")
}

/// Center `0` with `k` legs, each a path of `len` further vertices.
pub fn leg_spider(k: usize, len: usize) -> Graph {
    let edges = (0..k).flat_map(|i| {
        let first = 1 + len * i;
        std::iter::once((0, first)).chain((1..len).map(move |j| (first + j - 1, first + j)))
    });
    Graph::from_edges(1 + k * len, edges).expect("spider edges are simple")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::FamilySpec;

    #[test]
    fn strong_spider_profile() {
        let p = tree_profile(&strong_spider(3)).unwrap();
        assert_eq!(p.k, 3);
        assert_eq!(p.leaves.len(), 6);
        assert_eq!(p.strong_degree_sum, 6);
        assert_eq!((p.bound_t54, p.bound_c55), (6, 6));
        assert_eq!(p.diameter, 4);
        assert!(p.all_leaves_on_strong_supports() && !p.is_star);
    }

    #[test]
    fn path_five_profile() {
        let p = tree_profile(&FamilySpec::Path(5).generate().unwrap()).unwrap();
        assert_eq!((p.k, p.leaves.len(), p.bound_c56, p.diameter), (0, 2, 4, 4));
        assert!(!p.has_strong_support());
        let q = tree_profile(&leg_spider(2, 2)).unwrap();
        assert_eq!((q.k, q.leaves.len(), q.bound_c56, q.diameter), (0, 2, 4, 4));
    }

    #[test]
    fn star_is_flagged() {
        let p = tree_profile(&FamilySpec::Star(4).generate().unwrap()).unwrap();
        assert!(p.is_star);
    }

    #[test]
    fn non_trees_rejected() {
        assert!(tree_profile(&FamilySpec::Cycle(4).generate().unwrap()).is_err());
        assert!(tree_profile(&Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap()).is_err());
    }

    #[test]
    fn broom_bound_and_clamp() {
        // 0 - 1 - 2 with leaves 3..=6 on vertex 2.
        let t = Graph::from_edges(7, [(0, 1), (1, 2), (2, 3), (2, 4), (2, 5), (2, 6)]).unwrap();
        let mut p = tree_profile(&t).unwrap();
        assert_eq!((p.k, p.strong_degree_sum, p.leaves.len()), (1, 4, 5));
        assert_eq!(p.bound_t54, 4);
        assert!(!p.all_leaves_on_strong_supports());
        p.bound_t54 = -2;
        assert_eq!(p.bound_t54_reported(), 2);
    }
}
