//! Domination rules and the induced perfect-matching test.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum DominationKind {
    #[serde(rename = "dom")]
    Dominating,
    #[serde(rename = "tdom")]
    TotalDominating,
    #[serde(rename = "dd")]
    Disjunctive,
    #[serde(rename = "tdd")]
    TotalDisjunctive,
    #[serde(rename = "pr")]
    Paired,
    #[serde(rename = "pdd")]
    PairedDisjunctive,
}

impl DominationKind {
    pub const ALL: [DominationKind; 6] = [
        DominationKind::Dominating,
        DominationKind::TotalDominating,
        DominationKind::Disjunctive,
        DominationKind::TotalDisjunctive,
        DominationKind::Paired,
        DominationKind::PairedDisjunctive,
    ];

    /// Members of the set must themselves be covered.
    pub fn is_total(self) -> bool {
        matches!(
            self,
            DominationKind::TotalDominating | DominationKind::TotalDisjunctive
        )
    }

    /// Two members at distance two also cover a vertex.
    pub fn is_disjunctive(self) -> bool {
        matches!(
            self,
            DominationKind::Disjunctive
                | DominationKind::TotalDisjunctive
                | DominationKind::PairedDisjunctive
        )
    }

    /// The set must induce a perfect matching (and so has even size).
    pub fn is_paired(self) -> bool {
        matches!(
            self,
            DominationKind::Paired | DominationKind::PairedDisjunctive
        )
    }

    pub fn short_name(self) -> &'static str {
        match self {
            DominationKind::Dominating => "dom",
            DominationKind::TotalDominating => "tdom",
            DominationKind::Disjunctive => "dd",
            DominationKind::TotalDisjunctive => "tdd",
            DominationKind::Paired => "pr",
            DominationKind::PairedDisjunctive => "pdd",
        }
    }
}

impl fmt::Display for DominationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short_name())
    }
}

impl FromStr for DominationKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let kind = match s.to_ascii_lowercase().replace(['-', '_'], "").as_str() {
            "dom" | "dominating" | "gamma" => DominationKind::Dominating,
            "tdom" | "total" | "totaldominating" => DominationKind::TotalDominating,
            "dd" | "disjunctive" => DominationKind::Disjunctive,
            "tdd" | "totaldisjunctive" => DominationKind::TotalDisjunctive,
            "pr" | "paired" => DominationKind::Paired,
            "pdd" | "paireddisjunctive" => DominationKind::PairedDisjunctive,
            _ => {
                return Err(Error::InvalidArgument(format!(
                    "unknown domination kind {s:?}"
                )))
            }
        };
        Ok(kind)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DominationVerdict {
    pub satisfied: bool,
    /// Vertices failing the coverage rule.
    pub uncovered: VertexSet,
    /// Set for paired kinds when the induced subgraph has no perfect matching.
    pub matching_failed: bool,
    /// A perfect matching of the induced subgraph, for paired kinds.
    pub matching: Option<Vec<(Vertex, Vertex)>>,
}

impl DominationVerdict {
    /// All reported violators: the uncovered vertices, plus the whole
    /// candidate set when its matching condition fails.
    pub fn violators(&self, d: &VertexSet) -> VertexSet {
        if self.matching_failed {
            self.uncovered.union(d)
        } else {
            self.uncovered.clone()
        }
    }
}

/// Vertices at distance exactly two from `v`.
pub fn distance_two(g: &Graph, v: Vertex) -> Vec<Vertex> {
    let mut out: Vec<Vertex> = g
        .neighbors(v)
        .iter()
        .flat_map(|&w| g.neighbors(w).iter().copied())
        .filter(|&x| x != v && !g.has_edge(v, x))
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// Whether `v` satisfies the coverage rule of `kind` with respect to `d`.
pub fn is_covered(g: &Graph, d: &VertexSet, kind: DominationKind, v: Vertex) -> bool {
    if !kind.is_total() && d.contains(v) {
        return true;
    }
    if g.neighbors(v).iter().any(|&w| d.contains(w)) {
        return true;
    }
    kind.is_disjunctive()
        && distance_two(g, v)
            .iter()
            .filter(|&&x| d.contains(x))
            .count()
            >= 2
}

fn validate(g: &Graph, d: &VertexSet) -> Result<()> {
    g.ensure_isolate_free()?;
    if let Some(v) = d.iter().find(|&v| v >= g.n()) {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            n: g.n(),
        });
    }
    Ok(())
}

/// Vertices violating the coverage rule of `kind` (the matching condition of
/// paired kinds is not considered).
pub fn uncovered(g: &Graph, d: &VertexSet, kind: DominationKind) -> Result<VertexSet> {
    validate(g, d)?;
    let mut out = VertexSet::new(g.n());
    for v in (0..g.n()).filter(|&v| !is_covered(g, d, kind, v)) {
        out.insert(v);
    }
    Ok(out)
}

pub fn check(g: &Graph, d: &VertexSet, kind: DominationKind) -> Result<DominationVerdict> {
    let uncovered = uncovered(g, d, kind)?;
    let (matching, matching_failed) = if kind.is_paired() {
        let m = perfect_matching(g, d)?;
        let failed = m.is_none();
        (m, failed)
    } else {
        (None, false)
    };
    Ok(DominationVerdict {
        satisfied: uncovered.is_empty() && !matching_failed,
        uncovered,
        matching_failed,
        matching,
    })
}

/// Largest candidate set accepted by the perfect-matching test.
pub const MATCHING_LIMIT: usize = 128;

pub fn has_perfect_matching(g: &Graph, d: &VertexSet) -> Result<bool> {
    Ok(perfect_matching(g, d)?.is_some())
}

/// A perfect matching of `g[d]` as pairs `(u, v)` with `u < v`, if one exists.
///
/// Pairs the lowest unmatched vertex with each of its unmatched neighbours in
/// turn; unmatchable vertex subsets are memoized.
pub fn perfect_matching(g: &Graph, d: &VertexSet) -> Result<Option<Vec<(Vertex, Vertex)>>> {
    let members = d.to_vec();
    if members.len() > MATCHING_LIMIT {
        return Err(Error::TooLarge {
            n: members.len(),
            limit: MATCHING_LIMIT,
            what: "the perfect-matching test",
        });
    }
    if let Some(&v) = members.iter().find(|&&v| v >= g.n()) {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            n: g.n(),
        });
    }
    if members.len() % 2 == 1 {
        return Ok(None);
    }
    let local = g.induced_subgraph(&members);
    let adj: Vec<u128> = (0..local.n())
        .map(|v| local.neighbors(v).iter().fold(0u128, |m, &w| m | 1 << w))
        .collect();
    let full = if members.is_empty() {
        0
    } else {
        u128::MAX >> (128 - members.len())
    };
    let mut pairs = Vec::with_capacity(members.len() / 2);
    let found = match_mask(&adj, full, &mut HashSet::new(), &mut pairs);
    Ok(found.then(|| {
        pairs
            .into_iter()
            .map(|(a, b)| (members[a], members[b]))
            .collect()
    }))
}

/// Perfect-matching test on a vertex bitmask, with `adj` giving neighbour
/// bitmasks. Appends the pairs of one matching on success.
pub(crate) fn match_mask(
    adj: &[u128],
    unmatched: u128,
    failed: &mut HashSet<u128>,
    pairs: &mut Vec<(usize, usize)>,
) -> bool {
    if unmatched == 0 {
        return true;
    }
    if unmatched.count_ones() % 2 == 1 || failed.contains(&unmatched) {
        return false;
    }
    let v = unmatched.trailing_zeros() as usize;
    let rest = unmatched & !(1 << v);
    let mut options = adj[v] & rest;
    while options != 0 {
        let w = options.trailing_zeros() as usize;
        options &= options - 1;
        pairs.push((v, w));
        if match_mask(adj, rest & !(1 << w), failed, pairs) {
            return true;
        }
        pairs.pop();
    }
    failed.insert(unmatched);
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::FamilySpec;
    use crate::transform::middle_graph;

    fn set(n: usize, vs: &[Vertex]) -> VertexSet {
        VertexSet::from_vertices(n, vs.iter().copied()).unwrap()
    }

    #[test]
    fn c5_edge_is_pdd_set() {
        let g = FamilySpec::Cycle(5).generate().unwrap();
        let v = check(&g, &set(5, &[0, 1]), DominationKind::PairedDisjunctive).unwrap();
        assert!(v.satisfied);
        assert_eq!(v.matching, Some(vec![(0, 1)]));
    }

    #[test]
    fn whole_vertex_set_dominates() {
        let g = FamilySpec::Wheel(5).generate().unwrap();
        assert!(
            check(&g, &VertexSet::full(6), DominationKind::Dominating)
                .unwrap()
                .satisfied
        );
    }

    #[test]
    fn odd_set_is_not_paired() {
        let g = FamilySpec::Path(3).generate().unwrap();
        let d = set(3, &[0, 1, 2]);
        let v = check(&g, &d, DominationKind::Paired).unwrap();
        assert!(!v.satisfied && v.matching_failed && v.uncovered.is_empty());
        assert_eq!(v.violators(&d), d);
    }

    #[test]
    fn isolated_vertex_rejected() {
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert_eq!(
            check(&g, &set(3, &[0]), DominationKind::Dominating),
            Err(Error::IsolatedVertex(2))
        );
    }

    #[test]
    fn uncovered_examples() {
        let p4 = FamilySpec::Path(4).generate().unwrap();
        assert_eq!(
            uncovered(&p4, &set(4, &[1]), DominationKind::Dominating)
                .unwrap()
                .to_vec(),
            vec![3]
        );

        let c6 = FamilySpec::Cycle(6).generate().unwrap();
        for kind in DominationKind::ALL {
            assert_eq!(uncovered(&c6, &VertexSet::new(6), kind).unwrap().len(), 6);
        }

        // M(P4): originals 0..4, subdivisions 4 (0-1), 5 (1-2), 6 (2-3).
        let mg = middle_graph(&p4);
        let u = uncovered(&mg.graph, &set(7, &[4, 5]), DominationKind::Disjunctive).unwrap();
        assert_eq!(u.to_vec(), vec![3]);
    }

    #[test]
    fn matching_examples() {
        let g = FamilySpec::Path(4).generate().unwrap();
        assert_eq!(
            perfect_matching(&g, &VertexSet::new(4)).unwrap(),
            Some(vec![])
        );
        assert_eq!(
            perfect_matching(&g, &set(4, &[2, 3])).unwrap(),
            Some(vec![(2, 3)])
        );
        assert_eq!(perfect_matching(&g, &set(4, &[0, 2])).unwrap(), None);
        assert_eq!(
            perfect_matching(&g, &set(4, &[0, 1, 2, 3])).unwrap(),
            Some(vec![(0, 1), (2, 3)])
        );

        // M(C8): subdivision u_j is vertex 8 + index of edge j in lex order.
        let mg = middle_graph(&FamilySpec::Cycle(8).generate().unwrap());
        let u = |a: usize, b: usize| mg.subdivision_of(a, b).unwrap();
        let d = set(16, &[u(0, 1), u(1, 2), u(4, 5), u(5, 6)]);
        let m = perfect_matching(&mg.graph, &d).unwrap().unwrap();
        assert_eq!(m, vec![(u(0, 1), u(1, 2)), (u(4, 5), u(5, 6))]);
    }

    #[test]
    fn kind_names_round_trip() {
        for k in DominationKind::ALL {
            assert_eq!(k.short_name().parse::<DominationKind>().unwrap(), k);
            assert_eq!(serde_json::to_string(&k).unwrap(), format!("\"{k}\""));
        }
        assert_eq!(
            "paired-disjunctive".parse::<DominationKind>().unwrap(),
            DominationKind::PairedDisjunctive
        );
        assert!("roman".parse::<DominationKind>().is_err());
    }
}
