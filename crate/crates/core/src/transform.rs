//! Middle graph, line graph, join and vertex deletion.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::vertex_set::VertexSet;

/// Where a middle-graph vertex comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum Provenance {
    /// Vertex `i` of the source graph.
    #[serde(rename = "orig")]
    Original { i: Vertex },
    /// The vertex inserted on source edge `{i, j}`, `i < j`.
    #[serde(rename = "sub")]
    Subdivision { i: Vertex, j: Vertex },
}

/// The middle graph `M(G)` together with the provenance of every vertex.
///
/// Vertices `0..n` are the original vertices with their source labels;
/// vertices `n..n+m` are subdivision vertices in lexicographic edge order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MiddleGraph {
    pub graph: Graph,
    pub provenance: Vec<Provenance>,
    pub origin_n: usize,
    pub origin_m: usize,
}

#[derive(Serialize, Deserialize)]
struct MiddleGraphJson {
    n: usize,
    m: usize,
    edges: Vec<[Vertex; 2]>,
    provenance: Vec<Provenance>,
}

impl MiddleGraph {
    /// Label of the subdivision vertex on source edge `{i, j}`, if that edge exists.
    pub fn subdivision_of(&self, i: Vertex, j: Vertex) -> Option<Vertex> {
        let key = Provenance::Subdivision {
            i: i.min(j),
            j: i.max(j),
        };
        self.provenance[self.origin_n..]
            .binary_search_by(|p| cmp_provenance(p, &key))
            .ok()
            .map(|k| self.origin_n + k)
    }

    pub fn original_vertices(&self) -> VertexSet {
        VertexSet::from_vertices(self.graph.n(), 0..self.origin_n).expect("originals in range")
    }

    pub fn subdivision_vertices(&self) -> VertexSet {
        VertexSet::from_vertices(self.graph.n(), self.origin_n..self.graph.n())
            .expect("subdivisions in range")
    }

    pub fn to_json(&self) -> String {
        let json = MiddleGraphJson {
            n: self.graph.n(),
            m: self.graph.m(),
            edges: self.graph.edges().map(|(u, v)| [u, v]).collect(),
            provenance: self.provenance.clone(),
        };
        serde_json::to_string(&json).expect("middle graph serializes")
    }

    /// Rebuilds a middle graph from its JSON form, checking that it is
    /// consistent with the provenance tags.
    pub fn from_json(text: &str) -> Result<Self> {
        let json: MiddleGraphJson =
            serde_json::from_str(text).map_err(|e| Error::InvalidArgument(e.to_string()))?;
        let origin_n = json
            .provenance
            .iter()
            .take_while(|p| matches!(p, Provenance::Original { .. }))
            .count();
        let mut source = Graph::empty(origin_n);
        for p in &json.provenance[origin_n..] {
            match *p {
                Provenance::Subdivision { i, j } => source.add_edge(i, j)?,
                Provenance::Original { i } => {
                    return Err(Error::InvalidArgument(format!(
                        "original vertex {i} listed after subdivision vertices"
                    )))
                }
            }
        }
        let rebuilt = middle_graph(&source);
        let edges = json.edges.iter().map(|&[u, v]| (u, v));
        if json.n != rebuilt.graph.n()
            || json.m != rebuilt.graph.m()
            || Graph::from_edges(json.n, edges)? != rebuilt.graph
            || json.provenance != rebuilt.provenance
        {
            return Err(Error::InvalidArgument(
                "edges and provenance do not describe a middle graph".into(),
            ));
        }
        Ok(rebuilt)
    }
}

fn cmp_provenance(a: &Provenance, b: &Provenance) -> std::cmp::Ordering {
    let key = |p: &Provenance| match *p {
        Provenance::Original { i } => (0, i, 0),
        Provenance::Subdivision { i, j } => (1, i, j),
    };
    key(a).cmp(&key(b))
}

/// Per-vertex lists of incident edge indices, edges indexed lexicographically.
fn incident_edges(g: &Graph) -> (Vec<(Vertex, Vertex)>, Vec<Vec<usize>>) {
    let edges: Vec<_> = g.edges().collect();
    let mut incident = vec![Vec::new(); g.n()];
    for (k, &(u, v)) in edges.iter().enumerate() {
        incident[u].push(k);
        incident[v].push(k);
    }
    (edges, incident)
}

fn line_graph_edges(incident: &[Vec<usize>]) -> impl Iterator<Item = (usize, usize)> + '_ {
    incident.iter().flat_map(|es| {
        es.iter()
            .enumerate()
            .flat_map(move |(a, &e)| es[a + 1..].iter().map(move |&f| (e, f)))
    })
}

pub fn line_graph(g: &Graph) -> Graph {
    let (edges, incident) = incident_edges(g);
    Graph::from_edges(edges.len(), line_graph_edges(&incident))
        .expect("two edges of a simple graph share at most one endpoint")
}

pub fn middle_graph(g: &Graph) -> MiddleGraph {
    let n = g.n();
    let (edges, incident) = incident_edges(g);
    let mut mg = Graph::empty(n + edges.len());
    for (k, &(u, v)) in edges.iter().enumerate() {
        mg.add_edge(u, n + k).expect("incidence edge");
        mg.add_edge(v, n + k).expect("incidence edge");
    }
    for (e, f) in line_graph_edges(&incident) {
        mg.add_edge(n + e, n + f).expect("line graph edge");
    }
    let provenance = (0..n)
        .map(|i| Provenance::Original { i })
        .chain(edges.iter().map(|&(i, j)| Provenance::Subdivision { i, j }))
        .collect();
    MiddleGraph {
        graph: mg,
        provenance,
        origin_n: n,
        origin_m: edges.len(),
    }
}

/// `G + H`: disjoint union (H shifted by `|V(G)|`) plus every cross edge.
pub fn join(g: &Graph, h: &Graph) -> Graph {
    let shift = g.n();
    let edges = g
        .edges()
        .chain(h.edges().map(|(u, v)| (u + shift, v + shift)))
        .chain((0..g.n()).flat_map(|u| (0..h.n()).map(move |v| (u, v + shift))));
    Graph::from_edges(g.n() + h.n(), edges).expect("join of simple graphs is simple")
}

/// Removes `t`, relabelling the remaining vertices in order. The returned map
/// sends each old label to its new one (`None` for `t`).
pub fn delete_vertex(g: &Graph, t: Vertex) -> Result<(Graph, Vec<Option<Vertex>>)> {
    if t >= g.n() {
        return Err(Error::VertexOutOfRange {
            vertex: t,
            n: g.n(),
        });
    }
    let map: Vec<Option<Vertex>> = (0..g.n())
        .map(|v| match v.cmp(&t) {
            std::cmp::Ordering::Less => Some(v),
            std::cmp::Ordering::Equal => None,
            std::cmp::Ordering::Greater => Some(v - 1),
        })
        .collect();
    let edges = g.edges().filter_map(|(u, v)| Some((map[u]?, map[v]?)));
    Ok((Graph::from_edges(g.n() - 1, edges)?, map))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::FamilySpec;

    fn fam(spec: FamilySpec) -> Graph {
        spec.generate().unwrap()
    }

    #[test]
    fn middle_of_p4() {
        let mg = middle_graph(&fam(FamilySpec::Path(4)));
        assert_eq!((mg.graph.n(), mg.graph.m()), (7, 8));
        assert_eq!(mg.subdivision_vertices().to_vec(), vec![4, 5, 6]);
        assert_eq!(mg.subdivision_of(2, 1), Some(5));
        assert_eq!(mg.subdivision_of(0, 2), None);
        assert!(mg.graph.has_edge(4, 5) && mg.graph.has_edge(5, 6) && !mg.graph.has_edge(4, 6));
    }

    #[test]
    fn middle_of_k2_is_p3() {
        let mg = middle_graph(&fam(FamilySpec::Complete(2)));
        assert_eq!(mg.graph, Graph::from_edges(3, [(0, 2), (1, 2)]).unwrap());
        assert_eq!(mg.subdivision_vertices().to_vec(), vec![2]);
    }

    #[test]
    fn middle_of_c3() {
        let mg = middle_graph(&fam(FamilySpec::Cycle(3)));
        assert_eq!((mg.graph.n(), mg.graph.m()), (6, 9));
        for (a, b) in [(3, 4), (3, 5), (4, 5)] {
            assert!(mg.graph.has_edge(a, b));
        }
    }

    #[test]
    fn middle_of_c5_subdivisions_induce_line_graph() {
        let c5 = fam(FamilySpec::Cycle(5));
        let mg = middle_graph(&c5);
        let sd = mg.subdivision_vertices().to_vec();
        assert_eq!(sd.len(), 5);
        assert_eq!(mg.graph.induced_subgraph(&sd), line_graph(&c5));
    }

    #[test]
    fn line_graphs() {
        assert_eq!(
            line_graph(&fam(FamilySpec::Path(4))),
            fam(FamilySpec::Path(3))
        );
        assert_eq!(
            line_graph(&fam(FamilySpec::Star(3))),
            fam(FamilySpec::Complete(3))
        );
        for n in 3..9 {
            let l = line_graph(&fam(FamilySpec::Cycle(n)));
            assert_eq!((l.n(), l.m()), (n, n));
            assert!(l.is_connected() && l.degree_profile().degrees.iter().all(|&d| d == 2));
        }
    }

    #[test]
    fn joins() {
        let k1 = fam(FamilySpec::Complete(1));
        assert_eq!(join(&k1, &k1), fam(FamilySpec::Complete(2)));
        // K1 + C4 with the cycle relabelled 1..=4 is the wheel W4.
        assert_eq!(
            join(&k1, &fam(FamilySpec::Cycle(4))),
            fam(FamilySpec::Wheel(4))
        );
        let j = join(&fam(FamilySpec::Path(2)), &fam(FamilySpec::Path(3)));
        assert_eq!((j.n(), j.m()), (5, 9));
    }

    #[test]
    fn deletions() {
        let (g, map) = delete_vertex(&fam(FamilySpec::Cycle(4)), 0).unwrap();
        assert_eq!(g, fam(FamilySpec::Path(3)));
        assert_eq!(map, vec![None, Some(0), Some(1), Some(2)]);
        let (g, _) = delete_vertex(&fam(FamilySpec::Complete(4)), 3).unwrap();
        assert_eq!(g, fam(FamilySpec::Complete(3)));
        let (g, _) = delete_vertex(&fam(FamilySpec::Star(3)), 0).unwrap();
        assert_eq!((g.n(), g.m()), (3, 0));
        assert!(delete_vertex(&g, 3).is_err());
    }

    #[test]
    fn json_round_trip() {
        let mg = middle_graph(&fam(FamilySpec::Path(3)));
        let text = mg.to_json();
        assert_eq!(
            text,
            r#"{"n":5,"m":5,"edges":[[0,3],[1,3],[1,4],[2,4],[3,4]],"provenance":[{"kind":"orig","i":0},{"kind":"orig","i":1},{"kind":"orig","i":2},{"kind":"sub","i":0,"j":1},{"kind":"sub","i":1,"j":2}]}"#
        );
        assert_eq!(MiddleGraph::from_json(&text).unwrap(), mg);
        let tampered = text.replace("[3,4]", "[2,3]");
        assert!(MiddleGraph::from_json(&tampered).is_err());
    }
}
