//! Simple undirected graphs on vertices `0..n`.
//!
//! Adjacency lists are kept sorted so that iteration order, edge order and
//! serialized output are canonical.

use std::collections::VecDeque;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    m: usize,
}

/// Degrees, maximum degree and the (ascending) list of degree-one vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeProfile {
    pub degrees: Vec<usize>,
    pub max_degree: usize,
    pub leaves: Vec<Vertex>,
}

impl Graph {
    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a graph from an edge list, rejecting loops, parallel edges and
    /// out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub(crate) fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<()> {
        let n = self.n();
        for w in [u, v] {
            if w >= n {
                return Err(Error::VertexOutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return Err(Error::InvalidArgument(format!("self-loop at vertex {u}")));
        }
        match self.adj[u].binary_search(&v) {
            Ok(_) => Err(Error::InvalidArgument(format!(
                "duplicate edge {{{u}, {v}}}"
            ))),
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                self.m += 1;
                Ok(())
            }
        }
    }

    /// Order of the graph.
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    /// Size of the graph.
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn isolated_vertices(&self) -> Vec<Vertex> {
        (0..self.n()).filter(|&v| self.degree(v) == 0).collect()
    }

    /// Fails with [`Error::IsolatedVertex`] naming the first isolated vertex.
    pub fn ensure_isolate_free(&self) -> Result<()> {
        match self.isolated_vertices().first() {
            Some(&v) => Err(Error::IsolatedVertex(v)),
            None => Ok(()),
        }
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let degrees: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        let leaves = (0..self.n()).filter(|&v| degrees[v] == 1).collect();
        DegreeProfile {
            max_degree: degrees.iter().copied().max().unwrap_or(0),
            degrees,
            leaves,
        }
    }

    /// Breadth-first distances from `source`; `None` marks unreachable vertices.
    pub fn distances_from(&self, source: Vertex) -> Result<Vec<Option<usize>>> {
        if source >= self.n() {
            return Err(Error::VertexOutOfRange {
                vertex: source,
                n: self.n(),
            });
        }
        let mut dist = vec![None; self.n()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap_or_default();
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        Ok(dist)
    }

    pub fn is_connected(&self) -> bool {
        self.n() == 0
            || self
                .distances_from(0)
                .map(|d| d.iter().all(Option::is_some))
                .unwrap_or(false)
    }

    pub fn is_tree(&self) -> bool {
        self.n() >= 1 && self.m + 1 == self.n() && self.is_connected()
    }

    /// Largest BFS distance over all pairs; errors on disconnected input.
    pub fn diameter(&self) -> Result<usize> {
        let mut best = 0;
        for v in 0..self.n() {
            for d in self.distances_from(v)? {
                best = best.max(d.ok_or(Error::Disconnected)?);
            }
        }
        Ok(best)
    }

    /// Connected components, each as an ascending vertex list; components are
    /// ordered by their smallest vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for s in 0..self.n() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Subgraph induced by `vertices` (relabelled in the given order).
    pub fn induced_subgraph(&self, vertices: &[Vertex]) -> Graph {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Graph::empty(vertices.len());
        for (i, &v) in vertices.iter().enumerate() {
            g.adj[i] = self.adj[v]
                .iter()
                .filter(|&&w| index[w] != usize::MAX)
                .map(|&w| index[w])
                .collect();
            g.adj[i].sort_unstable();
        }
        g.m = g.adj.iter().map(Vec::len).sum::<usize>() / 2;
        g
    }

    /// Parses the edge-list format: a header line `n m`, then `m` lines `u v`.
    ///
    /// Blank lines are ignored. Each edge may be given in either orientation.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());

        let (hline, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            message: "missing header line \"n m\"".into(),
        })?;
        let [n, m] = parse_pair(hline, header)?;

        let mut g = Graph::empty(n);
        let mut last_line = hline;
        for (line, l) in lines {
            last_line = line;
            if g.m() == m {
                return Err(Error::Parse {
                    line,
                    message: format!("more than the declared {m} edges"),
                });
            }
            let [u, v] = parse_pair(line, l)?;
            g.add_edge(u, v).map_err(|e| Error::Parse {
                line,
                message: e.to_string(),
            })?;
        }
        if g.m() != m {
            return Err(Error::Parse {
                line: last_line,
                message: format!("expected {m} edges, found {}", g.m()),
            });
        }
        Ok(g)
    }

    /// Serializes to the edge-list format with edges in lexicographic order,
    /// `\n`-separated and without a trailing newline.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}", self.n(), self.m());
        for (u, v) in self.edges() {
            let _ = write!(out, "\n{u} {v}");
        }
        out
    }
}

fn parse_pair(line: usize, text: &str) -> Result<[usize; 2]> {
    let fields: Vec<&str> = text.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(Error::Parse {
            line,
            message: format!("expected two integers, found {:?}", text),
        });
    }
    let mut out = [0; 2];
    for (slot, f) in out.iter_mut().zip(&fields) {
        *slot = f.parse().map_err(|_| Error::Parse {
            line,
            message: format!("not a nonnegative integer: {f:?}"),
        })?;
    }
    Ok(out)
}
