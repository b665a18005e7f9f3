//! Canonically labelled graph families and seeded random graphs.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A named graph family together with its parameters.
///
/// Labelling conventions:
/// - `Path(n)`: vertices `0..n` in order.
/// - `Cycle(n)`: the path plus `{n-1, 0}`.
/// - `Star(q)`: hub `0` with leaves `1..=q`.
/// - `Wheel(h)`: hub `0` joined to a cycle on `1..=h` (h rim vertices).
/// - `DoubleStar(n, m)`: centers `0` and `1`, leaves `2..2+n` on `0`, then
///   `m` leaves on `1`.
/// - `Friendship(k)`: hub `0` and triangles `{0, 2i-1, 2i}`.
/// - `CompleteBipartite(m, n)`: parts `0..m` and `m..m+n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    Star(usize),
    Wheel(usize),
    DoubleStar(usize, usize),
    Friendship(usize),
}

impl FamilySpec {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidFamily(msg));
        match *self {
            FamilySpec::Path(n) if n < 1 => bad(format!("path requires n >= 1, got {n}")),
            FamilySpec::Cycle(n) if n < 3 => bad(format!("cycle requires n >= 3, got {n}")),
            FamilySpec::Complete(n) if n < 1 => {
                bad(format!("complete graph requires n >= 1, got {n}"))
            }
            FamilySpec::CompleteBipartite(m, n) if m < 1 || n < 1 => bad(format!(
                "complete bipartite graph requires m, n >= 1, got m={m}, n={n}"
            )),
            FamilySpec::Star(q) if q < 1 => bad(format!("star requires at least 1 leaf, got {q}")),
            FamilySpec::Wheel(h) if h < 3 => {
                bad(format!("wheel requires at least 3 rim vertices, got {h}"))
            }
            FamilySpec::DoubleStar(n, m) if n < m => bad(format!(
                "double star requires n >= m >= 0, got n={n}, m={m}"
            )),
            FamilySpec::Friendship(k) if k < 1 => bad(format!(
                "friendship graph requires k >= 1 triangles, got {k}"
            )),
            _ => Ok(()),
        }
    }

    /// Number of edges of the generated graph.
    pub fn size(&self) -> usize {
        match *self {
            FamilySpec::Path(n) => n.saturating_sub(1),
            FamilySpec::Cycle(n) => n,
            FamilySpec::Complete(n) => n * n.saturating_sub(1) / 2,
            FamilySpec::CompleteBipartite(m, n) => m * n,
            FamilySpec::Star(q) => q,
            FamilySpec::Wheel(h) => 2 * h,
            FamilySpec::DoubleStar(n, m) => n + m + 1,
            FamilySpec::Friendship(k) => 3 * k,
        }
    }

    pub fn generate(&self) -> Result<Graph> {
        self.validate()?;
        let edges: Vec<(usize, usize)> = match *self {
            FamilySpec::Path(n) => (1..n).map(|i| (i - 1, i)).collect(),
            FamilySpec::Cycle(n) => (0..n).map(|i| (i, (i + 1) % n)).collect(),
            FamilySpec::Complete(n) => (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect(),
            FamilySpec::CompleteBipartite(m, n) => (0..m)
                .flat_map(|u| (m..m + n).map(move |v| (u, v)))
                .collect(),
            FamilySpec::Star(q) => (1..=q).map(|v| (0, v)).collect(),
            FamilySpec::Wheel(h) => (1..=h)
                .map(|v| (0, v))
                .chain((1..=h).map(|v| (v, v % h + 1)))
                .collect(),
            FamilySpec::DoubleStar(n, m) => std::iter::once((0, 1))
                .chain((2..2 + n).map(|v| (0, v)))
                .chain((2 + n..2 + n + m).map(|v| (1, v)))
                .collect(),
            FamilySpec::Friendship(k) => (1..=k)
                .flat_map(|i| [(0, 2 * i - 1), (0, 2 * i), (2 * i - 1, 2 * i)])
                .collect(),
        };
        Graph::from_edges(self.order(), edges)
    }

    /// Number of vertices of the generated graph.
    pub fn order(&self) -> usize {
        match *self {
            FamilySpec::Path(n) | FamilySpec::Cycle(n) | FamilySpec::Complete(n) => n,
            FamilySpec::CompleteBipartite(m, n) => m + n,
            FamilySpec::Star(q) => q + 1,
            FamilySpec::Wheel(h) => h + 1,
            FamilySpec::DoubleStar(n, m) => n + m + 2,
            FamilySpec::Friendship(k) => 2 * k + 1,
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::Path(n) => write!(f, "P{n}"),
            FamilySpec::Cycle(n) => write!(f, "C{n}"),
            FamilySpec::Complete(n) => write!(f, "K{n}"),
            FamilySpec::CompleteBipartite(m, n) => write!(f, "K{m},{n}"),
            FamilySpec::Star(q) => write!(f, "K1,{q}"),
            FamilySpec::Wheel(h) => write!(f, "W{h}"),
            FamilySpec::DoubleStar(n, m) => write!(f, "D{n},{m}"),
            FamilySpec::Friendship(k) => write!(f, "F{k}"),
        }
    }
}

/// Uniformly random labelled tree on `n` vertices, decoded from a random
/// Prüfer sequence.
pub fn random_tree(n: usize, seed: u64) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_tree_with(n, &mut rng)
}

fn random_tree_with(n: usize, rng: &mut impl Rng) -> Result<Graph> {
    match n {
        0 => Err(Error::InvalidArgument("random tree requires n >= 1".into())),
        1 => Ok(Graph::empty(1)),
        2 => Graph::from_edges(2, [(0, 1)]),
        _ => {
            let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
            Graph::from_edges(n, prufer_decode(n, &code))
        }
    }
}

/// Edges of the tree with Prüfer code `code` (length `n - 2`).
pub fn prufer_decode(n: usize, code: &[usize]) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &c in code {
        degree[c] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> =
        (0..n).filter(|&v| degree[v] == 1).map(Reverse).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &c in code {
        let Reverse(leaf) = leaves.pop().expect("a Prüfer code always leaves a leaf");
        edges.push((leaf.min(c), leaf.max(c)));
        degree[c] -= 1;
        if degree[c] == 1 {
            leaves.push(Reverse(c));
        }
    }
    let Reverse(a) = leaves.pop().expect("two leaves remain");
    let Reverse(b) = leaves.pop().expect("two leaves remain");
    edges.push((a.min(b), a.max(b)));
    edges
}

/// A random spanning tree plus each remaining pair independently with
/// probability `p`. Always connected.
pub fn random_connected_graph(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "random connected graph requires n >= 2, got {n}"
        )));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidArgument(format!(
            "edge probability {p} not in [0, 1]"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = random_tree_with(n, &mut rng)?;
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) && rng.gen_bool(p) {
                g.add_edge(u, v)?;
            }
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_four() {
        let g = FamilySpec::Path(4).generate().unwrap();
        assert_eq!((g.n(), g.m()), (4, 3));
        assert_eq!(g.degree_profile().degrees, vec![1, 2, 2, 1]);
    }

    #[test]
    fn double_star_one_one_is_p4() {
        let g = FamilySpec::DoubleStar(1, 1).generate().unwrap();
        // 2 - 0 - 1 - 3
        let p4 = Graph::from_edges(4, [(2, 0), (0, 1), (1, 3)]).unwrap();
        assert_eq!(g, p4);
        assert_eq!(g.degree_profile().leaves, vec![2, 3]);
    }

    #[test]
    fn friendship_two() {
        let g = FamilySpec::Friendship(2).generate().unwrap();
        assert_eq!((g.n(), g.m(), g.degree(0)), (5, 6, 4));
    }

    #[test]
    fn star_and_double_star_profiles() {
        let p = FamilySpec::Star(4).generate().unwrap().degree_profile();
        assert_eq!(p.max_degree, 4);
        assert_eq!(p.leaves, vec![1, 2, 3, 4]);

        let p = FamilySpec::DoubleStar(2, 1)
            .generate()
            .unwrap()
            .degree_profile();
        assert_eq!(p.max_degree, 3);
        assert_eq!(p.degrees[0], 3);
        assert_eq!(p.leaves.len(), 3);
    }

    #[test]
    fn diameters() {
        for n in 2..7 {
            assert_eq!(
                FamilySpec::Complete(n)
                    .generate()
                    .unwrap()
                    .diameter()
                    .unwrap(),
                1
            );
        }
        let d22 = FamilySpec::DoubleStar(2, 2).generate().unwrap();
        assert_eq!(d22.diameter().unwrap(), 3);
    }

    #[test]
    fn bipartite_distances() {
        let g = FamilySpec::CompleteBipartite(2, 3).generate().unwrap();
        let d: Vec<_> = g.distances_from(0).unwrap().into_iter().flatten().collect();
        assert_eq!(d, vec![0, 2, 1, 1, 1]);
    }

    #[test]
    fn invalid_parameters_name_the_constraint() {
        for spec in [
            FamilySpec::Path(0),
            FamilySpec::Cycle(2),
            FamilySpec::Wheel(2),
            FamilySpec::DoubleStar(1, 2),
            FamilySpec::CompleteBipartite(0, 3),
            FamilySpec::Friendship(0),
        ] {
            match spec.generate() {
                Err(Error::InvalidFamily(msg)) => assert!(msg.contains("requires"), "{msg}"),
                other => panic!("{spec}: {other:?}"),
            }
        }
        assert!(FamilySpec::DoubleStar(0, 0).generate().is_ok());
    }

    #[test]
    fn small_random_trees() {
        assert!(random_tree(0, 1).is_err());
        let t1 = random_tree(1, 5).unwrap();
        assert_eq!((t1.n(), t1.m()), (1, 0));
        for seed in 0..5 {
            assert_eq!(
                random_tree(2, seed).unwrap(),
                FamilySpec::Path(2).generate().unwrap()
            );
        }
        let t = random_tree(8, 42).unwrap();
        assert_eq!(t.m(), 7);
        assert!(t.is_connected());
        assert_eq!(t, random_tree(8, 42).unwrap());
    }

    #[test]
    fn prufer_decodes_known_code() {
        // Code (3, 3, 3, 4) on 6 vertices: star at 3 joined to 4, with 5 on 4.
        let edges = prufer_decode(6, &[3, 3, 3, 4]);
        let g = Graph::from_edges(6, edges).unwrap();
        assert!(g.is_tree());
        assert_eq!(g.degree(3), 4);
        assert!(g.has_edge(4, 5));
    }

    #[test]
    fn random_connected_extremes() {
        assert_eq!(
            random_connected_graph(2, 0.0, 3).unwrap(),
            FamilySpec::Complete(2).generate().unwrap()
        );
        assert_eq!(
            random_connected_graph(4, 1.0, 3).unwrap(),
            FamilySpec::Complete(4).generate().unwrap()
        );
        let g = random_connected_graph(7, 0.3, 7).unwrap();
        assert!(g.is_connected());
        assert!((6..=21).contains(&g.m()));
        assert!(random_connected_graph(1, 0.5, 0).is_err());
        assert!(random_connected_graph(4, 1.5, 0).is_err());
    }
}
