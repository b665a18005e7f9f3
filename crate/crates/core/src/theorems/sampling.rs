//! Seeded instance streams for the relational statements. Every sample
//! label names the generator call that rebuilds it.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::generators::{random_connected_graph, random_tree};
use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, PartialEq)]
pub struct Sample {
    pub label: String,
    pub graph: Graph,
}

fn check_range(n_min: usize, n_max: usize, floor: usize) -> Result<()> {
    if n_min < floor || n_min > n_max {
        return Err(Error::InvalidArgument(format!(
            "order range [{n_min}, {n_max}] invalid (minimum order {floor})"
        )));
    }
    Ok(())
}

/// `count` connected graphs with order uniform in `[n_min, n_max]`, each a
/// random spanning tree plus pairs added with probability `p`.
pub fn connected_graphs(
    count: usize,
    n_min: usize,
    n_max: usize,
    p: f64,
    seed: u64,
) -> Result<Vec<Sample>> {
    check_range(n_min, n_max, 2)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(n_min..=n_max);
            let s = rng.gen::<u32>() as u64;
            Ok(Sample {
                label: format!("rcg(n={n},p={p},seed={s})"),
                graph: random_connected_graph(n, p, s)?,
            })
        })
        .collect()
}

/// `count` uniformly random labelled trees with order in `[n_min, n_max]`.
pub fn trees(count: usize, n_min: usize, n_max: usize, seed: u64) -> Result<Vec<Sample>> {
    check_range(n_min, n_max, 1)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(n_min..=n_max);
            let s = rng.gen::<u32>() as u64;
            Ok(Sample {
                label: format!("tree(n={n},seed={s})"),
                graph: random_tree(n, s)?,
            })
        })
        .collect()
}

/// Erdős–Rényi graph `G(n, p)` on a seed, pairs drawn in lexicographic order.
pub fn gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::from_edges(n, edges)
}

/// `count` isolate-free (possibly disconnected) `G(n, p)` graphs with order
/// in `[n_min, n_max]` and `p` uniform in `[0.2, 0.7]`; draws containing an
/// isolated vertex are redrawn.
pub fn isolate_free_graphs(
    count: usize,
    n_min: usize,
    n_max: usize,
    seed: u64,
) -> Result<Vec<Sample>> {
    check_range(n_min, n_max, 2)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.gen_range(n_min..=n_max);
        let p = (rng.gen_range(0.2..=0.7f64) * 100.0).round() / 100.0;
        let s = rng.gen::<u32>() as u64;
        let g = gnp(n, p, s)?;
        if g.isolated_vertices().is_empty() {
            out.push(Sample {
                label: format!("gnp(n={n},p={p},seed={s})"),
                graph: g,
            });
        }
    }
    Ok(out)
}

/// Vertices adjacent to a leaf.
pub fn support_vertices(g: &Graph) -> Vec<Vertex> {
    (0..g.n())
        .filter(|&v| g.neighbors(v).iter().any(|&w| g.degree(w) == 1))
        .collect()
}

/// `count` pairs `(G, t)` of a connected graph and a uniformly chosen vertex
/// that is not a support vertex. Graphs without such a vertex are skipped.
pub fn deletion_pairs(
    count: usize,
    n_min: usize,
    n_max: usize,
    p: f64,
    seed: u64,
) -> Result<Vec<(Sample, Vertex)>> {
    check_range(n_min, n_max, 2)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.gen_range(n_min..=n_max);
        let s = rng.gen::<u32>() as u64;
        let g = random_connected_graph(n, p, s)?;
        let supports = support_vertices(&g);
        let candidates: Vec<Vertex> = (0..n).filter(|v| !supports.contains(v)).collect();
        if candidates.is_empty() {
            continue;
        }
        let t = candidates[rng.gen_range(0..candidates.len())];
        out.push((
            Sample {
                label: format!("rcg(n={n},p={p},seed={s})"),
                graph: g,
            },
            t,
        ));
    }
    Ok(out)
}
