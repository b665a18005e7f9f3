//! Explicit paired disjunctive dominating sets from the constructive halves
//! of the cycle, path and double-star value proofs.
//!
//! Proof labels are 1-based: vertex `i` is canonical vertex `i - 1`, and
//! `u_j` is the subdivision vertex of the edge between proof vertices `j`
//! and `j + 1` (for cycles `u_n` closes the cycle).

use crate::error::{Error, Result};
use crate::generators::FamilySpec;
use crate::transform::{middle_graph, MiddleGraph};
use crate::vertex_set::VertexSet;

fn sub(mg: &MiddleGraph, a: usize, b: usize) -> usize {
    mg.subdivision_of(a, b).expect("edge of the source graph")
}

/// `u_j` for j ≡ 1, 2 (mod 4), 1 <= j <= last.
fn alternating_pairs(last: usize) -> impl Iterator<Item = usize> {
    (1..=last).filter(|j| matches!(j % 4, 1 | 2))
}

/// The cycle construction on the canonical labelling of `M(C_n)`; adds the
/// original vertex `n` when n ≡ 1 (mod 4).
pub fn witness_middle_cycle(n: usize) -> Result<VertexSet> {
    let mg = middle_graph(&FamilySpec::Cycle(n).generate()?);
    let u = |j: usize| sub(&mg, j - 1, j % n);
    let mut d = VertexSet::new(mg.graph.n());
    for j in alternating_pairs(n) {
        d.insert(u(j));
    }
    if n % 4 == 1 {
        d.insert(n - 1);
    }
    Ok(d)
}

/// The path construction on the canonical labelling of `M(P_n)`:
/// `D ∪ {u_{n-1}, v_n}` for n ≡ 0, 1, `D ∪ {v_n}` for n ≡ 2 and `D` for
/// n ≡ 3 (mod 4).
pub fn witness_middle_path(n: usize) -> Result<VertexSet> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "path witness requires n >= 2, got {n}"
        )));
    }
    let mg = middle_graph(&FamilySpec::Path(n).generate()?);
    let u = |j: usize| sub(&mg, j - 1, j);
    let mut s = VertexSet::new(mg.graph.n());
    for j in alternating_pairs(n - 1) {
        s.insert(u(j));
    }
    match n % 4 {
        0 | 1 => {
            s.insert(u(n - 1));
            s.insert(n - 1);
        }
        2 => {
            s.insert(n - 1);
        }
        _ => {}
    }
    Ok(s)
}

/// `{a, u_a, b, u_b}` on `M(D_{n,m})`: both centers with the subdivision
/// vertex of each center's first pendant edge.
pub fn witness_double_star(n: usize, m: usize) -> Result<VertexSet> {
    if n < 1 || m < 1 {
        return Err(Error::InvalidArgument(format!(
            "double star witness requires n, m >= 1, got n={n}, m={m}"
        )));
    }
    let mg = middle_graph(&FamilySpec::DoubleStar(n, m).generate()?);
    let (a, b) = (0, 1);
    let (leaf_a, leaf_b) = (2, 2 + n);
    VertexSet::from_vertices(
        mg.graph.n(),
        [a, sub(&mg, a, leaf_a), b, sub(&mg, b, leaf_b)],
    )
}
