//! Instances on which the deletion sandwich and the no-strong-support tree
//! bound fail, confirmed with the brute-force oracle rather than the
//! branch and bound.

use middledom::dominate::check;
use middledom::solve::brute_force_oracle;
use middledom::theorems::tree_profile;
use middledom::transform::delete_vertex;
use middledom::{middle_graph, DominationKind, Graph, VertexSet};

const PDD: DominationKind = DominationKind::PairedDisjunctive;

fn oracle(g: &Graph) -> usize {
    brute_force_oracle(&middle_graph(g).graph, PDD)
        .unwrap()
        .value
        .unwrap()
}

#[test]
fn deleting_a_non_support_vertex_can_raise_the_value() {
    // A 4-cycle 0-1-2-3 with pendant 4 on 3; vertex 0 is not a support.
    let g = Graph::parse_edge_list("5 5\n0 1\n0 3\n1 2\n2 3\n3 4").unwrap();
    let (h, _) = delete_vertex(&g, 0).unwrap();
    assert!(h.is_connected());
    assert_eq!(oracle(&g), 2);
    assert_eq!(oracle(&h), 4);

    let mg = middle_graph(&g);
    let d = VertexSet::from_vertices(
        mg.graph.n(),
        [
            mg.subdivision_of(0, 3).unwrap(),
            mg.subdivision_of(2, 3).unwrap(),
        ],
    )
    .unwrap();
    assert!(check(&mg.graph, &d, PDD).unwrap().satisfied);
}

#[test]
fn tree_without_strong_support_below_twice_the_leaves() {
    let t = Graph::parse_edge_list("6 5\n0 1\n0 5\n1 2\n1 3\n2 4").unwrap();
    let prof = tree_profile(&t).unwrap();
    assert!(!prof.has_strong_support());
    assert_eq!(
        (prof.leaves.len(), prof.diameter, prof.bound_c56),
        (3, 4, 6)
    );
    assert_eq!(oracle(&t), 4);

    let mg = middle_graph(&t);
    let d = VertexSet::from_vertices(
        mg.graph.n(),
        [
            0,
            2,
            mg.subdivision_of(0, 1).unwrap(),
            mg.subdivision_of(1, 2).unwrap(),
        ],
    )
    .unwrap();
    assert!(check(&mg.graph, &d, PDD).unwrap().satisfied);
}
