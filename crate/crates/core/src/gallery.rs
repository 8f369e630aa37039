//! Small named digraphs used as worked examples and figure panels.
//!
//! Figure labels start at 1 where the original drawings do; here vertices are
//! shifted to `0..n`.

use crate::construct::ExtremalBlueprint;
use crate::digraph::Digraph;
use crate::vertex_set::VertexSet;

fn arcs(n: usize, list: &[(usize, usize)]) -> Digraph {
    Digraph::from_arcs(n, list.iter().copied()).expect("gallery arcs are in range")
}

pub fn loop_vertex() -> Digraph {
    arcs(1, &[(0, 0)])
}

/// The worked construction example (labels 1..4 ↦ 0..3): forcing cycles
/// `0 → 2 → 1 → 0` and a loop at 3, plus `0 → 0`, `0 → 1`, `0 → 3`, `2 → 0`.
pub fn construct_example() -> Digraph {
    arcs(4, &[(1, 0), (0, 2), (2, 1), (3, 3), (0, 1), (0, 3), (0, 0), (2, 0)])
}

/// Blueprint of [`construct_example`]: `V_d = {0}`, `𝓗` rooted at 2 with
/// children 1 and 3, and 0 a child of 1.
pub fn construct_blueprint() -> ExtremalBlueprint {
    ExtremalBlueprint {
        f_plus: vec![2, 0, 1, 3],
        v_d: VertexSet::singleton(0),
        h_parent: vec![Some(1), Some(2), None, Some(2)],
    }
}

/// Display labels for the construction example.
pub fn construct_labels() -> Vec<String> {
    (1..=4).map(|i| i.to_string()).collect()
}

/// The three connected locatable digraphs of order 2: the symmetric 2-cycle,
/// the 2-cycle with one loop, and a single arc with loops at both ends.
pub fn order_two_connected_locatable() -> Vec<Digraph> {
    vec![
        arcs(2, &[(0, 1), (1, 0)]),
        arcs(2, &[(0, 1), (1, 0), (0, 0)]),
        arcs(2, &[(0, 0), (1, 1), (0, 1)]),
    ]
}

/// The loop vertex followed by the three order-2 digraphs.
pub fn order_at_most_two_connected_locatable() -> Vec<Digraph> {
    let mut out = vec![loop_vertex()];
    out.extend(order_two_connected_locatable());
    out
}

/// Pendant path `c – b – a` with `a ↔ b`, `b → c`, loops at `b` and `c`
/// (`a, b, c = 0, 1, 2`).
pub fn pendant_with_loop_at_b() -> Digraph {
    arcs(3, &[(0, 1), (1, 0), (1, 2), (2, 2), (1, 1)])
}

/// As [`pendant_with_loop_at_b`] without the loop at `b`.
pub fn pendant_without_loop_at_b() -> Digraph {
    arcs(3, &[(0, 1), (1, 0), (1, 2), (2, 2)])
}

/// The drawings of the small-trees figure, grouped by order 1..=4 (vertices
/// numbered bottom to top, then the side vertex). Two order-4 drawings show
/// the same digraph, so order 4 has 11 drawings but 10 isomorphism classes.
pub fn small_trees_figure() -> Vec<Vec<Digraph>> {
    vec![
        vec![loop_vertex()],
        order_two_connected_locatable(),
        vec![
            arcs(3, &[(0, 1), (1, 0), (1, 2), (2, 2)]),
            arcs(3, &[(0, 1), (1, 0), (1, 2), (1, 1), (2, 2)]),
            arcs(3, &[(0, 1), (1, 0), (2, 1), (2, 2)]),
            arcs(3, &[(0, 0), (1, 0), (1, 1), (1, 2), (2, 2)]),
        ],
        vec![
            arcs(4, &[(0, 1), (1, 0), (1, 2), (2, 3), (3, 2)]),
            arcs(4, &[(0, 1), (1, 0), (1, 2), (2, 1), (2, 3), (3, 2)]),
            arcs(4, &[(0, 1), (1, 0), (1, 1), (1, 2), (2, 3), (3, 2)]),
            arcs(4, &[(0, 1), (1, 0), (2, 1), (2, 2), (2, 3), (3, 3)]),
            arcs(4, &[(1, 0), (1, 2), (2, 1), (0, 0), (3, 3), (2, 3)]),
            arcs(4, &[(1, 0), (0, 1), (2, 1), (2, 2), (3, 3), (2, 3)]),
            arcs(4, &[(0, 1), (0, 0), (1, 2), (2, 1), (3, 3), (3, 2)]),
            arcs(4, &[(1, 0), (0, 1), (2, 2), (1, 2), (3, 3), (1, 3)]),
            arcs(4, &[(1, 0), (0, 1), (2, 2), (1, 1), (1, 2), (3, 3), (1, 3)]),
            arcs(4, &[(1, 0), (0, 1), (2, 2), (3, 3), (2, 1), (1, 3)]),
            arcs(4, &[(1, 0), (1, 2), (1, 3), (0, 0), (1, 1), (2, 2), (3, 3)]),
        ],
    ]
}
