//! Small hypergraphs used throughout the tests and examples.

use crate::hypergraph::OrientedHypergraph;
use crate::matrix::IntegerMatrix;

/// Incidence matrix of a bidirected graph on four vertices and five edges.
pub const G1_ROWS: [[i64; 5]; 4] = [
    [-1, 0, 0, -1, -1],
    [1, -1, 0, 0, 0],
    [0, 1, 1, 0, 1],
    [0, 0, -1, 1, 0],
];

/// Incidence matrix of a hypergraph on three vertices with one 3-edge.
pub const G2_ROWS: [[i64; 3]; 3] = [[-1, 0, 1], [-1, -1, 0], [1, 1, 1]];

fn from_const<const C: usize>(rows: &[[i64; C]]) -> IntegerMatrix {
    let rows: Vec<Vec<i64>> = rows.iter().map(|r| r.to_vec()).collect();
    IntegerMatrix::from_rows(&rows).expect("rectangular constant")
}

pub fn g1_matrix() -> IntegerMatrix {
    from_const(&G1_ROWS)
}

pub fn g2_matrix() -> IntegerMatrix {
    from_const(&G2_ROWS)
}

pub fn g1() -> OrientedHypergraph {
    OrientedHypergraph::from_integer_matrix(&g1_matrix())
}

pub fn g2() -> OrientedHypergraph {
    OrientedHypergraph::from_integer_matrix(&g2_matrix())
}

/// `n` vertices sharing a single edge, every incidence positive.
pub fn single_edge(n: usize) -> OrientedHypergraph {
    let rows = vec![vec![1i64]; n];
    OrientedHypergraph::from_integer_matrix(&IntegerMatrix::from_rows(&rows).expect("column"))
}
