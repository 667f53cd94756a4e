//! Benchmark inputs. The benches themselves live in `benches/`.

use ohminor::{IntegerMatrix, OrientedHypergraph};

/// Cycle graph `C_n` as a bidirected graph with every edge oriented extroverted.
pub fn cycle(n: usize) -> OrientedHypergraph {
    let mut m = IntegerMatrix::zeros(n, n);
    for e in 0..n {
        m.set(e, e, 1.into());
        m.set((e + 1) % n, e, 1.into());
    }
    OrientedHypergraph::from_integer_matrix(&m)
}

/// Complete graph `K_n` with introverted edges.
pub fn complete(n: usize) -> OrientedHypergraph {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    let mut m = IntegerMatrix::zeros(n, pairs.len());
    for (e, &(a, b)) in pairs.iter().enumerate() {
        m.set(a, e, (-1).into());
        m.set(b, e, (-1).into());
    }
    OrientedHypergraph::from_integer_matrix(&m)
}
