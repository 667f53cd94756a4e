//! Independent oracles and reference values shared by the
//! integration tests and the acceptance gate. Nothing here calls the library's
//! enumeration or polynomial code; everything works on plain `i64` matrices.

#![allow(dead_code)]

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type Matrix = Vec<Vec<i64>>;

pub const G1: [[i64; 5]; 4] = [
    [-1, 0, 0, -1, -1],
    [1, -1, 0, 0, 0],
    [0, 1, 1, 0, 1],
    [0, 0, -1, 1, 0],
];

pub const G2: [[i64; 3]; 3] = [[-1, 0, 1], [-1, -1, 0], [1, 1, 1]];

pub fn g1_rows() -> Matrix {
    G1.iter().map(|r| r.to_vec()).collect()
}

pub fn g2_rows() -> Matrix {
    G2.iter().map(|r| r.to_vec()).collect()
}

pub fn transpose(m: &Matrix) -> Matrix {
    let cols = m.first().map_or(0, Vec::len);
    (0..cols).map(|c| m.iter().map(|r| r[c]).collect()).collect()
}

/// `H·Hᵀ`.
pub fn laplacian(h: &Matrix) -> Matrix {
    h.iter()
        .map(|a| {
            h.iter()
                .map(|b| a.iter().zip(b).map(|(x, y)| x * y).sum())
                .collect()
        })
        .collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn parity(p: &[usize]) -> i64 {
    let inversions = (0..p.len())
        .flat_map(|i| (i + 1..p.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| p[i] > p[j])
        .count();
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Fraction-free (Bareiss) integer determinant.
pub fn determinant(m: &Matrix) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&r| a[r][k] != 0) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

/// Permanent by summing over all permutations.
pub fn permanent(m: &Matrix) -> i128 {
    let n = m.len();
    permutations(n)
        .iter()
        .map(|p| (0..n).map(|i| m[i][p[i]] as i128).product::<i128>())
        .sum()
}

/// Key: sorted `(row, col)` pairs, 0-based.
pub type Terms = BTreeMap<Vec<(usize, usize)>, i128>;

/// `det(X - L)` grouped by monomial. For each permutation of the rows, every
/// subset of positions is taken from `X` and the rest from `-L`.
pub fn total_minor_terms(l: &Matrix) -> Terms {
    let n = l.len();
    let mut out = Terms::new();
    for p in permutations(n) {
        let s = parity(&p) as i128;
        for mask in 0u32..(1 << n) {
            let mut coeff = s;
            let mut key = Vec::new();
            for i in 0..n {
                if mask & (1 << i) != 0 {
                    key.push((i, p[i]));
                } else {
                    coeff *= -(l[i][p[i]] as i128);
                }
            }
            if coeff != 0 {
                *out.entry(key).or_default() += coeff;
            }
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

/// `det(xI - L)`, low degree first.
pub fn char_poly(l: &Matrix) -> Vec<i128> {
    let n = l.len();
    let mut coeffs = vec![0i128; n + 1];
    for (key, c) in total_minor_terms(l) {
        if key.iter().all(|&(r, c)| r == c) {
            coeffs[key.len()] += c;
        }
    }
    coeffs
}

pub fn random_matrix(rng: &mut ChaCha8Rng, max_dim: usize, bound: i64) -> Matrix {
    let rows = rng.gen_range(1..=max_dim);
    let cols = rng.gen_range(1..=max_dim);
    (0..rows)
        .map(|_| (0..cols).map(|_| rng.gen_range(-bound..=bound)).collect())
        .collect()
}

/// Random bidirected graph: every edge gets two signed ends on random
/// vertices. Loops and parallel edges are allowed; a loop's ends share a sign
/// because a matrix entry carries a single sign.
#[allow(clippy::needless_range_loop)]
pub fn random_bidirected(rng: &mut ChaCha8Rng, max_vertices: usize, max_edges: usize) -> Matrix {
    let n = rng.gen_range(1..=max_vertices);
    let m = rng.gen_range(1..=max_edges);
    let mut h = vec![vec![0i64; m]; n];
    for e in 0..m {
        let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n));
        let sa = if rng.gen_bool(0.5) { 1 } else { -1 };
        let sb = if a == b || rng.gen_bool(0.5) { sa } else { -sa };
        h[a][e] += sa;
        h[b][e] += sb;
    }
    h
}

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Unsigned Stirling numbers of the first kind `c(n, k)` for `k = 0..=n`.
pub fn stirling_first(n: usize) -> Vec<u64> {
    let mut row = vec![1u64];
    for m in 0..n {
        let mut next = vec![0u64; row.len() + 1];
        for (k, &c) in row.iter().enumerate() {
            next[k + 1] += c;
            next[k] += c * m as u64;
        }
        row = next;
    }
    row
}

/// Reference expansion of `det(X - L)` for the three-vertex hypergraph, with
/// 1-based variable indices.
pub const G2_TOTAL_MINOR: &[(&[(usize, usize)], i64)] = &[
    (&[], -1),
    (&[(1, 1)], 2),
    (&[(1, 2)], -3),
    (&[(1, 3)], -2),
    (&[(2, 1)], -3),
    (&[(2, 2)], 6),
    (&[(2, 3)], 4),
    (&[(3, 1)], -2),
    (&[(3, 2)], 4),
    (&[(3, 3)], 3),
    (&[(1, 1), (2, 2)], -3),
    (&[(1, 2), (2, 1)], 3),
    (&[(1, 1), (2, 3)], -2),
    (&[(1, 3), (2, 1)], 2),
    (&[(1, 1), (3, 2)], -2),
    (&[(1, 2), (3, 1)], 2),
    (&[(1, 1), (3, 3)], -2),
    (&[(1, 3), (3, 1)], 2),
    (&[(1, 2), (3, 3)], 1),
    (&[(1, 3), (3, 2)], -1),
    (&[(2, 1), (3, 3)], 1),
    (&[(2, 3), (3, 1)], -1),
    (&[(2, 2), (3, 3)], -2),
    (&[(2, 3), (3, 2)], 2),
    (&[(1, 1), (2, 2), (3, 3)], 1),
    (&[(1, 1), (2, 3), (3, 2)], -1),
    (&[(1, 2), (2, 1), (3, 3)], -1),
    (&[(1, 2), (2, 3), (3, 1)], 1),
    (&[(1, 3), (2, 1), (3, 2)], 1),
    (&[(1, 3), (2, 2), (3, 1)], -1),
];

/// Reference diagonal expansion for the four-vertex graph, keyed by 1-based
/// vertex sets.
pub const G1_DIAGONAL: &[(&[usize], i64)] = &[
    (&[2], -8),
    (&[3], -8),
    (&[4], -8),
    (&[1], -8),
    (&[1, 2], 5),
    (&[1, 3], 4),
    (&[1, 4], 5),
    (&[2, 3], 5),
    (&[2, 4], 8),
    (&[3, 4], 5),
    (&[1, 2, 3], -2),
    (&[1, 2, 4], -3),
    (&[1, 3, 4], -2),
    (&[2, 3, 4], -3),
    (&[1, 2, 3, 4], 1),
];

/// Reference diagonal expansion of the dual, keyed by 1-based edge sets.
pub const G1_DUAL_DIAGONAL: &[(&[usize], i64)] = &[
    (&[1, 4], -4),
    (&[2, 3], -4),
    (&[1, 5], -4),
    (&[2, 4], -4),
    (&[2, 5], -4),
    (&[3, 5], -4),
    (&[4, 5], -4),
    (&[1, 3], -4),
    (&[1, 2, 3], 3),
    (&[1, 2, 4], 3),
    (&[1, 2, 5], 3),
    (&[1, 3, 4], 3),
    (&[1, 3, 5], 4),
    (&[2, 3, 4], 3),
    (&[1, 4, 5], 3),
    (&[2, 3, 5], 3),
    (&[2, 4, 5], 4),
    (&[3, 4, 5], 3),
    (&[1, 2, 3, 4], -2),
    (&[1, 2, 3, 5], -2),
    (&[1, 2, 4, 5], -2),
    (&[1, 3, 4, 5], -2),
    (&[2, 3, 4, 5], -2),
    (&[1, 2, 3, 4, 5], 1),
];

/// Edges of the four-vertex graph as 0-based vertex pairs.
pub fn g1_edges() -> Vec<(usize, usize)> {
    let h = g1_rows();
    (0..5)
        .map(|e| {
            let ends: Vec<usize> = (0..4).filter(|&v| h[v][e] != 0).collect();
            (ends[0], ends[1])
        })
        .collect()
}

/// Whether `edges` (0-based ids into `g1_edges`) form a spanning tree on four vertices.
pub fn is_spanning_tree_of_g1(edges: &[usize]) -> bool {
    let ends = g1_edges();
    if edges.len() != 3 {
        return false;
    }
    let mut parent: Vec<usize> = (0..4).collect();
    fn find(p: &mut Vec<usize>, x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    for &e in edges {
        let (a, b) = ends[e];
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra == rb {
            return false;
        }
        parent[ra] = rb;
    }
    true
}
