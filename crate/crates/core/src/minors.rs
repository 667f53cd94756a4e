//! Total-minor and characteristic polynomials of `L = H·Hᵀ`, computed from
//! contributors, together with a Leibniz-expansion oracle that never touches
//! the contributor code.

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::contributors::{EnumerationConfig, Enumerator, Pairing};
use crate::error::{Error, Result};
use crate::hypergraph::OrientedHypergraph;
use crate::matrix::IntegerMatrix;
use crate::polynomial::{Monomial, MultivariatePolynomial, UnivariatePolynomial};

/// Largest vertex count accepted by the Leibniz oracles.
pub const ORACLE_MAX_VERTICES: usize = 10;

fn check_oracle_size(n: usize) -> Result<()> {
    if n > ORACLE_MAX_VERTICES {
        return Err(Error::OracleTooLarge {
            max: ORACLE_MAX_VERTICES,
            got: n,
        });
    }
    Ok(())
}

/// `det(X - L)` by signed permutation expansion of the symbolic matrix with
/// entries `x[i,j] - L[i][j]`.
pub fn determinant_oracle(g: &OrientedHypergraph) -> Result<MultivariatePolynomial> {
    symbolic_determinant(&g.laplacian().matrix)
}

/// `det(X - M)` for any square integer matrix `M`.
pub fn symbolic_determinant(m: &IntegerMatrix) -> Result<MultivariatePolynomial> {
    if !m.is_square() {
        return Err(Error::MalformedMatrix(format!(
            "{}x{} matrix is not square",
            m.rows(),
            m.cols()
        )));
    }
    let n = m.rows();
    check_oracle_size(n)?;
    let mut out = MultivariatePolynomial::zero();
    let mut chosen = Vec::with_capacity(n);
    leibniz_symbolic(m, 0, 0, false, &mut chosen, BigInt::one(), &mut out);
    Ok(out)
}

fn leibniz_symbolic(
    m: &IntegerMatrix,
    row: usize,
    used: u32,
    odd: bool,
    chosen: &mut Vec<(usize, usize)>,
    coeff: BigInt,
    out: &mut MultivariatePolynomial,
) {
    let n = m.rows();
    if row == n {
        let c = if odd { -coeff } else { coeff };
        out.add_term(Monomial::from_pairs(chosen.iter().copied()), c);
        return;
    }
    for col in 0..n {
        if used & (1 << col) != 0 {
            continue;
        }
        let inversions = (used >> (col + 1)).count_ones();
        let next_odd = odd ^ (inversions % 2 == 1);
        let next_used = used | (1 << col);

        chosen.push((row, col));
        leibniz_symbolic(m, row + 1, next_used, next_odd, chosen, coeff.clone(), out);
        chosen.pop();

        let entry = m.get(row, col);
        if !entry.is_zero() {
            leibniz_symbolic(m, row + 1, next_used, next_odd, chosen, -(&coeff * entry), out);
        }
    }
}

/// `det(xI - L)` by Leibniz expansion with univariate entries.
pub fn char_polynomial_oracle(g: &OrientedHypergraph) -> Result<UnivariatePolynomial> {
    let l = g.laplacian().matrix;
    let n = l.rows();
    check_oracle_size(n)?;
    let mut acc = vec![BigInt::zero(); n + 1];
    leibniz_univariate(&l, 0, 0, false, UnivariatePolynomial::monomial(0), &mut acc);
    Ok(UnivariatePolynomial::new(acc))
}

fn leibniz_univariate(
    l: &IntegerMatrix,
    row: usize,
    used: u32,
    odd: bool,
    term: UnivariatePolynomial,
    acc: &mut [BigInt],
) {
    let n = l.rows();
    if row == n {
        for (k, c) in term.coefficients().iter().enumerate() {
            if odd {
                acc[k] -= c;
            } else {
                acc[k] += c;
            }
        }
        return;
    }
    for col in 0..n {
        if used & (1 << col) != 0 {
            continue;
        }
        let entry = if row == col {
            UnivariatePolynomial::new(vec![-l.get(row, col), BigInt::one()])
        } else {
            UnivariatePolynomial::new(vec![-l.get(row, col)])
        };
        if entry.is_zero() {
            continue;
        }
        let inversions = (used >> (col + 1)).count_ones();
        leibniz_univariate(
            l,
            row + 1,
            used | (1 << col),
            odd ^ (inversions % 2 == 1),
            &term * &entry,
            acc,
        );
    }
}

/// Every pairing `rows -> cols` with `rows` an increasing subset of the
/// vertices and `cols` an arrangement of an equal-size subset. Ordered by
/// size, then rows, then cols.
pub fn all_pairings(n: usize) -> impl Iterator<Item = Pairing> {
    (0..=n).flat_map(move |k| {
        (0..n).combinations(k).flat_map(move |rows| {
            (0..n)
                .combinations(k)
                .flat_map(move |cs| cs.into_iter().permutations(k))
                .map(move |cols| Pairing::new(rows.clone(), cols, n).expect("distinct indices"))
        })
    })
}

/// Number of pairings produced by [`all_pairings`]: `Σ_k C(n,k)² k!`.
pub fn pairing_count(n: usize) -> u128 {
    let mut total: u128 = 1;
    let mut binom: u128 = 1;
    let mut fact: u128 = 1;
    for k in 1..=n as u128 {
        binom = binom.saturating_mul(n as u128 - k + 1) / k;
        fact = fact.saturating_mul(k);
        total = total.saturating_add(binom.saturating_mul(binom).saturating_mul(fact));
    }
    total
}

/// Result of a contributor-driven polynomial computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinorComputation {
    pub polynomial: MultivariatePolynomial,
    /// Reduced contributors visited across all pairings.
    pub visited: u64,
}

fn sum_over_pairings(
    g: &OrientedHypergraph,
    pairings: Vec<Pairing>,
    edge_monic_only: bool,
    config: EnumerationConfig,
    monomial: impl Fn(&Pairing) -> Monomial + Sync,
) -> Result<MinorComputation> {
    let enumerator = Enumerator::new(g, config);
    let predicted = pairings
        .par_iter()
        .map(|p| enumerator.predicted_count(p))
        .reduce(|| 0, u128::saturating_add)
        .saturating_add(pairings.len() as u128);
    if predicted > u128::from(config.cap) {
        return Err(Error::CapExceeded {
            predicted,
            cap: config.cap,
        });
    }
    let sums = pairings
        .par_iter()
        .map(|p| enumerator.csgn_sum(p, edge_monic_only).map(|s| (monomial(p), s)))
        .collect::<Result<Vec<_>>>()?;
    let mut polynomial = MultivariatePolynomial::zero();
    let mut visited = 0;
    for (m, (sum, count)) in sums {
        polynomial.add_term(m, BigInt::from(sum));
        visited += count;
    }
    Ok(MinorComputation { polynomial, visited })
}

fn check_pairing_budget(config: EnumerationConfig, count: u128) -> Result<()> {
    if count > u128::from(config.cap) {
        return Err(Error::CapExceeded {
            predicted: count,
            cap: config.cap,
        });
    }
    Ok(())
}

/// `det(X - L)` as the signed count of reduced contributors of every pairing.
pub fn total_minor_polynomial(
    g: &OrientedHypergraph,
    edge_monic_only: bool,
    config: EnumerationConfig,
) -> Result<MultivariatePolynomial> {
    total_minor_computation(g, edge_monic_only, config).map(|c| c.polynomial)
}

pub fn total_minor_computation(
    g: &OrientedHypergraph,
    edge_monic_only: bool,
    config: EnumerationConfig,
) -> Result<MinorComputation> {
    let n = g.vertex_count();
    check_pairing_budget(config, pairing_count(n))?;
    sum_over_pairings(g, all_pairings(n).collect(), edge_monic_only, config, |p| {
        Monomial::from_pairs(p.pairs())
    })
}

/// `det(diag(x_v) - L)`: only identity pairings are enumerated.
pub fn diagonal_char_polynomial(
    g: &OrientedHypergraph,
    config: EnumerationConfig,
) -> Result<MultivariatePolynomial> {
    diagonal_computation(g, true, config).map(|c| c.polynomial)
}

pub fn diagonal_computation(
    g: &OrientedHypergraph,
    edge_monic_only: bool,
    config: EnumerationConfig,
) -> Result<MinorComputation> {
    let n = g.vertex_count();
    let count = 1u128.checked_shl(n as u32).unwrap_or(u128::MAX);
    check_pairing_budget(config, count)?;
    let pairings = (0..=n)
        .flat_map(|k| (0..n).combinations(k))
        .map(|u| Pairing::diagonal(u, n).expect("distinct indices"))
        .collect();
    sum_over_pairings(g, pairings, edge_monic_only, config, |p| {
        Monomial::from_pairs(p.pairs())
    })
}

/// `det(xI - L)` from the diagonal polynomial, cross-checked against
/// [`char_polynomial_oracle`] whenever the oracle accepts the size.
pub fn traditional_char_polynomial(
    g: &OrientedHypergraph,
    config: EnumerationConfig,
) -> Result<UnivariatePolynomial> {
    let p = diagonal_char_polynomial(g, config)?.collapse_diagonal();
    if g.vertex_count() <= ORACLE_MAX_VERTICES {
        let oracle = char_polynomial_oracle(g)?;
        if oracle != p {
            return Err(Error::CrossCheck(format!(
                "contributors give {p}, Leibniz expansion gives {oracle}"
            )));
        }
    }
    Ok(p)
}

/// Coefficient of `∏ x[u_i, w_i]` in the total-minor polynomial.
pub fn cofactor(
    g: &OrientedHypergraph,
    u: &[usize],
    w: &[usize],
    config: EnumerationConfig,
) -> Result<BigInt> {
    let pairing = Pairing::new(u.to_vec(), w.to_vec(), g.vertex_count())?;
    let (sum, _) = Enumerator::new(g, config).csgn_sum(&pairing, true)?;
    Ok(BigInt::from(sum))
}
