//! Contributor duals across incidence duality, diagonally reduced contributors
//! and the extended characteristic polynomial over `V ∪ E`.
//!
//! Extended monomials use one label universe for both sides: the vertices of
//! the primal hypergraph `G` first, then its edges. Quantities computed on
//! `G*` are mapped back into that universe.

use std::collections::BTreeMap;

use itertools::Itertools;
use num_bigint::BigInt;
use rayon::prelude::*;

use crate::contributors::{
    ContributorLike, EnumerationConfig, Enumerator, P1Image, P1Kind, Pairing, ReducedContributor,
};
use crate::error::{Error, Result};
use crate::hypergraph::OrientedHypergraph;
use crate::minors::traditional_char_polynomial;
use crate::polynomial::{Monomial, MultivariatePolynomial, PositionVariable, UnivariatePolynomial};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Primal,
    Dual,
}

/// A member of the diagonally reduced set of `G` with its dual over `G*`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualPair {
    pub primal: ReducedContributor,
    pub dual: ReducedContributor,
    /// Over the universe `V ∪ E` of the primal.
    pub extended: Monomial,
}

/// Rejects anything outside the diagonally reduced set.
fn check_dualizable(g: &OrientedHypergraph, c: &ReducedContributor) -> Result<()> {
    if c.vertex_count() != g.vertex_count() {
        return Err(Error::NoDual(format!(
            "contributor has {} vertices but the hypergraph has {}",
            c.vertex_count(),
            g.vertex_count()
        )));
    }
    if !c.pairing().is_diagonal() {
        return Err(Error::NoDual(format!(
            "removed maps {} are not all fixed points",
            c.pairing().describe(g)
        )));
    }
    let mut seen: BTreeMap<usize, usize> = BTreeMap::new();
    for img in c.images() {
        if let Some(&other) = seen.get(&img.edge) {
            return Err(Error::NoDual(format!(
                "edge {} is used by the images at {} and {}",
                g.edge_label(img.edge),
                g.vertex_label(other),
                g.vertex_label(img.tail)
            )));
        }
        seen.insert(img.edge, img.tail);
    }
    if let Some(open) = c.components().iter().find(|comp| !comp.closed) {
        let path = open.images.iter().map(|i| g.vertex_label(i.tail)).join(" ");
        return Err(Error::NoDual(format!("open path through {path}")));
    }
    Ok(())
}

/// Dual of a diagonally reduced contributor of `g`, as a reduced contributor of
/// `g.incidence_dual()`.
///
/// A circle `v_0 -> v_1 -> ... -> v_0` whose step `a` leaves `v_a` through
/// incidence `t_a` of edge `e_a` and enters `v_{a+1}` through `h_a` becomes the
/// circle that leaves `e_a` through `t_a` and enters `e_{a-1}` through
/// `h_{a-1}`, travelling along `v_a`. The cyclic incidence sequence is the same
/// one read backwards. Backsteps stay backsteps and unused edges are removed as
/// fixed points.
pub fn contributor_dual(g: &OrientedHypergraph, c: &ReducedContributor) -> Result<ReducedContributor> {
    check_dualizable(g, c)?;
    let mut images: Vec<Option<P1Image>> = vec![None; g.edge_count()];
    for comp in c.components() {
        let len = comp.images.len();
        for (a, img) in comp.images.iter().enumerate() {
            let prev = &comp.images[(a + len - 1) % len];
            let kind = if img.is_backstep() {
                img.kind
            } else {
                P1Kind::Adjacency {
                    tail_incidence: img.tail_incidence(),
                    head_incidence: prev.head_incidence(),
                }
            };
            images[img.edge] = Some(P1Image {
                tail: img.edge,
                head: prev.edge,
                edge: img.tail,
                kind,
            });
        }
    }
    let unused: Vec<usize> = (0..g.edge_count()).filter(|&e| images[e].is_none()).collect();
    let pairing = Pairing::diagonal(unused, g.edge_count())?;
    ReducedContributor::new(images, pairing)
}

/// Edge-monic reduced contributors over every identity pairing, smallest
/// pairings first. Removing only fixed points leaves every surviving component
/// a circle or a backstep.
pub fn diagonally_reduced_set(
    g: &OrientedHypergraph,
    config: EnumerationConfig,
) -> Result<Vec<ReducedContributor>> {
    let n = g.vertex_count();
    let pairings: Vec<Pairing> = (0..=n)
        .flat_map(|k| (0..n).combinations(k))
        .map(|u| Pairing::diagonal(u, n).expect("distinct indices"))
        .collect();
    let enumerator = Enumerator::new(g, config);
    let predicted = pairings
        .iter()
        .map(|p| enumerator.predicted_count(p))
        .fold(pairings.len() as u128, u128::saturating_add);
    if predicted > u128::from(config.cap) {
        return Err(Error::CapExceeded {
            predicted,
            cap: config.cap,
        });
    }
    let mut out = Vec::new();
    for p in &pairings {
        out.extend(enumerator.enumerate_reduced(p, true)?);
    }
    Ok(out)
}

/// `∏ x[v,v]` over the reduced vertices. Indices are vertices of `g`.
pub fn diagonal_monomial(c: &ReducedContributor) -> Monomial {
    c.pairing()
        .rows()
        .iter()
        .map(|&v| PositionVariable::diagonal(v))
        .collect()
}

fn unused_edges(g: &OrientedHypergraph, c: &ReducedContributor) -> Vec<usize> {
    let mut used = vec![false; g.edge_count()];
    for img in c.images() {
        used[img.edge] = true;
    }
    (0..g.edge_count()).filter(|&e| !used[e]).collect()
}

/// `∏ x[v,v]` over reduced vertices times `∏ x[e,e]` over unused edges, over
/// the universe of `g` (vertices, then edges).
pub fn extended_monomial(g: &OrientedHypergraph, c: &ReducedContributor) -> Result<Monomial> {
    check_dualizable(g, c)?;
    let n = g.vertex_count();
    Ok(c.pairing()
        .rows()
        .iter()
        .copied()
        .chain(unused_edges(g, c).into_iter().map(|e| n + e))
        .map(PositionVariable::diagonal)
        .collect())
}

/// Moves a monomial over the universe of `G*` (its vertices, the edges of `G`,
/// then its edges, the vertices of `G`) into the universe of `G`.
pub fn dual_to_primal_universe(m: &Monomial, primal_vertices: usize, primal_edges: usize) -> Monomial {
    let remap = |i: usize| {
        if i < primal_edges {
            primal_vertices + i
        } else {
            i - primal_edges
        }
    };
    m.map_variables(|v| PositionVariable::new(remap(v.row), remap(v.col)))
}

/// Vertex labels followed by edge labels of the primal.
pub fn universe_labels(g: &OrientedHypergraph) -> Vec<String> {
    g.vertex_labels().iter().chain(g.edge_labels()).cloned().collect()
}

/// `Σ csgn(c)·extended_monomial(c)` over the diagonally reduced set of `G`
/// (`Side::Primal`) or of `G*` (`Side::Dual`), always over the universe of `G`.
pub fn extended_char_polynomial(
    g: &OrientedHypergraph,
    side: Side,
    config: EnumerationConfig,
) -> Result<MultivariatePolynomial> {
    let (n, m) = (g.vertex_count(), g.edge_count());
    let dual;
    let host = match side {
        Side::Primal => g,
        Side::Dual => {
            dual = g.incidence_dual();
            &dual
        }
    };
    let members = diagonally_reduced_set(host, config)?;
    let terms = members
        .par_iter()
        .map(|c| {
            let mono = extended_monomial(host, c)?;
            let mono = match side {
                Side::Primal => mono,
                Side::Dual => dual_to_primal_universe(&mono, n, m),
            };
            Ok((mono, c.csgn().to_i64()))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut out = MultivariatePolynomial::zero();
    for (mono, s) in terms {
        out.add_term(mono, BigInt::from(s));
    }
    Ok(out)
}

/// Every member of the diagonally reduced set of `g` with its dual.
pub fn dual_pairs(g: &OrientedHypergraph, config: EnumerationConfig) -> Result<Vec<DualPair>> {
    diagonally_reduced_set(g, config)?
        .into_iter()
        .map(|primal| {
            Ok(DualPair {
                dual: contributor_dual(g, &primal)?,
                extended: extended_monomial(g, &primal)?,
                primal,
            })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectralDualityReport {
    pub holds: bool,
    /// `x^|E|·χ(L_G, x)`.
    pub lhs: UnivariatePolynomial,
    /// `x^|V|·χ(L_G*, x)`.
    pub rhs: UnivariatePolynomial,
}

pub fn verify_spectral_duality(
    g: &OrientedHypergraph,
    config: EnumerationConfig,
) -> Result<SpectralDualityReport> {
    let primal = traditional_char_polynomial(g, config)?;
    let dual = traditional_char_polynomial(&g.incidence_dual(), config)?;
    let lhs = primal.shift(g.edge_count());
    let rhs = dual.shift(g.vertex_count());
    Ok(SpectralDualityReport {
        holds: lhs == rhs,
        lhs,
        rhs,
    })
}

/// For the `(u,u)`-reduced members of the diagonally reduced set, tallies csgn
/// by the diagonal monomial of the dual, which lives over the vertices of `G*`
/// (the edges of `G`). Monomials whose tally cancels to zero are omitted.
pub fn dual_scattering_report(
    g: &OrientedHypergraph,
    u: usize,
    w: usize,
    config: EnumerationConfig,
) -> Result<BTreeMap<Monomial, i64>> {
    g.check_vertex(u)?;
    g.check_vertex(w)?;
    if u != w {
        return Err(Error::OutOfScope(format!(
            "scattering is defined for diagonal pairings only, got {}->{}",
            g.vertex_label(u),
            g.vertex_label(w)
        )));
    }
    let pairing = Pairing::diagonal(vec![u], g.vertex_count())?;
    let members = Enumerator::new(g, config).enumerate_reduced(&pairing, true)?;
    let mut tally: BTreeMap<Monomial, i64> = BTreeMap::new();
    for c in &members {
        let dual = contributor_dual(g, c)?;
        *tally.entry(diagonal_monomial(&dual)).or_default() += c.csgn().to_i64();
    }
    tally.retain(|_, v| *v != 0);
    Ok(tally)
}

/// Primal description, dual description, shared extended monomial and csgn.
pub fn format_dual_pair(g: &OrientedHypergraph, pair: &DualPair) -> String {
    let dual_graph = g.incidence_dual();
    let ext = if pair.extended.is_one() {
        "1".to_string()
    } else {
        pair.extended.to_text(&universe_labels(g))
    };
    format!(
        "primal: {}\ndual:   {}\nextended monomial: {ext}\ncsgn: {}\n",
        pair.primal.describe(g),
        pair.dual.describe(&dual_graph),
        pair.primal.csgn()
    )
}
