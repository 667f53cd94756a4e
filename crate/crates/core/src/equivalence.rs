//! Tail- and head-equivalence classes of contributors.
//!
//! Two contributors with the same pairing are tail-equivalent when every
//! surviving vertex leaves through the same incidence, and head-equivalent when
//! every surviving head is entered through the same incidence.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use itertools::Itertools;

use crate::contributors::{Contributor, ContributorLike, Pairing};
use crate::error::{Error, Result};
use crate::hypergraph::OrientedHypergraph;
use crate::perm;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Tail,
    Head,
}

impl Mode {
    pub fn key_of<C: ContributorLike>(self, c: &C) -> Vec<(usize, usize)> {
        match self {
            Mode::Tail => c.tail_key(),
            Mode::Head => c.head_key(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceClass<C> {
    pub mode: Mode,
    pub pairing: Pairing,
    /// `(vertex, incidence id)` pairs shared by every member, ordered by vertex.
    pub key: Vec<(usize, usize)>,
    pub members: Vec<C>,
    /// Position of each member in the list handed to [`partition`].
    pub indices: Vec<usize>,
}

impl<C: ContributorLike> EquivalenceClass<C> {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// The member whose reconstructed permutation is the identity, if any.
    pub fn identity_representative(&self) -> Option<&C> {
        self.members
            .iter()
            .find(|c| c.permutation().iter().enumerate().all(|(v, &h)| v == h))
    }
}

type ClassKey = (Vec<(usize, usize)>, Pairing);

/// Groups contributors by pairing and key. Classes come out ordered by key,
/// members keep their input order.
pub fn partition<C: ContributorLike + Clone>(contributors: &[C], mode: Mode) -> Vec<EquivalenceClass<C>> {
    let mut groups: BTreeMap<ClassKey, Vec<usize>> = BTreeMap::new();
    for (i, c) in contributors.iter().enumerate() {
        groups
            .entry((mode.key_of(c), c.pairing().clone()))
            .or_default()
            .push(i);
    }
    groups
        .into_iter()
        .map(|((key, pairing), indices)| EquivalenceClass {
            mode,
            pairing,
            key,
            members: indices.iter().map(|&i| contributors[i].clone()).collect(),
            indices,
        })
        .collect()
}

pub fn is_edge_monic<C: ContributorLike>(c: &C) -> bool {
    c.is_edge_monic()
}

/// Decided by the first member. Every member of a class uses the same tail
/// (or head) edges, so the answer is shared; debug builds check this.
pub fn class_is_edge_monic<C: ContributorLike>(cls: &EquivalenceClass<C>) -> Result<bool> {
    let first = cls.members.first().ok_or(Error::EmptyClass)?;
    let answer = first.is_edge_monic();
    debug_assert!(cls.members.iter().all(|c| c.is_edge_monic() == answer));
    Ok(answer)
}

pub fn class_csgn_sum<C: ContributorLike>(cls: &EquivalenceClass<C>) -> i64 {
    cls.members.iter().map(|c| c.csgn().to_i64()).sum()
}

/// Traverses every cycle backwards over the same incidences. Backsteps stay put
/// and the permutation becomes its inverse.
pub fn reverse_cycles(c: &Contributor) -> Contributor {
    let mut images = c.image_list().to_vec();
    for img in c.image_list() {
        images[img.head] = img.reversed();
    }
    Contributor::new(images).expect("inverse of a permutation")
}

/// Shape of a tail class of a bidirected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeReport {
    /// Number of atoms; the class has `2^k` members.
    pub k: usize,
    /// Members with `r` circles, for `r = 0..=k`.
    pub rank_sizes: Vec<usize>,
    pub rank_csgn_sums: Vec<i64>,
}

/// Checks that the members, ordered by containment of their circle sets, form
/// the Boolean lattice on the circles that occur in the class.
pub fn boolean_lattice_structure<C: ContributorLike>(
    g: &OrientedHypergraph,
    cls: &EquivalenceClass<C>,
) -> Result<LatticeReport> {
    g.require_bidirected()?;
    if cls.is_empty() {
        return Err(Error::EmptyClass);
    }
    let circle_sets: Vec<BTreeSet<Vec<usize>>> = cls
        .members
        .iter()
        .map(|c| {
            c.components()
                .iter()
                .filter(|comp| !comp.is_backstep())
                .map(|comp| comp.incidence_set())
                .collect()
        })
        .collect();
    let atoms: BTreeSet<&Vec<usize>> = circle_sets.iter().flatten().collect();
    let k = atoms.len();
    if k >= usize::BITS as usize || cls.len() != 1 << k {
        return Err(Error::LatticeViolation(format!(
            "class of size {} over {k} distinct circles",
            cls.len()
        )));
    }
    if !circle_sets.iter().all_unique() {
        return Err(Error::LatticeViolation(
            "two members use the same set of circles".into(),
        ));
    }
    let mut rank_sizes = vec![0; k + 1];
    let mut rank_csgn_sums = vec![0; k + 1];
    for (set, c) in circle_sets.iter().zip(&cls.members) {
        rank_sizes[set.len()] += 1;
        rank_csgn_sums[set.len()] += c.csgn().to_i64();
    }
    Ok(LatticeReport {
        k,
        rank_sizes,
        rank_csgn_sums,
    })
}

/// `counts[k]` is the number of contributors whose permutation has `k` cycles.
pub fn cycle_count_histogram<C: ContributorLike>(contributors: &[C]) -> Vec<usize> {
    let n = contributors.first().map_or(0, |c| c.vertex_count());
    let mut counts = vec![0; n + 1];
    for c in contributors {
        counts[perm::cycles(&c.permutation()).len()] += 1;
    }
    counts
}

/// One block per class: key, size, edge-monic flag, csgn sum, member indices.
pub fn format_classes<C: ContributorLike>(g: &OrientedHypergraph, classes: &[EquivalenceClass<C>]) -> String {
    let mut out = String::new();
    for (n, cls) in classes.iter().enumerate() {
        let key = cls
            .key
            .iter()
            .map(|&(v, id)| {
                let inc = g.incidence(id);
                format!("{}:{}#{id}", g.vertex_label(v), g.edge_label(inc.edge))
            })
            .join(" ");
        let mode = match cls.mode {
            Mode::Tail => "tail",
            Mode::Head => "head",
        };
        writeln!(out, "class {} ({mode})", n + 1).unwrap();
        if !cls.pairing.is_empty() {
            writeln!(out, "  removed: {}", cls.pairing.describe(g)).unwrap();
        }
        writeln!(out, "  key: {key}").unwrap();
        writeln!(out, "  size: {}", cls.len()).unwrap();
        let monic = class_is_edge_monic(cls).unwrap_or(false);
        writeln!(out, "  edge-monic: {}", if monic { "yes" } else { "no" }).unwrap();
        writeln!(out, "  csgn sum: {}", class_csgn_sum(cls)).unwrap();
        writeln!(out, "  members: {}", cls.indices.iter().join(" ")).unwrap();
    }
    out
}
