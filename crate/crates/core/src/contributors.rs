//! Contributors: one directed length-1 walk image per vertex whose heads form a
//! permutation of the vertex set.
//!
//! A reduced contributor drops the images of the vertices in `u` and records
//! the removed `u_i -> w_i` maps as a [`Pairing`]. Removed maps never need to
//! exist in the hypergraph; they only enter the sign through the cycle
//! structure of the reconstructed permutation.
//!
//! Every image `t -> h` carries the weight `-σ(t)σ(h)`, which is the adjacency
//! sign of the walk for a proper adjacency and `-1` for a backstep. This is the
//! term of `-L[v][w]` it selects, so summing `csgn` over the reduced
//! contributors of a pairing reproduces the matching coefficient of
//! `det(X - L)`.

use std::fmt::Write as _;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::hypergraph::{asgn_of_signs, OrientedHypergraph};
use crate::perm;
use crate::sign::Sign;

/// Default cap on the number of P1-image tuples a single enumeration may visit.
pub const DEFAULT_CAP: u64 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationConfig {
    pub cap: u64,
}

impl Default for EnumerationConfig {
    fn default() -> Self {
        EnumerationConfig { cap: DEFAULT_CAP }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IncidenceRef {
    pub id: usize,
    pub sign: Sign,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum P1Kind {
    /// Two distinct incidences of one edge. A loop when both sit at the same vertex.
    Adjacency {
        tail_incidence: IncidenceRef,
        head_incidence: IncidenceRef,
    },
    /// The walk `v, i, e, i, v` reusing a single incidence.
    Backstep { incidence: IncidenceRef },
}

/// Image of a directed length-1 walk in the hypergraph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct P1Image {
    pub tail: usize,
    pub head: usize,
    pub edge: usize,
    pub kind: P1Kind,
}

impl P1Image {
    pub fn tail_incidence(&self) -> IncidenceRef {
        match self.kind {
            P1Kind::Adjacency { tail_incidence, .. } => tail_incidence,
            P1Kind::Backstep { incidence } => incidence,
        }
    }

    pub fn head_incidence(&self) -> IncidenceRef {
        match self.kind {
            P1Kind::Adjacency { head_incidence, .. } => head_incidence,
            P1Kind::Backstep { incidence } => incidence,
        }
    }

    pub fn is_backstep(&self) -> bool {
        matches!(self.kind, P1Kind::Backstep { .. })
    }

    pub fn is_loop(&self) -> bool {
        !self.is_backstep() && self.tail == self.head
    }

    /// `-σ(tail)σ(head)`.
    pub fn sign(&self) -> Sign {
        -(self.tail_incidence().sign * self.head_incidence().sign)
    }

    /// The same incidences traversed head to tail. Backsteps are unchanged.
    pub fn reversed(&self) -> P1Image {
        match self.kind {
            P1Kind::Backstep { .. } => *self,
            P1Kind::Adjacency {
                tail_incidence,
                head_incidence,
            } => P1Image {
                tail: self.head,
                head: self.tail,
                edge: self.edge,
                kind: P1Kind::Adjacency {
                    tail_incidence: head_incidence,
                    head_incidence: tail_incidence,
                },
            },
        }
    }
}

/// Removed maps `rows[i] -> cols[i]` of a reduced contributor.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pairing {
    rows: Vec<usize>,
    cols: Vec<usize>,
}

static EMPTY_PAIRING: Pairing = Pairing {
    rows: Vec::new(),
    cols: Vec::new(),
};

impl Pairing {
    pub fn new(rows: Vec<usize>, cols: Vec<usize>, vertex_count: usize) -> Result<Self> {
        if rows.len() != cols.len() {
            return Err(Error::MalformedPairing(format!(
                "u has {} entries but w has {}",
                rows.len(),
                cols.len()
            )));
        }
        for (name, list) in [("u", &rows), ("w", &cols)] {
            if let Some(&bad) = list.iter().find(|&&v| v >= vertex_count) {
                return Err(Error::VertexOutOfRange {
                    index: bad,
                    count: vertex_count,
                });
            }
            if !list.iter().all_unique() {
                return Err(Error::MalformedPairing(format!("{name} repeats a vertex")));
            }
        }
        Ok(Pairing { rows, cols })
    }

    pub fn empty() -> Self {
        Pairing::default()
    }

    /// The identity pairing `v -> v` on `vertices`.
    pub fn diagonal(vertices: Vec<usize>, vertex_count: usize) -> Result<Self> {
        Pairing::new(vertices.clone(), vertices, vertex_count)
    }

    /// Parses two lists of vertex labels.
    pub fn from_labels<S: AsRef<str>>(g: &OrientedHypergraph, u: &[S], w: &[S]) -> Result<Self> {
        let lookup = |l: &[S]| {
            l.iter()
                .map(|s| g.vertex_index(s.as_ref()))
                .collect::<Result<Vec<_>>>()
        };
        Pairing::new(lookup(u)?, lookup(w)?, g.vertex_count())
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn cols(&self) -> &[usize] {
        &self.cols
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows.iter().copied().zip(self.cols.iter().copied())
    }

    /// Every removed map is a fixed point `v -> v`.
    pub fn is_diagonal(&self) -> bool {
        self.rows == self.cols
    }

    pub fn describe(&self, g: &OrientedHypergraph) -> String {
        self.pairs()
            .map(|(u, w)| format!("{}->{}", g.vertex_label(u), g.vertex_label(w)))
            .join(",")
    }
}

/// A maximal chain of surviving images following the reconstructed permutation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub images: Vec<P1Image>,
    /// False when the chain was cut open by removed maps.
    pub closed: bool,
}

impl Component {
    pub fn is_backstep(&self) -> bool {
        self.images.len() == 1 && self.images[0].is_backstep()
    }

    pub fn incidence_sequence(&self) -> Vec<IncidenceRef> {
        self.images
            .iter()
            .flat_map(|i| [i.tail_incidence(), i.head_incidence()])
            .collect()
    }

    pub fn sign(&self) -> Sign {
        let seq = self.incidence_sequence();
        asgn_of_signs(seq.len(), seq.iter().map(|i| i.sign))
    }

    /// Sorted ids of the incidences the component uses.
    pub fn incidence_set(&self) -> Vec<usize> {
        let mut ids: Vec<usize> = self.incidence_sequence().iter().map(|i| i.id).collect();
        ids.sort_unstable();
        ids.dedup();
        ids
    }
}

/// Counters feeding the contributor sign.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ContributorStats {
    /// Even cycles of the reconstructed (unreduced) permutation.
    pub even_cycles_unreduced: usize,
    pub even_components: usize,
    pub odd_components: usize,
    pub positive_components: usize,
    pub negative_components: usize,
    pub backsteps: usize,
}

impl ContributorStats {
    pub fn csgn(&self) -> Sign {
        Sign::from_parity((self.even_cycles_unreduced + self.negative_components + self.backsteps) % 2 == 1)
    }
}

/// Shared behaviour of full and reduced contributors.
pub trait ContributorLike {
    fn vertex_count(&self) -> usize;

    /// Surviving image with tail `v`.
    fn image(&self, v: usize) -> Option<&P1Image>;

    fn pairing(&self) -> &Pairing;

    fn images(&self) -> impl Iterator<Item = &P1Image> + '_ {
        (0..self.vertex_count()).filter_map(move |v| self.image(v))
    }

    /// Surviving heads together with the removed maps.
    fn permutation(&self) -> Vec<usize> {
        let mut p = vec![usize::MAX; self.vertex_count()];
        for img in self.images() {
            p[img.tail] = img.head;
        }
        for (u, w) in self.pairing().pairs() {
            p[u] = w;
        }
        p
    }

    fn is_edge_monic(&self) -> bool {
        self.images().map(|i| i.edge).all_unique()
    }

    /// `(tail vertex, tail incidence id)` of every surviving image.
    fn tail_key(&self) -> Vec<(usize, usize)> {
        self.images().map(|i| (i.tail, i.tail_incidence().id)).collect()
    }

    /// `(head vertex, head incidence id)` of every surviving image, ordered by head.
    fn head_key(&self) -> Vec<(usize, usize)> {
        let mut key: Vec<_> = self.images().map(|i| (i.head, i.head_incidence().id)).collect();
        key.sort_unstable();
        key
    }

    fn components(&self) -> Vec<Component> {
        let perm = self.permutation();
        let mut removed = vec![false; self.vertex_count()];
        for &u in self.pairing().rows() {
            removed[u] = true;
        }
        let mut out = Vec::new();
        for mut cycle in perm::cycles(&perm) {
            match cycle.iter().position(|&v| removed[v]) {
                None => out.push(Component {
                    images: cycle
                        .iter()
                        .map(|&v| *self.image(v).expect("surviving"))
                        .collect(),
                    closed: true,
                }),
                Some(start) => {
                    cycle.rotate_left(start);
                    for run in cycle.split(|&v| removed[v]).filter(|r| !r.is_empty()) {
                        out.push(Component {
                            images: run.iter().map(|&v| *self.image(v).expect("surviving")).collect(),
                            closed: false,
                        });
                    }
                }
            }
        }
        out
    }

    fn stats(&self) -> ContributorStats {
        let mut stats = ContributorStats {
            even_cycles_unreduced: perm::even_cycle_count(&self.permutation()),
            ..Default::default()
        };
        for comp in self.components() {
            if comp.is_backstep() {
                stats.backsteps += 1;
                continue;
            }
            if comp.images.len() % 2 == 0 {
                stats.even_components += 1;
            } else {
                stats.odd_components += 1;
            }
            if comp.sign().is_negative() {
                stats.negative_components += 1;
            } else {
                stats.positive_components += 1;
            }
        }
        stats
    }

    fn csgn(&self) -> Sign {
        self.stats().csgn()
    }

    /// One-line record: permutation in cycle notation, then every image.
    fn describe(&self, g: &OrientedHypergraph) -> String {
        let mut s = perm::cycle_notation(&self.permutation(), g.vertex_labels());
        for img in self.images() {
            let (t, h, e) = (
                g.vertex_label(img.tail),
                g.vertex_label(img.head),
                g.edge_label(img.edge),
            );
            match img.kind {
                P1Kind::Backstep { incidence } => write!(s, "  {t} ~[{e},{}]~ {t}", incidence.sign).unwrap(),
                P1Kind::Adjacency {
                    tail_incidence,
                    head_incidence,
                } => write!(
                    s,
                    "  {t} --[{e},({},{})]--> {h}",
                    tail_incidence.sign, head_incidence.sign
                )
                .unwrap(),
            }
        }
        if !self.pairing().is_empty() {
            write!(s, "  | removed {}", self.pairing().describe(g)).unwrap();
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Contributor {
    images: Vec<P1Image>,
}

impl Contributor {
    /// Validates that tails cover every vertex once and heads form a permutation.
    pub fn new(images: Vec<P1Image>) -> Result<Self> {
        let n = images.len();
        if images.iter().enumerate().any(|(v, i)| i.tail != v) {
            return Err(Error::MalformedPairing(
                "image tails must be 0..n in order".into(),
            ));
        }
        let heads: Vec<usize> = images.iter().map(|i| i.head).collect();
        if heads.iter().any(|&h| h >= n) || !perm::is_permutation(&heads) {
            return Err(Error::MalformedPairing(
                "image heads are not a permutation".into(),
            ));
        }
        Ok(Contributor { images })
    }

    pub fn image_list(&self) -> &[P1Image] {
        &self.images
    }

    pub fn to_reduced(&self) -> ReducedContributor {
        ReducedContributor {
            images: self.images.iter().copied().map(Some).collect(),
            pairing: Pairing::empty(),
        }
    }
}

impl ContributorLike for Contributor {
    fn vertex_count(&self) -> usize {
        self.images.len()
    }

    fn image(&self, v: usize) -> Option<&P1Image> {
        self.images.get(v)
    }

    fn pairing(&self) -> &Pairing {
        &EMPTY_PAIRING
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ReducedContributor {
    images: Vec<Option<P1Image>>,
    pairing: Pairing,
}

impl ReducedContributor {
    /// Validates that surviving tails are `V \ U`, surviving heads are `V \ W`
    /// and the reconstructed map is a permutation.
    pub fn new(images: Vec<Option<P1Image>>, pairing: Pairing) -> Result<Self> {
        let n = images.len();
        let mut removed = vec![false; n];
        for &u in pairing.rows() {
            if u >= n {
                return Err(Error::VertexOutOfRange { index: u, count: n });
            }
            removed[u] = true;
        }
        for (v, img) in images.iter().enumerate() {
            match img {
                Some(i) if i.tail != v || removed[v] => {
                    return Err(Error::MalformedPairing(format!(
                        "image at slot {v} does not belong to a surviving tail"
                    )))
                }
                None if !removed[v] => {
                    return Err(Error::MalformedPairing(format!("vertex {v} has no image")))
                }
                _ => {}
            }
        }
        let rc = ReducedContributor { images, pairing };
        let p = rc.permutation();
        if p.iter().any(|&h| h >= n) || !perm::is_permutation(&p) {
            return Err(Error::MalformedPairing(
                "surviving heads and removed maps do not form a permutation".into(),
            ));
        }
        Ok(rc)
    }

    pub fn image_slots(&self) -> &[Option<P1Image>] {
        &self.images
    }

    pub fn surviving_count(&self) -> usize {
        self.images.iter().flatten().count()
    }

    /// Back to a full contributor when nothing was removed.
    pub fn to_contributor(&self) -> Option<Contributor> {
        self.images
            .iter()
            .copied()
            .collect::<Option<Vec<_>>>()
            .map(|images| Contributor { images })
    }
}

impl ContributorLike for ReducedContributor {
    fn vertex_count(&self) -> usize {
        self.images.len()
    }

    fn image(&self, v: usize) -> Option<&P1Image> {
        self.images.get(v).and_then(Option::as_ref)
    }

    fn pairing(&self) -> &Pairing {
        &self.pairing
    }
}

pub fn contributor_stats(rc: &ReducedContributor) -> ContributorStats {
    rc.stats()
}

pub fn csgn(rc: &ReducedContributor) -> Sign {
    rc.csgn()
}

/// All weak walks `v -> w` of length one, in incidence-id order.
///
/// For `v == w` this is every backstep at `v` plus every loop (pair of distinct
/// incidences at `v` in a common edge).
pub fn weak_adjacencies(g: &OrientedHypergraph, v: usize, w: usize) -> Result<Vec<P1Image>> {
    g.check_vertex(v)?;
    g.check_vertex(w)?;
    Ok(weak_adjacencies_unchecked(g, v, w))
}

fn weak_adjacencies_unchecked(g: &OrientedHypergraph, v: usize, w: usize) -> Vec<P1Image> {
    let mut out = Vec::new();
    for &i in g.incidences_at_vertex(v) {
        let ti = g.incidence(i);
        for &j in g.incidences_at_vertex(w) {
            let hj = g.incidence(j);
            if ti.edge != hj.edge {
                continue;
            }
            let tail_incidence = IncidenceRef { id: i, sign: ti.sign };
            let kind = if i == j {
                P1Kind::Backstep {
                    incidence: tail_incidence,
                }
            } else {
                P1Kind::Adjacency {
                    tail_incidence,
                    head_incidence: IncidenceRef { id: j, sign: hj.sign },
                }
            };
            out.push(P1Image {
                tail: v,
                head: w,
                edge: ti.edge,
                kind,
            });
        }
    }
    out
}

/// Enumerates (reduced) contributors of one hypergraph.
///
/// Bijections of surviving tails onto surviving heads are visited in
/// lexicographic order; for each, image choices are visited in incidence-id
/// order with the first tail varying slowest.
pub struct Enumerator<'g> {
    graph: &'g OrientedHypergraph,
    config: EnumerationConfig,
    table: Vec<Vec<P1Image>>,
}

impl<'g> Enumerator<'g> {
    pub fn new(graph: &'g OrientedHypergraph, config: EnumerationConfig) -> Self {
        let n = graph.vertex_count();
        let table = (0..n * n)
            .map(|k| weak_adjacencies_unchecked(graph, k / n, k % n))
            .collect();
        Enumerator { graph, config, table }
    }

    pub fn graph(&self) -> &'g OrientedHypergraph {
        self.graph
    }

    pub fn config(&self) -> EnumerationConfig {
        self.config
    }

    pub fn weak_adjacencies(&self, v: usize, w: usize) -> &[P1Image] {
        let n = self.graph.vertex_count();
        &self.table[v * n + w]
    }

    fn free_vertices(&self, pairing: &Pairing) -> (Vec<usize>, Vec<usize>) {
        let n = self.graph.vertex_count();
        let tails = (0..n).filter(|v| !pairing.rows().contains(v)).collect();
        let heads = (0..n).filter(|v| !pairing.cols().contains(v)).collect();
        (tails, heads)
    }

    fn check_pairing(&self, pairing: &Pairing) -> Result<()> {
        let n = self.graph.vertex_count();
        match pairing.rows().iter().chain(pairing.cols()).find(|&&v| v >= n) {
            Some(&bad) => Err(Error::VertexOutOfRange { index: bad, count: n }),
            None => Ok(()),
        }
    }

    /// Number of P1-image tuples a full enumeration of `pairing` visits,
    /// before any edge-monic pruning. Saturates at `u128::MAX`.
    pub fn predicted_count(&self, pairing: &Pairing) -> u128 {
        let (tails, heads) = self.free_vertices(pairing);
        let mut total: u128 = 0;
        for beta in heads.iter().copied().permutations(heads.len()) {
            let product = tails.iter().zip(&beta).try_fold(1u128, |acc, (&t, &h)| {
                let k = self.weak_adjacencies(t, h).len() as u128;
                (k != 0).then(|| acc.saturating_mul(k))
            });
            total = total.saturating_add(product.unwrap_or(0));
        }
        total
    }

    fn check_cap(&self, pairing: &Pairing) -> Result<()> {
        let predicted = self.predicted_count(pairing);
        if predicted > u128::from(self.config.cap) {
            return Err(Error::CapExceeded {
                predicted,
                cap: self.config.cap,
            });
        }
        Ok(())
    }

    /// Calls `f` with every reduced contributor of `pairing` and its sign.
    /// Returns the number visited. The reference handed to `f` is only valid
    /// for the duration of the call.
    pub fn visit<F>(&self, pairing: &Pairing, edge_monic_only: bool, mut f: F) -> Result<u64>
    where
        F: FnMut(&ReducedContributor, Sign),
    {
        self.check_pairing(pairing)?;
        self.check_cap(pairing)?;
        let n = self.graph.vertex_count();
        let (tails, heads) = self.free_vertices(pairing);
        let mut removed = vec![false; n];
        let mut full = vec![usize::MAX; n];
        for (u, w) in pairing.pairs() {
            removed[u] = true;
            full[u] = w;
        }
        let mut walk = Walk {
            tails: &tails,
            choices: Vec::with_capacity(tails.len()),
            comp_of: vec![0; tails.len()],
            comp_sign: Vec::new(),
            comp_has_adjacency: Vec::new(),
            edge_use: vec![0; self.graph.edge_count()],
            edge_monic_only,
            even_cycles: 0,
            rc: ReducedContributor {
                images: vec![None; n],
                pairing: pairing.clone(),
            },
            visited: 0,
        };
        let mut slot_of = vec![usize::MAX; n];
        for (k, &t) in tails.iter().enumerate() {
            slot_of[t] = k;
        }

        for beta in heads.iter().copied().permutations(heads.len()) {
            walk.choices.clear();
            for (&t, &h) in tails.iter().zip(&beta) {
                walk.choices.push(self.weak_adjacencies(t, h));
                full[t] = h;
            }
            if walk.choices.iter().any(|c| c.is_empty()) {
                continue;
            }
            walk.even_cycles = perm::even_cycle_count(&full);
            let comps = plan_components(&full, &removed);
            walk.comp_sign = vec![Sign::Plus; comps.len()];
            walk.comp_has_adjacency = vec![false; comps.len()];
            for (c, members) in comps.iter().enumerate() {
                for &v in members {
                    walk.comp_of[slot_of[v]] = c;
                }
            }
            walk.descend(0, &mut f);
        }
        Ok(walk.visited)
    }

    pub fn enumerate_reduced(
        &self,
        pairing: &Pairing,
        edge_monic_only: bool,
    ) -> Result<Vec<ReducedContributor>> {
        let mut out = Vec::new();
        self.visit(pairing, edge_monic_only, |rc, _| out.push(rc.clone()))?;
        Ok(out)
    }

    pub fn enumerate_contributors(&self) -> Result<Vec<Contributor>> {
        let mut out = Vec::new();
        self.visit(&Pairing::empty(), false, |rc, _| {
            out.push(rc.to_contributor().expect("nothing removed"))
        })?;
        Ok(out)
    }

    /// `Σ csgn` over the reduced contributors of `pairing`, with the visit count.
    pub fn csgn_sum(&self, pairing: &Pairing, edge_monic_only: bool) -> Result<(i64, u64)> {
        let mut sum = 0i64;
        let visited = self.visit(pairing, edge_monic_only, |_, s| sum += s.to_i64())?;
        Ok((sum, visited))
    }
}

/// Vertex groups of the components of a reconstructed permutation, skipping removed vertices.
fn plan_components(perm: &[usize], removed: &[bool]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for mut cycle in perm::cycles(perm) {
        match cycle.iter().position(|&v| removed[v]) {
            None => out.push(cycle),
            Some(start) => {
                cycle.rotate_left(start);
                out.extend(
                    cycle
                        .split(|&v| removed[v])
                        .filter(|r| !r.is_empty())
                        .map(<[usize]>::to_vec),
                );
            }
        }
    }
    out
}

struct Walk<'a> {
    tails: &'a [usize],
    choices: Vec<&'a [P1Image]>,
    comp_of: Vec<usize>,
    comp_sign: Vec<Sign>,
    comp_has_adjacency: Vec<bool>,
    edge_use: Vec<u32>,
    edge_monic_only: bool,
    even_cycles: usize,
    rc: ReducedContributor,
    visited: u64,
}

impl Walk<'_> {
    fn descend<F: FnMut(&ReducedContributor, Sign)>(&mut self, depth: usize, f: &mut F) {
        if depth == self.tails.len() {
            let sign = self.leaf_sign();
            self.visited += 1;
            f(&self.rc, sign);
            return;
        }
        let tail = self.tails[depth];
        for img in self.choices[depth] {
            if self.edge_monic_only && self.edge_use[img.edge] > 0 {
                continue;
            }
            self.edge_use[img.edge] += 1;
            self.rc.images[tail] = Some(*img);
            self.descend(depth + 1, f);
            self.edge_use[img.edge] -= 1;
        }
        self.rc.images[tail] = None;
    }

    fn leaf_sign(&mut self) -> Sign {
        self.comp_sign.fill(Sign::Plus);
        self.comp_has_adjacency.fill(false);
        let mut backsteps = 0;
        for (k, &t) in self.tails.iter().enumerate() {
            let img = self.rc.images[t].as_ref().expect("assigned");
            if img.is_backstep() {
                backsteps += 1;
            } else {
                let c = self.comp_of[k];
                self.comp_sign[c] *= img.sign();
                self.comp_has_adjacency[c] = true;
            }
        }
        let negative = self
            .comp_sign
            .iter()
            .zip(&self.comp_has_adjacency)
            .filter(|(s, adj)| **adj && s.is_negative())
            .count();
        Sign::from_parity((self.even_cycles + negative + backsteps) % 2 == 1)
    }
}

pub fn enumerate_contributors(g: &OrientedHypergraph, config: EnumerationConfig) -> Result<Vec<Contributor>> {
    Enumerator::new(g, config).enumerate_contributors()
}

pub fn enumerate_reduced_contributors(
    g: &OrientedHypergraph,
    u: &[usize],
    w: &[usize],
    edge_monic_only: bool,
    config: EnumerationConfig,
) -> Result<Vec<ReducedContributor>> {
    let pairing = Pairing::new(u.to_vec(), w.to_vec(), g.vertex_count())?;
    Enumerator::new(g, config).enumerate_reduced(&pairing, edge_monic_only)
}
