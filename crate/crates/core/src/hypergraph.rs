//! Oriented hypergraphs: vertices, edges and signed incidences.
//!
//! Every integer matrix is the incidence matrix of some oriented hypergraph. An
//! entry `k` at `(v, e)` becomes `|k|` parallel incidences between `v` and `e`,
//! all signed `sgn(k)`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::IntegerMatrix;
use crate::sign::Sign;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Incidence {
    /// Position of the incidence in its hypergraph; enumeration follows this order.
    pub id: usize,
    pub vertex: usize,
    pub edge: usize,
    pub sign: Sign,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientedHypergraph {
    vertex_labels: Vec<String>,
    edge_labels: Vec<String>,
    incidences: Vec<Incidence>,
    at_vertex: Vec<Vec<usize>>,
    at_edge: Vec<Vec<usize>>,
}

/// `L = H·Hᵀ` together with its split `L = D − A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Laplacian {
    pub matrix: IntegerMatrix,
    pub degree: IntegerMatrix,
    pub adjacency: IntegerMatrix,
}

impl OrientedHypergraph {
    /// Builds a hypergraph from labels and `(vertex, edge, sign)` triples.
    /// Incidence ids are the positions in `incidences`.
    pub fn new(
        vertex_labels: Vec<String>,
        edge_labels: Vec<String>,
        incidences: impl IntoIterator<Item = (usize, usize, Sign)>,
    ) -> Result<Self> {
        check_unique(&vertex_labels, "vertex")?;
        check_unique(&edge_labels, "edge")?;
        let (n, m) = (vertex_labels.len(), edge_labels.len());
        let mut at_vertex = vec![Vec::new(); n];
        let mut at_edge = vec![Vec::new(); m];
        let mut list = Vec::new();
        for (id, (vertex, edge, sign)) in incidences.into_iter().enumerate() {
            if vertex >= n || edge >= m {
                return Err(Error::MalformedHypergraph(format!(
                    "incidence {id} references ({vertex}, {edge}) outside {n} vertices x {m} edges"
                )));
            }
            at_vertex[vertex].push(id);
            at_edge[edge].push(id);
            list.push(Incidence {
                id,
                vertex,
                edge,
                sign,
            });
        }
        Ok(OrientedHypergraph {
            vertex_labels,
            edge_labels,
            incidences: list,
            at_vertex,
            at_edge,
        })
    }

    /// Realizes `matrix` with default labels `v1..vn` and `e1..em`.
    pub fn from_integer_matrix(matrix: &IntegerMatrix) -> Self {
        let vertices = (1..=matrix.rows()).map(|i| format!("v{i}")).collect();
        let edges = (1..=matrix.cols()).map(|i| format!("e{i}")).collect();
        Self::from_integer_matrix_labeled(matrix, vertices, edges)
            .expect("default labels are unique and sized to the matrix")
    }

    pub fn from_integer_matrix_labeled(
        matrix: &IntegerMatrix,
        vertex_labels: Vec<String>,
        edge_labels: Vec<String>,
    ) -> Result<Self> {
        if vertex_labels.len() != matrix.rows() || edge_labels.len() != matrix.cols() {
            return Err(Error::MalformedHypergraph(format!(
                "{} vertex and {} edge labels supplied for a {}x{} matrix",
                vertex_labels.len(),
                edge_labels.len(),
                matrix.rows(),
                matrix.cols()
            )));
        }
        let mut incidences = Vec::new();
        for v in 0..matrix.rows() {
            for e in 0..matrix.cols() {
                let k = matrix.get(v, e);
                if k.is_zero() {
                    continue;
                }
                let sign = if k.is_negative() { Sign::Minus } else { Sign::Plus };
                let count = k.abs().to_usize().ok_or_else(|| {
                    Error::MalformedMatrix(format!("entry {k} at ({v},{e}) is too large to realize"))
                })?;
                incidences.extend(std::iter::repeat_n((v, e, sign), count));
            }
        }
        Self::new(vertex_labels, edge_labels, incidences)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_labels.len()
    }

    pub fn vertex_labels(&self) -> &[String] {
        &self.vertex_labels
    }

    pub fn edge_labels(&self) -> &[String] {
        &self.edge_labels
    }

    pub fn vertex_label(&self, v: usize) -> &str {
        &self.vertex_labels[v]
    }

    pub fn edge_label(&self, e: usize) -> &str {
        &self.edge_labels[e]
    }

    pub fn vertex_index(&self, label: &str) -> Result<usize> {
        self.vertex_labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownVertex(label.to_string()))
    }

    pub fn incidences(&self) -> &[Incidence] {
        &self.incidences
    }

    pub fn incidence(&self, id: usize) -> &Incidence {
        &self.incidences[id]
    }

    /// Incidence ids at `v`, ascending.
    pub fn incidences_at_vertex(&self, v: usize) -> &[usize] {
        &self.at_vertex[v]
    }

    /// Incidence ids in `e`, ascending.
    pub fn incidences_in_edge(&self, e: usize) -> &[usize] {
        &self.at_edge[e]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.at_vertex[v].len()
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                index: v,
                count: self.vertex_count(),
            })
        }
    }

    /// Every edge has exactly two incidences.
    pub fn is_bidirected(&self) -> bool {
        self.at_edge.iter().all(|inc| inc.len() == 2)
    }

    pub(crate) fn require_bidirected(&self) -> Result<()> {
        match self.at_edge.iter().position(|inc| inc.len() != 2) {
            None => Ok(()),
            Some(e) => Err(Error::NotBidirected {
                edge: self.edge_labels[e].clone(),
                count: self.at_edge[e].len(),
            }),
        }
    }

    /// The `V x E` matrix whose `(v, e)` entry sums the signs of incidences between `v` and `e`.
    pub fn incidence_matrix(&self) -> IntegerMatrix {
        let mut h = IntegerMatrix::zeros(self.vertex_count(), self.edge_count());
        for inc in &self.incidences {
            let entry = h.get(inc.vertex, inc.edge) + inc.sign.to_i64();
            h.set(inc.vertex, inc.edge, entry);
        }
        h
    }

    /// Swaps the roles of vertices and edges. Incidence ids and signs are kept.
    pub fn incidence_dual(&self) -> Self {
        OrientedHypergraph::new(
            self.edge_labels.clone(),
            self.vertex_labels.clone(),
            self.incidences.iter().map(|i| (i.edge, i.vertex, i.sign)),
        )
        .expect("dual of a valid hypergraph is valid")
    }

    pub fn laplacian(&self) -> Laplacian {
        let h = self.incidence_matrix();
        let matrix = h.mul(&h.transpose()).expect("H and Hᵀ are conformable");
        let n = self.vertex_count();
        let mut degree = IntegerMatrix::zeros(n, n);
        for v in 0..n {
            degree.set(v, v, BigInt::from(self.degree(v)));
        }
        let adjacency = degree.sub(&matrix).expect("same dimensions");
        Laplacian {
            matrix,
            degree,
            adjacency,
        }
    }

    /// Adjacency sign `(-1)^⌊n/2⌋ ∏ σ(i_k)` of an alternating incidence sequence.
    ///
    /// Consecutive incidences must alternately share an edge and a vertex (the
    /// walk may start at either a vertex or an edge). The empty walk has sign `+`.
    pub fn asgn_of_walk(&self, walk: &[usize]) -> Result<Sign> {
        if let Some(&bad) = walk.iter().find(|&&i| i >= self.incidences.len()) {
            return Err(Error::MalformedHypergraph(format!("no incidence with id {bad}")));
        }
        let shares = |a: usize, b: usize, via_edge: bool| {
            let (a, b) = (&self.incidences[a], &self.incidences[b]);
            if via_edge {
                a.edge == b.edge
            } else {
                a.vertex == b.vertex
            }
        };
        let first_break = |edge_first: bool| {
            walk.windows(2)
                .enumerate()
                .find(|(k, w)| !shares(w[0], w[1], (k % 2 == 0) == edge_first))
                .map(|(k, _)| k)
        };
        if let (Some(a), Some(b)) = (first_break(true), first_break(false)) {
            return Err(Error::NonConsecutiveWalk { position: a.max(b) });
        }
        let signs = walk.iter().map(|&i| self.incidences[i].sign);
        Ok(asgn_of_signs(walk.len(), signs))
    }
}

/// `(-1)^⌊n/2⌋` times the product of `signs`, where `n` is the sequence length.
pub fn asgn_of_signs(len: usize, signs: impl IntoIterator<Item = Sign>) -> Sign {
    signs
        .into_iter()
        .fold(Sign::from_parity((len / 2) % 2 == 1), |acc, s| acc * s)
}

fn check_unique(labels: &[String], what: &str) -> Result<()> {
    let mut seen = HashMap::new();
    for (i, l) in labels.iter().enumerate() {
        if let Some(j) = seen.insert(l.as_str(), i) {
            return Err(Error::MalformedHypergraph(format!(
                "duplicate {what} label `{l}` at positions {j} and {i}"
            )));
        }
    }
    Ok(())
}

/// Order-preserving interchange document for a hypergraph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypergraphDoc {
    pub vertices: Vec<String>,
    pub edges: Vec<String>,
    pub incidences: Vec<IncidenceDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IncidenceDoc {
    pub vertex: String,
    pub edge: String,
    pub sign: i8,
}

impl From<&OrientedHypergraph> for HypergraphDoc {
    fn from(g: &OrientedHypergraph) -> Self {
        HypergraphDoc {
            vertices: g.vertex_labels.clone(),
            edges: g.edge_labels.clone(),
            incidences: g
                .incidences
                .iter()
                .map(|i| IncidenceDoc {
                    vertex: g.vertex_labels[i.vertex].clone(),
                    edge: g.edge_labels[i.edge].clone(),
                    sign: i.sign.to_i64() as i8,
                })
                .collect(),
        }
    }
}

impl TryFrom<HypergraphDoc> for OrientedHypergraph {
    type Error = Error;

    fn try_from(doc: HypergraphDoc) -> Result<Self> {
        let index = |labels: &[String], what: &str| -> Result<HashMap<String, usize>> {
            check_unique(labels, what)?;
            Ok(labels.iter().cloned().zip(0..).collect())
        };
        let vertices = index(&doc.vertices, "vertex")?;
        let edges = index(&doc.edges, "edge")?;
        let mut incidences = Vec::with_capacity(doc.incidences.len());
        for (k, inc) in doc.incidences.iter().enumerate() {
            let v = *vertices.get(&inc.vertex).ok_or_else(|| {
                Error::MalformedHypergraph(format!("incidence {k}: unknown vertex `{}`", inc.vertex))
            })?;
            let e = *edges.get(&inc.edge).ok_or_else(|| {
                Error::MalformedHypergraph(format!("incidence {k}: unknown edge `{}`", inc.edge))
            })?;
            let sign = Sign::of(inc.sign.into())
                .ok_or_else(|| Error::MalformedHypergraph(format!("incidence {k}: sign must be +1 or -1")))?;
            incidences.push((v, e, sign));
        }
        OrientedHypergraph::new(doc.vertices, doc.edges, incidences)
    }
}

impl OrientedHypergraph {
    pub fn to_json(&self, pretty: bool) -> String {
        let doc = HypergraphDoc::from(self);
        if pretty {
            serde_json::to_string_pretty(&doc)
        } else {
            serde_json::to_string(&doc)
        }
        .expect("hypergraph documents always serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: HypergraphDoc = serde_json::from_str(text)?;
        doc.try_into()
    }
}
