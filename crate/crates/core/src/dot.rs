//! Graphviz renderings of hypergraphs and contributors.
//!
//! Vertices are circles and edges are boxes. A positive incidence is drawn as
//! an arrow from the edge into the vertex, a negative one as an arrow out of
//! the vertex.

use std::fmt::Write as _;

use crate::contributors::{ContributorLike, P1Kind};
use crate::hypergraph::OrientedHypergraph;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

fn vertex_node(g: &OrientedHypergraph, v: usize) -> String {
    quote(&format!("v:{}", g.vertex_label(v)))
}

fn edge_node(g: &OrientedHypergraph, e: usize) -> String {
    quote(&format!("e:{}", g.edge_label(e)))
}

fn write_body(out: &mut String, g: &OrientedHypergraph) {
    for (v, label) in g.vertex_labels().iter().enumerate() {
        writeln!(
            out,
            "  {} [shape=circle, label={}];",
            vertex_node(g, v),
            quote(label)
        )
        .unwrap();
    }
    for (e, label) in g.edge_labels().iter().enumerate() {
        writeln!(out, "  {} [shape=box, label={}];", edge_node(g, e), quote(label)).unwrap();
    }
    for inc in g.incidences() {
        let (v, e) = (vertex_node(g, inc.vertex), edge_node(g, inc.edge));
        let (from, to) = if inc.sign.is_negative() { (v, e) } else { (e, v) };
        writeln!(
            out,
            "  {from} -> {to} [label=\"{}{}\", color=gray40];",
            inc.sign, inc.id
        )
        .unwrap();
    }
}

pub fn hypergraph_dot(g: &OrientedHypergraph) -> String {
    let mut out = String::from("digraph hypergraph {\n");
    write_body(&mut out, g);
    out.push_str("}\n");
    out
}

/// The hypergraph with each surviving image overlaid as a bold arrow from tail
/// to head, labelled by its edge. Backsteps are dashed self-loops.
pub fn contributor_dot<C: ContributorLike>(g: &OrientedHypergraph, c: &C) -> String {
    let mut out = String::from("digraph contributor {\n");
    write_body(&mut out, g);
    for img in c.images() {
        let (t, h) = (vertex_node(g, img.tail), vertex_node(g, img.head));
        let edge = g.edge_label(img.edge);
        match img.kind {
            P1Kind::Backstep { incidence } => writeln!(
                out,
                "  {t} -> {t} [style=dashed, color=blue, constraint=false, label=\"{edge} #{}\"];",
                incidence.id
            ),
            P1Kind::Adjacency {
                tail_incidence,
                head_incidence,
            } => writeln!(
                out,
                "  {t} -> {h} [penwidth=2, color=red, constraint=false, label=\"{edge} #{}>#{}\"];",
                tail_incidence.id, head_incidence.id
            ),
        }
        .unwrap();
    }
    for (u, w) in c.pairing().pairs() {
        writeln!(
            out,
            "  {} -> {} [style=dotted, constraint=false, label=\"removed\"];",
            vertex_node(g, u),
            vertex_node(g, w)
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}
