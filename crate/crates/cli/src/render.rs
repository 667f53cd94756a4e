//! Turns library results into the three output formats.

use std::fmt::Write as _;

use anyhow::Result;
use serde_json::{json, Value};

use ohminor::duality::{extended_char_polynomial, universe_labels, Side};
use ohminor::equivalence::{class_csgn_sum, class_is_edge_monic, format_classes, partition, Mode};
use ohminor::minors::{
    cofactor as minor, diagonal_char_polynomial, total_minor_polynomial, traditional_char_polynomial,
};
use ohminor::polynomial::MultivariatePolynomial;
use ohminor::verify::{Status, VerificationReport};
use ohminor::{ContributorLike, EnumerationConfig, Enumerator, IntegerMatrix, OrientedHypergraph, Pairing};

use crate::{unsupported, Format, Kind};

fn to_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values always serialize");
    s.push('\n');
    s
}

fn matrix_rows(m: &IntegerMatrix) -> Value {
    m.to_rows()
        .iter()
        .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>())
        .collect()
}

pub fn hypergraph(g: &OrientedHypergraph, fmt: Format) -> String {
    match fmt {
        Format::Human => g.to_json(true) + "\n",
        Format::Machine => g.to_json(false) + "\n",
        Format::Dot => ohminor::dot::hypergraph_dot(g),
    }
}

pub fn laplacian(g: &OrientedHypergraph, fmt: Format) -> Result<String> {
    let lap = g.laplacian();
    match fmt {
        Format::Human => Ok(lap.matrix.to_string()),
        Format::Machine => Ok(to_json(&json!({
            "vertices": g.vertex_labels(),
            "laplacian": matrix_rows(&lap.matrix),
            "degree": matrix_rows(&lap.degree),
            "adjacency": matrix_rows(&lap.adjacency),
        }))),
        Format::Dot => unsupported(fmt, "laplacian"),
    }
}

fn multivariate(p: &MultivariatePolynomial, labels: &[String], kind: &str, fmt: Format) -> Result<String> {
    match fmt {
        Format::Human => Ok(p.to_text(labels)),
        Format::Machine => Ok(to_json(&json!({ "kind": kind, "terms": p.to_doc(labels).terms }))),
        Format::Dot => unsupported(fmt, "charpoly"),
    }
}

pub fn charpoly(
    g: &OrientedHypergraph,
    kind: Kind,
    edge_monic: bool,
    side: Side,
    fmt: Format,
    config: EnumerationConfig,
) -> Result<String> {
    let labels = g.vertex_labels();
    match kind {
        Kind::Traditional => {
            let p = traditional_char_polynomial(g, config)?;
            match fmt {
                Format::Human => Ok(format!("{p}\n")),
                Format::Machine => {
                    let coeffs: Vec<String> = p.coefficients().iter().map(|c| c.to_string()).collect();
                    Ok(to_json(&json!({ "kind": "traditional", "coefficients": coeffs })))
                }
                Format::Dot => unsupported(fmt, "charpoly"),
            }
        }
        Kind::Diagonal => multivariate(&diagonal_char_polynomial(g, config)?, labels, "diagonal", fmt),
        Kind::TotalMinor => multivariate(
            &total_minor_polynomial(g, edge_monic, config)?,
            labels,
            "total-minor",
            fmt,
        ),
        Kind::Extended => multivariate(
            &extended_char_polynomial(g, side, config)?,
            &universe_labels(g),
            "extended",
            fmt,
        ),
    }
}

fn vertex_indices(g: &OrientedHypergraph, labels: &[String]) -> Result<Vec<usize>> {
    Ok(labels
        .iter()
        .map(|l| g.vertex_index(l))
        .collect::<ohminor::Result<_>>()?)
}

pub fn contributors(
    g: &OrientedHypergraph,
    u: &[String],
    w: &[String],
    edge_monic: bool,
    classes: Option<Mode>,
    fmt: Format,
    config: EnumerationConfig,
) -> Result<String> {
    let pairing = Pairing::from_labels(g, u, w)?;
    let members = Enumerator::new(g, config).enumerate_reduced(&pairing, edge_monic)?;

    if let Some(mode) = classes {
        let classes = partition(&members, mode);
        return match fmt {
            Format::Human => Ok(format_classes(g, &classes)),
            Format::Machine => {
                let docs: Vec<Value> = classes
                    .iter()
                    .map(|cls| {
                        let key: Vec<Value> = cls
                            .key
                            .iter()
                            .map(|&(v, id)| json!({ "vertex": g.vertex_label(v), "incidence": id }))
                            .collect();
                        json!({
                            "key": key,
                            "size": cls.len(),
                            "edge_monic": class_is_edge_monic(cls).unwrap_or(false),
                            "csgn_sum": class_csgn_sum(cls),
                            "members": cls.indices,
                        })
                    })
                    .collect();
                Ok(to_json(&json!({
                    "mode": match mode { Mode::Tail => "tail", Mode::Head => "head" },
                    "removed": pairing.describe(g),
                    "classes": docs,
                })))
            }
            Format::Dot => unsupported(fmt, "contributors --classes"),
        };
    }

    match fmt {
        Format::Human => {
            let mut out = String::new();
            for (i, c) in members.iter().enumerate() {
                writeln!(out, "{i:>4}  {}  {}", c.csgn(), c.describe(g)).unwrap();
            }
            let sum: i64 = members.iter().map(|c| c.csgn().to_i64()).sum();
            writeln!(out, "{} contributors, csgn sum {sum}", members.len()).unwrap();
            Ok(out)
        }
        Format::Machine => {
            let docs: Vec<Value> = members
                .iter()
                .map(|c| {
                    let perm: Vec<&str> = c.permutation().iter().map(|&v| g.vertex_label(v)).collect();
                    json!({
                        "csgn": c.csgn().to_i64(),
                        "edge_monic": c.is_edge_monic(),
                        "permutation": perm,
                        "description": c.describe(g),
                    })
                })
                .collect();
            Ok(to_json(
                &json!({ "removed": pairing.describe(g), "contributors": docs }),
            ))
        }
        Format::Dot => Ok(members
            .iter()
            .map(|c| ohminor::dot::contributor_dot(g, c))
            .collect()),
    }
}

pub fn cofactor(
    g: &OrientedHypergraph,
    u: &[String],
    w: &[String],
    fmt: Format,
    config: EnumerationConfig,
) -> Result<String> {
    let value = minor(g, &vertex_indices(g, u)?, &vertex_indices(g, w)?, config)?;
    match fmt {
        Format::Human => Ok(format!("{value}\n")),
        Format::Machine => Ok(to_json(&json!({ "u": u, "w": w, "cofactor": value.to_string() }))),
        Format::Dot => unsupported(fmt, "cofactor"),
    }
}

pub fn verification(report: &VerificationReport, fmt: Format) -> Result<String> {
    match fmt {
        Format::Human => Ok(report.to_string()),
        Format::Machine => {
            let outcomes: Vec<Value> = report
                .outcomes
                .iter()
                .map(|o| {
                    let status = match o.status {
                        Status::Passed => "pass",
                        Status::Failed => "fail",
                        Status::Skipped => "skip",
                    };
                    json!({ "suite": o.suite.name(), "check": o.name, "status": status, "detail": o.detail })
                })
                .collect();
            Ok(to_json(
                &json!({ "passed": report.passed(), "outcomes": outcomes }),
            ))
        }
        Format::Dot => unsupported(fmt, "verify"),
    }
}
