//! Self-checks on a single hypergraph, grouped into suites.

use std::fmt;

use crate::contributors::{ContributorLike, EnumerationConfig, Enumerator};
use crate::duality::{
    contributor_dual, dual_pairs, dual_to_primal_universe, extended_char_polynomial, extended_monomial,
    verify_spectral_duality, Side,
};
use crate::equivalence::{boolean_lattice_structure, class_csgn_sum, partition, Mode};
use crate::error::Result;
use crate::hypergraph::OrientedHypergraph;
use crate::minors::{all_pairings, determinant_oracle, total_minor_polynomial, ORACLE_MAX_VERTICES};
use crate::polynomial::MultivariatePolynomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Oracle,
    Cancellation,
    Duality,
    Lattice,
    All,
}

impl Suite {
    fn expand(self) -> Vec<Suite> {
        match self {
            Suite::All => vec![Suite::Oracle, Suite::Cancellation, Suite::Duality, Suite::Lattice],
            s => vec![s],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Suite::Oracle => "oracle",
            Suite::Cancellation => "cancellation",
            Suite::Duality => "duality",
            Suite::Lattice => "lattice",
            Suite::All => "all",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Status {
    Passed,
    Failed,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub suite: Suite,
    pub name: String,
    pub status: Status,
    /// Number of individual comparisons, or the reason for a skip or failure.
    pub detail: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub outcomes: Vec<CheckOutcome>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.status != Status::Failed)
    }

    fn record(&mut self, suite: Suite, name: &str, result: std::result::Result<String, String>) {
        let (status, detail) = match result {
            Ok(d) => (Status::Passed, d),
            Err(d) => (Status::Failed, d),
        };
        self.outcomes.push(CheckOutcome {
            suite,
            name: name.to_string(),
            status,
            detail,
        });
    }

    fn skip(&mut self, suite: Suite, name: &str, why: &str) {
        self.outcomes.push(CheckOutcome {
            suite,
            name: name.to_string(),
            status: Status::Skipped,
            detail: why.to_string(),
        });
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for o in &self.outcomes {
            let tag = match o.status {
                Status::Passed => "PASS",
                Status::Failed => "FAIL",
                Status::Skipped => "SKIP",
            };
            writeln!(f, "{tag} {}/{}: {}", o.suite.name(), o.name, o.detail)?;
        }
        Ok(())
    }
}

fn first_difference(
    a: &MultivariatePolynomial,
    b: &MultivariatePolynomial,
    labels: &[String],
) -> Option<String> {
    let diff = a - b;
    let (m, _) = diff.terms().next()?;
    let shown = if m.is_one() {
        "1".to_string()
    } else {
        m.to_text(labels)
    };
    Some(format!(
        "coefficient of {shown}: {} vs {}",
        a.coefficient(m),
        b.coefficient(m)
    ))
}

pub fn run(g: &OrientedHypergraph, suite: Suite, config: EnumerationConfig) -> Result<VerificationReport> {
    let mut report = VerificationReport::default();
    for s in suite.expand() {
        match s {
            Suite::Oracle => oracle(g, config, &mut report)?,
            Suite::Cancellation => cancellation(g, config, &mut report)?,
            Suite::Duality => duality(g, config, &mut report)?,
            Suite::Lattice => lattice(g, config, &mut report)?,
            Suite::All => unreachable!("expanded above"),
        }
    }
    Ok(report)
}

fn oracle(g: &OrientedHypergraph, config: EnumerationConfig, report: &mut VerificationReport) -> Result<()> {
    if g.vertex_count() > ORACLE_MAX_VERTICES {
        report.skip(
            Suite::Oracle,
            "total-minor",
            "too many vertices for the Leibniz oracle",
        );
        return Ok(());
    }
    let expected = determinant_oracle(g)?;
    for (name, monic) in [("total-minor/edge-monic", true), ("total-minor/full", false)] {
        let got = total_minor_polynomial(g, monic, config)?;
        let result = match first_difference(&got, &expected, g.vertex_labels()) {
            None => Ok(format!("{} terms agree", expected.len())),
            Some(d) => Err(d),
        };
        report.record(Suite::Oracle, name, result);
    }
    Ok(())
}

fn cancellation(
    g: &OrientedHypergraph,
    config: EnumerationConfig,
    report: &mut VerificationReport,
) -> Result<()> {
    let enumerator = Enumerator::new(g, config);
    let mut checked = 0usize;
    let mut failure = None;
    'outer: for pairing in all_pairings(g.vertex_count()) {
        let members = enumerator.enumerate_reduced(&pairing, false)?;
        for mode in [Mode::Tail, Mode::Head] {
            for cls in partition(&members, mode) {
                let flags: Vec<bool> = cls.members.iter().map(|c| c.is_edge_monic()).collect();
                if flags.iter().any(|&f| f != flags[0]) {
                    failure = Some(format!(
                        "{mode:?} class {:?} mixes edge-monic and non-edge-monic members",
                        cls.key
                    ));
                    break 'outer;
                }
                if !flags[0] {
                    checked += 1;
                    let sum = class_csgn_sum(&cls);
                    if sum != 0 {
                        failure = Some(format!(
                            "{mode:?} class {:?} under removed {} sums to {sum}",
                            cls.key,
                            pairing.describe(g)
                        ));
                        break 'outer;
                    }
                }
            }
        }
    }
    let result = match failure {
        None => Ok(format!("{checked} non-edge-monic classes cancel")),
        Some(f) => Err(f),
    };
    report.record(Suite::Cancellation, "non-edge-monic classes", result);
    Ok(())
}

fn duality(g: &OrientedHypergraph, config: EnumerationConfig, report: &mut VerificationReport) -> Result<()> {
    let spectral = verify_spectral_duality(g, config)?;
    report.record(
        Suite::Duality,
        "spectral",
        if spectral.holds {
            Ok(format!("{} on both sides", spectral.lhs))
        } else {
            Err(format!("{} vs {}", spectral.lhs, spectral.rhs))
        },
    );

    let primal = extended_char_polynomial(g, Side::Primal, config)?;
    let dual = extended_char_polynomial(g, Side::Dual, config)?;
    let labels = crate::duality::universe_labels(g);
    report.record(
        Suite::Duality,
        "extended polynomial",
        match first_difference(&primal, &dual, &labels) {
            None => Ok(format!("{} terms agree", primal.len())),
            Some(d) => Err(d),
        },
    );

    let star = g.incidence_dual();
    let (n, m) = (g.vertex_count(), g.edge_count());
    let pairs = dual_pairs(g, config)?;
    let mut failure = None;
    for pair in &pairs {
        let problem = if contributor_dual(&star, &pair.dual)? != pair.primal {
            Some("dual of the dual differs")
        } else if pair.primal.csgn() != pair.dual.csgn() {
            Some("signs differ")
        } else if dual_to_primal_universe(&extended_monomial(&star, &pair.dual)?, n, m) != pair.extended {
            Some("extended monomials differ")
        } else {
            let deg = pair.primal.pairing().len() as i64;
            let deg_star = pair.dual.pairing().len() as i64;
            let (n, m) = (n as i64, m as i64);
            if n - deg != m - deg_star || (deg - deg_star).abs() != (m - n).abs() {
                Some("monomial degrees break the image-count relation")
            } else {
                None
            }
        };
        if let Some(p) = problem {
            failure = Some(format!("{p}: {}", pair.primal.describe(g)));
            break;
        }
    }
    report.record(
        Suite::Duality,
        "dual pairs",
        match failure {
            None => Ok(format!("{} pairs", pairs.len())),
            Some(f) => Err(f),
        },
    );
    Ok(())
}

fn lattice(g: &OrientedHypergraph, config: EnumerationConfig, report: &mut VerificationReport) -> Result<()> {
    if !g.is_bidirected() {
        report.skip(Suite::Lattice, "tail classes", "not a bidirected graph");
        return Ok(());
    }
    let contributors = Enumerator::new(g, config).enumerate_contributors()?;
    let classes = partition(&contributors, Mode::Tail);
    let mut failure = None;
    for cls in &classes {
        if let Err(e) = boolean_lattice_structure(g, cls) {
            failure = Some(format!("class {:?}: {e}", cls.key));
            break;
        }
    }
    report.record(
        Suite::Lattice,
        "tail classes",
        match failure {
            None => Ok(format!("{} classes are Boolean lattices", classes.len())),
            Some(f) => Err(f),
        },
    );
    Ok(())
}
