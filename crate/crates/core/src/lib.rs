//! Characteristic polynomials of integer Laplacians computed by counting
//! signed walk configurations in oriented hypergraphs.

pub mod contributors;
pub mod dot;
pub mod duality;
pub mod equivalence;
pub mod error;
pub mod fixtures;
pub mod hypergraph;
pub mod matrix;
pub mod minors;
pub mod perm;
pub mod polynomial;
pub mod sign;
pub mod verify;

pub use contributors::{
    contributor_stats, csgn, enumerate_contributors, enumerate_reduced_contributors, weak_adjacencies,
    Component, Contributor, ContributorLike, ContributorStats, EnumerationConfig, Enumerator, IncidenceRef,
    P1Image, P1Kind, Pairing, ReducedContributor, DEFAULT_CAP,
};
pub use error::{Error, Result};
pub use hypergraph::{Incidence, Laplacian, OrientedHypergraph};
pub use matrix::IntegerMatrix;
pub use sign::Sign;
