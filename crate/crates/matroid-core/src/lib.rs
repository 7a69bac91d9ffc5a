//! Finite independence systems and matroids.
//!
//! Subsets of a ground set `{0, .., n-1}` are bit patterns ([`Subset`]).
//! Systems come in two presentations: an explicit downward-closed family
//! ([`ExplicitSystem`]) and a rank oracle ([`OracleMatroid`]). Both answer
//! independence queries through [`IndependenceOracle`].

pub mod axioms;
pub mod enumerate;
pub mod error;
pub mod extnat;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod subset;
pub mod system;

pub use axioms::{check_axioms, is_matroid, Axiom, AxiomReport, AxiomSystem, Verdict, Witness};
pub use enumerate::{bases, circuits, coloops};
pub use error::MatroidError;
pub use extnat::ExtNat;
pub use graph::{Multigraph, UnionFind};
pub use io::{System, SystemDoc};
pub use oracle::{OracleMatroid, RankFunction, RankViolation};
pub use subset::{GroundSet, Limits, Subset, MAX_GROUND};
pub use system::{ExplicitSystem, IndependenceOracle};
