//! Infinite graphs presented by a finite prefix and one repeated block, with
//! ultimately periodic edge sets and exact connectivity answers for them.

pub mod canned;
mod compile;
pub mod edgeset;
pub mod engine;
pub mod explicit;
pub mod flow;
pub mod gluing;
pub mod oracle;
pub mod rays;
pub mod spec;
pub mod summary;

pub use canned::{bean_family, ladder_family};
pub use compile::{edge_ends, Vertex};
pub use edgeset::{EdgeRef, UPEdgeSet, UPEdgeSetDoc};
pub use engine::{default_bound, Analysis, ComponentId, Glued, Strand, Violation};
pub use gluing::Gluing;
pub use rays::{degree, domination_witness, ray_count, Domination};
pub use spec::{PeriodicGraph, PeriodicGraphSpec, TypeKind};
pub use summary::{
    component_summary, contains_double_ray, contains_finite_cycle, Certificate, ComponentSummary, DoubleRayReport,
};
