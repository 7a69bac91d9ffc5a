use serde::Serialize;

use matroid_core::ExtNat;
use periodic_graphs::{ray_count, Gluing, PeriodicGraph};

use crate::spectrum::{spectrum_search, SearchBounds};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum NearlyFinitary {
    /// Every base extends to a finite-cycle base with at most `bound` edges.
    Yes { bound: u64 },
    No { reason: String },
    Unknown { reason: String },
}

/// Defects are bounded by the number of disjoint rays; without glue points
/// the system is finitary.
pub fn nearly_finitary_verdict(g: &PeriodicGraph, gluing: &Gluing) -> NearlyFinitary {
    if gluing.psi().is_empty() {
        return NearlyFinitary::Yes { bound: 0 };
    }
    match ray_count(g) {
        Ok(k) => NearlyFinitary::Yes { bound: k },
        Err(e) => match spectrum_search(g, gluing, SearchBounds::new(1, 1)) {
            Ok(r) if r.values.contains(&ExtNat::Infinite) => NearlyFinitary::No {
                reason: "a base with infinite defect exists".into(),
            },
            Ok(_) => NearlyFinitary::Unknown { reason: e.to_string() },
            Err(_) => NearlyFinitary::Unknown { reason: e.to_string() },
        },
    }
}
