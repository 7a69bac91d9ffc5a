//! Batch spectrum scans that flag value sets with holes.

use rayon::prelude::*;
use serde::Serialize;

use infinite_cycles::{spectrum_search, SearchBounds};
use matroid_core::{ExtNat, Limits};
use matroid_ops::{spectrum, NestedPair};
use periodic_graphs::{Gluing, PeriodicGraph};

pub enum ScanTarget {
    Graph { graph: PeriodicGraph, gluing: Gluing },
    Pair(NestedPair),
}

pub struct ScanEntry {
    pub label: String,
    pub target: ScanTarget,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanRow {
    pub label: String,
    pub values: Vec<ExtNat>,
    /// Some `i < j < k` with `i` and `k` present and `j` missing.
    pub gap: Option<(u64, u64, u64)>,
    pub bounds: Vec<(String, u64)>,
    pub complete_within_bounds: bool,
    pub error: Option<String>,
}

/// First missing value strictly between two present finite values.
pub fn find_gap(values: &[ExtNat]) -> Option<(u64, u64, u64)> {
    let finite: Vec<u64> = values.iter().filter_map(|v| v.finite()).collect();
    finite.windows(2).find(|w| w[1] > w[0] + 1).map(|w| (w[0], w[0] + 1, w[1]))
}

pub fn spectrum_scan(entries: &[ScanEntry], bounds: SearchBounds, limits: Limits) -> Vec<ScanRow> {
    entries
        .par_iter()
        .map(|entry| {
            let report = match &entry.target {
                ScanTarget::Graph { graph, gluing } => {
                    spectrum_search(graph, gluing, bounds).map(|r| (r.values, r.bounds, r.complete_within_bounds))
                }
                ScanTarget::Pair(pair) => spectrum(pair, limits).map(|r| (r.values, r.bounds, r.complete_within_bounds)),
            };
            match report {
                Ok((values, bounds, complete)) => ScanRow {
                    label: entry.label.clone(),
                    gap: find_gap(&values),
                    values,
                    bounds,
                    complete_within_bounds: complete,
                    error: None,
                },
                Err(e) => ScanRow {
                    label: entry.label.clone(),
                    values: vec![],
                    gap: None,
                    bounds: vec![],
                    complete_within_bounds: false,
                    error: Some(e.to_string()),
                },
            }
        })
        .collect()
}
