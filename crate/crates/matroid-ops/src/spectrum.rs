use std::collections::BTreeMap;

use matroid_core::{ExtNat, GroundSet, Limits, MatroidError, Subset};

use crate::difference::base_pairs;
use crate::pair::NestedPair;

/// A nested base pair `B ⊆ F` realising one spectrum value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct BaseWitness {
    pub inner_base: Subset,
    pub outer_base: Subset,
}

impl BaseWitness {
    pub fn gap(&self) -> usize {
        self.outer_base.difference(self.inner_base).len()
    }

    pub fn describe(&self, ground: &GroundSet) -> String {
        format!("B={} F={}", ground.format(self.inner_base), ground.format(self.outer_base))
    }
}

/// Value set of `|F ∖ B|` with one witness per value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumReport<W> {
    pub values: Vec<ExtNat>,
    pub witnesses: Vec<(ExtNat, W)>,
    /// Named search bounds, empty for exhaustive finite reports.
    pub bounds: Vec<(String, u64)>,
    pub complete_within_bounds: bool,
}

impl<W> SpectrumReport<W> {
    /// Builds a report from `(value, witness)` candidates, keeping the first
    /// witness seen for each value.
    pub fn from_candidates(
        candidates: impl IntoIterator<Item = (ExtNat, W)>,
        bounds: Vec<(String, u64)>,
        complete_within_bounds: bool,
    ) -> Self {
        let mut seen: BTreeMap<ExtNat, W> = BTreeMap::new();
        for (v, w) in candidates {
            seen.entry(v).or_insert(w);
        }
        SpectrumReport {
            values: seen.keys().copied().collect(),
            witnesses: seen.into_iter().collect(),
            bounds,
            complete_within_bounds,
        }
    }

    pub fn finite_values(&self) -> Vec<u64> {
        self.values.iter().filter_map(|v| v.finite()).collect()
    }
}

/// Exhaustive spectrum of a finite nested pair. The witness for a value is
/// the pair with the smallest `B`, then the smallest `F`.
pub fn spectrum(pair: &NestedPair, limits: Limits) -> Result<SpectrumReport<BaseWitness>, MatroidError> {
    let candidates = base_pairs(pair, limits)?.into_iter().map(|(b, f)| {
        let w = BaseWitness {
            inner_base: b,
            outer_base: f,
        };
        (ExtNat::from(w.gap()), w)
    });
    Ok(SpectrumReport::from_candidates(candidates, Vec::new(), true))
}

/// Minimal members of `{F* ∪ B}` over cobases `F*` of the outer system and
/// bases `B` of the inner one with `F* ∩ B = ∅`. Each such set is
/// `E ∖ (F ∖ B)` for a nested base pair.
pub fn smin_enumerate(pair: &NestedPair, limits: Limits) -> Result<Vec<Subset>, MatroidError> {
    let full = pair.ground().full();
    let mut sets: Vec<Subset> = base_pairs(pair, limits)?
        .into_iter()
        .map(|(b, f)| full.difference(f.difference(b)))
        .collect();
    sets.sort();
    sets.dedup();
    let minimal = sets
        .iter()
        .copied()
        .filter(|&s| !sets.iter().any(|&t| t != s && t.is_subset_of(s)))
        .collect();
    Ok(minimal)
}

/// Minkowski sum of two value sets.
pub fn sum_values(a: &[ExtNat], b: &[ExtNat]) -> Vec<ExtNat> {
    let mut out: Vec<ExtNat> = a.iter().flat_map(|&x| b.iter().map(move |&y| x + y)).collect();
    out.sort();
    out.dedup();
    out
}
