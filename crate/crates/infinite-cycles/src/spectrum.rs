//! Bound-qualified spectrum searches over ultimately periodic bases.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use matroid_core::{ExtNat, MatroidError};
use matroid_ops::{sum_values, SpectrumReport};
use periodic_graphs::{edge_ends, Analysis, EdgeRef, Gluing, PeriodicGraph, UPEdgeSet, UPEdgeSetDoc};

use crate::system::{extend_to_fin_base, BaseVerdict, Checked};

/// Profile bound of a search: `prefix` explicit blocks, then a pattern of
/// `period` blocks. `max_bits` caps the number of free edge choices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SearchBounds {
    pub prefix: usize,
    pub period: usize,
    pub max_bits: usize,
}

impl SearchBounds {
    pub fn new(prefix: usize, period: usize) -> Self {
        SearchBounds {
            prefix,
            period,
            max_bits: 20,
        }
    }

    fn labels(&self) -> Vec<(String, u64)> {
        vec![
            ("prefix".into(), self.prefix as u64),
            ("period".into(), self.period as u64),
        ]
    }
}

/// A glued base and a finite-cycle base containing it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycleWitness {
    pub base: UPEdgeSetDoc,
    /// Absent when the defect is infinite.
    pub fin_base: Option<UPEdgeSetDoc>,
    pub added: Vec<String>,
}

/// Glued base found by enumeration, with its defect.
#[derive(Clone, Debug)]
pub struct FoundBase {
    pub set: UPEdgeSet,
    pub defect: ExtNat,
}

/// Every set with exactly the given profile, as bit masks over static
/// edges, prefix blocks and pattern blocks in that order.
fn profile_set(g: &PeriodicGraph, b: SearchBounds, mask: u64) -> UPEdgeSet {
    let (ns, nt) = (g.prefix_edges().len(), g.types().len());
    let bit = |i: usize| mask >> i & 1 == 1;
    let statics = (0..ns).map(bit).collect();
    let row = |k: usize| (0..nt).map(|t| bit(ns + k * nt + t)).collect::<Vec<bool>>();
    let blocks = (0..b.prefix).map(row).collect();
    let pattern = (b.prefix..b.prefix + b.period).map(row).collect();
    UPEdgeSet::from_parts(g, statics, blocks, pattern).expect("shape matches the family")
}

fn bits(g: &PeriodicGraph, b: SearchBounds) -> usize {
    g.prefix_edges().len() + (b.prefix + b.period) * g.types().len()
}

/// All glued bases of the given profile with their defects, in mask order.
pub fn enumerate_bases(g: &PeriodicGraph, gluing: &Gluing, b: SearchBounds) -> Result<Vec<FoundBase>, MatroidError> {
    if b.period == 0 {
        return Err(MatroidError::Parse("period must be at least 1".into()));
    }
    let n = bits(g, b);
    if n > b.max_bits {
        return Err(MatroidError::CapExceeded { size: n, cap: b.max_bits });
    }
    let whole = Analysis::new(g, &UPEdgeSet::full(g))?.components();
    let found: Vec<Option<FoundBase>> = (0..1u64 << n)
        .into_par_iter()
        .map(|mask| -> Result<Option<FoundBase>, MatroidError> {
            let s = profile_set(g, b, mask);
            let c = Checked::new(g, &s, gluing)?;
            if c.analysis.has_finite_cycle() || c.glued.violation.is_some() {
                return Ok(None);
            }
            if c.addable(g, &s, true)?.is_some() {
                return Ok(None);
            }
            let defect = c
                .analysis
                .components()
                .checked_sub(whole)
                .ok_or_else(|| MatroidError::Structure("subgraph with fewer components".into()))?;
            Ok(Some(FoundBase { set: s, defect }))
        })
        .collect::<Result<_, _>>()?;
    Ok(found.into_iter().flatten().collect())
}

fn witness(g: &PeriodicGraph, base: &UPEdgeSet) -> Result<CycleWitness, MatroidError> {
    let ext = extend_to_fin_base(g, base)?;
    Ok(CycleWitness {
        base: base.normalize().to_doc(g),
        fin_base: ext.as_ref().map(|(f, _)| f.to_doc(g)),
        added: ext
            .map(|(_, added)| added.into_iter().map(|e| UPEdgeSet::edge_name(g, e)).collect())
            .unwrap_or_default(),
    })
}

/// Whether the parts of `g` can be searched separately: each part's ends
/// meet at most one glued group.
fn separable(parts: &[PeriodicGraph], gluing: &Gluing) -> bool {
    parts.iter().all(|p| {
        let mut groups: Vec<usize> = p.end_classes().iter().filter_map(|e| gluing.glued_group(e)).collect();
        groups.sort_unstable();
        groups.dedup();
        groups.len() <= 1
    })
}

/// Per-part bases keyed by defect, first in mask order.
fn part_values(g: &PeriodicGraph, gluing: &Gluing, b: SearchBounds) -> Result<BTreeMap<ExtNat, UPEdgeSet>, MatroidError> {
    let mut out = BTreeMap::new();
    for f in enumerate_bases(g, gluing, b)? {
        out.entry(f.defect).or_insert(f.set);
    }
    Ok(out)
}

/// Defect values of all glued bases whose profile fits the bounds.
pub fn spectrum_search(
    g: &PeriodicGraph,
    gluing: &Gluing,
    b: SearchBounds,
) -> Result<SpectrumReport<CycleWitness>, MatroidError> {
    let parts = g.parts();
    let per_part: Vec<BTreeMap<ExtNat, UPEdgeSet>> = if parts.len() > 1 && separable(&parts, gluing) {
        parts
            .iter()
            .map(|p| part_values(p, gluing, b))
            .collect::<Result<_, _>>()?
    } else {
        vec![part_values(g, gluing, b)?]
    };
    let names = |p: &PeriodicGraph, s: &UPEdgeSet| -> Result<UPEdgeSet, MatroidError> { UPEdgeSet::from_doc(g, &s.to_doc(p)) };
    let part_graphs: Vec<&PeriodicGraph> = if per_part.len() > 1 { parts.iter().collect() } else { vec![g] };

    // Combined values with one witness assembled from the parts.
    let mut combined: BTreeMap<ExtNat, UPEdgeSet> = BTreeMap::new();
    combined.insert(ExtNat::ZERO, UPEdgeSet::empty(g));
    for (p, vals) in part_graphs.iter().zip(&per_part) {
        let mut next = BTreeMap::new();
        for (&v, acc) in &combined {
            for (&w, s) in vals {
                let whole = acc.union(&names(p, s)?);
                next.entry(v + w).or_insert(whole);
            }
        }
        combined = next;
    }
    let values: Vec<ExtNat> = per_part
        .iter()
        .fold(vec![ExtNat::ZERO], |acc, m| sum_values(&acc, &m.keys().copied().collect::<Vec<_>>()));
    debug_assert_eq!(values, combined.keys().copied().collect::<Vec<_>>());
    let candidates = combined
        .iter()
        .map(|(&v, s)| Ok((v, witness(g, s)?)))
        .collect::<Result<Vec<_>, MatroidError>>()?;
    Ok(SpectrumReport::from_candidates(candidates, b.labels(), true))
}

/// Spectrum of the top truncation by `k`: each base loses its `k` first
/// edges, and since every edge of a base is a bridge of it the defects
/// shift by exactly `k`.
pub fn mk_spectrum(
    g: &PeriodicGraph,
    gluing: &Gluing,
    k: usize,
    b: SearchBounds,
) -> Result<SpectrumReport<CycleWitness>, MatroidError> {
    let base = spectrum_search(g, gluing, b)?;
    let mut candidates = Vec::new();
    for (v, w) in base.witnesses {
        let set = UPEdgeSet::from_doc(g, &w.base)?;
        let removed: Vec<EdgeRef> = set.edges_before(set.prefix_blocks() + set.period() * k).into_iter().take(k).collect();
        if removed.len() < k {
            return Err(MatroidError::RankTooSmall { rank: removed.len(), depth: k });
        }
        let smaller = removed.iter().fold(set.clone(), |s, &e| s.without(e));
        let before = Analysis::new(g, &set)?.components();
        let after = Analysis::new(g, &smaller)?.components();
        if after != before + ExtNat::from(k) {
            return Err(MatroidError::Structure(format!(
                "removing {k} base edges changed the component count from {before} to {after}"
            )));
        }
        let mut w2 = w.clone();
        w2.base = smaller.normalize().to_doc(g);
        w2.added = removed
            .iter()
            .map(|&e| UPEdgeSet::edge_name(g, e))
            .chain(w.added.iter().cloned())
            .collect();
        candidates.push((v + ExtNat::from(k), w2));
    }
    Ok(SpectrumReport::from_candidates(candidates, base.bounds, base.complete_within_bounds))
}

/// Outcome of [`hat_check`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HatResult {
    pub holds: bool,
    pub base: Option<UPEdgeSetDoc>,
}

/// Whether some glued base `B` within bounds has `s` disjoint from it and
/// `B ∪ s` free of finite cycles, so that `s ⊆ F ∖ B` for a finite-cycle
/// base `F ⊇ B`.
pub fn hat_check(
    g: &PeriodicGraph,
    gluing: &Gluing,
    s: &[EdgeRef],
    b: SearchBounds,
) -> Result<HatResult, MatroidError> {
    for f in enumerate_bases(g, gluing, b)? {
        if s.iter().any(|&e| f.set.contains(e)) {
            continue;
        }
        let grown = s.iter().fold(f.set.clone(), |acc, &e| acc.with(e));
        if !Analysis::new(g, &grown)?.has_finite_cycle() {
            return Ok(HatResult {
                holds: true,
                base: Some(f.set.normalize().to_doc(g)),
            });
        }
    }
    Ok(HatResult { holds: false, base: None })
}

/// Replays a witness: the base is a glued base, the finite-cycle base
/// contains it and is maximal, and the gap equals the value.
pub fn replay_witness(g: &PeriodicGraph, gluing: &Gluing, value: ExtNat, w: &CycleWitness) -> Result<bool, MatroidError> {
    let base = UPEdgeSet::from_doc(g, &w.base)?;
    if !crate::system::cycle_is_base(g, &base, gluing)?.is_base() {
        return Ok(false);
    }
    let Some(fdoc) = &w.fin_base else {
        return Ok(value == ExtNat::Infinite);
    };
    let fin = UPEdgeSet::from_doc(g, fdoc)?;
    if !base.is_subset(&fin) || crate::system::fin_is_base(g, &fin)? != BaseVerdict::Base {
        return Ok(false);
    }
    Ok(fin.finite_difference(&base).map(|d| ExtNat::from(d.len())) == Some(value))
}

/// Ends of an edge, by name, for reports.
pub fn describe_edge(g: &PeriodicGraph, e: EdgeRef) -> String {
    let (u, v) = edge_ends(g, e);
    format!("{} ({} - {})", UPEdgeSet::edge_name(g, e), u.name(g), v.name(g))
}
