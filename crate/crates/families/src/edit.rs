//! Finite edits of a family that stay inside the prefix.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use infinite_cycles::{cycle_independent, enumerate_bases, spectrum_search, CycleWitness, SearchBounds};
use matroid_core::MatroidError;
use matroid_ops::SpectrumReport;
use periodic_graphs::{bean_family, ladder_family, EdgeRef, Gluing, PeriodicGraph, PeriodicGraphSpec, UPEdgeSet};

/// Removes the named prefix edges.
pub fn delete_edges(spec: &PeriodicGraphSpec, names: &[String]) -> Result<PeriodicGraphSpec, MatroidError> {
    let mut out = spec.clone();
    for name in names {
        let before = out.prefix.edges.len();
        out.prefix.edges.retain(|e| &e.0 != name);
        if out.prefix.edges.len() == before {
            return Err(MatroidError::UnknownLabel(format!("{name} is not a prefix edge")));
        }
    }
    Ok(out)
}

/// A system with coloops contracted. Bases and finite-cycle bases lose the
/// contracted edges; the gaps between them stay the same.
#[derive(Clone, Debug)]
pub struct Contraction {
    pub contracted: Vec<String>,
    pub spectrum: SpectrumReport<CycleWitness>,
}

fn strip(g: &PeriodicGraph, doc: &periodic_graphs::UPEdgeSetDoc, t: &[EdgeRef]) -> Result<periodic_graphs::UPEdgeSetDoc, MatroidError> {
    let set = UPEdgeSet::from_doc(g, doc)?;
    Ok(t.iter().fold(set, |s, &e| s.without(e)).to_doc(g))
}

/// Checks that every named prefix edge lies in every glued base within the
/// bounds, then reports the spectrum with those edges removed.
pub fn contract_coloops(
    g: &PeriodicGraph,
    gluing: &Gluing,
    names: &[String],
    bounds: SearchBounds,
) -> Result<Contraction, MatroidError> {
    let mut t = Vec::new();
    for name in names {
        match UPEdgeSet::parse_edge(g, name)? {
            e @ EdgeRef::Prefix(_) => t.push(e),
            EdgeRef::Block { .. } => return Err(MatroidError::UnknownLabel(format!("{name} is not a prefix edge"))),
        }
    }
    if !t.is_empty() {
        for found in enumerate_bases(g, gluing, bounds)? {
            if let Some(&e) = t.iter().find(|&&e| !found.set.contains(e)) {
                let circuit = cycle_independent(g, &found.set.with(e), gluing)?.violation;
                return Err(MatroidError::Dependent(format!(
                    "{} is not a coloop: the base {} avoids it and adding it closes {}",
                    UPEdgeSet::edge_name(g, e),
                    serde_json::to_string(&found.set.normalize().to_doc(g)).expect("doc serializes"),
                    serde_json::to_string(&circuit).expect("violation serializes"),
                )));
            }
        }
    }
    let mut spectrum = spectrum_search(g, gluing, bounds)?;
    for (_, w) in &mut spectrum.witnesses {
        w.base = strip(g, &w.base, &t)?;
        if let Some(f) = &w.fin_base {
            w.fin_base = Some(strip(g, f, &t)?);
        }
    }
    Ok(Contraction {
        contracted: names.to_vec(),
        spectrum,
    })
}

/// `{"base": ..., "delete": [...], "contract": [...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyEdit {
    pub base: String,
    #[serde(default)]
    pub delete: Vec<String>,
    #[serde(default)]
    pub contract: Vec<String>,
}

/// A canned shorthand (`ladder:n`, `bean`) or a path to a family file.
pub fn load_family(reference: &str, dir: Option<&Path>) -> Result<PeriodicGraph, MatroidError> {
    if reference == "bean" {
        return bean_family();
    }
    if let Some(n) = reference.strip_prefix("ladder:") {
        let n = n
            .parse()
            .map_err(|_| MatroidError::Parse(format!("bad ladder size in {reference}")))?;
        return ladder_family(n);
    }
    let path = match dir {
        Some(d) => d.join(reference),
        None => PathBuf::from(reference),
    };
    let text = std::fs::read_to_string(&path).map_err(|e| MatroidError::Parse(format!("{}: {e}", path.display())))?;
    PeriodicGraph::parse(&text)
}

impl FamilyEdit {
    pub fn parse(text: &str) -> Result<FamilyEdit, MatroidError> {
        serde_json::from_str(text).map_err(|e| MatroidError::Parse(e.to_string()))
    }

    /// The base family with deletions applied. Contractions are applied by
    /// [`contract_coloops`] on the result.
    pub fn apply(&self, dir: Option<&Path>) -> Result<PeriodicGraph, MatroidError> {
        let base = load_family(&self.base, dir)?;
        PeriodicGraph::new(delete_edges(base.spec(), &self.delete)?)
    }
}
