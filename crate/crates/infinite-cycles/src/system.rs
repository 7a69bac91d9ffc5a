//! Independence, bases and defect in the glued cycle systems.

use serde::Serialize;

use matroid_core::{ExtNat, MatroidError};
use periodic_graphs::{edge_ends, Analysis, EdgeRef, Gluing, Glued, PeriodicGraph, UPEdgeSet, Violation};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Independence {
    pub independent: bool,
    pub violation: Option<Violation>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum BaseVerdict {
    Base,
    Dependent { violation: Violation },
    /// An edge that can be added without creating a circuit.
    Extendable { edge: String },
}

impl BaseVerdict {
    pub fn is_base(&self) -> bool {
        matches!(self, BaseVerdict::Base)
    }
}

/// Analysis of one set, with its glued view.
pub struct Checked {
    pub analysis: Analysis,
    pub glued: Glued,
}

impl Checked {
    pub fn new(g: &PeriodicGraph, s: &UPEdgeSet, gluing: &Gluing) -> Result<Checked, MatroidError> {
        let analysis = Analysis::new(g, s)?;
        let glued = analysis.glue(gluing);
        Ok(Checked { analysis, glued })
    }

    pub fn violation(&self, g: &PeriodicGraph, s: &UPEdgeSet) -> Option<Violation> {
        if let Some(cycle) = self.analysis.finite_cycle(g, s) {
            return Some(Violation::FiniteCycle {
                edges: cycle.into_iter().map(|e| UPEdgeSet::edge_name(g, e)).collect(),
            });
        }
        self.glued.violation.clone()
    }

    /// First edge of the graph outside `s` whose ends lie in different
    /// glued components.
    pub fn addable(&self, g: &PeriodicGraph, s: &UPEdgeSet, glue: bool) -> Result<Option<EdgeRef>, MatroidError> {
        for e in UPEdgeSet::full(g).edges_before(self.analysis.settled_blocks()) {
            if s.contains(e) {
                continue;
            }
            let (u, v) = edge_ends(g, e);
            let (cu, cv) = (self.analysis.component_of(u)?, self.analysis.component_of(v)?);
            let joined = if glue { self.glued.same(cu, cv) } else { cu == cv };
            if !joined {
                return Ok(Some(e));
            }
        }
        Ok(None)
    }
}

/// No finite cycle and no circle through glue points.
pub fn cycle_independent(g: &PeriodicGraph, s: &UPEdgeSet, gluing: &Gluing) -> Result<Independence, MatroidError> {
    let violation = Checked::new(g, s, gluing)?.violation(g, s);
    Ok(Independence {
        independent: violation.is_none(),
        violation,
    })
}

pub fn cycle_is_base(g: &PeriodicGraph, s: &UPEdgeSet, gluing: &Gluing) -> Result<BaseVerdict, MatroidError> {
    let c = Checked::new(g, s, gluing)?;
    verdict(g, s, &c, true)
}

/// Maximal among sets without finite cycles.
pub fn fin_is_base(g: &PeriodicGraph, s: &UPEdgeSet) -> Result<BaseVerdict, MatroidError> {
    let c = Checked::new(g, s, &Gluing::none(g))?;
    verdict(g, s, &c, false)
}

fn verdict(g: &PeriodicGraph, s: &UPEdgeSet, c: &Checked, glue: bool) -> Result<BaseVerdict, MatroidError> {
    if let Some(violation) = c.violation(g, s) {
        return Ok(BaseVerdict::Dependent { violation });
    }
    Ok(match c.addable(g, s, glue)? {
        Some(e) => BaseVerdict::Extendable {
            edge: UPEdgeSet::edge_name(g, e),
        },
        None => BaseVerdict::Base,
    })
}

/// Components of `s` minus components of the whole graph.
pub fn component_surplus(g: &PeriodicGraph, s: &UPEdgeSet) -> Result<ExtNat, MatroidError> {
    let here = Analysis::new(g, s)?.components();
    let whole = Analysis::new(g, &UPEdgeSet::full(g))?.components();
    here.checked_sub(whole)
        .ok_or_else(|| MatroidError::Structure(format!("{here} components in a subgraph of a graph with {whole}")))
}

/// Number of edges needed to extend a glued base to a finite-cycle base.
pub fn defect(g: &PeriodicGraph, s: &UPEdgeSet, gluing: &Gluing) -> Result<ExtNat, MatroidError> {
    match cycle_is_base(g, s, gluing)? {
        BaseVerdict::Base => component_surplus(g, s),
        other => Err(MatroidError::Dependent(format!("set is not a base: {other:?}"))),
    }
}

/// Grows a glued base into a finite-cycle base by joining components one
/// edge at a time; `None` when infinitely many edges would be needed.
pub fn extend_to_fin_base(g: &PeriodicGraph, b: &UPEdgeSet) -> Result<Option<(UPEdgeSet, Vec<EdgeRef>)>, MatroidError> {
    if !component_surplus(g, b)?.is_finite() {
        return Ok(None);
    }
    let open = Gluing::none(g);
    let mut f = b.clone();
    let mut added = Vec::new();
    loop {
        let c = Checked::new(g, &f, &open)?;
        match c.addable(g, &f, false)? {
            Some(e) => {
                added.push(e);
                f = f.with(e).normalize();
            }
            None => return Ok(Some((f, added))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use periodic_graphs::ladder_family;

    fn set(g: &PeriodicGraph, prefix: &[&str], repeat: &[&str]) -> UPEdgeSet {
        UPEdgeSet::from_names(g, 0, prefix, repeat).unwrap()
    }

    #[test]
    fn ladder_independence() {
        let g = ladder_family(1).unwrap();
        let all = Gluing::all(&g);
        let rails = set(&g, &["t0", "b0"], &["t", "b"]);
        assert!(cycle_independent(&g, &rails, &all).unwrap().independent);
        let closed = set(&g, &["t0", "b0", "r0"], &["t", "b"]);
        let dep = cycle_independent(&g, &closed, &all).unwrap();
        assert!(!dep.independent);
        assert!(matches!(dep.violation, Some(Violation::GluedCircle { .. })));
        assert!(cycle_independent(&g, &closed, &Gluing::none(&g)).unwrap().independent);
        assert!(cycle_independent(&g, &rails, &Gluing::none(&g)).unwrap().independent);
    }

    #[test]
    fn ladder_bases() {
        let g = ladder_family(1).unwrap();
        let all = Gluing::all(&g);
        let comb = set(&g, &["t0", "r0"], &["t", "r"]);
        let rails = set(&g, &["t0", "b0"], &["t", "b"]);
        assert!(cycle_is_base(&g, &comb, &all).unwrap().is_base());
        assert!(cycle_is_base(&g, &rails, &all).unwrap().is_base());
        let top = set(&g, &["t0"], &["t"]);
        match cycle_is_base(&g, &top, &all).unwrap() {
            BaseVerdict::Extendable { edge } => assert_eq!(edge, "r0"),
            other => panic!("{other:?}"),
        }
        assert!(fin_is_base(&g, &comb).unwrap().is_base());
        assert!(!fin_is_base(&g, &rails).unwrap().is_base());
        let closed = set(&g, &["t0", "b0", "r0"], &["t", "b"]);
        assert!(fin_is_base(&g, &closed).unwrap().is_base());
    }

    #[test]
    fn ladder_defects() {
        let g = ladder_family(1).unwrap();
        let all = Gluing::all(&g);
        let comb = set(&g, &["t0", "r0"], &["t", "r"]);
        let rails = set(&g, &["t0", "b0"], &["t", "b"]);
        assert_eq!(defect(&g, &comb, &all).unwrap(), ExtNat::ZERO);
        assert_eq!(defect(&g, &rails, &all).unwrap(), ExtNat::from(1u64));
        let (f, added) = extend_to_fin_base(&g, &rails).unwrap().unwrap();
        assert_eq!(added.len(), 1);
        assert!(fin_is_base(&g, &f).unwrap().is_base());

        let g2 = ladder_family(2).unwrap();
        let all2 = Gluing::all(&g2);
        let a2 = set(&g2, &["L1.t0", "L1.b0", "L2.t0", "L2.b0"], &["L1.t", "L1.b", "L2.t", "L2.b"]);
        assert_eq!(defect(&g2, &a2, &all2).unwrap(), ExtNat::from(2u64));
        let top = set(&g, &["t0"], &["t"]);
        assert!(defect(&g, &top, &all).is_err());
    }
}
