use serde::Serialize;

use matroid_core::{ExtNat, MatroidError};

use crate::edgeset::UPEdgeSet;
use crate::engine::Analysis;
use crate::gluing::Gluing;
use crate::spec::PeriodicGraph;

/// Repeating frontier state: the partition after super-block `start`
/// recurs after `start + period`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub start: usize,
    pub period: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentSummary {
    /// Components after merging at glue points.
    pub components: ExtNat,
    pub unglued_components: ExtNat,
    /// Frontier vertices at the settled depth with glued component numbers.
    pub interface: Vec<(String, usize)>,
    pub stabilization_depth: usize,
    pub certificate: Certificate,
}

pub fn component_summary(
    g: &PeriodicGraph,
    s: &UPEdgeSet,
    gluing: Option<&Gluing>,
) -> Result<ComponentSummary, MatroidError> {
    let a = Analysis::new(g, s)?;
    let open = Gluing::none(g);
    let glued = a.glue(gluing.unwrap_or(&open));
    let (start, period) = a.certificate();
    Ok(ComponentSummary {
        components: glued.components,
        unglued_components: a.components(),
        interface: a.interface_components(g, &glued),
        stabilization_depth: a.stabilization_depth(),
        certificate: Certificate { start, period },
    })
}

/// Edges of a finite cycle in `s`, if any.
pub fn contains_finite_cycle(g: &PeriodicGraph, s: &UPEdgeSet) -> Result<Option<Vec<String>>, MatroidError> {
    let a = Analysis::new(g, s)?;
    Ok(a.finite_cycle(g, s)
        .map(|c| c.into_iter().map(|e| UPEdgeSet::edge_name(g, e)).collect()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DoubleRayReport {
    pub present: bool,
    /// Frontier vertices of the rays' strands at the settled depth.
    pub witness: Vec<Vec<String>>,
}

pub fn contains_double_ray(g: &PeriodicGraph, s: &UPEdgeSet) -> Result<DoubleRayReport, MatroidError> {
    let a = Analysis::new(g, s)?;
    let strands = a.strands();
    let mut witness = Vec::new();
    if let Some(s) = strands.iter().find(|s| s.rays >= 2) {
        witness.push(s.frontier.clone());
    } else {
        'outer: for (i, x) in strands.iter().enumerate() {
            for y in &strands[i + 1..] {
                if x.component == y.component {
                    witness = vec![x.frontier.clone(), y.frontier.clone()];
                    break 'outer;
                }
            }
        }
    }
    Ok(DoubleRayReport {
        present: a.contains_double_ray(),
        witness,
    })
}
