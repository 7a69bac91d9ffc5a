use serde::Serialize;

use matroid_core::MatroidError;

use crate::compile::Vertex;
use crate::engine::default_bound;
use crate::explicit::Truncation;
use crate::flow::VertexSplit;
use crate::spec::PeriodicGraph;

/// Vertex-disjoint paths through the tail from block 0 to block `depth`.
pub fn tail_flow(g: &PeriodicGraph, depth: usize) -> u32 {
    let t = Truncation::new(g, |_| true, 0, depth + 1, false);
    let limit = g.repeat_vertices().len() as u32;
    VertexSplit::new(t.vertices.len(), t.edges.iter().copied()).disjoint_paths(
        &t.block_vertices(0),
        &t.block_vertices(depth),
        limit,
    )
}

/// Maximum number of vertex-disjoint rays. The tail flow is nonincreasing
/// in the depth; it must agree at half the stabilization bound and at the
/// bound itself.
pub fn ray_count(g: &PeriodicGraph) -> Result<u64, MatroidError> {
    let bound = default_bound(g);
    let (half, whole) = (tail_flow(g, bound / 2), tail_flow(g, bound));
    if half != whole {
        return Err(MatroidError::BoundExhausted(format!(
            "disjoint path count still falling: {half} at depth {} and {whole} at depth {bound}",
            bound / 2
        )));
    }
    Ok(u64::from(whole))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum Domination {
    /// `k` paths from the vertex, disjoint apart from it, end in distinct
    /// vertices of one corridor within the first `depth` blocks.
    Success { depth: usize, corridor: usize, end: String },
    /// The vertex has fewer than `k` edges.
    DegreeBound { degree: usize },
    NotFound { searched: usize },
}

impl Domination {
    pub fn depth(&self) -> Option<usize> {
        match self {
            Domination::Success { depth, .. } => Some(*depth),
            _ => None,
        }
    }
}

/// Degree of a vertex; `None` for an apex with fan edges.
pub fn degree(g: &PeriodicGraph, v: Vertex) -> Option<usize> {
    if let Vertex::Prefix(i) = v {
        g.prefix_degree(i)?;
    }
    let depth = match v {
        Vertex::Prefix(_) => 1,
        Vertex::Block { block, .. } => block + 2,
    };
    let t = Truncation::new(g, |_| true, 0, depth, true);
    let id = t.id(v)?;
    Some(t.edges.iter().map(|&(a, b)| usize::from(a == id) + usize::from(b == id)).sum())
}

/// Smallest depth at which `k` paths from `v` reach one corridor.
pub fn domination_witness(g: &PeriodicGraph, v: Vertex, k: usize) -> Result<Domination, MatroidError> {
    if let Vertex::Prefix(i) = v {
        if i >= g.prefix_vertices().len() {
            return Err(MatroidError::UnknownLabel(format!("prefix vertex {i}")));
        }
    }
    if let Some(degree) = degree(g, v) {
        if k > degree {
            return Ok(Domination::DegreeBound { degree });
        }
    }
    let bound = 4 * (g.interface().len() + g.apexes().len()) + 2 * k + 2;
    let first = match v {
        Vertex::Prefix(_) => 1,
        Vertex::Block { block, .. } => block + 1,
    };
    for depth in first..=first + bound {
        let t = Truncation::new(g, |_| true, 0, depth, true);
        let root = t.id(v).expect("vertex inside its truncation");
        for corridor in 0..g.corridor_count() {
            let targets: Vec<usize> = (0..t.vertices.len())
                .filter(|&i| matches!(t.vertices[i], Vertex::Block { x, .. } if g.corridor_of(x) == corridor))
                .collect();
            let n = VertexSplit::new(t.vertices.len(), t.edges.iter().copied()).fan_from(root, &targets, k as u32);
            if n as usize >= k {
                return Ok(Domination::Success {
                    depth,
                    corridor,
                    end: g.end_label(corridor).to_string(),
                });
            }
        }
    }
    Ok(Domination::NotFound { searched: first + bound })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canned::{bean_family, ladder_family};

    #[test]
    fn ladder_rays() {
        assert_eq!(ray_count(&ladder_family(1).unwrap()).unwrap(), 2);
        assert_eq!(ray_count(&ladder_family(3).unwrap()).unwrap(), 6);
        assert_eq!(ray_count(&bean_family().unwrap()).unwrap(), 2);
    }

    #[test]
    fn bean_apex_dominates() {
        let g = bean_family().unwrap();
        let v = Vertex::parse(&g, "v").unwrap();
        assert_eq!(degree(&g, v), None);
        let depths: Vec<usize> = (1..=6)
            .map(|k| domination_witness(&g, v, k).unwrap().depth().unwrap())
            .collect();
        assert!(depths.windows(2).all(|w| w[0] <= w[1]));
        assert!(depths[5] > depths[0]);
    }

    #[test]
    fn ladder_vertices_are_bounded() {
        let g = ladder_family(1).unwrap();
        for name in ["T0", "B0", "T@0", "B@3"] {
            let v = Vertex::parse(&g, name).unwrap();
            assert!(matches!(domination_witness(&g, v, 4).unwrap(), Domination::DegreeBound { .. }), "{name}");
            assert!(domination_witness(&g, v, 2).unwrap().depth().is_some(), "{name}");
        }
    }
}
