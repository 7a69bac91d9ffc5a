use std::collections::HashMap;

use matroid_core::Multigraph;

use crate::compile::{edge_ends, Vertex};
use crate::edgeset::EdgeRef;
use crate::spec::{PeriodicGraph, TypeKind};

/// Finite piece of the infinite graph: blocks `from..depth`, optionally
/// with the prefix vertices, prefix edges and fan edges.
#[derive(Clone, Debug)]
pub struct Truncation {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<(usize, usize)>,
    pub edge_refs: Vec<EdgeRef>,
    index: HashMap<Vertex, usize>,
}

impl Truncation {
    pub fn new(
        g: &PeriodicGraph,
        keep: impl Fn(EdgeRef) -> bool,
        from: usize,
        depth: usize,
        with_prefix: bool,
    ) -> Truncation {
        let mut vertices = Vec::new();
        if with_prefix {
            vertices.extend((0..g.prefix_vertices().len()).map(Vertex::Prefix));
        }
        for block in from..depth {
            vertices.extend((0..g.repeat_vertices().len()).map(|x| Vertex::Block { x, block }));
        }
        let index: HashMap<Vertex, usize> = vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();

        let mut candidates: Vec<EdgeRef> = Vec::new();
        if with_prefix {
            candidates.extend((0..g.prefix_edges().len()).map(EdgeRef::Prefix));
        }
        for block in from..depth {
            for (ty, t) in g.types().iter().enumerate() {
                if with_prefix || !matches!(t.kind, TypeKind::Fan(..)) {
                    candidates.push(EdgeRef::Block { ty, block });
                }
            }
        }
        let mut edges = Vec::new();
        let mut edge_refs = Vec::new();
        for e in candidates {
            if !keep(e) {
                continue;
            }
            let (u, v) = edge_ends(g, e);
            if let (Some(&a), Some(&b)) = (index.get(&u), index.get(&v)) {
                edges.push((a, b));
                edge_refs.push(e);
            }
        }
        Truncation {
            vertices,
            edges,
            edge_refs,
            index,
        }
    }

    pub fn id(&self, v: Vertex) -> Option<usize> {
        self.index.get(&v).copied()
    }

    pub fn multigraph(&self) -> Multigraph {
        Multigraph::new(self.vertices.len(), self.edges.clone())
    }

    /// Vertex ids lying in `block`.
    pub fn block_vertices(&self, block: usize) -> Vec<usize> {
        (0..self.vertices.len())
            .filter(|&i| matches!(self.vertices[i], Vertex::Block { block: b, .. } if b == block))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canned::{bean_family, ladder_family};

    #[test]
    fn ladder_truncation_sizes() {
        let g = ladder_family(1).unwrap();
        let t = Truncation::new(&g, |_| true, 0, 3, true);
        // T0, B0 and three blocks of two; r0, t0, b0, three rungs, two
        // splices per side.
        assert_eq!(t.vertices.len(), 8);
        assert_eq!(t.edges.len(), 3 + 3 + 4);
        let tail = Truncation::new(&g, |_| true, 1, 3, false);
        assert_eq!(tail.vertices.len(), 4);
        assert_eq!(tail.edges.len(), 2 + 2);
    }

    #[test]
    fn fans_need_the_prefix() {
        let g = bean_family().unwrap();
        let with = Truncation::new(&g, |_| true, 0, 2, true);
        let without = Truncation::new(&g, |_| true, 0, 2, false);
        assert_eq!(with.edges.len() - without.edges.len(), 3);
    }
}
