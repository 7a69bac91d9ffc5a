//! Brute-force answers from explicit finite truncations, for checking the
//! symbolic engine.
//!
//! For a set of profile (p, q) and depth parameter `d` the truncation keeps
//! blocks `< p + q(2d + 2)`. Components meeting the last `q` blocks are
//! open; the rest are closed. Closed components that keep appearing between
//! depths `p + q(d + 1)` and `p + q(2d + 2)` mean infinitely many.

use serde::Serialize;

use matroid_core::{ExtNat, UnionFind};

use crate::compile::Vertex;
use crate::edgeset::UPEdgeSet;
use crate::explicit::Truncation;
use crate::flow::VertexSplit;
use crate::gluing::Gluing;
use crate::spec::PeriodicGraph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleSummary {
    pub components: ExtNat,
    pub glued_components: ExtNat,
    pub double_ray: bool,
    pub finite_cycle: bool,
}

struct Piece {
    t: Truncation,
    uf: UnionFind,
    cycle: bool,
}

fn piece(g: &PeriodicGraph, s: &UPEdgeSet, from: usize, depth: usize, with_prefix: bool) -> Piece {
    let t = Truncation::new(g, |e| s.contains(e), from, depth, with_prefix);
    let mut uf = UnionFind::new(t.vertices.len());
    let mut cycle = false;
    for &(a, b) in &t.edges {
        cycle |= !uf.union(a, b);
    }
    Piece { t, uf, cycle }
}

fn block_of(v: Vertex) -> Option<usize> {
    match v {
        Vertex::Prefix(_) => None,
        Vertex::Block { block, .. } => Some(block),
    }
}

impl Piece {
    /// Roots of components meeting blocks `>= open_from`.
    fn open_roots(&mut self, open_from: usize) -> Vec<usize> {
        let mut roots: Vec<usize> = (0..self.t.vertices.len())
            .filter(|&i| block_of(self.t.vertices[i]).is_some_and(|b| b >= open_from))
            .map(|i| self.uf.find(i))
            .collect();
        roots.sort_unstable();
        roots.dedup();
        roots
    }

    fn closed_count(&mut self, open_from: usize) -> usize {
        let open = self.open_roots(open_from);
        let mut roots: Vec<usize> = (0..self.t.vertices.len()).map(|i| self.uf.find(i)).collect();
        roots.sort_unstable();
        roots.dedup();
        roots.len() - open.len()
    }

    /// Open roots that also reach below block `cut` (or the prefix).
    fn reaching_roots(&mut self, open_from: usize, cut: usize) -> Vec<usize> {
        let open = self.open_roots(open_from);
        let mut out: Vec<usize> = (0..self.t.vertices.len())
            .filter(|&i| block_of(self.t.vertices[i]).is_none_or(|b| b < cut))
            .map(|i| self.uf.find(i))
            .filter(|r| open.binary_search(r).is_ok())
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

fn depths(s: &UPEdgeSet, d: usize) -> (usize, usize, usize) {
    let (p, q) = (s.prefix_blocks(), s.period());
    (p + q * (d + 1), p + q * (2 * d + 2), q)
}

/// Component count of `s` from truncations.
pub fn truncation_components(g: &PeriodicGraph, s: &UPEdgeSet, d: usize) -> ExtNat {
    let (cut, last, q) = depths(s, d);
    let mut near = piece(g, s, 0, cut, true);
    let mut far = piece(g, s, 0, last, true);
    let closed_near = near.closed_count(cut - q);
    let closed_far = far.closed_count(last - q);
    if closed_far > closed_near {
        return ExtNat::Infinite;
    }
    ExtNat::from(closed_far + far.reaching_roots(last - q, cut).len())
}

pub fn truncation_summary(g: &PeriodicGraph, s: &UPEdgeSet, gluing: &Gluing, d: usize) -> OracleSummary {
    let (cut, last, q) = depths(s, d);
    let components = truncation_components(g, s, d);
    let mut full = piece(g, s, 0, last, true);
    let mut tail = piece(g, s, s.prefix_blocks(), last, false);

    let strands = tail.reaching_roots(last - q, cut);
    let members = |tail: &mut Piece, root: usize| -> Vec<usize> {
        (0..tail.t.vertices.len()).filter(|&i| tail.uf.find(i) == root).collect()
    };
    let mut strand_comp = Vec::new();
    let mut strand_group = Vec::new();
    let mut double_ray = false;
    for &r in &strands {
        let verts = members(&mut tail, r);
        let v = tail.t.vertices[verts[0]];
        let full_root = full.uf.find(full.t.id(v).expect("tail vertices are in the full piece"));
        strand_comp.push(full_root);
        let Vertex::Block { x, .. } = v else { unreachable!() };
        strand_group.push(gluing.glued_group(g.end_label(g.corridor_of(x))));
        let at = |b: usize| -> Vec<usize> {
            verts
                .iter()
                .copied()
                .filter(|&i| block_of(tail.t.vertices[i]) == Some(b))
                .collect()
        };
        let paths = VertexSplit::new(tail.t.vertices.len(), tail.t.edges.iter().copied())
            .disjoint_paths(&at(cut - 1), &at(last - 1), 2);
        double_ray |= paths >= 2;
    }
    let mut sorted = strand_comp.clone();
    sorted.sort_unstable();
    double_ray |= sorted.windows(2).any(|w| w[0] == w[1]);

    let glued_components = match components {
        ExtNat::Infinite => ExtNat::Infinite,
        ExtNat::Finite(_) => {
            let open = full.reaching_roots(last - q, cut);
            let closed = full.closed_count(last - q);
            let n = full.t.vertices.len();
            let mut uf = UnionFind::new(n + gluing.groups().len());
            for (c, grp) in strand_comp.iter().zip(&strand_group) {
                if let Some(grp) = grp {
                    uf.union(*c, n + grp);
                }
            }
            let mut roots: Vec<usize> = open.iter().map(|&r| uf.find(r)).collect();
            roots.sort_unstable();
            roots.dedup();
            ExtNat::from(closed + roots.len())
        }
    };
    OracleSummary {
        components,
        glued_components,
        double_ray,
        finite_cycle: full.cycle,
    }
}

/// `components(s) - components(G)` from truncations.
pub fn truncation_defect(g: &PeriodicGraph, s: &UPEdgeSet, d: usize) -> Option<ExtNat> {
    let full = UPEdgeSet::full(g);
    truncation_components(g, s, d).checked_sub(truncation_components(g, &full, d))
}
