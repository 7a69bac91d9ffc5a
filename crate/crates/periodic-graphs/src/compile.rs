//! Rewrites a graph with an edge set of profile (p, q) into period-one form:
//! the first p blocks join the static part and every q consecutive blocks
//! form one super-block.

use crate::edgeset::{EdgeRef, UPEdgeSet};
use crate::spec::{PeriodicGraph, PrefixEnd, TypeKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum StaticEnd {
    Static(usize),
    Block0(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum BlockEnd {
    Local(usize),
    /// Vertex of the following super-block.
    Next(usize),
    /// Static vertex, always an apex.
    Apex(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct BlockEdge {
    pub a: BlockEnd,
    pub b: BlockEnd,
    pub offset: usize,
    pub ty: usize,
}

/// Vertex of the infinite graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Vertex {
    Prefix(usize),
    Block { x: usize, block: usize },
}

impl Vertex {
    pub fn name(self, g: &PeriodicGraph) -> String {
        match self {
            Vertex::Prefix(i) => g.prefix_vertices()[i].clone(),
            Vertex::Block { x, block } => format!("{}@{block}", g.repeat_vertices()[x]),
        }
    }

    pub fn parse(g: &PeriodicGraph, name: &str) -> Option<Vertex> {
        if let Some(i) = g.prefix_vertices().iter().position(|v| v == name) {
            return Some(Vertex::Prefix(i));
        }
        let (x, b) = name.rsplit_once('@')?;
        Some(Vertex::Block {
            x: g.repeat_vertices().iter().position(|v| v == x)?,
            block: b.parse().ok()?,
        })
    }
}

/// Endpoints of an edge of the infinite graph.
pub fn edge_ends(g: &PeriodicGraph, e: EdgeRef) -> (Vertex, Vertex) {
    let end = |p: PrefixEnd| match p {
        PrefixEnd::Prefix(i) => Vertex::Prefix(i),
        PrefixEnd::Block0(x) => Vertex::Block { x, block: 0 },
    };
    match e {
        EdgeRef::Prefix(i) => {
            let (a, b) = g.prefix_edges()[i].ends;
            (end(a), end(b))
        }
        EdgeRef::Block { ty, block } => match g.types()[ty].kind {
            TypeKind::Local(x, y) => (Vertex::Block { x, block }, Vertex::Block { x: y, block }),
            TypeKind::Splice(l, r) => (Vertex::Block { x: l, block }, Vertex::Block { x: r, block: block + 1 }),
            TypeKind::Fan(a, x) => (Vertex::Prefix(a), Vertex::Block { x, block }),
        },
    }
}

#[derive(Clone, Debug)]
pub(crate) struct Compiled {
    pub p: usize,
    pub q: usize,
    pub r: usize,
    pub prefix_count: usize,
    pub static_count: usize,
    pub static_edges: Vec<(StaticEnd, StaticEnd, EdgeRef)>,
    pub block_size: usize,
    pub block_edges: Vec<BlockEdge>,
    pub apexes: Vec<usize>,
    pub interface: Vec<usize>,
}

impl Compiled {
    pub fn new(g: &PeriodicGraph, s: &UPEdgeSet) -> Compiled {
        let (p, q) = (s.prefix_blocks(), s.period());
        let r = g.repeat_vertices().len();
        let pv = g.prefix_vertices().len();
        let block_static = |x: usize, b: usize| pv + b * r + x;
        // Vertex `x` of original block `b`, seen from the static part.
        let at = |x: usize, b: usize| {
            if b < p {
                StaticEnd::Static(block_static(x, b))
            } else {
                StaticEnd::Block0(x)
            }
        };

        let mut static_edges = Vec::new();
        for (i, e) in g.prefix_edges().iter().enumerate() {
            if !s.has_static(i) {
                continue;
            }
            let end = |x: PrefixEnd| match x {
                PrefixEnd::Prefix(v) => StaticEnd::Static(v),
                PrefixEnd::Block0(x) => at(x, 0),
            };
            static_edges.push((end(e.ends.0), end(e.ends.1), EdgeRef::Prefix(i)));
        }
        for b in 0..p {
            for (ty, t) in g.types().iter().enumerate() {
                if !s.has_block(ty, b) {
                    continue;
                }
                let (u, v) = match t.kind {
                    TypeKind::Local(x, y) => (at(x, b), at(y, b)),
                    TypeKind::Splice(l, rr) => (at(l, b), at(rr, b + 1)),
                    TypeKind::Fan(a, x) => (StaticEnd::Static(a), at(x, b)),
                };
                static_edges.push((u, v, EdgeRef::Block { ty, block: b }));
            }
        }

        let mut block_edges = Vec::new();
        for off in 0..q {
            for (ty, t) in g.types().iter().enumerate() {
                if !s.has_block(ty, p + off) {
                    continue;
                }
                let local = |x: usize| BlockEnd::Local(off * r + x);
                let (a, b) = match t.kind {
                    TypeKind::Local(x, y) => (local(x), local(y)),
                    TypeKind::Splice(l, rr) if off + 1 < q => (local(l), BlockEnd::Local((off + 1) * r + rr)),
                    TypeKind::Splice(l, rr) => (local(l), BlockEnd::Next(rr)),
                    TypeKind::Fan(a, x) => (BlockEnd::Apex(a), local(x)),
                };
                block_edges.push(BlockEdge { a, b, offset: off, ty });
            }
        }
        let mut interface: Vec<usize> = block_edges
            .iter()
            .filter_map(|e| match (e.a, e.b) {
                (BlockEnd::Local(l), BlockEnd::Next(_)) => Some(l),
                _ => None,
            })
            .collect();
        interface.sort_unstable();
        interface.dedup();

        Compiled {
            p,
            q,
            r,
            prefix_count: pv,
            static_count: pv + p * r,
            static_edges,
            block_size: q * r,
            block_edges,
            apexes: g.apexes().to_vec(),
            interface,
        }
    }

    /// Step at which a vertex is first processed, and its index among that
    /// step's fresh vertices.
    pub fn locate(&self, v: Vertex) -> (usize, usize) {
        match v {
            Vertex::Prefix(i) => (0, i),
            Vertex::Block { x, block } if block < self.p => (0, self.prefix_count + block * self.r + x),
            Vertex::Block { x, block } => {
                let (j, off) = ((block - self.p) / self.q, (block - self.p) % self.q);
                let fresh = off * self.r + x;
                if j == 0 {
                    (0, self.static_count + fresh)
                } else {
                    (j, fresh)
                }
            }
        }
    }

    /// Original vertex of local `x` in super-block `j`.
    pub fn local_vertex(&self, j: usize, x: usize) -> Vertex {
        Vertex::Block {
            x: x % self.r,
            block: self.p + j * self.q + x / self.r,
        }
    }

    /// Original edge of a block edge in super-block `j`.
    pub fn block_edge_ref(&self, j: usize, e: &BlockEdge) -> EdgeRef {
        EdgeRef::Block {
            ty: e.ty,
            block: self.p + j * self.q + e.offset,
        }
    }

    /// First original block lying wholly past super-block `j`.
    pub fn blocks_through(&self, j: usize) -> usize {
        self.p + (j + 1) * self.q
    }
}
