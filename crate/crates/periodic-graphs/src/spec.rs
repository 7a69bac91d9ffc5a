//! Finitely presented infinite graphs: a static prefix followed by copies of
//! one repeat block, block `b` joined to block `b + 1` by splice edges.
//!
//! ```json
//! {"prefix": {"vertices": ["T0", "B0"], "edges": [["r0", "T0", "B0"], ["t0", "T0", "T"], ["b0", "B0", "B"]]},
//!  "repeat": {"vertices": ["T", "B"], "edges": [["r", "T", "B"]]},
//!  "splice": [["T", "T", "t"], ["B", "B", "b"]],
//!  "apex": [],
//!  "ends": ["e"]}
//! ```
//!
//! Prefix edges may name repeat vertices; those refer to block 0. Block
//! edges are materialized as `name@b`, repeat vertices as `vertex@b`.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use matroid_core::{MatroidError, UnionFind};

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Section {
    #[serde(default)]
    pub vertices: Vec<String>,
    #[serde(default)]
    pub edges: Vec<EdgeDecl>,
}

/// `[name, u, v]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeDecl(pub String, pub String, pub String);

/// `[left, right]` or `[left, right, name]`: joins `left@b` to `right@(b+1)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SpliceDecl {
    Named(String, String, String),
    Plain(String, String),
}

impl SpliceDecl {
    pub fn ends(&self) -> (&str, &str) {
        match self {
            SpliceDecl::Named(l, r, _) | SpliceDecl::Plain(l, r) => (l, r),
        }
    }

    pub fn name(&self) -> String {
        match self {
            SpliceDecl::Named(_, _, n) => n.clone(),
            SpliceDecl::Plain(l, r) => format!("{l}>{r}"),
        }
    }
}

/// Repeat vertex joined to the apex in every block, optionally named.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FanDecl {
    Plain(String),
    Named(String, String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ApexDecl {
    pub vertex: String,
    pub per_block_edges: Vec<FanDecl>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeriodicGraphSpec {
    #[serde(default)]
    pub prefix: Section,
    pub repeat: Section,
    #[serde(default)]
    pub splice: Vec<SpliceDecl>,
    #[serde(default)]
    pub apex: Vec<ApexDecl>,
    pub ends: Vec<String>,
}

/// Endpoint of a prefix edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PrefixEnd {
    Prefix(usize),
    Block0(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TypeKind {
    /// Both ends in the same block.
    Local(usize, usize),
    /// `left@b` to `right@(b+1)`.
    Splice(usize, usize),
    /// Prefix apex vertex to a vertex of the block.
    Fan(usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeType {
    pub name: String,
    pub kind: TypeKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrefixEdge {
    pub name: String,
    pub ends: (PrefixEnd, PrefixEnd),
}

/// A validated periodic graph with index-based structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodicGraph {
    spec: PeriodicGraphSpec,
    prefix_vertices: Vec<String>,
    repeat_vertices: Vec<String>,
    prefix_edges: Vec<PrefixEdge>,
    types: Vec<EdgeType>,
    apexes: Vec<usize>,
    corridor: Vec<usize>,
    corridor_count: usize,
}

fn bad(msg: impl Into<String>) -> MatroidError {
    MatroidError::Parse(msg.into())
}

impl PeriodicGraph {
    pub fn new(spec: PeriodicGraphSpec) -> Result<Self, MatroidError> {
        let mut names = BTreeSet::new();
        for v in spec.prefix.vertices.iter().chain(&spec.repeat.vertices) {
            if v.contains('@') || v.is_empty() {
                return Err(bad(format!("vertex name `{v}` must be nonempty and free of '@'")));
            }
            if !names.insert(v.as_str()) {
                return Err(bad(format!("duplicate vertex `{v}`")));
            }
        }
        let prefix_index: BTreeMap<&str, usize> =
            spec.prefix.vertices.iter().enumerate().map(|(i, v)| (v.as_str(), i)).collect();
        let repeat_index: BTreeMap<&str, usize> =
            spec.repeat.vertices.iter().enumerate().map(|(i, v)| (v.as_str(), i)).collect();
        let repeat_of = |v: &str| repeat_index.get(v).copied().ok_or_else(|| bad(format!("unknown repeat vertex `{v}`")));

        let mut edge_names = BTreeSet::new();
        let mut claim = |n: &str| -> Result<(), MatroidError> {
            if n.contains('@') || n.is_empty() {
                return Err(bad(format!("edge name `{n}` must be nonempty and free of '@'")));
            }
            if !edge_names.insert(n.to_string()) {
                return Err(bad(format!("duplicate edge name `{n}`")));
            }
            Ok(())
        };

        let mut prefix_edges = Vec::new();
        for EdgeDecl(name, u, v) in &spec.prefix.edges {
            claim(name)?;
            let end = |x: &str| -> Result<PrefixEnd, MatroidError> {
                if let Some(&i) = prefix_index.get(x) {
                    Ok(PrefixEnd::Prefix(i))
                } else {
                    repeat_of(x).map(PrefixEnd::Block0)
                }
            };
            prefix_edges.push(PrefixEdge {
                name: name.clone(),
                ends: (end(u)?, end(v)?),
            });
        }

        let mut types = Vec::new();
        for EdgeDecl(name, u, v) in &spec.repeat.edges {
            claim(name)?;
            types.push(EdgeType {
                name: name.clone(),
                kind: TypeKind::Local(repeat_of(u)?, repeat_of(v)?),
            });
        }
        for s in &spec.splice {
            let (l, r) = s.ends();
            let name = s.name();
            claim(&name)?;
            types.push(EdgeType {
                name,
                kind: TypeKind::Splice(repeat_of(l)?, repeat_of(r)?),
            });
        }
        let mut apexes = Vec::new();
        for a in &spec.apex {
            let ai = *prefix_index
                .get(a.vertex.as_str())
                .ok_or_else(|| bad(format!("apex `{}` is not a prefix vertex", a.vertex)))?;
            if apexes.contains(&ai) {
                return Err(bad(format!("apex `{}` declared twice", a.vertex)));
            }
            apexes.push(ai);
            for f in &a.per_block_edges {
                let (x, name) = match f {
                    FanDecl::Plain(x) => (x.as_str(), format!("{}-{x}", a.vertex)),
                    FanDecl::Named(x, n) => (x.as_str(), n.clone()),
                };
                claim(&name)?;
                types.push(EdgeType {
                    name,
                    kind: TypeKind::Fan(ai, repeat_of(x)?),
                });
            }
        }

        let r = spec.repeat.vertices.len();
        let mut uf = UnionFind::new(r);
        for t in &types {
            if let TypeKind::Local(a, b) | TypeKind::Splice(a, b) = t.kind {
                uf.union(a, b);
            }
        }
        let mut corridor = vec![usize::MAX; r];
        let mut corridor_count = 0;
        let mut by_root = BTreeMap::new();
        for (x, slot) in corridor.iter_mut().enumerate() {
            let root = uf.find(x);
            *slot = *by_root.entry(root).or_insert_with(|| {
                corridor_count += 1;
                corridor_count - 1
            });
        }
        if spec.ends.len() != corridor_count {
            return Err(bad(format!(
                "{} end labels given for {corridor_count} corridors",
                spec.ends.len()
            )));
        }

        Ok(PeriodicGraph {
            prefix_vertices: spec.prefix.vertices.clone(),
            repeat_vertices: spec.repeat.vertices.clone(),
            spec,
            prefix_edges,
            types,
            apexes,
            corridor,
            corridor_count,
        })
    }

    pub fn parse(text: &str) -> Result<Self, MatroidError> {
        let spec: PeriodicGraphSpec = serde_json::from_str(text).map_err(|e| MatroidError::Parse(e.to_string()))?;
        PeriodicGraph::new(spec)
    }

    pub fn spec(&self) -> &PeriodicGraphSpec {
        &self.spec
    }

    pub fn prefix_vertices(&self) -> &[String] {
        &self.prefix_vertices
    }

    pub fn repeat_vertices(&self) -> &[String] {
        &self.repeat_vertices
    }

    pub fn prefix_edges(&self) -> &[PrefixEdge] {
        &self.prefix_edges
    }

    pub fn types(&self) -> &[EdgeType] {
        &self.types
    }

    pub fn type_index(&self, name: &str) -> Option<usize> {
        self.types.iter().position(|t| t.name == name)
    }

    pub fn prefix_edge_index(&self, name: &str) -> Option<usize> {
        self.prefix_edges.iter().position(|e| e.name == name)
    }

    /// Prefix indices of apex vertices.
    pub fn apexes(&self) -> &[usize] {
        &self.apexes
    }

    /// Corridor of each repeat vertex.
    pub fn corridor_of(&self, x: usize) -> usize {
        self.corridor[x]
    }

    pub fn corridor_count(&self) -> usize {
        self.corridor_count
    }

    pub fn end_label(&self, corridor: usize) -> &str {
        &self.spec.ends[corridor]
    }

    /// Distinct end labels in first-use order.
    pub fn end_classes(&self) -> Vec<String> {
        let mut out: Vec<String> = Vec::new();
        for e in &self.spec.ends {
            if !out.contains(e) {
                out.push(e.clone());
            }
        }
        out
    }

    /// Repeat vertices that start a splice.
    pub fn interface(&self) -> Vec<usize> {
        let set: BTreeSet<usize> = self
            .types
            .iter()
            .filter_map(|t| match t.kind {
                TypeKind::Splice(l, _) => Some(l),
                _ => None,
            })
            .collect();
        set.into_iter().collect()
    }

    /// Degree of a prefix vertex; `None` for an apex with fans.
    pub fn prefix_degree(&self, v: usize) -> Option<usize> {
        if self.types.iter().any(|t| matches!(t.kind, TypeKind::Fan(a, _) if a == v)) {
            return None;
        }
        Some(
            self.prefix_edges
                .iter()
                .map(|e| [e.ends.0, e.ends.1].iter().filter(|&&x| x == PrefixEnd::Prefix(v)).count())
                .sum(),
        )
    }

    /// Name of a block edge.
    pub fn block_edge_name(&self, ty: usize, block: usize) -> String {
        format!("{}@{block}", self.types[ty].name)
    }

    /// Parses `name@b` into a type index and block.
    pub fn parse_block_edge(&self, name: &str) -> Option<(usize, usize)> {
        let (t, b) = name.rsplit_once('@')?;
        Some((self.type_index(t)?, b.parse().ok()?))
    }

    /// Splits into the pieces that no edge type joins, keeping all names.
    pub fn parts(&self) -> Vec<PeriodicGraph> {
        let pv = self.prefix_vertices.len();
        let mut uf = UnionFind::new(pv + self.repeat_vertices.len());
        let node = |e: PrefixEnd| match e {
            PrefixEnd::Prefix(i) => i,
            PrefixEnd::Block0(x) => pv + x,
        };
        for e in &self.prefix_edges {
            uf.union(node(e.ends.0), node(e.ends.1));
        }
        for t in &self.types {
            let (a, b) = match t.kind {
                TypeKind::Local(x, y) | TypeKind::Splice(x, y) => (pv + x, pv + y),
                TypeKind::Fan(a, x) => (a, pv + x),
            };
            uf.union(a, b);
        }
        let roots: Vec<usize> = (0..uf.len()).map(|i| uf.find(i)).collect();
        let mut order = roots.clone();
        let mut seen = BTreeSet::new();
        order.retain(|r| seen.insert(*r));
        if order.len() <= 1 {
            return vec![self.clone()];
        }
        order
            .iter()
            .map(|&root| {
                let in_part = |v: &str| {
                    let i = self
                        .prefix_vertices
                        .iter()
                        .position(|x| x == v)
                        .or_else(|| self.repeat_vertices.iter().position(|x| x == v).map(|x| pv + x))
                        .expect("declared vertex");
                    roots[i] == root
                };
                let s = &self.spec;
                let keep_edge = |e: &&EdgeDecl| in_part(&e.1);
                let mut ends = Vec::new();
                let mut seen_corridor = BTreeSet::new();
                for (x, v) in self.repeat_vertices.iter().enumerate() {
                    if in_part(v) && seen_corridor.insert(self.corridor[x]) {
                        ends.push(s.ends[self.corridor[x]].clone());
                    }
                }
                let spec = PeriodicGraphSpec {
                    prefix: Section {
                        vertices: s.prefix.vertices.iter().filter(|v| in_part(v)).cloned().collect(),
                        edges: s.prefix.edges.iter().filter(keep_edge).cloned().collect(),
                    },
                    repeat: Section {
                        vertices: s.repeat.vertices.iter().filter(|v| in_part(v)).cloned().collect(),
                        edges: s.repeat.edges.iter().filter(keep_edge).cloned().collect(),
                    },
                    splice: s
                        .splice
                        .iter()
                        .filter(|sp| in_part(sp.ends().0))
                        .map(|sp| SpliceDecl::Named(sp.ends().0.into(), sp.ends().1.into(), sp.name()))
                        .collect(),
                    apex: s
                        .apex
                        .iter()
                        .filter(|a| in_part(&a.vertex))
                        .map(|a| ApexDecl {
                            vertex: a.vertex.clone(),
                            per_block_edges: a
                                .per_block_edges
                                .iter()
                                .map(|f| match f {
                                    FanDecl::Plain(x) => FanDecl::Named(x.clone(), format!("{}-{x}", a.vertex)),
                                    named => named.clone(),
                                })
                                .collect(),
                        })
                        .collect(),
                    ends,
                };
                PeriodicGraph::new(spec).expect("a part of a valid graph is valid")
            })
            .collect()
    }

    /// Disjoint union; every name is prefixed with its part's tag.
    pub fn disjoint_union(parts: &[(&str, &PeriodicGraphSpec)]) -> Result<PeriodicGraph, MatroidError> {
        let mut out = PeriodicGraphSpec {
            prefix: Section::default(),
            repeat: Section::default(),
            splice: Vec::new(),
            apex: Vec::new(),
            ends: Vec::new(),
        };
        for (tag, s) in parts {
            let t = |x: &str| format!("{tag}{x}");
            let edge = |EdgeDecl(n, u, v): &EdgeDecl| EdgeDecl(t(n), t(u), t(v));
            out.prefix.vertices.extend(s.prefix.vertices.iter().map(|v| t(v)));
            out.prefix.edges.extend(s.prefix.edges.iter().map(edge));
            out.repeat.vertices.extend(s.repeat.vertices.iter().map(|v| t(v)));
            out.repeat.edges.extend(s.repeat.edges.iter().map(edge));
            out.splice.extend(s.splice.iter().map(|sp| {
                let (l, r) = sp.ends();
                SpliceDecl::Named(t(l), t(r), t(&sp.name()))
            }));
            out.apex.extend(s.apex.iter().map(|a| ApexDecl {
                vertex: t(&a.vertex),
                per_block_edges: a
                    .per_block_edges
                    .iter()
                    .map(|f| match f {
                        FanDecl::Plain(x) => FanDecl::Named(t(x), t(&format!("{}-{x}", a.vertex))),
                        FanDecl::Named(x, n) => FanDecl::Named(t(x), t(n)),
                    })
                    .collect(),
            }));
        }
        // Corridors of the union are the parts' corridors in order, since
        // every part's vertices come after the previous part's.
        for (tag, s) in parts {
            out.ends.extend(s.ends.iter().map(|e| format!("{tag}{e}")));
        }
        PeriodicGraph::new(out)
    }
}
