//! Ultimately periodic edge sets.

use serde::{Deserialize, Serialize};

use matroid_core::MatroidError;

use crate::spec::PeriodicGraph;

/// File form: `{"prefix_blocks": p, "prefix_edges": [...], "repeat_edges": [...]}`.
///
/// `prefix_edges` names static edges and block edges `type@b` with `b < p`;
/// `repeat_edges` lists the types taken in every block `b >= p`. A
/// `repeat_pattern` of several type lists may replace `repeat_edges`; block
/// `b >= p` then uses entry `(b - p) mod len`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct UPEdgeSetDoc {
    #[serde(default)]
    pub prefix_blocks: usize,
    #[serde(default)]
    pub prefix_edges: Vec<String>,
    #[serde(default)]
    pub repeat_edges: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub repeat_pattern: Option<Vec<Vec<String>>>,
}

/// Edge set given by explicit choices on the static edges and the first
/// `prefix_blocks` blocks, then a pattern of block choices repeated forever.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UPEdgeSet {
    statics: Vec<bool>,
    blocks: Vec<Vec<bool>>,
    pattern: Vec<Vec<bool>>,
}

/// One edge of the infinite graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeRef {
    Prefix(usize),
    Block { ty: usize, block: usize },
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl UPEdgeSet {
    pub fn empty(g: &PeriodicGraph) -> Self {
        UPEdgeSet {
            statics: vec![false; g.prefix_edges().len()],
            blocks: Vec::new(),
            pattern: vec![vec![false; g.types().len()]],
        }
    }

    /// All edges of the graph.
    pub fn full(g: &PeriodicGraph) -> Self {
        UPEdgeSet {
            statics: vec![true; g.prefix_edges().len()],
            blocks: Vec::new(),
            pattern: vec![vec![true; g.types().len()]],
        }
    }

    /// Builds a set from raw choices; `pattern` must be nonempty.
    pub fn from_parts(
        g: &PeriodicGraph,
        statics: Vec<bool>,
        blocks: Vec<Vec<bool>>,
        pattern: Vec<Vec<bool>>,
    ) -> Result<Self, MatroidError> {
        let t = g.types().len();
        if statics.len() != g.prefix_edges().len()
            || pattern.is_empty()
            || blocks.iter().chain(&pattern).any(|row| row.len() != t)
        {
            return Err(MatroidError::Parse("edge set does not match the family".into()));
        }
        Ok(UPEdgeSet { statics, blocks, pattern })
    }

    pub fn from_doc(g: &PeriodicGraph, doc: &UPEdgeSetDoc) -> Result<Self, MatroidError> {
        let t = g.types().len();
        let ty = |name: &str| {
            g.type_index(name)
                .ok_or_else(|| MatroidError::UnknownLabel(name.to_string()))
        };
        let pattern_names = match &doc.repeat_pattern {
            Some(_) if !doc.repeat_edges.is_empty() => {
                return Err(MatroidError::Parse("give either repeat_edges or repeat_pattern".into()));
            }
            Some(p) if p.is_empty() => return Err(MatroidError::Parse("repeat_pattern is empty".into())),
            Some(p) => p.clone(),
            None => vec![doc.repeat_edges.clone()],
        };
        let mut pattern = Vec::new();
        for names in &pattern_names {
            let mut row = vec![false; t];
            for n in names {
                row[ty(n)?] = true;
            }
            pattern.push(row);
        }
        let mut set = UPEdgeSet {
            statics: vec![false; g.prefix_edges().len()],
            blocks: vec![vec![false; t]; doc.prefix_blocks],
            pattern,
        };
        for name in &doc.prefix_edges {
            if let Some(i) = g.prefix_edge_index(name) {
                set.statics[i] = true;
            } else if let Some((ty, b)) = g.parse_block_edge(name) {
                if b >= doc.prefix_blocks {
                    return Err(MatroidError::Parse(format!(
                        "prefix edge `{name}` lies beyond the {} prefix blocks",
                        doc.prefix_blocks
                    )));
                }
                set.blocks[b][ty] = true;
            } else {
                return Err(MatroidError::UnknownLabel(name.clone()));
            }
        }
        Ok(set)
    }

    /// Shorthand for [`UPEdgeSet::from_doc`] with one repeated block.
    pub fn from_names(g: &PeriodicGraph, prefix_blocks: usize, prefix: &[&str], repeat: &[&str]) -> Result<Self, MatroidError> {
        UPEdgeSet::from_doc(
            g,
            &UPEdgeSetDoc {
                prefix_blocks,
                prefix_edges: prefix.iter().map(|s| s.to_string()).collect(),
                repeat_edges: repeat.iter().map(|s| s.to_string()).collect(),
                repeat_pattern: None,
            },
        )
    }

    pub fn parse(g: &PeriodicGraph, text: &str) -> Result<Self, MatroidError> {
        let doc: UPEdgeSetDoc = serde_json::from_str(text).map_err(|e| MatroidError::Parse(e.to_string()))?;
        UPEdgeSet::from_doc(g, &doc)
    }

    pub fn to_doc(&self, g: &PeriodicGraph) -> UPEdgeSetDoc {
        let mut prefix_edges: Vec<String> = g
            .prefix_edges()
            .iter()
            .zip(&self.statics)
            .filter(|(_, &on)| on)
            .map(|(e, _)| e.name.clone())
            .collect();
        for (b, row) in self.blocks.iter().enumerate() {
            prefix_edges.extend(row.iter().enumerate().filter(|(_, &on)| on).map(|(ty, _)| g.block_edge_name(ty, b)));
        }
        let names = |row: &Vec<bool>| -> Vec<String> {
            row.iter()
                .enumerate()
                .filter(|(_, &on)| on)
                .map(|(ty, _)| g.types()[ty].name.clone())
                .collect()
        };
        let (repeat_edges, repeat_pattern) = if self.pattern.len() == 1 {
            (names(&self.pattern[0]), None)
        } else {
            (Vec::new(), Some(self.pattern.iter().map(names).collect()))
        };
        UPEdgeSetDoc {
            prefix_blocks: self.blocks.len(),
            prefix_edges,
            repeat_edges,
            repeat_pattern,
        }
    }

    pub fn prefix_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn period(&self) -> usize {
        self.pattern.len()
    }

    pub fn has_static(&self, i: usize) -> bool {
        self.statics[i]
    }

    pub fn has_block(&self, ty: usize, block: usize) -> bool {
        self.block_row(block)[ty]
    }

    pub fn block_row(&self, block: usize) -> &[bool] {
        match self.blocks.get(block) {
            Some(row) => row,
            None => &self.pattern[(block - self.blocks.len()) % self.pattern.len()],
        }
    }

    pub fn contains(&self, e: EdgeRef) -> bool {
        match e {
            EdgeRef::Prefix(i) => self.statics[i],
            EdgeRef::Block { ty, block } => self.has_block(ty, block),
        }
    }

    /// Same set presented with `p` prefix blocks and period `q`; needs
    /// `p >= prefix_blocks` and `q` a multiple of the period.
    pub fn reprofile(&self, p: usize, q: usize) -> Result<Self, MatroidError> {
        if p < self.blocks.len() || q == 0 || q % self.pattern.len() != 0 {
            return Err(MatroidError::Parse(format!(
                "profile ({p}, {q}) does not refine ({}, {})",
                self.blocks.len(),
                self.pattern.len()
            )));
        }
        Ok(UPEdgeSet {
            statics: self.statics.clone(),
            blocks: (0..p).map(|b| self.block_row(b).to_vec()).collect(),
            pattern: (p..p + q).map(|b| self.block_row(b).to_vec()).collect(),
        })
    }

    /// Smallest profile refining every given one.
    pub fn common_profile(sets: &[&UPEdgeSet]) -> (usize, usize) {
        sets.iter().fold((0, 1), |(p, q), s| {
            let r = s.period();
            (p.max(s.prefix_blocks()), q / gcd(q, r) * r)
        })
    }

    /// Sets membership of one edge, growing the prefix if needed.
    pub fn set(&mut self, e: EdgeRef, on: bool) {
        match e {
            EdgeRef::Prefix(i) => self.statics[i] = on,
            EdgeRef::Block { ty, block } => {
                if block >= self.blocks.len() {
                    *self = self.reprofile(block + 1, self.period()).expect("prefix only grows");
                }
                self.blocks[block][ty] = on;
            }
        }
    }

    pub fn with(&self, e: EdgeRef) -> Self {
        let mut s = self.clone();
        s.set(e, true);
        s
    }

    pub fn without(&self, e: EdgeRef) -> Self {
        let mut s = self.clone();
        s.set(e, false);
        s
    }

    pub fn union(&self, other: &UPEdgeSet) -> Self {
        self.zip(other, |a, b| a || b)
    }

    pub fn is_subset(&self, other: &UPEdgeSet) -> bool {
        let d = self.zip(other, |a, b| a && !b);
        !d.statics.iter().chain(d.blocks.iter().flatten()).chain(d.pattern.iter().flatten()).any(|&x| x)
    }

    fn zip(&self, other: &UPEdgeSet, f: impl Fn(bool, bool) -> bool) -> Self {
        let (p, q) = UPEdgeSet::common_profile(&[self, other]);
        let a = self.reprofile(p, q).expect("common profile");
        let b = other.reprofile(p, q).expect("common profile");
        let row = |x: &[bool], y: &[bool]| x.iter().zip(y).map(|(&u, &v)| f(u, v)).collect::<Vec<_>>();
        UPEdgeSet {
            statics: row(&a.statics, &b.statics),
            blocks: a.blocks.iter().zip(&b.blocks).map(|(x, y)| row(x, y)).collect(),
            pattern: a.pattern.iter().zip(&b.pattern).map(|(x, y)| row(x, y)).collect(),
        }
    }

    /// Edges in `self` but not in `other`, as a finite list, or `None` when
    /// the difference is infinite.
    pub fn finite_difference(&self, other: &UPEdgeSet) -> Option<Vec<EdgeRef>> {
        let d = self.zip(other, |a, b| a && !b);
        if d.pattern.iter().flatten().any(|&x| x) {
            return None;
        }
        Some(d.edges_before(d.blocks.len()))
    }

    /// Members among static edges and blocks `< depth`, in canonical order.
    pub fn edges_before(&self, depth: usize) -> Vec<EdgeRef> {
        let mut out: Vec<EdgeRef> = (0..self.statics.len())
            .filter(|&i| self.statics[i])
            .map(EdgeRef::Prefix)
            .collect();
        for block in 0..depth {
            let row = self.block_row(block);
            out.extend((0..row.len()).filter(|&ty| row[ty]).map(|ty| EdgeRef::Block { ty, block }));
        }
        out
    }

    /// Drops trailing prefix blocks and shrinks the period when possible.
    pub fn normalize(&self) -> Self {
        let mut pattern = self.pattern.clone();
        let n = pattern.len();
        if let Some(d) = (1..=n).find(|&d| n % d == 0 && (0..n).all(|i| pattern[i] == pattern[i % d])) {
            pattern.truncate(d);
        }
        let mut blocks = self.blocks.clone();
        while let Some(last) = blocks.last() {
            // Moving the last prefix block into the pattern rotates it.
            let q = pattern.len();
            if *last != pattern[q - 1] {
                break;
            }
            blocks.pop();
            pattern.rotate_right(1);
        }
        UPEdgeSet {
            statics: self.statics.clone(),
            blocks,
            pattern,
        }
    }

    /// Canonical name of an edge.
    pub fn edge_name(g: &PeriodicGraph, e: EdgeRef) -> String {
        match e {
            EdgeRef::Prefix(i) => g.prefix_edges()[i].name.clone(),
            EdgeRef::Block { ty, block } => g.block_edge_name(ty, block),
        }
    }

    pub fn parse_edge(g: &PeriodicGraph, name: &str) -> Result<EdgeRef, MatroidError> {
        if let Some(i) = g.prefix_edge_index(name) {
            return Ok(EdgeRef::Prefix(i));
        }
        g.parse_block_edge(name)
            .map(|(ty, block)| EdgeRef::Block { ty, block })
            .ok_or_else(|| MatroidError::UnknownLabel(name.to_string()))
    }
}
