//! Connectivity of an ultimately periodic edge set, block by block.
//!
//! Two transducers run side by side over the super-blocks of the compiled
//! form. The first sees the whole subgraph; its state is the partition of
//! the frontier (apex vertices and the vertices with edges into the next
//! block) into components of everything processed so far. The second sees
//! only the tail, without the static part and apex edges, and tracks where
//! rays run. Both are deterministic after the first step, so the pair of
//! states eventually cycles.

use std::collections::{BTreeMap, HashMap, VecDeque};

use serde::Serialize;

use matroid_core::{ExtNat, MatroidError, UnionFind};

use crate::compile::{edge_ends, BlockEnd, Compiled, StaticEnd, Vertex};
use crate::edgeset::{EdgeRef, UPEdgeSet};
use crate::flow::VertexSplit;
use crate::gluing::Gluing;
use crate::spec::PeriodicGraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Fate {
    Alive(usize),
    Dead(usize),
}

#[derive(Clone, Debug)]
struct Step {
    old: Vec<Fate>,
    fresh: Vec<Fate>,
    state: Vec<usize>,
    classes: usize,
    deaths: usize,
    cycle: Option<EdgeRef>,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mode {
    Full,
    Tail,
}

/// Component of a vertex: a finite one, named by where it closed, or one
/// of the infinite components.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ComponentId {
    Finite { step: usize, index: usize },
    Infinite(usize),
}

/// Class of rays running along one corridor: a component of the tail graph
/// that never closes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Strand {
    pub corridor: usize,
    pub end: String,
    /// Index among the infinite components.
    pub component: usize,
    /// Vertex-disjoint rays inside the strand, capped at 2.
    pub rays: u32,
    /// Frontier vertices of the strand at the settled step.
    pub frontier: Vec<String>,
}

/// Why a set is dependent in a glued system.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    FiniteCycle { edges: Vec<String> },
    /// A circle through glue points; each entry names a strand as
    /// `end:frontier`.
    GluedCircle { strands: Vec<String> },
}

/// Full analysis of one edge set.
#[derive(Clone, Debug)]
pub struct Analysis {
    c: Compiled,
    full: Vec<Step>,
    tail: Vec<Step>,
    start: usize,
    period: usize,
    settled: usize,
    end: usize,
    infinite: Vec<usize>,
    strands: Vec<Strand>,
    components: ExtNat,
    finite_deaths: usize,
}

/// Default stabilization bound for a graph.
pub fn default_bound(g: &PeriodicGraph) -> usize {
    (4 * (g.interface().len() + g.apexes().len())).max(4)
}

/// Result of [`Analysis::glue`].
#[derive(Clone, Debug)]
pub struct Glued {
    root: Vec<usize>,
    pub violation: Option<Violation>,
    pub components: ExtNat,
}

impl Glued {
    /// Glued class of a component; finite components stay on their own.
    pub fn class(&self, id: ComponentId) -> Option<usize> {
        match id {
            ComponentId::Infinite(i) => Some(self.root[i]),
            ComponentId::Finite { .. } => None,
        }
    }

    pub fn same(&self, a: ComponentId, b: ComponentId) -> bool {
        match (self.class(a), self.class(b)) {
            (Some(x), Some(y)) => x == y,
            _ => a == b,
        }
    }
}

impl Analysis {
    pub fn new(g: &PeriodicGraph, s: &UPEdgeSet) -> Result<Analysis, MatroidError> {
        Analysis::with_bound(g, s, default_bound(g))
    }

    pub fn with_bound(g: &PeriodicGraph, s: &UPEdgeSet, bound: usize) -> Result<Analysis, MatroidError> {
        let c = Compiled::new(g, s);
        let mut full: Vec<Step> = Vec::new();
        let mut tail: Vec<Step> = Vec::new();
        let mut seen: HashMap<(Vec<usize>, Vec<usize>), usize> = HashMap::new();
        let (start, period) = loop {
            let j = full.len();
            if j > bound {
                return Err(MatroidError::BoundExhausted(format!(
                    "no fixpoint within {bound} windows; last frontier partition {:?}",
                    full.last().map(|s| &s.state)
                )));
            }
            let f = step(&c, Mode::Full, j, full.last());
            let t = step(&c, Mode::Tail, j, tail.last());
            let key = (f.state.clone(), t.state.clone());
            full.push(f);
            tail.push(t);
            if let Some(&t0) = seen.get(&key) {
                break (t0, j - t0);
            }
            seen.insert(key, j);
        };
        let k = (start..start + period)
            .map(|j| full[j].classes.max(tail[j].classes))
            .max()
            .unwrap_or(0);
        let stride = (k + 1) * period;
        let settled = start + stride;
        let end = settled + 2 * stride;
        while full.len() <= end {
            let j = full.len();
            let f = step(&c, Mode::Full, j, full.last());
            let t = step(&c, Mode::Tail, j, tail.last());
            full.push(f);
            tail.push(t);
        }

        let looping_deaths = (start + 1..=start + period).any(|j| full[j].deaths > 0);
        let finite_deaths: usize = full[..=start].iter().map(|s| s.deaths).sum();
        let mut infinite: Vec<usize> = (0..full[settled].classes)
            .filter_map(|cl| match push(&full, settled, cl, end) {
                Fate::Alive(x) => Some(x),
                Fate::Dead(_) => None,
            })
            .collect();
        infinite.sort_unstable();
        infinite.dedup();
        let components = if looping_deaths {
            ExtNat::Infinite
        } else {
            ExtNat::from(finite_deaths + infinite.len())
        };

        let mut a = Analysis {
            c,
            full,
            tail,
            start,
            period,
            settled,
            end,
            infinite,
            strands: Vec::new(),
            components,
            finite_deaths,
        };
        a.strands = a.find_strands(g);
        Ok(a)
    }

    fn find_strands(&self, g: &PeriodicGraph) -> Vec<Strand> {
        let c = &self.c;
        let mut images: Vec<usize> = (0..self.tail[self.settled].classes)
            .filter_map(|cl| match push(&self.tail, self.settled, cl, self.end) {
                Fate::Alive(x) => Some(x),
                Fate::Dead(_) => None,
            })
            .collect();
        images.sort_unstable();
        images.dedup();
        let slots_at = |j: usize, img: usize| -> Vec<usize> {
            (0..c.interface.len())
                .filter(|&i| push(&self.tail, j, self.tail[j].state[i], self.end) == Fate::Alive(img))
                .map(|i| c.interface[i])
                .collect()
        };
        let stride = (self.end - self.settled) / 2;
        images
            .into_iter()
            .map(|img| {
                let at_end = slots_at(self.end, img);
                let x = at_end[0];
                let corridor = g.corridor_of(x % c.r);
                let full_class = match self.full[self.end].fresh[fresh_local(c, self.end, x)] {
                    Fate::Alive(cl) => cl,
                    Fate::Dead(_) => unreachable!("interface vertices stay on the frontier"),
                };
                let component = self
                    .infinite
                    .binary_search(&full_class)
                    .expect("strand vertices reach back to the settled step");
                let sources = slots_at(self.settled, img);
                let rays = [stride, 2 * stride]
                    .iter()
                    .map(|&len| window_flow(c, len, &sources, &slots_at(self.settled + len, img)))
                    .min()
                    .unwrap_or(0);
                Strand {
                    corridor,
                    end: g.end_label(corridor).to_string(),
                    component,
                    rays,
                    frontier: sources
                        .iter()
                        .map(|&x| c.local_vertex(self.settled, x).name(g))
                        .collect(),
                }
            })
            .collect()
    }

    /// First finite cycle, as the edge that closes it.
    pub fn cycle_edge(&self) -> Option<EdgeRef> {
        self.full.iter().find_map(|s| s.cycle)
    }

    pub fn has_finite_cycle(&self) -> bool {
        self.cycle_edge().is_some()
    }

    /// Edges of one finite cycle.
    pub fn finite_cycle(&self, g: &PeriodicGraph, s: &UPEdgeSet) -> Option<Vec<EdgeRef>> {
        let (j, closing) = self.full.iter().enumerate().find_map(|(j, st)| st.cycle.map(|e| (j, e)))?;
        let depth = self.c.blocks_through(j);
        let inside = |v: Vertex| !matches!(v, Vertex::Block { block, .. } if block >= depth);
        let (a, b) = edge_ends(g, closing);
        if a == b {
            return Some(vec![closing]);
        }
        let mut adj: BTreeMap<Vertex, Vec<(Vertex, EdgeRef)>> = BTreeMap::new();
        for e in s.edges_before(depth) {
            let (u, v) = edge_ends(g, e);
            if e != closing && inside(u) && inside(v) {
                adj.entry(u).or_default().push((v, e));
                adj.entry(v).or_default().push((u, e));
            }
        }
        let mut prev: BTreeMap<Vertex, (Vertex, EdgeRef)> = BTreeMap::new();
        let mut queue = VecDeque::from([a]);
        while let Some(u) = queue.pop_front() {
            if u == b {
                break;
            }
            for &(v, e) in adj.get(&u).into_iter().flatten() {
                if v != a && !prev.contains_key(&v) {
                    prev.insert(v, (u, e));
                    queue.push_back(v);
                }
            }
        }
        let mut out = vec![closing];
        let mut v = b;
        while v != a {
            let (u, e) = *prev.get(&v)?;
            out.push(e);
            v = u;
        }
        out.sort();
        Some(out)
    }

    /// Number of components; `Infinite` when infinitely many.
    pub fn components(&self) -> ExtNat {
        self.components
    }

    pub fn infinite_components(&self) -> usize {
        self.infinite.len()
    }

    pub fn finite_components(&self) -> ExtNat {
        if self.components.is_finite() {
            ExtNat::from(self.finite_deaths)
        } else {
            ExtNat::Infinite
        }
    }

    pub fn strands(&self) -> &[Strand] {
        &self.strands
    }

    /// First super-block of the repeating state and the repeat length.
    pub fn certificate(&self) -> (usize, usize) {
        (self.start, self.period)
    }

    /// Super-block by which every component and strand has settled.
    pub fn stabilization_depth(&self) -> usize {
        self.end
    }

    /// Original blocks that must be inspected to see every edge orbit.
    pub fn settled_blocks(&self) -> usize {
        self.c.blocks_through(self.settled + 1)
    }

    /// Component of a vertex within the analysed window.
    pub fn component_of(&self, v: Vertex) -> Result<ComponentId, MatroidError> {
        let (j, idx) = self.c.locate(v);
        if j > self.end {
            return Err(MatroidError::BoundExhausted(format!(
                "vertex in super-block {j} lies past the analysed window"
            )));
        }
        match self.full[j].fresh[idx] {
            Fate::Dead(d) => Ok(ComponentId::Finite { step: j, index: d }),
            Fate::Alive(cl) => match push(&self.full, j, cl, self.end) {
                Fate::Dead(d) => Ok(ComponentId::Finite { step: self.dead_step(j, cl), index: d }),
                Fate::Alive(x) => self.infinite.binary_search(&x).map(ComponentId::Infinite).map_err(|_| {
                    MatroidError::BoundExhausted(format!("component of super-block {j} has not settled"))
                }),
            },
        }
    }

    fn dead_step(&self, mut j: usize, mut cl: usize) -> usize {
        loop {
            j += 1;
            match self.full[j].old[cl] {
                Fate::Alive(x) => cl = x,
                Fate::Dead(_) => return j,
            }
        }
    }

    /// Whether a two-way infinite path exists.
    pub fn contains_double_ray(&self) -> bool {
        let mut per_component = vec![0; self.infinite.len()];
        for s in &self.strands {
            per_component[s.component] += 1;
        }
        per_component.iter().any(|&n| n >= 2) || self.strands.iter().any(|s| s.rays >= 2)
    }

    /// Merges components through glue points and looks for circles.
    pub fn glue(&self, gluing: &Gluing) -> Glued {
        let n = self.infinite.len();
        let mut uf = UnionFind::new(n + gluing.groups().len());
        let mut violation = None;
        let mut touched: Vec<Vec<usize>> = vec![Vec::new(); gluing.groups().len()];
        for (i, s) in self.strands.iter().enumerate() {
            let Some(grp) = gluing.glued_group(&s.end) else { continue };
            touched[grp].push(i);
            for _ in 0..s.rays.min(2) {
                if !uf.union(s.component, n + grp) && violation.is_none() {
                    let on_circle = touched[grp]
                        .iter()
                        .map(|&k| {
                            let t = &self.strands[k];
                            format!("{}:{}", t.end, t.frontier.join(","))
                        })
                        .collect();
                    violation = Some(Violation::GluedCircle { strands: on_circle });
                }
            }
        }
        let root: Vec<usize> = (0..n).map(|i| uf.find(i)).collect();
        let mut distinct = root.clone();
        distinct.sort_unstable();
        distinct.dedup();
        let components = if self.components.is_finite() {
            ExtNat::from(self.finite_deaths + distinct.len())
        } else {
            ExtNat::Infinite
        };
        Glued {
            root,
            violation,
            components,
        }
    }

    /// Frontier vertices at the settled step with their glued component
    /// numbers.
    pub fn interface_components(&self, g: &PeriodicGraph, glued: &Glued) -> Vec<(String, usize)> {
        let c = &self.c;
        let j = self.settled;
        let mut order: Vec<usize> = Vec::new();
        let mut out = Vec::new();
        let slots: Vec<Vertex> = c
            .apexes
            .iter()
            .map(|&a| Vertex::Prefix(a))
            .chain(c.interface.iter().map(|&x| c.local_vertex(j, x)))
            .collect();
        for v in slots {
            let Ok(ComponentId::Infinite(i)) = self.component_of(v) else { continue };
            let r = glued.root[i];
            let idx = order.iter().position(|&x| x == r).unwrap_or_else(|| {
                order.push(r);
                order.len() - 1
            });
            out.push((v.name(g), idx));
        }
        out
    }
}

fn fresh_local(c: &Compiled, j: usize, x: usize) -> usize {
    if j == 0 {
        c.static_count + x
    } else {
        x
    }
}

/// Fate at step `to` of class `cl` alive after step `from`.
fn push(steps: &[Step], from: usize, mut cl: usize, to: usize) -> Fate {
    for s in &steps[from + 1..=to] {
        match s.old[cl] {
            Fate::Alive(x) => cl = x,
            dead => return dead,
        }
    }
    Fate::Alive(cl)
}

fn step(c: &Compiled, mode: Mode, j: usize, prev: Option<&Step>) -> Step {
    let apex_slots = if mode == Mode::Full { c.apexes.len() } else { 0 };
    let old_classes = prev.map_or(0, |p| p.classes);
    let statics = if j == 0 && mode == Mode::Full { c.static_count } else { 0 };
    let fresh_count = statics + c.block_size;
    let base = old_classes + statics;
    let mut uf = UnionFind::new(old_classes + fresh_count);
    let mut cycle = None;
    let mut join = |uf: &mut UnionFind, a: usize, b: usize, e: EdgeRef| {
        if !uf.union(a, b) && cycle.is_none() {
            cycle = Some(e);
        }
    };

    let apex_node = |a: usize| -> usize {
        match prev {
            None => a,
            Some(p) => {
                let slot = c.apexes.iter().position(|&x| x == a).expect("declared apex");
                p.state[slot]
            }
        }
    };

    if j == 0 && mode == Mode::Full {
        for &(u, v, e) in &c.static_edges {
            let node = |x: StaticEnd| match x {
                StaticEnd::Static(i) => i,
                StaticEnd::Block0(x) => base + x,
            };
            join(&mut uf, node(u), node(v), e);
        }
    }
    if let Some(p) = prev {
        for e in &c.block_edges {
            if let (BlockEnd::Local(l), BlockEnd::Next(r)) = (e.a, e.b) {
                let slot = apex_slots + c.interface.binary_search(&l).expect("interface vertex");
                join(&mut uf, p.state[slot], base + r, c.block_edge_ref(j - 1, e));
            }
        }
    }
    for e in &c.block_edges {
        let r = c.block_edge_ref(j, e);
        match (e.a, e.b) {
            (BlockEnd::Local(x), BlockEnd::Local(y)) => join(&mut uf, base + x, base + y, r),
            (BlockEnd::Apex(a), BlockEnd::Local(x)) if mode == Mode::Full => join(&mut uf, apex_node(a), base + x, r),
            _ => {}
        }
    }

    let frontier: Vec<usize> = (0..apex_slots)
        .map(|i| apex_node(c.apexes[i]))
        .chain(c.interface.iter().map(|&x| base + x))
        .collect();
    let mut class_of_root: HashMap<usize, usize> = HashMap::new();
    let mut state = Vec::with_capacity(frontier.len());
    for &v in &frontier {
        let root = uf.find(v);
        let next = class_of_root.len();
        state.push(*class_of_root.entry(root).or_insert(next));
    }
    let classes = class_of_root.len();
    let mut dead_of_root: HashMap<usize, usize> = HashMap::new();
    let mut fate = |uf: &mut UnionFind, v: usize| {
        let root = uf.find(v);
        match class_of_root.get(&root) {
            Some(&cl) => Fate::Alive(cl),
            None => {
                let next = dead_of_root.len();
                Fate::Dead(*dead_of_root.entry(root).or_insert(next))
            }
        }
    };
    let old: Vec<Fate> = (0..old_classes).map(|cl| fate(&mut uf, cl)).collect();
    let fresh: Vec<Fate> = (0..fresh_count).map(|i| fate(&mut uf, old_classes + i)).collect();
    Step {
        old,
        fresh,
        state,
        classes,
        deaths: dead_of_root.len(),
        cycle,
    }
}

/// Vertex-disjoint paths in the tail graph from `sources` in one super-block
/// to `sinks` `len` super-blocks later.
fn window_flow(c: &Compiled, len: usize, sources: &[usize], sinks: &[usize]) -> u32 {
    let bs = c.block_size;
    let node = |j: usize, x: usize| j * bs + x;
    let mut edges = Vec::new();
    for j in 0..=len {
        for e in &c.block_edges {
            match (e.a, e.b) {
                (BlockEnd::Local(x), BlockEnd::Local(y)) => edges.push((node(j, x), node(j, y))),
                (BlockEnd::Local(x), BlockEnd::Next(y)) if j < len => edges.push((node(j, x), node(j + 1, y))),
                _ => {}
            }
        }
    }
    let src: Vec<usize> = sources.iter().map(|&x| node(0, x)).collect();
    let dst: Vec<usize> = sinks.iter().map(|&x| node(len, x)).collect();
    VertexSplit::new((len + 1) * bs, edges).disjoint_paths(&src, &dst, 2)
}
