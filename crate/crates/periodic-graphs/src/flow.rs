use std::collections::VecDeque;

/// Directed network with integer capacities, solved by shortest augmenting
/// paths.
#[derive(Clone, Debug, Default)]
pub struct FlowNetwork {
    heads: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<u32>,
}

impl FlowNetwork {
    pub fn new(nodes: usize) -> Self {
        FlowNetwork {
            heads: vec![Vec::new(); nodes],
            ..FlowNetwork::default()
        }
    }

    pub fn add_node(&mut self) -> usize {
        self.heads.push(Vec::new());
        self.heads.len() - 1
    }

    pub fn add_arc(&mut self, from: usize, to: usize, cap: u32) {
        self.heads[from].push(self.to.len());
        self.to.push(to);
        self.cap.push(cap);
        self.heads[to].push(self.to.len());
        self.to.push(from);
        self.cap.push(0);
    }

    /// Maximum flow from `s` to `t`, stopping early once `limit` is reached.
    pub fn max_flow(&mut self, s: usize, t: usize, limit: u32) -> u32 {
        let mut total = 0;
        while total < limit {
            let mut prev: Vec<Option<usize>> = vec![None; self.heads.len()];
            let mut seen = vec![false; self.heads.len()];
            seen[s] = true;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                if u == t {
                    break;
                }
                for &a in &self.heads[u] {
                    let v = self.to[a];
                    if self.cap[a] > 0 && !seen[v] {
                        seen[v] = true;
                        prev[v] = Some(a);
                        queue.push_back(v);
                    }
                }
            }
            if !seen[t] {
                break;
            }
            let mut v = t;
            let mut push = limit - total;
            while let Some(a) = prev[v] {
                push = push.min(self.cap[a]);
                v = self.to[a ^ 1];
            }
            let mut v = t;
            while let Some(a) = prev[v] {
                self.cap[a] -= push;
                self.cap[a ^ 1] += push;
                v = self.to[a ^ 1];
            }
            total += push;
        }
        total
    }
}

/// Undirected graph wrapper for vertex-disjoint path counts: each vertex is
/// split into an in/out pair joined by a unit arc.
pub struct VertexSplit {
    net: FlowNetwork,
    n: usize,
    source: usize,
    sink: usize,
}

const BIG: u32 = u32::MAX / 4;

impl VertexSplit {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut net = FlowNetwork::new(2 * n + 2);
        for v in 0..n {
            net.add_arc(2 * v, 2 * v + 1, 1);
        }
        for (u, v) in edges {
            if u != v {
                net.add_arc(2 * u + 1, 2 * v, 1);
                net.add_arc(2 * v + 1, 2 * u, 1);
            }
        }
        VertexSplit {
            net,
            n,
            source: 2 * n,
            sink: 2 * n + 1,
        }
    }

    /// Vertex-disjoint paths from `sources` to `sinks`; every vertex,
    /// endpoints included, is used at most once.
    pub fn disjoint_paths(mut self, sources: &[usize], sinks: &[usize], limit: u32) -> u32 {
        for &s in sources {
            self.net.add_arc(self.source, 2 * s, 1);
        }
        for &t in sinks {
            self.net.add_arc(2 * t + 1, self.sink, 1);
        }
        self.net.max_flow(self.source, self.sink, limit)
    }

    /// Paths from `root` that share only `root`, ending at distinct members
    /// of `targets`.
    pub fn fan_from(mut self, root: usize, targets: &[usize], limit: u32) -> u32 {
        debug_assert!(root < self.n);
        self.net.add_arc(self.source, 2 * root + 1, BIG);
        for &t in targets.iter().filter(|&&t| t != root) {
            self.net.add_arc(2 * t + 1, self.sink, 1);
        }
        self.net.max_flow(self.source, self.sink, limit)
    }
}
