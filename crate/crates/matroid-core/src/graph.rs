/// Disjoint-set forest with path halving and union by size.
#[derive(Clone, Debug)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    /// Appends a fresh singleton and returns its index.
    pub fn push(&mut self) -> usize {
        self.parent.push(self.parent.len());
        self.size.push(1);
        self.parent.len() - 1
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub fn same(&mut self, a: usize, b: usize) -> bool {
        self.find(a) == self.find(b)
    }

    /// Returns false when `a` and `b` were already joined.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        true
    }
}

/// Finite multigraph; loops and parallel edges allowed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Multigraph {
    pub vertex_count: usize,
    pub edges: Vec<(usize, usize)>,
}

impl Multigraph {
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Self {
        assert!(
            edges.iter().all(|&(u, v)| u < vertex_count && v < vertex_count),
            "edge endpoint out of range"
        );
        Multigraph { vertex_count, edges }
    }

    pub fn triangle() -> Self {
        Multigraph::new(3, vec![(0, 1), (1, 2), (0, 2)])
    }

    /// Number of merges performed by adding the edges of `edges` to an empty
    /// forest, i.e. the graphic rank of that edge set.
    pub fn forest_rank(&self, edges: impl Iterator<Item = usize>) -> usize {
        let mut uf = UnionFind::new(self.vertex_count);
        edges
            .filter(|&i| {
                let (u, v) = self.edges[i];
                uf.union(u, v)
            })
            .count()
    }

    /// Connected in the usual sense, counting isolated vertices.
    pub fn is_connected(&self) -> bool {
        if self.vertex_count == 0 {
            return true;
        }
        let mut uf = UnionFind::new(self.vertex_count);
        let mut parts = self.vertex_count;
        for &(u, v) in &self.edges {
            if uf.union(u, v) {
                parts -= 1;
            }
        }
        parts == 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn union_find_counts_merges() {
        let mut uf = UnionFind::new(4);
        assert!(uf.union(0, 1));
        assert!(uf.union(2, 3));
        assert!(!uf.union(1, 0));
        assert!(uf.union(1, 3));
        assert!(uf.same(0, 2));
        let x = uf.push();
        assert!(!uf.same(x, 0));
    }

    #[test]
    fn forest_rank_ignores_loops_and_cycles() {
        let g = Multigraph::new(3, vec![(0, 1), (1, 2), (0, 2), (1, 1), (0, 1)]);
        assert_eq!(g.forest_rank(0..5), 2);
        assert_eq!(g.forest_rank([3].into_iter()), 0);
        assert_eq!(g.forest_rank([0, 4].into_iter()), 1);
        assert!(g.is_connected());
        assert!(!Multigraph::new(2, vec![(0, 0)]).is_connected());
    }
}
