use rand::Rng;

use matroid_core::UnionFind;
use periodic_graphs::spec::{EdgeDecl, Section, SpliceDecl};
use periodic_graphs::{PeriodicGraph, PeriodicGraphSpec};

const NAMES: [&str; 3] = ["a", "b", "c"];

/// Small random family: up to three repeating vertices, one prefix vertex
/// and at least one splice.
pub fn random_family<R: Rng>(rng: &mut R) -> PeriodicGraph {
    let r = rng.gen_range(1..=3);
    let mut local = Vec::new();
    for i in 0..r {
        for j in i + 1..r {
            if rng.gen_bool(0.4) {
                local.push(EdgeDecl(format!("{}{}", NAMES[i], NAMES[j]), NAMES[i].into(), NAMES[j].into()));
            }
        }
    }
    let mut splices = Vec::new();
    while splices.is_empty() {
        for i in 0..r {
            for j in 0..r {
                if rng.gen_bool(0.3) {
                    splices.push((i, j));
                }
            }
        }
    }
    let mut uf = UnionFind::new(r);
    for e in &local {
        let idx = |s: &str| NAMES.iter().position(|&n| n == s).expect("known name");
        uf.union(idx(&e.1), idx(&e.2));
    }
    for &(i, j) in &splices {
        uf.union(i, j);
    }
    let mut roots: Vec<usize> = (0..r).map(|x| uf.find(x)).collect();
    roots.sort_unstable();
    roots.dedup();
    let prefix_edges = (0..rng.gen_range(1..=2))
        .map(|k| {
            let x = NAMES[rng.gen_range(0..r)];
            EdgeDecl(format!("p{k}"), "p".into(), x.into())
        })
        .collect();
    let spec = PeriodicGraphSpec {
        prefix: Section {
            vertices: vec!["p".into()],
            edges: prefix_edges,
        },
        repeat: Section {
            vertices: NAMES[..r].iter().map(|s| s.to_string()).collect(),
            edges: local,
        },
        splice: splices
            .iter()
            .map(|&(i, j)| SpliceDecl::Named(NAMES[i].into(), NAMES[j].into(), format!("{}>{}", NAMES[i], NAMES[j])))
            .collect(),
        apex: vec![],
        ends: (0..roots.len()).map(|k| format!("e{k}")).collect(),
    };
    PeriodicGraph::new(spec).expect("random family is well formed")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn samples_build() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let g = random_family(&mut rng);
            assert!(!g.types().is_empty());
        }
    }
}
