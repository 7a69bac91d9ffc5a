use std::fmt;
use std::sync::Arc;

use crate::error::MatroidError;
use crate::graph::Multigraph;
use crate::subset::{GroundSet, Limits, Subset};
use crate::system::{ExplicitSystem, IndependenceOracle};

/// A rank function on subsets of `{0, .., n-1}`.
pub trait RankFunction: Send + Sync + fmt::Debug {
    fn rank(&self, s: Subset) -> usize;
}

/// A matroid presented by its rank function.
#[derive(Clone)]
pub struct OracleMatroid {
    ground: GroundSet,
    backing: Arc<dyn RankFunction>,
}

impl fmt::Debug for OracleMatroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("OracleMatroid")
            .field("ground", &self.ground.labels())
            .field("backing", &self.backing)
            .finish()
    }
}

#[derive(Debug)]
struct Uniform {
    rank: usize,
}

impl RankFunction for Uniform {
    fn rank(&self, s: Subset) -> usize {
        s.len().min(self.rank)
    }
}

#[derive(Debug)]
struct Graphic {
    graph: Multigraph,
}

impl RankFunction for Graphic {
    fn rank(&self, s: Subset) -> usize {
        self.graph.forest_rank(s.elements())
    }
}

/// Largest independent subset, tabulated over the whole powerset.
struct Tabulated {
    table: Vec<u8>,
}

impl fmt::Debug for Tabulated {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tabulated({} subsets)", self.table.len())
    }
}

impl RankFunction for Tabulated {
    fn rank(&self, s: Subset) -> usize {
        self.table[s.bits() as usize] as usize
    }
}

#[derive(Debug)]
struct Dual {
    base: OracleMatroid,
    full: Subset,
    full_rank: usize,
}

impl RankFunction for Dual {
    fn rank(&self, s: Subset) -> usize {
        s.len() + self.base.rank(self.full.difference(s)) - self.full_rank
    }
}

#[derive(Debug)]
struct Restricted {
    base: OracleMatroid,
    kept: Vec<usize>,
}

impl RankFunction for Restricted {
    fn rank(&self, s: Subset) -> usize {
        self.base.rank(s.elements().map(|i| self.kept[i]).collect())
    }
}

#[derive(Debug)]
struct Truncated {
    base: OracleMatroid,
    cap: usize,
}

impl RankFunction for Truncated {
    fn rank(&self, s: Subset) -> usize {
        self.base.rank(s).min(self.cap)
    }
}

/// A failed rank axiom on a concrete subset or pair of subsets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RankViolation {
    EmptyNonZero,
    ExceedsSize(Subset),
    NotMonotone { smaller: Subset, larger: Subset },
    NotSubmodular { a: Subset, b: Subset },
}

impl OracleMatroid {
    pub fn new(ground: GroundSet, backing: impl RankFunction + 'static) -> Self {
        OracleMatroid {
            ground,
            backing: Arc::new(backing),
        }
    }

    /// `U_{k,n}` on a ground labelled by indices.
    pub fn uniform(k: usize, n: usize) -> Result<Self, MatroidError> {
        let ground = GroundSet::indexed(n)?;
        Self::uniform_on(k, ground)
    }

    pub fn uniform_on(k: usize, ground: GroundSet) -> Result<Self, MatroidError> {
        if k > ground.len() {
            return Err(MatroidError::RankTooSmall {
                rank: ground.len(),
                depth: k,
            });
        }
        Ok(Self::new(ground, Uniform { rank: k }))
    }

    pub fn free(n: usize) -> Result<Self, MatroidError> {
        Self::uniform(n, n)
    }

    pub fn rank_zero(n: usize) -> Result<Self, MatroidError> {
        Self::uniform(0, n)
    }

    /// Cycle matroid of a multigraph; element `i` is edge `i`.
    pub fn graphic(graph: Multigraph) -> Result<Self, MatroidError> {
        let ground = GroundSet::indexed(graph.edges.len())?;
        Self::graphic_on(graph, ground)
    }

    pub fn graphic_on(graph: Multigraph, ground: GroundSet) -> Result<Self, MatroidError> {
        if ground.len() != graph.edges.len() {
            return Err(MatroidError::GroundMismatch);
        }
        Ok(Self::new(ground, Graphic { graph }))
    }

    /// Rank view of an explicit family: the rank of `S` is the size of its
    /// largest independent subset.
    pub fn from_explicit(sys: &ExplicitSystem) -> Self {
        let n = sys.ground().len();
        let mut table = vec![0u8; 1 << n];
        for bits in 1..1u32 << n {
            let s = Subset::from_bits(bits);
            table[bits as usize] = if sys.is_independent(s) {
                s.len() as u8
            } else {
                s.elements()
                    .map(|e| table[s.without(e).bits() as usize])
                    .max()
                    .unwrap_or(0)
            };
        }
        Self::new(sys.ground().clone(), Tabulated { table })
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn rank(&self, s: Subset) -> usize {
        self.backing.rank(s)
    }

    pub fn full_rank(&self) -> usize {
        self.rank(self.ground.full())
    }

    /// `r*(S) = |S| + r(E∖S) − r(E)`.
    pub fn dual(&self) -> OracleMatroid {
        OracleMatroid::new(
            self.ground.clone(),
            Dual {
                base: self.clone(),
                full: self.ground.full(),
                full_rank: self.full_rank(),
            },
        )
    }

    /// Restriction to `E∖X`; the result keeps the labels of the survivors.
    pub fn delete(&self, x: Subset) -> Result<OracleMatroid, MatroidError> {
        self.ground.check(x)?;
        let kept: Vec<usize> = self.ground.full().difference(x).elements().collect();
        let ground = GroundSet::with_labels(kept.iter().map(|&e| self.ground.label(e).to_string()).collect())?;
        Ok(OracleMatroid::new(
            ground,
            Restricted {
                base: self.clone(),
                kept,
            },
        ))
    }

    /// `M/X = (M* − X)*`.
    pub fn contract(&self, x: Subset) -> Result<OracleMatroid, MatroidError> {
        Ok(self.dual().delete(x)?.dual())
    }

    /// `M[k]`: independents that extend by `k` more elements inside an
    /// independent set.
    pub fn truncate_top(&self, k: usize) -> Result<OracleMatroid, MatroidError> {
        let rank = self.full_rank();
        if rank < k {
            return Err(MatroidError::RankTooSmall { rank, depth: k });
        }
        if k == 0 {
            return Ok(self.clone());
        }
        Ok(OracleMatroid::new(
            self.ground.clone(),
            Truncated {
                base: self.clone(),
                cap: rank - k,
            },
        ))
    }

    pub fn to_explicit(&self, limits: Limits) -> Result<ExplicitSystem, MatroidError> {
        ExplicitSystem::from_oracle(self, limits)
    }

    /// Exhaustive check of the rank axioms: `r(∅)=0`, `r(S) ≤ |S|`,
    /// monotonicity and submodularity.
    pub fn rank_violation(&self, limits: Limits) -> Result<Option<RankViolation>, MatroidError> {
        limits.check(&self.ground)?;
        let n = self.ground.len();
        let table: Vec<usize> = self.ground.subsets().map(|s| self.rank(s)).collect();
        let r = |s: Subset| table[s.bits() as usize];
        if r(Subset::EMPTY) != 0 {
            return Ok(Some(RankViolation::EmptyNonZero));
        }
        for s in self.ground.subsets() {
            if r(s) > s.len() {
                return Ok(Some(RankViolation::ExceedsSize(s)));
            }
            for e in 0..n {
                if !s.contains(e) && r(s) > r(s.with(e)) {
                    return Ok(Some(RankViolation::NotMonotone {
                        smaller: s,
                        larger: s.with(e),
                    }));
                }
            }
        }
        // Local submodularity r(S+a) + r(S+b) ≥ r(S+a+b) + r(S) implies the
        // general inequality.
        for s in self.ground.subsets() {
            let out: Vec<usize> = self.ground.full().difference(s).elements().collect();
            for (i, &a) in out.iter().enumerate() {
                for &b in &out[i + 1..] {
                    if r(s.with(a)) + r(s.with(b)) < r(s.with(a).with(b)) + r(s) {
                        return Ok(Some(RankViolation::NotSubmodular {
                            a: s.with(a),
                            b: s.with(b),
                        }));
                    }
                }
            }
        }
        Ok(None)
    }
}

impl IndependenceOracle for OracleMatroid {
    fn ground(&self) -> &GroundSet {
        &self.ground
    }

    fn is_independent(&self, s: Subset) -> bool {
        self.rank(s) == s.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::bases;

    fn sets(v: &[&[usize]]) -> Vec<Subset> {
        v.iter().map(|s| Subset::from_elements(s.iter().copied())).collect()
    }

    #[test]
    fn uniform_rank_bound() {
        let u = OracleMatroid::uniform(1, 3).unwrap();
        assert!(!u.check_independent(Subset::from_elements([0, 1])).unwrap());
        assert!(u.is_independent(Subset::EMPTY));
        assert!(u.check_independent(Subset::singleton(3)).is_err());
        assert!(OracleMatroid::uniform(4, 3).is_err());
    }

    #[test]
    fn dual_examples() {
        let u12 = OracleMatroid::uniform(1, 2).unwrap();
        let d = u12.dual();
        for s in u12.ground().subsets() {
            assert_eq!(d.rank(s), u12.rank(s));
        }
        let tri = OracleMatroid::graphic(Multigraph::triangle()).unwrap();
        assert_eq!(bases(&tri.dual(), Limits::default()).unwrap(), sets(&[&[0], &[1], &[2]]));
        let free = OracleMatroid::free(3).unwrap();
        assert_eq!(free.dual().full_rank(), 0);
    }

    #[test]
    fn minors_of_triangle() {
        let tri = OracleMatroid::graphic(Multigraph::triangle()).unwrap();
        let c = tri.contract(Subset::singleton(0)).unwrap();
        assert_eq!(c.ground().labels(), &["1".to_string(), "2".to_string()]);
        assert_eq!(bases(&c, Limits::default()).unwrap(), sets(&[&[0], &[1]]));
        assert!(!c.is_independent(Subset::full(2)));
        let same = tri.delete(Subset::EMPTY).unwrap();
        for s in tri.ground().subsets() {
            assert_eq!(same.rank(s), tri.rank(s));
        }
    }

    #[test]
    fn contracting_a_coloop_removes_it_from_every_base() {
        // Triangle 0,1,2 plus bridge 3 to a pendant vertex.
        let g = Multigraph::new(4, vec![(0, 1), (1, 2), (0, 2), (2, 3)]);
        let m = OracleMatroid::graphic(g).unwrap();
        let coloop = Subset::singleton(3);
        let all = bases(&m, Limits::default()).unwrap();
        assert!(all.iter().all(|b| coloop.is_subset_of(*b)));
        let c = m.contract(coloop).unwrap();
        let d = m.delete(coloop).unwrap();
        let expected: Vec<Subset> = all.iter().map(|b| b.without(3)).collect();
        assert_eq!(bases(&c, Limits::default()).unwrap(), expected);
        for s in c.ground().subsets() {
            assert_eq!(c.rank(s), d.rank(s));
        }
    }

    #[test]
    fn truncation_examples() {
        let free = OracleMatroid::free(3).unwrap();
        let t = free.truncate_top(1).unwrap();
        for s in free.ground().subsets() {
            assert_eq!(t.is_independent(s), s.len() <= 2);
        }
        let u24 = OracleMatroid::uniform(2, 4).unwrap();
        let t = u24.truncate_top(1).unwrap();
        let u14 = OracleMatroid::uniform(1, 4).unwrap();
        for s in u24.ground().subsets() {
            assert_eq!(t.rank(s), u14.rank(s));
        }
        assert!(u24.truncate_top(3).is_err());
    }

    #[test]
    fn tabulated_rank_matches_graphic() {
        let g = Multigraph::new(3, vec![(0, 1), (1, 2), (0, 2), (0, 0), (1, 2)]);
        let m = OracleMatroid::graphic(g).unwrap();
        let e = OracleMatroid::from_explicit(&m.to_explicit(Limits::default()).unwrap());
        for s in m.ground().subsets() {
            assert_eq!(e.rank(s), m.rank(s));
        }
        assert_eq!(m.rank_violation(Limits::default()).unwrap(), None);
    }

    #[test]
    fn rank_checker_flags_non_matroid() {
        let g = GroundSet::indexed(3).unwrap();
        let sys = ExplicitSystem::downward_closure(g, sets(&[&[0], &[1, 2]])).unwrap();
        let m = OracleMatroid::from_explicit(&sys);
        assert!(matches!(
            m.rank_violation(Limits::default()).unwrap(),
            Some(RankViolation::NotSubmodular { .. })
        ));
    }
}
