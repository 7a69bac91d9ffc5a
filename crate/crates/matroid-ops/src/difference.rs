use matroid_core::{bases, ExplicitSystem, Limits, MatroidError, Subset};

use crate::pair::{dual_system, NestedPair};
use crate::union::union;

/// Every `(B, F)` with `B` a base of the inner system, `F` a base of the
/// outer one and `B ⊆ F`, ordered by `B` then `F`.
pub fn base_pairs(pair: &NestedPair, limits: Limits) -> Result<Vec<(Subset, Subset)>, MatroidError> {
    let inner = bases(pair.inner(), limits)?;
    let outer = bases(pair.outer(), limits)?;
    Ok(inner
        .iter()
        .flat_map(|&b| outer.iter().filter(move |&&f| b.is_subset_of(f)).map(move |&f| (b, f)))
        .collect())
}

/// `N ⊖ M`: all subsets of `F ∖ B` over nested base pairs.
pub fn difference(pair: &NestedPair, limits: Limits) -> Result<ExplicitSystem, MatroidError> {
    let gens: Vec<Subset> = base_pairs(pair, limits)?
        .into_iter()
        .map(|(b, f)| f.difference(b))
        .collect();
    ExplicitSystem::downward_closure(pair.ground().clone(), gens)
}

/// Outcome of comparing `N ⊖ M` with `(N* ∨ M)*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualityCheck {
    pub holds: bool,
    /// Canonically first subset on which the two families disagree.
    pub discrepancy: Option<Subset>,
    pub left: ExplicitSystem,
    pub right: ExplicitSystem,
}

pub fn verify_difference_duality(pair: &NestedPair, limits: Limits) -> Result<DualityCheck, MatroidError> {
    let left = difference(pair, limits)?;
    let outer_dual = dual_system(pair.outer(), limits)?;
    let joined = union(&outer_dual, pair.inner(), limits)?;
    let right = joined.cobase_dual();
    let discrepancy = left.first_difference(&right);
    Ok(DualityCheck {
        holds: discrepancy.is_none(),
        discrepancy,
        left,
        right,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pair::uniform;
    use matroid_core::{GroundSet, IndependenceOracle, System};

    fn pair(inner: System, outer: System) -> NestedPair {
        NestedPair::new(inner, outer, Limits::default()).unwrap()
    }

    /// Brute force straight from the definition, with no base enumeration
    /// shortcut: maximal sets are found by single-element extension tests.
    fn brute_difference(p: &NestedPair) -> Vec<Subset> {
        let n = p.ground().len();
        let all: Vec<Subset> = (0..1u32 << n).map(Subset::from_bits).collect();
        let maximal = |sys: &System| -> Vec<Subset> {
            all.iter()
                .copied()
                .filter(|&s| sys.is_independent(s) && (0..n).all(|e| s.contains(e) || !sys.is_independent(s.with(e))))
                .collect()
        };
        let (bs, fs) = (maximal(p.inner()), maximal(p.outer()));
        all.iter()
            .copied()
            .filter(|&s| {
                bs.iter()
                    .any(|&b| fs.iter().any(|&f| b.is_subset_of(f) && s.is_subset_of(f.difference(b))))
            })
            .collect()
    }

    #[test]
    fn rank_two_over_rank_one_gives_singletons() {
        let p = pair(uniform(1, 3), uniform(2, 3));
        let d = difference(&p, Limits::default()).unwrap();
        let expected = vec![Subset::EMPTY, Subset::singleton(0), Subset::singleton(1), Subset::singleton(2)];
        assert_eq!(d.members().collect::<Vec<_>>(), expected);
        assert_eq!(brute_difference(&p), expected);
    }

    #[test]
    fn trivial_differences() {
        let l = Limits::default();
        let p = pair(uniform(2, 4), uniform(2, 4));
        assert_eq!(difference(&p, l).unwrap().members().collect::<Vec<_>>(), vec![Subset::EMPTY]);
        let p = pair(uniform(0, 2), uniform(2, 2));
        assert_eq!(
            difference(&p, l).unwrap(),
            ExplicitSystem::free(GroundSet::indexed(2).unwrap())
        );
    }

    #[test]
    fn duality_examples() {
        let l = Limits::default();
        for (inner, outer) in [(uniform(1, 3), uniform(2, 3)), (uniform(2, 4), uniform(4, 4)), (uniform(2, 3), uniform(2, 3))] {
            let p = pair(inner, outer);
            let c = verify_difference_duality(&p, l).unwrap();
            assert!(c.holds, "{c:?}");
            assert_eq!(c.left.members().collect::<Vec<_>>(), brute_difference(&p));
        }
        let c = verify_difference_duality(&pair(uniform(2, 3), uniform(2, 3)), l).unwrap();
        assert_eq!(c.right.len(), 1);
    }
}
