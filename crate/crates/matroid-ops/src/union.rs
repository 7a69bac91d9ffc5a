use matroid_core::{
    check_axioms, AxiomReport, AxiomSystem, ExplicitSystem, GroundSet, IndependenceOracle, Limits, MatroidError,
    Subset,
};

/// Ground of a union: labels of `a` followed by the new labels of `b`.
fn union_ground(a: &GroundSet, b: &GroundSet) -> Result<GroundSet, MatroidError> {
    let mut labels = a.labels().to_vec();
    labels.extend(b.labels().iter().filter(|l| a.index_of(l).is_none()).cloned());
    GroundSet::with_labels(labels)
}

/// `M ∨ N`: independents are the unions `S ∪ T` with `S` independent in `m1`
/// and `T` independent in `m2`. Elements are matched by label.
pub fn union(
    m1: &dyn IndependenceOracle,
    m2: &dyn IndependenceOracle,
    limits: Limits,
) -> Result<ExplicitSystem, MatroidError> {
    let ground = union_ground(m1.ground(), m2.ground())?;
    limits.check(&ground)?;
    let a = ExplicitSystem::from_oracle(m1, limits)?.embed(&ground)?;
    let b = ExplicitSystem::from_oracle(m2, limits)?.embed(&ground)?;
    // Both families are downward closed, so U is a union iff it splits into
    // disjoint independent halves.
    let members = ground
        .subsets()
        .filter(|&u| u.subsets().any(|s| a.contains(s) && b.contains(u.difference(s))));
    ExplicitSystem::from_family(ground.clone(), members.collect::<Vec<Subset>>())
}

/// Full I-axiom conformance of `m1 ∨ m2`.
pub fn check_unionable(
    m1: &dyn IndependenceOracle,
    m2: &dyn IndependenceOracle,
    limits: Limits,
) -> Result<AxiomReport, MatroidError> {
    let u = union(m1, m2, limits)?;
    check_axioms(&u, AxiomSystem::Independence, limits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use matroid_core::{Multigraph, OracleMatroid};

    fn brute_union(m1: &dyn IndependenceOracle, m2: &dyn IndependenceOracle) -> Vec<Subset> {
        let n = m1.ground().len();
        let mut out: Vec<Subset> = Vec::new();
        for s in (0..1u32 << n).map(Subset::from_bits).filter(|&s| m1.is_independent(s)) {
            for t in (0..1u32 << n).map(Subset::from_bits).filter(|&t| m2.is_independent(t)) {
                out.push(s.union(t));
            }
        }
        out.sort();
        out.dedup();
        out
    }

    #[test]
    fn two_rank_one_lines_give_the_free_matroid() {
        let u = OracleMatroid::uniform(1, 2).unwrap();
        let un = union(&u, &u, Limits::default()).unwrap();
        assert_eq!(un, ExplicitSystem::free(GroundSet::indexed(2).unwrap()));
        assert_eq!(un.members().collect::<Vec<_>>(), brute_union(&u, &u));
    }

    #[test]
    fn rank_zero_is_an_identity() {
        let m = OracleMatroid::graphic(Multigraph::triangle()).unwrap();
        let z = OracleMatroid::rank_zero(3).unwrap();
        let un = union(&m, &z, Limits::default()).unwrap();
        assert_eq!(un, m.to_explicit(Limits::default()).unwrap());
    }

    #[test]
    fn truncated_free_absorbs_a_singleton() {
        // Five-element analogue of A[1] ∨ A_N = A.
        let free = OracleMatroid::free(5).unwrap();
        let dropped = free.truncate_top(1).unwrap();
        let g = GroundSet::indexed(5).unwrap();
        let single = ExplicitSystem::downward_closure(g.clone(), [Subset::singleton(4)]).unwrap();
        let un = union(&dropped, &single, Limits::default()).unwrap();
        assert_eq!(un, ExplicitSystem::free(g));
        assert!(!dropped.is_independent(Subset::full(5)));
    }

    #[test]
    fn overlapping_grounds_match_by_label() {
        let a = OracleMatroid::uniform_on(1, GroundSet::with_labels(vec!["x".into(), "y".into()]).unwrap()).unwrap();
        let b = OracleMatroid::uniform_on(1, GroundSet::with_labels(vec!["y".into(), "z".into()]).unwrap()).unwrap();
        let un = union(&a, &b, Limits::default()).unwrap();
        assert_eq!(un.ground().labels(), &["x", "y", "z"]);
        let g = un.ground();
        assert!(un.contains(g.subset_by_labels(&["x", "z"]).unwrap()));
        assert!(un.contains(g.subset_by_labels(&["x", "y"]).unwrap()));
        assert!(!un.contains(g.full()));
    }

    #[test]
    fn unionability_examples() {
        let l = Limits::default();
        let u13 = OracleMatroid::uniform(1, 3).unwrap();
        assert!(check_unionable(&u13, &u13, l).unwrap().passed());
        let tri = OracleMatroid::graphic(Multigraph::triangle()).unwrap();
        let other = OracleMatroid::graphic_on(
            Multigraph::new(2, vec![(0, 1), (0, 1)]),
            GroundSet::with_labels(vec!["p".into(), "q".into()]).unwrap(),
        )
        .unwrap();
        let r = check_unionable(&tri, &other, l).unwrap();
        assert!(r.passed());
        // A non-matroid argument: the verdict is produced, whatever it is.
        let g = GroundSet::with_labels(vec!["1".into(), "2".into(), "3".into()]).unwrap();
        let i = ExplicitSystem::downward_closure(g, [Subset::singleton(0), Subset::from_elements([1, 2])]).unwrap();
        let r = check_unionable(&i, &ExplicitSystem::rank_zero(i.ground().clone()), l).unwrap();
        assert!(!r.passed());
    }
}
