use matroid_core::{
    ExplicitSystem, GroundSet, IndependenceOracle, Limits, MatroidError, OracleMatroid, Subset, System,
};

/// Two systems on one ground set with every inner-independent set also
/// outer-independent.
#[derive(Clone, Debug)]
pub struct NestedPair {
    inner: System,
    outer: System,
}

impl NestedPair {
    /// Checks the shared ground and the nesting exhaustively.
    pub fn new(inner: impl Into<System>, outer: impl Into<System>, limits: Limits) -> Result<Self, MatroidError> {
        let (inner, outer) = (inner.into(), outer.into());
        if inner.ground() != outer.ground() {
            return Err(MatroidError::GroundMismatch);
        }
        limits.check(inner.ground())?;
        if let Some(s) = inner
            .ground()
            .subsets()
            .find(|&s| inner.is_independent(s) && !outer.is_independent(s))
        {
            return Err(MatroidError::NestingViolated(inner.ground().format(s)));
        }
        Ok(NestedPair { inner, outer })
    }

    pub fn inner(&self) -> &System {
        &self.inner
    }

    pub fn outer(&self) -> &System {
        &self.outer
    }

    pub fn ground(&self) -> &GroundSet {
        self.inner.ground()
    }

    /// Pair on the disjoint union of the two grounds, relabelled
    /// `0..n1+n2`, with the first pair's elements first.
    pub fn direct_sum(&self, other: &NestedPair, limits: Limits) -> Result<NestedPair, MatroidError> {
        let inner = direct_sum(
            &self.inner.to_explicit(limits)?,
            &other.inner.to_explicit(limits)?,
        )?;
        let outer = direct_sum(
            &self.outer.to_explicit(limits)?,
            &other.outer.to_explicit(limits)?,
        )?;
        NestedPair::new(inner, outer, limits)
    }
}

/// Independents are unions `S ∪ T` of an independent of `a` and a shifted
/// independent of `b`. The ground is relabelled by indices.
pub fn direct_sum(a: &ExplicitSystem, b: &ExplicitSystem) -> Result<ExplicitSystem, MatroidError> {
    let na = a.ground().len();
    let ground = GroundSet::indexed(na + b.ground().len())?;
    let shifted: Vec<Subset> = b.members().map(|t| Subset::from_bits(t.bits() << na)).collect();
    let gens = a
        .maximal()
        .into_iter()
        .flat_map(|s| shifted.iter().map(move |&t| s.union(t)));
    ExplicitSystem::downward_closure(ground, gens.collect::<Vec<_>>())
}

/// Dual of either presentation: the rank formula for oracles, cobases for
/// explicit families.
pub fn dual_system(sys: &System, limits: Limits) -> Result<System, MatroidError> {
    Ok(match sys {
        System::Oracle(m) => System::Oracle(m.dual()),
        System::Explicit(e) => {
            limits.check(e.ground())?;
            System::Explicit(e.cobase_dual())
        }
    })
}

/// Convenience: `U_{k,n}` as a system.
pub fn uniform(k: usize, n: usize) -> System {
    OracleMatroid::uniform(k, n).expect("k ≤ n").into()
}
