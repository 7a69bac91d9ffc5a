use matroid_core::{ExplicitSystem, IndependenceOracle, Limits, MatroidError, OracleMatroid, Subset};

/// `M[k]` through the rank formula `min(r(S), r(E) − k)`.
pub fn truncate_top(m: &OracleMatroid, k: usize) -> Result<OracleMatroid, MatroidError> {
    m.truncate_top(k)
}

/// `M[k]` straight from the definition: `S` is kept when some independent
/// `T ⊇ S` has exactly `k` more elements. Works for any system.
pub fn truncate_top_explicit(
    sys: &dyn IndependenceOracle,
    k: usize,
    limits: Limits,
) -> Result<ExplicitSystem, MatroidError> {
    let snap = ExplicitSystem::from_oracle(sys, limits)?;
    let rank = snap.members().map(Subset::len).max().unwrap_or(0);
    if rank < k {
        return Err(MatroidError::RankTooSmall { rank, depth: k });
    }
    let full = snap.ground().full();
    let kept: Vec<Subset> = snap
        .members()
        .filter(|&s| {
            full.difference(s)
                .subsets()
                .any(|x| x.len() == k && snap.contains(s.union(x)))
        })
        .collect();
    ExplicitSystem::from_family(snap.ground().clone(), kept)
}
