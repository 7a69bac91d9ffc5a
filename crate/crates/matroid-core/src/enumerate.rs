use crate::error::MatroidError;
use crate::subset::{Limits, Subset};
use crate::system::{ExplicitSystem, IndependenceOracle};

/// Inclusion-maximal independent sets, in canonical order.
pub fn bases(sys: &dyn IndependenceOracle, limits: Limits) -> Result<Vec<Subset>, MatroidError> {
    let snap = ExplicitSystem::from_oracle(sys, limits)?;
    Ok(snap.maximal())
}

/// Inclusion-minimal dependent sets, in canonical order. Loops show up as
/// singletons.
pub fn circuits(sys: &dyn IndependenceOracle, limits: Limits) -> Result<Vec<Subset>, MatroidError> {
    let snap = ExplicitSystem::from_oracle(sys, limits)?;
    Ok(snap
        .ground()
        .subsets()
        .filter(|&s| !snap.is_independent(s) && s.elements().all(|e| snap.is_independent(s.without(e))))
        .collect())
}

/// Elements lying in no circuit.
pub fn coloops(sys: &dyn IndependenceOracle, limits: Limits) -> Result<Subset, MatroidError> {
    let covered = circuits(sys, limits)?
        .into_iter()
        .fold(Subset::EMPTY, Subset::union);
    Ok(sys.ground().full().difference(covered))
}
