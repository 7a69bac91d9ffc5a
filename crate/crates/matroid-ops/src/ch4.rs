use matroid_core::{ExplicitSystem, GroundSet, Limits, MatroidError, Subset, MAX_GROUND};

use crate::pair::NestedPair;

/// Blocks `{1}, {2,3}, {4,5,6}, ..` of sizes `1..=r` as element indices.
pub fn blocks(r: usize) -> Vec<Subset> {
    let mut start = 0;
    (1..=r)
        .map(|len| {
            let b = Subset::from_elements(start..start + len);
            start += len;
            b
        })
        .collect()
}

/// Block counterexample: ground `1..=r(r+1)/2` split into consecutive
/// blocks of sizes `1..=r`. Inner independents avoid at least one whole
/// block; the outer system is free.
pub fn ch4_system(r: usize) -> Result<NestedPair, MatroidError> {
    if r == 0 {
        return Err(MatroidError::Parse("block count must be at least 1".into()));
    }
    let n = r * (r + 1) / 2;
    if n > MAX_GROUND {
        return Err(MatroidError::CapExceeded { size: n, cap: MAX_GROUND });
    }
    let ground = GroundSet::with_labels((1..=n).map(|i| i.to_string()).collect())?;
    let full = ground.full();
    let inner = ExplicitSystem::downward_closure(ground.clone(), blocks(r).into_iter().map(|b| full.difference(b)))?;
    let outer = ExplicitSystem::free(ground);
    NestedPair::new(inner, outer, Limits::with_sweep_cap(MAX_GROUND))
}
