use std::fmt;

use crate::error::MatroidError;
use crate::subset::{GroundSet, Limits, Subset};

/// Anything that can answer "is this subset independent?".
pub trait IndependenceOracle: Send + Sync {
    fn ground(&self) -> &GroundSet;

    /// Membership test. `s` must lie inside the ground set.
    fn is_independent(&self, s: Subset) -> bool;

    fn check_independent(&self, s: Subset) -> Result<bool, MatroidError> {
        self.ground().check(s)?;
        Ok(self.is_independent(s))
    }

    /// No element of the ground set can be added to `s` (which is assumed
    /// independent).
    fn is_maximal(&self, s: Subset) -> bool {
        self.ground()
            .full()
            .difference(s)
            .elements()
            .all(|e| !self.is_independent(s.with(e)))
    }
}

impl<T: IndependenceOracle + ?Sized> IndependenceOracle for &T {
    fn ground(&self) -> &GroundSet {
        (**self).ground()
    }

    fn is_independent(&self, s: Subset) -> bool {
        (**self).is_independent(s)
    }
}

impl<T: IndependenceOracle + ?Sized> IndependenceOracle for std::sync::Arc<T> {
    fn ground(&self) -> &GroundSet {
        (**self).ground()
    }

    fn is_independent(&self, s: Subset) -> bool {
        (**self).is_independent(s)
    }
}

/// One bit per subset of the ground set.
#[derive(Clone, PartialEq, Eq, Hash)]
pub(crate) struct Bitmap(Vec<u64>);

impl Bitmap {
    pub(crate) fn new(n: usize) -> Self {
        Bitmap(vec![0; (1usize << n).div_ceil(64)])
    }

    pub(crate) fn get(&self, s: Subset) -> bool {
        let i = s.bits() as usize;
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    pub(crate) fn set(&mut self, s: Subset) {
        let i = s.bits() as usize;
        self.0[i / 64] |= 1 << (i % 64);
    }

    pub(crate) fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
}

/// A finite ground set together with an explicit downward-closed family of
/// independent sets.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExplicitSystem {
    ground: GroundSet,
    members: Bitmap,
}

impl fmt::Debug for ExplicitSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ExplicitSystem")
            .field("ground", &self.ground.labels())
            .field("independents", &self.members().collect::<Vec<_>>())
            .finish()
    }
}

impl ExplicitSystem {
    /// Validates that `sets` contains the empty set and is downward closed.
    pub fn from_family<I>(ground: GroundSet, sets: I) -> Result<Self, MatroidError>
    where
        I: IntoIterator<Item = Subset>,
    {
        let mut members = Bitmap::new(ground.len());
        for s in sets {
            ground.check(s)?;
            members.set(s);
        }
        let sys = ExplicitSystem { ground, members };
        sys.validate()?;
        Ok(sys)
    }

    /// The smallest downward-closed family containing `generators` (and the
    /// empty set).
    pub fn downward_closure<I>(ground: GroundSet, generators: I) -> Result<Self, MatroidError>
    where
        I: IntoIterator<Item = Subset>,
    {
        let mut members = Bitmap::new(ground.len());
        members.set(Subset::EMPTY);
        for s in generators {
            ground.check(s)?;
            members.set(s);
        }
        // Walk patterns downward so every removal lands on an already
        // processed (smaller) pattern.
        for bits in (1..1u32 << ground.len()).rev() {
            let s = Subset::from_bits(bits);
            if members.get(s) {
                for e in s.elements() {
                    members.set(s.without(e));
                }
            }
        }
        Ok(ExplicitSystem { ground, members })
    }

    /// Snapshot of an oracle. The predicate is trusted to be downward closed;
    /// use [`ExplicitSystem::from_family`] when it is not.
    pub fn from_oracle(sys: &dyn IndependenceOracle, limits: Limits) -> Result<Self, MatroidError> {
        limits.check(sys.ground())?;
        let ground = sys.ground().clone();
        let mut members = Bitmap::new(ground.len());
        for s in ground.subsets() {
            if sys.is_independent(s) {
                members.set(s);
            }
        }
        Ok(ExplicitSystem { ground, members })
    }

    pub fn free(ground: GroundSet) -> Self {
        let mut members = Bitmap::new(ground.len());
        for s in ground.subsets() {
            members.set(s);
        }
        ExplicitSystem { ground, members }
    }

    pub fn rank_zero(ground: GroundSet) -> Self {
        let mut members = Bitmap::new(ground.len());
        members.set(Subset::EMPTY);
        ExplicitSystem { ground, members }
    }

    fn validate(&self) -> Result<(), MatroidError> {
        if !self.members.get(Subset::EMPTY) {
            return Err(MatroidError::MissingEmptySet);
        }
        for s in self.members() {
            if let Some(e) = s.elements().find(|&e| !self.members.get(s.without(e))) {
                return Err(MatroidError::NotDownwardClosed {
                    member: self.ground.format(s),
                    missing: self.ground.format(s.without(e)),
                });
            }
        }
        Ok(())
    }

    pub fn contains(&self, s: Subset) -> bool {
        s.is_subset_of(self.ground.full()) && self.members.get(s)
    }

    /// Independent sets in canonical order.
    pub fn members(&self) -> impl Iterator<Item = Subset> + '_ {
        self.ground.subsets().filter(|&s| self.members.get(s))
    }

    pub fn len(&self) -> usize {
        self.members.count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Inclusion-maximal members in canonical order.
    pub fn maximal(&self) -> Vec<Subset> {
        self.members().filter(|&s| self.is_maximal(s)).collect()
    }

    /// Largest size of an independent subset of `s`.
    pub fn max_independent_size(&self, s: Subset) -> usize {
        s.subsets()
            .filter(|&t| self.members.get(t))
            .map(Subset::len)
            .max()
            .unwrap_or(0)
    }

    /// Dual by cobases: subsets of complements of maximal members. This is
    /// well defined for any system, matroid or not.
    pub fn cobase_dual(&self) -> ExplicitSystem {
        let full = self.ground.full();
        let complements: Vec<Subset> = self.maximal().into_iter().map(|b| full.difference(b)).collect();
        ExplicitSystem::downward_closure(self.ground.clone(), complements)
            .expect("complements lie inside the ground set")
    }

    /// Same family, relabelled onto a larger ground set that contains every
    /// label of `self`.
    pub fn embed(&self, target: &GroundSet) -> Result<ExplicitSystem, MatroidError> {
        let map: Vec<usize> = self
            .ground
            .labels()
            .iter()
            .map(|l| target.index_of(l).ok_or_else(|| MatroidError::UnknownLabel(l.clone())))
            .collect::<Result<_, _>>()?;
        let mut members = Bitmap::new(target.len());
        for s in self.members() {
            members.set(s.elements().map(|e| map[e]).collect());
        }
        Ok(ExplicitSystem {
            ground: target.clone(),
            members,
        })
    }

    /// Canonically first subset on which the two families disagree.
    pub fn first_difference(&self, other: &ExplicitSystem) -> Option<Subset> {
        if self.ground.len() != other.ground.len() {
            return Some(Subset::EMPTY);
        }
        self.ground
            .subsets()
            .find(|&s| self.members.get(s) != other.members.get(s))
    }
}

impl IndependenceOracle for ExplicitSystem {
    fn ground(&self) -> &GroundSet {
        &self.ground
    }

    fn is_independent(&self, s: Subset) -> bool {
        self.members.get(s)
    }
}
