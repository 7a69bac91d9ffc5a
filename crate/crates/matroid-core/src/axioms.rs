use std::cmp::Reverse;
use std::fmt;

use crate::error::MatroidError;
use crate::subset::{GroundSet, Limits, Subset};
use crate::system::{ExplicitSystem, IndependenceOracle};

/// Which axiom list to check against.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AxiomSystem {
    /// Independence axioms I1-I4.
    Independence,
    /// Base axioms B1-B3, applied to the maximal independent sets.
    Base,
    /// Classical finitary axioms F1-F4.
    Finitary,
}

impl AxiomSystem {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "I" | "i" => Some(AxiomSystem::Independence),
            "B" | "b" => Some(AxiomSystem::Base),
            "F" | "f" => Some(AxiomSystem::Finitary),
            _ => None,
        }
    }

    pub fn code(self) -> &'static str {
        match self {
            AxiomSystem::Independence => "I",
            AxiomSystem::Base => "B",
            AxiomSystem::Finitary => "F",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axiom {
    I1,
    I2,
    I3,
    I4,
    B1,
    B2,
    B3,
    F1,
    F2,
    F3,
    F4,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A concrete counterexample to one axiom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// The empty set is dependent.
    EmptyDependent,
    /// `set` is independent but its subset `subset` is not.
    NotDownwardClosed { set: Subset, subset: Subset },
    /// `non_maximal` is independent and not maximal, `maximal` is maximal,
    /// and no element of `maximal ∖ non_maximal` can be added to
    /// `non_maximal`.
    NoAugmentation { non_maximal: Subset, maximal: Subset },
    /// There is no maximal independent set.
    NoBase,
    /// Removing `removed` from base `first` cannot be repaired by any element
    /// of base `second`.
    NoExchange { first: Subset, second: Subset, removed: usize },
    /// `|smaller| < |larger|`, both independent, and no element of `larger`
    /// extends `smaller`.
    NoGrowth { smaller: Subset, larger: Subset },
}

impl Witness {
    /// Replays the witness against `sys`; true iff it still falsifies the
    /// axiom it was produced for.
    pub fn refalsifies(&self, sys: &dyn IndependenceOracle) -> bool {
        let indep = |s: Subset| sys.is_independent(s);
        let maximal = |s: Subset| indep(s) && sys.is_maximal(s);
        match *self {
            Witness::EmptyDependent => !indep(Subset::EMPTY),
            Witness::NotDownwardClosed { set, subset } => {
                subset.is_subset_of(set) && indep(set) && !indep(subset)
            }
            Witness::NoAugmentation { non_maximal, maximal: b } => {
                indep(non_maximal)
                    && !sys.is_maximal(non_maximal)
                    && maximal(b)
                    && b.difference(non_maximal).elements().all(|x| !indep(non_maximal.with(x)))
            }
            Witness::NoBase => sys.ground().subsets().all(|s| !maximal(s)),
            Witness::NoExchange { first, second, removed } => {
                maximal(first)
                    && maximal(second)
                    && first.contains(removed)
                    && !second.contains(removed)
                    && second
                        .difference(first)
                        .elements()
                        .all(|y| !maximal(first.without(removed).with(y)))
            }
            Witness::NoGrowth { smaller, larger } => {
                smaller.len() < larger.len()
                    && indep(smaller)
                    && indep(larger)
                    && larger.difference(smaller).elements().all(|b| !indep(smaller.with(b)))
            }
        }
    }

    pub fn describe(&self, ground: &GroundSet) -> String {
        let f = |s: Subset| ground.format(s);
        match *self {
            Witness::EmptyDependent => "the empty set is dependent".to_string(),
            Witness::NotDownwardClosed { set, subset } => {
                format!("{} is independent but {} is not", f(set), f(subset))
            }
            Witness::NoAugmentation { non_maximal, maximal } => format!(
                "{} is independent and not maximal, {} is maximal, and no element of the difference extends it",
                f(non_maximal),
                f(maximal)
            ),
            Witness::NoBase => "there is no maximal independent set".to_string(),
            Witness::NoExchange { first, second, removed } => format!(
                "{} minus {} cannot be completed from {}",
                f(first),
                ground.label(removed),
                f(second)
            ),
            Witness::NoGrowth { smaller, larger } => {
                format!("no element of {} extends {}", f(larger), f(smaller))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    /// Holds for every finite ground set; nothing to test.
    VacuousPass,
    Fail(Witness),
}

impl Verdict {
    pub fn passed(&self) -> bool {
        !matches!(self, Verdict::Fail(_))
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Verdict::Fail(w) => Some(w),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub system: AxiomSystem,
    pub verdicts: Vec<(Axiom, Verdict)>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.verdicts.iter().all(|(_, v)| v.passed())
    }

    pub fn verdict(&self, axiom: Axiom) -> Option<&Verdict> {
        self.verdicts.iter().find(|(a, _)| *a == axiom).map(|(_, v)| v)
    }

    pub fn failures(&self) -> impl Iterator<Item = (Axiom, &Witness)> {
        self.verdicts
            .iter()
            .filter_map(|(a, v)| v.witness().map(|w| (*a, w)))
    }
}

struct Snapshot {
    sys: ExplicitSystem,
    independents: Vec<Subset>,
    maximal: Vec<Subset>,
}

impl Snapshot {
    fn take(sys: &dyn IndependenceOracle, limits: Limits) -> Result<Self, MatroidError> {
        let sys = ExplicitSystem::from_oracle(sys, limits)?;
        let independents: Vec<Subset> = sys.members().collect();
        let maximal = independents.iter().copied().filter(|&s| sys.is_maximal(s)).collect();
        Ok(Snapshot {
            sys,
            independents,
            maximal,
        })
    }

    fn full(&self) -> Subset {
        self.sys.ground().full()
    }

    /// Elements that extend the independent set `a`.
    fn extenders(&self, a: Subset) -> Subset {
        self.full()
            .difference(a)
            .elements()
            .filter(|&x| self.sys.is_independent(a.with(x)))
            .collect()
    }

    fn empty(&self) -> Verdict {
        if self.sys.is_independent(Subset::EMPTY) {
            Verdict::Pass
        } else {
            Verdict::Fail(Witness::EmptyDependent)
        }
    }

    /// Smallest independent set (by size, then pattern) with a dependent
    /// one-smaller subset.
    fn closed(&self) -> Verdict {
        let mut by_size = self.independents.clone();
        by_size.sort_by_key(|s| (s.len(), *s));
        for s in by_size {
            if let Some(e) = s.elements().find(|&e| !self.sys.is_independent(s.without(e))) {
                return Verdict::Fail(Witness::NotDownwardClosed {
                    set: s,
                    subset: s.without(e),
                });
            }
        }
        Verdict::Pass
    }

    /// Witness order: smallest symmetric difference, then largest sets, then
    /// patterns.
    fn augmentation(&self) -> Verdict {
        let mut best: Option<(usize, Reverse<usize>, Subset, Subset)> = None;
        for &a in &self.independents {
            let ext = self.extenders(a);
            if ext.is_empty() {
                continue;
            }
            for &b in &self.maximal {
                if b.is_disjoint(ext) {
                    let key = (a.symmetric_difference(b).len(), Reverse(a.len() + b.len()), a, b);
                    if best.as_ref().is_none_or(|k| key < *k) {
                        best = Some(key);
                    }
                }
            }
        }
        match best {
            Some((_, _, a, b)) => Verdict::Fail(Witness::NoAugmentation {
                non_maximal: a,
                maximal: b,
            }),
            None => Verdict::Pass,
        }
    }

    fn base_exists(&self) -> Verdict {
        if self.maximal.is_empty() {
            Verdict::Fail(Witness::NoBase)
        } else {
            Verdict::Pass
        }
    }

    fn exchange(&self) -> Verdict {
        let is_base = |s: Subset| self.maximal.binary_search(&s).is_ok();
        let mut best: Option<(usize, Subset, Subset, usize)> = None;
        for &b1 in &self.maximal {
            for &b2 in &self.maximal {
                for x in b1.difference(b2).elements() {
                    let rest = b1.without(x);
                    if !b2.difference(b1).elements().any(|y| is_base(rest.with(y))) {
                        let key = (b1.symmetric_difference(b2).len(), b1, b2, x);
                        if best.is_none_or(|k| key < k) {
                            best = Some(key);
                        }
                    }
                }
            }
        }
        match best {
            Some((_, first, second, removed)) => Verdict::Fail(Witness::NoExchange {
                first,
                second,
                removed,
            }),
            None => Verdict::Pass,
        }
    }

    fn growth(&self) -> Verdict {
        let mut best: Option<(usize, Subset, Subset)> = None;
        for &a in &self.independents {
            let ext = self.extenders(a);
            // A violating larger set avoids every extender.
            for b in self.full().difference(ext).subsets() {
                if b.len() > a.len() && self.sys.is_independent(b) {
                    let key = (a.len() + b.len(), a, b);
                    if best.is_none_or(|k| key < k) {
                        best = Some(key);
                    }
                }
            }
        }
        match best {
            Some((_, smaller, larger)) => Verdict::Fail(Witness::NoGrowth { smaller, larger }),
            None => Verdict::Pass,
        }
    }
}

/// Exhaustive conformance check of `sys` against one axiom list.
pub fn check_axioms(
    sys: &dyn IndependenceOracle,
    system: AxiomSystem,
    limits: Limits,
) -> Result<AxiomReport, MatroidError> {
    let snap = Snapshot::take(sys, limits)?;
    let verdicts = match system {
        AxiomSystem::Independence => vec![
            (Axiom::I1, snap.empty()),
            (Axiom::I2, snap.closed()),
            (Axiom::I3, snap.augmentation()),
            (Axiom::I4, Verdict::VacuousPass),
        ],
        AxiomSystem::Base => vec![
            (Axiom::B1, snap.base_exists()),
            (Axiom::B2, snap.exchange()),
            (Axiom::B3, Verdict::VacuousPass),
        ],
        AxiomSystem::Finitary => vec![
            (Axiom::F1, snap.empty()),
            (Axiom::F2, snap.closed()),
            (Axiom::F3, snap.growth()),
            (Axiom::F4, Verdict::VacuousPass),
        ],
    };
    Ok(AxiomReport { system, verdicts })
}

/// True when `sys` satisfies I1-I3 (I4 is automatic on finite grounds).
pub fn is_matroid(sys: &dyn IndependenceOracle, limits: Limits) -> Result<bool, MatroidError> {
    Ok(check_axioms(sys, AxiomSystem::Independence, limits)?.passed())
}
