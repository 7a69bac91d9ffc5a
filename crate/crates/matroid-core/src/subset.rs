use std::fmt;

use crate::error::MatroidError;

/// Largest ground set that fits the bit-pattern encoding.
pub const MAX_GROUND: usize = 24;

/// A subset of a ground set `{0, .., n-1}`, stored as a bit pattern.
///
/// The derived ordering compares the raw patterns, which is the canonical
/// order used by every enumeration in the workspace.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Subset(u32);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub const fn from_bits(bits: u32) -> Self {
        Subset(bits)
    }

    pub const fn bits(self) -> u32 {
        self.0
    }

    /// `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= 32);
        Subset(((1u64 << n) - 1) as u32)
    }

    pub fn singleton(e: usize) -> Self {
        Subset(1 << e)
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(elements: I) -> Self {
        elements.into_iter().fold(Subset::EMPTY, Subset::with)
    }

    pub fn contains(self, e: usize) -> bool {
        e < 32 && self.0 >> e & 1 == 1
    }

    #[must_use]
    pub fn with(self, e: usize) -> Self {
        Subset(self.0 | 1 << e)
    }

    #[must_use]
    pub fn without(self, e: usize) -> Self {
        Subset(self.0 & !(1 << e))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[must_use]
    pub fn union(self, other: Subset) -> Self {
        Subset(self.0 | other.0)
    }

    #[must_use]
    pub fn intersection(self, other: Subset) -> Self {
        Subset(self.0 & other.0)
    }

    #[must_use]
    pub fn difference(self, other: Subset) -> Self {
        Subset(self.0 & !other.0)
    }

    #[must_use]
    pub fn symmetric_difference(self, other: Subset) -> Self {
        Subset(self.0 ^ other.0)
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Subset) -> bool {
        self.0 & other.0 == 0
    }

    /// Elements in increasing order.
    pub fn elements(self) -> Elements {
        Elements(self.0)
    }

    /// Every subset of `self`, in increasing bit-pattern order.
    pub fn subsets(self) -> Subsets {
        Subsets {
            mask: self.0,
            next: Some(0),
        }
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.elements()).finish()
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromIterator<usize> for Subset {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        Subset::from_elements(iter)
    }
}

pub struct Elements(u32);

impl Iterator for Elements {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let e = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(e)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Elements {}

pub struct Subsets {
    mask: u32,
    next: Option<u32>,
}

impl Iterator for Subsets {
    type Item = Subset;

    fn next(&mut self) -> Option<Subset> {
        let cur = self.next?;
        // Standard "next submask in increasing order" step.
        self.next = if cur == self.mask {
            None
        } else {
            Some(cur.wrapping_sub(self.mask) & self.mask)
        };
        Some(Subset(cur))
    }
}

/// An ordered ground set `{0, .., n-1}` with a display label per element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroundSet {
    labels: Vec<String>,
}

impl GroundSet {
    /// Ground set whose labels are the element indices.
    pub fn indexed(n: usize) -> Result<Self, MatroidError> {
        Self::with_labels((0..n).map(|i| i.to_string()).collect())
    }

    pub fn with_labels(labels: Vec<String>) -> Result<Self, MatroidError> {
        if labels.len() > MAX_GROUND {
            return Err(MatroidError::CapExceeded {
                size: labels.len(),
                cap: MAX_GROUND,
            });
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(MatroidError::DuplicateLabel(l.clone()));
            }
        }
        Ok(GroundSet { labels })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, e: usize) -> &str {
        &self.labels[e]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn full(&self) -> Subset {
        Subset::full(self.len())
    }

    /// Number of subsets, `2^n`.
    pub fn powerset_len(&self) -> usize {
        1 << self.len()
    }

    /// All subsets in canonical order.
    pub fn subsets(&self) -> impl Iterator<Item = Subset> {
        (0..1u32 << self.len()).map(Subset::from_bits)
    }

    pub fn check(&self, s: Subset) -> Result<(), MatroidError> {
        match s.difference(self.full()).elements().next() {
            Some(e) => Err(MatroidError::ElementOutOfRange {
                element: e,
                size: self.len(),
            }),
            None => Ok(()),
        }
    }

    /// Builds a subset from element indices, rejecting anything out of range.
    pub fn subset(&self, elements: &[usize]) -> Result<Subset, MatroidError> {
        let mut s = Subset::EMPTY;
        for &e in elements {
            if e >= self.len() {
                return Err(MatroidError::ElementOutOfRange {
                    element: e,
                    size: self.len(),
                });
            }
            s = s.with(e);
        }
        Ok(s)
    }

    pub fn subset_by_labels<S: AsRef<str>>(&self, labels: &[S]) -> Result<Subset, MatroidError> {
        let mut s = Subset::EMPTY;
        for l in labels {
            let e = self
                .index_of(l.as_ref())
                .ok_or_else(|| MatroidError::UnknownLabel(l.as_ref().to_string()))?;
            s = s.with(e);
        }
        Ok(s)
    }

    /// Label view of a subset, e.g. `{1,3}`.
    pub fn format(&self, s: Subset) -> String {
        let parts: Vec<&str> = s.elements().map(|e| self.label(e)).collect();
        format!("{{{}}}", parts.join(","))
    }

    pub fn label_list(&self, s: Subset) -> Vec<String> {
        s.elements().map(|e| self.labels[e].clone()).collect()
    }
}

/// Resource limits for operations that sweep the whole powerset.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub sweep_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { sweep_cap: 16 }
    }
}

impl Limits {
    pub fn with_sweep_cap(sweep_cap: usize) -> Self {
        Limits {
            sweep_cap: sweep_cap.min(MAX_GROUND),
        }
    }

    pub fn check(&self, ground: &GroundSet) -> Result<(), MatroidError> {
        if ground.len() > self.sweep_cap {
            Err(MatroidError::CapExceeded {
                size: ground.len(),
                cap: self.sweep_cap,
            })
        } else {
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subsets_of_mask_are_increasing_and_complete() {
        let m = Subset::from_elements([0, 2, 3]);
        let subs: Vec<Subset> = m.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.windows(2).all(|w| w[0] < w[1]));
        assert!(subs.iter().all(|s| s.is_subset_of(m)));
        assert_eq!(Subset::EMPTY.subsets().count(), 1);
    }

    #[test]
    fn element_iteration_and_format() {
        let g = GroundSet::with_labels(vec!["a".into(), "b".into(), "c".into()]).unwrap();
        let s = g.subset(&[2, 0]).unwrap();
        assert_eq!(s.elements().collect::<Vec<_>>(), vec![0, 2]);
        assert_eq!(g.format(s), "{a,c}");
        assert_eq!(format!("{s:?}"), "{0, 2}");
        assert!(g.subset(&[3]).is_err());
        assert!(g.check(Subset::singleton(5)).is_err());
    }

    #[test]
    fn ground_rejects_duplicates_and_oversize() {
        assert!(GroundSet::with_labels(vec!["x".into(), "x".into()]).is_err());
        assert!(matches!(
            GroundSet::indexed(25),
            Err(MatroidError::CapExceeded { .. })
        ));
        assert_eq!(Subset::full(24).len(), 24);
    }
}
