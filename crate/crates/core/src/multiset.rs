//! Labels, labelled points and multisets of them.

use alloc::collections::btree_map::{self, BTreeMap};
use core::fmt;

use crate::lattice::Weight;

/// A label `n(v^k)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Label {
    pub n: u32,
    pub k: i32,
}

impl Label {
    pub const fn new(n: u32, k: i32) -> Self {
        Label { n, k }
    }

    pub fn bump(self, dn: u32, dk: i32) -> Label {
        Label::new(self.n + dn, self.k + dk)
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(v^{})", self.n, self.k)
    }
}

/// Ordered by label first so that a `BTreeMap` keyed on it pops the
/// smallest label.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LabelledPoint {
    pub label: Label,
    pub mu: Weight,
}

impl LabelledPoint {
    pub const fn new(mu: Weight, label: Label) -> Self {
        LabelledPoint { label, mu }
    }

    pub fn at(a: i64, b: i64, n: u32, k: i32) -> Self {
        LabelledPoint::new(Weight::new(a, b), Label::new(n, k))
    }
}

impl fmt::Display for LabelledPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.mu, self.label)
    }
}

/// Finite multiset of labelled points. Zero multiplicities are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PointMultiset {
    entries: BTreeMap<LabelledPoint, u64>,
}

impl PointMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, p: LabelledPoint, mult: u64) {
        if mult > 0 {
            *self.entries.entry(p).or_insert(0) += mult;
        }
    }

    pub fn add(&mut self, p: LabelledPoint) {
        self.insert(p, 1);
    }

    pub fn multiplicity(&self, p: &LabelledPoint) -> u64 {
        self.entries.get(p).copied().unwrap_or(0)
    }

    /// Removes up to `mult` copies and returns how many were removed.
    pub fn remove(&mut self, p: &LabelledPoint, mult: u64) -> u64 {
        match self.entries.get_mut(p) {
            None => 0,
            Some(m) => {
                let taken = mult.min(*m);
                *m -= taken;
                if *m == 0 {
                    self.entries.remove(p);
                }
                taken
            }
        }
    }

    pub fn union_with(&mut self, other: &PointMultiset) {
        for (p, m) in other.iter() {
            self.insert(*p, m);
        }
    }

    pub fn union(mut self, other: &PointMultiset) -> PointMultiset {
        self.union_with(other);
        self
    }

    /// Multiset difference, saturating at zero.
    pub fn difference(&self, other: &PointMultiset) -> PointMultiset {
        let mut out = self.clone();
        for (p, m) in other.iter() {
            out.remove(p, m);
        }
        out
    }

    pub fn scaled(&self, factor: u64) -> PointMultiset {
        let mut out = PointMultiset::new();
        for (p, m) in self.iter() {
            out.insert(*p, m * factor);
        }
        out
    }

    /// Keeps only labels `n ≤ max_n`.
    pub fn restrict(&self, max_n: u32) -> PointMultiset {
        PointMultiset {
            entries: self
                .entries
                .iter()
                .filter(|(p, _)| p.label.n <= max_n)
                .map(|(p, m)| (*p, *m))
                .collect(),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&LabelledPoint, u64)> + '_ {
        self.entries.iter().map(|(p, m)| (p, *m))
    }

    /// Number of distinct labelled points.
    pub fn distinct(&self) -> usize {
        self.entries.len()
    }

    /// Total count with multiplicity.
    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn max_multiplicity(&self) -> u64 {
        self.entries.values().copied().max().unwrap_or(0)
    }
}

impl FromIterator<(LabelledPoint, u64)> for PointMultiset {
    fn from_iter<I: IntoIterator<Item = (LabelledPoint, u64)>>(iter: I) -> Self {
        let mut out = PointMultiset::new();
        for (p, m) in iter {
            out.insert(p, m);
        }
        out
    }
}

impl FromIterator<LabelledPoint> for PointMultiset {
    fn from_iter<I: IntoIterator<Item = LabelledPoint>>(iter: I) -> Self {
        iter.into_iter().map(|p| (p, 1)).collect()
    }
}

impl Extend<LabelledPoint> for PointMultiset {
    fn extend<I: IntoIterator<Item = LabelledPoint>>(&mut self, iter: I) {
        for p in iter {
            self.add(p);
        }
    }
}

impl IntoIterator for PointMultiset {
    type Item = (LabelledPoint, u64);
    type IntoIter = btree_map::IntoIter<LabelledPoint, u64>;
    fn into_iter(self) -> Self::IntoIter {
        self.entries.into_iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn arb_multiset() -> impl Strategy<Value = PointMultiset> {
        proptest::collection::vec(((0i64..4, 0i64..4, 0u32..6, -1i32..2), 1u64..4), 0..12)
            .prop_map(|v| {
                v.into_iter()
                    .map(|((a, b, n, k), m)| (LabelledPoint::at(a, b, n, k), m))
                    .collect()
            })
    }

    #[test]
    fn ordering_is_label_first() {
        let lo = LabelledPoint::at(9, 9, 3, 0);
        let hi = LabelledPoint::at(0, 0, 4, 0);
        assert!(lo < hi);
    }

    #[test]
    fn difference_saturates() {
        let p = LabelledPoint::at(1, 1, 2, 0);
        let a: PointMultiset = [(p, 1)].into_iter().collect();
        let b: PointMultiset = [(p, 3)].into_iter().collect();
        assert!(a.difference(&b).is_empty());
        assert_eq!(b.difference(&a).multiplicity(&p), 2);
    }

    proptest! {
        #[test]
        fn union_commutes(a in arb_multiset(), b in arb_multiset()) {
            prop_assert_eq!(a.clone().union(&b), b.clone().union(&a));
        }

        #[test]
        fn union_then_difference_restores(a in arb_multiset(), b in arb_multiset()) {
            prop_assert_eq!(a.clone().union(&b).difference(&b), a);
        }

        #[test]
        fn totals_add(a in arb_multiset(), b in arb_multiset()) {
            prop_assert_eq!(a.clone().union(&b).total(), a.total() + b.total());
        }

        #[test]
        fn restrict_is_idempotent(a in arb_multiset(), n in 0u32..6) {
            prop_assert_eq!(a.restrict(n).restrict(n), a.restrict(n));
        }
    }
}
