//! Subsets of a finite universe of at most 64 points, stored as a bit mask.

use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Sub};

use serde::{Deserialize, Serialize};

/// Largest universe a [`PointSet`] can address.
pub const MAX_POINTS: usize = 64;

/// A set of point indices `0..64`.
///
/// A `PointSet` does not know the size of the universe it lives in; operations
/// that need the universe (complement, range checks) take it from the owning
/// [`Space`](crate::Space).
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PointSet(u64);

impl PointSet {
    pub const EMPTY: PointSet = PointSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        PointSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// The set `{0, 1, .., n-1}`.
    pub const fn full(n: usize) -> Self {
        if n >= 64 {
            PointSet(u64::MAX)
        } else {
            PointSet((1u64 << n) - 1)
        }
    }

    pub const fn singleton(x: usize) -> Self {
        PointSet(1u64 << x)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(items: I) -> Self {
        items.into_iter().fold(Self::EMPTY, |acc, x| acc.with(x))
    }

    pub const fn contains(self, x: usize) -> bool {
        x < 64 && self.0 & (1u64 << x) != 0
    }

    #[must_use]
    pub const fn with(self, x: usize) -> Self {
        PointSet(self.0 | (1u64 << x))
    }

    #[must_use]
    pub const fn without(self, x: usize) -> Self {
        PointSet(self.0 & !(1u64 << x))
    }

    pub fn insert(&mut self, x: usize) {
        self.0 |= 1u64 << x;
    }

    pub fn remove(&mut self, x: usize) {
        self.0 &= !(1u64 << x);
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn is_subset(self, other: PointSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub const fn is_superset(self, other: PointSet) -> bool {
        other.is_subset(self)
    }

    pub const fn intersects(self, other: PointSet) -> bool {
        self.0 & other.0 != 0
    }

    #[must_use]
    pub const fn union(self, other: PointSet) -> Self {
        PointSet(self.0 | other.0)
    }

    #[must_use]
    pub const fn intersection(self, other: PointSet) -> Self {
        PointSet(self.0 & other.0)
    }

    #[must_use]
    pub const fn difference(self, other: PointSet) -> Self {
        PointSet(self.0 & !other.0)
    }

    /// Complement relative to `{0, .., n-1}`.
    #[must_use]
    pub const fn complement(self, n: usize) -> Self {
        PointSet(!self.0 & Self::full(n).0)
    }

    /// Whether every member is below `n`.
    pub const fn fits(self, n: usize) -> bool {
        self.is_subset(Self::full(n))
    }

    /// Smallest member, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    /// Ordering key used for canonical family order: cardinality first, then
    /// numeric value of the mask.
    pub fn canonical_key(self) -> (u32, u64) {
        (self.0.count_ones(), self.0)
    }

    /// All subsets of `self`, starting with the empty set.
    pub fn subsets(self) -> Subsets {
        Subsets {
            mask: self.0,
            next: Some(0),
        }
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl BitOr for PointSet {
    type Output = PointSet;
    fn bitor(self, rhs: PointSet) -> PointSet {
        self.union(rhs)
    }
}

impl BitOrAssign for PointSet {
    fn bitor_assign(&mut self, rhs: PointSet) {
        self.0 |= rhs.0;
    }
}

impl BitAnd for PointSet {
    type Output = PointSet;
    fn bitand(self, rhs: PointSet) -> PointSet {
        self.intersection(rhs)
    }
}

impl BitAndAssign for PointSet {
    fn bitand_assign(&mut self, rhs: PointSet) {
        self.0 &= rhs.0;
    }
}

impl Sub for PointSet {
    type Output = PointSet;
    fn sub(self, rhs: PointSet) -> PointSet {
        self.difference(rhs)
    }
}

impl FromIterator<usize> for PointSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        Self::from_indices(iter)
    }
}

impl IntoIterator for PointSet {
    type Item = usize;
    type IntoIter = Iter;
    fn into_iter(self) -> Iter {
        self.iter()
    }
}

/// Ascending iterator over the members of a [`PointSet`].
#[derive(Clone, Debug)]
pub struct Iter(u64);

impl Iterator for Iter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let x = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(x)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

/// Iterator over all subsets of a mask (Gosper-free submask walk).
#[derive(Clone, Debug)]
pub struct Subsets {
    mask: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = PointSet;

    fn next(&mut self) -> Option<PointSet> {
        let cur = self.next?;
        self.next = if cur == self.mask {
            None
        } else {
            Some(cur.wrapping_sub(self.mask) & self.mask)
        };
        Some(PointSet(cur))
    }
}
