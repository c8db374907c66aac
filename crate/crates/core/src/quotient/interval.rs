//! Finite unions of rational intervals with exact endpoint openness.

use std::cmp::Ordering;
use std::fmt;

use super::Rational;

/// An interval `lo..hi` with independent endpoint flags. A degenerate
/// interval `[c, c]` is an isolated point.
#[derive(Clone, PartialEq, Eq)]
pub struct Interval {
    pub lo: Rational,
    pub hi: Rational,
    pub lo_closed: bool,
    pub hi_closed: bool,
}

impl Interval {
    /// `None` when the described interval is empty.
    pub fn new(lo: Rational, hi: Rational, lo_closed: bool, hi_closed: bool) -> Option<Self> {
        match lo.cmp(&hi) {
            Ordering::Less => Some(Interval {
                lo,
                hi,
                lo_closed,
                hi_closed,
            }),
            Ordering::Equal if lo_closed && hi_closed => Some(Interval {
                lo,
                hi,
                lo_closed,
                hi_closed,
            }),
            _ => None,
        }
    }

    pub fn point(c: Rational) -> Self {
        Interval {
            lo: c.clone(),
            hi: c,
            lo_closed: true,
            hi_closed: true,
        }
    }

    pub fn open(lo: Rational, hi: Rational) -> Option<Self> {
        Self::new(lo, hi, false, false)
    }

    pub fn closed(lo: Rational, hi: Rational) -> Option<Self> {
        Self::new(lo, hi, true, true)
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, x: &Rational) -> bool {
        let above_lo = if self.lo_closed { *x >= self.lo } else { *x > self.lo };
        let below_hi = if self.hi_closed { *x <= self.hi } else { *x < self.hi };
        above_lo && below_hi
    }

    pub fn intersect(&self, other: &Interval) -> Option<Interval> {
        let (lo, lo_closed) = match self.lo.cmp(&other.lo) {
            Ordering::Greater => (self.lo.clone(), self.lo_closed),
            Ordering::Less => (other.lo.clone(), other.lo_closed),
            Ordering::Equal => (self.lo.clone(), self.lo_closed && other.lo_closed),
        };
        let (hi, hi_closed) = match self.hi.cmp(&other.hi) {
            Ordering::Less => (self.hi.clone(), self.hi_closed),
            Ordering::Greater => (other.hi.clone(), other.hi_closed),
            Ordering::Equal => (self.hi.clone(), self.hi_closed && other.hi_closed),
        };
        Interval::new(lo, hi, lo_closed, hi_closed)
    }
}

impl fmt::Debug for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_point() {
            return write!(f, "{{{}}}", self.lo);
        }
        write!(
            f,
            "{}{}, {}{}",
            if self.lo_closed { '[' } else { '(' },
            self.lo,
            self.hi,
            if self.hi_closed { ']' } else { ')' }
        )
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A normalized union of intervals: sorted, pairwise disjoint, and no two
/// neighbours that should fuse (touching at a point one of them contains).
#[derive(Clone, Default, PartialEq, Eq)]
pub struct RationalIntervalSet {
    parts: Vec<Interval>,
}

impl RationalIntervalSet {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn from_intervals(parts: impl IntoIterator<Item = Interval>) -> Self {
        let mut parts: Vec<Interval> = parts.into_iter().collect();
        parts.sort_by(|a, b| a.lo.cmp(&b.lo).then(b.lo_closed.cmp(&a.lo_closed)));
        let mut out: Vec<Interval> = Vec::with_capacity(parts.len());
        for next in parts {
            if let Some(cur) = out.last_mut() {
                let fuses = match next.lo.cmp(&cur.hi) {
                    Ordering::Less => true,
                    Ordering::Equal => cur.hi_closed || next.lo_closed,
                    Ordering::Greater => false,
                };
                if fuses {
                    match next.hi.cmp(&cur.hi) {
                        Ordering::Greater => {
                            cur.hi = next.hi;
                            cur.hi_closed = next.hi_closed;
                        }
                        Ordering::Equal => cur.hi_closed |= next.hi_closed,
                        Ordering::Less => {}
                    }
                    continue;
                }
            }
            out.push(next);
        }
        RationalIntervalSet { parts: out }
    }

    pub fn point(c: Rational) -> Self {
        RationalIntervalSet {
            parts: vec![Interval::point(c)],
        }
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.parts
    }

    /// Isolated points of the set.
    pub fn points(&self) -> impl Iterator<Item = &Rational> {
        self.parts.iter().filter(|i| i.is_point()).map(|i| &i.lo)
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn contains(&self, x: &Rational) -> bool {
        self.parts.iter().any(|i| i.contains(x))
    }

    pub fn intersects(&self, other: &Interval) -> bool {
        self.parts.iter().any(|i| i.intersect(other).is_some())
    }

    pub fn union(&self, other: &RationalIntervalSet) -> Self {
        Self::from_intervals(self.parts.iter().chain(&other.parts).cloned())
    }
}

impl fmt::Debug for RationalIntervalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "∅");
        }
        let parts: Vec<String> = self.parts.iter().map(|p| format!("{p:?}")).collect();
        write!(f, "{}", parts.join(" ∪ "))
    }
}

impl fmt::Display for RationalIntervalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(p: i64, q: i64) -> Rational {
        Rational::new(p.into(), q.into())
    }

    #[test]
    fn empty_intervals_are_rejected() {
        assert!(Interval::open(r(1, 2), r(1, 2)).is_none());
        assert!(Interval::new(r(1, 2), r(1, 2), true, false).is_none());
        assert!(Interval::open(r(1, 2), r(1, 3)).is_none());
        assert!(Interval::closed(r(1, 2), r(1, 2)).unwrap().is_point());
    }

    #[test]
    fn touching_intervals_fuse_only_through_a_member() {
        let a = Interval::open(r(0, 1), r(1, 2)).unwrap();
        let b = Interval::new(r(1, 2), r(1, 1), true, false).unwrap();
        let s = RationalIntervalSet::from_intervals([b.clone(), a.clone()]);
        assert_eq!(s.intervals().len(), 1);
        assert!(s.contains(&r(1, 2)));

        let c = Interval::open(r(1, 2), r(1, 1)).unwrap();
        let s = RationalIntervalSet::from_intervals([a, c]);
        assert_eq!(s.intervals().len(), 2);
        assert!(!s.contains(&r(1, 2)));
    }

    #[test]
    fn point_closes_an_open_end() {
        let a = Interval::open(r(0, 1), r(1, 1)).unwrap();
        let s = RationalIntervalSet::from_intervals([a, Interval::point(r(1, 1))]);
        assert_eq!(s.intervals().len(), 1);
        assert!(s.intervals()[0].hi_closed && !s.intervals()[0].lo_closed);
        assert_eq!(s.points().count(), 0);
    }

    #[test]
    fn nested_interval_is_absorbed() {
        let a = Interval::closed(r(0, 1), r(1, 1)).unwrap();
        let b = Interval::open(r(1, 4), r(1, 2)).unwrap();
        let s = RationalIntervalSet::from_intervals([b, a.clone()]);
        assert_eq!(s.intervals(), &[a]);
    }

    #[test]
    fn intersection_flags() {
        let a = Interval::new(r(0, 1), r(1, 2), true, false).unwrap();
        let b = Interval::closed(r(1, 2), r(1, 1)).unwrap();
        assert!(a.intersect(&b).is_none());
        let c = Interval::closed(r(1, 4), r(1, 1)).unwrap();
        let i = a.intersect(&c).unwrap();
        assert!(i.lo_closed && !i.hi_closed);
    }
}
