//! Finite topological spaces and their three interchangeable descriptions:
//! an open-set family, the minimal base `{U_x}`, and the specialization
//! preorder.
//!
//! Points are indices `0..n`. A [`Space`] always stores the minimal
//! neighbourhoods and the specialization preorder; the full open family is
//! materialized on demand (it can be exponentially larger than `n`).

use std::collections::HashSet;
use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::pointset::{PointSet, MAX_POINTS};

/// Open families larger than this are never materialized.
pub const FAMILY_LIMIT: usize = 1 << 16;

/// A validated topology given by its complete list of open sets, sorted by
/// `(cardinality, mask)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct OpenFamily {
    n: usize,
    opens: Vec<PointSet>,
}

impl OpenFamily {
    /// Checks the topology axioms on an explicit family.
    ///
    /// Input order does not matter and duplicates are collapsed. Closure is
    /// checked pairwise, which is enough for finite families.
    pub fn new(n: usize, opens: impl IntoIterator<Item = PointSet>) -> Result<Self> {
        if n > MAX_POINTS {
            return Err(Error::TooManyPoints(n));
        }
        let mut sets: Vec<PointSet> = opens.into_iter().collect();
        if let Some(&bad) = sets.iter().find(|s| !s.fits(n)) {
            return Err(Error::SetOutOfRange { set: bad, n });
        }
        sets.sort_by_key(|s| s.canonical_key());
        sets.dedup();
        let members: HashSet<PointSet> = sets.iter().copied().collect();
        if !members.contains(&PointSet::EMPTY) || !members.contains(&PointSet::full(n)) {
            return Err(Error::MissingEmptyOrFull);
        }
        for (i, &a) in sets.iter().enumerate() {
            for &b in &sets[i + 1..] {
                if !members.contains(&(a | b)) {
                    return Err(Error::NotClosedUnderUnion(a, b));
                }
                if !members.contains(&(a & b)) {
                    return Err(Error::NotClosedUnderIntersection(a, b));
                }
            }
        }
        Ok(OpenFamily { n, opens: sets })
    }

    fn from_sorted_unchecked(n: usize, opens: Vec<PointSet>) -> Self {
        OpenFamily { n, opens }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn opens(&self) -> &[PointSet] {
        &self.opens
    }

    pub fn len(&self) -> usize {
        self.opens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.opens.is_empty()
    }

    pub fn contains(&self, set: PointSet) -> bool {
        self.opens
            .binary_search_by_key(&set.canonical_key(), |s| s.canonical_key())
            .is_ok()
    }

    /// Complements of the opens, i.e. the closed sets.
    pub fn closed_sets(&self) -> impl Iterator<Item = PointSet> + '_ {
        self.opens.iter().map(move |s| s.complement(self.n))
    }

    pub fn is_closed(&self, set: PointSet) -> bool {
        self.contains(set.complement(self.n))
    }

    /// `U_x` as the intersection of every open set containing `x`.
    pub fn minimal_neighbourhood(&self, x: usize) -> PointSet {
        self.opens
            .iter()
            .filter(|g| g.contains(x))
            .fold(PointSet::full(self.n), |acc, &g| acc & g)
    }
}

impl fmt::Debug for OpenFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.opens).finish()
    }
}

/// A reflexive, transitive relation on `0..n`, stored as one up-set mask per
/// point: `above[x] = {y : y >= x}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Preorder {
    above: Vec<PointSet>,
    below: Vec<PointSet>,
}

impl Preorder {
    fn from_above_unchecked(above: Vec<PointSet>) -> Self {
        let n = above.len();
        let mut below = vec![PointSet::EMPTY; n];
        for (x, up) in above.iter().enumerate() {
            for y in up.iter() {
                below[y].insert(x);
            }
        }
        Preorder { above, below }
    }

    /// Builds a preorder from a square boolean matrix where `geq[y][x]`
    /// means `y >= x`.
    pub fn from_matrix(geq: &[Vec<bool>]) -> Result<Self> {
        let n = geq.len();
        if n > MAX_POINTS {
            return Err(Error::TooManyPoints(n));
        }
        if geq.iter().any(|row| row.len() != n) {
            return Err(Error::NotSquare);
        }
        let mut above = vec![PointSet::EMPTY; n];
        for (y, row) in geq.iter().enumerate() {
            for (x, &ge) in row.iter().enumerate() {
                if ge {
                    above[x].insert(y);
                }
            }
        }
        Self::from_above(above)
    }

    /// Builds a preorder from up-sets `above[x] = {y : y >= x}`, checking the
    /// axioms.
    pub fn from_above(above: Vec<PointSet>) -> Result<Self> {
        let n = above.len();
        if n > MAX_POINTS {
            return Err(Error::TooManyPoints(n));
        }
        for (x, up) in above.iter().enumerate() {
            if !up.fits(n) {
                return Err(Error::SetOutOfRange { set: *up, n });
            }
            if !up.contains(x) {
                return Err(Error::NotReflexive(x));
            }
        }
        for (x, up) in above.iter().enumerate() {
            for y in up.iter() {
                if let Some(z) = above[y].difference(*up).first() {
                    return Err(Error::NotTransitive(x, y, z));
                }
            }
        }
        Ok(Self::from_above_unchecked(above))
    }

    /// Reflexive-transitive closure of the pairs `(u, v)`, read as `u <= v`.
    pub fn closure_of(n: usize, le_pairs: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_POINTS {
            return Err(Error::TooManyPoints(n));
        }
        let mut above: Vec<PointSet> = (0..n).map(PointSet::singleton).collect();
        for &(u, v) in le_pairs {
            if u >= n || v >= n {
                return Err(Error::SetOutOfRange {
                    set: PointSet::singleton(u.max(v).min(63)),
                    n,
                });
            }
            above[u].insert(v);
        }
        for k in 0..n {
            for i in 0..n {
                if above[i].contains(k) {
                    above[i] = above[i] | above[k];
                }
            }
        }
        Ok(Self::from_above_unchecked(above))
    }

    /// The identity relation.
    pub fn antichain(n: usize) -> Self {
        Self::from_above_unchecked((0..n).map(PointSet::singleton).collect())
    }

    pub fn len(&self) -> usize {
        self.above.len()
    }

    pub fn is_empty(&self) -> bool {
        self.above.is_empty()
    }

    /// `y >= x`.
    pub fn geq(&self, y: usize, x: usize) -> bool {
        self.above[x].contains(y)
    }

    /// `y > x`: `y >= x` and not `x >= y`.
    pub fn gt(&self, y: usize, x: usize) -> bool {
        self.geq(y, x) && !self.geq(x, y)
    }

    pub fn above(&self, x: usize) -> PointSet {
        self.above[x]
    }

    pub fn below(&self, x: usize) -> PointSet {
        self.below[x]
    }

    pub fn up_sets(&self) -> &[PointSet] {
        &self.above
    }

    /// Points equivalent to `x` (`x >= y` and `y >= x`).
    pub fn class_of(&self, x: usize) -> PointSet {
        self.above[x] & self.below[x]
    }

    pub fn is_antisymmetric(&self) -> bool {
        (0..self.len()).all(|x| self.class_of(x) == PointSet::singleton(x))
    }

    /// Points with nothing strictly above them.
    pub fn maximal(&self) -> PointSet {
        (0..self.len())
            .filter(|&x| self.above[x].is_subset(self.below[x]))
            .collect()
    }

    /// Points with nothing strictly below them.
    pub fn minimal(&self) -> PointSet {
        (0..self.len())
            .filter(|&x| self.below[x].is_subset(self.above[x]))
            .collect()
    }

    /// Smallest up-set containing `set`.
    pub fn up_closure(&self, set: PointSet) -> PointSet {
        set.iter().fold(PointSet::EMPTY, |acc, x| acc | self.above[x])
    }

    /// Smallest down-set containing `set`.
    pub fn down_closure(&self, set: PointSet) -> PointSet {
        set.iter().fold(PointSet::EMPTY, |acc, x| acc | self.below[x])
    }

    /// The relation as a boolean matrix, `m[y][x] = (y >= x)`.
    pub fn to_matrix(&self) -> Vec<Vec<bool>> {
        let n = self.len();
        (0..n)
            .map(|y| (0..n).map(|x| self.geq(y, x)).collect())
            .collect()
    }
}

impl fmt::Debug for Preorder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut pairs = Vec::new();
        for x in 0..self.len() {
            for y in self.above[x].iter().filter(|&y| y != x) {
                pairs.push(format!("{x}<={y}"));
            }
        }
        write!(f, "Preorder[{}]", pairs.join(" "))
    }
}

/// A finite topological space on points `0..n`.
#[derive(Clone)]
pub struct Space {
    labels: Vec<String>,
    nbhd: Vec<PointSet>,
    order: Preorder,
    family: OnceLock<Option<OpenFamily>>,
}

/// Default labels: `a`..`z` up to 26 points, `p0`, `p1`, .. beyond.
pub fn default_labels(n: usize) -> Vec<String> {
    if n <= 26 {
        (0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect()
    } else {
        (0..n).map(|i| format!("p{i}")).collect()
    }
}

fn check_labels(n: usize, labels: &[String]) -> Result<()> {
    if labels.len() != n {
        return Err(Error::LabelCount {
            expected: n,
            got: labels.len(),
        });
    }
    let mut seen = HashSet::new();
    for l in labels {
        if !seen.insert(l.as_str()) {
            return Err(Error::DuplicateLabel(l.clone()));
        }
    }
    Ok(())
}

/// Validates an explicit open family on `n` points and builds the space.
pub fn validate_topology(n: usize, opens: &[PointSet]) -> Result<Space> {
    Space::from_opens(default_labels(n), opens.iter().copied())
}

/// The up-set topology of a preorder.
pub fn space_from_preorder(order: &Preorder, labels: Vec<String>) -> Result<Space> {
    Space::from_preorder(order.clone(), labels)
}

/// Builds a space from one minimal neighbourhood per point.
pub fn space_from_minbase(assignments: &[PointSet]) -> Result<Space> {
    Space::from_minbase(default_labels(assignments.len()), assignments)
}

impl Space {
    fn from_nbhd_unchecked(labels: Vec<String>, nbhd: Vec<PointSet>) -> Self {
        let order = Preorder::from_above_unchecked(nbhd.clone());
        Space {
            labels,
            nbhd,
            order,
            family: OnceLock::new(),
        }
    }

    pub fn from_opens(
        labels: Vec<String>,
        opens: impl IntoIterator<Item = PointSet>,
    ) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::EmptyUniverse);
        }
        let family = OpenFamily::new(n, opens)?;
        check_labels(n, &labels)?;
        let nbhd = (0..n).map(|x| family.minimal_neighbourhood(x)).collect();
        let space = Self::from_nbhd_unchecked(labels, nbhd);
        let _ = space.family.set(Some(family));
        Ok(space)
    }

    /// Up-set topology: a set is open iff it contains everything above each
    /// of its members. `U_x` is the principal up-set of `x`.
    pub fn from_preorder(order: Preorder, labels: Vec<String>) -> Result<Self> {
        check_labels(order.len(), &labels)?;
        let nbhd = order.up_sets().to_vec();
        Ok(Space {
            labels,
            nbhd,
            order,
            family: OnceLock::new(),
        })
    }

    pub fn from_minbase(labels: Vec<String>, assignments: &[PointSet]) -> Result<Self> {
        let n = assignments.len();
        if n > MAX_POINTS {
            return Err(Error::TooManyPoints(n));
        }
        check_labels(n, &labels)?;
        for (x, &u) in assignments.iter().enumerate() {
            if !u.fits(n) {
                return Err(Error::SetOutOfRange { set: u, n });
            }
            if !u.contains(x) {
                return Err(Error::PointNotInOwnNeighborhood(x));
            }
        }
        for (x, &u) in assignments.iter().enumerate() {
            for y in u.iter() {
                if !assignments[y].is_subset(u) {
                    return Err(Error::InconsistentBase(x, y));
                }
            }
        }
        Ok(Self::from_nbhd_unchecked(labels, assignments.to_vec()))
    }

    /// The one-point space.
    pub fn point() -> Self {
        Self::from_nbhd_unchecked(default_labels(1), vec![PointSet::singleton(0)])
    }

    pub fn discrete(n: usize) -> Self {
        Self::from_nbhd_unchecked(default_labels(n), (0..n).map(PointSet::singleton).collect())
    }

    pub fn indiscrete(n: usize) -> Self {
        Self::from_nbhd_unchecked(default_labels(n), vec![PointSet::full(n); n])
    }

    /// Same topology, new labels.
    pub fn with_labels(&self, labels: Vec<String>) -> Result<Self> {
        check_labels(self.n(), &labels)?;
        let mut s = self.clone();
        s.labels = labels;
        Ok(s)
    }

    pub fn n(&self) -> usize {
        self.nbhd.len()
    }

    pub fn universe(&self) -> PointSet {
        PointSet::full(self.n())
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// `U_x`, the smallest open set containing `x`.
    pub fn nbhd(&self, x: usize) -> PointSet {
        self.nbhd[x]
    }

    pub fn nbhds(&self) -> &[PointSet] {
        &self.nbhd
    }

    /// The minimal base `{U_x}` without duplicates, in canonical order.
    pub fn minimal_base(&self) -> Vec<PointSet> {
        let mut base = self.nbhd.clone();
        base.sort_by_key(|s| s.canonical_key());
        base.dedup();
        base
    }

    /// `y >= x` iff `U_y ⊆ U_x`.
    pub fn specialization_order(&self) -> &Preorder {
        &self.order
    }

    /// Open iff it contains `U_x` for each of its points.
    pub fn is_open(&self, set: PointSet) -> bool {
        set.iter().all(|x| self.nbhd[x].is_subset(set))
    }

    pub fn is_closed(&self, set: PointSet) -> bool {
        self.is_open(set.complement(self.n()))
    }

    /// The full open family, or `None` when it has more than
    /// [`FAMILY_LIMIT`] members.
    pub fn open_family(&self) -> Option<&OpenFamily> {
        self.family
            .get_or_init(|| enumerate_up_sets(&self.order, FAMILY_LIMIT))
            .as_ref()
    }

    pub fn try_open_family(&self) -> Result<&OpenFamily> {
        self.open_family().ok_or(Error::FamilyTooLarge)
    }

    /// Subspace on `set`, reindexed in ascending order of the original
    /// indices. Relative minimal neighbourhoods are `U_x ∩ set`.
    pub fn subspace(&self, set: PointSet) -> Space {
        let members: Vec<usize> = (set & self.universe()).iter().collect();
        let reindex = |s: PointSet| -> PointSet {
            members
                .iter()
                .enumerate()
                .filter(|(_, &old)| s.contains(old))
                .map(|(new, _)| new)
                .collect()
        };
        let labels = members.iter().map(|&x| self.labels[x].clone()).collect();
        let nbhd = members.iter().map(|&x| reindex(self.nbhd[x] & set)).collect();
        Self::from_nbhd_unchecked(labels, nbhd)
    }

    /// Renders a set with this space's labels, e.g. `{x y}`.
    pub fn format_set(&self, set: PointSet) -> String {
        let names: Vec<&str> = set.iter().map(|x| self.label(x)).collect();
        format!("{{{}}}", names.join(" "))
    }
}

impl PartialEq for Space {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.nbhd == other.nbhd
    }
}

impl Eq for Space {}

impl fmt::Debug for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = (0..self.n())
            .map(|x| format!("{}:{}", self.label(x), self.format_set(self.nbhd(x))))
            .collect();
        write!(f, "Space[{}]", parts.join(" "))
    }
}

/// All up-sets of `order`, or `None` if there are more than `limit`.
///
/// Each branch decides one undecided point; including it forces its up-set,
/// excluding it forces its down-set, so every leaf is a distinct up-set.
fn enumerate_up_sets(order: &Preorder, limit: usize) -> Option<OpenFamily> {
    fn walk(
        order: &Preorder,
        n: usize,
        inc: PointSet,
        exc: PointSet,
        out: &mut Vec<PointSet>,
        limit: usize,
    ) -> bool {
        let undecided = PointSet::full(n) - inc - exc;
        match undecided.first() {
            None => {
                out.push(inc);
                out.len() <= limit
            }
            Some(x) => {
                walk(order, n, inc | order.above(x), exc, out, limit)
                    && walk(order, n, inc, exc | order.below(x), out, limit)
            }
        }
    }
    let n = order.len();
    let mut out = Vec::new();
    if !walk(order, n, PointSet::EMPTY, PointSet::EMPTY, &mut out, limit) {
        return None;
    }
    out.sort_by_key(|s| s.canonical_key());
    Some(OpenFamily::from_sorted_unchecked(n, out))
}
