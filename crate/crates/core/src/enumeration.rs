//! Enumeration of all topologies on `n` labeled points and their
//! classification up to homeomorphism.
//!
//! Topologies on a finite set correspond one-to-one with preorders, so the
//! generator walks reflexive-transitive relation matrices in lexicographic
//! order of the row-major `geq` matrix (`false < true`), pruning partial
//! matrices as soon as an assigned triple breaks transitivity.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::pointset::PointSet;
use crate::space::{default_labels, Preorder, Space};

/// Default upper bound on `n` for enumeration.
pub const MAX_ENUMERATION_N: usize = 5;

/// Hard upper bound when the caller opts into larger enumerations.
pub const HARD_MAX_ENUMERATION_N: usize = 8;

/// Lexicographic stream of all preorders on `n` points.
#[derive(Debug, Clone)]
pub struct Preorders {
    n: usize,
    cells: Vec<(usize, usize)>,
    geq: Vec<bool>,
    state: Vec<u8>,
    depth: usize,
    done: bool,
}

impl Preorders {
    pub fn new(n: usize) -> Self {
        let cells: Vec<(usize, usize)> = (0..n)
            .flat_map(|y| (0..n).filter(move |&x| x != y).map(move |x| (y, x)))
            .collect();
        let mut geq = vec![false; n * n];
        for i in 0..n {
            geq[i * n + i] = true;
        }
        let len = cells.len();
        Preorders {
            n,
            cells,
            geq,
            state: vec![0; len + 1],
            depth: 0,
            done: false,
        }
    }

    fn assigned(&self, y: usize, x: usize) -> bool {
        // Cells are visited in row-major order, so (y, x) is assigned iff it
        // is on the diagonal or at or before the current cell.
        y == x || {
            let (cy, cx) = self.cells[self.depth];
            (y, x) <= (cy, cx)
        }
    }

    /// Every fully assigned triple touching the current cell is transitive.
    fn consistent(&self) -> bool {
        let n = self.n;
        let (a, b) = self.cells[self.depth];
        let g = |y: usize, x: usize| self.geq[y * n + x];
        for k in 0..n {
            // (a,b) as the first link, (b,k) as the second, (a,k) as the result.
            if self.assigned(b, k) && self.assigned(a, k) && g(a, b) && g(b, k) && !g(a, k) {
                return false;
            }
            // (k,a) then (a,b) implies (k,b).
            if self.assigned(k, a) && self.assigned(k, b) && g(k, a) && g(a, b) && !g(k, b) {
                return false;
            }
            // (a,k) then (k,b) implies (a,b).
            if self.assigned(a, k) && self.assigned(k, b) && g(a, k) && g(k, b) && !g(a, b) {
                return false;
            }
        }
        true
    }

    fn emit(&self) -> Preorder {
        let n = self.n;
        let above = (0..n)
            .map(|x| (0..n).filter(|&y| self.geq[y * n + x]).collect::<PointSet>())
            .collect();
        Preorder::from_above(above).expect("generator only emits preorders")
    }
}

impl Iterator for Preorders {
    type Item = Preorder;

    fn next(&mut self) -> Option<Preorder> {
        let len = self.cells.len();
        loop {
            if self.done {
                return None;
            }
            if self.depth == len {
                let out = self.emit();
                if len == 0 {
                    self.done = true;
                } else {
                    self.depth -= 1;
                }
                return Some(out);
            }
            let (y, x) = self.cells[self.depth];
            let idx = y * self.n + x;
            match self.state[self.depth] {
                s @ (0 | 1) => {
                    self.geq[idx] = s == 1;
                    self.state[self.depth] = s + 1;
                    if self.consistent() {
                        self.depth += 1;
                        self.state[self.depth] = 0;
                    }
                }
                _ => {
                    self.geq[idx] = false;
                    self.state[self.depth] = 0;
                    if self.depth == 0 {
                        self.done = true;
                    } else {
                        self.depth -= 1;
                    }
                }
            }
        }
    }
}

/// All topologies on `n` labeled points, `1 <= n <= 5`.
pub fn enumerate_labeled(n: usize) -> Result<impl Iterator<Item = Space>> {
    enumerate_labeled_with_limit(n, MAX_ENUMERATION_N)
}

/// Like [`enumerate_labeled`] with a caller-chosen bound, capped at
/// [`HARD_MAX_ENUMERATION_N`].
pub fn enumerate_labeled_with_limit(
    n: usize,
    max_n: usize,
) -> Result<impl Iterator<Item = Space>> {
    let max = max_n.min(HARD_MAX_ENUMERATION_N);
    if n == 0 || n > max {
        return Err(Error::NOutOfRange { n, max });
    }
    let labels = default_labels(n);
    Ok(Preorders::new(n).map(move |p| {
        Space::from_preorder(p, labels.clone()).expect("labels match the preorder size")
    }))
}

/// Byte string identifying a finite space up to homeomorphism.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    /// Lowercase hex rendering.
    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }
}

/// The poset of neighbourhood-equivalence classes, weighted by class size.
struct ClassPoset {
    sizes: Vec<usize>,
    /// `up[c]`: classes strictly above `c`.
    up: Vec<PointSet>,
    down: Vec<PointSet>,
}

impl ClassPoset {
    fn of(space: &Space) -> Self {
        let n = space.n();
        let mut class_of = vec![usize::MAX; n];
        let mut reps = Vec::new();
        for x in 0..n {
            if class_of[x] != usize::MAX {
                continue;
            }
            let c = reps.len();
            for (y, slot) in class_of.iter_mut().enumerate().skip(x) {
                if space.nbhd(y) == space.nbhd(x) {
                    *slot = c;
                }
            }
            reps.push(x);
        }
        let k = reps.len();
        let sizes = (0..k)
            .map(|c| class_of.iter().filter(|&&d| d == c).count())
            .collect();
        let mut up = vec![PointSet::EMPTY; k];
        let mut down = vec![PointSet::EMPTY; k];
        for (c, &x) in reps.iter().enumerate() {
            for (d, &y) in reps.iter().enumerate() {
                if c != d && space.nbhd(x).contains(y) {
                    up[c].insert(d);
                    down[d].insert(c);
                }
            }
        }
        ClassPoset { sizes, up, down }
    }

    fn len(&self) -> usize {
        self.sizes.len()
    }

    /// Swapping `u` and `v` preserves every relation.
    fn twins(&self, u: usize, v: usize) -> bool {
        let others = |s: PointSet| s.without(u).without(v);
        others(self.up[u]) == others(self.up[v])
            && others(self.down[u]) == others(self.down[v])
            && !self.up[u].contains(v)
            && !self.up[v].contains(u)
    }

    /// Splits cells by how many up- and down-neighbours each member has in
    /// every cell, until stable. New sub-cells are ordered by signature.
    fn refine(&self, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
        loop {
            let masks: Vec<PointSet> = cells
                .iter()
                .map(|c| c.iter().copied().collect())
                .collect();
            let signature = |v: usize| -> Vec<(usize, usize)> {
                masks
                    .iter()
                    .map(|&m| ((self.up[v] & m).len(), (self.down[v] & m).len()))
                    .collect()
            };
            let mut next = Vec::with_capacity(cells.len());
            for cell in &cells {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut groups: BTreeMap<Vec<(usize, usize)>, Vec<usize>> = BTreeMap::new();
                for &v in cell {
                    groups.entry(signature(v)).or_default().push(v);
                }
                next.extend(groups.into_values());
            }
            if next.len() == cells.len() {
                return next;
            }
            cells = next;
        }
    }

    fn encode(&self, order: &[usize]) -> Vec<u8> {
        let k = order.len();
        let mut out = Vec::with_capacity(1 + k + k * k);
        out.push(k as u8);
        out.extend(order.iter().map(|&c| self.sizes[c] as u8));
        for &c in order {
            for &d in order {
                out.push(self.up[c].contains(d) as u8);
            }
        }
        out
    }

    /// Depth-first search over individualizations, keeping the least leaf
    /// code. Two leaves with equal codes give an automorphism; children in
    /// one orbit of the automorphisms fixing the current prefix lead to
    /// identical subtrees, so only one of them is explored.
    fn search(&self, cells: Vec<Vec<usize>>, prefix: &mut Vec<usize>, state: &mut Search) {
        let cells = self.refine(cells);
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
            let code = self.encode(&order);
            match &state.best {
                Some((best, best_order)) if code == *best => {
                    let mut perm = vec![0; order.len()];
                    for (&a, &b) in best_order.iter().zip(&order) {
                        perm[a] = b;
                    }
                    state.automorphisms.push(perm);
                }
                Some((best, _)) if code > *best => {}
                _ => state.best = Some((code, order)),
            }
            return;
        };
        let cell = &cells[target];
        let mut tried: Vec<usize> = Vec::new();
        for &v in cell {
            if tried.iter().any(|&u| self.twins(u, v)) {
                continue;
            }
            if !tried.is_empty() {
                let orbit = state.orbit_roots(prefix, self.len());
                if tried.iter().any(|&u| orbit[u] == orbit[v]) {
                    continue;
                }
            }
            tried.push(v);
            let mut next = Vec::with_capacity(cells.len() + 1);
            next.extend_from_slice(&cells[..target]);
            next.push(vec![v]);
            next.push(cell.iter().copied().filter(|&w| w != v).collect());
            next.extend_from_slice(&cells[target + 1..]);
            prefix.push(v);
            self.search(next, prefix, state);
            prefix.pop();
        }
    }

    fn canonical(&self) -> Vec<u8> {
        let k = self.len();
        if k == 0 {
            return vec![0];
        }
        let mut groups: BTreeMap<(usize, usize, usize), Vec<usize>> = BTreeMap::new();
        for c in 0..k {
            groups
                .entry((self.sizes[c], self.up[c].len(), self.down[c].len()))
                .or_default()
                .push(c);
        }
        let mut state = Search::default();
        self.search(groups.into_values().collect(), &mut Vec::new(), &mut state);
        state.best.expect("search reaches at least one leaf").0
    }
}

#[derive(Default)]
struct Search {
    best: Option<(Vec<u8>, Vec<usize>)>,
    automorphisms: Vec<Vec<usize>>,
}

impl Search {
    /// Orbit representative of every class under the automorphisms found so
    /// far that fix each member of `prefix`.
    fn orbit_roots(&self, prefix: &[usize], k: usize) -> Vec<usize> {
        let mut parent: Vec<usize> = (0..k).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for perm in &self.automorphisms {
            if prefix.iter().any(|&p| perm[p] != p) {
                continue;
            }
            for (a, &b) in perm.iter().enumerate() {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                parent[ra.max(rb)] = ra.min(rb);
            }
        }
        (0..k).map(|x| find(&mut parent, x)).collect()
    }
}

/// Canonical form of the space's specialization preorder: the quotient
/// poset of neighbourhood classes, labeled canonically by ordered partition
/// refinement with backtracking, together with class sizes.
pub fn canonical_form(space: &Space) -> CanonicalForm {
    CanonicalForm(ClassPoset::of(space).canonical())
}

pub fn is_homeomorphic(a: &Space, b: &Space) -> bool {
    a.n() == b.n() && canonical_form(a) == canonical_form(b)
}

/// One homeomorphism class of labeled topologies.
#[derive(Debug, Clone)]
pub struct TopologyClass {
    pub form: CanonicalForm,
    /// First member in enumeration order.
    pub representative: Space,
    pub labeled_count: usize,
}

/// Homeomorphism classes of topologies on `n` points, sorted by canonical
/// form, `1 <= n <= 5`.
pub fn enumerate_classes(n: usize) -> Result<Vec<TopologyClass>> {
    enumerate_classes_with_limit(n, MAX_ENUMERATION_N)
}

pub fn enumerate_classes_with_limit(n: usize, max_n: usize) -> Result<Vec<TopologyClass>> {
    let spaces: Vec<Space> = enumerate_labeled_with_limit(n, max_n)?.collect();
    Ok(classify(spaces))
}

/// Groups spaces into homeomorphism classes. Forms are computed in
/// parallel; the representative of each class is its first member in input
/// order, so the result does not depend on scheduling.
pub fn classify(spaces: Vec<Space>) -> Vec<TopologyClass> {
    let forms: Vec<CanonicalForm> = spaces.par_iter().map(canonical_form).collect();
    let mut classes: BTreeMap<CanonicalForm, TopologyClass> = BTreeMap::new();
    for (space, form) in spaces.into_iter().zip(forms) {
        classes
            .entry(form.clone())
            .and_modify(|c| c.labeled_count += 1)
            .or_insert(TopologyClass {
                form,
                representative: space,
                labeled_count: 1,
            });
    }
    classes.into_values().collect()
}
