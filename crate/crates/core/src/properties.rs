//! Whole-space properties: separation axioms, open and closed points,
//! inductive dimension, height, submaximality, connectedness and the COTS
//! condition.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::operators;
use crate::pointset::PointSet;
use crate::space::{OpenFamily, Space};

/// Submaximality is checked over all subsets up to this many points; larger
/// spaces use [`is_submaximal_structural`].
const SUBMAXIMAL_BRUTE_FORCE_LIMIT: usize = 20;

/// All minimal neighbourhoods pairwise distinct.
pub fn is_t0(space: &Space) -> bool {
    space.specialization_order().is_antisymmetric()
}

/// Every `U_x = {x}`. For finite spaces this is the same as discrete.
pub fn is_t1(space: &Space) -> bool {
    (0..space.n()).all(|x| space.nbhd(x) == PointSet::singleton(x))
}

pub fn is_discrete(space: &Space) -> bool {
    is_t1(space)
}

pub fn is_indiscrete(space: &Space) -> bool {
    (0..space.n()).all(|x| space.nbhd(x) == space.universe())
}

/// Points `x` with `U_x = {x}`.
pub fn open_points(space: &Space) -> PointSet {
    (0..space.n())
        .filter(|&x| space.nbhd(x) == PointSet::singleton(x))
        .collect()
}

/// Points `x` with `cl{x} = {x}`.
pub fn closed_points(space: &Space) -> PointSet {
    (0..space.n())
        .filter(|&x| operators::closure(space, PointSet::singleton(x)) == PointSet::singleton(x))
        .collect()
}

/// Open points read off the family: `{x}` is a member.
pub fn open_points_definitional(family: &OpenFamily) -> PointSet {
    (0..family.n())
        .filter(|&x| family.contains(PointSet::singleton(x)))
        .collect()
}

/// Closed points read off the family: `X ∖ {x}` is a member.
pub fn closed_points_definitional(family: &OpenFamily) -> PointSet {
    (0..family.n())
        .filter(|&x| family.is_closed(PointSet::singleton(x)))
        .collect()
}

pub fn has_isolated_point(space: &Space) -> bool {
    !open_points(space).is_empty()
}

/// Every singleton is open or closed.
pub fn is_t_half(space: &Space) -> bool {
    (open_points(space) | closed_points(space)) == space.universe()
}

/// Small inductive dimension over the minimal base: `-1` for the empty
/// space, otherwise the maximum over `U_x` of `dim ∂U_x + 1`, the boundary
/// taken as a subspace.
pub fn dimension_inductive(space: &Space) -> i32 {
    if space.n() == 0 {
        return -1;
    }
    space
        .minimal_base()
        .into_iter()
        .map(|u| dimension_inductive(&space.subspace(operators::boundary(space, u))) + 1)
        .max()
        .unwrap_or(0)
}

/// Number of points in a longest strictly increasing chain.
pub fn poset_height(space: &Space) -> Result<usize> {
    if !is_t0(space) {
        return Err(Error::NotT0);
    }
    let order = space.specialization_order();
    let n = space.n();
    // height[x] = longest chain ending at x; process by increasing |below|.
    let mut by_depth: Vec<usize> = (0..n).collect();
    by_depth.sort_by_key(|&x| order.below(x).len());
    let mut height = vec![0usize; n];
    for &x in &by_depth {
        height[x] = 1 + order
            .below(x)
            .without(x)
            .iter()
            .map(|y| height[y])
            .max()
            .unwrap_or(0);
    }
    Ok(height.into_iter().max().unwrap_or(0))
}

/// Subspace on `set`.
pub fn subspace(space: &Space, set: PointSet) -> Space {
    space.subspace(set)
}

/// Every dense subset is open.
///
/// Checked over all subsets for small spaces and with
/// [`is_submaximal_structural`] above that.
pub fn is_submaximal(space: &Space) -> bool {
    if space.n() > SUBMAXIMAL_BRUTE_FORCE_LIMIT {
        return is_submaximal_structural(space);
    }
    let full = space.universe();
    full.subsets()
        .filter(|&a| operators::closure(space, a) == full)
        .all(|a| space.is_open(a))
}

/// Dense sets are exactly the sets meeting every minimal nonempty open set,
/// so every dense set is open iff `U_x ∖ {x}` consists of open points for
/// every `x`.
pub fn is_submaximal_structural(space: &Space) -> bool {
    let open = open_points(space);
    (0..space.n()).all(|x| space.nbhd(x).without(x).is_subset(open))
}

/// Components as classes of the equivalence generated by comparability.
pub fn connected_components(space: &Space) -> Vec<PointSet> {
    let order = space.specialization_order();
    let mut remaining = space.universe();
    let mut out = Vec::new();
    while let Some(start) = remaining.first() {
        let mut comp = PointSet::singleton(start);
        loop {
            let grown = order.up_closure(comp) | order.down_closure(comp);
            if grown == comp {
                break;
            }
            comp = grown;
        }
        remaining = remaining - comp;
        out.push(comp);
    }
    out
}

/// Components as the smallest clopen sets around each point, from the open
/// family alone.
pub fn connected_components_by_clopens(family: &OpenFamily) -> Vec<PointSet> {
    let clopens: Vec<PointSet> = family
        .opens()
        .iter()
        .copied()
        .filter(|&g| family.is_closed(g))
        .collect();
    let mut remaining = PointSet::full(family.n());
    let mut out = Vec::new();
    while let Some(x) = remaining.first() {
        let comp = clopens
            .iter()
            .filter(|c| c.contains(x))
            .fold(PointSet::full(family.n()), |acc, &c| acc & c);
        remaining = remaining - comp;
        out.push(comp);
    }
    out
}

/// Connected iff at most one component.
pub fn is_connected(space: &Space) -> bool {
    connected_components(space).len() <= 1
}

/// Whether for every three points one of them separates the other two,
/// i.e. the other two lie in distinct components of the complement of the
/// separating point.
pub fn has_three_point_separation(space: &Space) -> bool {
    let n = space.n();
    // comp_of[y][p]: index of the component of p in X ∖ {y}
    let comp_of: Vec<Vec<usize>> = (0..n)
        .map(|y| {
            let rest = space.universe().without(y);
            let sub = space.subspace(rest);
            let comps = connected_components(&sub);
            let members: Vec<usize> = rest.iter().collect();
            let mut idx = vec![usize::MAX; n];
            for (ci, c) in comps.iter().enumerate() {
                for local in c.iter() {
                    idx[members[local]] = ci;
                }
            }
            idx
        })
        .collect();
    let separates = |y: usize, p: usize, q: usize| comp_of[y][p] != comp_of[y][q];
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if !(separates(a, b, c) || separates(b, a, c) || separates(c, a, b)) {
                    return false;
                }
            }
        }
    }
    true
}

/// Connected ordered topological space: connected, and among any three
/// points one separates the other two.
pub fn is_cots(space: &Space) -> bool {
    is_connected(space) && has_three_point_separation(space)
}

/// Whole-space classification.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpaceReport {
    pub n: usize,
    pub t0: bool,
    pub t1: bool,
    pub t_half: bool,
    pub discrete: bool,
    pub indiscrete: bool,
    pub submaximal: bool,
    pub connected: bool,
    pub cots: bool,
    pub dim_inductive: i32,
    /// `None` for non-T0 spaces.
    pub height: Option<usize>,
    pub open_points: PointSet,
    pub closed_points: PointSet,
    pub isolated_points: PointSet,
    pub components: Vec<PointSet>,
}

pub fn report(space: &Space) -> SpaceReport {
    let components = connected_components(space);
    let open = open_points(space);
    SpaceReport {
        n: space.n(),
        t0: is_t0(space),
        t1: is_t1(space),
        t_half: is_t_half(space),
        discrete: is_discrete(space),
        indiscrete: is_indiscrete(space),
        submaximal: is_submaximal(space),
        connected: components.len() <= 1,
        cots: is_cots(space),
        dim_inductive: dimension_inductive(space),
        height: poset_height(space).ok(),
        open_points: open,
        closed_points: closed_points(space),
        isolated_points: open,
        components,
    }
}
