//! Set operators on a finite space.
//!
//! Every operator has two implementations. The functions at the top level of
//! this module use the specialization preorder (`O(n)` mask operations per
//! point) and are what the rest of the crate calls. The [`definitional`]
//! module computes the same operators from the open family alone and serves
//! as the oracle in tests and in cross-checked reports.

use serde::Serialize;

use crate::pointset::PointSet;
use crate::space::Space;

/// Points below some member of `a`: `{b : b <= a for some a ∈ A}`.
pub fn closure(space: &Space, a: PointSet) -> PointSet {
    space.specialization_order().down_closure(a)
}

/// Members of `a` whose whole up-set lies in `a`.
pub fn interior(space: &Space, a: PointSet) -> PointSet {
    a.iter().filter(|&x| space.nbhd(x).is_subset(a)).collect()
}

pub fn closure_of_interior(space: &Space, a: PointSet) -> PointSet {
    closure(space, interior(space, a))
}

pub fn interior_of_closure(space: &Space, a: PointSet) -> PointSet {
    interior(space, closure(space, a))
}

/// Points lying below some member of `a` and below some non-member.
pub fn boundary(space: &Space, a: PointSet) -> PointSet {
    let order = space.specialization_order();
    let outside = a.complement(space.n());
    (0..space.n())
        .filter(|&b| order.above(b).intersects(a) && order.above(b).intersects(outside))
        .collect()
}

/// Points with nothing of `a` above them.
pub fn exterior(space: &Space, a: PointSet) -> PointSet {
    (0..space.n())
        .filter(|&x| !space.nbhd(x).intersects(a))
        .collect()
}

/// Accumulation points: `x` such that `U_x ∖ {x}` meets `a`.
pub fn derived_set(space: &Space, a: PointSet) -> PointSet {
    (0..space.n())
        .filter(|&x| space.nbhd(x).without(x).intersects(a))
        .collect()
}

/// `cl int A` as the lower bounds of the maximal points of the space that
/// lie in `a`. Agrees with [`closure_of_interior`] on T0 spaces only.
pub fn closure_of_interior_by_maxima(space: &Space, a: PointSet) -> PointSet {
    let order = space.specialization_order();
    order.down_closure(order.maximal() & a)
}

/// `int cl A` as the points all of whose maximal upper bounds lie in `a`.
/// Agrees with [`interior_of_closure`] on T0 spaces only.
pub fn interior_of_closure_by_maxima(space: &Space, a: PointSet) -> PointSet {
    let order = space.specialization_order();
    let maxima = order.maximal();
    (0..space.n())
        .filter(|&x| (order.above(x) & maxima).is_subset(a))
        .collect()
}

/// Operators computed from the open family only.
pub mod definitional {
    use crate::pointset::PointSet;
    use crate::space::OpenFamily;

    /// Intersection of all closed supersets of `a`.
    pub fn closure(family: &OpenFamily, a: PointSet) -> PointSet {
        let n = family.n();
        family
            .closed_sets()
            .filter(|f| a.is_subset(*f))
            .fold(PointSet::full(n), |acc, f| acc & f)
    }

    /// Union of all open subsets of `a`.
    pub fn interior(family: &OpenFamily, a: PointSet) -> PointSet {
        family
            .opens()
            .iter()
            .filter(|g| g.is_subset(a))
            .fold(PointSet::EMPTY, |acc, &g| acc | g)
    }

    pub fn boundary(family: &OpenFamily, a: PointSet) -> PointSet {
        closure(family, a) - interior(family, a)
    }

    pub fn exterior(family: &OpenFamily, a: PointSet) -> PointSet {
        interior(family, a.complement(family.n()))
    }

    /// `x` such that every open `G ∋ x` has `(G ∖ {x}) ∩ a ≠ ∅`.
    pub fn derived_set(family: &OpenFamily, a: PointSet) -> PointSet {
        (0..family.n())
            .filter(|&x| {
                family
                    .opens()
                    .iter()
                    .filter(|g| g.contains(x))
                    .all(|g| g.without(x).intersects(a))
            })
            .collect()
    }
}

/// Every classification flag of a subset.
///
/// `dense_in_itself` is the strict form `A = d(A)`; `no_isolated_points`
/// is the weaker `A ⊆ d(A)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SetClassification {
    pub open: bool,
    pub closed: bool,
    pub clopen: bool,
    pub semiopen: bool,
    pub preopen: bool,
    pub gamma_open: bool,
    pub dense: bool,
    pub codense: bool,
    pub nowhere_dense: bool,
    pub dense_in_itself: bool,
    pub no_isolated_points: bool,
}

impl SetClassification {
    fn from_parts(
        a: PointSet,
        full: PointSet,
        int: PointSet,
        cl: PointSet,
        clint: PointSet,
        intcl: PointSet,
        derived: PointSet,
    ) -> Self {
        let open = int == a;
        let closed = cl == a;
        SetClassification {
            open,
            closed,
            clopen: open && closed,
            semiopen: a.is_subset(clint),
            preopen: a.is_subset(intcl),
            gamma_open: a.is_subset(clint | intcl),
            dense: cl == full,
            codense: int.is_empty(),
            nowhere_dense: intcl.is_empty(),
            dense_in_itself: a == derived,
            no_isolated_points: a.is_subset(derived),
        }
    }
}

/// Classifies `a` using the order-based operators.
pub fn classify_set(space: &Space, a: PointSet) -> SetClassification {
    let int = interior(space, a);
    let cl = closure(space, a);
    SetClassification::from_parts(
        a,
        space.universe(),
        int,
        cl,
        closure(space, int),
        interior(space, cl),
        derived_set(space, a),
    )
}

/// Classifies `a` using the open family only.
pub fn classify_set_definitional(family: &crate::OpenFamily, a: PointSet) -> SetClassification {
    use definitional as d;
    let int = d::interior(family, a);
    let cl = d::closure(family, a);
    SetClassification::from_parts(
        a,
        PointSet::full(family.n()),
        int,
        cl,
        d::closure(family, int),
        d::interior(family, cl),
        d::derived_set(family, a),
    )
}
