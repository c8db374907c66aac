//! Maps between finite spaces: continuity and its weak forms, openness and
//! its weak forms, upper and lower semicontinuity of multifunctions, and the
//! open-map theorem check for quotient-like maps onto one-dimensional T0
//! spaces.
//!
//! Weak continuity and openness classes are checked on the minimal base
//! only. Preopen, semiopen and γ-open sets are closed under unions, and
//! preimages (images) of unions are unions of preimages (images), so the
//! minimal base suffices. The `*_definitional` variants quantify over the
//! whole open family and exist to cross-check that reduction.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::operators::{classify_set, classify_set_definitional, SetClassification};
use crate::pointset::PointSet;
use crate::properties;
use crate::space::Space;

/// A total function between the point sets of two spaces.
#[derive(Debug, Clone)]
pub struct PointFunction<'a> {
    source: &'a Space,
    target: &'a Space,
    image: Vec<usize>,
}

impl<'a> PointFunction<'a> {
    pub fn new(source: &'a Space, target: &'a Space, image: Vec<usize>) -> Result<Self> {
        if image.len() != source.n() {
            return Err(Error::AssignmentCount {
                expected: source.n(),
                got: image.len(),
            });
        }
        if let Some((point, &t)) = image.iter().enumerate().find(|(_, &t)| t >= target.n()) {
            return Err(Error::ImageOutOfRange {
                point,
                target: t,
                n: target.n(),
            });
        }
        Ok(PointFunction {
            source,
            target,
            image,
        })
    }

    pub fn identity(space: &'a Space) -> Self {
        PointFunction {
            source: space,
            target: space,
            image: (0..space.n()).collect(),
        }
    }

    pub fn source(&self) -> &'a Space {
        self.source
    }

    pub fn target(&self) -> &'a Space {
        self.target
    }

    pub fn apply(&self, x: usize) -> usize {
        self.image[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.image
    }

    pub fn image_of(&self, set: PointSet) -> PointSet {
        set.iter().map(|x| self.image[x]).collect()
    }

    pub fn preimage_of(&self, set: PointSet) -> PointSet {
        (0..self.source.n())
            .filter(|&x| set.contains(self.image[x]))
            .collect()
    }
}

/// Points `x` where `f(U_x) ⊄ U_{f(x)}`.
pub fn continuity_failures(f: &PointFunction) -> Vec<usize> {
    (0..f.source.n())
        .filter(|&x| !f.image_of(f.source.nbhd(x)).is_subset(f.target.nbhd(f.apply(x))))
        .collect()
}

/// `f(U_x) ⊆ U_{f(x)}` at every point.
pub fn is_continuous(f: &PointFunction) -> bool {
    continuity_failures(f).is_empty()
}

/// Preimage of every target open set is open in the source.
pub fn is_continuous_definitional(f: &PointFunction) -> Result<bool> {
    let src = f.source.try_open_family()?;
    let dst = f.target.try_open_family()?;
    Ok(dst.opens().iter().all(|&v| src.contains(f.preimage_of(v))))
}

/// Which of the weak continuity notions hold.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ContinuityClass {
    pub continuous: bool,
    pub precontinuous: bool,
    pub semicontinuous: bool,
    pub gamma_continuous: bool,
}

impl ContinuityClass {
    fn fold(classes: impl Iterator<Item = SetClassification>) -> Self {
        let mut out = ContinuityClass {
            continuous: true,
            precontinuous: true,
            semicontinuous: true,
            gamma_continuous: true,
        };
        for c in classes {
            out.continuous &= c.open;
            out.precontinuous &= c.preopen;
            out.semicontinuous &= c.semiopen;
            out.gamma_continuous &= c.gamma_open;
        }
        out
    }
}

/// Classifies the preimages of the target's minimal neighbourhoods.
pub fn continuity_class(f: &PointFunction) -> ContinuityClass {
    ContinuityClass::fold(
        f.target
            .minimal_base()
            .into_iter()
            .map(|u| classify_set(f.source, f.preimage_of(u))),
    )
}

/// Classifies the preimage of every target open set.
pub fn continuity_class_definitional(f: &PointFunction) -> Result<ContinuityClass> {
    let src = f.source.try_open_family()?;
    let dst = f.target.try_open_family()?;
    Ok(ContinuityClass::fold(
        dst.opens()
            .iter()
            .map(|&v| classify_set_definitional(src, f.preimage_of(v))),
    ))
}

/// Which of the weak openness notions hold.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct OpennessClass {
    pub open: bool,
    pub preopen: bool,
    pub semiopen: bool,
    pub gamma_open: bool,
}

impl OpennessClass {
    fn fold(classes: impl Iterator<Item = SetClassification>) -> Self {
        let mut out = OpennessClass {
            open: true,
            preopen: true,
            semiopen: true,
            gamma_open: true,
        };
        for c in classes {
            out.open &= c.open;
            out.preopen &= c.preopen;
            out.semiopen &= c.semiopen;
            out.gamma_open &= c.gamma_open;
        }
        out
    }
}

/// Classifies the images of the source's minimal neighbourhoods.
pub fn openness_class(f: &PointFunction) -> OpennessClass {
    OpennessClass::fold(
        f.source
            .minimal_base()
            .into_iter()
            .map(|u| classify_set(f.target, f.image_of(u))),
    )
}

/// Classifies the image of every source open set.
pub fn openness_class_definitional(f: &PointFunction) -> Result<OpennessClass> {
    let src = f.source.try_open_family()?;
    let dst = f.target.try_open_family()?;
    Ok(OpennessClass::fold(
        src.opens()
            .iter()
            .map(|&g| classify_set_definitional(dst, f.image_of(g))),
    ))
}

pub fn is_open_map(f: &PointFunction) -> bool {
    f.source
        .nbhds()
        .iter()
        .all(|&u| f.target.is_open(f.image_of(u)))
}

/// Images of closed sets are closed. Closed sets are unions of point
/// closures, so those suffice.
pub fn is_closed_map(f: &PointFunction) -> bool {
    let order = f.source.specialization_order();
    (0..f.source.n()).all(|x| f.target.is_closed(f.image_of(order.below(x))))
}

/// Outcome of checking the open-map theorem on a concrete map.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct OpenMapCheck {
    pub continuous: bool,
    /// Every closed point of the target has exactly one preimage.
    pub closed_fibres_singleton: bool,
    /// For every closed `y` and open point `z ∈ U_y`,
    /// `f⁻¹(y) ⊆ cl f⁻¹(z)`.
    pub closure_condition: bool,
    pub hypotheses_hold: bool,
    pub is_open: bool,
    pub is_closed: bool,
}

/// Evaluates the hypotheses and the conclusion of the open-map theorem
/// independently. Requires a T0 target of dimension at most 1.
pub fn check_open_map_theorem(f: &PointFunction) -> Result<OpenMapCheck> {
    let target = f.target;
    if !properties::is_t0(target) || properties::dimension_inductive(target) > 1 {
        return Err(Error::TargetNotOneDimensionalT0);
    }
    let closed = properties::closed_points(target);
    let open = properties::open_points(target);
    let continuous = is_continuous(f);
    let closed_fibres_singleton = closed
        .iter()
        .all(|y| f.preimage_of(PointSet::singleton(y)).len() == 1);
    let closure_condition = closed.iter().all(|y| {
        let fibre = f.preimage_of(PointSet::singleton(y));
        (target.nbhd(y) & open).iter().all(|z| {
            let cl = crate::operators::closure(f.source, f.preimage_of(PointSet::singleton(z)));
            fibre.is_subset(cl)
        })
    });
    Ok(OpenMapCheck {
        continuous,
        closed_fibres_singleton,
        closure_condition,
        hypotheses_hold: continuous && closed_fibres_singleton && closure_condition,
        is_open: is_open_map(f),
        is_closed: is_closed_map(f),
    })
}

/// A set-valued map with nonempty values.
#[derive(Debug, Clone)]
pub struct Multifunction<'a> {
    source: &'a Space,
    target: &'a Space,
    image: Vec<PointSet>,
}

impl<'a> Multifunction<'a> {
    pub fn new(source: &'a Space, target: &'a Space, image: Vec<PointSet>) -> Result<Self> {
        if image.len() != source.n() {
            return Err(Error::AssignmentCount {
                expected: source.n(),
                got: image.len(),
            });
        }
        for (x, &v) in image.iter().enumerate() {
            if v.is_empty() {
                return Err(Error::EmptyImage(x));
            }
            if !v.fits(target.n()) {
                return Err(Error::SetOutOfRange {
                    set: v,
                    n: target.n(),
                });
            }
        }
        Ok(Multifunction {
            source,
            target,
            image,
        })
    }

    /// `x ↦ {f(x)}`.
    pub fn from_function(f: &PointFunction<'a>) -> Self {
        Multifunction {
            source: f.source,
            target: f.target,
            image: f.image.iter().map(|&y| PointSet::singleton(y)).collect(),
        }
    }

    /// The underlying function when every value is a singleton.
    pub fn as_function(&self) -> Option<PointFunction<'a>> {
        let image = self
            .image
            .iter()
            .map(|v| (v.len() == 1).then(|| v.first().unwrap()))
            .collect::<Option<Vec<_>>>()?;
        Some(PointFunction {
            source: self.source,
            target: self.target,
            image,
        })
    }

    pub fn source(&self) -> &'a Space {
        self.source
    }

    pub fn target(&self) -> &'a Space {
        self.target
    }

    pub fn value(&self, x: usize) -> PointSet {
        self.image[x]
    }

    pub fn values(&self) -> &[PointSet] {
        &self.image
    }

    /// `F(S) = ⋃_{x ∈ S} F(x)`.
    pub fn image_of(&self, set: PointSet) -> PointSet {
        set.iter().fold(PointSet::EMPTY, |acc, x| acc | self.image[x])
    }

    /// `⋃_{y ∈ F(x)} U_y`, the smallest open set containing `F(x)`.
    fn value_hull(&self, x: usize) -> PointSet {
        self.image[x]
            .iter()
            .fold(PointSet::EMPTY, |acc, y| acc | self.target.nbhd(y))
    }
}

/// Upper semicontinuity failure at `point`: `F(U_x)` escapes the smallest
/// open set around `F(x)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct UscFailure {
    pub point: usize,
    pub image_of_nbhd: PointSet,
    pub bound: PointSet,
}

/// Lower semicontinuity failure at `point`: `F(neighbour) ∩ U_y = ∅` for a
/// `neighbour ∈ U_x` and `y ∈ F(x)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LscFailure {
    pub point: usize,
    pub neighbour: usize,
    pub value: usize,
}

pub fn usc_failures(f: &Multifunction) -> Vec<UscFailure> {
    (0..f.source.n())
        .filter_map(|x| {
            let image_of_nbhd = f.image_of(f.source.nbhd(x));
            let bound = f.value_hull(x);
            (!image_of_nbhd.is_subset(bound)).then_some(UscFailure {
                point: x,
                image_of_nbhd,
                bound,
            })
        })
        .collect()
}

pub fn lsc_failures(f: &Multifunction) -> Vec<LscFailure> {
    let mut out = Vec::new();
    for x in 0..f.source.n() {
        for neighbour in f.source.nbhd(x).iter() {
            for value in f.image[x].iter() {
                if !f.image[neighbour].intersects(f.target.nbhd(value)) {
                    out.push(LscFailure {
                        point: x,
                        neighbour,
                        value,
                    });
                }
            }
        }
    }
    out
}

/// `F(U_x) ⊆ ⋃_{y ∈ F(x)} U_y` at every point.
pub fn is_usc(f: &Multifunction) -> bool {
    usc_failures(f).is_empty()
}

/// `F(x') ∩ U_y ≠ ∅` for all `x' ∈ U_x`, `y ∈ F(x)`, at every point.
pub fn is_lsc(f: &Multifunction) -> bool {
    lsc_failures(f).is_empty()
}

/// Points where upper semicontinuity fails, quantifying over all open sets:
/// some open `V ⊇ F(x)` admits no open `U ∋ x` with `F(U) ⊆ V`.
pub fn usc_failure_points_definitional(f: &Multifunction) -> Result<PointSet> {
    let src = f.source.try_open_family()?;
    let dst = f.target.try_open_family()?;
    Ok((0..f.source.n())
        .filter(|&x| {
            dst.opens().iter().any(|&v| {
                f.image[x].is_subset(v)
                    && !src
                        .opens()
                        .iter()
                        .any(|&u| u.contains(x) && f.image_of(u).is_subset(v))
            })
        })
        .collect())
}

/// Points where lower semicontinuity fails, quantifying over all open sets:
/// some open `V` meeting `F(x)` admits no open `U ∋ x` whose every point
/// has a value meeting `V`.
pub fn lsc_failure_points_definitional(f: &Multifunction) -> Result<PointSet> {
    let src = f.source.try_open_family()?;
    let dst = f.target.try_open_family()?;
    Ok((0..f.source.n())
        .filter(|&x| {
            dst.opens().iter().any(|&v| {
                f.image[x].intersects(v)
                    && !src.opens().iter().any(|&u| {
                        u.contains(x) && u.iter().all(|p| f.image[p].intersects(v))
                    })
            })
        })
        .collect())
}

pub fn is_usc_definitional(f: &Multifunction) -> Result<bool> {
    Ok(usc_failure_points_definitional(f)?.is_empty())
}

pub fn is_lsc_definitional(f: &Multifunction) -> Result<bool> {
    Ok(lsc_failure_points_definitional(f)?.is_empty())
}
