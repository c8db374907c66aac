use thiserror::Error;

use crate::PointSet;

/// Errors raised while building or querying spaces, maps and quotients.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a space needs at least one point")]
    EmptyUniverse,
    #[error("{0} points requested, at most 64 are supported")]
    TooManyPoints(usize),
    #[error("{got} labels given for {expected} points")]
    LabelCount { expected: usize, got: usize },
    #[error("duplicate point label `{0}`")]
    DuplicateLabel(String),
    #[error("set {set:?} has members outside a universe of {n} points")]
    SetOutOfRange { set: PointSet, n: usize },
    #[error("open family must contain the empty set and the whole space")]
    MissingEmptyOrFull,
    #[error("union of open sets {0:?} and {1:?} is not open")]
    NotClosedUnderUnion(PointSet, PointSet),
    #[error("intersection of open sets {0:?} and {1:?} is not open")]
    NotClosedUnderIntersection(PointSet, PointSet),
    #[error("relation is not reflexive at point {0}")]
    NotReflexive(usize),
    #[error("relation is not transitive: {0} <= {1} <= {2} but not {0} <= {2}")]
    NotTransitive(usize, usize, usize),
    #[error("relation matrix is not square")]
    NotSquare,
    #[error("point {0} is not in its own assigned neighbourhood")]
    PointNotInOwnNeighborhood(usize),
    #[error("inconsistent base: {1} lies in the neighbourhood of {0}, but its own neighbourhood is not contained in it")]
    InconsistentBase(usize, usize),
    #[error("wrong number of assignments: expected {expected}, got {got}")]
    AssignmentCount { expected: usize, got: usize },
    #[error("space is not T0")]
    NotT0,
    #[error("point {point} maps to {target}, outside a target of {n} points")]
    ImageOutOfRange { point: usize, target: usize, n: usize },
    #[error("point {0} has an empty image")]
    EmptyImage(usize),
    #[error("target space must be T0 of dimension at most 1")]
    TargetNotOneDimensionalT0,
    #[error("space has too many open sets to materialize the family")]
    FamilyTooLarge,
    #[error("n = {n} is outside the supported range 1..={max}")]
    NOutOfRange { n: usize, max: usize },
    #[error("{0}")]
    Quotient(#[from] crate::quotient::QuotientError),
}

impl Error {
    /// The message with point indices replaced by `labels`.
    pub fn describe(&self, labels: &[String]) -> String {
        let l = |x: &usize| labels.get(*x).cloned().unwrap_or_else(|| x.to_string());
        let set = |s: &PointSet| {
            let names: Vec<String> = s.iter().map(|x| l(&x)).collect();
            format!("{{{}}}", names.join(" "))
        };
        match self {
            Error::NotClosedUnderUnion(a, b) => {
                format!("union of open sets {} and {} is not open", set(a), set(b))
            }
            Error::NotClosedUnderIntersection(a, b) => {
                format!("intersection of open sets {} and {} is not open", set(a), set(b))
            }
            Error::NotReflexive(x) => format!("relation is not reflexive at point {}", l(x)),
            Error::NotTransitive(x, y, z) => format!(
                "relation is not transitive: {} <= {} <= {} but not {} <= {}",
                l(x),
                l(y),
                l(z),
                l(x),
                l(z)
            ),
            Error::PointNotInOwnNeighborhood(x) => {
                format!("point {} is not in its own assigned neighbourhood", l(x))
            }
            Error::InconsistentBase(x, y) => format!(
                "inconsistent base: {} lies in the neighbourhood of {}, but its own neighbourhood is not contained in it",
                l(y),
                l(x)
            ),
            Error::EmptyImage(x) => format!("point {} has an empty image", l(x)),
            other => other.to_string(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
