//! Quotients of `[0, 1]` onto finite connected ordered spaces and the
//! multifunctions they induce from piecewise-linear self-maps of `[0, 1]`.
//!
//! Cutting `[0, 1]` at `0 = t₀ < t₁ < … < t_k = 1` and collapsing every cut
//! point and every open gap `(tᵢ, tᵢ₊₁)` to a point gives a COTS on `2k + 1`
//! points. Cut points are closed, gaps are open, and a cut point's minimal
//! neighbourhood is itself plus its adjacent gaps. All arithmetic is exact.

mod interval;
mod pwl;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

pub use interval::{Interval, RationalIntervalSet};
pub use pwl::{Cell, PiecewiseLinear};

use crate::maps::Multifunction;
use crate::pointset::{PointSet, MAX_POINTS};
use crate::space::{default_labels, Space};

/// Exact, normalized rational number.
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuotientError {
    #[error("cuts must start at 0, end at 1 and contain at least two values")]
    CutsNotUnit,
    #[error("values must be strictly increasing")]
    NotStrictlyIncreasing,
    #[error("{0} cuts give more than 64 quotient points")]
    TooManyCuts(usize),
    #[error("a piecewise-linear map needs at least two breakpoints")]
    TooFewBreakpoints,
    #[error("breakpoints must start at 0 and end at 1")]
    DomainNotUnit,
    #[error("value {0} lies outside [0, 1]")]
    ValueOutOfRange(String),
    #[error("{0} lies outside [0, 1]")]
    OutOfDomain(String),
    #[error("cannot parse `{0}` as a rational")]
    BadRational(String),
    #[error("cannot parse breakpoint `{0}`, expected `x:value`")]
    BadBreakpoint(String),
}

/// Parses `p/q` or an integer.
pub fn parse_rational(text: &str) -> Result<Rational, QuotientError> {
    let t = text.trim();
    let bad = || QuotientError::BadRational(t.to_string());
    let (num, den) = match t.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

/// Parses comma-separated cuts such as `0,1/2,1`.
pub fn parse_cuts(text: &str) -> Result<Vec<Rational>, QuotientError> {
    text.split(',').map(parse_rational).collect()
}

/// Parses whitespace-separated `x:value` pairs such as `0:3/4 1/4:1/4 1:1/2`.
pub fn parse_pwl(text: &str) -> Result<PiecewiseLinear, QuotientError> {
    let points = text
        .split_whitespace()
        .map(|tok| {
            let (x, v) = tok
                .split_once(':')
                .ok_or_else(|| QuotientError::BadBreakpoint(tok.to_string()))?;
            Ok((parse_rational(x)?, parse_rational(v)?))
        })
        .collect::<Result<Vec<_>, QuotientError>>()?;
    PiecewiseLinear::new(points)
}

/// The quotient map `π : [0, 1] → Y` onto a finite COTS.
///
/// Point `2i` of [`space`](Self::space) is the cut `tᵢ`; point `2i + 1` is
/// the gap `(tᵢ, tᵢ₊₁)`.
#[derive(Debug, Clone)]
pub struct CotsQuotient {
    cuts: Vec<Rational>,
    space: Space,
}

impl CotsQuotient {
    pub fn new(cuts: Vec<Rational>) -> Result<Self, QuotientError> {
        if cuts.len() < 2 || !cuts[0].is_zero() || !cuts[cuts.len() - 1].is_one() {
            return Err(QuotientError::CutsNotUnit);
        }
        if cuts.windows(2).any(|w| w[0] >= w[1]) {
            return Err(QuotientError::NotStrictlyIncreasing);
        }
        let n = 2 * cuts.len() - 1;
        if n > MAX_POINTS {
            return Err(QuotientError::TooManyCuts(cuts.len()));
        }
        let nbhd: Vec<PointSet> = (0..n)
            .map(|p| {
                if p % 2 == 1 {
                    PointSet::singleton(p)
                } else {
                    let mut u = PointSet::singleton(p);
                    if p > 0 {
                        u.insert(p - 1);
                    }
                    if p + 1 < n {
                        u.insert(p + 1);
                    }
                    u
                }
            })
            .collect();
        let space = Space::from_minbase(default_labels(n), &nbhd)
            .expect("cut/gap neighbourhoods are consistent");
        Ok(CotsQuotient { cuts, space })
    }

    /// Evenly spaced cuts `0, 1/k, .., 1`.
    pub fn uniform(k: usize) -> Result<Self, QuotientError> {
        let k = k.max(1);
        Self::new(
            (0..=k)
                .map(|i| Rational::new(BigInt::from(i), BigInt::from(k)))
                .collect(),
        )
    }

    pub fn cuts(&self) -> &[Rational] {
        &self.cuts
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    /// `π⁻¹(point)`.
    pub fn fibre(&self, point: usize) -> Cell {
        let i = point / 2;
        if point.is_multiple_of(2) {
            Cell::Point(self.cuts[i].clone())
        } else {
            Cell::Open(self.cuts[i].clone(), self.cuts[i + 1].clone())
        }
    }

    /// `π(x)` for `x ∈ [0, 1]`.
    pub fn project_point(&self, x: &Rational) -> Result<usize, QuotientError> {
        if *x < Rational::zero() || *x > Rational::one() {
            return Err(QuotientError::OutOfDomain(x.to_string()));
        }
        Ok(match self.cuts.binary_search(x) {
            Ok(i) => 2 * i,
            Err(i) => 2 * i - 1,
        })
    }

    /// Points of the quotient whose fibre meets `set`.
    pub fn project(&self, set: &RationalIntervalSet) -> PointSet {
        (0..self.space.n())
            .filter(|&p| match self.fibre(p) {
                Cell::Point(t) => set.contains(&t),
                Cell::Open(l, r) => set.intersects(&Interval::open(l, r).unwrap()),
            })
            .collect()
    }

    /// `g(y) = π f π⁻¹(y)` on the quotient.
    pub fn induced_multifunction(&self, f: &PiecewiseLinear) -> Multifunction<'_> {
        let image = (0..self.space.n())
            .map(|p| self.project(&f.image_of_cell(&self.fibre(p))))
            .collect();
        Multifunction::new(&self.space, &self.space, image)
            .expect("cells have nonempty images inside [0, 1]")
    }
}

/// Free-function form of [`CotsQuotient::induced_multifunction`].
pub fn induced_multifunction<'q>(f: &PiecewiseLinear, q: &'q CotsQuotient) -> Multifunction<'q> {
    q.induced_multifunction(f)
}

/// Free-function form of [`PiecewiseLinear::image_of_cell`].
pub fn image_of_cell(f: &PiecewiseLinear, cell: &Cell) -> RationalIntervalSet {
    f.image_of_cell(cell)
}

/// Free-function form of [`CotsQuotient::project`].
pub fn project(q: &CotsQuotient, set: &RationalIntervalSet) -> PointSet {
    q.project(set)
}
