use num_traits::{One, Zero};

use super::interval::{Interval, RationalIntervalSet};
use super::{QuotientError, Rational};

/// A continuous piecewise-linear self-map of `[0, 1]`, given by its values
/// at strictly increasing breakpoints from `0` to `1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiecewiseLinear {
    breakpoints: Vec<Rational>,
    values: Vec<Rational>,
}

/// A cell of a subdivision of `[0, 1]`: a single point or an open interval.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Cell {
    Point(Rational),
    Open(Rational, Rational),
}

impl PiecewiseLinear {
    pub fn new(points: Vec<(Rational, Rational)>) -> Result<Self, QuotientError> {
        if points.len() < 2 {
            return Err(QuotientError::TooFewBreakpoints);
        }
        let (breakpoints, values): (Vec<_>, Vec<_>) = points.into_iter().unzip();
        if !breakpoints[0].is_zero() || !breakpoints[breakpoints.len() - 1].is_one() {
            return Err(QuotientError::DomainNotUnit);
        }
        if breakpoints.windows(2).any(|w| w[0] >= w[1]) {
            return Err(QuotientError::NotStrictlyIncreasing);
        }
        let unit = Interval::closed(Rational::zero(), Rational::one()).unwrap();
        if let Some(v) = values.iter().find(|v| !unit.contains(v)) {
            return Err(QuotientError::ValueOutOfRange(v.to_string()));
        }
        Ok(PiecewiseLinear {
            breakpoints,
            values,
        })
    }

    pub fn breakpoints(&self) -> &[Rational] {
        &self.breakpoints
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    /// Exact linear interpolation between the bracketing breakpoints.
    pub fn evaluate(&self, x: &Rational) -> Result<Rational, QuotientError> {
        if *x < Rational::zero() || *x > Rational::one() {
            return Err(QuotientError::OutOfDomain(x.to_string()));
        }
        match self.breakpoints.binary_search(x) {
            Ok(i) => Ok(self.values[i].clone()),
            Err(i) => {
                let (x0, x1) = (&self.breakpoints[i - 1], &self.breakpoints[i]);
                let (y0, y1) = (&self.values[i - 1], &self.values[i]);
                Ok(y0 + (y1 - y0) * (x - x0) / (x1 - x0))
            }
        }
    }

    /// Exact image of a cell.
    ///
    /// An open cell is cut at the breakpoints it contains. Each piece is
    /// linear, so its image is an interval (or a point when the piece is
    /// constant) whose ends inherit openness from the piece's ends: interior
    /// breakpoints are attained, the cell's own ends are not.
    pub fn image_of_cell(&self, cell: &Cell) -> RationalIntervalSet {
        match cell {
            Cell::Point(t) => RationalIntervalSet::point(
                self.evaluate(t).expect("cell point lies in [0, 1]"),
            ),
            Cell::Open(l, r) => {
                let mut cuts = vec![l.clone()];
                cuts.extend(self.breakpoints.iter().filter(|b| *b > l && *b < r).cloned());
                cuts.push(r.clone());
                let values: Vec<Rational> = cuts
                    .iter()
                    .map(|c| self.evaluate(c).expect("cell lies in [0, 1]"))
                    .collect();
                let last = cuts.len() - 1;
                let pieces = (0..last).map(|i| {
                    let p_in = i != 0;
                    let q_in = i + 1 != last;
                    let (vp, vq) = (values[i].clone(), values[i + 1].clone());
                    if vp == vq {
                        Interval::point(vp)
                    } else if vp < vq {
                        Interval::new(vp, vq, p_in, q_in).unwrap()
                    } else {
                        Interval::new(vq, vp, q_in, p_in).unwrap()
                    }
                });
                RationalIntervalSet::from_intervals(pieces)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(p: i64, q: i64) -> Rational {
        Rational::new(p.into(), q.into())
    }

    fn shift_then_flat() -> PiecewiseLinear {
        PiecewiseLinear::new(vec![(r(0, 1), r(1, 2)), (r(1, 2), r(1, 1)), (r(1, 1), r(1, 1))])
            .unwrap()
    }

    fn fold_then_rise() -> PiecewiseLinear {
        PiecewiseLinear::new(vec![(r(0, 1), r(3, 4)), (r(1, 4), r(1, 4)), (r(1, 1), r(1, 2))])
            .unwrap()
    }

    #[test]
    fn evaluate_examples() {
        assert_eq!(shift_then_flat().evaluate(&r(0, 1)).unwrap(), r(1, 2));
        assert_eq!(fold_then_rise().evaluate(&r(1, 2)).unwrap(), r(1, 3));
        assert_eq!(fold_then_rise().evaluate(&r(1, 4)).unwrap(), r(1, 4));
        assert_eq!(fold_then_rise().evaluate(&r(1, 8)).unwrap(), r(1, 2));
    }

    #[test]
    fn evaluate_out_of_domain() {
        assert!(matches!(
            shift_then_flat().evaluate(&r(3, 2)),
            Err(QuotientError::OutOfDomain(_))
        ));
        assert!(shift_then_flat().evaluate(&r(-1, 2)).is_err());
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            PiecewiseLinear::new(vec![(r(0, 1), r(0, 1))]),
            Err(QuotientError::TooFewBreakpoints)
        );
        assert_eq!(
            PiecewiseLinear::new(vec![(r(0, 1), r(0, 1)), (r(1, 2), r(0, 1))]),
            Err(QuotientError::DomainNotUnit)
        );
        assert_eq!(
            PiecewiseLinear::new(vec![(r(0, 1), r(0, 1)), (r(0, 1), r(0, 1)), (r(1, 1), r(0, 1))]),
            Err(QuotientError::NotStrictlyIncreasing)
        );
        assert!(matches!(
            PiecewiseLinear::new(vec![(r(0, 1), r(-1, 1)), (r(1, 1), r(0, 1))]),
            Err(QuotientError::ValueOutOfRange(_))
        ));
    }

    #[test]
    fn image_of_open_cell_tracks_attained_endpoint() {
        let img = fold_then_rise().image_of_cell(&Cell::Open(r(0, 1), r(1, 2)));
        let expected = RationalIntervalSet::from_intervals([Interval::new(
            r(1, 4),
            r(3, 4),
            true,
            false,
        )
        .unwrap()]);
        assert_eq!(img, expected);
    }

    #[test]
    fn image_of_constant_piece_is_a_point() {
        let img = shift_then_flat().image_of_cell(&Cell::Open(r(1, 2), r(1, 1)));
        assert_eq!(img, RationalIntervalSet::point(r(1, 1)));
        let c = PiecewiseLinear::new(vec![(r(0, 1), r(1, 3)), (r(1, 1), r(1, 3))]).unwrap();
        assert_eq!(
            c.image_of_cell(&Cell::Open(r(1, 5), r(2, 5))),
            RationalIntervalSet::point(r(1, 3))
        );
    }

    #[test]
    fn image_of_point_cell() {
        assert_eq!(
            shift_then_flat().image_of_cell(&Cell::Point(r(1, 4))),
            RationalIntervalSet::point(r(3, 4))
        );
    }
}
