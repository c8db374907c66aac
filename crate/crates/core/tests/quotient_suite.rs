use fintop::maps::{is_lsc, is_usc, usc_failures};
use fintop::properties::{dimension_inductive, is_cots, is_t0, is_t_half};
use fintop::quotient::{parse_cuts, parse_pwl, Cell, Interval, RationalIntervalSet};
use fintop::{CotsQuotient, PiecewiseLinear, PointSet, Rational};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn r(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

fn sorted_distinct(mut xs: Vec<Rational>) -> Vec<Rational> {
    xs.sort();
    xs.dedup();
    xs
}

/// Random rationals strictly inside (0, 1) with small denominators.
fn interior_points(rng: &mut ChaCha8Rng, count: usize) -> Vec<Rational> {
    (0..count)
        .map(|_| {
            let q = rng.random_range(2..=12);
            r(rng.random_range(1..q), q)
        })
        .collect()
}

fn random_cuts(rng: &mut ChaCha8Rng) -> Vec<Rational> {
    let k = rng.random_range(0..=5);
    let mut cuts = vec![r(0, 1), r(1, 1)];
    cuts.extend(interior_points(rng, k));
    sorted_distinct(cuts)
}

fn random_pwl(rng: &mut ChaCha8Rng) -> PiecewiseLinear {
    let k = rng.random_range(0..=6);
    let mut xs = vec![r(0, 1), r(1, 1)];
    xs.extend(interior_points(rng, k));
    let xs = sorted_distinct(xs);
    let points = xs
        .into_iter()
        .map(|x| {
            let q = rng.random_range(1..=8);
            (x, r(rng.random_range(0..=q), q))
        })
        .collect();
    PiecewiseLinear::new(points).unwrap()
}

fn fibre_set(cell: &Cell) -> RationalIntervalSet {
    match cell {
        Cell::Point(t) => RationalIntervalSet::point(t.clone()),
        Cell::Open(l, h) => RationalIntervalSet::from_intervals([Interval::open(l.clone(), h.clone()).unwrap()]),
    }
}

fn project(cuts: &[Rational], y: &Rational) -> usize {
    match cuts.binary_search(y) {
        Ok(i) => 2 * i,
        Err(i) => 2 * i - 1,
    }
}

/// `π f π⁻¹(p)` by sampling. Between consecutive samples `f` is linear and
/// crosses no cut, so the midpoint stands for the whole open segment.
fn sampled_image(f: &PiecewiseLinear, cuts: &[Rational], cell: &Cell) -> PointSet {
    let (lo, hi) = match cell {
        Cell::Point(t) => {
            return PointSet::singleton(project(cuts, &f.evaluate(t).unwrap()));
        }
        Cell::Open(l, h) => (l.clone(), h.clone()),
    };
    let bp = f.breakpoints();
    let vals = f.values();
    let mut xs: Vec<Rational> = bp.iter().filter(|x| **x > lo && **x < hi).cloned().collect();
    for i in 0..bp.len() - 1 {
        let (x0, x1, y0, y1) = (&bp[i], &bp[i + 1], &vals[i], &vals[i + 1]);
        if y0 == y1 {
            continue;
        }
        for c in cuts {
            let between = (c >= y0 && c <= y1) || (c <= y0 && c >= y1);
            if between {
                let x = x0 + (x1 - x0) * (c - y0) / (y1 - y0);
                if x > lo && x < hi {
                    xs.push(x);
                }
            }
        }
    }
    xs.push(lo);
    xs.push(hi);
    let xs = sorted_distinct(xs);
    let mut samples: Vec<Rational> = xs[1..xs.len() - 1].to_vec();
    samples.extend(xs.windows(2).map(|w| (&w[0] + &w[1]) / r(2, 1)));
    samples
        .iter()
        .map(|x| project(cuts, &f.evaluate(x).unwrap()))
        .collect()
}

fn worked_constructions() -> Vec<(CotsQuotient, PiecewiseLinear)> {
    ["0:1/2 1/2:1 1:1", "0:3/4 1/4:1/4 1:1/2", "0:1 1/2:0 1:1"]
        .iter()
        .map(|f| {
            (
                CotsQuotient::new(parse_cuts("0,1/2,1").unwrap()).unwrap(),
                parse_pwl(f).unwrap(),
            )
        })
        .collect()
}

fn random_constructions(count: usize, seed: u64) -> Vec<(CotsQuotient, PiecewiseLinear)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| (CotsQuotient::new(random_cuts(&mut rng)).unwrap(), random_pwl(&mut rng)))
        .collect()
}

#[test]
fn induced_images_match_sampling() {
    for (q, f) in worked_constructions().into_iter().chain(random_constructions(300, 1)) {
        let g = q.induced_multifunction(&f);
        for p in 0..q.space().n() {
            assert_eq!(
                g.value(p),
                sampled_image(&f, q.cuts(), &q.fibre(p)),
                "point {p}, cuts {:?}, f {:?}",
                q.cuts(),
                f
            );
        }
    }
}

#[test]
fn induced_multifunction_is_lsc() {
    let mut checked = 0;
    let mut non_usc = 0;
    for (q, f) in worked_constructions().into_iter().chain(random_constructions(100, 2)) {
        let g = q.induced_multifunction(&f);
        assert!(is_lsc(&g), "cuts {:?}, f {:?}", q.cuts(), f);
        non_usc += usize::from(!is_usc(&g));
        checked += 1;
    }
    assert_eq!(checked, 103);
    assert!(non_usc > 0);
}

#[test]
fn projection_commutes_with_the_map() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for (q, f) in random_constructions(100, 4) {
        let g = q.induced_multifunction(&f);
        for _ in 0..50 {
            let d = rng.random_range(1..=60);
            let x = r(rng.random_range(0..=d), d);
            let fx = f.evaluate(&x).unwrap();
            let px = q.project_point(&x).unwrap();
            assert!(g.value(px).contains(q.project_point(&fx).unwrap()));
        }
        for (i, t) in q.cuts().iter().enumerate() {
            let p = q.project_point(t).unwrap();
            assert_eq!(p, 2 * i);
            assert!(g.value(p).contains(q.project_point(&f.evaluate(t).unwrap()).unwrap()));
        }
    }
}

#[test]
fn projecting_a_fibre_gives_its_point() {
    for (q, _) in random_constructions(50, 5) {
        for p in 0..q.space().n() {
            assert_eq!(q.project(&fibre_set(&q.fibre(p))), PointSet::singleton(p));
        }
        assert!(q.project(&RationalIntervalSet::empty()).is_empty());
    }
}

#[test]
fn quotient_spaces_are_one_dimensional_cots() {
    for k in 1..=20 {
        let q = CotsQuotient::uniform(k).unwrap();
        let s = q.space();
        assert_eq!(s.n(), 2 * k + 1);
        assert!(is_cots(s) && is_t0(s) && is_t_half(s));
        assert_eq!(dimension_inductive(s), 1);
    }
    for (q, _) in random_constructions(30, 6) {
        assert!(is_cots(q.space()));
        assert_eq!(dimension_inductive(q.space()), 1);
    }
}

#[test]
fn worked_constructions_reproduce_their_tables() {
    let tables = [
        vec![vec![2], vec![3], vec![4], vec![4], vec![4]],
        vec![vec![3], vec![1, 2, 3], vec![1], vec![1], vec![2]],
        vec![vec![4], vec![1, 2, 3], vec![0], vec![1, 2, 3], vec![4]],
    ];
    for ((q, f), table) in worked_constructions().iter().zip(tables) {
        let g = q.induced_multifunction(f);
        let got: Vec<Vec<usize>> = g.values().iter().map(|v| v.iter().collect()).collect();
        assert_eq!(got, table);
    }
    let (q, f) = &worked_constructions()[1];
    let g = q.induced_multifunction(f);
    let w = usc_failures(&g);
    assert_eq!(w[0].point, 0);
    assert_eq!(w[0].image_of_nbhd, PointSet::from_indices([1, 2, 3]));
    assert_eq!(w[0].bound, PointSet::singleton(3));
}
