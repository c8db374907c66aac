//! Shared fixtures for the benchmarks.

use fintop::{PointSet, Preorder, Space};

/// Chain `0 < 1 < .. < n-1`: `U_i = {i, .., n-1}`.
pub fn chain(n: usize) -> Space {
    let nbhd: Vec<PointSet> = (0..n).map(|i| (i..n).collect()).collect();
    Space::from_minbase(labels(n), &nbhd).unwrap()
}

/// Khalimsky-style zigzag on `n` points: even points closed, odd points open.
pub fn zigzag(n: usize) -> Space {
    let nbhd: Vec<PointSet> = (0..n)
        .map(|i| {
            if i % 2 == 1 {
                PointSet::singleton(i)
            } else {
                (i.saturating_sub(1)..=(i + 1).min(n - 1)).collect()
            }
        })
        .collect();
    Space::from_minbase(labels(n), &nbhd).unwrap()
}

/// Disjoint union of `k` copies of the Sierpiński space.
pub fn sierpinski_sum(k: usize) -> Space {
    let nbhd: Vec<PointSet> = (0..2 * k)
        .map(|i| if i % 2 == 0 { PointSet::singleton(i) } else { PointSet::from_indices([i - 1, i]) })
        .collect();
    Space::from_minbase(labels(2 * k), &nbhd).unwrap()
}

pub fn antichain(n: usize) -> Space {
    Space::from_preorder(Preorder::antichain(n), labels(n)).unwrap()
}

/// Deterministic spread of subsets of an `n`-point space.
pub fn sample_sets(n: usize, count: usize) -> Vec<PointSet> {
    let full = PointSet::full(n).bits();
    let mut x: u64 = 0x9e37_79b9_7f4a_7c15;
    (0..count)
        .map(|_| {
            x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            PointSet::from_bits((x >> 7) & full)
        })
        .collect()
}

fn labels(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("p{i}")).collect()
}
