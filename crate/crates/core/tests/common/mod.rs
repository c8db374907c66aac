//! Brute-force oracles on raw bitmasks. Nothing here calls the library's
//! algorithms; spaces are handed over only through their open families.

#![allow(dead_code)]

use fintop::{PointSet, Space};

pub fn full(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Every topology on `n` points, found by filtering all set families that
/// contain the empty set and the whole space.
pub fn all_topologies(n: usize) -> Vec<Vec<u64>> {
    let x = full(n);
    let middle: Vec<u64> = (1..x).collect();
    let m = middle.len();
    let mut out = Vec::new();
    for pick in 0u64..(1u64 << m) {
        let mut fam = vec![0, x];
        for (i, &s) in middle.iter().enumerate() {
            if pick >> i & 1 == 1 {
                fam.push(s);
            }
        }
        let closed = fam.iter().all(|&a| {
            fam.iter()
                .all(|&b| fam.contains(&(a | b)) && fam.contains(&(a & b)))
        });
        if closed {
            fam.sort_unstable();
            out.push(fam);
        }
    }
    out
}

pub fn to_space(n: usize, fam: &[u64]) -> Space {
    let labels = (0..n).map(|i| format!("p{i}")).collect();
    Space::from_opens(labels, fam.iter().map(|&b| PointSet::from_bits(b))).unwrap()
}

pub fn closure(n: usize, fam: &[u64], a: u64) -> u64 {
    fam.iter()
        .map(|&o| full(n) & !o)
        .filter(|&c| a & !c == 0)
        .fold(full(n), |acc, c| acc & c)
}

pub fn interior(fam: &[u64], a: u64) -> u64 {
    fam.iter().filter(|&&o| o & !a == 0).fold(0, |acc, &o| acc | o)
}

pub fn is_open(fam: &[u64], a: u64) -> bool {
    fam.contains(&a)
}

pub fn is_closed(n: usize, fam: &[u64], a: u64) -> bool {
    fam.contains(&(full(n) & !a))
}

/// Points every open neighbourhood of which meets `a` away from the point.
pub fn derived(n: usize, fam: &[u64], a: u64) -> u64 {
    (0..n)
        .filter(|&x| {
            fam.iter()
                .filter(|&&o| o >> x & 1 == 1)
                .all(|&o| o & a & !(1 << x) != 0)
        })
        .fold(0, |acc, x| acc | 1 << x)
}

/// Smallest open set containing `x`.
pub fn min_nbhd(n: usize, fam: &[u64], x: usize) -> u64 {
    fam.iter()
        .filter(|&&o| o >> x & 1 == 1)
        .fold(full(n), |acc, &o| acc & o)
}

pub fn family_is_t0(n: usize, fam: &[u64]) -> bool {
    (0..n).all(|x| {
        (0..x).all(|y| fam.iter().any(|&o| (o >> x & 1) != (o >> y & 1)))
    })
}

pub fn subsets(n: usize) -> impl Iterator<Item = u64> {
    0..=full(n)
}

/// Subspace topology on `set`, reindexed to `0..|set|`.
pub fn family_subspace(n: usize, fam: &[u64], set: u64) -> (usize, Vec<u64>) {
    let idx: Vec<usize> = (0..n).filter(|&i| set >> i & 1 == 1).collect();
    let squash = |o: u64| {
        idx.iter()
            .enumerate()
            .filter(|(_, &i)| o >> i & 1 == 1)
            .fold(0u64, |acc, (j, _)| acc | 1 << j)
    };
    let mut sub: Vec<u64> = fam.iter().map(|&o| squash(o & set)).collect();
    sub.sort_unstable();
    sub.dedup();
    (idx.len(), sub)
}

/// Small inductive dimension straight from the definition: the least `d`
/// such that some base consists of opens with boundaries of dimension
/// at most `d - 1`. Searches all subfamilies of the open family.
pub fn dimension(n: usize, fam: &[u64]) -> i32 {
    if n == 0 {
        return -1;
    }
    let nonempty: Vec<u64> = fam.iter().copied().filter(|&o| o != 0).collect();
    let bdim: Vec<i32> = nonempty
        .iter()
        .map(|&o| {
            let b = closure(n, fam, o) & !o;
            let (m, sub) = family_subspace(n, fam, b);
            dimension(m, &sub)
        })
        .collect();
    let mut best = i32::MAX;
    for pick in 1u64..(1u64 << nonempty.len()) {
        let chosen: Vec<usize> = (0..nonempty.len()).filter(|&i| pick >> i & 1 == 1).collect();
        // A base: every open is the union of the chosen members inside it.
        let is_base = fam.iter().all(|&o| {
            chosen
                .iter()
                .map(|&i| nonempty[i])
                .filter(|&b| b & !o == 0)
                .fold(0, |acc, b| acc | b)
                == o
        });
        if is_base {
            let d = chosen.iter().map(|&i| bdim[i] + 1).max().unwrap();
            best = best.min(d);
        }
    }
    best
}

/// Longest strict chain under `U_y ⊊ U_x`, for T0 families.
pub fn height(n: usize, fam: &[u64]) -> usize {
    let u: Vec<u64> = (0..n).map(|x| min_nbhd(n, fam, x)).collect();
    fn longest(x: usize, u: &[u64], memo: &mut Vec<Option<usize>>) -> usize {
        if let Some(h) = memo[x] {
            return h;
        }
        let h = 1 + (0..u.len())
            .filter(|&y| y != x && u[y] & !u[x] == 0 && u[y] != u[x])
            .map(|y| longest(y, u, memo))
            .max()
            .unwrap_or(0);
        memo[x] = Some(h);
        h
    }
    let mut memo = vec![None; n];
    (0..n).map(|x| longest(x, &u, &mut memo)).max().unwrap_or(0)
}

/// Components from clopen sets: two points share a component when no
/// clopen set separates them.
pub fn components(n: usize, fam: &[u64]) -> Vec<u64> {
    let clopens: Vec<u64> = fam.iter().copied().filter(|&o| is_closed(n, fam, o)).collect();
    let mut seen = 0u64;
    let mut out = Vec::new();
    for x in 0..n {
        if seen >> x & 1 == 1 {
            continue;
        }
        let comp = clopens
            .iter()
            .filter(|&&c| c >> x & 1 == 1)
            .fold(full(n), |acc, &c| acc & c);
        seen |= comp;
        out.push(comp);
    }
    out
}

/// Every permutation of `0..n`.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                rec(cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

pub fn permute_set(s: u64, perm: &[usize]) -> u64 {
    perm.iter()
        .enumerate()
        .filter(|(i, _)| s >> i & 1 == 1)
        .fold(0, |acc, (_, &j)| acc | 1 << j)
}

/// Label-free key of a family: the least sorted image over all relabellings.
pub fn family_class_key(fam: &[u64], perms: &[Vec<usize>]) -> Vec<u64> {
    perms
        .iter()
        .map(|p| {
            let mut f: Vec<u64> = fam.iter().map(|&s| permute_set(s, p)).collect();
            f.sort_unstable();
            f
        })
        .min()
        .unwrap()
}

/// All partial orders on `n` points, as `le[x]` = set of points above `x`,
/// found by trying every orientation of every pair and keeping the
/// transitive ones.
pub fn all_posets(n: usize) -> Vec<Vec<u64>> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let total = 3usize.pow(pairs.len() as u32);
    let mut out = Vec::new();
    for mut code in 0..total {
        let mut up: Vec<u64> = (0..n).map(|i| 1 << i).collect();
        for &(i, j) in &pairs {
            match code % 3 {
                1 => up[i] |= 1 << j,
                2 => up[j] |= 1 << i,
                _ => {}
            }
            code /= 3;
        }
        let transitive = (0..n).all(|x| {
            (0..n)
                .filter(|&y| up[x] >> y & 1 == 1)
                .all(|y| up[y] & !up[x] == 0)
        });
        if transitive {
            out.push(up);
        }
    }
    out
}

/// Number of posets on `n` points up to isomorphism.
pub fn poset_class_count(n: usize) -> usize {
    let perms = permutations(n);
    let mut keys: Vec<Vec<u64>> = all_posets(n)
        .iter()
        .map(|up| {
            perms
                .iter()
                .map(|p| {
                    let mut img = vec![0u64; n];
                    for x in 0..n {
                        img[p[x]] = permute_set(up[x], p);
                    }
                    img
                })
                .min()
                .unwrap()
        })
        .collect();
    keys.sort();
    keys.dedup();
    keys.len()
}

pub fn ps(xs: &[usize]) -> PointSet {
    PointSet::from_indices(xs.iter().copied())
}

fn xyz(nbhd: [&[usize]; 3]) -> Space {
    let sets: Vec<PointSet> = nbhd.iter().map(|s| ps(s)).collect();
    Space::from_minbase(vec!["x".into(), "y".into(), "z".into()], &sets).unwrap()
}

/// The nine three-point topologies, entered from their minimal
/// neighbourhood tables (x = 0, y = 1, z = 2).
pub fn catalog() -> Vec<Space> {
    vec![
        xyz([&[0], &[1], &[2]]),
        xyz([&[0], &[1], &[0, 2]]),
        xyz([&[0], &[1], &[0, 1, 2]]),
        xyz([&[0], &[0, 1, 2], &[0, 1, 2]]),
        xyz([&[0], &[0, 1], &[0, 1, 2]]),
        xyz([&[0], &[1, 2], &[1, 2]]),
        xyz([&[0], &[0, 1], &[0, 2]]),
        xyz([&[0, 1], &[0, 1], &[0, 1, 2]]),
        xyz([&[0, 1, 2], &[0, 1, 2], &[0, 1, 2]]),
    ]
}
