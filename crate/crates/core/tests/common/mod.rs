//! Brute-force oracles shared by the integration tests. Nothing here calls
//! into the library's algorithms; permutations are plain maps.

#![allow(dead_code)]

pub mod golden;

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

use annular_nc::SignedPermutation;
use itertools::Itertools;

pub type Map = BTreeMap<i32, i32>;

/// Points `1..=n` followed by `-1..=-n`.
pub fn signed_points(n: usize) -> Vec<i32> {
    let n = n as i32;
    (1..=n).chain((1..=n).map(|x| -x)).collect()
}

pub fn to_map(tau: &SignedPermutation) -> Map {
    signed_points(tau.n()).into_iter().map(|x| (x, tau.apply(x))).collect()
}

pub fn from_map(map: &Map) -> SignedPermutation {
    let n = map.len() / 2;
    SignedPermutation::from_images((1..=n as i32).map(|i| map[&i]).collect()).unwrap()
}

pub fn compose(a: &Map, b: &Map) -> Map {
    b.iter().map(|(&x, &y)| (x, a[&y])).collect()
}

pub fn inverse(a: &Map) -> Map {
    a.iter().map(|(&x, &y)| (y, x)).collect()
}

pub fn cycles_of(a: &Map) -> Vec<Vec<i32>> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for &x in a.keys() {
        if seen.insert(x) {
            let mut cycle = vec![x];
            let mut y = a[&x];
            while y != x {
                seen.insert(y);
                cycle.push(y);
                y = a[&y];
            }
            out.push(cycle);
        }
    }
    out
}

pub fn cycle_count(a: &Map) -> usize {
    cycles_of(a).len()
}

/// Map from explicit cycles over the given points.
pub fn map_from_cycles(points: &[i32], cycles: &[Vec<i32>]) -> Map {
    let mut m: Map = points.iter().map(|&x| (x, x)).collect();
    for c in cycles {
        for k in 0..c.len() {
            m.insert(c[k], c[(k + 1) % c.len()]);
        }
    }
    m
}

/// Number of orbits of the group generated by `a` and `b`, by flood fill.
pub fn joint_orbits(a: &Map, b: &Map) -> usize {
    let mut seen = HashSet::new();
    let mut count = 0;
    for &start in a.keys() {
        if !seen.insert(start) {
            continue;
        }
        count += 1;
        let mut queue = VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            for y in [a[&x], b[&x], inverse_lookup(a, x), inverse_lookup(b, x)] {
                if seen.insert(y) {
                    queue.push_back(y);
                }
            }
        }
    }
    count
}

fn inverse_lookup(a: &Map, x: i32) -> i32 {
    *a.iter().find(|&(_, &v)| v == x).unwrap().0
}

/// Twice the genus.
pub fn twice_genus(tau: &Map, gamma: &Map) -> i64 {
    let lhs = tau.len() + 2 * joint_orbits(tau, gamma);
    let rhs = cycle_count(tau) + cycle_count(&compose(&inverse(tau), gamma)) + cycle_count(gamma);
    lhs as i64 - rhs as i64
}

pub fn is_noncrossing(tau: &Map, gamma: &Map) -> bool {
    twice_genus(tau, gamma) == 0
}

/// `γ = (1..p,-1..-p)(p+1..n,-(p+1)..-n)`; `q = 0` gives the disc.
pub fn gamma_map(p: usize, q: usize) -> Map {
    let (p, n) = (p as i32, (p + q) as i32);
    let mut cycles = vec![(1..=p).chain((1..=p).map(|x| -x)).collect::<Vec<_>>()];
    if q > 0 {
        cycles.push((p + 1..=n).chain((p + 1..=n).map(|x| -x)).collect());
    }
    map_from_cycles(&signed_points((p + q as i32) as usize), &cycles)
}

/// All of `B_n` as maps.
pub fn b_group(n: usize) -> Vec<Map> {
    let mut out = Vec::new();
    for perm in (1..=n as i32).permutations(n) {
        for signs in 0u32..(1 << n) {
            let mut m = Map::new();
            for (i, &v) in perm.iter().enumerate() {
                let v = if signs >> i & 1 == 1 { -v } else { v };
                m.insert(i as i32 + 1, v);
                m.insert(-(i as i32 + 1), -v);
            }
            out.push(m);
        }
    }
    out
}

/// All permutations of `points`.
pub fn symmetric_group(points: &[i32]) -> Vec<Map> {
    points
        .iter()
        .copied()
        .permutations(points.len())
        .map(|img| points.iter().copied().zip(img).collect())
        .collect()
}

/// Reflections of type B (`with_flips`) or D.
pub fn reflections(n: usize, with_flips: bool) -> Vec<Map> {
    let pts = signed_points(n);
    let n = n as i32;
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            out.push(map_from_cycles(&pts, &[vec![i, j], vec![-i, -j]]));
            out.push(map_from_cycles(&pts, &[vec![i, -j], vec![-i, j]]));
        }
        if with_flips {
            out.push(map_from_cycles(&pts, &[vec![i, -i]]));
        }
    }
    out
}

/// Word lengths over the reflections, by breadth-first search.
pub fn word_lengths(n: usize, with_flips: bool) -> HashMap<Map, usize> {
    let gens = reflections(n, with_flips);
    let id: Map = signed_points(n).into_iter().map(|x| (x, x)).collect();
    let mut dist = HashMap::from([(id.clone(), 0)]);
    let mut queue = VecDeque::from([id]);
    while let Some(g) = queue.pop_front() {
        let d = dist[&g];
        for s in &gens {
            let h = compose(&g, s);
            if !dist.contains_key(&h) {
                dist.insert(h.clone(), d + 1);
                queue.push_back(h);
            }
        }
    }
    dist
}

/// `τ↓A`: first return of `τ` to `A`.
pub fn induced(tau: &Map, subset: &[i32]) -> Map {
    subset
        .iter()
        .map(|&a| {
            let mut y = tau[&a];
            while !subset.contains(&y) {
                y = tau[&y];
            }
            (a, y)
        })
        .collect()
}

/// Set partition of `points` as sorted blocks sorted by first element.
pub fn normalise(mut blocks: Vec<Vec<i32>>) -> Vec<Vec<i32>> {
    for b in &mut blocks {
        b.sort();
    }
    blocks.sort();
    blocks
}

/// All set partitions of `points`.
pub fn set_partitions(points: &[i32]) -> Vec<Vec<Vec<i32>>> {
    let Some((&first, rest)) = points.split_first() else {
        return vec![vec![]];
    };
    let mut out = Vec::new();
    for part in set_partitions(rest) {
        for k in 0..part.len() {
            let mut p = part.clone();
            p[k].push(first);
            out.push(p);
        }
        let mut p = part.clone();
        p.push(vec![first]);
        out.push(p);
    }
    out
}

/// All set partitions of `{±1..±n}` closed under negation.
pub fn symmetric_partitions(n: usize) -> Vec<Vec<Vec<i32>>> {
    set_partitions(&signed_points(n))
        .into_iter()
        .map(normalise)
        .filter(|p| {
            p.iter().all(|b| {
                let mut neg: Vec<i32> = b.iter().map(|x| -x).collect();
                neg.sort();
                p.contains(&neg)
            })
        })
        .collect()
}
