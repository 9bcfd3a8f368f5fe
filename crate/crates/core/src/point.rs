//! Canonical order on points of `X = {±1, …, ±n}`.
//!
//! Positive points come first in increasing order, then negative points in
//! order of increasing absolute value: `1 < 2 < … < n < -1 < -2 < … < -n`.

use std::cmp::Ordering;

/// Sort key realising the canonical point order.
#[inline]
pub fn key(x: i32) -> (bool, u32) {
    (x < 0, x.unsigned_abs())
}

#[inline]
pub fn cmp(a: i32, b: i32) -> Ordering {
    key(a).cmp(&key(b))
}

/// Position of `x` in the canonical listing of `{±1, …, ±n}`.
#[inline]
pub fn index(x: i32, n: usize) -> usize {
    debug_assert!(x != 0 && x.unsigned_abs() as usize <= n);
    if x > 0 {
        x as usize - 1
    } else {
        n + x.unsigned_abs() as usize - 1
    }
}

/// Inverse of [`index`].
#[inline]
pub fn at(i: usize, n: usize) -> i32 {
    debug_assert!(i < 2 * n);
    if i < n {
        i as i32 + 1
    } else {
        -((i - n) as i32 + 1)
    }
}

/// All points of `{±1, …, ±n}` in canonical order.
pub fn ground_set(n: usize) -> Vec<i32> {
    (0..2 * n).map(|i| at(i, n)).collect()
}

/// Sorts points in place in canonical order.
pub fn sort(points: &mut [i32]) {
    points.sort_by_key(|&x| key(x));
}

/// Lexicographic comparison of two point sequences under the canonical order.
pub fn cmp_seq(a: &[i32], b: &[i32]) -> Ordering {
    a.iter().map(|&x| key(x)).cmp(b.iter().map(|&x| key(x)))
}
