//! Crossing-pattern characterisation of `S_nc(X, γ)` for one or two circles.
//!
//! * Disc (`#(γ) = 1`): `τ` is non-crossing iff it is compatible with `γ` and
//!   avoids (DC).
//! * Annulus (`#(γ) = 2`): `τ` is non-crossing iff it is compatible with `γ`
//!   and avoids (AC-1), (AC-2) and (AC-3).
//!
//! Pattern scans report the lexicographically least witness tuple under the
//! canonical point order, trying DC/AC-1 first, then AC-2, then AC-3.

use std::cmp::Ordering;
use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use super::ground::{induced_next, GroundPermutation};
use crate::error::{Error, Result};
use crate::point;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CrossingKind {
    #[serde(rename = "DC")]
    Dc,
    #[serde(rename = "AC1")]
    Ac1,
    #[serde(rename = "AC2")]
    Ac2,
    #[serde(rename = "AC3")]
    Ac3,
    #[serde(rename = "INCOMPATIBLE")]
    Incompatible,
}

/// Evidence that a permutation is not non-crossing.
///
/// `points` is `(a,b,c,d)` for DC/AC-1, `(a,b,c,y,z)` for AC-2,
/// `(a,b,c,d,y,z)` for AC-3, and the offending orbit for an incompatibility.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossingWitness {
    pub kind: CrossingKind,
    pub points: Vec<i32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl CrossingWitness {
    fn pattern(kind: CrossingKind, points: Vec<i32>) -> Self {
        CrossingWitness {
            kind,
            points,
            detail: None,
        }
    }
}

/// Orbit layout of the reference permutation.
struct Reference {
    /// Circle label (0 = Y, 1 = Z) for each point index.
    circle: Vec<u8>,
    two_circles: bool,
}

fn reference(tau: &GroundPermutation, gamma: &GroundPermutation) -> Result<Reference> {
    if tau.points() != gamma.points() {
        return Err(Error::GroundSetMismatch);
    }
    let (label, count) = gamma.orbit_labels();
    if count > 2 {
        return Err(Error::TooManyCycles(count));
    }
    // label 0 is the orbit of the canonically least point, i.e. Y
    Ok(Reference {
        circle: label.iter().map(|&l| l as u8).collect(),
        two_circles: count == 2,
    })
}

/// The AC-test permutation `λ_{y,z}`: fixes `y` and `z` and cycles the rest
/// as `(γ(y), …, γ^{|Y|−1}(y), γ(z), …, γ^{|Z|−1}(z))`.
///
/// `Y` is the `γ`-orbit of the canonically least point, `Z` the other one.
pub fn ac_test_perm(gamma: &GroundPermutation, y: i32, z: i32) -> Result<GroundPermutation> {
    let reference = reference(gamma, gamma)?;
    if !reference.two_circles {
        return Err(Error::TooManyCycles(1));
    }
    let yi = gamma
        .index_of(y)
        .filter(|&i| reference.circle[i] == 0)
        .ok_or_else(|| Error::InvalidSubset(format!("{y} is not on the outer circle")))?;
    let zi = gamma
        .index_of(z)
        .filter(|&i| reference.circle[i] == 1)
        .ok_or_else(|| Error::InvalidSubset(format!("{z} is not on the inner circle")))?;
    let image = lambda_indices(gamma.image_indices(), yi, zi);
    Ok(GroundPermutation::from_index_map_unchecked(
        gamma.points().to_vec(),
        image,
    ))
}

fn lambda_indices(gamma: &[usize], yi: usize, zi: usize) -> Vec<usize> {
    let mut seq = Vec::with_capacity(gamma.len());
    for start in [yi, zi] {
        let mut i = gamma[start];
        while i != start {
            seq.push(i);
            i = gamma[i];
        }
    }
    let mut image: Vec<usize> = (0..gamma.len()).collect();
    for k in 0..seq.len() {
        image[seq[k]] = seq[(k + 1) % seq.len()];
    }
    image
}

/// Compatibility of `τ` with `γ`; returns the first failing orbit (in
/// canonical order of orbit minima) as an `INCOMPATIBLE` witness.
///
/// For an annulus, clause (i) is vacuous on a circle the orbit does not meet.
pub fn check_compatible(
    tau: &GroundPermutation,
    gamma: &GroundPermutation,
) -> Result<Option<CrossingWitness>> {
    let reference = reference(tau, gamma)?;
    let t = tau.image_indices();
    let g = gamma.image_indices();
    let n = tau.len();
    for orbit in tau.cycles() {
        let idx: Vec<usize> = orbit
            .iter()
            .map(|&x| tau.index_of(x).expect("orbit point"))
            .collect();
        let mut sorted = orbit.clone();
        point::sort(&mut sorted);
        let fail = |detail: &str| {
            Ok(Some(CrossingWitness {
                kind: CrossingKind::Incompatible,
                points: sorted.clone(),
                detail: Some(detail.to_string()),
            }))
        };
        if !reference.two_circles {
            let mut mask = vec![false; n];
            idx.iter().for_each(|&i| mask[i] = true);
            if idx.iter().any(|&i| induced_next(g, &mask, i) != t[i]) {
                return fail("orbit is not traversed in the cyclic order of the reference");
            }
            continue;
        }
        for (circle, name) in [(0u8, "outer"), (1u8, "inner")] {
            let mut mask = vec![false; n];
            idx.iter()
                .filter(|&&i| reference.circle[i] == circle)
                .for_each(|&i| mask[i] = true);
            let agree = idx
                .iter()
                .filter(|&&i| mask[i])
                .all(|&i| induced_next(t, &mask, i) == induced_next(g, &mask, i));
            if !agree {
                return fail(&format!(
                    "clause (i): induced order on the {name} circle differs from the reference"
                ));
            }
        }
        for (circle, name) in [(0u8, "outer"), (1u8, "inner")] {
            let jumps = idx
                .iter()
                .filter(|&&i| reference.circle[i] == circle && reference.circle[t[i]] != circle)
                .count();
            if jumps > 1 {
                return fail(&format!(
                    "clause (ii): {jumps} steps leave the {name} circle"
                ));
            }
        }
    }
    Ok(None)
}

/// Scan state shared by the pattern searches.
struct Scan<'a> {
    tau: &'a [usize],
    gamma: &'a [usize],
    reference: Reference,
    n: usize,
}

/// Calls `visit` on every crossing-pattern witness, kind by kind, as
/// index tuples; `visit` may stop the scan early.
fn scan_kind<F>(scan: &Scan<'_>, kind: CrossingKind, mut visit: F)
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let n = scan.n;
    match kind {
        CrossingKind::Dc | CrossingKind::Ac1 => {
            let mut mask = vec![false; n];
            let _ = for_each_subset(n, 4, &[], &mut |s| {
                s.iter().for_each(|&i| mask[i] = true);
                let res = match four_cycle(scan.gamma, &mask, s[0]) {
                    Some([a, b, c, d]) => {
                        let t = |i| induced_next(scan.tau, &mask, i);
                        if t(a) == c && t(c) == a && t(b) == d && t(d) == b {
                            visit(&[a, b, c, d])
                        } else {
                            ControlFlow::Continue(())
                        }
                    }
                    None => ControlFlow::Continue(()),
                };
                s.iter().for_each(|&i| mask[i] = false);
                res
            });
        }
        CrossingKind::Ac2 | CrossingKind::Ac3 => {
            let size = if kind == CrossingKind::Ac2 { 3 } else { 4 };
            let circle = &scan.reference.circle;
            for yi in (0..n).filter(|&i| circle[i] == 0) {
                for zi in (0..n).filter(|&i| circle[i] == 1) {
                    let lambda = lambda_indices(scan.gamma, yi, zi);
                    let mut s_mask = vec![false; n];
                    let mut t_mask = vec![false; n];
                    t_mask[yi] = true;
                    t_mask[zi] = true;
                    let flow = for_each_subset(n, size, &[yi, zi], &mut |s| {
                        s.iter().for_each(|&i| {
                            s_mask[i] = true;
                            t_mask[i] = true;
                        });
                        let mut cyc = [s[0]; 4];
                        for k in 1..size {
                            cyc[k] = induced_next(&lambda, &s_mask, cyc[k - 1]);
                        }
                        let t = |i| induced_next(scan.tau, &t_mask, i);
                        let pair_ok = t(yi) == zi && t(zi) == yi;
                        let res = if !pair_ok {
                            ControlFlow::Continue(())
                        } else if size == 3 {
                            let [a, b, c, _] = cyc;
                            if t(a) == c && t(c) == b && t(b) == a {
                                visit(&[a, b, c, yi, zi])
                            } else {
                                ControlFlow::Continue(())
                            }
                        } else {
                            let [a, b, c, d] = cyc;
                            if t(a) == c && t(c) == a && t(b) == d && t(d) == b {
                                visit(&[a, b, c, d, yi, zi])
                            } else {
                                ControlFlow::Continue(())
                            }
                        };
                        s.iter().for_each(|&i| {
                            s_mask[i] = false;
                            t_mask[i] = false;
                        });
                        res
                    });
                    if flow.is_break() {
                        return;
                    }
                }
            }
        }
        CrossingKind::Incompatible => {}
    }
}

/// `(a, γ↓S(a), γ↓S²(a), γ↓S³(a))` when `γ↓S` is a 4-cycle.
fn four_cycle(gamma: &[usize], mask: &[bool], a: usize) -> Option<[usize; 4]> {
    let b = induced_next(gamma, mask, a);
    let c = induced_next(gamma, mask, b);
    let d = induced_next(gamma, mask, c);
    let distinct = b != a && c != a && c != b && d != a && d != b && d != c;
    (distinct && induced_next(gamma, mask, d) == a).then_some([a, b, c, d])
}

/// Visits all `k`-subsets of `0..n` avoiding `skip`, in lexicographic order.
fn for_each_subset<F>(n: usize, k: usize, skip: &[usize], f: &mut F) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let pool: Vec<usize> = (0..n).filter(|i| !skip.contains(i)).collect();
    if pool.len() < k {
        return ControlFlow::Continue(());
    }
    let mut pos: Vec<usize> = (0..k).collect();
    let mut buf = vec![0; k];
    loop {
        for (b, &p) in buf.iter_mut().zip(&pos) {
            *b = pool[p];
        }
        f(&buf)?;
        let mut i = k;
        loop {
            if i == 0 {
                return ControlFlow::Continue(());
            }
            i -= 1;
            if pos[i] < pool.len() - k + i {
                break;
            }
        }
        pos[i] += 1;
        for j in i + 1..k {
            pos[j] = pos[j - 1] + 1;
        }
    }
}

fn kinds(reference: &Reference) -> &'static [CrossingKind] {
    if reference.two_circles {
        &[CrossingKind::Ac1, CrossingKind::Ac2, CrossingKind::Ac3]
    } else {
        &[CrossingKind::Dc]
    }
}

/// Least crossing-pattern witness of `τ` against `γ`, or `None`.
pub fn find_crossing_pattern(
    tau: &GroundPermutation,
    gamma: &GroundPermutation,
) -> Result<Option<CrossingWitness>> {
    let reference = reference(tau, gamma)?;
    let scan = Scan {
        tau: tau.image_indices(),
        gamma: gamma.image_indices(),
        n: tau.len(),
        reference,
    };
    for &kind in kinds(&scan.reference) {
        let mut best: Option<Vec<usize>> = None;
        scan_kind(&scan, kind, |tuple| {
            if best.as_deref().is_none_or(|b| tuple.cmp(b) == Ordering::Less) {
                best = Some(tuple.to_vec());
            }
            ControlFlow::Continue(())
        });
        if let Some(tuple) = best {
            let points = tuple.iter().map(|&i| tau.points()[i]).collect();
            return Ok(Some(CrossingWitness::pattern(kind, points)));
        }
    }
    Ok(None)
}

/// Whether any crossing pattern occurs; stops at the first hit.
pub fn has_crossing_pattern(tau: &GroundPermutation, gamma: &GroundPermutation) -> Result<bool> {
    let reference = reference(tau, gamma)?;
    let scan = Scan {
        tau: tau.image_indices(),
        gamma: gamma.image_indices(),
        n: tau.len(),
        reference,
    };
    for &kind in kinds(&scan.reference) {
        let mut found = false;
        scan_kind(&scan, kind, |_| {
            found = true;
            ControlFlow::Break(())
        });
        if found {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Compatible with `γ` and free of crossing patterns.
pub fn is_noncrossing_by_patterns(
    tau: &GroundPermutation,
    gamma: &GroundPermutation,
) -> Result<bool> {
    Ok(check_compatible(tau, gamma)?.is_none() && !has_crossing_pattern(tau, gamma)?)
}
