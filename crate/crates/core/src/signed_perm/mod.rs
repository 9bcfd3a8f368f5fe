//! The hyperoctahedral group `B_n` and its index-two subgroup `D_n`.
//!
//! A [`SignedPermutation`] stores the images of the positive points
//! `1, …, n` only; the image of `-i` is always `-τ(i)`, so the symmetry
//! `τ(-i) = -τ(i)` holds by construction.

mod cycles;
mod oracle;

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::noncross::GroundPermutation;
use crate::point;

pub use oracle::{LengthTable, WordLengthOracle, DEFAULT_ORACLE_RANK};

/// Largest rank accepted by [`enumerate_b`] (`|B_7| = 645120`).
pub const MAX_ENUM_RANK: usize = 7;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SignedPermutation {
    images: Vec<i32>,
}

impl SignedPermutation {
    pub fn identity(n: usize) -> Self {
        SignedPermutation {
            images: (1..=n as i32).collect(),
        }
    }

    /// Builds `τ` from `(τ(1), …, τ(n))`.
    pub fn from_images(images: Vec<i32>) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::InvalidPermutation("rank must be positive".into()));
        }
        let mut seen = vec![false; n];
        for &v in &images {
            let a = v.unsigned_abs() as usize;
            if v == 0 || a > n {
                return Err(Error::InvalidPermutation(format!(
                    "image {v} outside {{±1,…,±{n}}}"
                )));
            }
            if std::mem::replace(&mut seen[a - 1], true) {
                return Err(Error::InvalidPermutation(format!(
                    "|image| {a} occurs twice"
                )));
            }
        }
        Ok(SignedPermutation { images })
    }

    /// Builds `τ` from an arbitrary map on `X`; fails unless the map is a
    /// bijection commuting with negation.
    pub fn from_fn(n: usize, f: impl Fn(i32) -> i32) -> Result<Self> {
        let perm = Self::from_images((1..=n as i32).map(&f).collect())?;
        for i in 1..=n as i32 {
            if f(-i) != -perm.apply(i) {
                return Err(Error::InvalidPermutation(format!(
                    "map does not satisfy τ(-{i}) = -τ({i})"
                )));
            }
        }
        Ok(perm)
    }

    /// Converts a permutation of `{±1, …, ±n}` into an element of `B_n`.
    pub fn from_ground(g: &GroundPermutation) -> Result<Self> {
        let n = g.len() / 2;
        if n == 0 || g.points() != point::ground_set(n).as_slice() {
            return Err(Error::InvalidPermutation(
                "ground set is not of the form {±1,…,±n}".into(),
            ));
        }
        Self::from_fn(n, |x| g.apply(x))
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// `(τ(1), …, τ(n))`.
    pub fn images(&self) -> &[i32] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, x: i32) -> i32 {
        let v = self.images[x.unsigned_abs() as usize - 1];
        if x > 0 {
            v
        } else {
            -v
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i as i32 + 1)
    }

    /// `self ∘ other`, i.e. `x ↦ self(other(x))`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::RankMismatch(self.n(), other.n()));
        }
        Ok(SignedPermutation {
            images: other.images.iter().map(|&v| self.apply(v)).collect(),
        })
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.n()];
        for (i, &v) in self.images.iter().enumerate() {
            let a = v.unsigned_abs() as usize - 1;
            images[a] = if v > 0 { i as i32 + 1 } else { -(i as i32 + 1) };
        }
        SignedPermutation { images }
    }

    /// `σ⁻¹τ` with `σ = self`.
    pub fn left_divide(&self, tau: &Self) -> Result<Self> {
        self.inverse().compose(tau)
    }

    /// Cycles of `τ` acting on `X`, including fixed points.
    ///
    /// Every cycle starts at its element of least absolute value (the
    /// positive one on a tie) and cycles are listed in canonical order of
    /// their first element.
    pub fn cycles(&self) -> Vec<Vec<i32>> {
        let n = self.n();
        let mut seen = vec![false; 2 * n];
        let mut out = Vec::new();
        for start in point::ground_set(n) {
            if seen[point::index(start, n)] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            loop {
                seen[point::index(x, n)] = true;
                cycle.push(x);
                x = self.apply(x);
                if x == start {
                    break;
                }
            }
            let pos = (0..cycle.len())
                .min_by_key(|&k| (cycle[k].unsigned_abs(), cycle[k] < 0))
                .unwrap_or(0);
            cycle.rotate_left(pos);
            out.push(cycle);
        }
        out.sort_by(|a, b| point::cmp(a[0], b[0]));
        out
    }

    /// The orbit set `Ω(τ)` with zero-block flags.
    pub fn orbits(&self) -> OrbitSet {
        let orbits = self
            .cycles()
            .into_iter()
            .map(|cycle| {
                let zero_block = cycle.contains(&-cycle[0]);
                Orbit {
                    cycle,
                    zero_block,
                }
            })
            .collect();
        OrbitSet { orbits }
    }

    /// Absolute length `ℓ_B(τ) = n − m`, where `m` counts the pairs
    /// `{A, −A}` of orbits with `A ≠ −A`.
    pub fn length_b(&self) -> usize {
        self.n() - self.orbits().pair_count()
    }

    /// True iff `τ` is an even permutation of the `2n` points of `X`.
    pub fn is_in_d(&self) -> bool {
        let cycles = self.orbits().len();
        (2 * self.n() - cycles).is_multiple_of(2)
    }

    pub fn to_ground(&self) -> GroundPermutation {
        let n = self.n();
        let points = point::ground_set(n);
        let image = points
            .iter()
            .map(|&x| point::index(self.apply(x), n))
            .collect();
        GroundPermutation::from_index_map_unchecked(points, image)
    }

    /// Restriction of `τ` to a subset, as a plain permutation.
    pub fn induced(&self, subset: &[i32]) -> Result<GroundPermutation> {
        self.to_ground().induced(subset)
    }
}

/// `σ ∘ τ`.
pub fn compose(sigma: &SignedPermutation, tau: &SignedPermutation) -> Result<SignedPermutation> {
    sigma.compose(tau)
}

/// Absolute order: `σ ≤ τ` iff `ℓ_B(τ) = ℓ_B(σ) + ℓ_B(σ⁻¹τ)`.
pub fn le_b(sigma: &SignedPermutation, tau: &SignedPermutation) -> Result<bool> {
    let quotient = sigma.left_divide(tau)?;
    Ok(tau.length_b() == sigma.length_b() + quotient.length_b())
}

/// True iff `τ` covers `σ` in the absolute order, decided from the shape of
/// `σ⁻¹τ` and the orbits of `σ` alone.
pub fn covers_b(sigma: &SignedPermutation, tau: &SignedPermutation) -> Result<bool> {
    let quotient = sigma.left_divide(tau)?;
    let moved: Vec<i32> = (1..=quotient.n() as i32)
        .filter(|&i| quotient.apply(i) != i)
        .collect();
    let orbit_of = orbit_labels(sigma);
    let same = |a: i32, b: i32| orbit_of(a) == orbit_of(b);
    match moved.as_slice() {
        // (i, -i) with i and -i in different orbits of σ
        [i] => Ok(quotient.apply(*i) == -*i && !same(*i, -*i)),
        [a, b] => {
            let (a, b) = (*a, *b);
            let image = quotient.apply(a);
            if image.abs() != b {
                return Ok(false);
            }
            // quotient = (a, j)(-a, -j) with j = ±b
            let j = image;
            if quotient.apply(j) != a {
                return Ok(false);
            }
            let a_zero = same(a, -a);
            let j_zero = same(j, -j);
            let case_b = a_zero != j_zero;
            let case_c = !a_zero
                && !j_zero
                && !same(a, j)
                && !same(a, -j);
            let case_d = same(a, -j) && !a_zero;
            Ok(case_b || case_c || case_d)
        }
        _ => Ok(false),
    }
}

fn orbit_labels(sigma: &SignedPermutation) -> impl Fn(i32) -> usize {
    let n = sigma.n();
    let mut label = vec![0; 2 * n];
    for (k, cycle) in sigma.cycles().iter().enumerate() {
        for &x in cycle {
            label[point::index(x, n)] = k;
        }
    }
    move |x| label[point::index(x, n)]
}

impl Ord for SignedPermutation {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n()
            .cmp(&other.n())
            .then_with(|| point::cmp_seq(&self.images, &other.images))
    }
}

impl PartialOrd for SignedPermutation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B{}{}", self.n(), self)
    }
}

/// JSON form: `{"n": 6, "cycles": [[1,2,3,5],[4,-6],…]}` with all non-trivial
/// cycles spelled out.
#[derive(Serialize, Deserialize)]
struct RawSignedPermutation {
    n: usize,
    cycles: Vec<Vec<i32>>,
}

impl Serialize for SignedPermutation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RawSignedPermutation {
            n: self.n(),
            cycles: self.cycles().into_iter().filter(|c| c.len() > 1).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SignedPermutation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawSignedPermutation::deserialize(d)?;
        cycles::from_cycle_lists(raw.n, &raw.cycles, false).map_err(serde::de::Error::custom)
    }
}

/// One orbit of a signed permutation, in cycle order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbit {
    pub cycle: Vec<i32>,
    /// `A = −A`.
    pub zero_block: bool,
}

impl Orbit {
    /// Elements of the orbit in canonical order.
    pub fn sorted(&self) -> Vec<i32> {
        let mut v = self.cycle.clone();
        point::sort(&mut v);
        v
    }
}

/// `Ω(τ)` together with zero-block flags.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitSet {
    orbits: Vec<Orbit>,
}

impl OrbitSet {
    /// `#(τ)`.
    pub fn len(&self) -> usize {
        self.orbits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orbits.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Orbit> {
        self.orbits.iter()
    }

    /// Number of zero-blocks.
    pub fn zero_block_count(&self) -> usize {
        self.orbits.iter().filter(|o| o.zero_block).count()
    }

    /// Number of pairs `{A, −A}` with `A ≠ −A`.
    pub fn pair_count(&self) -> usize {
        (self.len() - self.zero_block_count()) / 2
    }

    /// Orbits as sorted point sets.
    pub fn as_sets(&self) -> Vec<Vec<i32>> {
        self.orbits.iter().map(Orbit::sorted).collect()
    }
}

/// Deterministic enumeration of `B_n`: lexicographic on `(τ(1), …, τ(n))`
/// with values compared in canonical point order, so the identity comes
/// first.
pub fn enumerate_b(n: usize) -> Result<BnIter> {
    if n == 0 {
        return Err(Error::InvalidParameters("rank must be positive".into()));
    }
    if n > MAX_ENUM_RANK {
        return Err(Error::BoundExceeded {
            rank: n,
            bound: MAX_ENUM_RANK,
        });
    }
    Ok(BnIter {
        n,
        keys: (0..n).collect(),
        used: vec![true; n],
        done: false,
    })
}

/// The elements of `D_n` in the order of [`enumerate_b`].
pub fn enumerate_d(n: usize) -> Result<impl Iterator<Item = SignedPermutation>> {
    Ok(enumerate_b(n)?.filter(SignedPermutation::is_in_d))
}

pub struct BnIter {
    n: usize,
    /// Canonical point index of each image.
    keys: Vec<usize>,
    /// `used[a]`: absolute value `a + 1` already taken.
    used: Vec<bool>,
    done: bool,
}

impl BnIter {
    fn current(&self) -> SignedPermutation {
        SignedPermutation {
            images: self.keys.iter().map(|&k| point::at(k, self.n)).collect(),
        }
    }

    fn advance(&mut self) -> bool {
        let n = self.n;
        for pos in (0..n).rev() {
            let cur = self.keys[pos];
            self.used[cur % n] = false;
            if let Some(next) = (cur + 1..2 * n).find(|&k| !self.used[k % n]) {
                self.keys[pos] = next;
                self.used[next % n] = true;
                for p in pos + 1..n {
                    let k = (0..2 * n)
                        .find(|&k| !self.used[k % n])
                        .expect("free value exists");
                    self.keys[p] = k;
                    self.used[k % n] = true;
                }
                return true;
            }
        }
        false
    }
}

impl Iterator for BnIter {
    type Item = SignedPermutation;

    fn next(&mut self) -> Option<SignedPermutation> {
        if self.done {
            return None;
        }
        let out = self.current();
        self.done = !self.advance();
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(text: &str, n: usize) -> SignedPermutation {
        SignedPermutation::parse(text, n).unwrap()
    }

    #[test]
    fn compose_examples() {
        let tau = p("(1,2,3,5)(4,-6)", 6);
        assert_eq!(SignedPermutation::identity(6).compose(&tau).unwrap(), tau);
        assert!(tau.compose(&tau.inverse()).unwrap().is_identity());
        let a = p("(1,-1)", 2);
        let b = p("(1,-1)(2,-2)", 2);
        assert_eq!(a.compose(&b).unwrap(), p("(2,-2)", 2));
        assert_eq!(
            a.compose(&SignedPermutation::identity(3)),
            Err(Error::RankMismatch(2, 3))
        );
    }

    #[test]
    fn inverse_examples() {
        assert!(SignedPermutation::identity(3).inverse().is_identity());
        let tau = p("(1,2,3,5)(4,-6)(-1,-2,-3,-5)(-4,6)", 6);
        assert_eq!(tau.inverse(), p("(1,5,3,2)(4,-6)(-1,-5,-3,-2)(-4,6)", 6));
        let inv = p("(1,-1)", 1);
        assert_eq!(inv.inverse(), inv);
    }

    #[test]
    fn orbit_examples() {
        let id = SignedPermutation::identity(2).orbits();
        assert_eq!(id.as_sets(), vec![vec![1], vec![2], vec![-1], vec![-2]]);
        assert_eq!(id.zero_block_count(), 0);

        let gamma = p("(1,2,-1,-2)(3,4,-3,-4)", 4).orbits();
        assert_eq!(gamma.len(), 2);
        assert_eq!(gamma.zero_block_count(), 2);
        assert_eq!(gamma.as_sets()[0], vec![1, 2, -1, -2]);

        let sample42 = p("(1,2,3,5)(4,-6)", 6).orbits();
        assert_eq!(
            sample42.as_sets(),
            vec![vec![1, 2, 3, 5], vec![4, -6], vec![-1, -2, -3, -5], vec![6, -4]]
        );
        assert_eq!(sample42.zero_block_count(), 0);
    }

    #[test]
    fn lengths() {
        assert_eq!(SignedPermutation::identity(5).length_b(), 0);
        assert_eq!(p("(1,2,3,-1,-2,-3)(4,5,-4,-5)", 5).length_b(), 5);
        assert_eq!(p("(1,-1)", 1).length_b(), 1);
        assert_eq!(p("(1,2,-1,-2)", 2).length_b(), 2);
    }

    #[test]
    fn order_examples() {
        let gamma = p("(1,2,3,4,-1,-2,-3,-4)(5,6,-5,-6)", 6);
        let sample42 = p("(1,2,3,5)(4,-6)", 6);
        assert!(le_b(&SignedPermutation::identity(6), &sample42).unwrap());
        assert!(le_b(&sample42, &gamma).unwrap());
        assert!(!le_b(&p("(1,-1)", 2), &p("(2,-2)", 2)).unwrap());
    }

    #[test]
    fn cover_examples() {
        let id = SignedPermutation::identity(2);
        assert!(covers_b(&id, &p("(1,-1)", 2)).unwrap());
        assert!(covers_b(&id, &p("(1,2)", 2)).unwrap());
        let tau = p("(1,2)", 2);
        assert!(!covers_b(&tau, &tau).unwrap());
        assert!(!covers_b(&id, &p("(1,2,-1,-2)", 2)).unwrap());
    }

    #[test]
    fn type_d_membership() {
        assert!(SignedPermutation::identity(3).is_in_d());
        assert!(!p("(1,-1)", 1).is_in_d());
        assert!(p("(1,2)", 2).is_in_d());
    }

    #[test]
    fn enumeration() {
        let b1: Vec<_> = enumerate_b(1).unwrap().collect();
        assert_eq!(b1, vec![SignedPermutation::identity(1), p("(1,-1)", 1)]);
        assert_eq!(enumerate_b(2).unwrap().count(), 8);
        assert_eq!(enumerate_b(3).unwrap().count(), 48);
        assert_eq!(enumerate_d(3).unwrap().count(), 24);
        assert!(matches!(enumerate_b(8), Err(Error::BoundExceeded { .. })));
        let b3: Vec<_> = enumerate_b(3).unwrap().collect();
        assert!(b3.windows(2).all(|w| w[0] < w[1]));
        assert!(b3[0].is_identity());
    }

    #[test]
    fn from_fn_rejects_asymmetric_maps() {
        assert!(SignedPermutation::from_fn(1, |x| if x == 1 { -1 } else { 1 }).is_ok());
        assert!(SignedPermutation::from_fn(2, |x| match x {
            1 => 2,
            2 => 1,
            -1 => -1,
            -2 => -2,
            _ => unreachable!(),
        })
        .is_err());
    }

    #[test]
    fn json_round_trip() {
        let tau = p("(1,2,3,5)(4,-6)", 6);
        let text = serde_json::to_string(&tau).unwrap();
        assert_eq!(
            text,
            r#"{"n":6,"cycles":[[1,2,3,5],[4,-6],[-1,-2,-3,-5],[-4,6]]}"#
        );
        let back: SignedPermutation = serde_json::from_str(&text).unwrap();
        assert_eq!(back, tau);
    }
}
