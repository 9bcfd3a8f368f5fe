use std::fmt;

use crate::error::{Error, Result};
use crate::point;

/// A permutation of a finite set of non-zero integers.
///
/// Points are kept in canonical order; two permutations live on the same
/// ground set iff their point lists are equal.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GroundPermutation {
    points: Vec<i32>,
    image: Vec<usize>,
}

fn normalize(mut points: Vec<i32>) -> Result<Vec<i32>> {
    if points.contains(&0) {
        return Err(Error::InvalidPermutation("0 is not a valid point".into()));
    }
    point::sort(&mut points);
    if points.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::InvalidPermutation("repeated point".into()));
    }
    Ok(points)
}

impl GroundPermutation {
    pub fn identity(points: Vec<i32>) -> Result<Self> {
        let points = normalize(points)?;
        let image = (0..points.len()).collect();
        Ok(GroundPermutation { points, image })
    }

    /// Builds the permutation `x ↦ f(x)`; fails unless `f` is a bijection of
    /// the point set.
    pub fn from_map(points: Vec<i32>, f: impl Fn(i32) -> i32) -> Result<Self> {
        let points = normalize(points)?;
        let mut hit = vec![false; points.len()];
        let mut image = Vec::with_capacity(points.len());
        for &x in &points {
            let y = f(x);
            let j = index_in(&points, y)
                .ok_or_else(|| Error::InvalidPermutation(format!("{x} maps outside the set")))?;
            if std::mem::replace(&mut hit[j], true) {
                return Err(Error::InvalidPermutation(format!("{y} is hit twice")));
            }
            image.push(j);
        }
        Ok(GroundPermutation { points, image })
    }

    /// Disjoint cycles on `points`; unlisted points are fixed.
    pub fn from_cycles(points: Vec<i32>, cycles: &[Vec<i32>]) -> Result<Self> {
        let mut g = Self::identity(points)?;
        let mut touched = vec![false; g.len()];
        for c in cycles {
            let idx = c
                .iter()
                .map(|&x| {
                    g.index_of(x)
                        .ok_or_else(|| Error::InvalidPermutation(format!("{x} not in the ground set")))
                })
                .collect::<Result<Vec<usize>>>()?;
            for (k, &i) in idx.iter().enumerate() {
                if std::mem::replace(&mut touched[i], true) {
                    return Err(Error::InvalidPermutation(format!("{} occurs twice", c[k])));
                }
                g.image[i] = idx[(k + 1) % idx.len()];
            }
        }
        Ok(g)
    }

    /// The single cycle `(s_0, s_1, …)` on the points of `seq`.
    pub fn cycle(seq: &[i32]) -> Result<Self> {
        Self::from_cycles(seq.to_vec(), &[seq.to_vec()])
    }

    pub(crate) fn from_index_map_unchecked(points: Vec<i32>, image: Vec<usize>) -> Self {
        debug_assert_eq!(points.len(), image.len());
        GroundPermutation { points, image }
    }

    pub fn points(&self) -> &[i32] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn index_of(&self, x: i32) -> Option<usize> {
        index_in(&self.points, x)
    }

    pub(crate) fn image_indices(&self) -> &[usize] {
        &self.image
    }

    /// Image of `x`.
    ///
    /// Panics if `x` is not a point of the ground set.
    pub fn apply(&self, x: i32) -> i32 {
        let i = self
            .index_of(x)
            .unwrap_or_else(|| panic!("{x} is not in the ground set"));
        self.points[self.image[i]]
    }

    pub fn try_apply(&self, x: i32) -> Option<i32> {
        self.index_of(x).map(|i| self.points[self.image[i]])
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &j)| i == j)
    }

    fn check_same_ground(&self, other: &Self) -> Result<()> {
        if self.points != other.points {
            return Err(Error::GroundSetMismatch);
        }
        Ok(())
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.check_same_ground(other)?;
        Ok(GroundPermutation {
            points: self.points.clone(),
            image: other.image.iter().map(|&j| self.image[j]).collect(),
        })
    }

    pub fn inverse(&self) -> Self {
        let mut image = vec![0; self.len()];
        for (i, &j) in self.image.iter().enumerate() {
            image[j] = i;
        }
        GroundPermutation {
            points: self.points.clone(),
            image,
        }
    }

    /// Orbit label of every point (by index), labels numbered in order of
    /// first appearance.
    pub(crate) fn orbit_labels(&self) -> (Vec<usize>, usize) {
        let mut label = vec![usize::MAX; self.len()];
        let mut count = 0;
        for start in 0..self.len() {
            if label[start] != usize::MAX {
                continue;
            }
            let mut i = start;
            while label[i] == usize::MAX {
                label[i] = count;
                i = self.image[i];
            }
            count += 1;
        }
        (label, count)
    }

    /// `#(τ)`, the number of orbits including fixed points.
    pub fn cycle_count(&self) -> usize {
        self.orbit_labels().1
    }

    /// Cycles including fixed points, each starting at its canonically least
    /// point, listed in canonical order of those starting points.
    pub fn cycles(&self) -> Vec<Vec<i32>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(self.points[i]);
                i = self.image[i];
            }
            out.push(cycle);
        }
        out
    }

    /// Permutation of `subset` induced by `self`: each `a` goes to the first
    /// of `τ(a), τ²(a), …` that lies in `subset` again.
    pub fn induced(&self, subset: &[i32]) -> Result<Self> {
        if subset.is_empty() {
            return Err(Error::InvalidSubset("empty subset".into()));
        }
        let mut mask = vec![false; self.len()];
        for &a in subset {
            let i = self
                .index_of(a)
                .ok_or_else(|| Error::InvalidSubset(format!("{a} not in the ground set")))?;
            mask[i] = true;
        }
        let sub = normalize(subset.to_vec()).map_err(|e| Error::InvalidSubset(e.to_string()))?;
        Ok(GroundPermutation::from_map(sub, |a| {
            let i = self.index_of(a).expect("checked above");
            self.points[induced_next(&self.image, &mask, i)]
        })
        .expect("induced map is a bijection"))
    }
}

/// Next element of the induced permutation on the subset marked by `mask`.
#[inline]
pub(crate) fn induced_next(image: &[usize], mask: &[bool], i: usize) -> usize {
    let mut j = image[i];
    while !mask[j] {
        j = image[j];
    }
    j
}

fn index_in(points: &[i32], x: i32) -> Option<usize> {
    points.binary_search_by_key(&point::key(x), |&p| point::key(p)).ok()
}

impl fmt::Display for GroundPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for c in self.cycles().into_iter().filter(|c| c.len() > 1) {
            let body: Vec<String> = c.iter().map(i32::to_string).collect();
            write!(f, "({})", body.join(","))?;
            any = true;
        }
        if !any {
            write!(f, "id")?;
        }
        Ok(())
    }
}

/// `τ ↓ A`.
pub fn induced(tau: &GroundPermutation, subset: &[i32]) -> Result<GroundPermutation> {
    tau.induced(subset)
}
