//! Symmetric set partitions of `X = {±1, …, ±n}`.
//!
//! Partitions are kept in canonical form: every block sorted in canonical
//! point order and blocks sorted by their least element. Structural equality
//! of canonical forms is equality of partitions.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::annular;
use crate::error::{Error, Result};
use crate::noncross::{self, ac_test_perm, AnnulusConfig, Circle, GroundPermutation};
use crate::point;
use crate::signed_perm::{enumerate_b, SignedPermutation};

/// Largest rank accepted by [`nc_disc_b`].
pub const MAX_DISC_RANK: usize = 6;

#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct SignedPartition {
    n: usize,
    blocks: Vec<Vec<i32>>,
}

#[derive(Deserialize)]
struct RawPartition {
    n: usize,
    blocks: Vec<Vec<i32>>,
}

impl<'de> Deserialize<'de> for SignedPartition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawPartition::deserialize(d)?;
        SignedPartition::new(raw.n, raw.blocks).map_err(serde::de::Error::custom)
    }
}

impl SignedPartition {
    /// Validates and canonicalises a partition of `{±1, …, ±n}`.
    ///
    /// Blocks need not be closed under negation; use
    /// [`SignedPartition::is_symmetric`] to test that.
    pub fn new(n: usize, blocks: Vec<Vec<i32>>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidPartition("rank must be positive".into()));
        }
        let mut seen = vec![false; 2 * n];
        for block in &blocks {
            if block.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            for &x in block {
                if x == 0 || x.unsigned_abs() as usize > n {
                    return Err(Error::InvalidPartition(format!(
                        "point {x} outside {{±1,…,±{n}}}"
                    )));
                }
                if std::mem::replace(&mut seen[point::index(x, n)], true) {
                    return Err(Error::InvalidPartition(format!("point {x} occurs twice")));
                }
            }
        }
        if let Some(i) = seen.iter().position(|&s| !s) {
            return Err(Error::InvalidPartition(format!(
                "point {} is not covered",
                point::at(i, n)
            )));
        }
        Ok(Self::canonical(n, blocks))
    }

    fn canonical(n: usize, mut blocks: Vec<Vec<i32>>) -> Self {
        for block in &mut blocks {
            point::sort(block);
        }
        blocks.sort_by(|a, b| point::cmp(a[0], b[0]));
        SignedPartition { n, blocks }
    }

    /// Builds a partition from a block label for every point index.
    fn from_labels(n: usize, labels: &[usize]) -> Self {
        let mut slots: Vec<Vec<i32>> = Vec::new();
        let mut map = std::collections::HashMap::new();
        for (i, &l) in labels.iter().enumerate() {
            let slot = *map.entry(l).or_insert_with(|| {
                slots.push(Vec::new());
                slots.len() - 1
            });
            slots[slot].push(point::at(i, n));
        }
        Self::canonical(n, slots)
    }

    pub fn singletons(n: usize) -> Self {
        Self::canonical(n, point::ground_set(n).into_iter().map(|x| vec![x]).collect())
    }

    /// The one-block partition `{X}`.
    pub fn single_block(n: usize) -> Self {
        Self::canonical(n, vec![point::ground_set(n)])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<i32>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Block index of every point, by point index.
    fn labels(&self) -> Vec<usize> {
        let mut labels = vec![0; 2 * self.n];
        for (k, block) in self.blocks.iter().enumerate() {
            for &x in block {
                labels[point::index(x, self.n)] = k;
            }
        }
        labels
    }

    /// The block containing `x`.
    pub fn block_of(&self, x: i32) -> Option<&[i32]> {
        self.blocks
            .iter()
            .find(|b| b.contains(&x))
            .map(Vec::as_slice)
    }

    /// Whether `−A` is a block for every block `A`.
    pub fn is_symmetric(&self) -> bool {
        let set: HashSet<&Vec<i32>> = self.blocks.iter().collect();
        self.blocks.iter().all(|b| set.contains(&negated(b)))
    }

    /// Blocks with `A = −A`.
    pub fn zero_blocks(&self) -> Vec<&[i32]> {
        self.blocks
            .iter()
            .filter(|b| is_zero_block(b))
            .map(Vec::as_slice)
            .collect()
    }

    /// Reverse refinement: every block of `other` is a union of blocks of
    /// `self`.
    pub fn le_refinement(&self, other: &Self) -> Result<bool> {
        if self.n != other.n {
            return Err(Error::RankMismatch(self.n, other.n));
        }
        let outer = other.labels();
        Ok(self.blocks.iter().all(|b| {
            let l = outer[point::index(b[0], self.n)];
            b.iter().all(|&x| outer[point::index(x, self.n)] == l)
        }))
    }

    /// Intersection meet: all nonempty `A ∩ B`.
    pub fn meet(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::RankMismatch(self.n, other.n));
        }
        let (a, b) = (self.labels(), other.labels());
        let k = other.blocks.len();
        let labels: Vec<usize> = a.iter().zip(&b).map(|(&x, &y)| x * k + y).collect();
        Ok(Self::from_labels(self.n, &labels))
    }

    /// Merges all zero-blocks into one block.
    pub fn merge_zero_blocks(&self) -> Self {
        let (zero, mut rest): (Vec<_>, Vec<_>) =
            self.blocks.iter().cloned().partition(|b| is_zero_block(b));
        if !zero.is_empty() {
            rest.push(zero.concat());
        }
        Self::canonical(self.n, rest)
    }
}

impl Ord for SignedPartition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n.cmp(&other.n).then_with(|| {
            for (a, b) in self.blocks.iter().zip(&other.blocks) {
                match point::cmp_seq(a, b) {
                    Ordering::Equal => continue,
                    ord => return ord,
                }
            }
            self.blocks.len().cmp(&other.blocks.len())
        })
    }
}

impl PartialOrd for SignedPartition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SignedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, block) in self.blocks.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            let items: Vec<String> = block.iter().map(i32::to_string).collect();
            write!(f, "{{{}}}", items.join(","))?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for SignedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P{}{}", self.n, self)
    }
}

fn negated(block: &[i32]) -> Vec<i32> {
    let mut v: Vec<i32> = block.iter().map(|&x| -x).collect();
    point::sort(&mut v);
    v
}

fn is_zero_block(block: &[i32]) -> bool {
    block.contains(&-block[0])
}

/// `Ω(τ)`: the orbits of `τ`.
pub fn omega(tau: &SignedPermutation) -> SignedPartition {
    SignedPartition::canonical(tau.n(), tau.orbits().as_sets())
}

/// `Ω̃(τ)`: the orbits of `τ` with all zero-blocks merged.
pub fn omega_tilde(tau: &SignedPermutation) -> SignedPartition {
    omega(tau).merge_zero_blocks()
}

pub fn le_refinement(pi: &SignedPartition, rho: &SignedPartition) -> Result<bool> {
    pi.le_refinement(rho)
}

pub fn meet(pi: &SignedPartition, rho: &SignedPartition) -> Result<SignedPartition> {
    pi.meet(rho)
}

pub fn zero_blocks(pi: &SignedPartition) -> Vec<&[i32]> {
    pi.zero_blocks()
}

/// Builds the permutation of `X` whose restriction to each block is the
/// given cyclic order; `None` if the result is not in `B_n`.
fn assemble(n: usize, orders: &[GroundPermutation]) -> Result<Option<SignedPermutation>> {
    let cycles: Vec<Vec<i32>> = orders.iter().flat_map(|g| g.cycles()).collect();
    let g = GroundPermutation::from_cycles(point::ground_set(n), &cycles)?;
    Ok(SignedPermutation::from_ground(&g).ok())
}

/// `NC^B(n)`: orbit partitions of the elements of `B_n` that are
/// non-crossing with respect to `(1,…,n,−1,…,−n)`, in canonical order.
pub fn nc_disc_b(n: usize) -> Result<Vec<SignedPartition>> {
    if n > MAX_DISC_RANK {
        return Err(Error::BoundExceeded {
            rank: n,
            bound: MAX_DISC_RANK,
        });
    }
    let disc = AnnulusConfig::disc(n)?;
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    for tau in enumerate_b(n)? {
        if noncross::is_noncrossing(&tau.to_ground(), disc.gamma())? {
            let pi = omega(&tau);
            if seen.insert(pi.clone()) {
                out.push(pi);
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Membership in `NC^B(n)`: the only candidate permutation cycles every
/// block in disc order; test it with the genus formula.
pub fn is_in_nc_disc_b(pi: &SignedPartition) -> Result<bool> {
    let disc = AnnulusConfig::disc(pi.n)?;
    let orders = pi
        .blocks
        .iter()
        .map(|b| disc.gamma().induced(b))
        .collect::<Result<Vec<_>>>()?;
    let Some(tau) = assemble(pi.n, &orders)? else {
        return Ok(false);
    };
    Ok(noncross::is_noncrossing(&tau.to_ground(), disc.gamma())? && omega(&tau) == *pi)
}

/// `Φ(θ, ω)` for `θ ∈ NC^B(p)`, `ω ∈ NC^B(q)`: the non-symmetric blocks of
/// `θ`, those of `ω` shifted onto `{±(p+1), …, ±n}`, and the remaining
/// points as one block.
pub fn phi(theta: &SignedPartition, omega_part: &SignedPartition) -> Result<SignedPartition> {
    for part in [theta, omega_part] {
        if !is_in_nc_disc_b(part)? {
            return Err(Error::NotInPoset(format!("{part} is not in NC^B({})", part.n)));
        }
    }
    let p = theta.n as i32;
    let n = theta.n + omega_part.n;
    let mut blocks: Vec<Vec<i32>> = theta
        .blocks
        .iter()
        .filter(|b| !is_zero_block(b))
        .cloned()
        .collect();
    blocks.extend(
        omega_part
            .blocks
            .iter()
            .filter(|b| !is_zero_block(b))
            .map(|b| b.iter().map(|&x| if x > 0 { x + p } else { x - p }).collect()),
    );
    let covered: HashSet<i32> = blocks.iter().flatten().copied().collect();
    let rest: Vec<i32> = point::ground_set(n)
        .into_iter()
        .filter(|x| !covered.contains(x))
        .collect();
    if !rest.is_empty() {
        blocks.push(rest);
    }
    SignedPartition::new(n, blocks)
}

/// `Ψ₁(π)`: traces of the blocks on `Y`, as a partition of rank `p`.
pub fn psi1(pi: &SignedPartition, cfg: &AnnulusConfig) -> Result<SignedPartition> {
    check_rank(pi, cfg)?;
    let blocks = pi
        .blocks
        .iter()
        .map(|b| {
            b.iter()
                .copied()
                .filter(|&x| cfg.circle_of(x) == Circle::Outer)
                .collect::<Vec<_>>()
        })
        .filter(|b| !b.is_empty())
        .collect();
    SignedPartition::new(cfg.p(), blocks)
}

/// `Ψ₂(π)`: traces of the blocks on `Z`, shifted down by `p`.
pub fn psi2(pi: &SignedPartition, cfg: &AnnulusConfig) -> Result<SignedPartition> {
    check_rank(pi, cfg)?;
    let p = cfg.p() as i32;
    let blocks = pi
        .blocks
        .iter()
        .map(|b| {
            b.iter()
                .copied()
                .filter(|&x| cfg.circle_of(x) == Circle::Inner)
                .map(|x| if x > 0 { x - p } else { x + p })
                .collect::<Vec<_>>()
        })
        .filter(|b| !b.is_empty())
        .collect();
    SignedPartition::new(cfg.q(), blocks)
}

fn check_rank(pi: &SignedPartition, cfg: &AnnulusConfig) -> Result<()> {
    if pi.n != cfg.n() {
        return Err(Error::RankMismatch(pi.n, cfg.n()));
    }
    if cfg.is_disc() {
        return Err(Error::InvalidParameters("an annulus needs q ≥ 1".into()));
    }
    Ok(())
}

/// A subset `A ⊆ X` together with the cyclic order `μ_A` on it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalOrbitPerm {
    pub subset: Vec<i32>,
    pub perm: GroundPermutation,
}

/// `μ_A`: `γ↓A` when `A` lies on one circle, otherwise `λ_{−y,−z}↓A` with
/// `y` the least point of `A ∩ Y` and `z` the least point of `A ∩ Z`.
pub fn canonical_perm(subset: &[i32], cfg: &AnnulusConfig) -> Result<CanonicalOrbitPerm> {
    let subset = checked_subset(subset, cfg)?;
    if !cfg.is_connected_set(&subset) {
        let perm = cfg.gamma().induced(&subset)?;
        return Ok(CanonicalOrbitPerm { subset, perm });
    }
    let y = *subset
        .iter()
        .find(|&&x| cfg.circle_of(x) == Circle::Outer)
        .expect("connected set meets Y");
    let z = *subset
        .iter()
        .find(|&&x| cfg.circle_of(x) == Circle::Inner)
        .expect("connected set meets Z");
    canonical_perm_with(&subset, cfg, y, z)
}

/// `λ_{−y,−z}↓A` for a γ-connected `A` and an explicit choice of
/// `y ∈ A ∩ Y`, `z ∈ A ∩ Z`.
pub fn canonical_perm_with(
    subset: &[i32],
    cfg: &AnnulusConfig,
    y: i32,
    z: i32,
) -> Result<CanonicalOrbitPerm> {
    let subset = checked_subset(subset, cfg)?;
    if !cfg.is_connected_set(&subset) {
        return Err(Error::InvalidSubset("subset lies on a single circle".into()));
    }
    if subset.iter().any(|x| subset.contains(&-x)) {
        return Err(Error::InvalidSubset(
            "a γ-connected orbit cannot meet its negative".into(),
        ));
    }
    if !subset.contains(&y) || !subset.contains(&z) {
        return Err(Error::InvalidSubset(format!("{y} or {z} is not in the subset")));
    }
    let lambda = ac_test_perm(cfg.gamma(), -y, -z)?;
    let perm = lambda.induced(&subset)?;
    Ok(CanonicalOrbitPerm { subset, perm })
}

fn checked_subset(subset: &[i32], cfg: &AnnulusConfig) -> Result<Vec<i32>> {
    if subset.is_empty() {
        return Err(Error::InvalidSubset("empty subset".into()));
    }
    let mut v = subset.to_vec();
    point::sort(&mut v);
    let n = cfg.n() as i32;
    if v.windows(2).any(|w| w[0] == w[1]) || v.iter().any(|&x| x == 0 || x.abs() > n) {
        return Err(Error::InvalidSubset(format!("{subset:?} is not a subset of X")));
    }
    Ok(v)
}

/// The permutation with orbits the blocks of `ν`, acting on each block as
/// its canonical permutation. Every block is first checked for membership
/// in the orbit family.
pub fn tau_from_partition(nu: &SignedPartition, cfg: &AnnulusConfig) -> Result<SignedPermutation> {
    if nu.n != cfg.n() {
        return Err(Error::RankMismatch(nu.n, cfg.n()));
    }
    for block in &nu.blocks {
        if !annular::is_in_orbit_family(block, cfg)? {
            return Err(Error::NotInPoset(format!(
                "block {block:?} is not an orbit of any annular non-crossing permutation"
            )));
        }
    }
    let orders = nu
        .blocks
        .iter()
        .map(|b| canonical_perm(b, cfg).map(|c| c.perm))
        .collect::<Result<Vec<_>>>()?;
    assemble(nu.n, &orders)?.ok_or_else(|| {
        Error::InvalidPermutation(format!("canonical permutations of {nu} do not commute with negation"))
    })
}

/// Splits a zero-block meeting both circles into its two traces.
fn split_connected_zero_block(pi: &SignedPartition, cfg: &AnnulusConfig) -> SignedPartition {
    let mut blocks = Vec::with_capacity(pi.blocks.len() + 1);
    for b in &pi.blocks {
        if is_zero_block(b) && cfg.is_connected_set(b) {
            let (y, z): (Vec<i32>, Vec<i32>) =
                b.iter().partition(|&&x| cfg.circle_of(x) == Circle::Outer);
            blocks.push(y);
            blocks.push(z);
        } else {
            blocks.push(b.clone());
        }
    }
    SignedPartition::canonical(pi.n, blocks)
}

/// The candidate `τ` with `Ω̃(τ) = π`, or `None` if none exists in `B_n`.
fn candidate_for(pi: &SignedPartition, cfg: &AnnulusConfig) -> Result<Option<SignedPermutation>> {
    if pi.n != cfg.n() {
        return Err(Error::RankMismatch(pi.n, cfg.n()));
    }
    let split = split_connected_zero_block(pi, cfg);
    let mut orders = Vec::with_capacity(split.blocks.len());
    for b in &split.blocks {
        if is_zero_block(b) {
            if cfg.is_connected_set(b) {
                return Ok(None);
            }
            orders.push(cfg.gamma().induced(b)?);
        } else if cfg.is_connected_set(b) && b.iter().any(|x| b.contains(&-x)) {
            return Ok(None);
        } else {
            orders.push(canonical_perm(b, cfg)?.perm);
        }
    }
    let Some(tau) = assemble(pi.n, &orders)? else {
        return Ok(None);
    };
    let ok = noncross::is_noncrossing(&tau.to_ground(), cfg.gamma())? && omega_tilde(&tau) == *pi;
    Ok(ok.then_some(tau))
}

/// Membership in `NC^B(p,q)` without enumerating the poset.
pub fn is_in_ncb(pi: &SignedPartition, cfg: &AnnulusConfig) -> Result<bool> {
    Ok(candidate_for(pi, cfg)?.is_some())
}

/// The unique `τ ∈ S^B_nc(p,q)` with `Ω̃(τ) = π`.
pub fn snc_preimage(pi: &SignedPartition, cfg: &AnnulusConfig) -> Result<SignedPermutation> {
    candidate_for(pi, cfg)?.ok_or_else(|| Error::NotInPoset(format!("{pi} is not in NC^B")))
}

/// `Ω(τ)` for the unique `τ ∈ S^B_nc(p,q)` with `Ω̃(τ) = π`: a zero-block
/// meeting both circles splits into its traces on `Y` and `Z`.
pub fn recover_omega(pi: &SignedPartition, cfg: &AnnulusConfig) -> Result<SignedPartition> {
    if !is_in_ncb(pi, cfg)? {
        return Err(Error::NotInPoset(format!("{pi} is not in NC^B")));
    }
    Ok(split_connected_zero_block(pi, cfg))
}
