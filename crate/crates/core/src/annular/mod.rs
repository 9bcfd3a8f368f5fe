//! Builders for the annular posets of types B and D and exhaustive
//! verifiers for their structure.

mod report;
mod verify;

use std::collections::HashSet;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::noncross::{self, AnnulusConfig, Circle, GroundPermutation};
use crate::partitions::{self, omega_tilde, SignedPartition};
use crate::point;
use crate::poset::FinitePoset;
use crate::signed_perm::{enumerate_b, le_b, LengthTable, SignedPermutation};

pub use report::VerificationReport;
pub use verify::{
    counterexample_ncb, counterexample_ncb22, verify_theorem1, verify_theorem2, verify_theorem3,
    verify_type_d,
};

/// Default largest `n = p + q` for exhaustive checks.
pub const DEFAULT_BOUND: usize = 5;
/// Largest `n` any builder or verifier accepts.
pub const MAX_BOUND: usize = 6;
/// Largest `n` for which the whole orbit family is listed.
pub const ORBIT_FAMILY_BOUND: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    pub bound: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            bound: DEFAULT_BOUND,
        }
    }
}

impl VerifyOptions {
    pub fn new(bound: usize) -> Result<Self> {
        if bound > MAX_BOUND {
            return Err(Error::BoundExceeded {
                rank: bound,
                bound: MAX_BOUND,
            });
        }
        Ok(VerifyOptions { bound })
    }

    pub(crate) fn check(&self, n: usize) -> Result<()> {
        let bound = self.bound.min(MAX_BOUND);
        if n > bound {
            return Err(Error::BoundExceeded { rank: n, bound });
        }
        Ok(())
    }
}

fn config(p: usize, q: usize, bound: usize) -> Result<AnnulusConfig> {
    let cfg = AnnulusConfig::new(p, q)?;
    VerifyOptions { bound }.check(cfg.n())?;
    Ok(cfg)
}

/// Some orbit of `τ` meets both circles.
pub fn is_gamma_connected(tau: &SignedPermutation, cfg: &AnnulusConfig) -> bool {
    cfg.outer()
        .iter()
        .any(|&y| cfg.circle_of(tau.apply(y)) == Circle::Inner)
}

/// `S^B_nc(p,q)`: elements of `B_n` of genus zero against `γ`, in canonical
/// order. Fails with an internal error if the genus test and `τ ≤ γ`
/// disagree anywhere on `B_n`.
pub fn build_snc_b(p: usize, q: usize) -> Result<Vec<SignedPermutation>> {
    let cfg = config(p, q, MAX_BOUND)?;
    snc_b(&cfg)
}

pub(crate) fn snc_b(cfg: &AnnulusConfig) -> Result<Vec<SignedPermutation>> {
    let group: Vec<SignedPermutation> = enumerate_b(cfg.n())?.collect();
    let flags = group
        .par_iter()
        .map(|tau| {
            let nc = noncross::is_noncrossing(&tau.to_ground(), cfg.gamma())?;
            let below = le_b(tau, cfg.gamma_signed())?;
            if nc != below {
                return Err(Error::Internal(format!(
                    "genus test and absolute order disagree at {tau}"
                )));
            }
            Ok(nc)
        })
        .collect::<Result<Vec<bool>>>()?;
    Ok(group
        .into_iter()
        .zip(flags)
        .filter_map(|(tau, keep)| keep.then_some(tau))
        .collect())
}

/// `NC^B(p,q) = Ω̃(S^B_nc(p,q))`, index-aligned with [`build_snc_b`].
pub fn build_ncb(p: usize, q: usize) -> Result<Vec<SignedPartition>> {
    orbit_partitions(&build_snc_b(p, q)?)
}

fn orbit_partitions(perms: &[SignedPermutation]) -> Result<Vec<SignedPartition>> {
    let parts: Vec<SignedPartition> = perms.iter().map(omega_tilde).collect();
    let mut seen = HashSet::with_capacity(parts.len());
    for (tau, pi) in perms.iter().zip(&parts) {
        if !seen.insert(pi) {
            return Err(Error::Internal(format!(
                "Ω̃ is not injective: {tau} repeats the partition {pi}"
            )));
        }
    }
    Ok(parts)
}

/// `S^D_nc(p,q) = S^B_nc(p,q) ∩ D_n`.
pub fn build_snc_d(p: usize, q: usize) -> Result<Vec<SignedPermutation>> {
    Ok(build_snc_b(p, q)?
        .into_iter()
        .filter(SignedPermutation::is_in_d)
        .collect())
}

/// `NC^D(p,q) = Ω̃(S^D_nc(p,q))`, index-aligned with [`build_snc_d`].
pub fn build_ncd(p: usize, q: usize) -> Result<Vec<SignedPartition>> {
    orbit_partitions(&build_snc_d(p, q)?)
}

/// `S^B_nc(p,q)` ordered by the absolute order of `B_n`.
pub fn snc_b_poset(p: usize, q: usize) -> Result<FinitePoset<SignedPermutation>> {
    FinitePoset::build(build_snc_b(p, q)?, |a, b| le_b(a, b).expect("equal ranks"))
}

/// `NC^B(p,q)` under reverse refinement.
pub fn ncb_poset(p: usize, q: usize) -> Result<FinitePoset<SignedPartition>> {
    refinement_poset(build_ncb(p, q)?)
}

/// `S^D_nc(p,q)` ordered by the absolute order of `D_n`.
pub fn snc_d_poset(p: usize, q: usize) -> Result<FinitePoset<SignedPermutation>> {
    let table = LengthTable::type_d(p + q)?;
    FinitePoset::build(build_snc_d(p, q)?, |a, b| {
        table.le(a, b).expect("elements of D_n")
    })
}

/// `NC^D(p,q)` under reverse refinement.
pub fn ncd_poset(p: usize, q: usize) -> Result<FinitePoset<SignedPartition>> {
    refinement_poset(build_ncd(p, q)?)
}

pub(crate) fn refinement_poset(parts: Vec<SignedPartition>) -> Result<FinitePoset<SignedPartition>> {
    FinitePoset::build(parts, |a, b| a.le_refinement(b).expect("equal ranks"))
}

/// `O^B_nc(p,q)`: every set occurring as an orbit of some element of
/// `S^B_nc(p,q)`, sorted by size and then canonically.
pub fn orbit_family(p: usize, q: usize) -> Result<Vec<Vec<i32>>> {
    let cfg = config(p, q, ORBIT_FAMILY_BOUND)?;
    let mut family: Vec<Vec<i32>> = snc_b(&cfg)?
        .iter()
        .flat_map(|tau| tau.orbits().as_sets())
        .collect::<HashSet<_>>()
        .into_iter()
        .collect();
    family.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| point::cmp_seq(a, b)));
    Ok(family)
}

/// Membership of a single set in `O^B_nc(p,q)`: the permutation with `A`
/// and `−A` as its only nontrivial orbits, both cycled canonically, must be
/// non-crossing.
pub fn is_in_orbit_family(subset: &[i32], cfg: &AnnulusConfig) -> Result<bool> {
    VerifyOptions { bound: MAX_BOUND }.check(cfg.n())?;
    let mut set = subset.to_vec();
    point::sort(&mut set);
    let n = cfg.n() as i32;
    if set.is_empty()
        || set.windows(2).any(|w| w[0] == w[1])
        || set.iter().any(|&x| x == 0 || x.abs() > n)
    {
        return Err(Error::InvalidSubset(format!("{subset:?} is not a subset of X")));
    }
    let zero = set.iter().all(|x| set.contains(&-x));
    let cycles = if zero {
        if cfg.is_connected_set(&set) {
            return Ok(false);
        }
        cfg.gamma().induced(&set)?.cycles()
    } else {
        if set.iter().any(|x| set.contains(&-x)) {
            return Ok(false);
        }
        let mu = partitions::canonical_perm(&set, cfg)?.perm;
        let cycle = mu.cycles().remove(0);
        let mirror: Vec<i32> = cycle.iter().map(|&x| -x).collect();
        vec![cycle, mirror]
    };
    let witness = GroundPermutation::from_cycles(cfg.ground_set(), &cycles)?;
    noncross::is_noncrossing(&witness, cfg.gamma())
}
