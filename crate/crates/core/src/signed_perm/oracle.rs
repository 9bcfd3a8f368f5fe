//! Breadth-first word-length oracles over explicit generator sets.
//!
//! These compute `ℓ_B` and `ℓ_D` straight from their definitions as shortest
//! factorisations, independently of the orbit-counting formula in
//! [`SignedPermutation::length_b`].

use std::collections::{HashMap, HashSet, VecDeque};

use super::{SignedPermutation, MAX_ENUM_RANK};
use crate::error::{Error, Result};

pub const DEFAULT_ORACLE_RANK: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Family {
    B,
    D,
}

/// `(i,j)(-i,-j)` and `(i,-j)(-i,j)` for `i < j`, plus `(i,-i)` for type B.
fn generators(n: usize, family: Family) -> Vec<SignedPermutation> {
    let mut out = Vec::new();
    for i in 1..=n as i32 {
        for j in i + 1..=n as i32 {
            for sign in [1, -1] {
                let g = SignedPermutation::from_fn(n, |x| {
                    let (a, s) = (x.abs(), x.signum());
                    if a == i {
                        s * sign * j
                    } else if a == j {
                        s * sign * i
                    } else {
                        x
                    }
                })
                .expect("generator is a signed permutation");
                out.push(g);
            }
        }
    }
    if family == Family::B {
        for i in 1..=n as i32 {
            out.push(
                SignedPermutation::from_fn(n, |x| if x.abs() == i { -x } else { x })
                    .expect("generator is a signed permutation"),
            );
        }
    }
    out
}

/// Runs BFS from the identity; stops early once `target` is reached.
fn bfs(
    n: usize,
    family: Family,
    target: Option<&SignedPermutation>,
) -> (HashMap<SignedPermutation, usize>, Option<usize>) {
    let gens = generators(n, family);
    let id = SignedPermutation::identity(n);
    let mut dist = HashMap::new();
    let mut seen: HashSet<SignedPermutation> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(id.clone());
    queue.push_back((id, 0usize));
    while let Some((g, d)) = queue.pop_front() {
        if target == Some(&g) {
            return (dist, Some(d));
        }
        for s in &gens {
            let next = g.compose(s).expect("same rank");
            if seen.insert(next.clone()) {
                queue.push_back((next, d + 1));
            }
        }
        dist.insert(g, d);
    }
    (dist, None)
}

/// Shortest-word oracle with a configurable rank bound.
#[derive(Clone, Copy, Debug)]
pub struct WordLengthOracle {
    pub max_rank: usize,
}

impl Default for WordLengthOracle {
    fn default() -> Self {
        WordLengthOracle {
            max_rank: DEFAULT_ORACLE_RANK,
        }
    }
}

impl WordLengthOracle {
    pub fn new(max_rank: usize) -> Self {
        WordLengthOracle { max_rank }
    }

    fn check_rank(&self, n: usize) -> Result<()> {
        if n > self.max_rank {
            return Err(Error::BoundExceeded {
                rank: n,
                bound: self.max_rank,
            });
        }
        Ok(())
    }

    /// Shortest factorisation length over all reflections of `B_n`.
    pub fn length_b(&self, tau: &SignedPermutation) -> Result<usize> {
        self.check_rank(tau.n())?;
        bfs(tau.n(), Family::B, Some(tau))
            .1
            .ok_or_else(|| Error::Internal("BFS did not reach a group element".into()))
    }

    /// Shortest factorisation length over the `D_n` generators.
    pub fn length_d(&self, tau: &SignedPermutation) -> Result<usize> {
        if !tau.is_in_d() {
            return Err(Error::NotInD(tau.n()));
        }
        self.check_rank(tau.n())?;
        bfs(tau.n(), Family::D, Some(tau))
            .1
            .ok_or_else(|| Error::Internal("BFS did not reach a group element".into()))
    }
}

/// Word lengths of every element of `B_n` or `D_n`, from a single BFS.
#[derive(Clone, Debug)]
pub struct LengthTable {
    n: usize,
    lengths: HashMap<SignedPermutation, usize>,
}

impl LengthTable {
    pub fn type_b(n: usize) -> Result<Self> {
        Self::build(n, Family::B)
    }

    pub fn type_d(n: usize) -> Result<Self> {
        Self::build(n, Family::D)
    }

    fn build(n: usize, family: Family) -> Result<Self> {
        if n == 0 || n > MAX_ENUM_RANK {
            return Err(Error::BoundExceeded {
                rank: n,
                bound: MAX_ENUM_RANK,
            });
        }
        let (lengths, _) = bfs(n, family, None);
        Ok(LengthTable { n, lengths })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of group elements reached.
    pub fn len(&self) -> usize {
        self.lengths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lengths.is_empty()
    }

    pub fn get(&self, tau: &SignedPermutation) -> Option<usize> {
        self.lengths.get(tau).copied()
    }

    /// `σ ≤ τ` for the order defined by this table's length function.
    pub fn le(&self, sigma: &SignedPermutation, tau: &SignedPermutation) -> Option<bool> {
        let q = sigma.left_divide(tau).ok()?;
        Some(self.get(tau)? == self.get(sigma)? + self.get(&q)?)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&SignedPermutation, usize)> {
        self.lengths.iter().map(|(k, &v)| (k, v))
    }
}
