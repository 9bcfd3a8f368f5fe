use super::GroundPermutation;
use crate::error::{Error, Result};
use crate::point;
use crate::signed_perm::SignedPermutation;

/// Which boundary circle a point sits on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Circle {
    /// `Y = {±1, …, ±p}`.
    Outer,
    /// `Z = {±(p+1), …, ±n}`.
    Inner,
}

/// The annulus with `p` points (and their negatives) on the outer circle and
/// `q` on the inner one, with reference permutation
/// `γ = (1,…,p,−1,…,−p)(p+1,…,n,−(p+1),…,−n)`.
///
/// [`AnnulusConfig::disc`] builds the degenerate single-circle configuration
/// `γ_o = (1,…,n,−1,…,−n)` with an empty inner circle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnnulusConfig {
    p: usize,
    q: usize,
    gamma: GroundPermutation,
    gamma_signed: SignedPermutation,
    outer: Vec<i32>,
    inner: Vec<i32>,
}

fn circle_cycle(lo: i32, hi: i32) -> Vec<i32> {
    (lo..=hi).chain((lo..=hi).map(|x| -x)).collect()
}

impl AnnulusConfig {
    pub fn new(p: usize, q: usize) -> Result<Self> {
        if p == 0 || q == 0 {
            return Err(Error::InvalidParameters(format!(
                "p and q must be positive (got p={p}, q={q})"
            )));
        }
        Self::build(p, q)
    }

    /// Single circle `(1,…,n,−1,…,−n)`.
    pub fn disc(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameters("n must be positive".into()));
        }
        Self::build(n, 0)
    }

    fn build(p: usize, q: usize) -> Result<Self> {
        let n = p + q;
        let outer_cycle = circle_cycle(1, p as i32);
        let mut cycles = vec![outer_cycle.clone()];
        let inner_cycle = circle_cycle(p as i32 + 1, n as i32);
        if q > 0 {
            cycles.push(inner_cycle.clone());
        }
        let gamma = GroundPermutation::from_cycles(point::ground_set(n), &cycles)?;
        let gamma_signed = SignedPermutation::from_ground(&gamma)?;
        let mut outer = outer_cycle;
        point::sort(&mut outer);
        let mut inner = if q > 0 { inner_cycle } else { Vec::new() };
        point::sort(&mut inner);
        Ok(AnnulusConfig {
            p,
            q,
            gamma,
            gamma_signed,
            outer,
            inner,
        })
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn n(&self) -> usize {
        self.p + self.q
    }

    pub fn is_disc(&self) -> bool {
        self.q == 0
    }

    pub fn gamma(&self) -> &GroundPermutation {
        &self.gamma
    }

    /// `γ` as an element of `B_n`.
    pub fn gamma_signed(&self) -> &SignedPermutation {
        &self.gamma_signed
    }

    /// `Y`, in canonical order.
    pub fn outer(&self) -> &[i32] {
        &self.outer
    }

    /// `Z`, in canonical order (empty for a disc).
    pub fn inner(&self) -> &[i32] {
        &self.inner
    }

    pub fn circle_of(&self, x: i32) -> Circle {
        if x.unsigned_abs() as usize <= self.p {
            Circle::Outer
        } else {
            Circle::Inner
        }
    }

    /// A set is γ-connected when it meets both circles.
    pub fn is_connected_set(&self, set: &[i32]) -> bool {
        let outer = set.iter().any(|&x| self.circle_of(x) == Circle::Outer);
        let inner = set.iter().any(|&x| self.circle_of(x) == Circle::Inner);
        outer && inner
    }

    /// All points of `X` in canonical order.
    pub fn ground_set(&self) -> Vec<i32> {
        point::ground_set(self.n())
    }
}
