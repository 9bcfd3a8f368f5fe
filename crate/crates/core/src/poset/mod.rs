//! Finite posets over opaque hashable keys.
//!
//! Down-sets and up-sets are stored as bitsets, which makes meets, joins,
//! covers and axiom checks cheap enough for the few-thousand-element posets
//! built by the verifiers.

mod export;

use std::collections::HashMap;
use std::hash::Hash;

use fixedbitset::FixedBitSet;
use rayon::prelude::*;

use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct FinitePoset<K> {
    elements: Vec<K>,
    index: HashMap<K, usize>,
    /// `down[i] = {j : j ≤ i}`.
    down: Vec<FixedBitSet>,
    /// `up[i] = {j : i ≤ j}`.
    up: Vec<FixedBitSet>,
    /// `lower[i]`: elements covered by `i`, ascending.
    lower: Vec<Vec<usize>>,
    upper: Vec<Vec<usize>>,
}

/// Why a map between two posets is not an order isomorphism. Indices refer
/// to the source poset unless named `target`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsoFailure {
    NotInTarget { source: usize },
    NotInjective { a: usize, b: usize },
    NotSurjective { target: usize },
    OrderMismatch {
        a: usize,
        b: usize,
        source_leq: bool,
        target_leq: bool,
    },
}

impl<K: Clone + Eq + Hash + Send + Sync> FinitePoset<K> {
    /// Builds the poset of `elements` under `leq`, rejecting duplicates and
    /// relations that are not partial orders.
    pub fn build<F>(elements: Vec<K>, leq: F) -> Result<Self>
    where
        F: Fn(&K, &K) -> bool + Sync,
    {
        let n = elements.len();
        let down: Vec<FixedBitSet> = (0..n)
            .into_par_iter()
            .map(|i| {
                let mut set = FixedBitSet::with_capacity(n);
                for j in 0..n {
                    if leq(&elements[j], &elements[i]) {
                        set.insert(j);
                    }
                }
                set
            })
            .collect();
        Self::from_down_sets(elements, down)
    }

    /// Builds a poset from an explicit relation matrix, `rel[i][j] ⇔ i ≤ j`.
    pub fn from_relation(elements: Vec<K>, rel: &[Vec<bool>]) -> Result<Self> {
        let n = elements.len();
        if rel.len() != n || rel.iter().any(|r| r.len() != n) {
            return Err(Error::NotAnOrder("relation matrix has the wrong shape".into()));
        }
        let down = (0..n)
            .map(|i| (0..n).filter(|&j| rel[j][i]).collect::<FixedBitSet>())
            .map(|mut s| {
                s.grow(n);
                s
            })
            .collect();
        Self::from_down_sets(elements, down)
    }

    fn from_down_sets(elements: Vec<K>, down: Vec<FixedBitSet>) -> Result<Self> {
        let n = elements.len();
        let mut index = HashMap::with_capacity(n);
        for (i, e) in elements.iter().enumerate() {
            if index.insert(e.clone(), i).is_some() {
                return Err(Error::NotAnOrder(format!("element {i} is a duplicate")));
            }
        }
        let mut up = vec![FixedBitSet::with_capacity(n); n];
        for (i, d) in down.iter().enumerate() {
            if !d.contains(i) {
                return Err(Error::NotAnOrder(format!("not reflexive at element {i}")));
            }
            for j in d.ones() {
                up[j].insert(i);
            }
        }
        for i in 0..n {
            for j in down[i].ones() {
                if j != i && down[j].contains(i) {
                    return Err(Error::NotAnOrder(format!(
                        "not antisymmetric at elements {j}, {i}"
                    )));
                }
                if !down[j].is_subset(&down[i]) {
                    let k = down[j].difference(&down[i]).next().expect("nonempty");
                    return Err(Error::NotAnOrder(format!(
                        "not transitive at elements {k} ≤ {j} ≤ {i}"
                    )));
                }
            }
        }
        let lower: Vec<Vec<usize>> = (0..n)
            .into_par_iter()
            .map(|j| {
                down[j]
                    .ones()
                    .filter(|&i| i != j && up[i].intersection(&down[j]).count() == 2)
                    .collect()
            })
            .collect();
        let mut upper = vec![Vec::new(); n];
        for (j, ls) in lower.iter().enumerate() {
            for &i in ls {
                upper[i].push(j);
            }
        }
        Ok(FinitePoset {
            elements,
            index,
            down,
            up,
            lower,
            upper,
        })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[K] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &K {
        &self.elements[i]
    }

    pub fn index_of(&self, key: &K) -> Option<usize> {
        self.index.get(key).copied()
    }

    fn require(&self, key: &K) -> Result<usize> {
        self.index_of(key).ok_or(Error::NotAnElement)
    }

    pub fn leq_idx(&self, i: usize, j: usize) -> bool {
        self.down[j].contains(i)
    }

    pub fn leq(&self, a: &K, b: &K) -> Result<bool> {
        Ok(self.leq_idx(self.require(a)?, self.require(b)?))
    }

    /// Cover edges `(i, j)` with `j` covering `i`, sorted.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut edges: Vec<(usize, usize)> = self
            .lower
            .iter()
            .enumerate()
            .flat_map(|(j, ls)| ls.iter().map(move |&i| (i, j)))
            .collect();
        edges.sort_unstable();
        edges
    }

    pub fn lower_covers(&self, i: usize) -> &[usize] {
        &self.lower[i]
    }

    pub fn upper_covers(&self, i: usize) -> &[usize] {
        &self.upper[i]
    }

    /// Reflexive-transitive closure of the cover relation, as down-sets.
    pub fn cover_closure(&self) -> Vec<FixedBitSet> {
        let n = self.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| self.down[i].count_ones(..));
        let mut done = vec![FixedBitSet::new(); n];
        for &j in &order {
            let mut set = FixedBitSet::with_capacity(n);
            set.insert(j);
            for &i in &self.lower[j] {
                set.union_with(&done[i]);
            }
            done[j] = set;
        }
        done
    }

    /// Whether the Hasse diagram regenerates the order relation.
    pub fn covers_generate_order(&self) -> bool {
        self.cover_closure() == self.down
    }

    pub fn minimum(&self) -> Option<usize> {
        (0..self.len()).find(|&i| self.up[i].count_ones(..) == self.len())
    }

    pub fn maximum(&self) -> Option<usize> {
        (0..self.len()).find(|&i| self.down[i].count_ones(..) == self.len())
    }

    fn greatest_in(&self, common: &FixedBitSet, sets: &[FixedBitSet]) -> Option<usize> {
        let best = common.ones().max_by_key(|&m| sets[m].count_ones(..))?;
        common.is_subset(&sets[best]).then_some(best)
    }

    /// Greatest common lower bound of `i` and `j`, if it exists.
    pub fn meet_idx(&self, i: usize, j: usize) -> Option<usize> {
        let common = self.down[i].intersection(&self.down[j]).collect::<FixedBitSet>();
        self.greatest_in(&grown(common, self.len()), &self.down)
    }

    /// Least common upper bound, found by the same search in the dual.
    pub fn join_idx(&self, i: usize, j: usize) -> Option<usize> {
        let common = self.up[i].intersection(&self.up[j]).collect::<FixedBitSet>();
        self.greatest_in(&grown(common, self.len()), &self.up)
    }

    pub fn meet_of(&self, a: &K, b: &K) -> Result<Option<K>> {
        let m = self.meet_idx(self.require(a)?, self.require(b)?);
        Ok(m.map(|m| self.elements[m].clone()))
    }

    pub fn join_of(&self, a: &K, b: &K) -> Result<Option<K>> {
        let m = self.join_idx(self.require(a)?, self.require(b)?);
        Ok(m.map(|m| self.elements[m].clone()))
    }

    /// The least pair `(i, j)`, `i < j`, lacking a meet or a join.
    pub fn lattice_violation(&self) -> Option<(usize, usize)> {
        let n = self.len();
        (0..n).into_par_iter().find_map_first(|i| {
            (i + 1..n)
                .find(|&j| self.meet_idx(i, j).is_none() || self.join_idx(i, j).is_none())
                .map(|j| (i, j))
        })
    }

    pub fn is_lattice(&self) -> bool {
        self.lattice_violation().is_none()
    }

    /// Möbius function `μ(a, b)` of the interval `[a, b]`.
    pub fn moebius(&self, a: &K, b: &K) -> Result<i64> {
        let (i, j) = (self.require(a)?, self.require(b)?);
        if !self.leq_idx(i, j) {
            return Err(Error::NotInPoset("moebius needs a ≤ b".into()));
        }
        let mut memo = HashMap::new();
        Ok(self.moebius_rec(i, j, &mut memo))
    }

    fn moebius_rec(&self, i: usize, j: usize, memo: &mut HashMap<usize, i64>) -> i64 {
        if i == j {
            return 1;
        }
        if let Some(&v) = memo.get(&j) {
            return v;
        }
        let interval: Vec<usize> = self.up[i]
            .intersection(&self.down[j])
            .filter(|&k| k != j)
            .collect();
        let v = -interval
            .into_iter()
            .map(|k| self.moebius_rec(i, k, memo))
            .sum::<i64>();
        memo.insert(j, v);
        v
    }

    /// Coefficients `c_k = #{x : rank(x) = k}`.
    pub fn rank_polynomial<F: Fn(&K) -> usize>(&self, rank: F) -> Vec<usize> {
        let mut coeffs = Vec::new();
        for e in &self.elements {
            let r = rank(e);
            if coeffs.len() <= r {
                coeffs.resize(r + 1, 0);
            }
            coeffs[r] += 1;
        }
        coeffs
    }

    /// Length of the longest chain ending at each element.
    pub fn heights(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&i| self.down[i].count_ones(..));
        let mut height = vec![0; self.len()];
        for &j in &order {
            height[j] = self.lower[j].iter().map(|&i| height[i] + 1).max().unwrap_or(0);
        }
        height
    }
}

fn grown(mut set: FixedBitSet, n: usize) -> FixedBitSet {
    set.grow(n);
    set
}

/// Checks that `f` is a bijection from `source` onto `target` with
/// `a ≤ b ⇔ f(a) ≤ f(b)`.
pub fn check_order_iso<K, L, F>(
    source: &FinitePoset<K>,
    target: &FinitePoset<L>,
    f: F,
) -> std::result::Result<(), IsoFailure>
where
    K: Clone + Eq + Hash + Send + Sync,
    L: Clone + Eq + Hash + Send + Sync,
    F: Fn(&K) -> L,
{
    let mut image = Vec::with_capacity(source.len());
    let mut preimage: HashMap<usize, usize> = HashMap::new();
    for (i, e) in source.elements.iter().enumerate() {
        let t = target
            .index_of(&f(e))
            .ok_or(IsoFailure::NotInTarget { source: i })?;
        if let Some(&a) = preimage.get(&t) {
            return Err(IsoFailure::NotInjective { a, b: i });
        }
        preimage.insert(t, i);
        image.push(t);
    }
    if let Some(t) = (0..target.len()).find(|t| !preimage.contains_key(t)) {
        return Err(IsoFailure::NotSurjective { target: t });
    }
    let n = source.len();
    let mismatch = (0..n).into_par_iter().find_map_first(|a| {
        (0..n).find_map(|b| {
            let source_leq = source.leq_idx(a, b);
            let target_leq = target.leq_idx(image[a], image[b]);
            (source_leq != target_leq).then_some(IsoFailure::OrderMismatch {
                a,
                b,
                source_leq,
                target_leq,
            })
        })
    });
    mismatch.map_or(Ok(()), Err)
}
