//! Regression counts for the annular posets, computed from the map oracles
//! and frozen into `tests/golden/counts.json` on first run.

use std::collections::{BTreeMap, HashSet};
use std::path::PathBuf;

use serde::{Deserialize, Serialize};

use super::{b_group, cycles_of, gamma_map, is_noncrossing, normalise, word_lengths, Map};

pub const MAX_SUM: usize = 5;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts {
    pub snc_b: usize,
    pub ncb: usize,
    pub rank_polynomial: Vec<usize>,
    pub snc_d: usize,
    pub ncd: usize,
    pub moebius: i64,
}

pub type Table = BTreeMap<String, Counts>;

pub fn key(p: usize, q: usize) -> String {
    format!("p={p},q={q}")
}

pub fn path() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden/counts.json")
}

fn omega_tilde(tau: &Map) -> Vec<Vec<i32>> {
    let mut blocks = Vec::new();
    let mut zero = Vec::new();
    for c in cycles_of(tau) {
        if c.iter().any(|x| c.contains(&-x)) {
            zero.extend(c);
        } else {
            blocks.push(c);
        }
    }
    if !zero.is_empty() {
        blocks.push(zero);
    }
    normalise(blocks)
}

fn refines(a: &[Vec<i32>], b: &[Vec<i32>]) -> bool {
    a.iter().all(|blk| b.iter().any(|big| blk.iter().all(|x| big.contains(x))))
}

fn moebius_bottom_top(parts: &[Vec<Vec<i32>>]) -> i64 {
    let mut order: Vec<&Vec<Vec<i32>>> = parts.iter().collect();
    order.sort_by_key(|p| std::cmp::Reverse(p.len()));
    let mut mu: Vec<i64> = Vec::with_capacity(order.len());
    for (i, x) in order.iter().enumerate() {
        let value = if i == 0 {
            1
        } else {
            -(0..i).filter(|&j| refines(order[j], x)).map(|j| mu[j]).sum::<i64>()
        };
        mu.push(value);
    }
    *mu.last().unwrap()
}

fn is_even(tau: &Map) -> bool {
    tau.iter().filter(|(&x, &y)| x > 0 && y < 0).count() % 2 == 0
}

pub fn compute(p: usize, q: usize) -> Counts {
    let n = p + q;
    let gamma = gamma_map(p, q);
    let lengths = word_lengths(n, true);
    let snc: Vec<Map> = b_group(n).into_iter().filter(|t| is_noncrossing(t, &gamma)).collect();
    let parts: HashSet<Vec<Vec<i32>>> = snc.iter().map(omega_tilde).collect();
    let mut rank_polynomial = vec![0; n + 1];
    for t in &snc {
        rank_polynomial[lengths[t]] += 1;
    }
    while rank_polynomial.last() == Some(&0) {
        rank_polynomial.pop();
    }
    let snc_d: Vec<&Map> = snc.iter().filter(|t| is_even(t)).collect();
    let ncd: HashSet<Vec<Vec<i32>>> = snc_d.iter().map(|t| omega_tilde(t)).collect();
    let parts: Vec<_> = parts.into_iter().collect();
    Counts {
        snc_b: snc.len(),
        ncb: parts.len(),
        rank_polynomial,
        snc_d: snc_d.len(),
        ncd: ncd.len(),
        moebius: moebius_bottom_top(&parts),
    }
}

pub fn compute_all() -> Table {
    let mut table = Table::new();
    for p in 1..MAX_SUM {
        for q in 1..=MAX_SUM - p {
            table.insert(key(p, q), compute(p, q));
        }
    }
    table
}

/// The frozen table; written from `fresh` when the file is missing.
pub fn load_or_freeze(fresh: &Table) -> Table {
    let path = path();
    match std::fs::read_to_string(&path) {
        Ok(text) => serde_json::from_str(&text).expect("malformed golden file"),
        Err(_) => {
            std::fs::create_dir_all(path.parent().unwrap()).unwrap();
            let text = serde_json::to_string_pretty(fresh).unwrap();
            std::fs::write(&path, text + "\n").unwrap();
            fresh.clone()
        }
    }
}

pub fn lookup(table: &Table, p: usize, q: usize) -> &Counts {
    &table[&key(p, q)]
}

