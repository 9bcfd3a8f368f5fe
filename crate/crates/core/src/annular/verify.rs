//! Exhaustive verifiers. Each one computes both sides of an equivalence by
//! separate code paths and reports the first disagreement in scan order.

use std::collections::HashMap;

use rayon::prelude::*;
use serde_json::{json, Value};

use super::report::ReportBuilder;
use super::{
    config, is_gamma_connected, refinement_poset, snc_b, VerificationReport, VerifyOptions,
    MAX_BOUND,
};
use crate::error::{Error, Result};
use crate::noncross::{self, find_crossing_pattern, CrossingKind};
use crate::partitions::{is_in_ncb, omega, omega_tilde, tau_from_partition, SignedPartition};
use crate::poset::{check_order_iso, FinitePoset, IsoFailure};
use crate::signed_perm::{enumerate_b, enumerate_d, le_b, LengthTable, SignedPermutation};

struct GroupRow {
    genus_zero: bool,
    below_gamma: bool,
    connected: bool,
    /// Genus zero on both circles separately (disconnected elements only).
    split_genus_zero: Option<bool>,
    zero_orbits: usize,
    connected_zero_orbit: bool,
}

/// `{τ ∈ B_n : genus(τ, γ) = 0} = {τ ∈ B_n : τ ≤ γ}`, together with the
/// three-way equivalence for γ-disconnected elements and the absence of
/// zero-block orbits in γ-connected members.
pub fn verify_theorem1(p: usize, q: usize, opts: &VerifyOptions) -> Result<VerificationReport> {
    let cfg = config(p, q, opts.bound)?;
    let mut report = ReportBuilder::new("B-interval", &[("p", p), ("q", q)]);
    let alpha = cfg.gamma().induced(cfg.outer())?;
    let beta = cfg.gamma().induced(cfg.inner())?;
    let group: Vec<SignedPermutation> = enumerate_b(cfg.n())?.collect();
    let rows = group
        .par_iter()
        .map(|tau| {
            let ground = tau.to_ground();
            let connected = is_gamma_connected(tau, &cfg);
            let split_genus_zero = if connected {
                None
            } else {
                Some(
                    noncross::is_noncrossing(&ground.induced(cfg.outer())?, &alpha)?
                        && noncross::is_noncrossing(&ground.induced(cfg.inner())?, &beta)?,
                )
            };
            let orbits = tau.orbits();
            let connected_zero_orbit = orbits
                .iter()
                .any(|o| o.zero_block && cfg.is_connected_set(&o.cycle));
            Ok(GroupRow {
                genus_zero: noncross::is_noncrossing(&ground, cfg.gamma())?,
                below_gamma: le_b(tau, cfg.gamma_signed())?,
                connected,
                split_genus_zero,
                zero_orbits: orbits.zero_block_count(),
                connected_zero_orbit,
            })
        })
        .collect::<Result<Vec<GroupRow>>>()?;

    let mut snc = 0;
    let mut below = 0;
    let mut connected_snc = 0;
    let mut disconnected = 0;
    for (tau, row) in group.iter().zip(&rows) {
        snc += row.genus_zero as usize;
        below += row.below_gamma as usize;
        if row.genus_zero != row.below_gamma {
            report.fail(json!({
                "check": "genus zero ⇔ τ ≤ γ",
                "tau": tau.to_string(),
                "genus_zero": row.genus_zero,
                "below_gamma": row.below_gamma,
            }));
        }
        if let Some(split) = row.split_genus_zero {
            disconnected += 1;
            if split != row.genus_zero || split != row.below_gamma {
                report.fail(json!({
                    "check": "disconnected three-way equivalence",
                    "tau": tau.to_string(),
                    "genus_zero": row.genus_zero,
                    "circles_genus_zero": split,
                    "below_gamma": row.below_gamma,
                }));
            }
        }
        if row.genus_zero && row.connected {
            connected_snc += 1;
            if row.zero_orbits > 0 {
                report.fail(json!({
                    "check": "connected member without zero-block orbits",
                    "tau": tau.to_string(),
                }));
            }
        }
        if row.genus_zero && row.connected_zero_orbit {
            report.fail(json!({
                "check": "no connected zero-block orbit",
                "tau": tau.to_string(),
            }));
        }
    }
    report.count("group", group.len());
    report.count("snc", snc);
    report.count("below_gamma", below);
    report.count("disconnected", disconnected);
    report.count("connected_snc", connected_snc);
    Ok(report.finish())
}

fn iso_witness<K, L>(
    failure: &IsoFailure,
    source: &FinitePoset<K>,
    target: &FinitePoset<L>,
) -> Value
where
    K: Clone + Eq + std::hash::Hash + Send + Sync + ToString,
    L: Clone + Eq + std::hash::Hash + Send + Sync + ToString,
{
    let s = |i: usize| source.element(i).to_string();
    match *failure {
        IsoFailure::NotInTarget { source } => json!({"check": "image in target", "element": s(source)}),
        IsoFailure::NotInjective { a, b } => json!({"check": "injective", "a": s(a), "b": s(b)}),
        IsoFailure::NotSurjective { target: t } => {
            json!({"check": "surjective", "missed": target.element(t).to_string()})
        }
        IsoFailure::OrderMismatch {
            a,
            b,
            source_leq,
            target_leq,
        } => json!({
            "check": "order isomorphism",
            "a": s(a),
            "b": s(b),
            "source_leq": source_leq,
            "target_leq": target_leq,
        }),
    }
}

/// Ω̃ is an order isomorphism from `S^B_nc(p,q)` (absolute order) onto
/// `NC^B(p,q)` (reverse refinement). Also confirms that plain Ω is not
/// order preserving.
pub fn verify_theorem2(p: usize, q: usize, opts: &VerifyOptions) -> Result<VerificationReport> {
    let cfg = config(p, q, opts.bound)?;
    let mut report = ReportBuilder::new("B-isomorphism", &[("p", p), ("q", q)]);
    let snc = snc_b(&cfg)?;
    let mut parts: Vec<SignedPartition> = snc.iter().map(omega_tilde).collect();
    parts.sort();
    parts.dedup();
    let source = FinitePoset::build(snc.clone(), |a, b| le_b(a, b).expect("equal ranks"))?;
    let target = refinement_poset(parts)?;
    if let Err(failure) = check_order_iso(&source, &target, omega_tilde) {
        report.fail(iso_witness(&failure, &source, &target));
    }
    let comparable = (0..source.len())
        .into_par_iter()
        .map(|a| (0..source.len()).filter(|&b| source.leq_idx(a, b)).count())
        .sum();
    report.count("snc", source.len());
    report.count("ncb", target.len());
    report.count("pairs", source.len() * source.len());
    report.count("comparable_pairs", comparable);
    report.count("covers", source.covers().len());

    let omega_gamma = omega(cfg.gamma_signed());
    let control = snc
        .iter()
        .find(|sigma| !omega(sigma).le_refinement(&omega_gamma).expect("equal ranks"));
    match control {
        Some(sigma) => report.details(json!({
            "negative_control": {
                "sigma": sigma.to_string(),
                "gamma": cfg.gamma_signed().to_string(),
                "omega_sigma": omega(sigma).to_string(),
                "omega_gamma": omega_gamma.to_string(),
            }
        })),
        None => report.fail(json!({
            "check": "negative control",
            "reason": "raw Ω preserved σ ≤ γ for every σ",
        })),
    }
    Ok(report.finish())
}

/// `NC^B(n−1,1)` is closed under intersection meets, is a lattice, and its
/// lattice meet is the intersection meet. Accepts `2 ≤ n ≤ 6`.
pub fn verify_theorem3(n: usize) -> Result<VerificationReport> {
    if n < 2 {
        return Err(Error::InvalidParameters(format!("n must be at least 2 (got {n})")));
    }
    let cfg = config(n - 1, 1, MAX_BOUND)?;
    let mut report = ReportBuilder::new("B-lattice", &[("n", n)]);
    let parts: Vec<SignedPartition> = snc_b(&cfg)?.iter().map(omega_tilde).collect();
    let poset = refinement_poset(parts)?;
    let index: HashMap<&SignedPartition, usize> =
        poset.elements().iter().enumerate().map(|(i, e)| (e, i)).collect();
    let size = poset.len();
    let failure = (0..size).into_par_iter().find_map_first(|i| {
        (i + 1..size).find_map(|j| {
            let (a, b) = (poset.element(i), poset.element(j));
            let meet = a.meet(b).expect("equal ranks");
            match index.get(&meet) {
                None => Some(json!({
                    "check": "meet closure",
                    "a": a.to_string(),
                    "b": b.to_string(),
                    "meet": meet.to_string(),
                })),
                Some(&m) if poset.meet_idx(i, j) != Some(m) => Some(json!({
                    "check": "lattice meet equals intersection meet",
                    "a": a.to_string(),
                    "b": b.to_string(),
                    "meet": meet.to_string(),
                })),
                Some(_) => None,
            }
        })
    });
    if let Some(w) = failure {
        report.fail(w);
    }
    if let Some((i, j)) = poset.lattice_violation() {
        report.fail(json!({
            "check": "lattice",
            "a": poset.element(i).to_string(),
            "b": poset.element(j).to_string(),
        }));
    }
    report.count("elements", size);
    report.count("pairs", size * (size - 1) / 2);
    report.count("covers", poset.covers().len());
    Ok(report.finish())
}

/// Type-D analogues: `S^D_nc(p,q) = {τ ∈ D_n : τ ≤ γ}` in the absolute
/// order of `D_n`, Ω̃ is an order isomorphism onto `NC^D(p,q)`, and for
/// `q = 1` the poset is a lattice whose zero-blocks all contain `±n`.
pub fn verify_type_d(p: usize, q: usize, opts: &VerifyOptions) -> Result<VerificationReport> {
    let cfg = config(p, q, opts.bound)?;
    let n = cfg.n();
    let mut report = ReportBuilder::new("D-analogues", &[("p", p), ("q", q)]);
    let table = LengthTable::type_d(n)?;
    let gamma = cfg.gamma_signed();
    let le_d = |a: &SignedPermutation, b: &SignedPermutation| table.le(a, b).expect("elements of D_n");
    if table.get(gamma).is_none() {
        report.fail(json!({"check": "γ ∈ D_n", "gamma": gamma.to_string()}));
        return Ok(report.finish());
    }
    let group: Vec<SignedPermutation> = enumerate_d(n)?.collect();
    let rows = group
        .par_iter()
        .map(|tau| {
            Ok((
                noncross::is_noncrossing(&tau.to_ground(), cfg.gamma())?,
                le_d(tau, gamma),
                le_b(tau, gamma)?,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut snc = Vec::new();
    for (tau, &(nc, below_d, below_b)) in group.iter().zip(&rows) {
        if nc != below_d || below_d != below_b {
            report.fail(json!({
                "check": "genus zero ⇔ τ ≤ γ in D_n",
                "tau": tau.to_string(),
                "genus_zero": nc,
                "below_gamma_d": below_d,
                "below_gamma_b": below_b,
            }));
        }
        if nc {
            snc.push(tau.clone());
        }
    }
    let mut parts: Vec<SignedPartition> = snc.iter().map(omega_tilde).collect();
    parts.sort();
    parts.dedup();
    let source = FinitePoset::build(snc, le_d)?;
    let target = refinement_poset(parts)?;
    if let Err(failure) = check_order_iso(&source, &target, omega_tilde) {
        report.fail(iso_witness(&failure, &source, &target));
    }
    report.count("group", group.len());
    report.count("snc_d", source.len());
    report.count("ncd", target.len());
    report.count("covers", source.covers().len());
    if q == 1 {
        if let Some((i, j)) = target.lattice_violation() {
            report.fail(json!({
                "check": "lattice",
                "a": target.element(i).to_string(),
                "b": target.element(j).to_string(),
            }));
        }
        let last = n as i32;
        let stray = target.elements().iter().find(|pi| {
            pi.zero_blocks()
                .iter()
                .any(|b| !b.contains(&last) || !b.contains(&-last))
        });
        if let Some(pi) = stray {
            report.fail(json!({"check": "zero-block contains ±n", "partition": pi.to_string()}));
        }
        report.count("lattice", target.is_lattice() as usize);
    }
    Ok(report.finish())
}

fn parse(text: &str, n: usize) -> Result<SignedPermutation> {
    SignedPermutation::parse(text, n)
}

/// The non-lattice configuration of `NC^B(p,q)` for `p, q ≥ 2`:
/// `σ = ((1,2,p+1,p+2))`, `τ = ((1,−(p+2),p+1,−2))`, `σ_o = ((1,p+1))`,
/// `τ_o = ((2,p+2))`.
pub fn counterexample_ncb(p: usize, q: usize) -> Result<VerificationReport> {
    if p < 2 || q < 2 {
        return Err(Error::InvalidParameters(format!(
            "the configuration needs p, q ≥ 2 (got p={p}, q={q})"
        )));
    }
    let cfg = config(p, q, MAX_BOUND)?;
    let n = cfg.n();
    let mut report = ReportBuilder::new("NCB-counterexample", &[("p", p), ("q", q)]);
    let (a, b) = (p + 1, p + 2);
    let sigma = parse(&format!("(1,2,{a},{b})"), n)?;
    let tau = parse(&format!("(1,-{b},{a},-2)"), n)?;
    let sigma_o = parse(&format!("(1,{a})"), n)?;
    let tau_o = parse(&format!("(2,{b})"), n)?;
    let named = [
        ("pi", omega(&sigma)),
        ("rho", omega(&tau)),
        ("pi_o", omega(&sigma_o)),
        ("rho_o", omega(&tau_o)),
    ];
    for (name, part) in &named {
        if !is_in_ncb(part, &cfg)? {
            report.fail(json!({"check": "membership", "name": name, "partition": part.to_string()}));
        }
    }
    let [(_, pi), (_, rho), (_, pi_o), (_, rho_o)] = &named;
    for (lo, hi, lo_name, hi_name) in [
        (pi_o, pi, "pi_o", "pi"),
        (pi_o, rho, "pi_o", "rho"),
        (rho_o, pi, "rho_o", "pi"),
        (rho_o, rho, "rho_o", "rho"),
    ] {
        if !lo.le_refinement(hi)? {
            report.fail(json!({"check": "bounding relation", "lower": lo_name, "upper": hi_name}));
        }
    }
    let ncb: Vec<SignedPartition> = snc_b(&cfg)?.iter().map(omega_tilde).collect();
    let sandwiched: Vec<&SignedPartition> = ncb
        .iter()
        .filter(|nu| {
            pi_o.le_refinement(nu).expect("rank")
                && rho_o.le_refinement(nu).expect("rank")
                && nu.le_refinement(pi).expect("rank")
                && nu.le_refinement(rho).expect("rank")
        })
        .collect();
    if let Some(nu) = sandwiched.first() {
        report.fail(json!({"check": "no sandwiched partition", "nu": nu.to_string()}));
    }
    let meet = pi.meet(rho)?;
    let meet_member = is_in_ncb(&meet, &cfg)?;
    if meet_member {
        report.fail(json!({"check": "meet outside NC^B", "meet": meet.to_string()}));
    }
    let meet_tau = tau_from_partition(&meet, &cfg)?;
    let pattern = find_crossing_pattern(&meet_tau.to_ground(), cfg.gamma())?;
    match &pattern {
        Some(w) if w.kind == CrossingKind::Ac3 => {}
        other => report.fail(json!({
            "check": "meet permutation displays AC-3",
            "tau": meet_tau.to_string(),
            "found": other,
        })),
    }
    report.count("ncb", ncb.len());
    report.count("sandwiched", sandwiched.len());
    report.details(json!({
        "sigma": sigma.to_string(),
        "tau": tau.to_string(),
        "sigma_o": sigma_o.to_string(),
        "tau_o": tau_o.to_string(),
        "pi": pi.to_string(),
        "rho": rho.to_string(),
        "pi_o": pi_o.to_string(),
        "rho_o": rho_o.to_string(),
        "meet": meet.to_string(),
        "meet_in_ncb": meet_member,
        "meet_tau": meet_tau.to_string(),
        "pattern": pattern,
    }));
    Ok(report.finish())
}

/// [`counterexample_ncb`] at `p = q = 2`.
pub fn counterexample_ncb22() -> Result<VerificationReport> {
    counterexample_ncb(2, 2)
}
