mod common;

use annular_nc::noncross::{
    ac_test_perm, check_compatible, find_crossing_pattern, genus, has_crossing_pattern, induced,
    is_noncrossing, is_noncrossing_by_patterns, joint_orbit_count, AnnulusConfig, CrossingKind,
    GroundPermutation,
};
use annular_nc::signed_perm::enumerate_b;
use annular_nc::{point, SignedPermutation};
use common::Map;

fn ground(map: &Map) -> GroundPermutation {
    let points: Vec<i32> = map.keys().copied().collect();
    GroundPermutation::from_map(points, |x| map[&x]).unwrap()
}

fn sample33() -> (GroundPermutation, GroundPermutation) {
    let pts: Vec<i32> = (1..=11).collect();
    let tau = GroundPermutation::from_cycles(
        pts.clone(),
        &[vec![1, 9, 7, 8], vec![2, 3], vec![4, 5, 6, 10, 11]],
    )
    .unwrap();
    let gamma =
        GroundPermutation::from_cycles(pts, &[(1..=8).collect(), vec![9, 10, 11]]).unwrap();
    (tau, gamma)
}

#[test]
fn induced_and_joint_orbit_examples() {
    let (tau, gamma) = sample33();
    assert_eq!(induced(&tau, &[4, 5, 6]).unwrap(), GroundPermutation::cycle(&[4, 5, 6]).unwrap());
    assert_eq!(induced(&tau, tau.points()).unwrap(), tau);
    let long = GroundPermutation::cycle(&(1..=8).collect::<Vec<_>>()).unwrap();
    assert_eq!(induced(&long, &[1, 3, 4]).unwrap(), GroundPermutation::cycle(&[1, 3, 4]).unwrap());
    assert_eq!(joint_orbit_count(&tau, &gamma).unwrap(), 1);
    let id = GroundPermutation::identity(gamma.points().to_vec()).unwrap();
    assert_eq!(joint_orbit_count(&id, &gamma).unwrap(), 2);
    let cfg = AnnulusConfig::new(1, 1).unwrap();
    let id2 = GroundPermutation::identity(cfg.ground_set()).unwrap();
    assert_eq!(joint_orbit_count(&id2, cfg.gamma()).unwrap(), 2);
    assert!(is_noncrossing(&tau, &gamma).unwrap());
    assert!(find_crossing_pattern(&tau, &gamma).unwrap().is_none());
    assert!(joint_orbit_count(&tau, cfg.gamma()).is_err());
}

#[test]
fn genus_examples() {
    let cfg = AnnulusConfig::new(4, 2).unwrap();
    assert_eq!(genus(cfg.gamma(), cfg.gamma()).unwrap(), 0);
    let sample42 = SignedPermutation::parse("(1,2,3,5)(4,-6)", 6).unwrap().to_ground();
    assert_eq!(genus(&sample42, cfg.gamma()).unwrap(), 0);
    let pts = vec![1, 2, 3, 4];
    let tau = GroundPermutation::from_cycles(pts.clone(), &[vec![1, 3], vec![2, 4]]).unwrap();
    let gamma = GroundPermutation::cycle(&pts).unwrap();
    assert_eq!(genus(&tau, &gamma).unwrap(), 1);
    assert!(!is_noncrossing(&tau, &gamma).unwrap());
    let w = find_crossing_pattern(&tau, &gamma).unwrap().unwrap();
    assert_eq!((w.kind, w.points), (CrossingKind::Dc, vec![1, 2, 3, 4]));
}

#[test]
fn genus_matches_brute_force() {
    for (p, q) in [(1, 0), (2, 0), (3, 0), (1, 1), (2, 1), (1, 2), (3, 1), (2, 2)] {
        let cfg = if q == 0 {
            AnnulusConfig::disc(p).unwrap()
        } else {
            AnnulusConfig::new(p, q).unwrap()
        };
        let gamma = common::gamma_map(p, q);
        for tau in enumerate_b(p + q).unwrap() {
            let g = genus(&tau.to_ground(), cfg.gamma()).unwrap() as i64;
            assert_eq!(2 * g, common::twice_genus(&common::to_map(&tau), &gamma));
        }
    }
}

fn check_equivalence(points: &[i32], gamma_cycles: &[Vec<i32>]) -> usize {
    let gamma_map = common::map_from_cycles(points, gamma_cycles);
    let gamma = ground(&gamma_map);
    let mut noncrossing = 0;
    for tau_map in common::symmetric_group(points) {
        let tau = ground(&tau_map);
        let by_genus = is_noncrossing(&tau, &gamma).unwrap();
        let by_patterns = is_noncrossing_by_patterns(&tau, &gamma).unwrap();
        assert_eq!(by_genus, by_patterns, "τ = {tau}, γ = {gamma}");
        assert_eq!(by_genus, common::is_noncrossing(&tau_map, &gamma_map));
        noncrossing += by_genus as usize;
    }
    noncrossing
}

#[test]
fn disc_pattern_equivalence() {
    // Catalan numbers count non-crossing permutations of a disc
    let catalan = [1, 2, 5, 14, 42, 132];
    for m in 1..=6 {
        let pts: Vec<i32> = (1..=m).collect();
        assert_eq!(check_equivalence(&pts, std::slice::from_ref(&pts)), catalan[m as usize - 1]);
    }
}

#[test]
fn annulus_pattern_equivalence() {
    for m in 2..=7 {
        let pts: Vec<i32> = (1..=m).collect();
        for k in 1..m {
            let cycles = vec![(1..=k).collect(), (k + 1..=m).collect()];
            check_equivalence(&pts, &cycles);
        }
    }
    let pts: Vec<i32> = (1..=7).collect();
    check_equivalence(&pts, &[vec![1, 3, 5], vec![2, 4, 6, 7]]);
}

#[test]
fn signed_annulus_pattern_equivalence() {
    for (p, q) in [(1, 1), (2, 1), (1, 2)] {
        let cfg = AnnulusConfig::new(p, q).unwrap();
        let cycles = cfg.gamma().cycles();
        check_equivalence(&cfg.ground_set(), &cycles);
    }
    for (p, q) in [(2, 2), (3, 1), (1, 3), (3, 2), (2, 3), (4, 1)] {
        let cfg = AnnulusConfig::new(p, q).unwrap();
        for tau in enumerate_b(p + q).unwrap() {
            let g = tau.to_ground();
            assert_eq!(
                is_noncrossing(&g, cfg.gamma()).unwrap(),
                is_noncrossing_by_patterns(&g, cfg.gamma()).unwrap(),
                "{tau} at ({p},{q})"
            );
        }
    }
}

/// All pattern witnesses of one kind, by direct search over point tuples.
fn brute_force_witnesses(tau: &Map, gamma: &Map, kind: CrossingKind) -> Vec<Vec<i32>> {
    let mut pts: Vec<i32> = tau.keys().copied().collect();
    point::sort(&mut pts);
    let orbit_y: Vec<i32> = common::cycles_of(gamma)
        .into_iter()
        .find(|c| c.contains(&pts[0]))
        .unwrap();
    let mut out = Vec::new();
    let is_cycle = |m: &Map, seq: &[i32]| (0..seq.len()).all(|k| m[&seq[k]] == seq[(k + 1) % seq.len()]);
    match kind {
        CrossingKind::Dc | CrossingKind::Ac1 => {
            for a in &pts {
                for b in &pts {
                    for c in &pts {
                        for d in &pts {
                            let s = [*a, *b, *c, *d];
                            if distinct(&s) && point::cmp(*a, *b).is_lt() && point::cmp(*a, *c).is_lt() && point::cmp(*a, *d).is_lt() {
                                let g = common::induced(gamma, &s);
                                let t = common::induced(tau, &s);
                                if is_cycle(&g, &s) && is_cycle(&t, &[*a, *c]) && is_cycle(&t, &[*b, *d]) {
                                    out.push(s.to_vec());
                                }
                            }
                        }
                    }
                }
            }
        }
        CrossingKind::Ac2 | CrossingKind::Ac3 => {
            for &y in pts.iter().filter(|x| orbit_y.contains(x)) {
                for &z in pts.iter().filter(|x| !orbit_y.contains(x)) {
                    let lambda = lambda_map(gamma, y, z);
                    let rest: Vec<i32> = pts.iter().copied().filter(|&x| x != y && x != z).collect();
                    let size = if kind == CrossingKind::Ac2 { 3 } else { 4 };
                    for seq in itertools::Itertools::permutations(rest.iter().copied(), size) {
                        if !seq[1..].iter().all(|&x| point::cmp(seq[0], x).is_lt()) {
                            continue;
                        }
                        let l = common::induced(&lambda, &seq);
                        if !is_cycle(&l, &seq) {
                            continue;
                        }
                        let mut all = seq.clone();
                        all.extend([y, z]);
                        let t = common::induced(tau, &all);
                        let ok = if size == 3 {
                            is_cycle(&t, &[seq[0], seq[2], seq[1]])
                        } else {
                            is_cycle(&t, &[seq[0], seq[2]]) && is_cycle(&t, &[seq[1], seq[3]])
                        };
                        if ok && is_cycle(&t, &[y, z]) {
                            out.push(all);
                        }
                    }
                }
            }
        }
        CrossingKind::Incompatible => {}
    }
    out
}

fn distinct(s: &[i32]) -> bool {
    (0..s.len()).all(|i| (i + 1..s.len()).all(|j| s[i] != s[j]))
}

fn lambda_map(gamma: &Map, y: i32, z: i32) -> Map {
    let mut seq = Vec::new();
    for start in [y, z] {
        let mut x = gamma[&start];
        while x != start {
            seq.push(x);
            x = gamma[&x];
        }
    }
    let mut m: Map = gamma.keys().map(|&x| (x, x)).collect();
    for k in 0..seq.len() {
        m.insert(seq[k], seq[(k + 1) % seq.len()]);
    }
    m
}

fn index_key(points: &[i32]) -> Vec<(bool, u32)> {
    points.iter().map(|&x| point::key(x)).collect()
}

fn check_witness_minimality(tau_map: &Map, gamma_map: &Map, kinds: &[CrossingKind]) {
    let tau = ground(tau_map);
    let gamma = ground(gamma_map);
    let found = find_crossing_pattern(&tau, &gamma).unwrap();
    let expected = kinds.iter().find_map(|&k| {
        let all = brute_force_witnesses(tau_map, gamma_map, k);
        all.into_iter().min_by_key(|w| index_key(w)).map(|w| (k, w))
    });
    assert_eq!(found.map(|w| (w.kind, w.points)), expected, "τ = {tau}");
    assert_eq!(has_crossing_pattern(&tau, &gamma).unwrap(), expected_is_some(tau_map, gamma_map, kinds));
}

fn expected_is_some(tau: &Map, gamma: &Map, kinds: &[CrossingKind]) -> bool {
    kinds.iter().any(|&k| !brute_force_witnesses(tau, gamma, k).is_empty())
}

#[test]
fn witnesses_are_least_in_scan_order() {
    let pts: Vec<i32> = (1..=6).collect();
    let disc = common::map_from_cycles(&pts, std::slice::from_ref(&pts));
    for tau in common::symmetric_group(&pts).iter().step_by(3) {
        check_witness_minimality(tau, &disc, &[CrossingKind::Dc]);
    }
    let annulus = common::map_from_cycles(&pts, &[vec![1, 2, 3], vec![4, 5, 6]]);
    let kinds = [CrossingKind::Ac1, CrossingKind::Ac2, CrossingKind::Ac3];
    for tau in common::symmetric_group(&pts).iter().step_by(2) {
        check_witness_minimality(tau, &annulus, &kinds);
    }
    for (p, q) in [(2, 1), (2, 2)] {
        let gamma = common::gamma_map(p, q);
        for tau in enumerate_b(p + q).unwrap() {
            check_witness_minimality(&common::to_map(&tau), &gamma, &kinds);
        }
    }
}

#[test]
fn ac_test_examples() {
    let pts = vec![1, 2, 3, 4];
    let gamma = GroundPermutation::from_cycles(pts.clone(), &[vec![1, 2], vec![3, 4]]).unwrap();
    let lambda = ac_test_perm(&gamma, 1, 3).unwrap();
    assert_eq!(lambda, GroundPermutation::from_cycles(pts, &[vec![2, 4]]).unwrap());
    let cfg = AnnulusConfig::new(1, 1).unwrap();
    let lambda = ac_test_perm(cfg.gamma(), 1, 2).unwrap();
    assert_eq!(lambda.apply(-1), -2);
    assert_eq!(lambda.apply(-2), -1);
    assert_eq!(lambda.apply(1), 1);
    assert!(ac_test_perm(cfg.gamma(), 2, 1).is_err());
    let cfg = AnnulusConfig::new(3, 2).unwrap();
    for &y in cfg.outer() {
        for &z in cfg.inner() {
            let lambda = ac_test_perm(cfg.gamma(), y, z).unwrap();
            assert_eq!(lambda.apply(y), y);
            assert_eq!(lambda.apply(z), z);
            assert_eq!(lambda.cycle_count(), 3);
        }
    }
}

#[test]
fn compatibility_examples() {
    let cfg = AnnulusConfig::new(4, 2).unwrap();
    let sample42 = SignedPermutation::parse("(1,2,3,5)(4,-6)", 6).unwrap().to_ground();
    assert_eq!(check_compatible(&sample42, cfg.gamma()).unwrap(), None);
    assert_eq!(check_compatible(cfg.gamma(), cfg.gamma()).unwrap(), None);
    let cfg11 = AnnulusConfig::new(1, 1).unwrap();
    let flip = SignedPermutation::parse("(1,-1)", 2).unwrap().to_ground();
    assert_eq!(check_compatible(&flip, cfg11.gamma()).unwrap(), None);
    assert!(is_noncrossing(&flip, cfg11.gamma()).unwrap());
    assert!(is_noncrossing_by_patterns(cfg.gamma(), cfg.gamma()).unwrap());
}

#[test]
fn two_two_meet_permutation_has_ac3() {
    let cfg = AnnulusConfig::new(2, 2).unwrap();
    let tau = SignedPermutation::parse("(1,3)(2,4)", 4).unwrap().to_ground();
    let w = find_crossing_pattern(&tau, cfg.gamma()).unwrap().unwrap();
    assert_eq!(w.kind, CrossingKind::Ac3);
    assert_eq!(w.points.len(), 6);
    assert!(check_compatible(&tau, cfg.gamma()).unwrap().is_none());
    assert!(!is_noncrossing(&tau, cfg.gamma()).unwrap());
}

#[test]
fn disconnected_split() {
    for (p, q) in [(1, 1), (2, 1), (1, 2), (2, 2), (3, 1), (1, 3)] {
        let cfg = AnnulusConfig::new(p, q).unwrap();
        let alpha = cfg.gamma().induced(cfg.outer()).unwrap();
        let beta = cfg.gamma().induced(cfg.inner()).unwrap();
        for tau in enumerate_b(p + q).unwrap() {
            if annular_nc::annular::is_gamma_connected(&tau, &cfg) {
                continue;
            }
            let g = tau.to_ground();
            let split = is_noncrossing(&g.induced(cfg.outer()).unwrap(), &alpha).unwrap()
                && is_noncrossing(&g.induced(cfg.inner()).unwrap(), &beta).unwrap();
            assert_eq!(is_noncrossing(&g, cfg.gamma()).unwrap(), split, "{tau}");
        }
    }
}

#[test]
fn complement_closure() {
    for (p, q) in [(1, 1), (2, 1), (1, 2), (2, 2), (3, 1), (1, 3)] {
        let cfg = AnnulusConfig::new(p, q).unwrap();
        for tau in enumerate_b(p + q).unwrap() {
            let g = tau.to_ground();
            if annular_nc::annular::is_gamma_connected(&tau, &cfg) && is_noncrossing(&g, cfg.gamma()).unwrap() {
                let kreweras = g.inverse().compose(cfg.gamma()).unwrap();
                assert!(is_noncrossing(&kreweras, cfg.gamma()).unwrap(), "{tau}");
            }
        }
    }
}

#[test]
fn pattern_checks_reject_three_cycles() {
    let pts = vec![1, 2, 3];
    let gamma = GroundPermutation::identity(pts.clone()).unwrap();
    assert!(find_crossing_pattern(&gamma, &gamma).is_err());
    assert!(check_compatible(&gamma, &gamma).is_err());
    assert!(is_noncrossing(&gamma, &gamma).unwrap());
}
