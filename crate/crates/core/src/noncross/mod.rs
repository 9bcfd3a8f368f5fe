//! Non-crossing permutations relative to a reference permutation `γ`.
//!
//! Membership in `S_nc(X, γ)` is decided by the genus formula
//! ([`is_noncrossing`]). For `#(γ) ∈ {1, 2}` the module also implements the
//! crossing-pattern characterisation ([`is_noncrossing_by_patterns`]), which
//! shares no code with the genus route.

mod annulus;
mod ground;
mod patterns;

pub use annulus::{AnnulusConfig, Circle};
pub use ground::{induced, GroundPermutation};
pub use patterns::{
    ac_test_perm, check_compatible, find_crossing_pattern, has_crossing_pattern,
    is_noncrossing_by_patterns, CrossingKind, CrossingWitness,
};

use crate::error::{Error, Result};

/// `#(τ, γ)`: number of orbits of the group generated by `τ` and `γ`,
/// computed as connected components of the graph with edges `{x, τ(x)}` and
/// `{x, γ(x)}`.
pub fn joint_orbit_count(tau: &GroundPermutation, gamma: &GroundPermutation) -> Result<usize> {
    if tau.points() != gamma.points() {
        return Err(Error::GroundSetMismatch);
    }
    let n = tau.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut components = n;
    for perm in [tau, gamma] {
        for (i, &j) in perm.image_indices().iter().enumerate() {
            let (a, b) = (find(&mut parent, i), find(&mut parent, j));
            if a != b {
                parent[a] = b;
                components -= 1;
            }
        }
    }
    Ok(components)
}

/// Genus `g` of the pair `(τ, γ)`, from
/// `(|X| + 2·#(τ,γ)) − (#(τ) + #(τ⁻¹γ) + #(γ)) = 2g`.
pub fn genus(tau: &GroundPermutation, gamma: &GroundPermutation) -> Result<usize> {
    let joint = joint_orbit_count(tau, gamma)?;
    let quotient = tau.inverse().compose(gamma)?;
    let lhs = (tau.len() + 2 * joint) as i64;
    let rhs = (tau.cycle_count() + quotient.cycle_count() + gamma.cycle_count()) as i64;
    let twice = lhs - rhs;
    if twice < 0 || twice % 2 != 0 {
        return Err(Error::Internal(format!(
            "genus bracket {twice} is not a non-negative even integer"
        )));
    }
    Ok((twice / 2) as usize)
}

/// `τ ∈ S_nc(X, γ)`, i.e. genus zero.
pub fn is_noncrossing(tau: &GroundPermutation, gamma: &GroundPermutation) -> Result<bool> {
    Ok(genus(tau, gamma)? == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn range(n: i32) -> Vec<i32> {
        (1..=n).collect()
    }

    #[test]
    fn joint_orbits() {
        let gamma = GroundPermutation::from_cycles(range(11), &[range(8), vec![9, 10, 11]]).unwrap();
        let id = GroundPermutation::identity(range(11)).unwrap();
        assert_eq!(joint_orbit_count(&id, &gamma).unwrap(), 2);
        let sample33 = GroundPermutation::from_cycles(
            range(11),
            &[vec![1, 9, 7, 8], vec![2, 3], vec![4, 5, 6, 10, 11]],
        )
        .unwrap();
        assert_eq!(joint_orbit_count(&sample33, &gamma).unwrap(), 1);

        let cfg = AnnulusConfig::new(1, 1).unwrap();
        let id2 = GroundPermutation::identity(vec![1, 2, -1, -2]).unwrap();
        assert_eq!(joint_orbit_count(&id2, cfg.gamma()).unwrap(), 2);
        assert_eq!(
            joint_orbit_count(&id, &id2),
            Err(Error::GroundSetMismatch)
        );
    }

    #[test]
    fn genus_examples() {
        let cfg = AnnulusConfig::new(4, 2).unwrap();
        assert_eq!(genus(cfg.gamma(), cfg.gamma()).unwrap(), 0);
        let sample42 = crate::SignedPermutation::parse("(1,2,3,5)(4,-6)", 6)
            .unwrap()
            .to_ground();
        assert_eq!(genus(&sample42, cfg.gamma()).unwrap(), 0);

        let disc = GroundPermutation::cycle(&[1, 2, 3, 4]).unwrap();
        let cross = GroundPermutation::from_cycles(range(4), &[vec![1, 3], vec![2, 4]]).unwrap();
        assert_eq!(genus(&cross, &disc).unwrap(), 1);
        assert!(!is_noncrossing(&cross, &disc).unwrap());
        let id = GroundPermutation::identity(range(4)).unwrap();
        assert!(is_noncrossing(&id, &disc).unwrap());
    }

    #[test]
    fn sample_33_is_noncrossing() {
        let gamma = GroundPermutation::from_cycles(range(11), &[range(8), vec![9, 10, 11]]).unwrap();
        let sample33 = GroundPermutation::from_cycles(
            range(11),
            &[vec![1, 9, 7, 8], vec![2, 3], vec![4, 5, 6, 10, 11]],
        )
        .unwrap();
        assert!(is_noncrossing(&sample33, &gamma).unwrap());
        assert!(is_noncrossing_by_patterns(&sample33, &gamma).unwrap());
        assert_eq!(find_crossing_pattern(&sample33, &gamma).unwrap(), None);
    }
}
