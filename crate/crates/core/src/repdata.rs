//! Scalar representation-theoretic arithmetic: Weyl dimensions for
//! `SO(2m)`, infinitesimal characters, the fair/good range tests, the scalar
//! Verma homomorphism condition, Knapp–Stein poles and the unitarity test for
//! scalar lowest weight modules of `so(2, n)`.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Rational64;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::kostant::KTypeParam;
use crate::roots::{build_root_sets, check_rank, half_sum, rho_l, rho_u, RootSet, RootSetLabel};
use crate::weight::{HalfInt, Weight};
use crate::weyl::is_so_dominant;
use crate::{Error, Result};

/// `Π_{α>0} <μ + ρ_c, α> / <ρ_c, α>` over `Δ+(D_m)`.
pub fn weyl_dim_so2m(m: usize, mu: &[i64]) -> Result<u64> {
    check_rank(m)?;
    if mu.len() != m {
        return Err(Error::RankMismatch {
            expected: m,
            found: mu.len(),
        });
    }
    if !is_so_dominant(mu) {
        return Err(Error::NotDominant {
            what: "Δ+(so(2m))",
            coords: mu.to_vec(),
        });
    }
    let rho: Vec<i64> = (0..m).map(|i| (m - 1 - i) as i64).collect();
    let shifted: Vec<i64> = mu.iter().zip(&rho).map(|(a, b)| a + b).collect();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..m {
        for j in i + 1..m {
            num *= (shifted[i] - shifted[j]) * (shifted[i] + shifted[j]);
            den *= (rho[i] - rho[j]) * (rho[i] + rho[j]);
        }
    }
    let (q, r) = num.div_rem(&den);
    debug_assert!(r.is_zero());
    q.to_u64().ok_or(Error::Overflow)
}

/// `λ 1_{m+1} + (0, -1, ..., -m)`.
pub fn inf_char(m: usize, lambda: i64) -> Weight {
    let coords: Vec<i64> = (0..=m).map(|i| lambda - i as i64).collect();
    Weight::from_ints(&coords)
}

/// Regular for `D_rank`: `<w, α> != 0` for every root `±e_i ± e_j`.
pub fn is_regular_d(w: &Weight) -> bool {
    let c = w.coords();
    (0..c.len()).all(|i| (i + 1..c.len()).all(|j| c[i].abs() != c[j].abs()))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RangeVerdict {
    pub weakly_fair: bool,
    pub good: bool,
    /// Roots of `u` with `<λ1 - ρ(u), α> < 0`.
    pub fair_witnesses: Vec<(Weight, Rational64)>,
    /// Roots of `u` with `<λ1 - ρ(u) + ρ_l, α> <= 0`.
    pub good_witnesses: Vec<(Weight, Rational64)>,
    /// `λ 1_{m+1} - ρ(u)`.
    pub fair_weight: Weight,
    /// `λ 1_{m+1} - ρ(u) + ρ_l`.
    pub good_weight: Weight,
}

pub fn range_verdict(m: usize, lambda: i64) -> Result<RangeVerdict> {
    let rd = build_root_sets(m)?;
    let fair_weight = Weight::ones(m + 1)
        .scale(HalfInt::from_int(lambda))?
        .checked_sub(&rho_u(m)?)?;
    let good_weight = fair_weight.checked_add(&rho_l(m)?)?;
    let mut fair_witnesses = Vec::new();
    let mut good_witnesses = Vec::new();
    for alpha in rd.u.roots() {
        let f = fair_weight.dot(alpha)?;
        if f < Rational64::zero() {
            fair_witnesses.push((alpha.clone(), f));
        }
        let g = good_weight.dot(alpha)?;
        if g <= Rational64::zero() {
            good_witnesses.push((alpha.clone(), g));
        }
    }
    Ok(RangeVerdict {
        weakly_fair: fair_witnesses.is_empty(),
        good: good_witnesses.is_empty(),
        fair_witnesses,
        good_witnesses,
        fair_weight,
        good_weight,
    })
}

fn as_natural(r: Rational64) -> Option<u64> {
    (r.is_integer() && !r.is_negative()).then(|| r.to_integer() as u64)
}

/// The `ℓ` with `(λ, ν) = (m - ℓ, m + ℓ)`, if any.
pub fn verma_hom_condition(m: usize, lambda: Rational64, nu: Rational64) -> Option<u64> {
    let m = Rational64::from_integer(m as i64);
    if lambda + nu != m + m {
        return None;
    }
    as_natural(m - lambda)
}

/// Half sum of the standard positive roots of `D_{m+1}`: `(m, m-1, ..., 0)`.
pub fn rho_g(m: usize) -> Result<Weight> {
    let rd = build_root_sets(m)?;
    let positive: Vec<Weight> = rd.g.roots().iter().filter(|a| a.is_positive()).cloned().collect();
    Ok(half_sum(&RootSet::new(RootSetLabel::G, m + 1, positive)?))
}

/// Harish-Chandra parameter `-λ e_0 + ρ_G` of the scalar generalized Verma
/// module with parameter `λ`.
pub fn verma_hc_parameter(m: usize, lambda: i64) -> Result<Weight> {
    let mut shift = Weight::zero(m + 1);
    shift = shift.checked_sub(&Weight::unit(m + 1, 0).scale(HalfInt::from_int(lambda))?)?;
    shift.checked_add(&rho_g(m)?)
}

/// `ℓ = n/2 - λ` when the Knapp–Stein operator `I(λ) -> I(n - λ)` has a pole
/// at `λ`.
pub fn knapp_stein_residue_degree(n: u64, lambda: Rational64) -> Result<Option<u64>> {
    if n % 2 == 1 || n < 4 {
        return Err(Error::InvalidArgument(alloc::format!(
            "n = {n} must be even and at least 4"
        )));
    }
    Ok(as_natural(Rational64::new(n as i64, 2) - lambda))
}

/// `A(λ_0) = n/2`, the first reduction point for `λ_0 = (1 - n) e_0`.
pub fn ehw_first_reduction_point(n: u64) -> Rational64 {
    Rational64::new(n as i64, 2)
}

/// `B(λ_0) = n - 1`, the last reduction point.
pub fn ehw_last_reduction_point(n: u64) -> Rational64 {
    Rational64::from_integer(n as i64 - 1)
}

/// `L((n - 1 - z) e_0)` is unitarizable iff `z <= 0` or `z ∈ {n/2, n - 1}`.
pub fn ehw_unitarizable(n: u64, z: Rational64) -> Result<bool> {
    if n < 4 {
        return Err(Error::InvalidArgument(alloc::format!("n = {n} must be at least 4")));
    }
    Ok(z <= Rational64::zero() || z == ehw_first_reduction_point(n) || z == ehw_last_reduction_point(n))
}

/// The `e_0` coefficient `n - 1 - z` of the lowest weight module at `z`.
pub fn ehw_lowest_weight(n: u64, z: Rational64) -> Rational64 {
    Rational64::from_integer(n as i64 - 1) - z
}

/// `μ_λ` as a K-type, `(λ; (λ - m + 1) 1_m)`, when it is `Δ+(k)`-dominant.
pub fn bwb_target(m: usize, lambda: i64) -> Result<Option<KTypeParam>> {
    check_rank(m)?;
    let c = lambda - m as i64 + 1;
    Ok(KTypeParam::new(lambda, alloc::vec![c; m]).ok())
}

/// Whether `w2 ∈ W(D_rank) · w1`. Orbits are the multiset of `|w_i|` plus,
/// when no coordinate vanishes, the parity of the number of negative entries.
pub fn orbit_equal(w1: &Weight, w2: &Weight) -> Result<bool> {
    if w1.rank() != w2.rank() {
        return Err(Error::RankMismatch {
            expected: w1.rank(),
            found: w2.rank(),
        });
    }
    let abs_sorted = |w: &Weight| {
        let mut v: Vec<HalfInt> = w.coords().iter().map(|c| c.abs()).collect();
        v.sort();
        v
    };
    let a1 = abs_sorted(w1);
    if a1 != abs_sorted(w2) {
        return Ok(false);
    }
    if a1.iter().any(|c| c.is_zero()) {
        return Ok(true);
    }
    let negatives = |w: &Weight| w.coords().iter().filter(|c| c.signum() < 0).count() % 2;
    Ok(negatives(w1) == negatives(w2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::enumerate_group;
    use alloc::vec;

    fn r(n: i64, d: i64) -> Rational64 {
        Rational64::new(n, d)
    }

    #[test]
    fn weyl_dimensions() {
        assert_eq!(weyl_dim_so2m(2, &[0, 0]).unwrap(), 1);
        for l in 0..6 {
            assert_eq!(weyl_dim_so2m(2, &[l, 0]).unwrap(), ((l + 1) * (l + 1)) as u64);
        }
        assert_eq!(weyl_dim_so2m(2, &[2, 0]).unwrap(), 9);
        assert_eq!(weyl_dim_so2m(3, &[1, 0, 0]).unwrap(), 6);
        // adjoint of so(8); (1,1,±1) split Λ³C⁶ into two 10-dimensional halves
        assert_eq!(weyl_dim_so2m(4, &[1, 1, 0, 0]).unwrap(), 28);
        assert_eq!(weyl_dim_so2m(3, &[1, 1, 1]).unwrap(), 10);
        assert_eq!(weyl_dim_so2m(3, &[1, 1, -1]).unwrap(), 10);
        assert!(weyl_dim_so2m(2, &[0, 1]).is_err());
        assert!(weyl_dim_so2m(2, &[0, 0, 0]).is_err());
    }

    #[test]
    fn infinitesimal_characters() {
        assert_eq!(inf_char(3, 2), Weight::from_ints(&[2, 1, 0, -1]));
        assert_eq!(inf_char(2, 1), Weight::from_ints(&[1, 0, -1]));
        assert_eq!(inf_char(4, 0), Weight::from_ints(&[0, -1, -2, -3, -4]));
        for m in 2..=6 {
            for lambda in -3..=6 {
                // (λ - m/2) 1 + ρ_l
                let v = range_verdict(m, lambda).unwrap();
                assert_eq!(v.good_weight, inf_char(m, lambda));
            }
        }
    }

    #[test]
    fn regularity() {
        assert!(is_regular_d(&Weight::from_ints(&[3, 2, 1, 0])));
        assert!(!is_regular_d(&inf_char(3, 2)));
        assert!(!is_regular_d(&Weight::from_ints(&[1, 1])));
        for m in 2..=6 {
            assert!(!is_regular_d(&inf_char(m, m as i64 - 1)));
            let v = inf_char(m, m as i64 - 1);
            let alpha = {
                let mut a = vec![0i64; m + 1];
                a[m - 2] = 1;
                a[m] = 1;
                Weight::from_ints(&a)
            };
            assert_eq!(v.dot(&alpha).unwrap(), Rational64::zero());
        }
    }

    #[test]
    fn range_verdicts() {
        let v = range_verdict(3, 2).unwrap();
        assert!(v.weakly_fair);
        assert!(!v.good);
        // e_2 + e_3 hits the -1 coordinate of (2, 1, 0, -1)
        assert!(v
            .good_witnesses
            .contains(&(Weight::from_ints(&[0, 0, 1, 1]), r(-1, 1))));
        assert!(range_verdict(3, 3).unwrap().good);
        let v = range_verdict(2, 0).unwrap();
        assert!(!v.weakly_fair);
        assert!(v.fair_witnesses.contains(&(Weight::from_ints(&[1, 1, 0]), r(-2, 1))));
        for m in 2..=6 {
            let v = range_verdict(m, m as i64 - 1).unwrap();
            assert!(v.weakly_fair && !v.good, "m = {m}");
            assert!(!v.good_witnesses.is_empty());
        }
    }

    #[test]
    fn verma_condition() {
        assert_eq!(verma_hom_condition(3, r(2, 1), r(4, 1)), Some(1));
        assert_eq!(verma_hom_condition(3, r(3, 1), r(3, 1)), Some(0));
        assert_eq!(verma_hom_condition(3, r(2, 1), r(3, 1)), None);
        assert_eq!(verma_hom_condition(3, r(4, 1), r(2, 1)), None);
        assert_eq!(verma_hom_condition(3, r(5, 2), r(7, 2)), None);
    }

    #[test]
    fn verma_parameters_share_an_orbit() {
        assert_eq!(rho_g(3).unwrap(), Weight::from_ints(&[3, 2, 1, 0]));
        for m in 2..=5 {
            for l in 0..=5i64 {
                let a = verma_hc_parameter(m, m as i64 - l).unwrap();
                let b = verma_hc_parameter(m, m as i64 + l).unwrap();
                assert!(orbit_equal(&a, &b).unwrap());
            }
        }
    }

    #[test]
    fn knapp_stein() {
        assert_eq!(knapp_stein_residue_degree(4, r(1, 1)).unwrap(), Some(1));
        assert_eq!(knapp_stein_residue_degree(6, r(3, 1)).unwrap(), Some(0));
        assert_eq!(knapp_stein_residue_degree(6, r(7, 2)).unwrap(), None);
        assert_eq!(knapp_stein_residue_degree(6, r(5, 2)).unwrap(), None);
        assert!(knapp_stein_residue_degree(5, r(1, 1)).is_err());
        for m in 2..=6u64 {
            assert_eq!(
                knapp_stein_residue_degree(2 * m, r(m as i64 - 1, 1)).unwrap(),
                Some(1)
            );
        }
    }

    #[test]
    fn ehw() {
        assert!(ehw_unitarizable(6, r(3, 1)).unwrap());
        assert!(!ehw_unitarizable(6, r(1, 1)).unwrap());
        assert!(ehw_unitarizable(6, r(-2, 1)).unwrap());
        assert!(ehw_unitarizable(6, r(5, 1)).unwrap());
        assert!(!ehw_unitarizable(6, r(1, 2)).unwrap());
        assert!(ehw_unitarizable(6, r(0, 1)).unwrap());
        assert_eq!(ehw_first_reduction_point(6), r(3, 1));
        assert_eq!(ehw_last_reduction_point(6), r(5, 1));
        // the harmonic module is L((n/2 - 1) e_0), at z = A(λ_0)
        for m in 2..=6u64 {
            let n = 2 * m;
            assert_eq!(
                ehw_lowest_weight(n, ehw_first_reduction_point(n)),
                r(m as i64 - 1, 1)
            );
        }
        assert!(ehw_unitarizable(3, r(0, 1)).is_err());
    }

    #[test]
    fn bwb_targets() {
        assert_eq!(
            bwb_target(3, 2).unwrap(),
            Some(KTypeParam::new(2, vec![0, 0, 0]).unwrap())
        );
        assert_eq!(
            bwb_target(3, 3).unwrap(),
            Some(KTypeParam::new(3, vec![1, 1, 1]).unwrap())
        );
        assert_eq!(bwb_target(3, 1).unwrap(), None);
    }

    fn brute_orbit(w: &Weight) -> Vec<Weight> {
        enumerate_group(w.rank())
            .unwrap()
            .iter()
            .map(|g| g.act(w).unwrap())
            .collect()
    }

    #[test]
    fn orbit_examples() {
        let w = |c: &[i64]| Weight::from_ints(c);
        assert!(orbit_equal(&w(&[1, 2]), &w(&[2, 1])).unwrap());
        assert!(!orbit_equal(&w(&[1, 2]), &w(&[-1, 2])).unwrap());
        assert!(orbit_equal(&w(&[-1, -2]), &w(&[2, 1])).unwrap());
        assert!(orbit_equal(&w(&[1, 2]), &w(&[1])).is_err());
        for m in 2..=3usize {
            for l in 0..=3i64 {
                let mut a: Vec<i64> = (0..m).map(|i| (m - 1 - i) as i64).collect();
                a.insert(0, l);
                let mut b = a.clone();
                b[0] = -l;
                assert!(orbit_equal(&w(&a), &w(&b)).unwrap());
                assert!(brute_orbit(&w(&a)).contains(&w(&b)));
            }
        }
    }

    #[test]
    fn orbit_rule_matches_enumeration() {
        for rank in 2..=3usize {
            let total = 7i64.pow(rank as u32);
            let grid: Vec<Weight> = (0..total)
                .map(|mut k| {
                    let coords: Vec<i64> = (0..rank)
                        .map(|_| {
                            let c = k % 7 - 3;
                            k /= 7;
                            c
                        })
                        .collect();
                    Weight::from_ints(&coords)
                })
                .collect();
            for a in &grid {
                let orbit = brute_orbit(a);
                for b in &grid {
                    assert_eq!(orbit_equal(a, b).unwrap(), orbit.contains(b), "{a} vs {b}");
                }
            }
        }
    }

    #[test]
    fn half_integer_orbits() {
        let a = Weight::from_twice(&[1, 3, -5]);
        let b = Weight::from_twice(&[-5, -1, -3]);
        assert_eq!(orbit_equal(&a, &b).unwrap(), brute_orbit(&a).contains(&b));
    }
}
