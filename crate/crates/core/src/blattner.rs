//! K-multiplicities of the cohomologically induced module through the
//! generalized Blattner formula.
//!
//! For a K-type `π = (μ_0; μ)` the alternating sum over `H^j(u∩k, π)` is
//! paired against `S(u∩p) ⊗ C_{μ_λ}`. The degree-`ℓ` piece of `S(u∩p)` has
//! charge `ℓ`, so only `ℓ = μ_0 - λ` can contribute and the sum is finite.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::kostant::{KTypeParam, Kostant, LKTypeParam};
use crate::repdata::range_verdict;
use crate::roots::check_rank;
use crate::weyl::is_so_dominant;
use crate::{Error, Result};

/// `μ_λ = C_λ ⊗ Λ^top(k/(q∩k))` as an `L∩K`-type: `(λ; (λ-m+1)·1_m)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MuLambda {
    pub lambda: i64,
    pub as_lk: LKTypeParam,
}

impl MuLambda {
    pub fn new(m: usize, lambda: i64) -> Result<Self> {
        check_rank(m)?;
        let shift = lambda - m as i64 + 1;
        Ok(MuLambda {
            lambda,
            as_lk: LKTypeParam::new(lambda, alloc::vec![shift; m])?,
        })
    }
}

/// `C_l ⊠ F^{U(m)}(l, 0, ..., 0)`, the degree-`l` piece of `S(u∩p)`.
pub fn s_u_cap_p_component(m: usize, l: i64) -> Result<LKTypeParam> {
    if l < 0 {
        return Err(Error::NegativeDegree(l));
    }
    let mut hw = alloc::vec![0; m];
    hw[0] = l;
    LKTypeParam::new(l, hw)
}

/// What the numbers in a table mean.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableSemantics {
    /// Honest K-multiplicities.
    Multiplicity,
    /// Alternating sum only; the higher derived functors need not vanish.
    EulerCharacteristic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScanBounds {
    pub min_mu0: i64,
    pub max_mu0: i64,
    pub max_mu1: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KTypeTable {
    pub m: usize,
    pub lambda: i64,
    /// Nonzero multiplicities only, ordered lexicographically in `(μ_0, μ)`.
    pub entries: BTreeMap<KTypeParam, i64>,
    pub bounds: ScanBounds,
    pub semantics: TableSemantics,
}

impl KTypeTable {
    pub fn get(&self, pi: &KTypeParam) -> i64 {
        self.entries.get(pi).copied().unwrap_or(0)
    }

    pub fn is_multiplicity_free(&self) -> bool {
        self.entries.values().all(|&v| v == 1)
    }
}

/// All `μ` with `max_mu1 >= μ_1 >= ... >= μ_{m-1} >= |μ_m|`, in
/// lexicographic order.
pub fn dominant_so_weights(m: usize, max_mu1: i64) -> Vec<Vec<i64>> {
    fn rec(prefix: &mut Vec<i64>, m: usize, upper: i64, out: &mut Vec<Vec<i64>>) {
        let i = prefix.len();
        if i == m {
            out.push(prefix.clone());
            return;
        }
        let lower = if i == m - 1 { -upper } else { 0 };
        for v in lower..=upper {
            prefix.push(v);
            let next = if i == m - 1 { upper } else { v };
            rec(prefix, m, next, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if m == 0 || max_mu1 < 0 {
        return out;
    }
    if m == 1 {
        // SO(2): any integer in range
        return (-max_mu1..=max_mu1).map(|v| alloc::vec![v]).collect();
    }
    rec(&mut Vec::with_capacity(m), m, max_mu1, &mut out);
    debug_assert!(out.iter().all(|mu| is_so_dominant(mu)));
    out.sort();
    out
}

/// Right-hand side of the Blattner formula for one K-type, using a
/// prebuilt [`Kostant`].
pub fn multiplicity_with(kostant: &Kostant, lambda: i64, pi: &KTypeParam) -> Result<i64> {
    let m = kostant.m();
    if pi.rank() != m {
        return Err(Error::RankMismatch {
            expected: m,
            found: pi.rank(),
        });
    }
    let l = pi.mu0() - lambda;
    if l < 0 {
        return Ok(0);
    }
    let base = lambda - m as i64 + 1;
    let mut target = alloc::vec![base; m];
    target[0] += l;
    Ok(kostant
        .shifted_terms(pi.mu())
        .filter(|(hw, _)| *hw == target)
        .map(|(_, len)| if len % 2 == 0 { 1 } else { -1 })
        .sum())
}

pub fn multiplicity(m: usize, lambda: i64, pi: &KTypeParam) -> Result<i64> {
    multiplicity_with(&Kostant::new(m)?, lambda, pi)
}

/// Weakly fair parameters give honest multiplicities.
pub fn table_semantics(m: usize, lambda: i64) -> Result<TableSemantics> {
    Ok(if range_verdict(m, lambda)?.weakly_fair {
        TableSemantics::Multiplicity
    } else {
        TableSemantics::EulerCharacteristic
    })
}

/// The K-types in a scan window, in table order.
pub fn scan_grid(m: usize, bounds: ScanBounds) -> Vec<KTypeParam> {
    let mus = dominant_so_weights(m, bounds.max_mu1);
    (bounds.min_mu0..=bounds.max_mu0)
        .flat_map(|mu0| {
            mus.iter()
                .map(move |mu| KTypeParam::new(mu0, mu.clone()).expect("grid is dominant"))
        })
        .collect()
}

pub fn ktype_table_with(kostant: &Kostant, lambda: i64, bounds: ScanBounds) -> Result<KTypeTable> {
    let m = kostant.m();
    let mut entries = BTreeMap::new();
    for pi in scan_grid(m, bounds) {
        let mult = multiplicity_with(kostant, lambda, &pi)?;
        if mult != 0 {
            entries.insert(pi, mult);
        }
    }
    Ok(KTypeTable {
        m,
        lambda,
        entries,
        bounds,
        semantics: table_semantics(m, lambda)?,
    })
}

/// Scans `-max_mu0 <= μ_0 <= max_mu0` and `μ_1 <= max_mu1`.
pub fn ktype_table(m: usize, lambda: i64, max_mu0: i64, max_mu1: i64) -> Result<KTypeTable> {
    if max_mu0 < 0 || max_mu1 < 0 {
        return Err(Error::InvalidArgument("scan bounds must be nonnegative".into()));
    }
    let bounds = ScanBounds {
        min_mu0: -max_mu0,
        max_mu0,
        max_mu1,
    };
    ktype_table_with(&Kostant::new(m)?, lambda, bounds)
}

/// Window that holds exactly the K-types `ℓ <= max_l` of the harmonic
/// module when `λ = m - 1`.
pub fn bounds_for_max_l(m: usize, lambda: i64, max_l: u64) -> ScanBounds {
    let max_mu0 = max_l as i64 + lambda.max(m as i64 - 1);
    ScanBounds {
        min_mu0: -max_mu0,
        max_mu0,
        max_mu1: max_l as i64,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LemmaVariant {
    /// (i) ⟺ (ii) for every individual `w`.
    PerElement,
    /// For each `(μ, ℓ)`, the number of `w` satisfying (i) is 1 exactly when
    /// `μ = (ℓ, 0, ..., 0)` and 0 otherwise.
    UniqueMatch,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaCounterexample {
    pub mu: Vec<i64>,
    pub l: i64,
    /// Index into the coset list, when the failure is tied to one element.
    pub coset_index: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaReport {
    pub m: usize,
    pub grid_bound: i64,
    pub cases: u64,
    pub counterexamples: Vec<LemmaCounterexample>,
}

impl LemmaReport {
    pub fn holds(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// Exhaustive check over dominant `μ` with entries in `[-b, b]`, `0 <= ℓ <= 2b`
/// and every coset representative of
///
/// (i) `w(μ + ρ_c) - ρ_c = (ℓ, 0, ..., 0)` versus (ii) `w = e`, `μ = (ℓ, 0, ..., 0)`.
///
/// The `SO(2)` condition `μ_0 = ℓ + m - 1` is common to both sides.
pub fn lemma_report_with(kostant: &Kostant, grid_bound: i64, variant: LemmaVariant) -> Result<LemmaReport> {
    if grid_bound < 1 {
        return Err(Error::InvalidArgument("grid bound must be at least 1".into()));
    }
    let m = kostant.m();
    let mut report = LemmaReport {
        m,
        grid_bound,
        cases: 0,
        counterexamples: Vec::new(),
    };
    for mu in dominant_so_weights(m, grid_bound) {
        for l in 0..=2 * grid_bound {
            let mut target = alloc::vec![0; m];
            target[0] = l;
            let mu_is_target = mu == target;
            let mut matches = 0usize;
            for (idx, (hw, _)) in kostant.shifted_terms(&mu).enumerate() {
                report.cases += 1;
                let cond_i = hw == target;
                matches += usize::from(cond_i);
                if variant == LemmaVariant::PerElement {
                    let cond_ii = kostant.coset_reps()[idx].0.is_identity() && mu_is_target;
                    if cond_i != cond_ii {
                        report.counterexamples.push(LemmaCounterexample {
                            mu: mu.clone(),
                            l,
                            coset_index: Some(idx),
                        });
                    }
                }
            }
            if variant == LemmaVariant::UniqueMatch && matches != usize::from(mu_is_target) {
                report.counterexamples.push(LemmaCounterexample {
                    mu: mu.clone(),
                    l,
                    coset_index: None,
                });
            }
        }
    }
    Ok(report)
}

pub fn lemma_check(m: usize, grid_bound: i64) -> Result<bool> {
    Ok(lemma_report_with(&Kostant::new(m)?, grid_bound, LemmaVariant::PerElement)?.holds())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn kt(mu0: i64, mu: &[i64]) -> KTypeParam {
        KTypeParam::new(mu0, mu.to_vec()).unwrap()
    }

    #[test]
    fn mu_lambda() {
        let ml = MuLambda::new(3, 2).unwrap();
        assert_eq!(ml.as_lk, LKTypeParam::new(2, vec![0, 0, 0]).unwrap());
        assert_eq!(MuLambda::new(4, 0).unwrap().as_lk.hw(), &[-3, -3, -3, -3]);
    }

    #[test]
    fn s_u_cap_p() {
        assert_eq!(s_u_cap_p_component(3, 0).unwrap(), LKTypeParam::new(0, vec![0, 0, 0]).unwrap());
        assert_eq!(s_u_cap_p_component(3, 1).unwrap(), LKTypeParam::new(1, vec![1, 0, 0]).unwrap());
        assert_eq!(s_u_cap_p_component(2, 3).unwrap(), LKTypeParam::new(3, vec![3, 0]).unwrap());
        assert_eq!(s_u_cap_p_component(2, -1), Err(Error::NegativeDegree(-1)));
    }

    #[test]
    fn multiplicity_examples() {
        assert_eq!(multiplicity(2, 1, &kt(1, &[0, 0])).unwrap(), 1);
        for l in 0..=8 {
            assert_eq!(multiplicity(3, 2, &kt(l + 2, &[l, 0, 0])).unwrap(), 1);
        }
        assert_eq!(multiplicity(2, 1, &kt(2, &[1, 1])).unwrap(), 0);
        assert_eq!(multiplicity(2, 1, &kt(0, &[0, 0])).unwrap(), 0);
    }

    #[test]
    fn charge_selection() {
        let k = Kostant::new(3).unwrap();
        for mu in dominant_so_weights(3, 3) {
            for mu0 in -4..2 {
                assert_eq!(multiplicity_with(&k, 2, &kt(mu0, &mu)).unwrap(), 0);
            }
        }
    }

    #[test]
    fn dominant_weights_enumeration() {
        let w = dominant_so_weights(2, 1);
        assert_eq!(w, vec![vec![0, 0], vec![1, -1], vec![1, 0], vec![1, 1]]);
        assert!(dominant_so_weights(3, 2).windows(2).all(|p| p[0] < p[1]));
    }

    #[test]
    fn tables_reproduce_the_harmonic_ktypes() {
        let t = ktype_table(2, 1, 6, 6).unwrap();
        let expected: BTreeMap<_, _> = (0..=5).map(|l| (KTypeParam::harmonic(2, l), 1)).collect();
        assert_eq!(t.entries, expected);
        assert_eq!(t.semantics, TableSemantics::Multiplicity);

        let t = ktype_table(4, 3, 5, 5).unwrap();
        let expected: BTreeMap<_, _> = (0..=2).map(|l| (KTypeParam::harmonic(4, l), 1)).collect();
        assert_eq!(t.entries, expected);

        assert!(ktype_table(2, 1, 0, 6).unwrap().entries.is_empty());
    }

    #[test]
    fn multiplicity_free_on_grid() {
        for m in 2..=4 {
            let t = ktype_table(m, m as i64 - 1, 10, 5).unwrap();
            assert!(t.is_multiplicity_free());
        }
    }

    #[test]
    fn outside_weakly_fair_is_labelled() {
        let t = ktype_table(3, 0, 3, 3).unwrap();
        assert_eq!(t.semantics, TableSemantics::EulerCharacteristic);
    }

    #[test]
    fn lemma() {
        assert!(lemma_check(2, 4).unwrap());
        assert!(lemma_check(3, 3).unwrap());
        for m in 2..=3 {
            let k = Kostant::new(m).unwrap();
            assert!(lemma_report_with(&k, 3, LemmaVariant::UniqueMatch).unwrap().holds());
        }
        assert!(lemma_check(2, 0).is_err());
    }

    #[test]
    fn lemma_detects_a_wrong_shift() {
        let k = Kostant::with_rho_c(3, vec![2, 1, -1]).unwrap();
        let report = lemma_report_with(&k, 2, LemmaVariant::PerElement).unwrap();
        assert!(!report.holds());
    }
}
