//! Cross-verification of the two descriptions of the solution space of the
//! Laplacian: the Blattner-type K-type table at `λ = m - 1` against the
//! certified harmonic decomposition, plus the supporting consistency checks.

use alloc::vec::Vec;
use core::fmt;

use num_rational::Rational64;

use crate::blattner::{bounds_for_max_l, ktype_table_with, lemma_report_with, KTypeTable, LemmaReport, LemmaVariant};
use crate::harmonic::sol_ktype_table;
use crate::kostant::{KTypeParam, Kostant};
use crate::repdata::{orbit_equal, range_verdict, verma_hc_parameter, verma_hom_condition, RangeVerdict};
use crate::roots::{check_rank, rho_c};
use crate::Result;

/// Grid bound used for the lemma sub-check.
pub const LEMMA_BOUND: i64 = 2;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum Fault {
    #[default]
    None,
    /// Replace `ρ_c` by `ρ_c - e_m`. Test harness only.
    RhoCOffByOne,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableDiff {
    pub ktype: KTypeParam,
    pub blattner: i64,
    pub harmonic: i64,
}

/// One `(λ, ν) = (m - ℓ, m + ℓ)` pair of the Verma sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VermaCheck {
    pub l: u64,
    pub accepted: bool,
    pub orbit_equal: bool,
}

#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub m: usize,
    pub max_l: u64,
    pub blattner: KTypeTable,
    pub harmonic: KTypeTable,
    pub first_diff: Option<TableDiff>,
    pub lemma: LemmaReport,
    pub range: RangeVerdict,
    pub verma: Vec<VermaCheck>,
    /// `(λ, ν)` pairs off the `(m - ℓ, m + ℓ)` line that were wrongly accepted.
    pub verma_spurious: Vec<(i64, i64)>,
}

impl VerifyReport {
    pub fn tables_agree(&self) -> bool {
        self.first_diff.is_none()
    }

    pub fn range_ok(&self) -> bool {
        self.range.weakly_fair && !self.range.good
    }

    pub fn verma_ok(&self) -> bool {
        self.verma_spurious.is_empty() && self.verma.iter().all(|v| v.accepted && v.orbit_equal)
    }

    pub fn passes(&self) -> bool {
        self.tables_agree() && self.lemma.holds() && self.range_ok() && self.verma_ok()
    }
}

fn first_diff(a: &KTypeTable, b: &KTypeTable) -> Option<TableDiff> {
    a.entries
        .keys()
        .chain(b.entries.keys())
        .filter(|k| a.get(k) != b.get(k))
        .min()
        .map(|k| TableDiff {
            ktype: k.clone(),
            blattner: a.get(k),
            harmonic: b.get(k),
        })
}

/// The checks along the accepted line and the wrongly accepted pairs.
pub type VermaSweep = (Vec<VermaCheck>, Vec<(i64, i64)>);

/// Exhaustive sweep of `verma_hom_condition` over `|λ|, |ν| <= 2m + max_l`,
/// plus the orbit check along the accepted line.
pub fn verma_sweep(m: usize, max_l: u64) -> Result<VermaSweep> {
    let mi = m as i64;
    let r = 2 * mi + max_l as i64;
    let mut spurious = Vec::new();
    for lambda in -r..=r {
        for nu in -r..=r {
            let expected = (nu - mi == mi - lambda && lambda <= mi).then(|| (mi - lambda) as u64);
            let got = verma_hom_condition(m, Rational64::from_integer(lambda), Rational64::from_integer(nu));
            if got != expected {
                spurious.push((lambda, nu));
            }
        }
    }
    let mut checks = Vec::new();
    for l in 0..=max_l {
        let (lambda, nu) = (mi - l as i64, mi + l as i64);
        let accepted =
            verma_hom_condition(m, Rational64::from_integer(lambda), Rational64::from_integer(nu)) == Some(l);
        let orbit = orbit_equal(&verma_hc_parameter(m, lambda)?, &verma_hc_parameter(m, nu)?)?;
        checks.push(VermaCheck {
            l,
            accepted,
            orbit_equal: orbit,
        });
    }
    Ok((checks, spurious))
}

pub fn verify(m: usize, max_l: u64) -> Result<VerifyReport> {
    verify_with_fault(m, max_l, Fault::None)
}

pub fn verify_with_fault(m: usize, max_l: u64, fault: Fault) -> Result<VerifyReport> {
    check_rank(m)?;
    let kostant = match fault {
        Fault::None => Kostant::new(m)?,
        Fault::RhoCOffByOne => {
            let mut rho = rho_c(m)?.to_ints().expect("ρ_c is integral");
            rho[m - 1] -= 1;
            Kostant::with_rho_c(m, rho)?
        }
    };
    let lambda = m as i64 - 1;
    let blattner = ktype_table_with(&kostant, lambda, bounds_for_max_l(m, lambda, max_l))?;
    let harmonic = sol_ktype_table(m, max_l)?;
    let first_diff = first_diff(&blattner, &harmonic);
    let lemma = lemma_report_with(&kostant, LEMMA_BOUND, LemmaVariant::PerElement)?;
    let range = range_verdict(m, lambda)?;
    let (verma, verma_spurious) = verma_sweep(m, max_l)?;
    Ok(VerifyReport {
        m,
        max_l,
        blattner,
        harmonic,
        first_diff,
        lemma,
        range,
        verma,
        verma_spurious,
    })
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "verify m={} lambda={} max_l={}", self.m, self.m as i64 - 1, self.max_l)?;
        write!(
            f,
            "tables: {} ({} blattner entries, {} harmonic entries)",
            verdict(self.tables_agree()),
            self.blattner.entries.len(),
            self.harmonic.entries.len()
        )?;
        if let Some(d) = &self.first_diff {
            write!(
                f,
                "; first differing K-type {}: blattner {} vs harmonic {}",
                d.ktype, d.blattner, d.harmonic
            )?;
        }
        writeln!(f)?;
        writeln!(
            f,
            "lemma: {} ({} cases, {} counterexamples, grid bound {})",
            verdict(self.lemma.holds()),
            self.lemma.cases,
            self.lemma.counterexamples.len(),
            self.lemma.grid_bound
        )?;
        writeln!(
            f,
            "range: {} (weakly fair: {}, good: {})",
            verdict(self.range_ok()),
            self.range.weakly_fair,
            self.range.good
        )?;
        writeln!(
            f,
            "verma: {} ({} pairs, {} spurious)",
            verdict(self.verma_ok()),
            self.verma.len(),
            self.verma_spurious.len()
        )?;
        write!(f, "{}", verdict(self.passes()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    #[test]
    fn small_ranks_pass() {
        for (m, max_l) in [(2, 4), (3, 2)] {
            let r = verify(m, max_l).unwrap();
            assert!(r.passes(), "{r}");
            assert_eq!(r.blattner.entries, r.harmonic.entries);
        }
    }

    #[test]
    fn off_by_one_fault_is_reported() {
        for m in 2..=3 {
            let r = verify_with_fault(m, 2, Fault::RhoCOffByOne).unwrap();
            assert!(!r.passes());
            let d = r.first_diff.clone().unwrap();
            assert_eq!(d.ktype, KTypeParam::harmonic(m, 0));
            assert_eq!((d.blattner, d.harmonic), (0, 1));
            assert!(r.to_string().contains("first differing K-type"));
        }
    }

    #[test]
    fn verma_sweep_is_clean() {
        let (checks, spurious) = verma_sweep(3, 4).unwrap();
        assert!(spurious.is_empty());
        assert_eq!(checks.len(), 5);
        assert!(checks.iter().all(|c| c.accepted && c.orbit_equal));
        assert_eq!(vec![checks[0].l, checks[4].l], vec![0, 4]);
    }
}
