//! `H^j(u∩k, π)` for irreducible `K = SO(2) × SO(2m)` modules through
//! Kostant's Borel–Weil–Bott theorem: the `L∩K`-types are
//! `w(μ + ρ_c) - ρ_c` over coset representatives of length `j`, with the
//! `SO(2)` charge passing through unchanged.

use alloc::vec::Vec;
use core::fmt;

use crate::roots::{check_rank, rho_c};
use crate::weyl::{enumerate_coset_reps, is_gl_dominant, is_so_dominant, SignedPermutation};
use crate::{Error, Result};

/// Highest weight `(μ_0; μ_1, ..., μ_m)` of `C_{μ_0} ⊠ F^{SO(2m)}(μ)`.
/// Orders lexicographically in `(μ_0, μ)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct KTypeParam {
    mu0: i64,
    mu: Vec<i64>,
}

impl KTypeParam {
    pub fn new(mu0: i64, mu: Vec<i64>) -> Result<Self> {
        if !is_so_dominant(&mu) {
            return Err(Error::NotDominant {
                what: "Δ+(so(2m))",
                coords: mu,
            });
        }
        Ok(KTypeParam { mu0, mu })
    }

    /// `(ℓ + m - 1; ℓ, 0, ..., 0)`, the K-types of the harmonic module.
    pub fn harmonic(m: usize, l: u64) -> Self {
        let mut mu = alloc::vec![0; m];
        mu[0] = l as i64;
        KTypeParam {
            mu0: l as i64 + m as i64 - 1,
            mu,
        }
    }

    pub fn mu0(&self) -> i64 {
        self.mu0
    }

    pub fn mu(&self) -> &[i64] {
        &self.mu
    }

    pub fn rank(&self) -> usize {
        self.mu.len()
    }
}

impl fmt::Display for KTypeParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({};", self.mu0)?;
        for (i, x) in self.mu.iter().enumerate() {
            let sep = if i == 0 { " " } else { ", " };
            write!(f, "{sep}{x}")?;
        }
        f.write_str(")")
    }
}

/// Highest weight of an irreducible `T × U(m)` module.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LKTypeParam {
    charge: i64,
    hw: Vec<i64>,
}

impl LKTypeParam {
    pub fn new(charge: i64, hw: Vec<i64>) -> Result<Self> {
        if !is_gl_dominant(&hw) {
            return Err(Error::NotDominant {
                what: "Δ+(gl(m))",
                coords: hw,
            });
        }
        Ok(LKTypeParam { charge, hw })
    }

    pub fn charge(&self) -> i64 {
        self.charge
    }

    pub fn hw(&self) -> &[i64] {
        &self.hw
    }
}

impl fmt::Display for LKTypeParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({};", self.charge)?;
        for (i, x) in self.hw.iter().enumerate() {
            let sep = if i == 0 { " " } else { ", " };
            write!(f, "{sep}{x}")?;
        }
        f.write_str(")")
    }
}

/// Coset representatives with their lengths and the `ρ_c` used for the
/// shifted action. Build once per `m` and reuse.
#[derive(Debug, Clone)]
pub struct Kostant {
    m: usize,
    rho_c: Vec<i64>,
    reps: Vec<(SignedPermutation, usize)>,
}

impl Kostant {
    pub fn new(m: usize) -> Result<Self> {
        let rho = rho_c(m)?.to_ints().expect("ρ_c is integral");
        Self::with_rho_c(m, rho)
    }

    /// Uses an arbitrary shift in place of `ρ_c`. Only meaningful for
    /// negative controls; outputs need not be dominant.
    pub fn with_rho_c(m: usize, rho_c: Vec<i64>) -> Result<Self> {
        check_rank(m)?;
        if rho_c.len() != m {
            return Err(Error::RankMismatch {
                expected: m,
                found: rho_c.len(),
            });
        }
        let reps = enumerate_coset_reps(m)?
            .into_iter()
            .map(|w| {
                let len = w.length();
                (w, len)
            })
            .collect();
        Ok(Kostant { m, rho_c, reps })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn rho_c(&self) -> &[i64] {
        &self.rho_c
    }

    pub fn coset_reps(&self) -> &[(SignedPermutation, usize)] {
        &self.reps
    }

    /// `dim_C(u∩k) = m(m-1)/2`, the top cohomology degree.
    pub fn top_degree(&self) -> usize {
        self.m * (self.m - 1) / 2
    }

    fn check(&self, pi: &KTypeParam) -> Result<()> {
        if pi.rank() != self.m {
            return Err(Error::RankMismatch {
                expected: self.m,
                found: pi.rank(),
            });
        }
        Ok(())
    }

    /// `w(μ + ρ_c) - ρ_c` together with `ℓ(w)` for every coset representative.
    pub fn shifted_terms<'a>(&'a self, mu: &'a [i64]) -> impl Iterator<Item = (Vec<i64>, usize)> + 'a {
        let shifted: Vec<i64> = mu.iter().zip(&self.rho_c).map(|(a, r)| a + r).collect();
        self.reps.iter().map(move |(w, len)| {
            let mut v = w.act_ints(&shifted);
            for (x, r) in v.iter_mut().zip(&self.rho_c) {
                *x -= r;
            }
            (v, *len)
        })
    }

    pub fn cohomology(&self, pi: &KTypeParam, j: usize) -> Result<Vec<LKTypeParam>> {
        self.check(pi)?;
        if j > self.top_degree() {
            return Err(Error::CohomologyDegree {
                j,
                max: self.top_degree(),
            });
        }
        self.shifted_terms(pi.mu())
            .filter(|(_, len)| *len == j)
            .map(|(hw, _)| LKTypeParam::new(pi.mu0(), hw))
            .collect()
    }

    /// `Σ_j (-1)^j H^j(u∩k, π)` as signed `L∩K`-types.
    pub fn euler_character(&self, pi: &KTypeParam) -> Result<Vec<(LKTypeParam, i8)>> {
        self.check(pi)?;
        self.shifted_terms(pi.mu())
            .map(|(hw, len)| {
                let sign = if len % 2 == 0 { 1 } else { -1 };
                LKTypeParam::new(pi.mu0(), hw).map(|t| (t, sign))
            })
            .collect()
    }
}

pub fn cohomology(m: usize, pi: &KTypeParam, j: usize) -> Result<Vec<LKTypeParam>> {
    Kostant::new(m)?.cohomology(pi, j)
}

pub fn euler_character(m: usize, pi: &KTypeParam) -> Result<Vec<(LKTypeParam, i8)>> {
    Kostant::new(m)?.euler_character(pi)
}
