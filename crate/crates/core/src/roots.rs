//! Root data of `so(2m+2, C)` relative to the compact Cartan subalgebra,
//! split along `k = so(2) + so(2m)` and the theta-stable parabolic
//! `q = l + u` defined by `1_{m+1}`.
//!
//! G-level sets live in the coordinates `e_0, ..., e_m` (rank `m + 1`).
//! [`so2m_positive_roots`] and [`u_cap_k_roots`] give the same compact data
//! in the `SO(2m)` coordinates `e_1, ..., e_m` (rank `m`).

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::weight::{HalfInt, Weight};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RootSetLabel {
    /// All roots of `g`.
    G,
    PPlus,
    PMinus,
    U,
    UCapK,
    UCapP,
    /// Positive roots of `k`.
    K,
    L,
    LCapK,
}

impl fmt::Display for RootSetLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RootSetLabel::G => "g",
            RootSetLabel::PPlus => "p+",
            RootSetLabel::PMinus => "p-",
            RootSetLabel::U => "u",
            RootSetLabel::UCapK => "u∩k",
            RootSetLabel::UCapP => "u∩p",
            RootSetLabel::K => "k",
            RootSetLabel::L => "l",
            RootSetLabel::LCapK => "l∩k",
        })
    }
}

/// A finite list of roots, each with exactly two nonzero coordinates `±1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSet {
    label: RootSetLabel,
    rank: usize,
    roots: Vec<Weight>,
}

impl RootSet {
    pub fn new(label: RootSetLabel, rank: usize, roots: Vec<Weight>) -> Result<Self> {
        for (i, r) in roots.iter().enumerate() {
            if r.rank() != rank {
                return Err(Error::RankMismatch {
                    expected: rank,
                    found: r.rank(),
                });
            }
            let nonzero: Vec<HalfInt> = r.coords().iter().copied().filter(|c| !c.is_zero()).collect();
            if nonzero.len() != 2 || nonzero.iter().any(|c| c.abs() != HalfInt::from_int(1)) {
                return Err(Error::InvalidArgument(format!("{r} is not a type D root")));
            }
            if roots[..i].contains(r) {
                return Err(Error::InvalidArgument(format!("repeated root {r} in {label}")));
            }
        }
        Ok(RootSet { label, rank, roots })
    }

    pub fn empty(label: RootSetLabel, rank: usize) -> Self {
        RootSet {
            label,
            rank,
            roots: Vec::new(),
        }
    }

    pub fn label(&self) -> RootSetLabel {
        self.label
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn roots(&self) -> &[Weight] {
        &self.roots
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn contains(&self, root: &Weight) -> bool {
        self.roots.contains(root)
    }

    pub fn is_subset_of(&self, other: &RootSet) -> bool {
        self.roots.iter().all(|r| other.contains(r))
    }
}

/// `a e_i + b e_j` in a basis of size `rank`.
fn root(rank: usize, i: usize, a: i64, j: usize, b: i64) -> Weight {
    let mut twice = alloc::vec![0i64; rank];
    twice[i] = 2 * a;
    twice[j] = 2 * b;
    Weight::from_twice(&twice)
}

fn pairs(lo: usize, hi: usize) -> impl Iterator<Item = (usize, usize)> {
    (lo..=hi).flat_map(move |i| (i + 1..=hi).map(move |j| (i, j)))
}

pub fn check_rank(m: usize) -> Result<()> {
    if m < 2 {
        return Err(Error::RankTooSmall { m });
    }
    Ok(())
}

/// All root sets for the rank parameter `m`, in `e_0..e_m` coordinates.
#[derive(Debug, Clone)]
pub struct RootData {
    pub m: usize,
    pub g: RootSet,
    pub p_plus: RootSet,
    pub p_minus: RootSet,
    pub u: RootSet,
    pub u_cap_k: RootSet,
    pub u_cap_p: RootSet,
    pub k_positive: RootSet,
    pub l: RootSet,
    pub l_cap_k: RootSet,
}

impl RootData {
    pub fn sets(&self) -> [&RootSet; 9] {
        [
            &self.g,
            &self.p_plus,
            &self.p_minus,
            &self.u,
            &self.u_cap_k,
            &self.u_cap_p,
            &self.k_positive,
            &self.l,
            &self.l_cap_k,
        ]
    }

    /// `S = dim_C K/(L∩K) = m(m-1)`, the degree of the Dolbeault cohomology.
    pub fn s_degree(&self) -> usize {
        self.m * (self.m - 1)
    }
}

pub fn build_root_sets(m: usize) -> Result<RootData> {
    check_rank(m)?;
    let r = m + 1;
    let mut g = Vec::new();
    for (i, j) in pairs(0, m) {
        for (a, b) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
            g.push(root(r, i, a, j, b));
        }
    }
    let p_plus: Vec<Weight> = (1..=m)
        .flat_map(|j| [root(r, 0, 1, j, 1), root(r, 0, 1, j, -1)])
        .collect();
    let p_minus = p_plus.iter().map(|a| -a).collect();
    let u_cap_k: Vec<Weight> = pairs(1, m).map(|(i, j)| root(r, i, 1, j, 1)).collect();
    let u_cap_p: Vec<Weight> = (1..=m).map(|j| root(r, 0, 1, j, 1)).collect();
    let u = u_cap_k.iter().chain(&u_cap_p).cloned().collect();
    let k_positive = pairs(1, m)
        .flat_map(|(i, j)| [root(r, i, 1, j, -1), root(r, i, 1, j, 1)])
        .collect();
    let l_pos: Vec<Weight> = pairs(0, m).map(|(i, j)| root(r, i, 1, j, -1)).collect();
    let l = l_pos.iter().cloned().chain(l_pos.iter().map(|a| -a)).collect();
    let lk_pos: Vec<Weight> = pairs(1, m).map(|(i, j)| root(r, i, 1, j, -1)).collect();
    let l_cap_k = lk_pos.iter().cloned().chain(lk_pos.iter().map(|a| -a)).collect();

    use RootSetLabel::*;
    Ok(RootData {
        m,
        g: RootSet::new(G, r, g)?,
        p_plus: RootSet::new(PPlus, r, p_plus)?,
        p_minus: RootSet::new(PMinus, r, p_minus)?,
        u: RootSet::new(U, r, u)?,
        u_cap_k: RootSet::new(UCapK, r, u_cap_k)?,
        u_cap_p: RootSet::new(UCapP, r, u_cap_p)?,
        k_positive: RootSet::new(K, r, k_positive)?,
        l: RootSet::new(L, r, l)?,
        l_cap_k: RootSet::new(LCapK, r, l_cap_k)?,
    })
}

/// `Δ+(so(2m)) = {e_i ± e_j : 1 <= i < j <= m}` in rank-`m` coordinates.
pub fn so2m_positive_roots(m: usize) -> Vec<Weight> {
    pairs(0, m.saturating_sub(1))
        .flat_map(|(i, j)| [root(m, i, 1, j, -1), root(m, i, 1, j, 1)])
        .collect()
}

/// `Δ(u∩k) = {e_i + e_j}` in rank-`m` coordinates.
pub fn u_cap_k_roots(m: usize) -> Vec<Weight> {
    pairs(0, m.saturating_sub(1))
        .map(|(i, j)| root(m, i, 1, j, 1))
        .collect()
}

/// Half the sum of the roots in `rs`.
pub fn half_sum(rs: &RootSet) -> Weight {
    half_sum_of(rs.rank(), rs.roots())
}

fn half_sum_of(rank: usize, roots: &[Weight]) -> Weight {
    let mut twice = alloc::vec![0i64; rank];
    for r in roots {
        for (t, c) in twice.iter_mut().zip(r.coords()) {
            // roots are integral, so twice(c)/2 is exactly c
            *t += c.twice() / 2;
        }
    }
    Weight::from_twice(&twice)
}

/// Half sum of `Δ+(so(2m))`: `(m-1, m-2, ..., 1, 0)`.
pub fn rho_c(m: usize) -> Result<Weight> {
    check_rank(m)?;
    Ok(half_sum_of(m, &so2m_positive_roots(m)))
}

/// Half sum of `Δ+(l) = {e_i - e_j : 0 <= i < j <= m}`:
/// `(m/2, m/2 - 1, ..., -m/2)`.
pub fn rho_l(m: usize) -> Result<Weight> {
    check_rank(m)?;
    let r = m + 1;
    let pos: Vec<Weight> = pairs(0, m).map(|(i, j)| root(r, i, 1, j, -1)).collect();
    Ok(half_sum_of(r, &pos))
}

/// `ρ(u) = (m/2) 1_{m+1}`.
pub fn rho_u(m: usize) -> Result<Weight> {
    Ok(half_sum(&build_root_sets(m)?.u))
}
