//! `W(D_m)` as signed permutations with an even number of sign changes, and
//! the coset representatives `W_K^{l∩k}` whose inversion sets lie in
//! `Δ(u∩k)`.
//!
//! Convention: `(w·μ)_i = signs_i · μ_{perm⁻¹(i)}`, so `w·e_j = signs_{perm(j)} e_{perm(j)}`
//! and `w1·(w2·μ) = (w1 ∘ w2)·μ`. Indices are 0-based (`e_1` is index 0).

use alloc::format;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::roots::{check_rank, so2m_positive_roots, RootSet, RootSetLabel};
use crate::weight::Weight;
use crate::{Error, Result};

/// Largest `m` for which the full group is enumerated (`8! · 2^7` elements).
pub const ENUMERATION_MAX_RANK: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedPermutation {
    perm: Vec<usize>,
    signs: Vec<i8>,
}

impl SignedPermutation {
    /// `perm[j]` is the image of index `j`; `signs[i]` is the sign applied at
    /// target index `i`.
    pub fn new(perm: Vec<usize>, signs: Vec<i8>) -> Result<Self> {
        let m = perm.len();
        if signs.len() != m {
            return Err(Error::InvalidSignedPermutation(format!(
                "{} signs for a permutation of {m}",
                signs.len()
            )));
        }
        let mut seen = alloc::vec![false; m];
        for &p in &perm {
            if p >= m || seen[p] {
                return Err(Error::InvalidSignedPermutation(format!("{perm:?} is not a bijection")));
            }
            seen[p] = true;
        }
        if signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::InvalidSignedPermutation(format!("signs {signs:?} must be ±1")));
        }
        if signs.iter().filter(|&&s| s == -1).count() % 2 != 0 {
            return Err(Error::InvalidSignedPermutation(format!(
                "odd number of sign changes in {signs:?}"
            )));
        }
        Ok(SignedPermutation { perm, signs })
    }

    pub fn identity(m: usize) -> Self {
        SignedPermutation {
            perm: (0..m).collect(),
            signs: alloc::vec![1; m],
        }
    }

    pub fn rank(&self) -> usize {
        self.perm.len()
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p) && self.signs.iter().all(|&s| s == 1)
    }

    fn perm_inverse(&self) -> Vec<usize> {
        let mut inv = alloc::vec![0; self.rank()];
        for (j, &p) in self.perm.iter().enumerate() {
            inv[p] = j;
        }
        inv
    }

    pub fn inverse(&self) -> Self {
        let q = self.perm_inverse();
        let signs = (0..self.rank()).map(|j| self.signs[self.perm[j]]).collect();
        SignedPermutation { perm: q, signs }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &SignedPermutation) -> Result<Self> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                found: other.rank(),
            });
        }
        let q1 = self.perm_inverse();
        let perm = other.perm.iter().map(|&p| self.perm[p]).collect();
        let signs = (0..self.rank())
            .map(|i| self.signs[i] * other.signs[q1[i]])
            .collect();
        Ok(SignedPermutation { perm, signs })
    }

    /// Action on integer coordinates. The caller guarantees the rank.
    pub(crate) fn act_ints(&self, mu: &[i64]) -> Vec<i64> {
        debug_assert_eq!(mu.len(), self.rank());
        let mut out = alloc::vec![0; mu.len()];
        for (j, &p) in self.perm.iter().enumerate() {
            out[p] = i64::from(self.signs[p]) * mu[j];
        }
        out
    }

    pub fn act(&self, mu: &Weight) -> Result<Weight> {
        if mu.rank() != self.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                found: mu.rank(),
            });
        }
        let mut out = alloc::vec![crate::HalfInt::ZERO; mu.rank()];
        for (j, &p) in self.perm.iter().enumerate() {
            out[p] = mu.get(j).mul_int(i64::from(self.signs[p]));
        }
        Ok(Weight::new(out))
    }

    /// Whether `w⁻¹(e_i + eps·e_j)` is a positive root (`i != j`).
    fn inverse_keeps_positive(&self, qinv: &[usize], i: usize, eps: i8, j: usize) -> bool {
        // w⁻¹ e_i = signs_i e_{q(i)}
        let (qi, qj) = (qinv[i], qinv[j]);
        if qi < qj {
            self.signs[i] > 0
        } else {
            eps * self.signs[j] > 0
        }
    }

    /// `Δ+(w) = Δ+(k) ∩ w·Δ-(k)`.
    pub fn inversion_set(&self) -> RootSet {
        let m = self.rank();
        let qinv = self.perm_inverse();
        let roots = so2m_positive_roots(m)
            .into_iter()
            .filter(|alpha| {
                let (i, j, eps) = split_root(alpha);
                !self.inverse_keeps_positive(&qinv, i, eps, j)
            })
            .collect();
        RootSet::new(RootSetLabel::K, m, roots).expect("positive roots of so(2m) are valid")
    }

    /// `ℓ(w) = #Δ+(w)`.
    pub fn length(&self) -> usize {
        let m = self.rank();
        let qinv = self.perm_inverse();
        let mut len = 0;
        for i in 0..m {
            for j in i + 1..m {
                for eps in [-1, 1] {
                    if !self.inverse_keeps_positive(&qinv, i, eps, j) {
                        len += 1;
                    }
                }
            }
        }
        len
    }

    /// `Δ+(w) ⊂ Δ(u∩k)`: no root `e_i - e_j` is inverted.
    pub fn is_coset_rep(&self) -> bool {
        let m = self.rank();
        let qinv = self.perm_inverse();
        (0..m).all(|i| (i + 1..m).all(|j| self.inverse_keeps_positive(&qinv, i, -1, j)))
    }

    /// Rank of the underlying permutation in lexicographic order.
    pub fn lehmer_rank(&self) -> u64 {
        let m = self.rank();
        let mut rank = 0u64;
        for i in 0..m {
            let smaller = self.perm[i + 1..].iter().filter(|&&p| p < self.perm[i]).count() as u64;
            rank = rank * (m - i) as u64 + smaller;
        }
        rank
    }

    /// Bit `i` set iff `signs[i] == -1`.
    pub fn sign_mask(&self) -> u64 {
        self.signs
            .iter()
            .enumerate()
            .filter(|(_, &s)| s == -1)
            .fold(0, |acc, (i, _)| acc | (1 << i))
    }

    /// Deterministic order: length, then permutation rank, then sign mask.
    pub fn cmp_canonical(&self, other: &Self) -> Ordering {
        (self.length(), self.lehmer_rank(), self.sign_mask()).cmp(&(
            other.length(),
            other.lehmer_rank(),
            other.sign_mask(),
        ))
    }
}

impl fmt::Display for SignedPermutation {
    /// Image of each basis vector, e.g. `[-e2, -e1]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (j, &p) in self.perm.iter().enumerate() {
            if j > 0 {
                f.write_str(", ")?;
            }
            let sign = if self.signs[p] < 0 { "-" } else { "" };
            write!(f, "{sign}e{}", p + 1)?;
        }
        f.write_str("]")
    }
}

/// `e_i + eps e_j` with `i < j`.
fn split_root(alpha: &Weight) -> (usize, usize, i8) {
    let mut nz = alpha
        .coords()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero());
    let (i, _) = nz.next().expect("root has two nonzero coordinates");
    let (j, cj) = nz.next().expect("root has two nonzero coordinates");
    (i, j, cj.signum() as i8)
}

fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Visits every element of `W(D_m)`.
pub fn for_each_element(m: usize, mut f: impl FnMut(&SignedPermutation)) -> Result<()> {
    if m == 0 {
        return Err(Error::InvalidArgument("rank 0".into()));
    }
    if m > ENUMERATION_MAX_RANK {
        return Err(Error::EnumerationBound {
            m,
            max: ENUMERATION_MAX_RANK,
        });
    }
    let mut w = SignedPermutation::identity(m);
    loop {
        for mask in 0u32..(1 << m) {
            if mask.count_ones() % 2 != 0 {
                continue;
            }
            for (i, s) in w.signs.iter_mut().enumerate() {
                *s = if mask & (1 << i) != 0 { -1 } else { 1 };
            }
            f(&w);
        }
        if !next_permutation(&mut w.perm) {
            break;
        }
    }
    Ok(())
}

/// All of `W(D_m)`, `2^{m-1} m!` elements.
pub fn enumerate_group(m: usize) -> Result<Vec<SignedPermutation>> {
    let mut all = Vec::new();
    for_each_element(m, |w| all.push(w.clone()))?;
    Ok(all)
}

/// `W_K^{l∩k}`, sorted by [`SignedPermutation::cmp_canonical`].
pub fn enumerate_coset_reps(m: usize) -> Result<Vec<SignedPermutation>> {
    check_rank(m)?;
    let mut reps = Vec::new();
    for_each_element(m, |w| {
        if w.is_coset_rep() {
            reps.push(w.clone());
        }
    })?;
    reps.sort_by(SignedPermutation::cmp_canonical);
    Ok(reps)
}

/// `ν_1 >= ... >= ν_m`.
pub fn is_gl_dominant(nu: &[i64]) -> bool {
    nu.windows(2).all(|p| p[0] >= p[1])
}

/// `μ_1 >= ... >= μ_{m-1} >= |μ_m|`.
pub fn is_so_dominant(mu: &[i64]) -> bool {
    match mu.len() {
        0 => true,
        1 => true,
        n => is_gl_dominant(&mu[..n - 1]) && mu[n - 2] >= mu[n - 1].abs(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use proptest::prelude::*;

    fn swap_flip_both() -> SignedPermutation {
        SignedPermutation::new(vec![1, 0], vec![-1, -1]).unwrap()
    }

    #[test]
    fn rejects_odd_flips_and_non_bijections() {
        assert!(SignedPermutation::new(vec![0, 1], vec![-1, 1]).is_err());
        assert!(SignedPermutation::new(vec![0, 0], vec![1, 1]).is_err());
        assert!(SignedPermutation::new(vec![0, 1], vec![1]).is_err());
    }

    #[test]
    fn act_examples() {
        let mu = Weight::from_ints(&[2, 1]);
        assert_eq!(SignedPermutation::identity(2).act(&mu).unwrap(), mu);
        assert_eq!(swap_flip_both().act(&mu).unwrap(), Weight::from_ints(&[-1, -2]));
        assert!(swap_flip_both().act(&Weight::from_ints(&[1, 2, 3])).is_err());
    }

    #[test]
    fn inversion_sets_m2() {
        assert!(SignedPermutation::identity(2).inversion_set().is_empty());
        let w = swap_flip_both();
        assert_eq!(w.inversion_set().roots(), &[Weight::from_ints(&[1, 1])]);
        assert_eq!(w.length(), 1);
        // longest element of W(D_2) by brute force over its 4 elements
        let group = enumerate_group(2).unwrap();
        assert_eq!(group.len(), 4);
        let longest = group.iter().max_by_key(|w| w.length()).unwrap();
        assert_eq!(longest.length(), 2);
        assert_eq!(longest.inversion_set().len(), 2);
    }

    /// Brute-force oracle: the inversion set straight from the definition,
    /// acting with `w⁻¹` on whole root vectors.
    fn inversion_set_oracle(w: &SignedPermutation) -> Vec<Weight> {
        let winv = w.inverse();
        so2m_positive_roots(w.rank())
            .into_iter()
            .filter(|a| !winv.act(a).unwrap().is_positive())
            .collect()
    }

    #[test]
    fn inversion_set_matches_definition() {
        for m in 2..=4 {
            for w in enumerate_group(m).unwrap() {
                assert_eq!(w.inversion_set().roots(), inversion_set_oracle(&w).as_slice());
                assert_eq!(w.length(), w.inversion_set().len());
            }
        }
    }

    #[test]
    fn group_orders() {
        let fact = |n: usize| (1..=n).product::<usize>();
        for m in 1..=5 {
            assert_eq!(enumerate_group(m).unwrap().len(), (1 << (m - 1)) * fact(m));
        }
        assert_eq!(
            for_each_element(9, |_| {}),
            Err(Error::EnumerationBound { m: 9, max: 8 })
        );
    }

    #[test]
    fn coset_reps_small() {
        let m2 = enumerate_coset_reps(2).unwrap();
        assert_eq!(m2, vec![SignedPermutation::identity(2), swap_flip_both()]);
        assert_eq!(m2.iter().map(|w| w.length()).collect::<Vec<_>>(), vec![0, 1]);
        assert_eq!(enumerate_coset_reps(3).unwrap().len(), 4);
        let m4 = enumerate_coset_reps(4).unwrap();
        assert_eq!(m4.len(), 8);
        assert_eq!(m4.iter().map(|w| w.length()).max(), Some(6));
        assert!(enumerate_coset_reps(1).is_err());
    }

    #[test]
    fn coset_reps_brute_force_subset_filter() {
        // oracle: filter by literal subset test of the inversion sets
        for m in 2..=5 {
            let uk = RootSet::new(RootSetLabel::UCapK, m, crate::roots::u_cap_k_roots(m)).unwrap();
            let brute: usize = enumerate_group(m)
                .unwrap()
                .iter()
                .filter(|w| w.inversion_set().is_subset_of(&uk))
                .count();
            assert_eq!(brute, 1 << (m - 1));
            assert_eq!(enumerate_coset_reps(m).unwrap().len(), brute);
        }
    }

    /// Coefficients of Π_{i=1}^{m-1} (1 + q^i).
    fn length_generating_function(m: usize) -> Vec<usize> {
        let mut c = vec![1usize];
        for i in 1..m {
            let mut next = vec![0; c.len() + i];
            for (d, &v) in c.iter().enumerate() {
                next[d] += v;
                next[d + i] += v;
            }
            c = next;
        }
        c
    }

    #[test]
    fn coset_length_distribution() {
        for m in 2..=6 {
            let mut counts = vec![0usize; m * (m - 1) / 2 + 1];
            for w in enumerate_coset_reps(m).unwrap() {
                counts[w.length()] += 1;
            }
            assert_eq!(counts, length_generating_function(m), "m = {m}");
        }
    }

    /// The flip-pattern description of coset representatives: flip an even
    /// index set `j_1 < ... < j_{2r}` and move the negated entries to the end
    /// in reverse order.
    fn pattern_element(m: usize, flipped: &[usize]) -> SignedPermutation {
        let kept: Vec<usize> = (0..m).filter(|j| !flipped.contains(j)).collect();
        let mut perm = vec![0; m];
        let mut signs = vec![1i8; m];
        for (pos, &j) in kept.iter().enumerate() {
            perm[j] = pos;
        }
        for (k, &j) in flipped.iter().rev().enumerate() {
            let pos = kept.len() + k;
            perm[j] = pos;
            signs[pos] = -1;
        }
        SignedPermutation::new(perm, signs).unwrap()
    }

    #[test]
    fn flip_patterns_give_the_coset_reps() {
        for m in 2..=6 {
            let reps = enumerate_coset_reps(m).unwrap();
            let mut from_patterns = Vec::new();
            for mask in 0u32..(1 << m) {
                if mask.count_ones() % 2 != 0 {
                    continue;
                }
                let flipped: Vec<usize> = (0..m).filter(|j| mask & (1 << j) != 0).collect();
                let w = pattern_element(m, &flipped);
                assert!(w.is_coset_rep(), "pattern {flipped:?} at m = {m}");
                from_patterns.push(w);
            }
            from_patterns.sort_by(SignedPermutation::cmp_canonical);
            assert_eq!(from_patterns, reps);
        }
    }

    fn dominant_grid(m: usize, bound: i64) -> Vec<Vec<i64>> {
        let mut out = Vec::new();
        let mut cur = vec![0i64; m];
        fn rec(i: usize, m: usize, bound: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
            if i == m {
                if is_so_dominant(cur) {
                    out.push(cur.clone());
                }
                return;
            }
            for v in -bound..=bound {
                cur[i] = v;
                rec(i + 1, m, bound, cur, out);
            }
        }
        rec(0, m, bound, &mut cur, &mut out);
        out
    }

    #[test]
    fn coset_reps_send_dominant_to_gl_dominant() {
        for m in 2..=4 {
            let grid = dominant_grid(m, 3);
            assert!(grid.len() >= 16);
            for w in enumerate_coset_reps(m).unwrap() {
                for mu in &grid {
                    assert!(is_gl_dominant(&w.act_ints(mu)), "w = {w}, mu = {mu:?}");
                }
            }
        }
    }

    #[test]
    fn non_coset_elements_break_gl_dominance_somewhere() {
        let m = 3;
        let grid = dominant_grid(m, 3);
        for w in enumerate_group(m).unwrap() {
            if !w.is_coset_rep() {
                assert!(grid.iter().any(|mu| !is_gl_dominant(&w.act_ints(mu))));
            }
        }
    }

    fn arb_element(m: usize) -> impl Strategy<Value = SignedPermutation> {
        (Just(m), 0usize..1000, any::<u32>()).prop_map(|(m, shuffle_seed, mask)| {
            let mut perm: Vec<usize> = (0..m).collect();
            let mut s = shuffle_seed;
            for i in (1..m).rev() {
                perm.swap(i, s % (i + 1));
                s /= i + 1;
            }
            let mut signs: Vec<i8> = (0..m).map(|i| if mask & (1 << i) != 0 { -1 } else { 1 }).collect();
            if signs.iter().filter(|&&x| x == -1).count() % 2 == 1 {
                signs[0] = -signs[0];
            }
            SignedPermutation::new(perm, signs).unwrap()
        })
    }

    proptest! {
        #[test]
        fn group_law(
            (w1, w2, mu) in (2usize..=6).prop_flat_map(|m| (
                arb_element(m),
                arb_element(m),
                proptest::collection::vec(-5i64..=5, m),
            ))
        ) {
            let mu = Weight::from_ints(&mu);
            let w12 = w1.compose(&w2).unwrap();
            prop_assert_eq!(w1.act(&w2.act(&mu).unwrap()).unwrap(), w12.act(&mu).unwrap());
            prop_assert_eq!(w1.act(&w1.inverse().act(&mu).unwrap()).unwrap(), mu.clone());
            prop_assert!(w12.length() <= w1.length() + w2.length());
            prop_assert_eq!(w1.inverse().length(), w1.length());
        }
    }
}
