//! Exact linear maps between monomial bases.
//!
//! Ranks are computed with fraction-free (Bareiss) elimination over the
//! integers after clearing denominators row by row. The matrix is first split
//! into the connected components of its row/column incidence graph; the rank
//! is the sum over the blocks.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::polynomial::{Monomial, SparsePolynomial};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearMapMatrix {
    /// Target basis.
    rows: Vec<Monomial>,
    /// Source basis.
    cols: Vec<Monomial>,
    /// Sparse rows: column index to nonzero entry.
    entries: Vec<BTreeMap<usize, BigRational>>,
}

impl LinearMapMatrix {
    pub fn zero(rows: Vec<Monomial>, cols: Vec<Monomial>) -> Self {
        let entries = alloc::vec![BTreeMap::new(); rows.len()];
        LinearMapMatrix { rows, cols, entries }
    }

    /// Matrix of a linear operator on polynomials, column `j` being the
    /// image of `cols[j]` expanded in `rows`.
    pub fn of_operator(
        rows: Vec<Monomial>,
        cols: Vec<Monomial>,
        op: impl Fn(&SparsePolynomial) -> SparsePolynomial,
    ) -> Result<Self> {
        let index: BTreeMap<&Monomial, usize> = rows.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut entries = alloc::vec![BTreeMap::new(); rows.len()];
        for (j, m) in cols.iter().enumerate() {
            let image = op(&SparsePolynomial::monomial(m.clone(), BigRational::one()));
            for (t, c) in image.terms() {
                let i = *index
                    .get(t)
                    .ok_or_else(|| Error::InvalidArgument(alloc::format!("image term {t:?} outside target basis")))?;
                entries[i].insert(j, c.clone());
            }
        }
        Ok(LinearMapMatrix { rows, cols, entries })
    }

    pub fn from_dense(rows: Vec<Monomial>, cols: Vec<Monomial>, dense: &[Vec<BigRational>]) -> Result<Self> {
        if dense.len() != rows.len() || dense.iter().any(|r| r.len() != cols.len()) {
            return Err(Error::InvalidArgument("dense matrix does not match the bases".into()));
        }
        let entries = dense
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(j, v)| (j, v.clone()))
                    .collect()
            })
            .collect();
        Ok(LinearMapMatrix { rows, cols, entries })
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn rows(&self) -> &[Monomial] {
        &self.rows
    }

    pub fn cols(&self) -> &[Monomial] {
        &self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> BigRational {
        self.entries[i].get(&j).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Row and column index sets of the connected blocks. Zero columns come
    /// out as blocks without rows.
    pub fn blocks(&self) -> Vec<(Vec<usize>, Vec<usize>)> {
        let (nr, nc) = (self.nrows(), self.ncols());
        let mut parent: Vec<usize> = (0..nr + nc).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for (i, row) in self.entries.iter().enumerate() {
            for &j in row.keys() {
                let (a, b) = (find(&mut parent, i), find(&mut parent, nr + j));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        let mut groups: BTreeMap<usize, (Vec<usize>, Vec<usize>)> = BTreeMap::new();
        for i in 0..nr {
            let r = find(&mut parent, i);
            groups.entry(r).or_default().0.push(i);
        }
        for j in 0..nc {
            let r = find(&mut parent, nr + j);
            groups.entry(r).or_default().1.push(j);
        }
        groups.into_values().collect()
    }

    /// Integer block obtained by scaling each row by the lcm of its
    /// denominators.
    fn integer_block(&self, rows: &[usize], cols: &[usize]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|&i| {
                let lcm = self.entries[i]
                    .values()
                    .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
                cols.iter()
                    .map(|&j| match self.entries[i].get(&j) {
                        Some(v) => v.numer() * (&lcm / v.denom()),
                        None => BigInt::zero(),
                    })
                    .collect()
            })
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.blocks()
            .iter()
            .filter(|(r, c)| !r.is_empty() && !c.is_empty())
            .map(|(r, c)| bareiss_rank(self.integer_block(r, c)))
            .sum()
    }

    /// A basis of the kernel, as coefficient vectors over `cols`.
    pub fn kernel_basis(&self) -> Vec<Vec<BigRational>> {
        let nc = self.ncols();
        let mut basis = Vec::new();
        for (rows, cols) in self.blocks() {
            let dense: Vec<Vec<BigRational>> = rows
                .iter()
                .map(|&i| cols.iter().map(|&j| self.get(i, j)).collect())
                .collect();
            for local in rational_kernel(dense, cols.len()) {
                let mut v = alloc::vec![BigRational::zero(); nc];
                for (k, &j) in cols.iter().enumerate() {
                    v[j] = local[k].clone();
                }
                basis.push(v);
            }
        }
        basis
    }

    /// `M v` for a coefficient vector over `cols`.
    pub fn apply(&self, v: &[BigRational]) -> Vec<BigRational> {
        self.entries
            .iter()
            .map(|row| row.iter().fold(BigRational::zero(), |acc, (&j, a)| acc + a * &v[j]))
            .collect()
    }
}

/// Rank by one-step fraction-free elimination. Every intermediate entry is a
/// minor of the input, so the division by the previous pivot is exact.
pub fn bareiss_rank(mut a: Vec<Vec<BigInt>>) -> usize {
    let nrows = a.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = a[0].len();
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(p) = (rank..nrows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let (top, rest) = a.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        let pivot = &pivot_row[col];
        for row in rest.iter_mut() {
            let factor = row[col].clone();
            for j in col + 1..ncols {
                let v = pivot * &row[j] - &factor * &pivot_row[j];
                debug_assert!((&v % &prev).is_zero());
                row[j] = v / &prev;
            }
            row[col] = BigInt::zero();
        }
        prev = a[rank][col].clone();
        rank += 1;
    }
    rank
}

/// Kernel of a dense rational matrix by reduced row echelon form.
fn rational_kernel(mut a: Vec<Vec<BigRational>>, ncols: usize) -> Vec<Vec<BigRational>> {
    let nrows = a.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][col].recip();
        for v in a[r].iter_mut() {
            *v *= &inv;
        }
        for i in 0..nrows {
            if i != r && !a[i][col].is_zero() {
                let f = a[i][col].clone();
                let pivot_row = a[r].clone();
                for (x, p) in a[i].iter_mut().zip(&pivot_row) {
                    *x -= &f * p;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = alloc::vec![BigRational::zero(); ncols];
            v[fc] = BigRational::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -a[row][fc].clone();
            }
            v
        })
        .collect()
}
