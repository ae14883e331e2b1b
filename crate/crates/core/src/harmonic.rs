//! The holomorphic Laplacian `Δ = Σ ∂²/∂z_i²` on polynomials in `n = 2m`
//! variables, its kernels on homogeneous pieces, and the K-type table of the
//! solution space certified against the Weyl dimension formula.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::blattner::{KTypeTable, ScanBounds, TableSemantics};
use crate::kostant::KTypeParam;
use crate::linalg::LinearMapMatrix;
use crate::polynomial::{monomials_of_degree, SparsePolynomial};
use crate::repdata::weyl_dim_so2m;
use crate::roots::check_rank;
use crate::{Error, Result};

pub fn laplacian(f: &SparsePolynomial) -> SparsePolynomial {
    let mut out = SparsePolynomial::zero(f.nvars());
    for (m, c) in f.terms() {
        for (i, &e) in m.exponents().iter().enumerate() {
            if e < 2 {
                continue;
            }
            let mut exp = m.0.clone();
            exp[i] -= 2;
            let k = BigInt::from(u64::from(e) * u64::from(e - 1));
            out.add_term(crate::Monomial(exp), c * BigRational::from_integer(k));
        }
    }
    out
}

/// `Δ^l f`; `l = 0` is the identity.
pub fn laplacian_power(f: &SparsePolynomial, l: u32) -> SparsePolynomial {
    let mut out = f.clone();
    for _ in 0..l {
        if out.is_zero() {
            break;
        }
        out = laplacian(&out);
    }
    out
}

/// `dim Pol^l(C^n) = C(n + l - 1, l)`.
pub fn pol_dimension(n: u64, l: u64) -> u64 {
    if n == 0 {
        return u64::from(l == 0);
    }
    binomial(n + l - 1, l)
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (1..=k).fold(1u64, |acc, i| acc * (n + 1 - i) / i)
}

/// `C(n + l - 1, l) - C(n + l - 3, l - 2)`.
pub fn harmonic_dimension_closed_form(n: u64, l: u64) -> u64 {
    let lower = if l >= 2 { pol_dimension(n, l - 2) } else { 0 };
    pol_dimension(n, l) - lower
}

/// Matrix of `Δ: Pol^l -> Pol^{l-2}` over the graded-lex monomial bases.
pub fn laplacian_matrix(n: usize, l: u32) -> Result<LinearMapMatrix> {
    let cols = monomials_of_degree(n, l);
    let rows = if l >= 2 { monomials_of_degree(n, l - 2) } else { Vec::new() };
    LinearMapMatrix::of_operator(rows, cols, laplacian)
}

fn check_n(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidArgument(alloc::format!("n = {n} must be at least 2")));
    }
    Ok(())
}

/// `dim ker(Δ|Pol^l)` by exact rank of the Laplacian matrix.
pub fn harmonic_dimension(n: usize, l: u32) -> Result<u64> {
    check_n(n)?;
    let mat = laplacian_matrix(n, l)?;
    Ok((mat.ncols() - mat.rank()) as u64)
}

/// A basis of `H^l = ker(Δ) ∩ Pol^l`.
pub fn harmonic_basis(n: usize, l: u32) -> Result<Vec<SparsePolynomial>> {
    check_n(n)?;
    let mat = laplacian_matrix(n, l)?;
    Ok(mat
        .kernel_basis()
        .into_iter()
        .map(|v| {
            let mut p = SparsePolynomial::zero(n);
            for (m, c) in mat.cols().iter().zip(v) {
                p.add_term(m.clone(), c);
            }
            p
        })
        .collect())
}

/// `L_ab = z_a ∂_b - z_b ∂_a`.
pub fn rotation_generator(f: &SparsePolynomial, a: usize, b: usize) -> SparsePolynomial {
    f.derivative(b).mul_var(a).sub(&f.derivative(a).mul_var(b))
}

/// Checks `Δ(op(f, a, b)) = op(Δ f, a, b)` for every `a < b` on `trials`
/// seeded random homogeneous polynomials of degree 1 to 4.
pub fn commutes_with_laplacian(
    n: usize,
    trials: usize,
    seed: u64,
    op: impl Fn(&SparsePolynomial, usize, usize) -> SparsePolynomial,
) -> Result<bool> {
    check_n(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let d = rng.gen_range(1..=4);
        let f = SparsePolynomial::random_homogeneous(&mut rng, n, d, 12);
        let lf = laplacian(&f);
        for a in 0..n {
            for b in a + 1..n {
                if laplacian(&op(&f, a, b)) != op(&lf, a, b) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// `[Δ, L_ab] = 0` for all rotation generators.
pub fn so_invariance_check(n: usize, trials: usize, seed: u64) -> Result<bool> {
    commutes_with_laplacian(n, trials, seed, rotation_generator)
}

/// One row of the harmonic K-type table with its dimension certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowCertificate {
    pub l: u64,
    pub ktype: KTypeParam,
    /// `dim H^l(C^{2m})` from the exact kernel rank.
    pub kernel_dim: u64,
    /// `dim F^{SO(2m)}(l, 0, ..., 0)` from the Weyl dimension formula.
    pub weyl_dim: u64,
    pub closed_form: u64,
}

impl RowCertificate {
    pub fn passes(&self) -> bool {
        self.kernel_dim == self.weyl_dim && self.kernel_dim == self.closed_form
    }
}

pub fn certify_row(m: usize, l: u64) -> Result<RowCertificate> {
    check_rank(m)?;
    let n = 2 * m;
    let mut mu = alloc::vec![0; m];
    mu[0] = l as i64;
    Ok(RowCertificate {
        l,
        ktype: KTypeParam::harmonic(m, l),
        kernel_dim: harmonic_dimension(n, l as u32)?,
        weyl_dim: weyl_dim_so2m(m, &mu)?,
        closed_form: harmonic_dimension_closed_form(n as u64, l),
    })
}

/// Turns certificates into the table `{(l + m - 1; l, 0, ..., 0) ↦ 1}`,
/// failing on the first row whose dimensions disagree.
pub fn table_from_certificates(m: usize, max_l: u64, rows: &[RowCertificate]) -> Result<KTypeTable> {
    let mut entries = BTreeMap::new();
    for row in rows {
        if !row.passes() {
            return Err(Error::CertificationFailed {
                n: 2 * m,
                degree: row.l as usize,
                kernel_dim: row.kernel_dim,
                weyl_dim: row.weyl_dim,
            });
        }
        entries.insert(row.ktype.clone(), 1);
    }
    let max_mu0 = max_l as i64 + m as i64 - 1;
    Ok(KTypeTable {
        m,
        lambda: m as i64 - 1,
        entries,
        bounds: ScanBounds {
            min_mu0: -max_mu0,
            max_mu0,
            max_mu1: max_l as i64,
        },
        semantics: TableSemantics::Multiplicity,
    })
}

/// K-types of the solution space of `Δ` up to degree `max_l`. The `SO(2)`
/// charge `l + m - 1` is the degree shifted by the trivializing character
/// `C_{m-1}`.
pub fn sol_ktype_table(m: usize, max_l: u64) -> Result<KTypeTable> {
    let rows = (0..=max_l).map(|l| certify_row(m, l)).collect::<Result<Vec<_>>>()?;
    table_from_certificates(m, max_l, &rows)
}
