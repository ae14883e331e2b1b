//! Exact finite computations for the holomorphic Laplacian on the Lie ball of
//! dimension `2m` and the Dolbeault cohomology on `SO_0(2,2m)/U(1,m)`.
//!
//! Everything here is exact: weights are half-integer vectors, polynomial
//! coefficients and matrix entries are arbitrary precision rationals. The
//! crate is `no_std` and only needs `alloc`; file formats, parallel scans and
//! the command line live in the `lieball` crate.
//!
//! The two K-type tables that the library computes independently are
//!
//! * [`blattner::ktype_table`], the Euler characteristic of the generalized
//!   Blattner formula built from [`kostant`] cohomology, and
//! * [`harmonic::sol_ktype_table`], harmonic polynomials certified by exact
//!   kernel ranks of the Laplacian against the Weyl dimension formula.
//!
//! [`verify::verify`] compares them.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod blattner;
pub mod error;
pub mod harmonic;
pub mod kostant;
pub mod linalg;
pub mod polynomial;
pub mod repdata;
pub mod roots;
pub mod verify;
pub mod weight;
pub mod weyl;

pub use error::{Error, Result};
pub use kostant::{KTypeParam, LKTypeParam};
pub use polynomial::{Monomial, SparsePolynomial};
pub use weight::{HalfInt, Weight};
pub use weyl::SignedPermutation;
