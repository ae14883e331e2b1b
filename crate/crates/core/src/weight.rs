//! Half-integer weight vectors.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Neg, Sub};

use num_rational::Rational64;
use num_traits::Zero;

use crate::{Error, Result};

/// An element of `(1/2)Z`, stored as twice its value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct HalfInt(i64);

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt(0);

    pub const fn from_int(n: i64) -> Self {
        HalfInt(2 * n)
    }

    /// The half-integer `twice / 2`.
    pub const fn from_twice(twice: i64) -> Self {
        HalfInt(twice)
    }

    pub const fn twice(self) -> i64 {
        self.0
    }

    pub fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    /// The integer value, if there is one.
    pub fn to_int(self) -> Option<i64> {
        self.is_integer().then_some(self.0 / 2)
    }

    pub fn abs(self) -> Self {
        HalfInt(self.0.abs())
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub fn signum(self) -> i64 {
        self.0.signum()
    }

    pub fn to_rational(self) -> Rational64 {
        Rational64::new(self.0, 2)
    }

    pub fn try_from_rational(r: Rational64) -> Result<Self> {
        match *r.denom() {
            1 => Ok(HalfInt(2 * r.numer())),
            2 => Ok(HalfInt(*r.numer())),
            _ => Err(Error::NotHalfInteger(format!("{r}"))),
        }
    }

    pub fn mul_int(self, k: i64) -> Self {
        HalfInt(self.0 * k)
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 + rhs.0)
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 - rhs.0)
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt(-self.0)
    }
}

impl From<i64> for HalfInt {
    fn from(n: i64) -> Self {
        HalfInt::from_int(n)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

/// A weight in the coordinates `e_0, ..., e_m` (rank `m + 1`) or
/// `e_1, ..., e_m` (rank `m`). The rank is the length of the vector.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight {
    coords: Vec<HalfInt>,
}

impl Weight {
    pub fn new(coords: Vec<HalfInt>) -> Self {
        Weight { coords }
    }

    pub fn zero(rank: usize) -> Self {
        Weight {
            coords: alloc::vec![HalfInt::ZERO; rank],
        }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Weight {
            coords: coords.iter().map(|&c| HalfInt::from_int(c)).collect(),
        }
    }

    pub fn from_twice(twice: &[i64]) -> Self {
        Weight {
            coords: twice.iter().map(|&c| HalfInt::from_twice(c)).collect(),
        }
    }

    pub fn try_from_rationals(coords: &[Rational64]) -> Result<Self> {
        let coords = coords
            .iter()
            .map(|&r| HalfInt::try_from_rational(r))
            .collect::<Result<_>>()?;
        Ok(Weight { coords })
    }

    /// `e_i` in a basis of size `rank`.
    pub fn unit(rank: usize, i: usize) -> Self {
        let mut w = Weight::zero(rank);
        w.coords[i] = HalfInt::from_int(1);
        w
    }

    /// The all-ones vector `1_rank`.
    pub fn ones(rank: usize) -> Self {
        Weight {
            coords: alloc::vec![HalfInt::from_int(1); rank],
        }
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[HalfInt] {
        &self.coords
    }

    pub fn get(&self, i: usize) -> HalfInt {
        self.coords[i]
    }

    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(|c| c.is_integer())
    }

    /// Integer coordinates, if every coordinate is an integer.
    pub fn to_ints(&self) -> Option<Vec<i64>> {
        self.coords.iter().map(|c| c.to_int()).collect()
    }

    pub fn to_rationals(&self) -> Vec<Rational64> {
        self.coords.iter().map(|c| c.to_rational()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    fn check_rank(&self, other: &Weight) -> Result<()> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                found: other.rank(),
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Weight) -> Result<Weight> {
        self.check_rank(other)?;
        Ok(Weight {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(&a, &b)| a + b)
                .collect(),
        })
    }

    pub fn checked_sub(&self, other: &Weight) -> Result<Weight> {
        self.check_rank(other)?;
        Ok(Weight {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(&a, &b)| a - b)
                .collect(),
        })
    }

    pub fn scale(&self, k: HalfInt) -> Result<Weight> {
        self.coords
            .iter()
            .map(|&c| HalfInt::try_from_rational(c.to_rational() * k.to_rational()))
            .collect::<Result<_>>()
            .map(Weight::new)
    }

    /// The standard bilinear pairing.
    pub fn dot(&self, other: &Weight) -> Result<Rational64> {
        self.check_rank(other)?;
        let twice_twice: i64 = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a.twice() * b.twice())
            .sum();
        Ok(Rational64::new(twice_twice, 4))
    }

    /// Positivity for the root orderings used here: the first nonzero
    /// coordinate is positive.
    pub fn is_positive(&self) -> bool {
        self.coords
            .iter()
            .find(|c| !c.is_zero())
            .is_some_and(|c| c.signum() > 0)
    }

    pub fn sum(&self) -> Rational64 {
        self.coords
            .iter()
            .fold(Rational64::zero(), |acc, c| acc + c.to_rational())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight {
            coords: self.coords.iter().map(|&c| -c).collect(),
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn half_int_roundtrip() {
        let h = HalfInt::try_from_rational(Rational64::new(3, 2)).unwrap();
        assert_eq!(h.twice(), 3);
        assert_eq!(h.to_string(), "3/2");
        assert_eq!(HalfInt::from_int(-2).to_string(), "-2");
        assert!(HalfInt::try_from_rational(Rational64::new(1, 3)).is_err());
    }

    #[test]
    fn rank_mismatch_is_rejected() {
        let a = Weight::from_ints(&[1, 2]);
        let b = Weight::from_ints(&[1, 2, 3]);
        assert_eq!(
            a.checked_add(&b),
            Err(Error::RankMismatch {
                expected: 2,
                found: 3
            })
        );
    }

    #[test]
    fn dot_of_half_integers() {
        let a = Weight::from_twice(&[1, 3]);
        let b = Weight::from_ints(&[1, 1]);
        assert_eq!(a.dot(&b).unwrap(), Rational64::from_integer(2));
        assert_eq!(a.dot(&a).unwrap(), Rational64::new(10, 4));
    }

    #[test]
    fn positivity_uses_first_nonzero() {
        assert!(Weight::from_ints(&[0, 1, -1]).is_positive());
        assert!(!Weight::from_ints(&[0, -1, 1]).is_positive());
        assert!(!Weight::zero(3).is_positive());
    }
}
