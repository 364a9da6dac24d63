use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exclusive bound on any single exponent.
pub const EXPONENT_BOUND: u32 = 1 << 31;

/// Exponents of a monomial, one per ring variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(exps: Vec<u32>) -> Result<Self> {
        if exps.iter().any(|&e| e >= EXPONENT_BOUND) {
            return Err(Error::ExponentOverflow);
        }
        Ok(Self(exps))
    }

    pub fn one(nvars: usize) -> Self {
        Self(vec![0; nvars])
    }

    pub fn variable(nvars: usize, index: usize) -> Self {
        let mut e = vec![0; nvars];
        e[index] = 1;
        Self(e)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn get(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    pub(crate) fn check_len(&self, other: &Self) -> Result<()> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                expected: self.len(),
                got: other.len(),
            });
        }
        Ok(())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_len(other)?;
        self.0
            .iter()
            .zip(&other.0)
            .map(|(&a, &b)| {
                a.checked_add(b)
                    .filter(|&s| s < EXPONENT_BOUND)
                    .ok_or(Error::ExponentOverflow)
            })
            .collect::<Result<Vec<_>>>()
            .map(Self)
    }

    pub fn pow(&self, k: u32) -> Result<Self> {
        self.0
            .iter()
            .map(|&a| {
                a.checked_mul(k)
                    .filter(|&s| s < EXPONENT_BOUND)
                    .ok_or(Error::ExponentOverflow)
            })
            .collect::<Result<Vec<_>>>()
            .map(Self)
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Self) -> Option<Self> {
        self.divides(other)
            .then(|| Self(other.0.iter().zip(&self.0).map(|(b, a)| b - a).collect()))
    }

    pub fn lcm(&self, other: &Self) -> Self {
        Self(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        )
    }

    pub fn is_coprime(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Grevlex tie-break, restricted to the variables where `mask` equals the
    /// given polarity.
    pub(crate) fn revlex_tail(&self, other: &Self, mask: Option<(&[bool], bool)>) -> Ordering {
        for i in (0..self.0.len()).rev() {
            if mask.is_some_and(|(m, keep)| m[i] != keep) {
                continue;
            }
            match self.0[i].cmp(&other.0[i]) {
                Ordering::Equal => continue,
                // smaller exponent in the last differing variable is larger
                o => return o.reverse(),
            }
        }
        Ordering::Equal
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overflow_is_an_error() {
        let big = ExponentVector::new(vec![EXPONENT_BOUND - 1, 0]).unwrap();
        let one = ExponentVector::new(vec![1, 0]).unwrap();
        assert_eq!(big.mul(&one), Err(Error::ExponentOverflow));
        assert_eq!(
            ExponentVector::new(vec![EXPONENT_BOUND]),
            Err(Error::ExponentOverflow)
        );
        assert_eq!(
            one.pow(EXPONENT_BOUND - 1).unwrap().get(0),
            EXPONENT_BOUND - 1
        );
        assert!(ExponentVector::new(vec![2, 0])
            .unwrap()
            .pow(EXPONENT_BOUND / 2)
            .is_err());
    }

    #[test]
    fn divisibility_and_lcm() {
        let a = ExponentVector::new(vec![1, 2, 0]).unwrap();
        let b = ExponentVector::new(vec![3, 2, 1]).unwrap();
        assert!(a.divides(&b));
        assert!(!b.divides(&a));
        assert_eq!(a.quotient_of(&b).unwrap().exponents(), &[2, 0, 1]);
        assert_eq!(a.lcm(&b), b);
        assert!(!a.is_coprime(&b));
        assert!(a.is_coprime(&ExponentVector::new(vec![0, 0, 4]).unwrap()));
        assert!(a.mul(&ExponentVector::one(2)).is_err());
    }
}
