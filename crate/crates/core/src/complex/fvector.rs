use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::ComplexError;
use crate::arith::Rational;

/// Cell counts `(f_0, ..., f_d)`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FVector(Vec<u128>);

impl FVector {
    pub fn new(counts: Vec<u128>) -> Self {
        FVector(counts)
    }

    pub fn from_slice(counts: &[u128]) -> Self {
        FVector(counts.to_vec())
    }

    pub fn counts(&self) -> &[u128] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> u128 {
        self.0[i]
    }

    pub fn reversed(&self) -> FVector {
        FVector(self.0.iter().rev().copied().collect())
    }

    /// `(f_1 + f_2) / (f_0 + f_3)` for a 3-dimensional complex.
    pub fn fatness3(&self) -> Result<Rational, ComplexError> {
        let f = self.expect_len(4)?;
        ratio(f[1] + f[2], f[0] + f[3])
    }

    /// `f_1 / (f_0 + f_2)` for a 2-dimensional complex.
    pub fn fatness2(&self) -> Result<Rational, ComplexError> {
        let f = self.expect_len(3)?;
        ratio(f[1], f[0] + f[2])
    }

    /// Alternating sum `f_0 - f_1 + f_2 - ...`.
    pub fn euler_characteristic(&self) -> i128 {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &c)| if i % 2 == 0 { c as i128 } else { -(c as i128) })
            .sum()
    }

    /// Euler relation for the boundary of a polytope (`chi = 2` for length 3,
    /// `chi = 0` for length 4), or against a prescribed `chi`.
    pub fn euler_check(&self, chi: Option<i128>) -> bool {
        let expected = match (chi, self.0.len()) {
            (Some(c), _) => c,
            (None, 3) => 2,
            (None, 4) => 0,
            _ => return false,
        };
        self.euler_characteristic() == expected
    }

    fn expect_len(&self, n: usize) -> Result<&[u128], ComplexError> {
        if self.0.len() == n {
            Ok(&self.0)
        } else {
            Err(ComplexError::Length(self.0.len(), n))
        }
    }
}

fn ratio(num: u128, den: u128) -> Result<Rational, ComplexError> {
    if den == 0 {
        return Err(ComplexError::ZeroDenominator);
    }
    Ok(Rational::new(BigInt::from(num), BigInt::from(den)))
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl fmt::Debug for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FVector{self}")
    }
}

impl From<Vec<u128>> for FVector {
    fn from(v: Vec<u128>) -> Self {
        FVector(v)
    }
}

impl<const N: usize> From<[u128; N]> for FVector {
    fn from(v: [u128; N]) -> Self {
        FVector(v.to_vec())
    }
}

/// Flag numbers indexed by strictly increasing dimension tuples.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct FlagVector {
    pub entries: BTreeMap<Vec<usize>, u128>,
}

impl FlagVector {
    pub fn get(&self, dims: &[usize]) -> Option<u128> {
        self.entries.get(dims).copied()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn fatness_examples() {
        assert_eq!(FVector::from([5, 10, 10, 5]).fatness3().unwrap(), rat(2, 1));
        assert_eq!(FVector::from([16, 32, 24, 8]).fatness3().unwrap(), rat(7, 3));
        assert_eq!(FVector::from([720, 3600, 3600, 720]).fatness3().unwrap(), rat(5, 1));
        assert_eq!(FVector::from([1, 6, 1]).fatness2().unwrap(), rat(3, 1));
        assert_eq!(FVector::from([4, 6, 4]).fatness2().unwrap(), rat(3, 4));
        assert_eq!(FVector::from([5, 10, 5]).fatness2().unwrap(), rat(1, 1));
        assert_eq!(FVector::from([0, 1, 0]).fatness2(), Err(ComplexError::ZeroDenominator));
        assert!(FVector::from([1, 2, 3]).fatness3().is_err());
    }

    #[test]
    fn euler_examples() {
        assert!(FVector::from([4, 6, 4]).euler_check(None));
        assert!(FVector::from([120, 720, 1200, 600]).euler_check(None));
        for g in 1..6i128 {
            for q in [5i128, 9, 13, 17] {
                let f = FVector::from([q as u128, (2 * g * q) as u128, q as u128]);
                assert!(f.euler_check(Some(2 * q * (1 - g))));
            }
        }
        assert!(!FVector::from([4, 6, 5]).euler_check(None));
    }
}
