use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Residue `value mod modulus`, `0 <= value < modulus`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct ModNum {
    value: u64,
    modulus: u64,
}

impl ModNum {
    pub fn new(value: i64, modulus: u64) -> Self {
        assert!(modulus > 0, "modulus must be positive");
        let m = modulus as i128;
        let v = (value as i128).rem_euclid(m) as u64;
        ModNum { value: v, modulus }
    }

    pub fn zero(modulus: u64) -> Self {
        Self::new(0, modulus)
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> u64 {
        self.modulus
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    /// Multiplicative inverse when `gcd(value, modulus) = 1`.
    pub fn inv(self) -> Option<Self> {
        let (g, x, _) = ext_gcd(self.value as i128, self.modulus as i128);
        (g == 1).then(|| ModNum::new(x.rem_euclid(self.modulus as i128) as i64, self.modulus))
    }

    fn check(self, other: Self) {
        assert_eq!(self.modulus, other.modulus, "residues from different rings");
    }
}

fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = ext_gcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

impl fmt::Debug for ModNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}

impl Add for ModNum {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.check(rhs);
        let v = (self.value as u128 + rhs.value as u128) % self.modulus as u128;
        ModNum { value: v as u64, modulus: self.modulus }
    }
}

impl Sub for ModNum {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for ModNum {
    type Output = Self;
    fn neg(self) -> Self {
        let v = if self.value == 0 { 0 } else { self.modulus - self.value };
        ModNum { value: v, modulus: self.modulus }
    }
}

impl Mul for ModNum {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.check(rhs);
        let v = (self.value as u128 * rhs.value as u128) % self.modulus as u128;
        ModNum { value: v as u64, modulus: self.modulus }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn wraps_negatives() {
        assert_eq!(ModNum::new(-1, 128).value(), 127);
        assert_eq!((ModNum::new(100, 128) + ModNum::new(30, 128)).value(), 2);
        assert_eq!(ModNum::new(4, 16).inv(), None);
        assert_eq!(ModNum::new(3, 16).inv().unwrap().value(), 11);
    }

    #[test]
    #[should_panic]
    fn mixed_moduli_panic() {
        let _ = ModNum::new(1, 5) + ModNum::new(1, 7);
    }

    proptest! {
        #[test]
        fn ring_axioms(a in any::<i32>(), b in any::<i32>(), c in any::<i32>(), mi in 0usize..4) {
            let n = [2u64, 16, 97, 128][mi];
            let (a, b, c) = (ModNum::new(a as i64, n), ModNum::new(b as i64, n), ModNum::new(c as i64, n));
            prop_assert_eq!((a * b) * c, a * (b * c));
            prop_assert_eq!(a * (b + c), a * b + a * c);
            prop_assert_eq!(a - a, ModNum::zero(n));
            if n == 97 && !a.is_zero() {
                prop_assert_eq!((a * a.inv().unwrap()).value(), 1);
            }
        }
    }
}
