use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde_json::json;

use super::rational::{int, Rational};
use super::OrderedField;

const fn is_squarefree(d: u64) -> bool {
    let mut p = 2;
    while p * p <= d {
        if d.is_multiple_of(p * p) {
            return false;
        }
        p += 1;
    }
    true
}

/// `a + b*sqrt(D)` with rational `a`, `b`. `D` is a squarefree integer
/// `>= 2`, fixed per type so that elements of different fields never mix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadNum<const D: u64> {
    pub a: Rational,
    pub b: Rational,
}

impl<const D: u64> QuadNum<D> {
    const VALID_RADICAND: () = assert!(D >= 2 && is_squarefree(D), "radicand must be squarefree and >= 2");

    pub fn new(a: Rational, b: Rational) -> Self {
        #[allow(clippy::let_unit_value)]
        let () = Self::VALID_RADICAND;
        QuadNum { a, b }
    }

    pub fn rational(a: Rational) -> Self {
        Self::new(a, Rational::zero())
    }

    /// `sqrt(D)` itself.
    pub fn sqrt_d() -> Self {
        Self::new(Rational::zero(), Rational::one())
    }

    pub fn radicand() -> u64 {
        D
    }

    pub fn conj(&self) -> Self {
        Self::new(self.a.clone(), -self.b.clone())
    }

    /// Field norm `a^2 - D b^2`.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - &self.b * &self.b * int(D as i64)
    }

    pub fn sign(&self) -> i8 {
        quad_sign(self)
    }

    pub fn inv(&self) -> Option<Self> {
        let n = self.norm();
        if n.is_zero() {
            return None;
        }
        Some(Self::new(&self.a / &n, -&self.b / &n))
    }

    pub fn square(&self) -> Self {
        self.clone() * self.clone()
    }
}

/// Exact sign of `a + b*sqrt(d)`: compares `a^2` with `b^2 d` when the
/// two parts have opposite signs.
pub fn quad_sign<const D: u64>(x: &QuadNum<D>) -> i8 {
    let sa = rsign(&x.a);
    let sb = rsign(&x.b);
    if sb == 0 {
        return sa;
    }
    if sa == 0 || sa == sb {
        return sb;
    }
    let a2 = &x.a * &x.a;
    let b2d = &x.b * &x.b * int(D as i64);
    if a2 > b2d {
        sa
    } else {
        // a^2 == b^2 d is impossible for squarefree d and b != 0
        sb
    }
}

fn rsign(r: &Rational) -> i8 {
    match OrderedField::signum(r) {
        Ordering::Less => -1,
        Ordering::Equal => 0,
        Ordering::Greater => 1,
    }
}

impl<const D: u64> fmt::Debug for QuadNum<D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} + {}*sqrt{})", self.a, self.b, D)
    }
}

impl<const D: u64> fmt::Display for QuadNum<D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else if self.a.is_zero() {
            write!(f, "{}*sqrt{}", self.b, D)
        } else {
            write!(f, "{} + {}*sqrt{}", self.a, self.b, D)
        }
    }
}

impl<const D: u64> Add for QuadNum<D> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl<const D: u64> Sub for QuadNum<D> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.a - rhs.a, self.b - rhs.b)
    }
}

impl<const D: u64> Mul for QuadNum<D> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let d = int(D as i64);
        let a = &self.a * &rhs.a + &self.b * &rhs.b * d;
        let b = &self.a * &rhs.b + &self.b * &rhs.a;
        Self::new(a, b)
    }
}

impl<const D: u64> Div for QuadNum<D> {
    type Output = Self;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Self) -> Self {
        self * rhs.inv().expect("division by zero in quadratic field")
    }
}

impl<const D: u64> Neg for QuadNum<D> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.a, -self.b)
    }
}

impl<const D: u64> PartialOrd for QuadNum<D> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<const D: u64> Ord for QuadNum<D> {
    fn cmp(&self, other: &Self) -> Ordering {
        quad_sign(&(self.clone() - other.clone())).cmp(&0)
    }
}

impl<const D: u64> Zero for QuadNum<D> {
    fn zero() -> Self {
        Self::rational(Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl<const D: u64> One for QuadNum<D> {
    fn one() -> Self {
        Self::rational(Rational::one())
    }
}

impl<const D: u64> OrderedField for QuadNum<D> {
    fn from_rational(r: Rational) -> Self {
        Self::rational(r)
    }
    fn signum(&self) -> Ordering {
        quad_sign(self).cmp(&0)
    }
    fn to_float(&self) -> f64 {
        self.a.to_float() + self.b.to_float() * (D as f64).sqrt()
    }
    fn to_json(&self) -> serde_json::Value {
        json!({"a": self.a.to_string(), "b": self.b.to_string(), "d": D})
    }
    fn field_tag() -> String {
        format!("Q(sqrt{D})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use proptest::prelude::*;

    type Q5 = QuadNum<5>;

    fn q5(a: i64, b: i64) -> Q5 {
        Q5::new(int(a), int(b))
    }

    #[test]
    fn sign_examples() {
        assert_eq!(quad_sign(&q5(1, 0)), 1);
        assert_eq!(quad_sign(&q5(-2, 1)), 1);
        assert_eq!(quad_sign(&q5(1, -1)), -1);
        assert_eq!(quad_sign(&q5(0, 0)), 0);
        assert_eq!(quad_sign(&q5(-3, 1)), -1);
    }

    #[test]
    fn golden_ratio_identity() {
        // phi^2 = phi + 1
        let phi = Q5::new(rat(1, 2), rat(1, 2));
        assert_eq!(phi.square(), phi.clone() + Q5::one());
        assert_eq!(phi.clone() * phi.inv().unwrap(), Q5::one());
    }

    fn small() -> impl Strategy<Value = Rational> {
        (-40i64..40, 1i64..12).prop_map(|(p, q)| rat(p, q))
    }

    fn q5s() -> impl Strategy<Value = Q5> {
        (small(), small()).prop_map(|(a, b)| Q5::new(a, b))
    }

    proptest! {
        #[test]
        fn sign_matches_float(a in -10_000i64..10_000, b in -10_000i64..10_000, qa in 1i64..50) {
            let x = Q5::new(rat(a, qa), int(b));
            let f = x.to_float();
            if f.abs() > 1e-6 {
                prop_assert_eq!(quad_sign(&x), if f > 0.0 { 1 } else { -1 });
            }
        }

        #[test]
        fn field_axioms(x in q5s(), y in q5s(), z in q5s()) {
            prop_assert_eq!((x.clone() * y.clone()) * z.clone(), x.clone() * (y.clone() * z.clone()));
            prop_assert_eq!(x.clone() * (y.clone() + z.clone()), x.clone() * y.clone() + x.clone() * z.clone());
            prop_assert_eq!(x.clone() + y.clone(), y.clone() + x.clone());
            if !x.is_zero() {
                prop_assert_eq!(x.clone() * x.inv().unwrap(), Q5::one());
            }
        }
    }
}
