use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Mul, Sub};

use num_traits::{Signed, Zero};

use super::quad::QuadNum;
use super::rational::{int, rat, Rational};

/// An angle stored as its coefficient on pi.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AnglePi(Rational);

impl serde::Serialize for AnglePi {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl AnglePi {
    /// `p/q * pi`
    pub fn frac(p: i64, q: i64) -> Self {
        AnglePi(rat(p, q))
    }

    pub fn from_coefficient(c: Rational) -> Self {
        AnglePi(c)
    }

    pub fn zero() -> Self {
        AnglePi(Rational::zero())
    }

    pub fn pi() -> Self {
        Self::frac(1, 1)
    }

    pub fn full_turn() -> Self {
        Self::frac(2, 1)
    }

    pub fn coefficient(&self) -> &Rational {
        &self.0
    }

    pub fn is_nonnegative(&self) -> bool {
        !self.0.is_negative()
    }

    /// Exact cosine, available for multiples of pi/2, pi/3 and pi/5.
    ///
    /// Everything lands in `Q(sqrt 5)`; for the pi/5 family
    /// `cos(pi/5) = (1 + sqrt5)/4` and `cos(2pi/5) = (sqrt5 - 1)/4`.
    pub fn cos_exact(&self) -> Option<QuadNum<5>> {
        // reduce to [0, 2) then fold onto [0, 1]
        let two = int(2);
        let mut c = self.0.clone() % &two;
        if c.is_negative() {
            c += &two;
        }
        if c > int(1) {
            c = &two - c;
        }
        let d = c.denom().clone();
        let n = c.numer().clone();
        let d: i64 = d.try_into().ok()?;
        let n: i64 = n.try_into().ok()?;
        let q = |a: Rational, b: Rational| Some(QuadNum::<5>::new(a, b));
        match (n, d) {
            (0, 1) => q(int(1), int(0)),
            (1, 1) => q(int(-1), int(0)),
            (1, 2) => q(int(0), int(0)),
            (1, 3) => q(rat(1, 2), int(0)),
            (2, 3) => q(rat(-1, 2), int(0)),
            (1, 5) => q(rat(1, 4), rat(1, 4)),
            (2, 5) => q(rat(-1, 4), rat(1, 4)),
            (3, 5) => q(rat(1, 4), rat(-1, 4)),
            (4, 5) => q(rat(-1, 4), rat(-1, 4)),
            _ => None,
        }
    }

    /// Interior angles of the polygon spanned by `kept` vertices (indices
    /// into a regular `k`-gon, at least three of them).
    ///
    /// An inscribed angle is half the central angle of the opposite arc, so a
    /// kept vertex whose kept neighbours sit `a` steps before and `b` steps
    /// after it has angle `(k - a - b) pi / k`.
    pub fn inscribed_polygon_angles(k: usize, kept: &[usize]) -> Vec<AnglePi> {
        let mut v: Vec<usize> = kept.to_vec();
        v.sort_unstable();
        v.dedup();
        assert!(v.len() >= 3 && v.iter().all(|&x| x < k));
        let m = v.len();
        (0..m)
            .map(|i| {
                let prev = v[(i + m - 1) % m];
                let next = v[(i + 1) % m];
                let a = (v[i] + k - prev) % k;
                let b = (next + k - v[i]) % k;
                AnglePi::frac((k - a - b) as i64, k as i64)
            })
            .collect()
    }
}

/// Sum of a list of angles.
pub fn angle_sum(angles: &[AnglePi]) -> AnglePi {
    angles.iter().cloned().sum()
}

impl fmt::Debug for AnglePi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for AnglePi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_zero() {
            return write!(f, "0");
        }
        let n = self.0.numer();
        let d = self.0.denom();
        let num = if *n == 1.into() { "pi".to_string() } else { format!("{n}pi") };
        if *d == 1.into() {
            write!(f, "{num}")
        } else {
            write!(f, "{num}/{d}")
        }
    }
}

impl Add for AnglePi {
    type Output = AnglePi;
    fn add(self, rhs: AnglePi) -> AnglePi {
        AnglePi(self.0 + rhs.0)
    }
}

impl Sub for AnglePi {
    type Output = AnglePi;
    fn sub(self, rhs: AnglePi) -> AnglePi {
        AnglePi(self.0 - rhs.0)
    }
}

impl Mul<i64> for AnglePi {
    type Output = AnglePi;
    fn mul(self, rhs: i64) -> AnglePi {
        AnglePi(self.0 * int(rhs))
    }
}

impl Sum for AnglePi {
    fn sum<I: Iterator<Item = AnglePi>>(iter: I) -> AnglePi {
        iter.fold(AnglePi::zero(), |a, b| a + b)
    }
}

impl<'a> Sum<&'a AnglePi> for AnglePi {
    fn sum<I: Iterator<Item = &'a AnglePi>>(iter: I) -> AnglePi {
        iter.cloned().sum()
    }
}

impl AnglePi {
    pub fn cmp_to(&self, bound: &AnglePi) -> Ordering {
        self.cmp(bound)
    }
}
