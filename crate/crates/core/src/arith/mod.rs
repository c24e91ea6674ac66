//! Exact scalars: rationals, real quadratic fields, finite fields, residue
//! rings and angles measured in multiples of pi.

mod angle;
mod gf;
mod modnum;
mod quad;
mod rational;

pub use angle::{angle_sum, AnglePi};
pub use gf::{GfElem, GfField};
pub use modnum::ModNum;
pub use quad::{quad_sign, QuadNum};
pub use rational::{fmt_decimal, int, rat, Rational};

use std::cmp::Ordering;
use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArithError {
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("moduli differ: {0} vs {1}")]
    ModulusMismatch(u64, u64),
}

/// An exactly computable ordered subfield of the reals.
///
/// Coordinates of the atom polytopes live in one of these: plain rationals
/// for the simplex, cross polytope and cube, `Q(sqrt 5)` for the 600-cell
/// family.
pub trait OrderedField:
    Clone
    + PartialEq
    + Debug
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + num_traits::Zero
    + num_traits::One
{
    fn from_rational(r: Rational) -> Self;
    /// Sign of the represented real number.
    fn signum(&self) -> Ordering;
    fn to_float(&self) -> f64;
    /// Sidecar JSON encoding (`"p/q"` for rationals).
    fn to_json(&self) -> serde_json::Value;
    /// Name of the field, e.g. `"Q"` or `"Q(sqrt5)"`.
    fn field_tag() -> String;

    fn cmp_exact(&self, other: &Self) -> Ordering {
        (self.clone() - other.clone()).signum()
    }

    fn from_int(n: i64) -> Self {
        Self::from_rational(int(n))
    }
}

impl OrderedField for Rational {
    fn from_rational(r: Rational) -> Self {
        r
    }
    fn signum(&self) -> Ordering {
        use num_traits::Signed;
        if self.is_positive() {
            Ordering::Greater
        } else if self.is_negative() {
            Ordering::Less
        } else {
            Ordering::Equal
        }
    }
    fn to_float(&self) -> f64 {
        rational::to_f64(self)
    }
    fn to_json(&self) -> serde_json::Value {
        serde_json::Value::String(self.to_string())
    }
    fn field_tag() -> String {
        "Q".to_string()
    }
}
