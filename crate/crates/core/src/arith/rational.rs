use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

pub fn rat(p: i64, q: i64) -> Rational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

pub fn int(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

pub(crate) fn to_f64(r: &Rational) -> f64 {
    match (r.numer().to_f64(), r.denom().to_f64()) {
        (Some(n), Some(d)) if n.is_finite() && d.is_finite() => n / d,
        _ => {
            // shift both sides down until they fit
            let bits = r.numer().bits().max(r.denom().bits());
            let shift = bits.saturating_sub(1000);
            let n = (r.numer() >> shift).to_f64().unwrap_or(f64::NAN);
            let d = (r.denom() >> shift).to_f64().unwrap_or(f64::NAN);
            n / d
        }
    }
}

/// Decimal rendering rounded half away from zero to `places` digits.
pub fn fmt_decimal(r: &Rational, places: usize) -> String {
    let scale = BigInt::from(10u32).pow(places as u32);
    let scaled = r.numer() * &scale;
    let (q, rem) = scaled.abs().div_rem(r.denom());
    let q = if rem * 2u32 >= *r.denom() { q + 1u32 } else { q };
    let digits = q.to_string();
    let sign = if r.is_negative() && !q_is_zero(&digits) { "-" } else { "" };
    if places == 0 {
        return format!("{sign}{digits}");
    }
    let padded = format!("{:0>width$}", digits, width = places + 1);
    let (whole, frac) = padded.split_at(padded.len() - places);
    format!("{sign}{whole}.{frac}")
}

fn q_is_zero(digits: &str) -> bool {
    digits.chars().all(|c| c == '0')
}

#[allow(dead_code)]
pub(crate) fn is_integer(r: &Rational) -> bool {
    r.denom().is_zero() || r.is_integer()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decimals_round_like_printed_values() {
        assert_eq!(fmt_decimal(&rat(3221, 638), 6), "5.048589");
        assert_eq!(fmt_decimal(&rat(560, 111), 6), "5.045045");
        assert_eq!(fmt_decimal(&rat(666, 53), 5), "12.56604");
        assert_eq!(fmt_decimal(&rat(7656, 607), 5), "12.61285");
        assert_eq!(fmt_decimal(&rat(-1, 3), 2), "-0.33");
        assert_eq!(fmt_decimal(&int(5), 0), "5");
    }

    #[test]
    fn normalized_eagerly() {
        let r = rat(56, 24);
        assert_eq!(r, rat(7, 3));
        assert_eq!(rat(3, -6), rat(-1, 2));
        assert!(rat(3, -6).denom() > &BigInt::zero());
    }
}
