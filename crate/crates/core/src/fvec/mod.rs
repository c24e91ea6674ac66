//! Closed-form f-vector algebra for 4-polytopes and the families built from
//! gluing atoms.

use num_bigint::BigInt;
use serde::Serialize;
use thiserror::Error;

use crate::arith::{int, rat, QuadNum, Rational};
use crate::complex::FVector;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FvecError {
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("negative count in {0}")]
    Negative(String),
}

/// Vertices of the cap cut off with one vertex of a 600-cell.
pub const CAP_VERTICES: i128 = 13;
/// Tetrahedra of the cap; its icosahedral facet is not counted.
pub const CAP_SIMPLICIAL_FACETS: i128 = 20;
/// Vertices of the icosahedral facet left by a cut.
pub const ICOSAHEDRON_VERTICES: i128 = 12;
pub const TRIANGLE_VERTICES: i128 = 3;

fn ratio(a: u128, b: u128) -> Rational {
    Rational::new(BigInt::from(a), BigInt::from(b))
}

fn four(f: &FVector) -> Result<[u128; 4], FvecError> {
    match f.counts() {
        &[a, b, c, d] => Ok([a, b, c, d]),
        _ => Err(FvecError::Precondition(format!("expected a 4-entry f-vector, got {f}"))),
    }
}

/// Euler's equation and the two Steinitz inequalities for 3-polytopes.
pub fn steinitz_check(f: &FVector) -> bool {
    let [f0, f1, f2] = match f.counts() {
        &[a, b, c] => [a as i128, b as i128, c as i128],
        _ => return false,
    };
    f1 == f0 + f2 - 2 && f2 <= 2 * f0 - 4 && f0 <= 2 * f2 - 4
}

/// Dehn-Sommerville for simple 4-polytopes: `f_2 = f_1 + f_3 - f_0` and
/// `f_1 = 2 f_0`.
pub fn simple_ds_check(f: &FVector) -> bool {
    match f.counts() {
        &[f0, f1, f2, f3] => f2 + f0 == f1 + f3 && f1 == 2 * f0,
        _ => false,
    }
}

/// The dual relations for simplicial 4-polytopes: `f_2 = 2 f_3` and Euler.
pub fn simplicial_ds_check(f: &FVector) -> bool {
    match f.counts() {
        &[_, _, f2, f3] => f2 == 2 * f3 && f.euler_check(None),
        _ => false,
    }
}

/// An f-vector with its fatness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Fat {
    pub fvector: FVector,
    #[serde(serialize_with = "ser_rat")]
    pub fatness: Rational,
}

pub(crate) fn ser_rat<S: serde::Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

/// `E` built from a simple polytope `P`: `(f_2, 6 f_0, 6 f_0, f_2)`, fatness
/// `6 f_0 / f_2`.
pub fn e_fvector_from_simple(fp: &FVector) -> Result<Fat, FvecError> {
    let [f0, _, f2, _] = four(fp)?;
    if !simple_ds_check(fp) || f2 == 0 {
        return Err(FvecError::Precondition(format!("{fp} is not the f-vector of a simple 4-polytope")));
    }
    Ok(Fat { fvector: FVector::from([f2, 6 * f0, 6 * f0, f2]), fatness: ratio(6 * f0, f2) })
}

/// `E` built from a simplicial edge-tangent `Q`: `(f_1, 6 f_3, 6 f_3, f_1)`,
/// fatness `6 (1 - f_0/f_1)`.
pub fn e_fvector_from_simplicial(fq: &FVector) -> Result<Fat, FvecError> {
    let [f0, f1, _, f3] = four(fq)?;
    if !simplicial_ds_check(fq) || f1 == 0 {
        return Err(FvecError::Precondition(format!("{fq} is not the f-vector of a simplicial 4-polytope")));
    }
    Ok(Fat { fvector: FVector::from([f1, 6 * f3, 6 * f3, f1]), fatness: int(6) * (int(1) - ratio(f0, f1)) })
}

/// Neighborly cubical 4-polytopes with the graph of the `n`-cube:
/// `(4, 2n, 3n-6, n-2) 2^(n-2)`, fatness `(5n-6)/(n+2)`.
pub fn neighborly_cubical(n: u32) -> Result<Fat, FvecError> {
    if !(4..=120).contains(&n) {
        return Err(FvecError::OutOfRange(format!("n = {n}, need 4 <= n <= 120")));
    }
    let n128 = n as u128;
    let s = 1u128 << (n - 2);
    let fvector = FVector::from([4 * s, 2 * n128 * s, (3 * n128 - 6) * s, (n128 - 2) * s]);
    Ok(Fat { fvector, fatness: ratio(5 * n128 - 6, n128 + 2) })
}

/// Four affine forms `a_i n + b_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FVectorFamily {
    pub name: &'static str,
    pub forms: [(i64, i64); 4],
}

impl FVectorFamily {
    pub fn eval(&self, n: u64) -> Result<FVector, FvecError> {
        let mut out = Vec::with_capacity(4);
        for &(a, b) in &self.forms {
            let v = a as i128 * n as i128 + b as i128;
            if v < 0 {
                return Err(FvecError::Negative(format!("{} at n = {n}", self.name)));
            }
            out.push(v as u128);
        }
        Ok(FVector::new(out))
    }

    /// The alternating sum vanishes as a polynomial in `n`.
    pub fn euler_identity(&self) -> bool {
        let s = |i: usize| -> i64 { self.forms.iter().enumerate().map(|(k, f)| if k % 2 == 0 { [f.0, f.1][i] } else { -[f.0, f.1][i] }).sum() };
        s(0) == 0 && s(1) == 0
    }

    /// Limit of `(f_1 + f_2)/(f_0 + f_3)` as `n` grows.
    pub fn limit_fatness(&self) -> Rational {
        let f = &self.forms;
        rat(f[1].0 + f[2].0, f[0].0 + f[3].0)
    }
}

pub fn cross_chain_base() -> FVectorFamily {
    FVectorFamily { name: "cross chain", forms: [(4, 4), (18, 6), (28, 4), (14, 2)] }
}

/// The cross chain after caulking each of its `4(n-1)` concave ridges with
/// three simplices, each adding `(2, 9, 14, 7)`.
pub fn cross_chain_filled() -> FVectorFamily {
    FVectorFamily { name: "filled cross chain", forms: [(12, -4), (54, -30), (84, -52), (42, -26)] }
}

/// The filled forms as usually quoted, with `84n - 54` and `42n - 26`;
/// they fail the Euler identity.
pub fn cross_chain_filled_misprint() -> FVectorFamily {
    FVectorFamily { name: "filled cross chain (misprint)", forms: [(12, -4), (54, -30), (84, -54), (42, -26)] }
}

pub fn cross_chain_e() -> FVectorFamily {
    FVectorFamily { name: "E of filled cross chain", forms: [(54, -30), (252, -156), (252, -156), (54, -30)] }
}

pub fn cut600_chain_q() -> FVectorFamily {
    FVectorFamily { name: "cut 600-cell chain", forms: [(106, 14), (666, 54), (1120, 80), (560, 40)] }
}

pub fn cut600_chain_e() -> FVectorFamily {
    FVectorFamily { name: "E of cut 600-cell chain", forms: [(666, 54), (3360, 240), (3360, 240), (666, 54)] }
}

pub fn families() -> Vec<FVectorFamily> {
    vec![cross_chain_base(), cross_chain_filled(), cross_chain_e(), cut600_chain_q(), cut600_chain_e()]
}

/// Per-caulking increment of the cross chain.
pub const CAULK_INCREMENT: [u128; 4] = [2, 9, 14, 7];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrossChain {
    pub n: u64,
    pub base: FVector,
    pub filled: FVector,
    pub e: FVector,
    #[serde(serialize_with = "ser_rat")]
    pub fatness: Rational,
}

pub fn cross_chain(n: u64) -> Result<CrossChain, FvecError> {
    if n == 0 {
        return Err(FvecError::OutOfRange("chain length must be at least 1".into()));
    }
    let base = cross_chain_base().eval(n)?;
    let k = 4 * (n as u128 - 1);
    let filled = FVector::new(base.counts().iter().zip(CAULK_INCREMENT).map(|(b, d)| b + k * d).collect());
    debug_assert_eq!(filled, cross_chain_filled().eval(n)?);
    let e = e_fvector_from_simplicial(&filled)?;
    Ok(CrossChain { n, base, filled, e: e.fvector, fatness: e.fatness })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cut600Chain {
    pub n: u64,
    pub q: FVector,
    pub e: FVector,
    #[serde(serialize_with = "ser_rat")]
    pub fatness: Rational,
    #[serde(serialize_with = "ser_rat")]
    pub kissing: Rational,
}

pub fn cut600_chain(n: u64) -> Result<Cut600Chain, FvecError> {
    if n == 0 {
        return Err(FvecError::OutOfRange("chain length must be at least 1".into()));
    }
    let q = cut600_chain_q().eval(n)?;
    let e = e_fvector_from_simplicial(&q)?;
    Ok(Cut600Chain { n, kissing: kissing_average(&q)?, q, e: e.fvector, fatness: e.fatness })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Corona {
    pub atoms: u64,
    pub bonds: u64,
    pub rings: u64,
    pub fvector: FVector,
    #[serde(serialize_with = "ser_rat")]
    pub fatness: Rational,
    #[serde(serialize_with = "ser_rat")]
    pub kissing: Rational,
}

/// Simplicial compound of `atoms` 600-cells where every bond glues two
/// icosahedral cuts and every ring of ten closes up around a triangle.
///
/// `f_3 = 600 atoms - 2 * 20 bonds`,
/// `f_0 = 120 atoms - 2 * 13 bonds + 12 bonds + 3 rings`,
/// `f_2 = 2 f_3`, `f_1 = f_0 + f_3`; fatness is that of its `E`.
pub fn corona(atoms: u64, bonds: u64, rings: u64) -> Result<Corona, FvecError> {
    let (a, b, r) = (atoms as i128, bonds as i128, rings as i128);
    let f3 = 600 * a - 2 * CAP_SIMPLICIAL_FACETS * b;
    let f0 = 120 * a - 2 * CAP_VERTICES * b + ICOSAHEDRON_VERTICES * b + TRIANGLE_VERTICES * r;
    if atoms == 0 || f3 <= 0 || f0 <= 0 {
        return Err(FvecError::Negative(format!("corona({atoms}, {bonds}, {rings})")));
    }
    let fvector = FVector::from([f0 as u128, (f0 + f3) as u128, (2 * f3) as u128, f3 as u128]);
    let fat = e_fvector_from_simplicial(&fvector)?;
    Ok(Corona { atoms, bonds, rings, kissing: kissing_average(&fvector)?, fvector, fatness: fat.fatness })
}

/// The corona around one 600-cell: `1 + 24 + 96 * 7` atoms,
/// `24 + 96 * 8` bonds and 96 rings.
pub fn corona_counts() -> (u64, u64, u64) {
    (1 + 24 + 96 * 7, 24 + 96 * 8, 96)
}

/// Simplicial facets per cap forced by a given corona facet total:
/// solves `600 atoms - 2 x bonds = f_3`.
pub fn cap_facets_from_total(atoms: u64, bonds: u64, f3: u64) -> Option<Rational> {
    if bonds == 0 {
        return None;
    }
    Some(rat(600 * atoms as i64 - f3 as i64, 2 * bonds as i64))
}

/// Average kissing number `2 f_1 / f_0` of an edge-tangent simplicial
/// 4-polytope.
pub fn kissing_average(f: &FVector) -> Result<Rational, FvecError> {
    if f.is_empty() || f.get(0) == 0 || f.len() < 2 {
        return Err(FvecError::Precondition("no vertices".into()));
    }
    Ok(ratio(2 * f.get(1), f.get(0)))
}

/// `8 + 4 sqrt 3`.
pub fn kissing_bound() -> QuadNum<3> {
    QuadNum::new(int(8), int(4))
}

/// Exact comparison `k < 8 + 4 sqrt 3`.
pub fn below_kissing_bound(k: &Rational) -> bool {
    kissing_bound() > QuadNum::rational(k.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::fmt_decimal;
    use proptest::prelude::*;

    #[test]
    fn steinitz() {
        assert!(steinitz_check(&FVector::from([4, 6, 4])));
        assert!(steinitz_check(&FVector::from([8, 12, 6])));
        assert!(!steinitz_check(&FVector::from([5, 9, 5])));
        assert!(!steinitz_check(&FVector::from([4, 6])));
    }

    #[test]
    fn dehn_sommerville() {
        assert!(simple_ds_check(&FVector::from([16, 32, 24, 8])));
        assert!(simple_ds_check(&FVector::from([600, 1200, 720, 120])));
        assert!(simple_ds_check(&FVector::from([5, 10, 10, 5])));
        assert!(!simple_ds_check(&FVector::from([8, 24, 32, 16])));
    }

    #[test]
    fn e_construction() {
        let f = |v: [u128; 4]| FVector::from(v);
        assert_eq!(e_fvector_from_simple(&f([16, 32, 24, 8])).unwrap().fvector, f([24, 96, 96, 24]));
        let e120 = e_fvector_from_simple(&f([600, 1200, 720, 120])).unwrap();
        assert_eq!(e120.fvector, f([720, 3600, 3600, 720]));
        assert_eq!(e120.fatness, int(5));
        assert_eq!(e_fvector_from_simple(&f([5, 10, 10, 5])).unwrap().fvector, f([10, 30, 30, 10]));
        assert_eq!(e_fvector_from_simplicial(&f([8, 24, 32, 16])).unwrap().fvector, f([24, 96, 96, 24]));
        assert_eq!(e_fvector_from_simplicial(&f([9, 27, 36, 18])).unwrap().fvector, f([27, 108, 108, 27]));
        assert_eq!(e_fvector_from_simplicial(&f([9, 28, 38, 19])).unwrap().fvector, f([28, 114, 114, 28]));
        assert!(e_fvector_from_simple(&f([8, 24, 32, 16])).is_err());
        assert!(e_fvector_from_simplicial(&f([16, 32, 24, 8])).is_err());
    }

    #[test]
    fn cubical() {
        let c4 = neighborly_cubical(4).unwrap();
        assert_eq!(c4.fvector, FVector::from([16, 32, 24, 8]));
        assert_eq!(c4.fatness, rat(7, 3));
        let c10 = neighborly_cubical(10).unwrap();
        assert_eq!(c10.fvector, FVector::from([1024, 5120, 6144, 2048]));
        assert_eq!(c10.fatness, rat(11, 3));
        assert!(neighborly_cubical(3).is_err());
        let mut prev = int(0);
        for n in 4..100 {
            let c = neighborly_cubical(n).unwrap();
            assert_eq!(c.fvector.fatness3().unwrap(), c.fatness);
            assert!(c.fatness > prev && c.fatness < int(5));
            prev = c.fatness;
        }
    }

    #[test]
    fn chains() {
        let c1 = cross_chain(1).unwrap();
        assert_eq!(c1.base, FVector::from([8, 24, 32, 16]));
        assert_eq!(c1.filled, c1.base);
        assert_eq!(c1.e, FVector::from([24, 96, 96, 24]));
        let c2 = cross_chain(2).unwrap();
        assert_eq!(c2.filled, FVector::from([20, 78, 116, 58]));
        assert_eq!(c2.e, FVector::from([78, 348, 348, 78]));
        assert_eq!(cross_chain_e().limit_fatness(), rat(14, 3));
        for n in 1..50 {
            let c = cross_chain(n).unwrap();
            assert_eq!(c.filled, cross_chain_filled().eval(n).unwrap());
            assert_eq!(c.e, cross_chain_e().eval(n).unwrap());
            assert_eq!(c.fatness, rat(252 * n as i64 - 156, 54 * n as i64 - 30));
        }
        let q1 = cut600_chain(1).unwrap();
        assert_eq!(q1.q, FVector::from([120, 720, 1200, 600]));
        assert_eq!(cut600_chain_e().limit_fatness(), rat(560, 111));
        assert_eq!(fmt_decimal(&rat(560, 111), 6), "5.045045");
        assert_eq!(rat(2 * 666, 106), rat(666, 53));
        for n in 1..50 {
            let c = cut600_chain(n).unwrap();
            let k = corona(n, n - 1, 0).unwrap();
            assert_eq!(c.q, k.fvector);
            assert_eq!(c.e, cut600_chain_e().eval(n).unwrap());
            assert_eq!(c.kissing, rat(2 * (666 * n as i64 + 54), 106 * n as i64 + 14));
        }
    }

    #[test]
    fn corona_numbers() {
        let (a, b, r) = corona_counts();
        assert_eq!((a, b, r), (697, 792, 96));
        let c = corona(a, b, r).unwrap();
        assert_eq!(c.fvector, FVector::from([72840, 459360, 773040, 386520]));
        assert_eq!(c.fatness, rat(3221, 638));
        assert_eq!(c.kissing, rat(7656, 607));
        assert_eq!(fmt_decimal(&c.fatness, 6), "5.048589");
        assert_eq!(fmt_decimal(&c.kissing, 5), "12.61285");
        assert!(below_kissing_bound(&c.kissing));
        assert!(!below_kissing_bound(&int(15)));
        assert_eq!(cap_facets_from_total(697, 792, 386520), Some(int(20)));
        let single = corona(1, 0, 0).unwrap();
        assert_eq!(single.fvector, FVector::from([120, 720, 1200, 600]));
        assert_eq!(single.kissing, int(12));
        assert!(corona(0, 0, 0).is_err());
        assert!(corona(1, 40, 0).is_err());
    }

    #[test]
    fn families_satisfy_euler() {
        for fam in families() {
            assert!(fam.euler_identity(), "{}", fam.name);
            for n in 1..100 {
                let f = fam.eval(n).unwrap();
                assert!(f.euler_check(None));
                assert!(f.counts().iter().all(|&x| x > 0));
            }
        }
        assert!(!cross_chain_filled_misprint().euler_identity());
    }

    fn simple_fvectors() -> impl Strategy<Value = FVector> {
        // solutions of the simple Dehn-Sommerville relations
        (5u128..2000, 5u128..2000).prop_map(|(f0, f3)| FVector::from([f0, 2 * f0, f0 + f3, f3]))
    }

    proptest! {
        #[test]
        fn simple_inputs(f in simple_fvectors()) {
            let fat = f.fatness3().unwrap();
            prop_assert!(fat < int(3));
            let e = e_fvector_from_simple(&f).unwrap();
            prop_assert!(e.fatness < int(6));
            prop_assert_eq!(e.fvector.fatness3().unwrap(), e.fatness.clone());
            let d = e_fvector_from_simplicial(&f.reversed()).unwrap();
            prop_assert_eq!(d, e);
        }

        #[test]
        fn duality_preserves_fatness(a in 1u128..10_000, b in 1u128..10_000, c in 1u128..10_000, d in 1u128..10_000) {
            let f = FVector::from([a, b, c, d]);
            prop_assert_eq!(f.fatness3().unwrap(), f.reversed().fatness3().unwrap());
        }
    }
}
