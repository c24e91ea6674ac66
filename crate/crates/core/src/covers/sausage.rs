use std::ops::{Add, Mul};

use serde::Serialize;

use super::{prime_power_genus, ratio, CoverError};
use crate::arith::Rational;
use crate::complex::{product_f_vector, ComplexError, FVector};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SausageReport {
    pub fvector: FVector,
    #[serde(serialize_with = "crate::fvec::ser_rat")]
    pub fatness: Rational,
    /// `(f_0 + 2 f_1 + f_2) / (f_0 + f_2)` of the core surface.
    #[serde(serialize_with = "crate::fvec::ser_rat")]
    pub limit: Rational,
}

/// Core surface times a path of `n` segments, plus the cells of the two
/// end caps.
pub fn sausage_fvector(core: &FVector, n: u128, cap1: &FVector, cap2: &FVector) -> Result<SausageReport, CoverError> {
    for cap in [cap1, cap2] {
        if cap.len() != 4 {
            return Err(ComplexError::Length(cap.len(), 4).into());
        }
    }
    let mid = product_f_vector(core, n)?;
    let f = FVector::new((0..4).map(|i| mid.get(i) + cap1.get(i) + cap2.get(i)).collect());
    let c = core.counts();
    Ok(SausageReport {
        fatness: f.fatness3()?,
        fvector: f,
        limit: ratio(c[0] + 2 * c[1] + c[2], c[0] + c[2]),
    })
}

/// Cells of one end cap over a closed core surface: `c * 3 f_1 * genus`
/// vertices, no counted edges, `3 genus` polygons and `2 genus + 1` solids.
pub fn cap_fvector(core: &FVector, cap_constant: u64) -> Result<FVector, CoverError> {
    if core.len() != 3 {
        return Err(ComplexError::Length(core.len(), 3).into());
    }
    let c = core.counts();
    let chi = c[0] as i128 - c[1] as i128 + c[2] as i128;
    let genus = (2 - chi) / 2;
    if genus < 0 || chi % 2 != 0 {
        return Err(CoverError::NotASurface(core.to_string()));
    }
    let genus = genus as u128;
    Ok(FVector::from([cap_constant as u128 * 3 * c[1] * genus, 0, 3 * genus, 2 * genus + 1]))
}

/// Integer polynomial in one variable, lowest coefficient first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Poly(pub Vec<i128>);

impl Poly {
    pub fn constant(c: i128) -> Self {
        Poly(vec![c]).trim()
    }

    pub fn monomial(c: i128, d: usize) -> Self {
        let mut v = vec![0; d + 1];
        v[d] = c;
        Poly(v).trim()
    }

    fn trim(mut self) -> Self {
        while self.0.last() == Some(&0) {
            self.0.pop();
        }
        self
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn leading(&self) -> i128 {
        self.0.last().copied().unwrap_or(0)
    }

    pub fn eval(&self, x: i128) -> i128 {
        self.0.iter().rev().fold(0, |acc, &c| acc * x + c)
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        let n = self.0.len().max(o.0.len());
        Poly((0..n).map(|i| self.0.get(i).unwrap_or(&0) + o.0.get(i).unwrap_or(&0)).collect()).trim()
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        if self.0.is_empty() || o.0.is_empty() {
            return Poly(Vec::new());
        }
        let mut v = vec![0; self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in o.0.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        Poly(v).trim()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Theorem2Params {
    /// Constant in the `O(n g)` intersection bound for the end caps.
    pub cap_constant: u64,
    /// The fat middle gets `g^slice_exponent` slices.
    pub slice_exponent: u32,
    /// How far to look upward for `g` with `4g + 1` a prime power.
    pub search: u64,
}

impl Default for Theorem2Params {
    fn default() -> Self {
        Theorem2Params { cap_constant: 1, slice_exponent: 7, search: 64 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Theorem2Report {
    pub g: u64,
    pub g_used: u64,
    pub q: u64,
    pub n: u64,
    pub cover_fvector: FVector,
    pub cover_genus: u128,
    pub cap_vertices: u128,
    /// Cells counted for each end; the edges of the ends are not counted,
    /// which can only lower the fatness.
    pub cap_fvector: FVector,
    pub slices: u128,
    pub fvector: FVector,
    #[serde(serialize_with = "crate::fvec::ser_rat")]
    pub fatness: Rational,
    #[serde(serialize_with = "crate::fvec::ser_rat")]
    pub limit_fatness: Rational,
    pub polynomials: Vec<Poly>,
    pub degrees: Vec<usize>,
    /// Degree of the fatness in `g`.
    pub fatness_degree: i64,
    /// `lim fatness / g`.
    #[serde(serialize_with = "crate::fvec::ser_rat")]
    pub fatness_constant: Rational,
    /// Fatness degree over vertex degree.
    #[serde(serialize_with = "crate::fvec::ser_rat")]
    pub exponent: Rational,
    pub params: Theorem2Params,
}

struct Counts {
    cover: [Poly; 3],
    genus: Poly,
    cap_vertices: Poly,
    cap: [Poly; 4],
    slices: Poly,
    total: [Poly; 4],
}

/// Every count as a polynomial in `g`, assuming `q = 4g + 1`.
fn counts(p: &Theorem2Params) -> Counts {
    let g = Poly::monomial(1, 1);
    let q = Poly(vec![1, 4]);
    let n = Poly::monomial(128, 4);
    let nq = &n * &q;
    let cover = [nq.clone(), &Poly::monomial(2, 1) * &nq, nq.clone()];
    let genus = &Poly::constant(1) + &(&nq * &(&g + &Poly::constant(-1)));
    let cap_vertices = &(&Poly::constant(3 * p.cap_constant as i128) * &cover[1]) * &genus;
    let cap = [
        cap_vertices.clone(),
        Poly::constant(0),
        &Poly::constant(3) * &genus,
        &(&Poly::constant(2) * &genus) + &Poly::constant(1),
    ];
    let slices = Poly::monomial(1, p.slice_exponent as usize);
    let s1 = &slices + &Poly::constant(1);
    let two = Poly::constant(2);
    let total = [
        &(&s1 * &cover[0]) + &(&two * &cap[0]),
        &(&(&s1 * &cover[1]) + &(&slices * &cover[0])) + &(&two * &cap[1]),
        &(&(&s1 * &cover[2]) + &(&slices * &cover[1])) + &(&two * &cap[2]),
        &(&slices * &cover[2]) + &(&two * &cap[3]),
    ];
    Counts { cover, genus, cap_vertices, cap, slices, total }
}

fn fv(ps: &[Poly], g: u64) -> FVector {
    FVector::new(ps.iter().map(|p| p.eval(g as i128) as u128).collect())
}

/// The sausage `S^3`: ends capped around the `Z/n` cover of the `F_q`
/// cover of `S_g` with `n = 128 g^4`, middle cut into slices.
pub fn theorem2_accounting(g: u64, params: &Theorem2Params) -> Result<Theorem2Report, CoverError> {
    if g == 0 {
        return Err(CoverError::GenusZero);
    }
    let h = prime_power_genus(g, params.search)?;
    let c = counts(params);
    let fvector = fv(&c.total, h);
    let degrees: Vec<usize> = c.total.iter().map(|p| p.degree().unwrap_or(0)).collect();
    let num = &c.total[1] + &c.total[2];
    let den = &c.total[0] + &c.total[3];
    let fatness_degree = num.degree().unwrap_or(0) as i64 - den.degree().unwrap_or(0) as i64;
    let fatness_constant = if fatness_degree == 1 {
        Rational::new(num.leading().into(), den.leading().into())
    } else {
        Rational::from_integer(0.into())
    };
    let cover_fvector = fv(&c.cover, h);
    let cf = cover_fvector.counts();
    Ok(Theorem2Report {
        g,
        g_used: h,
        q: 4 * h + 1,
        n: 128 * h.pow(4),
        cover_genus: c.genus.eval(h as i128) as u128,
        cap_vertices: c.cap_vertices.eval(h as i128) as u128,
        cap_fvector: fv(&c.cap, h),
        slices: c.slices.eval(h as i128) as u128,
        fatness: fvector.fatness3()?,
        limit_fatness: ratio(cf[0] + 2 * cf[1] + cf[2], cf[0] + cf[2]),
        cover_fvector,
        fvector,
        exponent: Rational::new(fatness_degree.into(), (degrees[0] as i64).into()),
        polynomials: c.total.to_vec(),
        degrees,
        fatness_degree,
        fatness_constant,
        params: params.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::super::build_sg_prime;
    use super::*;
    use crate::arith::rat;

    #[test]
    fn product_matches_direct_counts() {
        let s = build_sg_prime(1).unwrap();
        for n in 1..=3 {
            let direct = s.surface.product_with_path(n).unwrap().f_vector();
            assert_eq!(direct, product_f_vector(&s.surface.f_vector(), n as u128).unwrap());
        }
    }

    fn series(core: &FVector) -> Vec<Rational> {
        let zero = FVector::from([0, 0, 0, 0]);
        (1..60).map(|n| sausage_fvector(core, n, &zero, &zero).unwrap().fatness).collect()
    }

    #[test]
    fn fatness_moves_towards_the_middle() {
        // (a N + b) / (c N + d) moves with the sign of (f_0 - f_2)(f_0 + f_1 + f_2)
        let flat = series(&FVector::from([5, 10, 5]));
        assert!(flat.iter().all(|x| *x == rat(3, 1)));
        let up = series(&FVector::from([8, 12, 6]));
        assert!(up.windows(2).all(|w| w[0] < w[1]));
        assert!(*up.last().unwrap() < rat(8 + 24 + 6, 14));
        let down = series(&FVector::from([6, 12, 8]));
        assert!(down.windows(2).all(|w| w[0] > w[1]));
        let zero = FVector::from([0, 0, 0, 0]);
        assert_eq!(sausage_fvector(&FVector::from([5, 10, 5]), 1, &zero, &zero).unwrap().limit, rat(3, 1));
        for g in 1..6u128 {
            let q = 4 * g + 1;
            for m in [1, 7, 128] {
                let core = FVector::from([m * q, m * 2 * g * q, m * q]);
                let r = sausage_fvector(&core, 10, &zero, &zero).unwrap();
                assert_eq!(r.limit, rat(2 * g as i64 + 1, 1));
            }
        }
    }

    #[test]
    fn caps_are_washed_out() {
        let core = FVector::from([5, 10, 5]);
        let cap = FVector::from([40, 90, 70, 20]);
        let fat: Vec<Rational> = [1u128, 10, 100, 1000, 10000]
            .iter()
            .map(|&n| sausage_fvector(&core, n, &cap, &cap).unwrap().fatness)
            .collect();
        assert!(fat.windows(2).all(|w| w[0] < w[1]));
        assert!(rat(3, 1) - fat[4].clone() < rat(1, 100));
    }

    #[test]
    fn polynomials_agree_with_direct_counts() {
        let p = Theorem2Params::default();
        for g in [1u64, 2, 3, 4] {
            let r = theorem2_accounting(g, &p).unwrap();
            let h = r.g_used as u128;
            let q = 4 * h + 1;
            let n = 128 * h.pow(4);
            let cover = FVector::from([n * q, n * 2 * h * q, n * q]);
            assert_eq!(r.cover_fvector, cover);
            let genus = (2 - cover.euler_characteristic()) / 2;
            assert_eq!(r.cover_genus as i128, genus);
            let caps = FVector::from([3 * cover.get(1) * r.cover_genus, 0, 3 * r.cover_genus, 2 * r.cover_genus + 1]);
            let s = sausage_fvector(&cover, h.pow(7), &caps, &caps).unwrap();
            assert_eq!(s.fvector, r.fvector);
            assert_eq!(s.fatness, r.fatness);
        }
    }

    #[test]
    fn exponent_is_one_twelfth() {
        let p = Theorem2Params::default();
        for g in 1..=20 {
            let r = theorem2_accounting(g, &p).unwrap();
            assert_eq!(r.degrees, vec![12, 13, 13, 12]);
            assert_eq!(r.fatness_degree, 1);
            assert_eq!(r.exponent, rat(1, 12));
            assert!(r.fatness_constant > rat(0, 1));
            assert!(r.limit_fatness >= rat(2, 1));
        }
        let r = theorem2_accounting(1, &p).unwrap();
        assert_eq!(r.limit_fatness, rat(3, 1));
        assert_eq!(r.g_used, 1);
        let twelve = theorem2_accounting(3, &Theorem2Params { slice_exponent: 12, ..p }).unwrap();
        assert_eq!(twelve.degrees[0], 17);
    }

    #[test]
    fn poly_arithmetic() {
        let a = Poly(vec![1, 1]);
        let b = &a * &a;
        assert_eq!(b, Poly(vec![1, 2, 1]));
        assert_eq!(b.eval(3), 16);
        assert_eq!((&b + &Poly(vec![0, 0, -1])).degree(), Some(1));
    }
}
