use std::fmt;

use super::ArithError;

/// Element of a finite field, encoded by the index `sum c_i p^i` of its
/// coefficient vector (`c_0` is the constant term). Comparing indices is the
/// lexicographic order on `(c_{k-1}, ..., c_0)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GfElem(pub u32);

impl fmt::Debug for GfElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "gf#{}", self.0)
    }
}

/// `F_q` for `q = p^k`, realized as `F_p[x] / (m(x))` with `m` the
/// lexicographically least monic irreducible of degree `k`.
#[derive(Clone)]
pub struct GfField {
    p: u32,
    k: u32,
    q: u32,
    /// monic modulus, constant term first, length `k + 1`
    modulus: Vec<u32>,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    inv: Vec<u32>,
}

impl fmt::Debug for GfField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GfField")
            .field("p", &self.p)
            .field("k", &self.k)
            .field("modulus", &self.modulus)
            .finish()
    }
}

/// `Some((p, k))` when `q = p^k` with `p` prime.
pub(crate) fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q {
        if q.is_multiple_of(p) {
            break;
        }
        p += 1;
    }
    if p * p > q {
        return Some((q, 1));
    }
    let mut rest = q;
    let mut k = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p, k))
}

// Dense polynomial helpers over F_p, constant term first.

fn trim(mut a: Vec<u32>) -> Vec<u32> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r = trim(a.to_vec());
    let m = trim(m.to_vec());
    let dm = m.len() - 1;
    let lead_inv = inv_mod(m[dm], p);
    while r.len() > dm {
        let shift = r.len() - 1 - dm;
        let c = (r[r.len() - 1] as u64 * lead_inv as u64 % p as u64) as u32;
        for (i, &mi) in m.iter().enumerate() {
            let t = (c as u64 * mi as u64 % p as u64) as u32;
            r[shift + i] = (r[shift + i] + p - t) % p;
        }
        r = trim(r);
    }
    r
}

fn poly_mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x as u64 * y as u64) % p as u64;
        }
    }
    trim(out.into_iter().map(|v| v as u32).collect())
}

fn inv_mod(a: u32, p: u32) -> u32 {
    pow_mod(a as u64, (p - 2) as u64, p as u64) as u32
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

/// Monic polynomials of degree `deg`, in lexicographic order of
/// `(c_{deg-1}, ..., c_0)`.
fn monic_polys(p: u32, deg: u32) -> impl Iterator<Item = Vec<u32>> {
    let count = (p as u64).pow(deg);
    (0..count).map(move |idx| {
        let mut c = Vec::with_capacity(deg as usize + 1);
        let mut t = idx;
        for _ in 0..deg {
            c.push((t % p as u64) as u32);
            t /= p as u64;
        }
        c.push(1);
        c
    })
}

fn is_irreducible(f: &[u32], p: u32) -> bool {
    let deg = f.len() as u32 - 1;
    (1..=deg / 2).all(|d| monic_polys(p, d).all(|g| !poly_rem(f, &g, p).is_empty()))
}

impl GfField {
    /// Builds `F_q`. Errors when `q` is not a prime power.
    pub fn new(q: u64) -> Result<Self, ArithError> {
        let (p, k) = prime_power(q).ok_or(ArithError::NotPrimePower(q))?;
        assert!(q <= 1 << 16, "field tables are dense; q = {q} is too large");
        let (p, q) = (p as u32, q as u32);
        let modulus = if k == 1 {
            vec![0, 1]
        } else {
            monic_polys(p, k)
                .find(|f| is_irreducible(f, p))
                .expect("an irreducible polynomial of every degree exists")
        };
        let mut field = GfField {
            p,
            k,
            q,
            modulus,
            add: Vec::new(),
            mul: Vec::new(),
            neg: Vec::new(),
            inv: Vec::new(),
        };
        field.build_tables();
        Ok(field)
    }

    fn build_tables(&mut self) {
        let q = self.q as usize;
        let polys: Vec<Vec<u32>> = (0..self.q).map(|i| self.coeffs(GfElem(i))).collect();
        self.add = vec![0; q * q];
        self.mul = vec![0; q * q];
        for i in 0..q {
            for j in 0..q {
                let s: Vec<u32> = polys[i]
                    .iter()
                    .zip(&polys[j])
                    .map(|(a, b)| (a + b) % self.p)
                    .collect();
                self.add[i * q + j] = self.index_of(&s);
                let prod = poly_mul(&trim(polys[i].clone()), &trim(polys[j].clone()), self.p);
                let r = if self.k == 1 {
                    prod
                } else {
                    poly_rem(&prod, &self.modulus, self.p)
                };
                let r = if self.k == 1 {
                    // prime field: reduce the scalar directly
                    vec![r.first().copied().unwrap_or(0) % self.p]
                } else {
                    r
                };
                self.mul[i * q + j] = self.index_of(&r);
            }
        }
        self.neg = (0..q)
            .map(|i| (0..q).find(|&j| self.add[i * q + j] == 0).unwrap() as u32)
            .collect();
        self.inv = (0..q)
            .map(|i| {
                if i == 0 {
                    0
                } else {
                    (1..q).find(|&j| self.mul[i * q + j] == 1).unwrap() as u32
                }
            })
            .collect();
    }

    fn index_of(&self, c: &[u32]) -> u32 {
        c.iter().rev().fold(0, |acc, &x| acc * self.p + x)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    /// Monic modulus polynomial, constant term first.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// Coefficient vector (length `k`, constant term first).
    pub fn coeffs(&self, x: GfElem) -> Vec<u32> {
        let mut t = x.0;
        (0..self.k)
            .map(|_| {
                let c = t % self.p;
                t /= self.p;
                c
            })
            .collect()
    }

    pub fn from_coeffs(&self, c: &[u32]) -> GfElem {
        assert_eq!(c.len(), self.k as usize);
        GfElem(self.index_of(&c.iter().map(|x| x % self.p).collect::<Vec<_>>()))
    }

    pub fn elements(&self) -> impl Iterator<Item = GfElem> {
        (0..self.q).map(GfElem)
    }

    pub fn zero(&self) -> GfElem {
        GfElem(0)
    }

    pub fn one(&self) -> GfElem {
        GfElem(1)
    }

    pub fn add(&self, a: GfElem, b: GfElem) -> GfElem {
        GfElem(self.add[(a.0 * self.q + b.0) as usize])
    }

    pub fn sub(&self, a: GfElem, b: GfElem) -> GfElem {
        self.add(a, self.neg(b))
    }

    pub fn neg(&self, a: GfElem) -> GfElem {
        GfElem(self.neg[a.0 as usize])
    }

    pub fn mul(&self, a: GfElem, b: GfElem) -> GfElem {
        GfElem(self.mul[(a.0 * self.q + b.0) as usize])
    }

    pub fn inv(&self, a: GfElem) -> Option<GfElem> {
        (a.0 != 0).then(|| GfElem(self.inv[a.0 as usize]))
    }

    pub fn div(&self, a: GfElem, b: GfElem) -> Option<GfElem> {
        self.inv(b).map(|bi| self.mul(a, bi))
    }

    pub fn pow(&self, a: GfElem, mut e: u64) -> GfElem {
        let mut base = a;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative order of a nonzero element.
    pub fn mult_order(&self, a: GfElem) -> Option<u32> {
        if a.0 == 0 {
            return None;
        }
        let mut x = a;
        let mut n = 1;
        while x != self.one() {
            x = self.mul(x, a);
            n += 1;
        }
        Some(n)
    }

    /// The least element of multiplicative order `q - 1`.
    pub fn generator(&self) -> GfElem {
        self.elements()
            .skip(1)
            .find(|&a| self.mult_order(a) == Some(self.q - 1))
            .expect("the multiplicative group of a finite field is cyclic")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn prime_field_and_generator() {
        let f5 = GfField::new(5).unwrap();
        assert_eq!(f5.k(), 1);
        assert_eq!(f5.generator(), GfElem(2));
        let f13 = GfField::new(13).unwrap();
        assert_eq!(f13.generator(), GfElem(2));
    }

    #[test]
    fn non_prime_powers_rejected() {
        assert_eq!(GfField::new(6).unwrap_err(), ArithError::NotPrimePower(6));
        assert!(GfField::new(1).is_err());
        assert!(GfField::new(12).is_err());
    }

    /// Exhaustive oracle: least monic irreducible quadratic over F_3 and the
    /// least generator of F_9 under coefficient-lex order.
    #[test]
    fn f9_modulus_and_generator_by_exhaustion() {
        let p = 3u32;
        let mut least = None;
        'outer: for c1 in 0..p {
            for c0 in 0..p {
                // x^2 + c1 x + c0 has no root in F_3
                if (0..p).all(|x| (x * x + c1 * x + c0) % p != 0) {
                    least = Some(vec![c0, c1, 1]);
                    break 'outer;
                }
            }
        }
        let f9 = GfField::new(9).unwrap();
        assert_eq!(f9.modulus(), least.unwrap().as_slice());
        assert_eq!(f9.modulus(), &[1, 0, 1]);
        // x has order 4 (x^2 = -1); 1 + x: (1+x)^2 = 2x, (2x)^2 = -4 = 2, so order 8
        let g = f9.generator();
        assert_eq!(f9.coeffs(g), vec![1, 1]);
        assert_eq!(f9.mult_order(f9.from_coeffs(&[0, 1])), Some(4));
    }

    #[test]
    fn generators_have_full_order() {
        for q in [5u64, 9, 13, 17, 25, 27, 29, 49, 81] {
            let f = GfField::new(q).unwrap();
            let g = f.generator();
            let order = q - 1;
            assert_eq!(f.pow(g, order), f.one());
            for d in 1..order {
                if order % d == 0 {
                    assert_ne!(f.pow(g, d), f.one(), "q={q}, d={d}");
                }
            }
        }
    }

    proptest! {
        #[test]
        fn field_axioms(qi in 0usize..5, a in 0u32..1000, b in 0u32..1000, c in 0u32..1000) {
            let q = [5u64, 9, 13, 25, 27][qi];
            let f = GfField::new(q).unwrap();
            let n = q as u32;
            let (a, b, c) = (GfElem(a % n), GfElem(b % n), GfElem(c % n));
            prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
            prop_assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
            prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
            prop_assert_eq!(f.add(a, f.neg(a)), f.zero());
            if a != f.zero() {
                prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
            }
        }
    }
}
