use std::collections::VecDeque;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::CoverError;
use crate::arith::ModNum;
use crate::complex::SurfaceComplex;

/// Integral first homology of an oriented surface complex from a
/// tree-cotree decomposition. Each edge carries the coordinates of its
/// class; tree edges are zero and the leftover edges form the basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyBasis {
    tree: Vec<bool>,
    cotree: Vec<bool>,
    generators: Vec<usize>,
    classes: Vec<Vec<i64>>,
}

impl HomologyBasis {
    pub fn new(s: &SurfaceComplex) -> Result<Self, CoverError> {
        let ne = s.num_edges();
        let nv = s.num_vertices();
        let nf = s.num_faces();
        // (face, position) of the forward and the reversed traversal
        let mut fwd = vec![None; ne];
        let mut rev = vec![None; ne];
        for (f, w) in s.walks().iter().enumerate() {
            for (i, &(e, r)) in w.iter().enumerate() {
                let slot = if r { &mut rev[e] } else { &mut fwd[e] };
                if slot.is_some() {
                    return Err(CoverError::NotOrientable(e));
                }
                *slot = Some((f, i));
            }
        }
        let mut across = Vec::with_capacity(ne);
        for e in 0..ne {
            match (fwd[e], rev[e]) {
                (Some((a, _)), Some((b, _))) => across.push((a, b)),
                _ => return Err(CoverError::NotOrientable(e)),
            }
        }

        let mut incident = vec![Vec::new(); nv];
        for (e, &(a, b)) in s.edges().iter().enumerate() {
            incident[a].push(e);
            incident[b].push(e);
        }
        let mut tree = vec![false; ne];
        let mut seen = vec![false; nv];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(v) = queue.pop_front() {
            for &e in &incident[v] {
                let (a, b) = s.ends(e);
                let w = if a == v { b } else { a };
                if !seen[w] {
                    seen[w] = true;
                    tree[e] = true;
                    queue.push_back(w);
                }
            }
        }

        let mut face_edges = vec![Vec::new(); nf];
        for e in (0..ne).filter(|&e| !tree[e]) {
            let (a, b) = across[e];
            if a != b {
                face_edges[a].push(e);
                face_edges[b].push(e);
            }
        }
        let mut cotree = vec![false; ne];
        let mut parent = vec![None; nf];
        let mut order = Vec::with_capacity(nf);
        let mut reached = vec![false; nf];
        let mut queue = VecDeque::from([0]);
        reached[0] = true;
        while let Some(f) = queue.pop_front() {
            order.push(f);
            for &e in &face_edges[f] {
                let (a, b) = across[e];
                let h = if a == f { b } else { a };
                if !reached[h] {
                    reached[h] = true;
                    cotree[e] = true;
                    parent[h] = Some(e);
                    queue.push_back(h);
                }
            }
        }

        let generators: Vec<usize> = (0..ne).filter(|&e| !tree[e] && !cotree[e]).collect();
        let rank = generators.len();
        let mut classes = vec![vec![0i64; rank]; ne];
        for (i, &e) in generators.iter().enumerate() {
            classes[e][i] = 1;
        }
        for &f in order.iter().rev() {
            let Some(p) = parent[f] else { continue };
            let mut sum = vec![0i64; rank];
            let mut sign_p = 0;
            for &(e, r) in s.walk(f) {
                let sign = if r { -1 } else { 1 };
                if e == p {
                    sign_p = sign;
                    continue;
                }
                for (acc, x) in sum.iter_mut().zip(&classes[e]) {
                    *acc += sign * x;
                }
            }
            classes[p] = sum.iter().map(|x| -x * sign_p).collect();
        }
        Ok(HomologyBasis { tree, cotree, generators, classes })
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn is_tree_edge(&self, e: usize) -> bool {
        self.tree[e]
    }

    pub fn is_cotree_edge(&self, e: usize) -> bool {
        self.cotree[e]
    }

    pub fn edge_class(&self, e: usize) -> &[i64] {
        &self.classes[e]
    }

    /// Coordinates of the class of an edge path.
    pub fn class_of(&self, steps: &[(usize, bool)]) -> Vec<i64> {
        let mut out = vec![0; self.rank()];
        for &(e, r) in steps {
            let sign = if r { -1 } else { 1 };
            for (acc, x) in out.iter_mut().zip(&self.classes[e]) {
                *acc += sign * x;
            }
        }
        out
    }
}

/// A `Z/n`-valued 1-cochain vanishing on every face: the homomorphism
/// `H_1 -> Z/n` sending the `i`-th basis class to `generator_values[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cocycle {
    pub modulus: u64,
    pub generator_values: Vec<u64>,
    #[serde(skip)]
    pub values: Vec<ModNum>,
}

impl Cocycle {
    pub fn from_generators(basis: &HomologyBasis, modulus: u64, generator_values: Vec<u64>) -> Result<Self, CoverError> {
        if modulus == 0 {
            return Err(CoverError::ZeroModulus);
        }
        assert_eq!(generator_values.len(), basis.rank());
        let values = basis
            .classes
            .iter()
            .map(|c| {
                let v: i128 = c.iter().zip(&generator_values).map(|(&x, &r)| x as i128 * r as i128).sum();
                ModNum::new(v.rem_euclid(modulus as i128) as i64, modulus)
            })
            .collect();
        Ok(Cocycle { modulus, generator_values, values })
    }

    pub fn zero(basis: &HomologyBasis, modulus: u64) -> Result<Self, CoverError> {
        Self::from_generators(basis, modulus, vec![0; basis.rank()])
    }

    pub fn evaluate(&self, steps: &[(usize, bool)]) -> ModNum {
        steps.iter().fold(ModNum::zero(self.modulus), |acc, &(e, r)| if r { acc - self.values[e] } else { acc + self.values[e] })
    }

    /// Every face walk sums to zero.
    pub fn check(&self, s: &SurfaceComplex) -> Result<(), CoverError> {
        for (f, w) in s.walks().iter().enumerate() {
            if !self.evaluate(w).is_zero() {
                return Err(CoverError::BadCocycle(f));
            }
        }
        Ok(())
    }

    /// The image is all of `Z/n`.
    pub fn is_surjective(&self) -> bool {
        self.generator_values.iter().fold(self.modulus, |g, &r| num_integer::gcd(g, r)) == 1
    }
}

/// Uniform random homomorphism `H_1 -> Z/n`.
pub fn random_cocycle(basis: &HomologyBasis, n: u64, seed: u64) -> Result<Cocycle, CoverError> {
    if n == 0 {
        return Err(CoverError::ZeroModulus);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let r = (0..basis.rank()).map(|_| rng.gen_range(0..n)).collect();
    Cocycle::from_generators(basis, n, r)
}

#[cfg(test)]
mod tests {
    use super::super::{build_sg, build_sg_prime};
    use super::*;

    #[test]
    fn ranks() {
        for g in [1, 2, 3] {
            let s = build_sg_prime(g).unwrap();
            assert_eq!(s.homology.rank() as u64, 2 * (1 + s.q * (g - 1)));
            let b = &s.homology;
            let nv = s.surface.num_vertices();
            let nf = s.surface.num_faces();
            assert_eq!((0..s.surface.num_edges()).filter(|&e| b.is_tree_edge(e)).count(), nv - 1);
            assert_eq!((0..s.surface.num_edges()).filter(|&e| b.is_cotree_edge(e)).count(), nf - 1);
        }
    }

    #[test]
    fn faces_are_null_homologous() {
        let s = build_sg_prime(2).unwrap();
        for w in s.surface.walks() {
            assert!(s.homology.class_of(w).iter().all(|&x| x == 0));
        }
        let t = build_sg(2).unwrap();
        let b = HomologyBasis::new(&t).unwrap();
        assert!(b.class_of(&t.walks()[0]).iter().all(|&x| x == 0));
    }

    #[test]
    fn cocycles_vanish_on_faces() {
        let s = build_sg_prime(1).unwrap();
        for seed in 0..20 {
            let c = random_cocycle(&s.homology, 128, seed).unwrap();
            c.check(&s.surface).unwrap();
        }
        let c = random_cocycle(&s.homology, 128, 42).unwrap();
        assert!(s.surface.walks().iter().all(|w| c.evaluate(w).is_zero()));
        assert!(random_cocycle(&s.homology, 0, 1).is_err());
    }

    #[test]
    fn generator_values_are_uniform() {
        let s = build_sg_prime(1).unwrap();
        let e = s.homology.generators()[0];
        let n = 8u64;
        let mut counts = vec![0f64; n as usize];
        for seed in 0..1000 {
            let c = random_cocycle(&s.homology, n, seed).unwrap();
            counts[c.values[e].value() as usize] += 1.0;
        }
        let expected = 1000.0 / n as f64;
        let chi2: f64 = counts.iter().map(|c| (c - expected).powi(2) / expected).sum();
        // 7 degrees of freedom, p = 0.001
        assert!(chi2 < 24.32, "chi2 = {chi2}");
    }
}
