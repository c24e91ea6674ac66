//! Fat cellulations of surfaces: the one-vertex 4g-gon, its abelian cover
//! over `F_q` with complete graph and complete dual graph, random cyclic
//! covers of that, and the f-vector accounting of the sausage `S^3`.

mod experiment;
mod homology;
mod loops;
mod sausage;

pub use experiment::{
    build_cover, oracle_agreement, strongly_regular_via_loops, thm10_experiment, trial_seed, ExperimentReport,
    OracleReport, TrialRecord,
};
pub use homology::{random_cocycle, Cocycle, HomologyBasis};
pub use loops::{
    enumerate_obstructing_loops, is_indivisible, loop_bound, star_scan_count, verify_lemma11, Lemma11Report, LoopCensus,
    ObstructingLoop,
};
pub use sausage::{cap_fvector, sausage_fvector, theorem2_accounting, Poly, SausageReport, Theorem2Params, Theorem2Report};

use serde::Serialize;
use thiserror::Error;

use crate::arith::{ArithError, GfElem, GfField, Rational};
use crate::complex::{ComplexError, FVector, SurfaceComplex};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoverError {
    #[error("genus must be at least 1")]
    GenusZero,
    #[error("the surface is not oriented: edge {0} is not crossed once each way")]
    NotOrientable(usize),
    #[error("the modulus must be at least 1")]
    ZeroModulus,
    #[error("no prime power 4g + 1 for g in {from}..={to}")]
    NoPrimePower { from: u64, to: u64 },
    #[error("f-vector {0} is not a closed orientable surface")]
    NotASurface(String),
    #[error("cocycle does not vanish on face {0}")]
    BadCocycle(usize),
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

/// The perfect cellulation of `S_g`: one vertex, edges `x_0 .. x_{2g-1}`,
/// and one `4g`-gon with walk `x_0 x_1 ... x_{4g-1}` where
/// `x_{2g+i} = x_i^{-1}`.
pub fn build_sg(g: u64) -> Result<SurfaceComplex, CoverError> {
    if g == 0 {
        return Err(CoverError::GenusZero);
    }
    let m = 2 * g as usize;
    let walk = (0..2 * m).map(|k| if k < m { (k, false) } else { (k - m, true) }).collect();
    Ok(SurfaceComplex::new(1, vec![(0, 0); m], vec![walk])?.with_genus(g))
}

/// The `F_q` cover of `S_g` for `q = 4g + 1`.
#[derive(Clone, Debug)]
pub struct CoverSurface {
    pub g: u64,
    pub q: u64,
    pub field: GfField,
    pub alpha: GfElem,
    pub surface: SurfaceComplex,
    /// `labels[s][k] = v_k^s`
    pub labels: Vec<Vec<GfElem>>,
    pub homology: HomologyBasis,
}

impl CoverSurface {
    /// Index of the edge `u -> u + alpha^k`.
    pub fn edge_index(&self, u: GfElem, k: usize) -> usize {
        u.0 as usize * 2 * self.g as usize + k
    }

    /// Genus `1 + q(g - 1)` from the Euler characteristic.
    pub fn cover_genus(&self) -> u64 {
        1 + self.q * (self.g - 1)
    }
}

/// Vertices are the elements of `F_q`; edge `(u, k)` runs from `u` to
/// `u + alpha^k` for `k < 2g`; face `F^s` has corners
/// `v_k^s = s + (alpha^k - 1) / (alpha - 1)`.
pub fn build_sg_prime(g: u64) -> Result<CoverSurface, CoverError> {
    if g == 0 {
        return Err(CoverError::GenusZero);
    }
    let q = 4 * g + 1;
    let field = GfField::new(q)?;
    let alpha = field.generator();
    let m = 2 * g as usize;
    let one = field.one();
    let denom = field.sub(alpha, one);
    let offset = |k: usize| {
        let num = field.sub(field.pow(alpha, k as u64), one);
        field.div(num, denom).expect("alpha is not 1")
    };
    let offsets: Vec<GfElem> = (0..2 * m).map(offset).collect();
    let elements: Vec<GfElem> = field.elements().collect();
    let mut ends = Vec::with_capacity(m * elements.len());
    for &u in &elements {
        for k in 0..m {
            ends.push((u.0 as usize, field.add(u, field.pow(alpha, k as u64)).0 as usize));
        }
    }
    let edge = |u: GfElem, k: usize| u.0 as usize * m + k;
    let mut labels = Vec::with_capacity(elements.len());
    let mut walks = Vec::with_capacity(elements.len());
    for &s in &elements {
        let v: Vec<GfElem> = offsets.iter().map(|&o| field.add(s, o)).collect();
        let walk = (0..2 * m)
            .map(|k| if k < m { (edge(v[k], k), false) } else { (edge(v[(k + 1) % (2 * m)], k - m), true) })
            .collect();
        walks.push(walk);
        labels.push(v);
    }
    let surface = SurfaceComplex::new(elements.len(), ends, walks)?.with_genus(1 + q * (g - 1));
    let homology = HomologyBasis::new(&surface)?;
    Ok(CoverSurface { g, q, field, alpha, surface, labels, homology })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckItem {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Lemma9Report {
    pub g: u64,
    pub q: u64,
    pub fvector: FVector,
    pub fatness: String,
    pub items: Vec<CheckItem>,
    /// The complete graph has `q` vertices, not `q + 1`.
    pub skeleton_vertices: u64,
    pub homology_rank: usize,
    pub homology_rank_as_printed: u64,
}

impl Lemma9Report {
    pub fn all_pass(&self) -> bool {
        self.items.iter().all(|i| i.pass)
    }
}

pub fn verify_lemma9(s: &CoverSurface) -> Lemma9Report {
    let q = s.q as usize;
    let sf = &s.surface;
    let mut items = Vec::new();
    let mut check = |name: &str, pass: bool, detail: String| items.push(CheckItem { name: name.into(), pass, detail });

    let witness = sf.regularity_witness();
    check("regular", witness.is_none(), witness.map(|w| w.to_string()).unwrap_or_default());
    let f = sf.f_vector();
    let expected = FVector::from([s.q as u128, (2 * s.g * s.q) as u128, s.q as u128]);
    check("f-vector (q, 2gq, q)", f == expected, format!("{f}"));
    check("f_1 = C(q, 2)", f.get(1) == (q * (q - 1) / 2) as u128, format!("{}", f.get(1)));

    let distinct = (0..q).all(|j| {
        let mut c = sf.corners(j);
        c.sort_unstable();
        c.dedup();
        c.len() == q - 1
    });
    check("every facet has 4g distinct vertices", distinct, String::new());

    let mut pairs: Vec<(usize, usize)> = sf.edges().iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
    pairs.sort_unstable();
    let simple = pairs.windows(2).all(|w| w[0] != w[1]) && pairs.iter().all(|&(a, b)| a != b);
    check("1-skeleton is the complete graph K_q", simple && pairs.len() == q * (q - 1) / 2, format!("{} edges", pairs.len()));
    let degrees_ok = (0..q).all(|v| pairs.iter().filter(|&&(a, b)| a == v || b == v).count() == q - 1);
    check("every vertex has degree 4g", degrees_ok, String::new());

    let edge_sets: Vec<Vec<usize>> = (0..q)
        .map(|j| {
            let mut e: Vec<usize> = sf.walk(j).iter().map(|s| s.0).collect();
            e.sort_unstable();
            e
        })
        .collect();
    let vertex_sets: Vec<Vec<usize>> = (0..q)
        .map(|j| {
            let mut c = sf.corners(j);
            c.sort_unstable();
            c
        })
        .collect();
    let mut one_edge = true;
    let mut others = true;
    for a in 0..q {
        for b in a + 1..q {
            let shared_e = edge_sets[a].iter().filter(|e| edge_sets[b].binary_search(e).is_ok()).count();
            let shared_v = vertex_sets[a].iter().filter(|v| vertex_sets[b].binary_search(v).is_ok()).count();
            one_edge &= shared_e == 1;
            others &= shared_v == 2 + q - 4;
        }
    }
    check("dual graph complete, one shared edge per facet pair", one_edge, String::new());
    check("facet pairs share q - 4 further vertices", others, format!("q - 4 = {}", q - 4));

    let labels_ok = (0..q).all(|j| {
        let c = sf.corners(j);
        c.iter().zip(&s.labels[j]).all(|(&v, l)| v == l.0 as usize)
            && (0..q - 1).all(|k| {
                let d = s.field.sub(s.labels[j][(k + 1) % (q - 1)], s.labels[j][k]);
                d == s.field.pow(s.alpha, k as u64)
            })
    });
    check("corner labels step by successive powers of alpha", labels_ok, String::new());

    let fatness = f.fatness2().map(|r| r.to_string()).unwrap_or_default();
    Lemma9Report {
        g: s.g,
        q: s.q,
        fvector: f,
        fatness,
        items,
        skeleton_vertices: s.q,
        homology_rank: s.homology.rank(),
        homology_rank_as_printed: 1 + s.q * (s.g - 1),
    }
}

/// Smallest `g' >= g` with `4g' + 1` a prime power.
pub fn prime_power_genus(g: u64, search: u64) -> Result<u64, CoverError> {
    (g..=g + search)
        .find(|&h| GfField::new(4 * h + 1).is_ok())
        .ok_or(CoverError::NoPrimePower { from: g, to: g + search })
}

pub(crate) fn ratio(a: u128, b: u128) -> Rational {
    Rational::new((a as i128).into(), (b as i128).into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn perfect_cellulation() {
        let t = build_sg(1).unwrap();
        assert_eq!(t.f_vector(), FVector::from([1, 2, 1]));
        let s = build_sg(3).unwrap();
        assert_eq!(s.f_vector(), FVector::from([1, 6, 1]));
        assert_eq!(s.f_vector().fatness2().unwrap(), rat(3, 1));
        assert!(!s.is_regular());
        assert_eq!(build_sg(0).unwrap_err(), CoverError::GenusZero);
        assert_eq!(HomologyBasis::new(&s).unwrap().rank(), 6);
    }

    #[test]
    fn cover_f_vectors() {
        for (g, f) in [(1, [5, 10, 5]), (2, [9, 36, 9]), (3, [13, 78, 13])] {
            let s = build_sg_prime(g).unwrap();
            assert_eq!(s.surface.f_vector(), FVector::from(f));
        }
        assert!(matches!(build_sg_prime(5), Err(CoverError::Arith(ArithError::NotPrimePower(21)))));
    }

    #[test]
    fn cover_structure_checks() {
        for g in [1, 2, 3, 4, 7] {
            let s = build_sg_prime(g).unwrap();
            let r = verify_lemma9(&s);
            assert!(r.all_pass(), "g = {g}: {:?}", r.items);
            assert_eq!(r.homology_rank as u64, 2 * (1 + s.q * (g - 1)));
        }
    }

    #[test]
    fn prime_power_search() {
        assert_eq!(prime_power_genus(1, 10).unwrap(), 1);
        assert_eq!(prime_power_genus(5, 10).unwrap(), 6);
        assert!(prime_power_genus(5, 0).is_err());
    }
}
