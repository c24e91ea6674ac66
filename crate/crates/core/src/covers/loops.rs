use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::{CoverError, CoverSurface};
use crate::complex::SurfaceComplex;

/// A loop through `v` and `w` made of two boundary arcs, each in a cell of
/// the star of `v`: lifts of it join distinct vertices of a star.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ObstructingLoop {
    pub v: usize,
    pub w: usize,
    /// Faces around `v` holding each of the two lifted copies of `w`.
    pub cells: [Vec<usize>; 2],
    /// Both arcs run from `v` to `w`.
    pub arcs: [Vec<(usize, bool)>; 2],
    pub homology: Vec<i64>,
}

impl ObstructingLoop {
    /// The loop as a closed walk: the first arc, then the second backwards.
    pub fn walk(&self) -> Vec<(usize, bool)> {
        let mut out = self.arcs[0].clone();
        out.extend(self.arcs[1].iter().rev().map(|&(e, r)| (e, !r)));
        out
    }

    pub fn support(&self) -> usize {
        self.arcs[0].len() + self.arcs[1].len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LoopCensus {
    pub g: u64,
    pub q: u64,
    /// Points of each vertex star other than the centre.
    pub star_points: Vec<usize>,
    /// Pairs of star points over the same vertex, per centre.
    pub star_pairs: Vec<usize>,
    pub loops: Vec<ObstructingLoop>,
    /// `C(q, 2) C(4g - 2, 2)`
    pub bound: u64,
    /// `64 g^4`
    pub coarse_bound: u64,
}

impl LoopCensus {
    pub fn count(&self) -> usize {
        self.loops.len()
    }

    pub fn within_bounds(&self) -> bool {
        (self.count() as u64) <= self.bound && (self.count() as u64) < self.coarse_bound
    }
}

/// `C(4g + 1, 2) C(4g - 2, 2) = (4g+1) 4g (4g-2) (4g-3) / 4`.
pub fn loop_bound(g: u64) -> u64 {
    let m = 4 * g;
    (m + 1) * m / 2 * ((m - 2) * (m - 3) / 2)
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Point {
    Edge(usize),
    Inner(usize, usize),
}

struct StarPoint {
    target: usize,
    faces: BTreeSet<usize>,
    arc: Vec<(usize, bool)>,
}

/// The star of `v` in the universal cover, as points keyed by the edge or
/// (face, corner) they sit on.
fn star(s: &SurfaceComplex, v: usize) -> BTreeMap<Point, StarPoint> {
    let mut pts: BTreeMap<Point, StarPoint> = BTreeMap::new();
    for f in 0..s.num_faces() {
        let w = s.walk(f);
        let len = w.len();
        let corners = s.corners(f);
        for i in (0..len).filter(|&i| corners[i] == v) {
            for j in 1..len {
                let target = corners[(i + j) % len];
                let (key, arc) = if j == 1 {
                    (Point::Edge(w[i].0), vec![w[i]])
                } else if j == len - 1 {
                    let (e, r) = w[(i + len - 1) % len];
                    (Point::Edge(e), vec![(e, !r)])
                } else if 2 * j <= len {
                    (Point::Inner(f, (i + j) % len), (0..j).map(|t| w[(i + t) % len]).collect())
                } else {
                    let back = (0..len - j).map(|t| {
                        let (e, r) = w[(i + len - 1 - t) % len];
                        (e, !r)
                    });
                    (Point::Inner(f, (i + j) % len), back.collect())
                };
                let p = pts.entry(key).or_insert_with(|| StarPoint { target, faces: BTreeSet::new(), arc });
                p.faces.insert(f);
            }
        }
    }
    pts
}

/// All two-arc obstructing loops of a regular surface, each listed once.
pub fn enumerate_obstructing_loops(s: &CoverSurface) -> Result<LoopCensus, CoverError> {
    let sf = &s.surface;
    if let Some(w) = sf.regularity_witness() {
        return Err(crate::complex::ComplexError::NotRegular(w.to_string()).into());
    }
    let mut star_points = Vec::new();
    let mut star_pairs = Vec::new();
    let mut found: BTreeMap<(usize, usize, Vec<Vec<usize>>), ObstructingLoop> = BTreeMap::new();
    for v in 0..sf.num_vertices() {
        let pts: Vec<StarPoint> = star(sf, v).into_values().collect();
        star_points.push(pts.len());
        let mut pairs = 0;
        for (i, a) in pts.iter().enumerate() {
            for b in &pts[i + 1..] {
                if a.target != b.target {
                    continue;
                }
                pairs += 1;
                let fa: Vec<usize> = a.faces.iter().copied().collect();
                let fb: Vec<usize> = b.faces.iter().copied().collect();
                let mut key_cells = vec![fa.clone(), fb.clone()];
                key_cells.sort();
                let key = (v.min(a.target), v.max(a.target), key_cells);
                found.entry(key).or_insert_with(|| {
                    let mut h = s.homology.class_of(&a.arc);
                    for (x, y) in h.iter_mut().zip(s.homology.class_of(&b.arc)) {
                        *x -= y;
                    }
                    ObstructingLoop { v, w: a.target, cells: [fa, fb], arcs: [a.arc.clone(), b.arc.clone()], homology: h }
                });
            }
        }
        star_pairs.push(pairs);
    }
    Ok(LoopCensus {
        g: s.g,
        q: s.q,
        star_points,
        star_pairs,
        loops: found.into_values().collect(),
        bound: loop_bound(s.g),
        coarse_bound: 64 * s.g.pow(4),
    })
}

/// Independent count of obstructing loops from the face poset alone: a star
/// point is a vertex `w` together with the smallest cell through `v` and
/// `w`; pairs over the same `w` are counted from both ends and halved.
pub fn star_scan_count(s: &SurfaceComplex) -> Result<usize, CoverError> {
    let cx = s.complex();
    let mut total = 0;
    for v in 0..s.num_vertices() {
        let cells: Vec<usize> = cx.cells_containing(v)?.into_iter().filter(|&c| c != v).collect();
        let mut pts: BTreeSet<(usize, usize)> = BTreeSet::new();
        for &c in &cells {
            for w in cx.vertices_of(c).into_iter().filter(|&w| w != v) {
                let min = cells
                    .iter()
                    .copied()
                    .filter(|&d| cx.closure(c).binary_search(&d).is_ok() && cx.vertices_of(d).contains(&w))
                    .min_by_key(|&d| cx.cell(d).dim)
                    .expect("c itself qualifies");
                pts.insert((w, min));
            }
        }
        let mut per_target: BTreeMap<usize, usize> = BTreeMap::new();
        for (w, _) in pts {
            *per_target.entry(w).or_default() += 1;
        }
        total += per_target.values().map(|&m| m * (m - 1) / 2).sum::<usize>();
    }
    Ok(total / 2)
}

/// Nonzero with coprime coordinates.
pub fn is_indivisible(coords: &[i64]) -> bool {
    coords.iter().fold(0u64, |g, &x| num_integer::gcd(g, x.unsigned_abs())) == 1
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Lemma11Report {
    pub loops: usize,
    pub homology_rank: usize,
    pub all_nonzero: bool,
    pub all_indivisible: bool,
    pub max_support: usize,
    pub support_below_4g: bool,
    /// `min k (q - k)` over `0 < k < q`
    pub min_split: u64,
    pub split_at_least_4g: bool,
}

impl Lemma11Report {
    pub fn passed(&self) -> bool {
        self.all_nonzero && self.all_indivisible && self.support_below_4g && self.split_at_least_4g
    }
}

pub fn verify_lemma11(s: &CoverSurface, census: &LoopCensus) -> Lemma11Report {
    let four_g = 4 * s.g as usize;
    let max_support = census.loops.iter().map(|l| l.support()).max().unwrap_or(0);
    let min_split = (1..s.q).map(|k| k * (s.q - k)).min().unwrap_or(0);
    Lemma11Report {
        loops: census.count(),
        homology_rank: s.homology.rank(),
        all_nonzero: census.loops.iter().all(|l| l.homology.iter().any(|&x| x != 0)),
        all_indivisible: census.loops.iter().all(|l| is_indivisible(&l.homology)),
        max_support,
        support_below_4g: max_support < four_g,
        min_split,
        split_at_least_4g: min_split >= 4 * s.g,
    }
}

#[cfg(test)]
mod tests {
    use super::super::build_sg_prime;
    use super::*;

    #[test]
    fn torus_census() {
        let s = build_sg_prime(1).unwrap();
        let c = enumerate_obstructing_loops(&s).unwrap();
        assert!(c.star_points.iter().all(|&p| p == 4 * 2));
        assert!(c.star_pairs.iter().all(|&p| p == 4));
        assert_eq!(c.count(), star_scan_count(&s.surface).unwrap());
        assert!(c.count() <= 10);
        assert!(c.within_bounds());
        for l in &c.loops {
            assert!(s.homology.class_of(&l.walk()) == l.homology);
        }
    }

    #[test]
    fn star_counts_follow_the_formula() {
        for g in [2u64, 3] {
            let s = build_sg_prime(g).unwrap();
            let c = enumerate_obstructing_loops(&s).unwrap();
            let m = 4 * g as usize;
            assert!(c.star_points.iter().all(|&p| p == m * (m - 2)));
            assert!(c.star_pairs.iter().all(|&p| p == m * (m - 2) * (m - 3) / 2));
            assert!(c.within_bounds());
            assert_eq!(c.count(), star_scan_count(&s.surface).unwrap());
            assert!(verify_lemma11(&s, &c).passed());
        }
    }

    #[test]
    fn loop_classes_on_torus_and_split_bound() {
        let s = build_sg_prime(1).unwrap();
        let c = enumerate_obstructing_loops(&s).unwrap();
        let r = verify_lemma11(&s, &c);
        assert!(r.passed());
        let s3 = build_sg_prime(3).unwrap();
        let c3 = enumerate_obstructing_loops(&s3).unwrap();
        let r3 = verify_lemma11(&s3, &c3);
        assert_eq!(r3.min_split, 12);
        assert!(r3.passed());
    }

    #[test]
    fn null_homologous_loop_is_flagged() {
        let s = build_sg_prime(1).unwrap();
        let face = s.homology.class_of(s.surface.walk(0));
        assert!(!is_indivisible(&face));
        assert!(!is_indivisible(&[2, 4]));
        assert!(is_indivisible(&[2, 3]));
    }

    #[test]
    fn bounds() {
        assert_eq!(loop_bound(1), 10);
        for g in 1..10 {
            assert!(loop_bound(g) < 64 * g.pow(4));
        }
    }
}
