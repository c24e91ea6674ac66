//! One cross polytope with simplices stacked on an independent set of its
//! facets, classified up to the symmetries of the cross polytope.

use std::collections::BTreeSet;

use serde::Serialize;

use super::{cross_atom, simplex_atom, Compound, CompoundError};

/// A facet of the cross polytope as a 4-bit mask: bit `j` set when the facet
/// contains `-e_j` rather than `+e_j`.
pub type FacetMask = u8;

/// `e_j -> signs_j * e_{perm_j}`, with `negate` bit `j` meaning a minus sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SignedPermutation {
    pub perm: [u8; 4],
    pub negate: u8,
}

impl SignedPermutation {
    /// All 384 elements of the hyperoctahedral group.
    pub fn all() -> Vec<SignedPermutation> {
        let mut out = Vec::with_capacity(384);
        for p in permutations() {
            for negate in 0..16 {
                out.push(SignedPermutation { perm: p, negate });
            }
        }
        out
    }

    pub fn determinant(&self) -> i32 {
        let mut inversions = 0;
        for i in 0..4 {
            for j in i + 1..4 {
                if self.perm[i] > self.perm[j] {
                    inversions += 1;
                }
            }
        }
        let parity = if inversions % 2 == 0 { 1 } else { -1 };
        if self.negate.count_ones().is_multiple_of(2) {
            parity
        } else {
            -parity
        }
    }

    pub fn apply_facet(&self, m: FacetMask) -> FacetMask {
        let mut out = 0;
        for j in 0..4 {
            let bit = (m >> j & 1) ^ (self.negate >> j & 1);
            out |= bit << self.perm[j];
        }
        out
    }

    /// Image of a set of facets, as a 16-bit mask.
    pub fn apply_set(&self, s: u16) -> u16 {
        (0..16u8).filter(|&f| s >> f & 1 == 1).fold(0, |acc, f| acc | 1 << self.apply_facet(f))
    }
}

fn permutations() -> Vec<[u8; 4]> {
    let mut out = Vec::new();
    for a in 0..4u8 {
        for b in 0..4u8 {
            for c in 0..4u8 {
                for d in 0..4u8 {
                    if BTreeSet::from([a, b, c, d]).len() == 4 {
                        out.push([a, b, c, d]);
                    }
                }
            }
        }
    }
    out
}

/// Facets sharing a ridge differ in one sign, so their masks are adjacent
/// in the 4-cube graph.
fn adjacent(a: FacetMask, b: FacetMask) -> bool {
    (a ^ b).count_ones() == 1
}

/// All independent sets of the 4-cube graph, as 16-bit masks.
pub fn independent_sets() -> Vec<u16> {
    (0..=u16::MAX)
        .filter(|&s| {
            (0..16u8).all(|a| s >> a & 1 == 0 || (a + 1..16).all(|b| s >> b & 1 == 0 || !adjacent(a, b)))
        })
        .collect()
}

fn canonical(s: u16, group: &[SignedPermutation]) -> u16 {
    group.iter().map(|g| g.apply_set(s)).min().expect("nonempty group")
}

fn orbit_table(sets: &[u16], group: &[SignedPermutation]) -> (Vec<usize>, Vec<u16>) {
    let mut counts = vec![0; 9];
    let mut reps = BTreeSet::new();
    for &s in sets {
        reps.insert(canonical(s, group));
    }
    for &r in &reps {
        counts[r.count_ones() as usize] += 1;
    }
    (counts, reps.into_iter().collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrossSimplexTable {
    /// Orbits of independent sets of each size `k = 0..=8`.
    pub counts: Vec<usize>,
    pub total: usize,
    /// The same under orientation-preserving symmetries only.
    pub rotation_counts: Vec<usize>,
    pub rotation_total: usize,
    pub raw_counts: Vec<usize>,
    pub orbit_size_sums: Vec<usize>,
    /// Orbit count by averaging fixed sets over the group.
    pub burnside_total: usize,
    pub representatives: Vec<Vec<FacetMask>>,
}

pub fn enumerate_cross_simplex_compounds() -> CrossSimplexTable {
    let group = SignedPermutation::all();
    let rotations: Vec<SignedPermutation> = group.iter().copied().filter(|g| g.determinant() == 1).collect();
    let sets = independent_sets();
    let (counts, reps) = orbit_table(&sets, &group);
    let (rotation_counts, _) = orbit_table(&sets, &rotations);
    let mut raw_counts = vec![0; 9];
    for &s in &sets {
        raw_counts[s.count_ones() as usize] += 1;
    }
    let mut orbit_size_sums = vec![0; 9];
    for &r in &reps {
        let orbit: BTreeSet<u16> = group.iter().map(|g| g.apply_set(r)).collect();
        orbit_size_sums[r.count_ones() as usize] += orbit.len();
    }
    let fixed: usize = group.iter().map(|g| sets.iter().filter(|&&s| g.apply_set(s) == s).count()).sum();
    assert_eq!(fixed % group.len(), 0);
    CrossSimplexTable {
        total: counts.iter().sum(),
        rotation_total: rotation_counts.iter().sum(),
        counts,
        rotation_counts,
        raw_counts,
        orbit_size_sums,
        burnside_total: fixed / group.len(),
        representatives: reps.iter().map(|&r| (0..16u8).filter(|&f| r >> f & 1 == 1).collect()).collect(),
    }
}

/// Vertex labels of a facet: `2j` for `+e_j`, `2j + 1` for `-e_j`.
pub fn facet_labels(m: FacetMask) -> Vec<usize> {
    (0..4).map(|j| 2 * j + (m as usize >> j & 1)).collect()
}

/// The cross polytope (labels `0..8`) with a simplex on each listed facet.
pub fn cross_with_simplices(facets: &[FacetMask]) -> Result<Compound, CompoundError> {
    let mut atoms = vec![(cross_atom()?, (0..8).collect())];
    let simplex = simplex_atom()?;
    for (i, &m) in facets.iter().enumerate() {
        let mut l = facet_labels(m);
        l.push(8 + i);
        atoms.push((simplex.clone(), l));
    }
    Compound::from_labelled(atoms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::compounds::RidgeVerdict;

    #[test]
    fn group_order_and_rotations() {
        let g = SignedPermutation::all();
        assert_eq!(g.len(), 384);
        assert_eq!(g.iter().filter(|x| x.determinant() == 1).count(), 192);
        let distinct: BTreeSet<Vec<u8>> = g.iter().map(|x| (0..16).map(|f| x.apply_facet(f)).collect()).collect();
        assert_eq!(distinct.len(), 384);
    }

    #[test]
    fn symmetries_preserve_adjacency() {
        for g in SignedPermutation::all() {
            for a in 0..16 {
                for b in 0..16 {
                    assert_eq!(adjacent(a, b), adjacent(g.apply_facet(a), g.apply_facet(b)));
                }
            }
        }
    }

    #[test]
    fn table() {
        let t = enumerate_cross_simplex_compounds();
        assert_eq!(t.counts, vec![1, 1, 3, 3, 6, 3, 2, 1, 1]);
        assert_eq!(t.total, 21);
        assert_eq!(t.burnside_total, 21);
        assert_eq!(t.orbit_size_sums, t.raw_counts);
        assert!(t.rotation_total >= t.total);
    }

    #[test]
    fn independent_stacks_are_convex() {
        let t = enumerate_cross_simplex_compounds();
        for rep in &t.representatives {
            let c = cross_with_simplices(rep).unwrap();
            let r = c.check_convex().unwrap();
            assert!(r.convex, "{rep:?}");
            assert!(c.boundary_is_closed().unwrap());
        }
    }

    #[test]
    fn adjacent_stacks_are_reflex() {
        let c = cross_with_simplices(&[0b0000, 0b0001]).unwrap();
        let r = c.check_convex().unwrap();
        assert!(!r.convex);
        assert_eq!(r.count(RidgeVerdict::Reflex), 1);
    }
}
