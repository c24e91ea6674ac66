use std::collections::HashMap;

use fatlab_core::compounds::{
    classify_simplex_compounds, cross_with_simplices, enumerate_cross_simplex_compounds, independent_sets, partial_valid,
    simplex_atom, Compound, SignedPermutation,
};
use fatlab_core::fvec::cross_chain_filled;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn canonical(set: u16, group: &[SignedPermutation]) -> u16 {
    group.iter().map(|g| g.apply_set(set)).min().unwrap()
}

fn mask_set(rep: &[u8]) -> u16 {
    rep.iter().fold(0, |s, &m| s | 1 << m)
}

fn relabel(atoms: &[Vec<usize>], seed: u64) -> Vec<Vec<usize>> {
    let n = atoms.iter().flatten().max().unwrap() + 1;
    let mut perm: Vec<usize> = (0..n).map(|i| i + 100).collect();
    perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    atoms.iter().map(|a| a.iter().map(|&v| perm[v]).collect()).collect()
}

#[test]
fn representatives_cover_every_orbit_once() {
    let group = SignedPermutation::all();
    let t = enumerate_cross_simplex_compounds();
    let reps: Vec<u16> = t.representatives.iter().map(|r| canonical(mask_set(r), &group)).collect();
    let mut seen = HashMap::new();
    for &r in &reps {
        *seen.entry(r).or_insert(0) += 1;
    }
    assert!(seen.values().all(|&c| c == 1));
    for s in independent_sets() {
        assert!(seen.contains_key(&canonical(s, &group)), "set {s:#x} has no representative");
    }
}

#[test]
fn convex_compounds_are_closed_spheres() {
    let t = enumerate_cross_simplex_compounds();
    for rep in &t.representatives {
        let c = cross_with_simplices(rep).unwrap();
        let conv = c.check_convex().unwrap();
        assert!(conv.convex);
        assert!(c.boundary_is_closed().unwrap());
        assert_eq!(c.f_vector().unwrap().euler_characteristic(), 0);
    }
}

#[test]
fn chains_match_formula() {
    for n in 1..=5 {
        let (_, filled) = fatlab_core::compounds::build_cross_chain(n).unwrap();
        assert_eq!(filled.f_vector().unwrap(), cross_chain_filled().eval(n as u64).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn cross_orbits_ignore_symmetries(i in 0usize..1000, g in 0usize..384) {
        let group = SignedPermutation::all();
        let sets = independent_sets();
        let s = sets[i % sets.len()];
        let moved = group[g].apply_set(s);
        prop_assert!(sets.contains(&moved));
        prop_assert_eq!(canonical(s, &group), canonical(moved, &group));
        let facets = |set: u16| (0..16u8).filter(|&m| set >> m & 1 == 1).collect::<Vec<_>>();
        let a = cross_with_simplices(&facets(s)).unwrap().f_vector().unwrap();
        let b = cross_with_simplices(&facets(moved)).unwrap().f_vector().unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn simplex_compounds_ignore_labels(seed in any::<u64>()) {
        let atom = simplex_atom().unwrap();
        for c in classify_simplex_compounds().unwrap().compounds {
            let atoms = relabel(&c.atoms, seed);
            prop_assert!(partial_valid(&atoms));
            let built = Compound::from_labelled(atoms.into_iter().map(|a| (atom.clone(), a)).collect()).unwrap();
            prop_assert_eq!(built.f_vector().unwrap(), c.fvector.clone());
            prop_assert_eq!(built.check_convex().unwrap().convex, c.convex);
        }
    }
}
