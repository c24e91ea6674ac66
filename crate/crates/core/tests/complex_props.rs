use fatlab_core::complex::{product_f_vector, CellComplex};
use fatlab_core::covers::{build_cover, build_sg, build_sg_prime, random_cocycle, HomologyBasis};
use fatlab_core::zoo;
use proptest::prelude::*;

fn zoo_complexes() -> Vec<(&'static str, CellComplex)> {
    vec![
        ("simplex", zoo::build_simplex4().unwrap().lattice.complex().clone()),
        ("cross", zoo::build_cross4().unwrap().lattice.complex().clone()),
        ("cube", zoo::build_cube4().unwrap().lattice.complex().clone()),
        ("600-cell", zoo::build_600cell().unwrap().lattice.complex().clone()),
        ("snub", zoo::build_snub24().unwrap().lattice.complex().clone()),
    ]
}

#[test]
fn dual_reverses_f_vector() {
    for (name, c) in zoo_complexes() {
        let d = c.dual();
        assert_eq!(d.f_vector(), c.f_vector().reversed(), "{name}");
        assert_eq!(d.dual().f_vector(), c.f_vector(), "{name}");
    }
}

#[test]
fn flag_03_counts_facet_vertices() {
    for (name, c) in zoo_complexes() {
        let direct: usize = c.cells_of_dim(3).iter().map(|&f| c.vertices_of(f).len()).sum();
        assert_eq!(c.flag_vector(&[0, 3]).unwrap(), direct as u128, "{name}");
    }
}

#[test]
fn polytope_boundaries_are_strongly_regular() {
    for (name, c) in zoo_complexes() {
        assert!(c.is_strongly_regular().unwrap(), "{name}");
    }
}

#[test]
fn closed_surfaces_satisfy_euler() {
    for g in 1..=5 {
        let s = build_sg(g).unwrap();
        assert_eq!(s.f_vector().euler_characteristic(), 2 - 2 * g as i128);
    }
    for g in [1, 2, 3, 4] {
        let s = build_sg_prime(g).unwrap();
        let genus = s.surface.genus().unwrap();
        assert_eq!(genus, s.cover_genus());
        assert_eq!(s.surface.f_vector().euler_characteristic(), 2 - 2 * genus as i128);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn strongly_regular_implies_regular(g in 1u64..=2, n in 2u64..12, seed in any::<u64>()) {
        let s = build_sg_prime(g).unwrap();
        let basis = HomologyBasis::new(&s.surface).unwrap();
        let c = random_cocycle(&basis, n, seed).unwrap();
        let cover = build_cover(&s.surface, &c).unwrap();
        let genus = cover.genus().unwrap();
        prop_assert_eq!(cover.f_vector().euler_characteristic(), 2 - 2 * genus as i128);
        if cover.is_strongly_regular().unwrap() {
            prop_assert!(cover.is_regular());
        }
        if c.is_surjective() {
            let f = cover.f_vector();
            let base = s.surface.f_vector();
            for i in 0..3 {
                prop_assert_eq!(f.get(i), n as u128 * base.get(i));
            }
        }
    }

    #[test]
    fn product_with_path_matches_formula(g in 1u64..=2, len in 1usize..=3) {
        let s = build_sg_prime(g).unwrap().surface;
        let p = s.product_with_path(len).unwrap();
        let f = p.f_vector();
        prop_assert_eq!(&f, &product_f_vector(&s.f_vector(), len as u128).unwrap());
        prop_assert_eq!(f.euler_characteristic(), s.f_vector().euler_characteristic());
    }
}
