use fatlab_core::arith::OrderedField;
use fatlab_core::zoo::{self, check_edge_tangent, hyperbolic_dihedral_cos2, Polytope};
use proptest::prelude::*;

fn transformed<F: OrderedField>(p: &Polytope<F>, perm: &[usize], signs: u8) -> Polytope<F> {
    let mut q = p.clone();
    let flip = |v: &Vec<F>| -> Vec<F> {
        perm.iter()
            .enumerate()
            .map(|(i, &j)| if signs >> i & 1 == 1 { F::zero() - v[j].clone() } else { v[j].clone() })
            .collect()
    };
    q.model.vertices = p.model.vertices.iter().map(flip).collect();
    q.model.center = flip(&p.model.center);
    q
}

fn perm4(k: usize) -> Vec<usize> {
    let mut items = vec![0, 1, 2, 3];
    let mut out = Vec::new();
    let mut k = k;
    for n in (1..=4).rev() {
        out.push(items.remove(k % n));
        k /= n;
    }
    out
}

#[test]
fn snub_direct_build_agrees() {
    let a = zoo::build_snub24().unwrap();
    let b = zoo::build_snub24_direct().unwrap();
    assert_eq!(a.lattice.complex().f_vector(), b.lattice.complex().f_vector());
    let f600 = zoo::build_600cell().unwrap().lattice.complex().f_vector();
    let f = a.lattice.complex().f_vector();
    assert_eq!(f.get(1), f600.get(1) - 24 * 12);
    assert_eq!(f.get(2), f600.get(2) - 24 * 30);
    assert_eq!(f.get(3), f600.get(3) - 24 * 20 + 24);
}

#[test]
fn every_lattice_is_a_pseudomanifold() {
    let cx = [
        zoo::build_simplex4().unwrap().lattice.complex().clone(),
        zoo::build_cross4().unwrap().lattice.complex().clone(),
        zoo::build_cube4().unwrap().lattice.complex().clone(),
        zoo::build_600cell().unwrap().lattice.complex().clone(),
        zoo::cut_600cell(&[0, 7]).unwrap().lattice.complex().clone(),
    ];
    for c in cx {
        assert_eq!(c.f_vector().euler_characteristic(), 0);
        for &r in c.cells_of_dim(2) {
            assert_eq!(c.cells_of_dim(3).iter().filter(|&&f| c.cell(f).boundary.contains(&r)).count(), 2);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn tangency_ignores_coordinate_symmetries(k in 0usize..24, signs in 0u8..16) {
        let perm = perm4(k);
        for p in [zoo::build_cross4().unwrap(), zoo::build_cube4().unwrap()] {
            let t = check_edge_tangent(&p).unwrap();
            let u = check_edge_tangent(&transformed(&p, &perm, signs)).unwrap();
            prop_assert_eq!(t, u);
        }
        let p = zoo::build_600cell().unwrap();
        let q = transformed(&p, &perm, signs);
        let t = check_edge_tangent(&q).unwrap();
        prop_assert!(t.tangent);
        let r = q.lattice.ridges()[k * 37 % q.lattice.ridges().len()];
        prop_assert_eq!(
            hyperbolic_dihedral_cos2(&q.lattice, r, &t.r2).unwrap(),
            hyperbolic_dihedral_cos2(&p.lattice, r, &t.r2).unwrap()
        );
    }
}
