//! Chains of cross polytopes and of cut 600-cells, and the ring of ten
//! doubly-cut 600-cells around a triangle.

use serde::Serialize;

use super::{cross_atom, cut600_atom, simplex_atom, Compound, CompoundError, RidgeVerdict};
use crate::arith::AnglePi;
use crate::zoo;

/// `n` cross polytopes glued end to end, facet `+` of one on facet `-` of
/// the next. Returns the bare chain and the chain with every flush ridge
/// caulked by three simplices.
pub fn build_cross_chain(n: usize) -> Result<(Compound, Compound), CompoundError> {
    if n == 0 {
        return Err(CompoundError::Empty);
    }
    let cross = cross_atom()?;
    let simplex = simplex_atom()?;
    // layer t holds 4 vertices; atom i spans layers i (its -e_j) and i+1 (its +e_j)
    let atoms: Vec<_> = (0..n)
        .map(|i| {
            let labels = (0..8).map(|v| if v % 2 == 0 { 4 * (i + 1) + v / 2 } else { 4 * i + v / 2 }).collect();
            (cross.clone(), labels)
        })
        .collect();
    let bare = Compound::from_labelled(atoms.clone())?;
    let mut caulked = atoms;
    let mut fresh = 4 * (n + 1);
    for i in 0..n - 1 {
        for m in 0..4 {
            let ridge: Vec<usize> = (0..4).filter(|&j| j != m).map(|j| 4 * (i + 1) + j).collect();
            let a = 4 * i + m;
            let b = 4 * (i + 2) + m;
            let (s, t) = (fresh, fresh + 1);
            fresh += 2;
            for pair in [[a, s], [s, t], [t, b]] {
                let mut l = ridge.clone();
                l.extend(pair);
                caulked.push((simplex.clone(), l));
            }
        }
    }
    Ok((bare, Compound::from_labelled(caulked)?))
}

fn neighbours(w: usize) -> Result<Vec<usize>, CompoundError> {
    let p = zoo::build_600cell()?;
    let cx = p.lattice.complex();
    let mut out = Vec::new();
    for &e in cx.cells_of_dim(1) {
        let vs = cx.vertices_of(e);
        if vs.contains(&w) {
            out.extend(vs.into_iter().filter(|&v| v != w));
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// `n` 600-cells cut at antipodal vertices 0 and 1 and glued along their
/// icosahedra; the ends are cut once and `n = 1` is the whole 600-cell.
pub fn build_cut600_chain(n: usize) -> Result<Compound, CompoundError> {
    if n == 0 {
        return Err(CompoundError::Empty);
    }
    if n == 1 {
        return Compound::from_labelled(vec![(cut600_atom(&[])?, (0..120).collect())]);
    }
    let cuts = |j: usize| -> Vec<usize> {
        match j {
            0 => vec![0],
            j if j == n - 1 => vec![(n - 2) % 2],
            _ => vec![0, 1],
        }
    };
    let mut next_label = 0;
    let mut previous: Vec<usize> = Vec::new();
    let mut atoms = Vec::new();
    for j in 0..n {
        let cut = cuts(j);
        let shared = if j == 0 { Vec::new() } else { neighbours((j - 1) % 2)? };
        // base vertex -> global label
        let mut global = vec![usize::MAX; 120];
        for &v in &shared {
            global[v] = previous[v];
        }
        for (v, g) in global.iter_mut().enumerate() {
            if *g == usize::MAX && !cut.contains(&v) {
                *g = next_label;
                next_label += 1;
            }
        }
        let labels: Vec<usize> = (0..120).filter(|v| !cut.contains(v)).map(|v| global[v]).collect();
        atoms.push((cut600_atom(&cut)?, labels));
        previous = global;
    }
    Compound::from_labelled(atoms)
}

/// Angle between the two icosahedral facets of a 600-cell cut at two
/// vertices at inner product 1/2, whose icosahedra share a triangle.
pub fn doubly_cut_ridge_angle() -> Result<AnglePi, CompoundError> {
    let p = zoo::cut_600cell(&[0, 8])?;
    let angles = zoo::ridge_angles(&p)?;
    let icos: Vec<usize> = p.lattice.facets().iter().copied().filter(|&f| p.lattice.facet_size(f) == 12).collect();
    for &r in p.lattice.ridges() {
        let (a, b) = p.lattice.ridge_facets(r)?;
        if icos.contains(&a) && icos.contains(&b) {
            return Ok(angles[&r].clone());
        }
    }
    Err(CompoundError::NoSharedRidge)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RingCheck {
    pub ridge_angle: AnglePi,
    pub link_triangle: Vec<AnglePi>,
    pub ten: AnglePi,
    pub ten_closes: bool,
    pub nine: AnglePi,
    pub nine_verdict: RidgeVerdict,
}

impl RingCheck {
    pub fn passed(&self) -> bool {
        self.ten_closes && self.nine_verdict == RidgeVerdict::InteriorDeficient && self.link_triangle[0] == self.ridge_angle
    }
}

/// Ten doubly-cut 600-cells around a shared triangle: the ridge angles sum
/// to a full turn, and the decagon link is fanned by isosceles triangles
/// with apex angle equal to the ridge angle.
pub fn ring_of_ten_check() -> Result<RingCheck, CompoundError> {
    let ridge_angle = doubly_cut_ridge_angle()?;
    let link_triangle = AnglePi::inscribed_polygon_angles(5, &[0, 2, 3]);
    let ten = ridge_angle.clone() * 10;
    let nine = ridge_angle.clone() * 9;
    let nine_verdict = if nine == AnglePi::full_turn() { RidgeVerdict::InteriorOk } else { RidgeVerdict::InteriorDeficient };
    Ok(RingCheck { ten_closes: ten == AnglePi::full_turn(), ridge_angle, link_triangle, ten, nine, nine_verdict })
}
