//! Compounds: atoms glued facet to facet, with convexity decided by exact
//! sums of hyperbolic dihedral angles at ridges.

mod chains;
mod cross;
mod jewels;
mod simplices;

pub use chains::{build_cross_chain, build_cut600_chain, doubly_cut_ridge_angle, ring_of_ten_check, RingCheck};
pub use cross::{
    cross_with_simplices, enumerate_cross_simplex_compounds, facet_labels, independent_sets, CrossSimplexTable,
    FacetMask, SignedPermutation,
};
pub use jewels::{enumerate_jewels, Jewel, JewelCatalog, TileSet};
pub use simplices::{classify_simplex_compounds, partial_valid, SimplexCompound, SimplexSearch};

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use serde::Serialize;
use thiserror::Error;

use crate::arith::{AnglePi, OrderedField};
use crate::complex::{CellComplex, ComplexError, FVector};
use crate::zoo::{self, IntoQ5, Polytope, ZooError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CompoundError {
    #[error("a compound needs at least one atom")]
    Empty,
    #[error("atom {atom} has {got} labels for {expected} vertices")]
    LabelCount { atom: usize, got: usize, expected: usize },
    #[error("atom {0} repeats a vertex label")]
    RepeatedLabel(usize),
    #[error("facet {0:?} is shared by more than two atoms")]
    FacetOverused(Vec<usize>),
    #[error("facets glued along {0:?} are not combinatorially isomorphic")]
    NotIsomorphic(Vec<usize>),
    #[error("inconsistent fan at ridge {0:?}")]
    InconsistentFan(Vec<usize>),
    #[error("the two icosahedral facets do not share a ridge")]
    NoSharedRidge,
    #[error(transparent)]
    Zoo(#[from] ZooError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

/// An atom up to relabelling: its boundary lattice and the dihedral angle
/// at every ridge.
#[derive(Clone, Debug)]
pub struct AtomType {
    pub name: String,
    pub complex: CellComplex,
    angles: Vec<Option<AnglePi>>,
}

impl AtomType {
    pub fn from_polytope<F: OrderedField + IntoQ5>(name: &str, p: &Polytope<F>) -> Result<Self, CompoundError> {
        let cx = p.lattice.complex().clone();
        let mut angles = vec![None; cx.len()];
        for (r, a) in zoo::ridge_angles(p)? {
            angles[r] = Some(a);
        }
        Ok(AtomType { name: name.to_string(), complex: cx, angles })
    }

    pub fn ridge_angle(&self, ridge: usize) -> Option<&AnglePi> {
        self.angles.get(ridge).and_then(|a| a.as_ref())
    }

    pub fn num_vertices(&self) -> usize {
        self.complex.cells_of_dim(0).len()
    }

    pub fn dim(&self) -> usize {
        self.complex.dim() + 1
    }
}

pub fn simplex_atom() -> Result<Arc<AtomType>, CompoundError> {
    static A: OnceLock<Result<Arc<AtomType>, CompoundError>> = OnceLock::new();
    A.get_or_init(|| Ok(Arc::new(AtomType::from_polytope("simplex", &zoo::build_simplex4()?)?))).clone()
}

pub fn cross_atom() -> Result<Arc<AtomType>, CompoundError> {
    static A: OnceLock<Result<Arc<AtomType>, CompoundError>> = OnceLock::new();
    A.get_or_init(|| Ok(Arc::new(AtomType::from_polytope("cross polytope", &zoo::build_cross4()?)?))).clone()
}

/// A 600-cell cut at the given (base-numbered) vertices. Vertex `i` of the
/// atom is the `i`-th surviving vertex.
pub fn cut600_atom(cuts: &[usize]) -> Result<Arc<AtomType>, CompoundError> {
    static CACHE: OnceLock<Mutex<HashMap<Vec<usize>, Arc<AtomType>>>> = OnceLock::new();
    let mut key = cuts.to_vec();
    key.sort_unstable();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(a) = cache.lock().expect("atom cache").get(&key) {
        return Ok(a.clone());
    }
    let name = match key.len() {
        0 => "600-cell".to_string(),
        k => format!("600-cell cut at {k}"),
    };
    let atom = Arc::new(AtomType::from_polytope(&name, &zoo::cut_600cell(&key)?)?);
    cache.lock().expect("atom cache").insert(key, atom.clone());
    Ok(atom)
}

/// One facet-to-facet gluing, as pairs of local vertex ids.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Gluing {
    pub atom_a: usize,
    pub facet_a: usize,
    pub atom_b: usize,
    pub facet_b: usize,
    pub pairs: Vec<(usize, usize)>,
}

/// Atoms whose vertices carry global labels; facets with equal label sets
/// are glued.
#[derive(Clone, Debug)]
pub struct Compound {
    atoms: Vec<Arc<AtomType>>,
    labels: Vec<Vec<usize>>,
    gluings: Vec<Gluing>,
    free_facets: Vec<(usize, usize)>,
}

/// Ridge vertex labels to the summed angle and the atoms holding the ridge.
type RidgeTable = BTreeMap<Vec<usize>, (AnglePi, Vec<usize>)>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum RidgeVerdict {
    StrictlyConvex,
    Flat,
    Reflex,
    InteriorOk,
    InteriorDeficient,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RidgeReport {
    pub vertices: Vec<usize>,
    pub atoms: Vec<usize>,
    pub angle: AnglePi,
    pub verdict: RidgeVerdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConvexityReport {
    pub ridges: Vec<RidgeReport>,
    pub convex: bool,
}

impl ConvexityReport {
    pub fn count(&self, v: RidgeVerdict) -> usize {
        self.ridges.iter().filter(|r| r.verdict == v).count()
    }

    pub fn with_verdict(&self, v: RidgeVerdict) -> impl Iterator<Item = &RidgeReport> {
        self.ridges.iter().filter(move |r| r.verdict == v)
    }
}

/// The link of an edge: for each ridge through the edge, the corner angle
/// it contributes and whether it is on the boundary.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeLink {
    pub edge: Vec<usize>,
    pub atoms: Vec<usize>,
    pub corners: Vec<(Vec<usize>, AnglePi, bool)>,
}

impl EdgeLink {
    /// Boundary corners below pi and interior corners at exactly 2 pi.
    pub fn is_convex_polygon(&self) -> bool {
        self.corners.iter().all(|(_, a, boundary)| if *boundary { *a < AnglePi::pi() } else { *a == AnglePi::full_turn() })
    }
}

impl Compound {
    pub fn from_labelled(atoms: Vec<(Arc<AtomType>, Vec<usize>)>) -> Result<Self, CompoundError> {
        if atoms.is_empty() {
            return Err(CompoundError::Empty);
        }
        for (i, (t, l)) in atoms.iter().enumerate() {
            if l.len() != t.num_vertices() {
                return Err(CompoundError::LabelCount { atom: i, got: l.len(), expected: t.num_vertices() });
            }
            if l.iter().collect::<BTreeSet<_>>().len() != l.len() {
                return Err(CompoundError::RepeatedLabel(i));
            }
        }
        let (types, labels): (Vec<_>, Vec<_>) = atoms.into_iter().unzip();
        let mut by_key: BTreeMap<Vec<usize>, Vec<(usize, usize)>> = BTreeMap::new();
        for (i, t) in types.iter().enumerate() {
            for &f in t.complex.cells_of_dim(t.complex.dim()) {
                by_key.entry(label_set(&t.complex, &labels[i], f)).or_default().push((i, f));
            }
        }
        let mut gluings = Vec::new();
        let mut free_facets = Vec::new();
        for (key, occ) in by_key {
            match occ.as_slice() {
                [one] => free_facets.push(*one),
                [(a, fa), (b, fb)] => {
                    let faces = |atom: usize, f: usize| -> BTreeSet<Vec<usize>> {
                        types[atom].complex.closure(f).iter().map(|&c| label_set(&types[atom].complex, &labels[atom], c)).collect()
                    };
                    if faces(*a, *fa) != faces(*b, *fb) {
                        return Err(CompoundError::NotIsomorphic(key));
                    }
                    let local = |atom: usize, lab: usize| labels[atom].iter().position(|&x| x == lab).expect("label in atom");
                    let pairs = key.iter().map(|&lab| (local(*a, lab), local(*b, lab))).collect();
                    gluings.push(Gluing { atom_a: *a, facet_a: *fa, atom_b: *b, facet_b: *fb, pairs });
                }
                _ => return Err(CompoundError::FacetOverused(key)),
            }
        }
        Ok(Compound { atoms: types, labels, gluings, free_facets })
    }

    pub fn num_atoms(&self) -> usize {
        self.atoms.len()
    }

    pub fn atom(&self, i: usize) -> &AtomType {
        &self.atoms[i]
    }

    pub fn labels(&self, i: usize) -> &[usize] {
        &self.labels[i]
    }

    pub fn gluings(&self) -> &[Gluing] {
        &self.gluings
    }

    /// Sorted global labels of a cell of an atom.
    pub fn cell_labels(&self, atom: usize, cell: usize) -> Vec<usize> {
        label_set(&self.atoms[atom].complex, &self.labels[atom], cell)
    }

    /// Faces of the unglued facets, identified by their label sets.
    pub fn boundary_complex(&self) -> Result<CellComplex, CompoundError> {
        let mut faces = BTreeSet::new();
        for &(a, f) in &self.free_facets {
            let cx = &self.atoms[a].complex;
            for &c in cx.closure(f) {
                faces.insert((cx.cell(c).dim, self.cell_labels(a, c)));
            }
        }
        Ok(CellComplex::from_face_sets(faces.into_iter().collect())?)
    }

    pub fn f_vector(&self) -> Result<FVector, CompoundError> {
        Ok(self.boundary_complex()?.f_vector())
    }

    fn boundary_ridges(&self) -> BTreeSet<Vec<usize>> {
        let mut out = BTreeSet::new();
        for &(a, f) in &self.free_facets {
            let cx = &self.atoms[a].complex;
            for &r in &cx.cell(f).boundary {
                out.insert(self.cell_labels(a, r));
            }
        }
        out
    }

    fn ridge_table(&self) -> Result<RidgeTable, CompoundError> {
        let mut sums = RidgeTable::new();
        for (i, t) in self.atoms.iter().enumerate() {
            for &r in t.complex.cells_of_dim(t.complex.dim() - 1) {
                let key = self.cell_labels(i, r);
                let a = t.ridge_angle(r).ok_or_else(|| CompoundError::InconsistentFan(key.clone()))?.clone();
                let e = sums.entry(key).or_insert_with(|| (AnglePi::zero(), Vec::new()));
                e.0 = e.0.clone() + a;
                e.1.push(i);
            }
        }
        Ok(sums)
    }

    /// Classify every ridge by its total dihedral angle. The compound is
    /// convex when every boundary ridge is below pi and every interior ridge
    /// closes up at exactly 2 pi.
    pub fn check_convex(&self) -> Result<ConvexityReport, CompoundError> {
        let boundary = self.boundary_ridges();
        let pi = AnglePi::pi();
        let mut ridges = Vec::new();
        for (key, (angle, atoms)) in self.ridge_table()? {
            let verdict = if boundary.contains(&key) {
                match angle.cmp(&pi) {
                    std::cmp::Ordering::Less => RidgeVerdict::StrictlyConvex,
                    std::cmp::Ordering::Equal => RidgeVerdict::Flat,
                    std::cmp::Ordering::Greater => RidgeVerdict::Reflex,
                }
            } else if angle == AnglePi::full_turn() {
                RidgeVerdict::InteriorOk
            } else {
                RidgeVerdict::InteriorDeficient
            };
            ridges.push(RidgeReport { vertices: key, atoms, angle, verdict });
        }
        let convex = ridges.iter().all(|r| matches!(r.verdict, RidgeVerdict::StrictlyConvex | RidgeVerdict::InteriorOk));
        Ok(ConvexityReport { ridges, convex })
    }

    /// Links of all edges, with corner angles from the ridge sums.
    pub fn edge_links(&self) -> Result<Vec<EdgeLink>, CompoundError> {
        let table = self.ridge_table()?;
        let boundary = self.boundary_ridges();
        let mut edges: BTreeMap<Vec<usize>, BTreeSet<usize>> = BTreeMap::new();
        for (i, t) in self.atoms.iter().enumerate() {
            for &e in t.complex.cells_of_dim(1) {
                edges.entry(self.cell_labels(i, e)).or_default().insert(i);
            }
        }
        let mut out = Vec::new();
        for (edge, atoms) in edges {
            let corners = table
                .iter()
                .filter(|(r, _)| edge.iter().all(|v| r.binary_search(v).is_ok()))
                .map(|(r, (a, _))| (r.clone(), a.clone(), boundary.contains(r)))
                .collect();
            out.push(EdgeLink { edge, atoms: atoms.into_iter().collect(), corners });
        }
        Ok(out)
    }

    /// Euler relation and every ridge in two facets on the boundary.
    pub fn boundary_is_closed(&self) -> Result<bool, CompoundError> {
        let b = self.boundary_complex()?;
        Ok(b.f_vector().euler_check(None) && b.dual_graph().is_ok())
    }
}

fn label_set(cx: &CellComplex, labels: &[usize], cell: usize) -> Vec<usize> {
    let mut v: Vec<usize> = cx.vertices_of(cell).into_iter().map(|x| labels[x]).collect();
    v.sort_unstable();
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn simplex(labels: &[usize]) -> (Arc<AtomType>, Vec<usize>) {
        (simplex_atom().unwrap(), labels.to_vec())
    }

    #[test]
    fn bipyramid_is_convex() {
        let c = Compound::from_labelled(vec![simplex(&[0, 1, 2, 3, 4]), simplex(&[1, 2, 3, 4, 5])]).unwrap();
        let rep = c.check_convex().unwrap();
        assert!(rep.convex);
        for r in rep.with_verdict(RidgeVerdict::StrictlyConvex) {
            assert!(r.angle == AnglePi::frac(1, 3) || r.angle == AnglePi::frac(2, 3));
        }
        assert_eq!(c.f_vector().unwrap(), FVector::from([6, 14, 16, 8]));
        assert!(c.boundary_is_closed().unwrap());
        assert_eq!(c.gluings().len(), 1);
    }

    #[test]
    fn two_cross_polytopes_have_four_flat_ridges() {
        let a: Vec<usize> = (0..8).collect();
        // facet (+,+,+,+) of the first is {0,2,4,6}; (-,-,-,-) of the second is {1,3,5,7}
        let b = vec![8, 0, 9, 2, 10, 4, 11, 6];
        let c = Compound::from_labelled(vec![(cross_atom().unwrap(), a), (cross_atom().unwrap(), b)]).unwrap();
        let rep = c.check_convex().unwrap();
        assert_eq!(rep.count(RidgeVerdict::Flat), 4);
        assert!(!rep.convex);
    }

    #[test]
    fn adjacent_caps_make_a_reflex_ridge() {
        // facets (+,+,+,+) = {0,2,4,6} and (-,+,+,+) = {1,2,4,6} share ridge {2,4,6}
        let c = Compound::from_labelled(vec![
            (cross_atom().unwrap(), (0..8).collect()),
            simplex(&[0, 2, 4, 6, 8]),
            simplex(&[1, 2, 4, 6, 9]),
        ])
        .unwrap();
        let rep = c.check_convex().unwrap();
        let reflex: Vec<_> = rep.with_verdict(RidgeVerdict::Reflex).collect();
        assert_eq!(reflex.len(), 1);
        assert_eq!(reflex[0].angle, AnglePi::frac(7, 6));
        assert_eq!(reflex[0].vertices, vec![2, 4, 6]);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(Compound::from_labelled(vec![]), Err(CompoundError::Empty)));
        assert!(matches!(Compound::from_labelled(vec![simplex(&[0, 1, 2, 3])]), Err(CompoundError::LabelCount { .. })));
        assert!(matches!(Compound::from_labelled(vec![simplex(&[0, 1, 2, 3, 3])]), Err(CompoundError::RepeatedLabel(0))));
        let r = Compound::from_labelled(vec![simplex(&[0, 1, 2, 3, 4]), simplex(&[0, 1, 2, 3, 5]), simplex(&[0, 1, 2, 3, 6])]);
        assert!(matches!(r, Err(CompoundError::FacetOverused(_))));
    }

    #[test]
    fn edge_links_of_bipyramid() {
        let c = Compound::from_labelled(vec![simplex(&[0, 1, 2, 3, 4]), simplex(&[1, 2, 3, 4, 5])]).unwrap();
        let links = c.edge_links().unwrap();
        assert_eq!(links.len(), 14);
        assert!(links.iter().all(|l| l.is_convex_polygon()));
        let shared = links.iter().find(|l| l.edge == vec![1, 2]).unwrap();
        assert_eq!(shared.atoms.len(), 2);
        assert_eq!(shared.corners.len(), 4);
    }
}
