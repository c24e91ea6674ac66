//! Exact-coordinate atom polytopes and the data needed to glue them: face
//! lattices with supporting hyperplanes, edge tangency and hyperbolic
//! dihedral angles.

mod atoms;

pub use atoms::{
    binary_tetrahedral_indices, build_600cell, build_cross4, build_cube4, build_simplex4, build_snub24,
    build_snub24_direct, cap_complex, cut_600cell, Q5,
};

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet};

use thiserror::Error;

use crate::arith::{AnglePi, OrderedField, QuadNum, Rational};
use crate::complex::{CellComplex, ComplexError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ZooError {
    #[error("facet {0} is not cut out by its hyperplane")]
    NotSupporting(usize),
    #[error("at most 128 vertices are supported, got {0}")]
    TooManyVertices(usize),
    #[error("face lattice is not that of a 4-polytope: {0}")]
    BadLattice(String),
    #[error("cut vertices {0} and {1} are adjacent")]
    AdjacentCut(usize, usize),
    #[error("vertex {0} out of range")]
    NoSuchVertex(usize),
    #[error("degenerate edge {0}")]
    DegenerateEdge(usize),
    #[error("cell {0} is not a ridge")]
    NotARidge(usize),
    #[error("facet hyperplane misses the tangent ball")]
    MissesBall,
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

/// Vertices of an edge-tangent polytope together with the tangent sphere.
///
/// When `hyperplane_normal` is set the polytope lives in the affine
/// hyperplane through `center` orthogonal to it.
#[derive(Clone, Debug)]
pub struct VertexModel<F> {
    pub ambient_dim: usize,
    pub center: Vec<F>,
    pub hyperplane_normal: Option<Vec<F>>,
    pub vertices: Vec<Vec<F>>,
    pub r2: F,
}

impl<F: OrderedField> VertexModel<F> {
    /// Vertex coordinates relative to the center.
    pub fn centered(&self, v: usize) -> Vec<F> {
        sub(&self.vertices[v], &self.center)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let enc = |p: &Vec<F>| serde_json::Value::Array(p.iter().map(|x| x.to_json()).collect());
        serde_json::json!({
            "field": F::field_tag(),
            "ambient_dim": self.ambient_dim,
            "center": enc(&self.center),
            "vertices": self.vertices.iter().map(enc).collect::<Vec<_>>(),
            "r2": self.r2.to_json(),
        })
    }
}

/// A supporting hyperplane `u . (x - center) <= c`.
#[derive(Clone, Debug, PartialEq)]
pub struct Plane<F> {
    pub normal: Vec<F>,
    pub offset: F,
}

/// Boundary face lattice with one supporting hyperplane per facet.
#[derive(Clone, Debug)]
pub struct PolytopeLattice<F> {
    complex: CellComplex,
    bits: Vec<u128>,
    planes: HashMap<usize, Plane<F>>,
}

/// An atom: exact vertices plus the verified face lattice.
#[derive(Clone, Debug)]
pub struct Polytope<F> {
    pub model: VertexModel<F>,
    pub lattice: PolytopeLattice<F>,
}

pub(crate) fn dot<F: OrderedField>(a: &[F], b: &[F]) -> F {
    a.iter().zip(b).fold(F::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

pub(crate) fn sub<F: OrderedField>(a: &[F], b: &[F]) -> Vec<F> {
    a.iter().zip(b).map(|(x, y)| x.clone() - y.clone()).collect()
}

pub(crate) fn bits_of(vs: &[usize]) -> u128 {
    vs.iter().fold(0u128, |acc, &v| acc | 1u128 << v)
}

pub(crate) fn members(bits: u128) -> Vec<usize> {
    (0..128).filter(|i| bits >> i & 1 == 1).collect()
}

impl<F: OrderedField> PolytopeLattice<F> {
    /// Verify each facet plane against every vertex, close the facets under
    /// intersection and assemble the boundary complex. Vertex `i` of the
    /// complex is vertex `i` of the model.
    pub fn from_facets(model: &VertexModel<F>, facets: Vec<(u128, Plane<F>)>) -> Result<Self, ZooError> {
        let n = model.vertices.len();
        if n > 128 {
            return Err(ZooError::TooManyVertices(n));
        }
        let centered: Vec<Vec<F>> = (0..n).map(|v| model.centered(v)).collect();
        for (k, (bits, plane)) in facets.iter().enumerate() {
            for (v, x) in centered.iter().enumerate() {
                let s = dot(&plane.normal, x).cmp_exact(&plane.offset);
                let on = bits >> v & 1 == 1;
                if (on && s != Ordering::Equal) || (!on && s != Ordering::Less) {
                    return Err(ZooError::NotSupporting(k));
                }
            }
        }
        let facet_bits: Vec<u128> = facets.iter().map(|f| f.0).collect();
        let mut faces: HashSet<u128> = facet_bits.iter().copied().collect();
        let mut stack: Vec<u128> = facet_bits.clone();
        while let Some(f) = stack.pop() {
            for &g in &facet_bits {
                let h = f & g;
                if h != 0 && h != f && faces.insert(h) {
                    stack.push(h);
                }
            }
        }
        let mut order: Vec<u128> = faces.into_iter().collect();
        order.sort_by_key(|b| (b.count_ones(), *b));
        let mut dims: Vec<usize> = Vec::with_capacity(order.len());
        for (i, &f) in order.iter().enumerate() {
            let d = (0..i)
                .filter(|&j| order[j] & !f == 0 && order[j] != f)
                .map(|j| dims[j] + 1)
                .max()
                .unwrap_or(0);
            dims.push(d);
        }
        if order.iter().zip(&dims).filter(|(_, &d)| d == 0).count() != n {
            return Err(ZooError::BadLattice("not every vertex is a face".into()));
        }
        let facet_set: HashSet<u128> = facet_bits.iter().copied().collect();
        for (f, &d) in order.iter().zip(&dims) {
            if facet_set.contains(f) != (d == 3) || d > 3 {
                return Err(ZooError::BadLattice("facets are not the 3-faces".into()));
            }
        }
        let complex = CellComplex::from_face_sets(order.iter().zip(&dims).map(|(&b, &d)| (d, members(b))).collect())?;
        for &r in complex.cells_of_dim(2) {
            if complex.cofaces(r).len() != 2 {
                return Err(ZooError::BadLattice(format!("ridge {r} in {} facets", complex.cofaces(r).len())));
            }
        }
        let bits: Vec<u128> = (0..complex.len()).map(|c| bits_of(&complex.vertices_of(c))).collect();
        let by_bits: HashMap<u128, usize> = complex.cells_of_dim(3).iter().map(|&c| (bits[c], c)).collect();
        let planes = facets.into_iter().map(|(b, p)| (by_bits[&b], p)).collect();
        Ok(PolytopeLattice { complex, bits, planes })
    }

    pub fn complex(&self) -> &CellComplex {
        &self.complex
    }

    pub fn facets(&self) -> &[usize] {
        self.complex.cells_of_dim(3)
    }

    pub fn ridges(&self) -> &[usize] {
        self.complex.cells_of_dim(2)
    }

    /// Vertex set of a cell as a bitset.
    pub fn vertex_bits(&self, cell: usize) -> u128 {
        self.bits[cell]
    }

    pub fn plane(&self, facet: usize) -> Option<&Plane<F>> {
        self.planes.get(&facet)
    }

    /// Number of vertices of the facet.
    pub fn facet_size(&self, facet: usize) -> u32 {
        self.bits[facet].count_ones()
    }

    /// Facet cell with exactly this vertex set, if any.
    pub fn cell_with_vertices(&self, bits: u128) -> Option<usize> {
        self.bits.iter().position(|&b| b == bits)
    }

    /// The two facets on a ridge.
    pub fn ridge_facets(&self, ridge: usize) -> Result<(usize, usize), ZooError> {
        if self.complex.cell(ridge).dim != 2 {
            return Err(ZooError::NotARidge(ridge));
        }
        match self.complex.cofaces(ridge) {
            [a, b] => Ok((*a, *b)),
            _ => Err(ZooError::NotARidge(ridge)),
        }
    }
}

/// Result of the tangency test.
#[derive(Clone, Debug, PartialEq)]
pub struct Tangency<F> {
    pub tangent: bool,
    pub r2: F,
}

/// Every edge touches the sphere of radius `r` about the center at an
/// interior point, with a single `r^2` for all edges and all vertices
/// outside the sphere.
pub fn check_edge_tangent<F: OrderedField>(p: &Polytope<F>) -> Result<Tangency<F>, ZooError> {
    let m = &p.model;
    let cx = p.lattice.complex();
    let mut r2: Option<F> = None;
    let mut ok = true;
    for &e in cx.cells_of_dim(1) {
        let vs = cx.vertices_of(e);
        let (a, b) = (m.centered(vs[0]), m.centered(vs[1]));
        let d = sub(&b, &a);
        let dd = dot(&d, &d);
        if dd.is_zero() {
            return Err(ZooError::DegenerateEdge(e));
        }
        let ad = dot(&a, &d);
        // closest point a + t d with t = -ad/dd strictly inside the edge
        let t = -ad.clone() / dd.clone();
        if t.signum() != Ordering::Greater || t.cmp_exact(&F::one()) != Ordering::Less {
            ok = false;
        }
        let dist = dot(&a, &a) - ad.clone() * ad / dd;
        match &r2 {
            None => r2 = Some(dist),
            Some(r) if r.cmp_exact(&dist) != Ordering::Equal => ok = false,
            _ => {}
        }
    }
    let r2 = r2.ok_or_else(|| ZooError::BadLattice("no edges".into()))?;
    if r2.cmp_exact(&m.r2) != Ordering::Equal {
        ok = false;
    }
    for v in 0..m.vertices.len() {
        let x = m.centered(v);
        if dot(&x, &x).cmp_exact(&r2) != Ordering::Greater {
            ok = false;
        }
    }
    Ok(Tangency { tangent: ok, r2 })
}

/// Hyperbolic dihedral angle at a ridge, as `cos^2` and the sign of `cos`.
///
/// The facets' planes `u . x = c` become vectors `(u, c/r)` in a Lorentzian
/// space of signature `(+,+,+,+,-)`; only `c^2/r^2` and `c1 c2/r^2` are
/// needed, so everything stays in the coordinate field.
pub fn hyperbolic_dihedral_cos2<F: OrderedField>(
    lattice: &PolytopeLattice<F>,
    ridge: usize,
    r2: &F,
) -> Result<(F, Ordering), ZooError> {
    let (f1, f2) = lattice.ridge_facets(ridge)?;
    let (p, q) = (lattice.plane(f1).ok_or(ZooError::NotARidge(ridge))?, lattice.plane(f2).ok_or(ZooError::NotARidge(ridge))?);
    let form = |a: &Plane<F>, b: &Plane<F>| dot(&a.normal, &b.normal) - a.offset.clone() * b.offset.clone() / r2.clone();
    let (pp, qq, pq) = (form(p, p), form(q, q), form(p, q));
    if pp.signum() != Ordering::Greater || qq.signum() != Ordering::Greater {
        return Err(ZooError::MissesBall);
    }
    let cos2 = pq.clone() * pq.clone() / (pp * qq);
    Ok((cos2, (-pq).signum()))
}

/// Fields whose elements embed in `Q(sqrt 5)`, where all the angles here live.
pub trait IntoQ5 {
    fn to_q5(&self) -> Option<QuadNum<5>>;
}

impl IntoQ5 for Rational {
    fn to_q5(&self) -> Option<QuadNum<5>> {
        Some(QuadNum::rational(self.clone()))
    }
}

impl IntoQ5 for QuadNum<5> {
    fn to_q5(&self) -> Option<QuadNum<5>> {
        Some(self.clone())
    }
}

/// Name the angle in `(0, pi)` with the given `cos^2` and sign of `cos`,
/// among multiples of `pi/2`, `pi/3` and `pi/5`.
pub fn identify_angle<F: IntoQ5>(cos2: &F, sign: Ordering) -> Option<AnglePi> {
    let c2 = cos2.to_q5()?;
    let candidates = [(1, 2), (1, 3), (2, 3), (1, 5), (2, 5), (3, 5), (4, 5)];
    candidates.iter().map(|&(p, q)| AnglePi::frac(p, q)).find(|a| {
        let c = a.cos_exact().expect("tabulated angle");
        c.square() == c2 && c.signum() == sign
    })
}

/// Dihedral angle at every ridge, identified exactly.
pub fn ridge_angles<F: OrderedField + IntoQ5>(p: &Polytope<F>) -> Result<HashMap<usize, AnglePi>, ZooError> {
    let mut out = HashMap::new();
    for &r in p.lattice.ridges() {
        let (c2, s) = hyperbolic_dihedral_cos2(&p.lattice, r, &p.model.r2)?;
        let a = identify_angle(&c2, s).ok_or_else(|| ZooError::BadLattice(format!("unrecognised angle at ridge {r}")))?;
        out.insert(r, a);
    }
    Ok(out)
}
