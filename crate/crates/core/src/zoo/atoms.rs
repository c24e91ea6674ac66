use std::sync::OnceLock;

use super::{bits_of, dot, members, Plane, Polytope, PolytopeLattice, VertexModel, ZooError};
use crate::arith::{int, rat, OrderedField, QuadNum, Rational};
use crate::complex::CellComplex;

pub type Q5 = QuadNum<5>;

fn q(a: Rational, b: Rational) -> Q5 {
    Q5::new(a, b)
}

fn qi(n: i64) -> Q5 {
    Q5::from_int(n)
}

/// The 4-simplex as `e_1..e_5` in the hyperplane `sum x = 1`.
pub fn build_simplex4() -> Result<Polytope<Rational>, ZooError> {
    let unit = |i: usize| (0..5).map(|j| int((i == j) as i64)).collect::<Vec<_>>();
    let model = VertexModel {
        ambient_dim: 5,
        center: vec![rat(1, 5); 5],
        hyperplane_normal: Some(vec![int(1); 5]),
        vertices: (0..5).map(unit).collect(),
        r2: rat(3, 10),
    };
    let facets = (0..5)
        .map(|i| {
            let normal = (0..5).map(|j| if i == j { rat(-4, 5) } else { rat(1, 5) }).collect();
            let bits = bits_of(&(0..5).filter(|&j| j != i).collect::<Vec<_>>());
            (bits, Plane { normal, offset: rat(1, 5) })
        })
        .collect();
    let lattice = PolytopeLattice::from_facets(&model, facets)?;
    Ok(Polytope { model, lattice })
}

/// The cross polytope `conv(+-e_i)`; vertex `2i` is `e_i`, `2i+1` is `-e_i`.
pub fn build_cross4() -> Result<Polytope<Rational>, ZooError> {
    let vertices = (0..8)
        .map(|k| (0..4).map(|j| if j == k / 2 { int(if k % 2 == 0 { 1 } else { -1 }) } else { int(0) }).collect())
        .collect();
    let model = VertexModel { ambient_dim: 4, center: vec![int(0); 4], hyperplane_normal: None, vertices, r2: rat(1, 2) };
    let facets = (0..16u32)
        .map(|s| {
            let signs: Vec<i64> = (0..4).map(|j| if s >> j & 1 == 1 { -1 } else { 1 }).collect();
            let vs: Vec<usize> = (0..4).map(|j| 2 * j + (signs[j] < 0) as usize).collect();
            (bits_of(&vs), Plane { normal: signs.iter().map(|&x| int(x)).collect(), offset: int(1) })
        })
        .collect();
    let lattice = PolytopeLattice::from_facets(&model, facets)?;
    Ok(Polytope { model, lattice })
}

/// The cube `[-1, 1]^4`; vertex `k` has coordinate `j` equal to `-1` iff
/// bit `j` of `k` is set.
pub fn build_cube4() -> Result<Polytope<Rational>, ZooError> {
    let vertices = (0..16u32).map(|k| (0..4).map(|j| int(if k >> j & 1 == 1 { -1 } else { 1 })).collect()).collect();
    let model = VertexModel { ambient_dim: 4, center: vec![int(0); 4], hyperplane_normal: None, vertices, r2: int(3) };
    let mut facets = Vec::new();
    for j in 0..4 {
        for neg in [false, true] {
            let vs: Vec<usize> = (0..16).filter(|k| (k >> j & 1 == 1) == neg).collect();
            let normal = (0..4).map(|i| int(if i != j { 0 } else if neg { -1 } else { 1 })).collect();
            facets.push((bits_of(&vs), Plane { normal, offset: int(1) }));
        }
    }
    let lattice = PolytopeLattice::from_facets(&model, facets)?;
    Ok(Polytope { model, lattice })
}

fn even_permutations() -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let p = [a, b, c, d];
                    let mut seen = [false; 4];
                    p.iter().for_each(|&x| seen[x] = true);
                    if !seen.iter().all(|&s| s) {
                        continue;
                    }
                    let inversions = (0..4).flat_map(|i| (i + 1..4).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
                    if inversions % 2 == 0 {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}

/// The 120 unit quaternions of the binary icosahedral group: 8 axis units,
/// 16 of the form `(+-1/2)^4`, then 96 even permutations of
/// `(+-phi, +-1, +-1/phi, 0)/2`.
fn icosians() -> Vec<Vec<Q5>> {
    let mut out = Vec::new();
    for k in 0..8 {
        out.push((0..4).map(|j| if j == k / 2 { qi(if k % 2 == 0 { 1 } else { -1 }) } else { qi(0) }).collect());
    }
    for s in 0..16u32 {
        out.push((0..4).map(|j| Q5::rational(if s >> j & 1 == 1 { rat(-1, 2) } else { rat(1, 2) })).collect());
    }
    let half_phi = q(rat(1, 4), rat(1, 4));
    let half_inv_phi = q(rat(-1, 4), rat(1, 4));
    let base = [half_phi, Q5::rational(rat(1, 2)), half_inv_phi, qi(0)];
    for p in even_permutations() {
        for s in 0..8u32 {
            let mut v = vec![qi(0); 4];
            for (slot, x) in base.iter().enumerate() {
                let neg = slot < 3 && s >> slot & 1 == 1;
                v[p[slot]] = if neg { -x.clone() } else { x.clone() };
            }
            out.push(v);
        }
    }
    out
}

/// `phi / 2`, the inner product of adjacent unit vertices of the 600-cell.
fn edge_ip() -> Q5 {
    q(rat(1, 4), rat(1, 4))
}

fn adjacency(vertices: &[Vec<Q5>]) -> Vec<u128> {
    let t = edge_ip();
    let n = vertices.len();
    let mut adj = vec![0u128; n];
    for a in 0..n {
        for b in a + 1..n {
            if dot(&vertices[a], &vertices[b]) == t {
                adj[a] |= 1 << b;
                adj[b] |= 1 << a;
            }
        }
    }
    adj
}

fn four_cliques(adj: &[u128]) -> Vec<u128> {
    let mut out = Vec::new();
    for a in 0..adj.len() {
        let na = adj[a] & !((2u128 << a) - 1);
        for b in members(na) {
            let nb = na & adj[b] & !((2u128 << b) - 1);
            for c in members(nb) {
                let nc = nb & adj[c] & !((2u128 << c) - 1);
                for d in members(nc) {
                    out.push(1 << a | 1 << b | 1 << c | 1 << d);
                }
            }
        }
    }
    out
}

/// The hyperplane through a clique with normal the sum of its vertices.
fn clique_plane(vertices: &[Vec<Q5>], bits: u128) -> Plane<Q5> {
    let vs = members(bits);
    let normal: Vec<Q5> = (0..4).map(|j| vs.iter().fold(qi(0), |acc, &v| acc + vertices[v][j].clone())).collect();
    let offset = dot(&normal, &vertices[vs[0]]);
    Plane { normal, offset }
}

/// `r^2 = 1 - 1/(4 phi^2) = (5 + 2 sqrt5) / (6 + 2 sqrt5)`.
fn r2_600() -> Q5 {
    q(int(5), int(2)) / q(int(6), int(2))
}

struct Base {
    poly: Polytope<Q5>,
    adj: Vec<u128>,
    tets: Vec<(u128, Plane<Q5>)>,
}

fn base() -> &'static Result<Base, ZooError> {
    static BASE: OnceLock<Result<Base, ZooError>> = OnceLock::new();
    BASE.get_or_init(|| {
        let vertices = icosians();
        let adj = adjacency(&vertices);
        let tets: Vec<(u128, Plane<Q5>)> = four_cliques(&adj).into_iter().map(|b| (b, clique_plane(&vertices, b))).collect();
        let model = VertexModel { ambient_dim: 4, center: vec![qi(0); 4], hyperplane_normal: None, vertices, r2: r2_600() };
        let lattice = PolytopeLattice::from_facets(&model, tets.clone())?;
        Ok(Base { poly: Polytope { model, lattice }, adj, tets })
    })
}

/// The 600-cell on the binary icosahedral group.
pub fn build_600cell() -> Result<Polytope<Q5>, ZooError> {
    base().as_ref().map(|b| b.poly.clone()).map_err(Clone::clone)
}

/// Indices of the 24 Hurwitz units (the binary tetrahedral subgroup) among
/// the 600-cell vertices.
pub fn binary_tetrahedral_indices() -> Vec<usize> {
    (0..24).collect()
}

/// Convex hull of the 600-cell vertices minus `cut`: the 20 tetrahedra at
/// each cut vertex `w` give way to the icosahedron of its neighbours, cut
/// out by `w . x = phi/2`. Vertices keep their relative order.
pub fn cut_600cell(cut: &[usize]) -> Result<Polytope<Q5>, ZooError> {
    let b = base().as_ref().map_err(Clone::clone)?;
    let n = b.poly.model.vertices.len();
    let mut cut: Vec<usize> = cut.to_vec();
    cut.sort_unstable();
    cut.dedup();
    for (i, &w) in cut.iter().enumerate() {
        if w >= n {
            return Err(ZooError::NoSuchVertex(w));
        }
        for &x in &cut[i + 1..] {
            if b.adj[w] >> x & 1 == 1 {
                return Err(ZooError::AdjacentCut(w, x));
            }
        }
    }
    let cut_bits = bits_of(&cut);
    let kept: Vec<usize> = (0..n).filter(|v| cut_bits >> v & 1 == 0).collect();
    let mut new_index = vec![usize::MAX; n];
    for (i, &v) in kept.iter().enumerate() {
        new_index[v] = i;
    }
    let remap = |bits: u128| members(bits).into_iter().fold(0u128, |acc, v| acc | 1 << new_index[v]);
    let mut facets: Vec<(u128, Plane<Q5>)> =
        b.tets.iter().filter(|(bits, _)| bits & cut_bits == 0).map(|(bits, p)| (remap(*bits), p.clone())).collect();
    for &w in &cut {
        let normal = b.poly.model.vertices[w].clone();
        facets.push((remap(b.adj[w]), Plane { normal, offset: edge_ip() }));
    }
    let model = VertexModel {
        ambient_dim: 4,
        center: vec![qi(0); 4],
        hyperplane_normal: None,
        vertices: kept.iter().map(|&v| b.poly.model.vertices[v].clone()).collect(),
        r2: r2_600(),
    };
    let lattice = PolytopeLattice::from_facets(&model, facets)?;
    Ok(Polytope { model, lattice })
}

/// The snub 24-cell as the 600-cell cut at the binary tetrahedral group.
pub fn build_snub24() -> Result<Polytope<Q5>, ZooError> {
    cut_600cell(&binary_tetrahedral_indices())
}

/// The snub 24-cell from its 96 vertices alone: tetrahedra are the 4-cliques
/// of their edge graph, icosahedra the neighbourhoods of the 24 Hurwitz
/// units.
pub fn build_snub24_direct() -> Result<Polytope<Q5>, ZooError> {
    let all = icosians();
    let (hurwitz, vertices) = all.split_at(24);
    let vertices = vertices.to_vec();
    let adj = adjacency(&vertices);
    let mut facets: Vec<(u128, Plane<Q5>)> = four_cliques(&adj).into_iter().map(|b| (b, clique_plane(&vertices, b))).collect();
    let t = edge_ip();
    for w in hurwitz {
        let nbrs: Vec<usize> = (0..vertices.len()).filter(|&v| dot(w, &vertices[v]) == t).collect();
        facets.push((bits_of(&nbrs), Plane { normal: w.clone(), offset: t.clone() }));
    }
    let model = VertexModel { ambient_dim: 4, center: vec![qi(0); 4], hyperplane_normal: None, vertices, r2: r2_600() };
    let lattice = PolytopeLattice::from_facets(&model, facets)?;
    Ok(Polytope { model, lattice })
}

/// The cap removed by one cut: the 20 tetrahedra around a 600-cell vertex
/// together with the icosahedron spanned by its neighbours.
pub fn cap_complex() -> Result<CellComplex, ZooError> {
    let b = base().as_ref().map_err(Clone::clone)?;
    let w = 0;
    let mut faces = Vec::new();
    for (bits, _) in b.tets.iter().filter(|(bits, _)| bits >> w & 1 == 1) {
        let vs = members(*bits);
        for mask in 1u32..16 {
            let s: Vec<usize> = (0..4).filter(|i| mask >> i & 1 == 1).map(|i| vs[i]).collect();
            faces.push((s.len() - 1, s));
        }
    }
    faces.push((3, members(b.adj[w])));
    Ok(CellComplex::from_face_sets(faces)?)
}
