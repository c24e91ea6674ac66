//! Finite regular cell complexes given by their face posets.
//!
//! Cells carry dense ids `0..n`, listed in order of dimension, so vertices
//! always come first. A cell's boundary is the set of its codimension-one
//! faces.

mod fvector;
mod json;
mod surface;

pub use fvector::{FVector, FlagVector};
pub use json::{CellJson, ComplexJson};
pub use surface::{SurfaceComplex, SurfaceWitness};

use std::collections::{BTreeSet, HashMap};
use std::sync::OnceLock;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ComplexError {
    #[error("cell {cell} of dimension {dim} lists face {face} of dimension {face_dim}")]
    BadBoundary {
        cell: usize,
        dim: usize,
        face: usize,
        face_dim: usize,
    },
    #[error("unknown cell {0}")]
    UnknownCell(usize),
    #[error("cells are not listed in order of dimension at cell {0}")]
    NotGraded(usize),
    #[error("duplicate cell id {0}")]
    DuplicateId(i64),
    #[error("fatness undefined: zero denominator")]
    ZeroDenominator,
    #[error("f-vector has length {0}, expected {1}")]
    Length(usize, usize),
    #[error("invalid dimension tuple {0:?}")]
    BadDims(Vec<usize>),
    #[error("ridge {ridge} lies in {count} top cells")]
    NotPseudomanifold { ridge: usize, count: usize },
    #[error("cell {0} is not a vertex")]
    NotAVertex(usize),
    #[error("edge {0} does not have two distinct endpoints")]
    IrregularEdge(usize),
    #[error("boundary walk of face {0} is not closed")]
    OpenWalk(usize),
    #[error("boundary walk of face {0} is empty or disagrees with its boundary")]
    WalkMismatch(usize),
    #[error("expected a complex of dimension {expected}, found {found}")]
    WrongDimension { expected: usize, found: usize },
    #[error("number of segments must be positive")]
    ZeroSegments,
    #[error("input complex is not regular: {0}")]
    NotRegular(String),
    #[error("count overflow")]
    Overflow,
    #[error("malformed complex json: {0}")]
    Json(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cell {
    pub dim: usize,
    /// Sorted ids of the codimension-one faces.
    pub boundary: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct CellComplex {
    dim: usize,
    cells: Vec<Cell>,
    by_dim: Vec<Vec<usize>>,
    cofaces: Vec<Vec<usize>>,
    closures: OnceLock<Vec<Vec<usize>>>,
}

impl PartialEq for CellComplex {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.cells == other.cells
    }
}

impl Eq for CellComplex {}

/// Adjacency of top cells through shared ridges, with multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualGraph {
    /// Cell ids of the top cells; arcs refer to positions in this list.
    pub nodes: Vec<usize>,
    pub arcs: Vec<(usize, usize)>,
}

impl DualGraph {
    pub fn degree(&self, node: usize) -> usize {
        self.arcs.iter().filter(|&&(a, b)| a == node || b == node).count()
    }

    /// Whether every pair of distinct nodes is joined by exactly `mult` arcs.
    pub fn is_complete_with_multiplicity(&self, mult: usize) -> bool {
        let n = self.nodes.len();
        let mut count = vec![0usize; n * n];
        for &(a, b) in &self.arcs {
            if a == b {
                return false;
            }
            count[a.min(b) * n + a.max(b)] += 1;
        }
        (0..n).all(|a| (a + 1..n).all(|b| count[a * n + b] == mult))
    }
}

impl CellComplex {
    /// Build from `(dim, boundary)` pairs; the id of a cell is its position.
    pub fn new(cells: Vec<(usize, Vec<usize>)>) -> Result<Self, ComplexError> {
        let n = cells.len();
        let mut out = Vec::with_capacity(n);
        let mut prev_dim = 0;
        for (id, (dim, boundary)) in cells.iter().enumerate() {
            if *dim < prev_dim {
                return Err(ComplexError::NotGraded(id));
            }
            prev_dim = *dim;
            let mut b: Vec<usize> = boundary.clone();
            b.sort_unstable();
            b.dedup();
            for &f in &b {
                let fd = cells.get(f).ok_or(ComplexError::UnknownCell(f))?.0;
                if fd + 1 != *dim {
                    return Err(ComplexError::BadBoundary {
                        cell: id,
                        dim: *dim,
                        face: f,
                        face_dim: fd,
                    });
                }
            }
            out.push(Cell { dim: *dim, boundary: b });
        }
        let dim = out.iter().map(|c| c.dim).max().unwrap_or(0);
        let mut by_dim = vec![Vec::new(); dim + 1];
        let mut cofaces = vec![Vec::new(); n];
        for (id, c) in out.iter().enumerate() {
            by_dim[c.dim].push(id);
            for &f in &c.boundary {
                cofaces[f].push(id);
            }
        }
        Ok(CellComplex {
            dim,
            cells: out,
            by_dim,
            cofaces,
            closures: OnceLock::new(),
        })
    }

    /// Build the face poset from faces given as vertex sets; `faces` must
    /// contain every vertex as a singleton. Boundaries are the covering
    /// relation of inclusion between consecutive dimensions. Cells are
    /// ordered by `(dim, sorted vertex labels)`, so vertex `i` of the
    /// result is the `i`-th smallest label.
    pub fn from_face_sets(faces: Vec<(usize, Vec<usize>)>) -> Result<Self, ComplexError> {
        let mut faces: Vec<(usize, Vec<usize>)> = faces
            .into_iter()
            .map(|(d, mut s)| {
                s.sort_unstable();
                s.dedup();
                (d, s)
            })
            .collect();
        faces.sort();
        faces.dedup();
        let label: HashMap<usize, usize> = faces
            .iter()
            .filter(|f| f.0 == 0)
            .enumerate()
            .map(|(i, f)| (f.1[0], i))
            .collect();
        let sets: Vec<Vec<usize>> = faces
            .iter()
            .map(|(_, s)| s.iter().map(|x| label.get(x).copied().ok_or(ComplexError::UnknownCell(*x))).collect())
            .collect::<Result<_, _>>()?;
        let dim = faces.iter().map(|f| f.0).max().unwrap_or(0);
        let mut containing: Vec<Vec<Vec<usize>>> = vec![vec![Vec::new(); label.len()]; dim + 1];
        for (id, (d, _)) in faces.iter().enumerate() {
            for &v in &sets[id] {
                containing[*d][v].push(id);
            }
        }
        let mut cells = Vec::with_capacity(faces.len());
        for (id, (d, _)) in faces.iter().enumerate() {
            let mut boundary = BTreeSet::new();
            if *d > 0 {
                let s = &sets[id];
                for &v in s {
                    for &cand in &containing[d - 1][v] {
                        if is_subset(&sets[cand], s) {
                            boundary.insert(cand);
                        }
                    }
                }
            }
            cells.push((*d, boundary.into_iter().collect()));
        }
        CellComplex::new(cells)
    }

    /// The simplicial complex generated by the given maximal simplices.
    pub fn simplicial(facets: &[Vec<usize>]) -> Result<Self, ComplexError> {
        let mut faces = BTreeSet::new();
        for f in facets {
            let mut f = f.clone();
            f.sort_unstable();
            f.dedup();
            let k = f.len();
            for mask in 1u64..(1u64 << k) {
                let s: Vec<usize> = (0..k).filter(|i| mask >> i & 1 == 1).map(|i| f[i]).collect();
                faces.insert((s.len() - 1, s));
            }
        }
        CellComplex::from_face_sets(faces.into_iter().collect())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn cell(&self, id: usize) -> &Cell {
        &self.cells[id]
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn cells_of_dim(&self, d: usize) -> &[usize] {
        self.by_dim.get(d).map(|v| v.as_slice()).unwrap_or(&[])
    }

    pub fn cofaces(&self, id: usize) -> &[usize] {
        &self.cofaces[id]
    }

    pub fn f_vector(&self) -> FVector {
        FVector::new(self.by_dim.iter().map(|v| v.len() as u128).collect())
    }

    /// All faces of the closed cell `id` (including itself), sorted.
    pub fn closure(&self, id: usize) -> &[usize] {
        &self.closures()[id]
    }

    fn closures(&self) -> &Vec<Vec<usize>> {
        self.closures.get_or_init(|| {
            let mut cl: Vec<Vec<usize>> = Vec::with_capacity(self.cells.len());
            for (id, c) in self.cells.iter().enumerate() {
                let mut s: BTreeSet<usize> = BTreeSet::new();
                s.insert(id);
                for &f in &c.boundary {
                    s.extend(cl[f].iter().copied());
                }
                cl.push(s.into_iter().collect());
            }
            cl
        })
    }

    /// Vertex ids of the closed cell.
    pub fn vertices_of(&self, id: usize) -> Vec<usize> {
        self.closure(id).iter().copied().filter(|&c| self.cells[c].dim == 0).collect()
    }

    /// Number of chains `c_0 < c_1 < ...` with `dim c_i = dims[i]`.
    pub fn flag_vector(&self, dims: &[usize]) -> Result<u128, ComplexError> {
        let valid = !dims.is_empty()
            && dims.windows(2).all(|w| w[0] < w[1])
            && dims.last().is_some_and(|&d| d <= self.dim);
        if !valid {
            return Err(ComplexError::BadDims(dims.to_vec()));
        }
        let mut count: HashMap<usize, u128> = self.cells_of_dim(dims[0]).iter().map(|&c| (c, 1)).collect();
        for &d in &dims[1..] {
            let mut next = HashMap::new();
            for &c in self.cells_of_dim(d) {
                let mut s: u128 = 0;
                for a in self.closure(c) {
                    if let Some(k) = count.get(a) {
                        s = s.checked_add(*k).ok_or(ComplexError::Overflow)?;
                    }
                }
                next.insert(c, s);
            }
            count = next;
        }
        count.values().try_fold(0u128, |acc, &x| acc.checked_add(x)).ok_or(ComplexError::Overflow)
    }

    /// Every flag number of the complex.
    pub fn flag_vector_all(&self) -> Result<FlagVector, ComplexError> {
        let d = self.dim + 1;
        let mut fv = FlagVector::default();
        for mask in 1u32..(1 << d) {
            let dims: Vec<usize> = (0..d).filter(|i| mask >> i & 1 == 1).collect();
            let v = self.flag_vector(&dims)?;
            fv.entries.insert(dims, v);
        }
        Ok(fv)
    }

    /// Top cells adjacent through shared ridges. Every ridge must lie in
    /// exactly two top cells.
    pub fn dual_graph(&self) -> Result<DualGraph, ComplexError> {
        let nodes: Vec<usize> = self.cells_of_dim(self.dim).to_vec();
        if self.dim == 0 {
            return Ok(DualGraph { nodes, arcs: Vec::new() });
        }
        let pos: HashMap<usize, usize> = nodes.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let mut arcs = Vec::new();
        for &r in self.cells_of_dim(self.dim - 1) {
            let up = &self.cofaces[r];
            if up.len() != 2 {
                return Err(ComplexError::NotPseudomanifold { ridge: r, count: up.len() });
            }
            arcs.push((pos[&up[0]], pos[&up[1]]));
        }
        Ok(DualGraph { nodes, arcs })
    }

    fn check_vertex(&self, v: usize) -> Result<(), ComplexError> {
        match self.cells.get(v) {
            Some(c) if c.dim == 0 => Ok(()),
            Some(_) => Err(ComplexError::NotAVertex(v)),
            None => Err(ComplexError::UnknownCell(v)),
        }
    }

    /// Cells whose closure contains the vertex `v`.
    pub fn cells_containing(&self, v: usize) -> Result<Vec<usize>, ComplexError> {
        self.check_vertex(v)?;
        let mut out = BTreeSet::from([v]);
        let mut stack = vec![v];
        while let Some(c) = stack.pop() {
            for &u in &self.cofaces[c] {
                if out.insert(u) {
                    stack.push(u);
                }
            }
        }
        Ok(out.into_iter().collect())
    }

    /// Ids of the closed star of `v`: every face of every cell containing `v`.
    pub fn star(&self, v: usize) -> Result<Vec<usize>, ComplexError> {
        let mut out = BTreeSet::new();
        for c in self.cells_containing(v)? {
            out.extend(self.closure(c).iter().copied());
        }
        Ok(out.into_iter().collect())
    }

    /// Ids of the link of `v`: cells of the closed star that miss `v`.
    pub fn link(&self, v: usize) -> Result<Vec<usize>, ComplexError> {
        let open: BTreeSet<usize> = self.cells_containing(v)?.into_iter().collect();
        Ok(self.star(v)?.into_iter().filter(|c| !open.contains(c)).collect())
    }

    /// The subcomplex on a down-closed set of ids, renumbered densely in the
    /// original order. Also returns the old id of every new cell.
    pub fn subcomplex(&self, ids: &[usize]) -> Result<(CellComplex, Vec<usize>), ComplexError> {
        let mut keep: Vec<usize> = ids.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let new_id: HashMap<usize, usize> = keep.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let mut cells = Vec::with_capacity(keep.len());
        for &c in &keep {
            let cell = self.cells.get(c).ok_or(ComplexError::UnknownCell(c))?;
            let b = cell
                .boundary
                .iter()
                .map(|f| new_id.get(f).copied().ok_or(ComplexError::UnknownCell(*f)))
                .collect::<Result<Vec<_>, _>>()?;
            cells.push((cell.dim, b));
        }
        Ok((CellComplex::new(cells)?, keep))
    }

    /// Every edge has two distinct endpoints. This is all the poset can say
    /// about regularity; attaching maps of 2-cells live in [`SurfaceComplex`].
    pub fn check_edges(&self) -> Result<(), ComplexError> {
        for &e in self.cells_of_dim(1) {
            if self.cells[e].boundary.len() != 2 {
                return Err(ComplexError::IrregularEdge(e));
            }
        }
        Ok(())
    }

    /// A pair of cells whose closed cells meet in something other than a
    /// single closed cell, or `None` when the complex is strongly regular.
    pub fn strong_regularity_witness(&self) -> Result<Option<(usize, usize)>, ComplexError> {
        self.check_edges()?;
        let cl = self.closures();
        let mut seen = std::collections::HashSet::new();
        for &v in self.cells_of_dim(0) {
            let around: Vec<usize> = self.cells_containing(v)?.into_iter().filter(|&c| c != v).collect();
            for (i, &a) in around.iter().enumerate() {
                for &b in &around[i + 1..] {
                    if cl[b].binary_search(&a).is_ok() || cl[a].binary_search(&b).is_ok() {
                        continue;
                    }
                    if !seen.insert((a, b)) {
                        continue;
                    }
                    let common = intersect(&cl[a], &cl[b]);
                    let top = common.iter().copied().max_by_key(|&c| self.cells[c].dim).unwrap_or(v);
                    if cl[top].len() != common.len() {
                        return Ok(Some((a, b)));
                    }
                }
            }
        }
        Ok(None)
    }

    pub fn is_strongly_regular(&self) -> Result<bool, ComplexError> {
        Ok(self.strong_regularity_witness()?.is_none())
    }

    /// The dual face poset: a `k`-cell becomes a `(dim - k)`-cell whose
    /// boundary is the set of its former cofaces.
    pub fn dual(&self) -> CellComplex {
        let mut order: Vec<usize> = (0..self.cells.len()).collect();
        order.sort_by_key(|&c| (self.dim - self.cells[c].dim, c));
        let mut new_id = vec![0; order.len()];
        for (i, &c) in order.iter().enumerate() {
            new_id[c] = i;
        }
        let cells = order
            .iter()
            .map(|&c| (self.dim - self.cells[c].dim, self.cofaces[c].iter().map(|&u| new_id[u]).collect()))
            .collect();
        CellComplex::new(cells).expect("dual of a graded poset is graded")
    }

    /// The prism complex `X x [0, N]` with the interval cut into `n`
    /// segments. `X` must be 2-dimensional with two-ended edges.
    pub fn product_with_path(&self, n: usize) -> Result<CellComplex, ComplexError> {
        if n == 0 {
            return Err(ComplexError::ZeroSegments);
        }
        if self.dim != 2 {
            return Err(ComplexError::WrongDimension { expected: 2, found: self.dim });
        }
        self.check_edges().map_err(|e| ComplexError::NotRegular(e.to_string()))?;
        let len = self.cells.len();
        // level cells (c, i) for i in 0..=n, then vertical cells (c, i + 1/2)
        let level = |c: usize, i: usize| -> (usize, usize, usize) { (self.cells[c].dim, 0, i * len + c) };
        let vert = |c: usize, i: usize| -> (usize, usize, usize) { (self.cells[c].dim + 1, 1, i * len + c) };
        let mut keys: Vec<(usize, usize, usize)> = Vec::new();
        for i in 0..=n {
            for c in 0..len {
                keys.push(level(c, i));
            }
        }
        for i in 0..n {
            for c in 0..len {
                keys.push(vert(c, i));
            }
        }
        keys.sort_unstable();
        let id: HashMap<(usize, usize, usize), usize> = keys.iter().enumerate().map(|(i, &k)| (k, i)).collect();
        let mut cells = Vec::with_capacity(keys.len());
        for &(d, kind, idx) in &keys {
            let (i, c) = (idx / len, idx % len);
            let b: Vec<usize> = if kind == 0 {
                self.cells[c].boundary.iter().map(|&f| id[&level(f, i)]).collect()
            } else {
                let mut b = vec![id[&level(c, i)], id[&level(c, i + 1)]];
                b.extend(self.cells[c].boundary.iter().map(|&f| id[&vert(f, i)]));
                b
            };
            cells.push((d, b));
        }
        CellComplex::new(cells)
    }
}

/// Closed-form f-vector of `X x [0, N]` for a 2-dimensional `X`.
pub fn product_f_vector(f: &FVector, n: u128) -> Result<FVector, ComplexError> {
    if f.len() != 3 {
        return Err(ComplexError::Length(f.len(), 3));
    }
    if n == 0 {
        return Err(ComplexError::ZeroSegments);
    }
    let m = n + 1;
    let c = |x: u128, y: u128| x.checked_mul(y).ok_or(ComplexError::Overflow);
    let s = |x: u128, y: u128| x.checked_add(y).ok_or(ComplexError::Overflow);
    Ok(FVector::new(vec![
        c(f.get(0), m)?,
        s(c(f.get(1), m)?, c(f.get(0), n)?)?,
        s(c(f.get(2), m)?, c(f.get(1), n)?)?,
        c(f.get(2), n)?,
    ]))
}

fn is_subset(a: &[usize], b: &[usize]) -> bool {
    a.len() < b.len() && a.iter().all(|x| b.binary_search(x).is_ok())
}

fn intersect(a: &[usize], b: &[usize]) -> Vec<usize> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn simplex_boundary(n: usize) -> CellComplex {
        let facets: Vec<Vec<usize>> = (0..n).map(|skip| (0..n).filter(|&v| v != skip).collect()).collect();
        CellComplex::simplicial(&facets).unwrap()
    }

    /// Boundary of the 4-cube: faces are sets of sign vectors agreeing on a
    /// fixed set of coordinates.
    fn cube4() -> CellComplex {
        let mut faces = Vec::new();
        for free in 0u32..16 {
            if free == 15 {
                continue;
            }
            for fixed in 0u32..16 {
                if fixed & free != 0 {
                    continue;
                }
                let verts: Vec<usize> = (0..16u32).filter(|v| v & !free == fixed).map(|v| v as usize).collect();
                faces.push((free.count_ones() as usize, verts));
            }
        }
        CellComplex::from_face_sets(faces).unwrap()
    }

    #[test]
    fn cube_counts() {
        let c = cube4();
        assert_eq!(c.f_vector(), FVector::from([16, 32, 24, 8]));
        assert_eq!(c.flag_vector(&[0, 1, 3]).unwrap(), 192);
        assert_eq!(c.flag_vector(&[0, 3]).unwrap(), 64);
        assert_eq!(c.flag_vector(&[0]).unwrap(), 16);
        let by_facets: usize = c.cells_of_dim(3).iter().map(|&f| c.vertices_of(f).len()).sum();
        assert_eq!(by_facets, 64);
        assert!(c.flag_vector(&[1, 1]).is_err());
        assert!(c.flag_vector(&[0, 4]).is_err());
        assert!(c.flag_vector(&[]).is_err());
        assert_eq!(c.dual().f_vector(), FVector::from([8, 24, 32, 16]));
        assert!(c.is_strongly_regular().unwrap());
    }

    #[test]
    fn simplex_boundaries() {
        let s = simplex_boundary(5);
        assert_eq!(s.f_vector(), FVector::from([5, 10, 10, 5]));
        assert!(s.is_strongly_regular().unwrap());
        let t = simplex_boundary(4);
        let g = t.dual_graph().unwrap();
        assert_eq!(g.nodes.len(), 4);
        assert!(g.is_complete_with_multiplicity(1));
        let star = t.star(0).unwrap();
        let (sub, _) = t.subcomplex(&star).unwrap();
        assert_eq!(sub.f_vector(), FVector::from([4, 6, 3]));
        let link = t.link(0).unwrap();
        assert_eq!(link.len(), 6);
        let all = t.flag_vector_all().unwrap();
        assert_eq!(all.get(&[0, 1, 2]), Some(24));
    }

    #[test]
    fn prism_counts() {
        let t = simplex_boundary(4);
        let p = t.product_with_path(2).unwrap();
        assert_eq!(p.f_vector(), FVector::from([12, 26, 24, 8]));
        assert_eq!(product_f_vector(&t.f_vector(), 2).unwrap(), p.f_vector());
        assert!(p.f_vector().euler_check(Some(2)));
        assert!(p.is_strongly_regular().unwrap());
        assert_eq!(t.product_with_path(0), Err(ComplexError::ZeroSegments));
    }

    #[test]
    fn rejects_malformed() {
        assert!(matches!(CellComplex::new(vec![(0, vec![]), (1, vec![0, 5])]), Err(ComplexError::UnknownCell(5))));
        assert!(matches!(CellComplex::new(vec![(1, vec![]), (0, vec![])]), Err(ComplexError::NotGraded(1))));
        assert!(matches!(
            CellComplex::new(vec![(0, vec![]), (2, vec![0])]),
            Err(ComplexError::BadBoundary { .. })
        ));
    }

    #[test]
    fn disk_with_doubled_boundary_fails_strong_regularity() {
        // a triangle and a square sharing two consecutive edges
        let d = CellComplex::new(vec![
            (0, vec![]),
            (0, vec![]),
            (0, vec![]),
            (0, vec![]),
            (1, vec![0, 1]),
            (1, vec![1, 2]),
            (1, vec![2, 0]),
            (1, vec![0, 3]),
            (1, vec![3, 2]),
            (2, vec![4, 5, 6]),
            (2, vec![4, 5, 7, 8]),
        ])
        .unwrap();
        let (a, b) = d.strong_regularity_witness().unwrap().unwrap();
        let common = intersect(d.closure(a), d.closure(b));
        assert!(common.len() > 1);
    }
}
