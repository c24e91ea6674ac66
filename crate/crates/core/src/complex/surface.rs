use std::collections::HashSet;

use super::{CellComplex, ComplexError, FVector};

/// A 2-dimensional complex whose faces remember their attaching walks.
///
/// Vertices are `0..V`, edges `V..V+E` and faces `V+E..`; edge `i` runs from
/// `ends[i].0` to `ends[i].1` and loops or parallel edges are allowed. A walk
/// step `(i, true)` traverses edge `i` against its orientation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceComplex {
    complex: CellComplex,
    n_vertices: usize,
    ends: Vec<(usize, usize)>,
    walks: Vec<Vec<(usize, bool)>>,
    genus: Option<u64>,
}

/// Why a surface complex fails to be regular.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SurfaceWitness {
    /// An edge whose two ends coincide (edge index).
    LoopEdge(usize),
    /// A face whose walk visits the vertex twice.
    RepeatedVertex { face: usize, vertex: usize },
    /// A face whose walk runs along the edge twice.
    RepeatedEdge { face: usize, edge: usize },
}

impl std::fmt::Display for SurfaceWitness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SurfaceWitness::LoopEdge(e) => write!(f, "edge {e} is a loop"),
            SurfaceWitness::RepeatedVertex { face, vertex } => {
                write!(f, "face {face} passes vertex {vertex} more than once")
            }
            SurfaceWitness::RepeatedEdge { face, edge } => write!(f, "face {face} runs along edge {edge} more than once"),
        }
    }
}

impl SurfaceComplex {
    /// `ends` are the edges by index and `walks` the faces, each a cyclic
    /// sequence of `(edge index, reversed)`.
    pub fn new(
        n_vertices: usize,
        ends: Vec<(usize, usize)>,
        walks: Vec<Vec<(usize, bool)>>,
    ) -> Result<Self, ComplexError> {
        let ne = ends.len();
        let mut cells: Vec<(usize, Vec<usize>)> = vec![(0, Vec::new()); n_vertices];
        for &(a, b) in &ends {
            if a >= n_vertices {
                return Err(ComplexError::UnknownCell(a));
            }
            if b >= n_vertices {
                return Err(ComplexError::UnknownCell(b));
            }
            cells.push((1, vec![a, b]));
        }
        for (j, w) in walks.iter().enumerate() {
            if w.is_empty() {
                return Err(ComplexError::WalkMismatch(j));
            }
            for &(e, _) in w {
                if e >= ne {
                    return Err(ComplexError::UnknownCell(n_vertices + e));
                }
            }
            let step = |&(e, rev): &(usize, bool)| if rev { (ends[e].1, ends[e].0) } else { ends[e] };
            for k in 0..w.len() {
                if step(&w[k]).1 != step(&w[(k + 1) % w.len()]).0 {
                    return Err(ComplexError::OpenWalk(j));
                }
            }
            cells.push((2, w.iter().map(|&(e, _)| n_vertices + e).collect()));
        }
        Ok(SurfaceComplex {
            complex: CellComplex::new(cells)?,
            n_vertices,
            ends,
            walks,
            genus: None,
        })
    }

    /// Attach the genus of the underlying closed orientable surface.
    pub fn with_genus(mut self, g: u64) -> Self {
        self.genus = Some(g);
        self
    }

    pub fn genus(&self) -> Option<u64> {
        self.genus
    }

    pub fn complex(&self) -> &CellComplex {
        &self.complex
    }

    pub fn f_vector(&self) -> FVector {
        FVector::new(vec![self.n_vertices as u128, self.ends.len() as u128, self.walks.len() as u128])
    }

    /// Euler relation against the recorded genus.
    pub fn euler_ok(&self) -> bool {
        match self.genus {
            Some(g) => self.f_vector().euler_check(Some(2 - 2 * g as i128)),
            None => false,
        }
    }

    pub fn num_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn num_edges(&self) -> usize {
        self.ends.len()
    }

    pub fn num_faces(&self) -> usize {
        self.walks.len()
    }

    pub fn edge_cell(&self, edge: usize) -> usize {
        self.n_vertices + edge
    }

    pub fn face_cell(&self, face: usize) -> usize {
        self.n_vertices + self.ends.len() + face
    }

    pub fn ends(&self, edge: usize) -> (usize, usize) {
        self.ends[edge]
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.ends
    }

    pub fn walk(&self, face: usize) -> &[(usize, bool)] {
        &self.walks[face]
    }

    pub fn walks(&self) -> &[Vec<(usize, bool)>] {
        &self.walks
    }

    /// Directed endpoints of one walk step.
    pub fn step_ends(&self, step: (usize, bool)) -> (usize, usize) {
        let (a, b) = self.ends[step.0];
        if step.1 {
            (b, a)
        } else {
            (a, b)
        }
    }

    /// Corner vertices of a face in walk order (the start of each step).
    pub fn corners(&self, face: usize) -> Vec<usize> {
        self.walks[face].iter().map(|&s| self.step_ends(s).0).collect()
    }

    /// Faces whose walks use the edge, with repetition.
    pub fn faces_of_edge(&self, edge: usize) -> Vec<usize> {
        let mut out = Vec::new();
        for (j, w) in self.walks.iter().enumerate() {
            for &(e, _) in w {
                if e == edge {
                    out.push(j);
                }
            }
        }
        out
    }

    pub fn regularity_witness(&self) -> Option<SurfaceWitness> {
        if let Some(e) = self.ends.iter().position(|&(a, b)| a == b) {
            return Some(SurfaceWitness::LoopEdge(e));
        }
        for (face, w) in self.walks.iter().enumerate() {
            let mut vs = HashSet::new();
            let mut es = HashSet::new();
            for &s in w {
                if !es.insert(s.0) {
                    return Some(SurfaceWitness::RepeatedEdge { face, edge: s.0 });
                }
                let v = self.step_ends(s).0;
                if !vs.insert(v) {
                    return Some(SurfaceWitness::RepeatedVertex { face, vertex: v });
                }
            }
        }
        None
    }

    pub fn is_regular(&self) -> bool {
        self.regularity_witness().is_none()
    }

    /// Strong regularity of the face poset; fails with
    /// [`ComplexError::NotRegular`] on non-regular input.
    pub fn strong_regularity_witness(&self) -> Result<Option<(usize, usize)>, ComplexError> {
        if let Some(w) = self.regularity_witness() {
            return Err(ComplexError::NotRegular(w.to_string()));
        }
        self.complex.strong_regularity_witness()
    }

    pub fn is_strongly_regular(&self) -> Result<bool, ComplexError> {
        Ok(self.strong_regularity_witness()?.is_none())
    }

    pub fn product_with_path(&self, n: usize) -> Result<CellComplex, ComplexError> {
        if let Some(w) = self.regularity_witness() {
            return Err(ComplexError::NotRegular(w.to_string()));
        }
        self.complex.product_with_path(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tetrahedron() -> SurfaceComplex {
        // edges 01 02 03 12 13 23
        let ends = vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        let walks = vec![
            vec![(0, false), (3, false), (1, true)],
            vec![(0, false), (4, false), (2, true)],
            vec![(1, false), (5, false), (2, true)],
            vec![(3, false), (5, false), (4, true)],
        ];
        SurfaceComplex::new(4, ends, walks).unwrap().with_genus(0)
    }

    #[test]
    fn tetrahedron_is_regular() {
        let t = tetrahedron();
        assert!(t.is_regular());
        assert!(t.euler_ok());
        assert!(t.is_strongly_regular().unwrap());
        assert_eq!(t.corners(0), vec![0, 1, 2]);
        let star = t.complex().star(0).unwrap();
        let (sub, _) = t.complex().subcomplex(&star).unwrap();
        assert_eq!(sub.f_vector().counts(), &[4, 6, 3]);
        let p = t.product_with_path(2).unwrap();
        assert_eq!(p.f_vector().counts(), &[12, 26, 24, 8]);
    }

    #[test]
    fn one_vertex_torus_is_not_regular() {
        let s = SurfaceComplex::new(1, vec![(0, 0), (0, 0)], vec![vec![(0, false), (1, false), (0, true), (1, true)]])
            .unwrap()
            .with_genus(1);
        assert!(s.euler_ok());
        assert_eq!(s.regularity_witness(), Some(SurfaceWitness::LoopEdge(0)));
        assert!(matches!(s.is_strongly_regular(), Err(ComplexError::NotRegular(_))));
        assert_eq!(s.complex().star(0).unwrap().len(), 4);
    }

    #[test]
    fn open_walk_rejected() {
        let r = SurfaceComplex::new(3, vec![(0, 1), (1, 2)], vec![vec![(0, false), (1, false)]]);
        assert_eq!(r, Err(ComplexError::OpenWalk(0)));
    }
}
