use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::{CellComplex, ComplexError, SurfaceComplex};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellJson {
    pub id: i64,
    pub dim: usize,
    pub boundary: Vec<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub walk: Option<Vec<i64>>,
}

/// Serialized complex: cells sorted by `(dim, id)`; a walk entry `-k` means
/// edge `k` traversed backwards. Surface edges list their boundary as
/// `[tail, head]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexJson {
    pub dim: usize,
    pub cells: Vec<CellJson>,
}

impl CellComplex {
    pub fn to_json(&self) -> ComplexJson {
        ComplexJson {
            dim: self.dim,
            cells: self
                .cells
                .iter()
                .enumerate()
                .map(|(id, c)| CellJson {
                    id: id as i64,
                    dim: c.dim,
                    boundary: c.boundary.iter().map(|&b| b as i64).collect(),
                    walk: None,
                })
                .collect(),
        }
    }

    /// Parse, renumbering cells densely in `(dim, id)` order.
    pub fn from_json(j: &ComplexJson) -> Result<Self, ComplexError> {
        let (order, map) = renumber(j)?;
        let cells = order
            .iter()
            .map(|c| Ok((c.dim, c.boundary.iter().map(|b| lookup(&map, *b)).collect::<Result<Vec<_>, _>>()?)))
            .collect::<Result<Vec<_>, ComplexError>>()?;
        let cx = CellComplex::new(cells)?;
        if cx.dim != j.dim && !cx.is_empty() {
            return Err(ComplexError::WrongDimension { expected: j.dim, found: cx.dim });
        }
        Ok(cx)
    }
}

impl SurfaceComplex {
    pub fn to_json(&self) -> ComplexJson {
        let mut j = self.complex().to_json();
        for (e, &(a, b)) in self.edges().iter().enumerate() {
            j.cells[self.edge_cell(e)].boundary = vec![a as i64, b as i64];
        }
        for f in 0..self.num_faces() {
            let walk = self
                .walk(f)
                .iter()
                .map(|&(e, rev)| {
                    let id = self.edge_cell(e) as i64;
                    if rev {
                        -id
                    } else {
                        id
                    }
                })
                .collect();
            j.cells[self.face_cell(f)].walk = Some(walk);
        }
        j
    }

    pub fn from_json(j: &ComplexJson) -> Result<Self, ComplexError> {
        let (order, map) = renumber(j)?;
        let nv = order.iter().filter(|c| c.dim == 0).count();
        let mut ends = Vec::new();
        let mut walks = Vec::new();
        for c in &order {
            match c.dim {
                0 => {}
                1 => {
                    let b: Vec<usize> = c.boundary.iter().map(|x| lookup(&map, *x)).collect::<Result<_, _>>()?;
                    match b.as_slice() {
                        [a, h] => ends.push((*a, *h)),
                        [a] => ends.push((*a, *a)),
                        _ => return Err(ComplexError::IrregularEdge(c.id as usize)),
                    }
                }
                2 => {
                    let walk = c.walk.as_ref().ok_or(ComplexError::WalkMismatch(c.id as usize))?;
                    let steps = walk
                        .iter()
                        .map(|&s| Ok((lookup(&map, s.abs())? - nv, s < 0)))
                        .collect::<Result<Vec<_>, ComplexError>>()?;
                    walks.push(steps);
                }
                d => return Err(ComplexError::WrongDimension { expected: 2, found: d }),
            }
        }
        SurfaceComplex::new(nv, ends, walks)
    }
}

fn renumber(j: &ComplexJson) -> Result<(Vec<&CellJson>, HashMap<i64, usize>), ComplexError> {
    let mut order: Vec<&CellJson> = j.cells.iter().collect();
    order.sort_by_key(|c| (c.dim, c.id));
    let mut map = HashMap::new();
    for (i, c) in order.iter().enumerate() {
        if map.insert(c.id, i).is_some() {
            return Err(ComplexError::DuplicateId(c.id));
        }
    }
    Ok((order, map))
}

fn lookup(map: &HashMap<i64, usize>, id: i64) -> Result<usize, ComplexError> {
    map.get(&id).copied().ok_or(ComplexError::Json(format!("unknown cell id {id}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let ends = vec![(0, 1), (1, 2), (2, 0)];
        let walks = vec![vec![(0, false), (1, false), (2, false)], vec![(2, true), (1, true), (0, true)]];
        let s = SurfaceComplex::new(3, ends, walks).unwrap();
        let j = s.to_json();
        assert_eq!(j.cells[7].walk.as_ref().unwrap(), &vec![-5, -4, -3]);
        let text = serde_json::to_string(&j).unwrap();
        let back: ComplexJson = serde_json::from_str(&text).unwrap();
        assert_eq!(SurfaceComplex::from_json(&back).unwrap(), s);
        assert_eq!(CellComplex::from_json(&s.complex().to_json()).unwrap(), *s.complex());
    }

    #[test]
    fn accepts_sparse_ids() {
        let text = r#"{"dim":1,"cells":[{"id":10,"dim":1,"boundary":[7,3]},{"id":7,"dim":0,"boundary":[]},{"id":3,"dim":0,"boundary":[]}]}"#;
        let j: ComplexJson = serde_json::from_str(text).unwrap();
        let c = CellComplex::from_json(&j).unwrap();
        assert_eq!(c.f_vector().counts(), &[2, 1]);
        assert_eq!(c.cell(2).boundary, vec![0, 1]);
    }
}
