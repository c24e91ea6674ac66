//! Strictly convex unit-edge polygons tiled edge-to-edge by unit squares
//! and unit equilateral triangles.
//!
//! Points live in `Q(sqrt 3)^2`, stored doubled as `[a, b, c, d]` for
//! `x = (a + b sqrt3)/2`, `y = (c + d sqrt3)/2`; every unit step is one of
//! the twelve multiples of 30 degrees.

use std::collections::BTreeSet;

use serde::Serialize;

type Pt = [i64; 4];

const UNIT: [Pt; 12] = [
    [2, 0, 0, 0],
    [0, 1, 1, 0],
    [1, 0, 0, 1],
    [0, 0, 2, 0],
    [-1, 0, 0, 1],
    [0, -1, 1, 0],
    [-2, 0, 0, 0],
    [0, -1, -1, 0],
    [-1, 0, 0, -1],
    [0, 0, -2, 0],
    [1, 0, 0, -1],
    [0, 1, -1, 0],
];

fn add(p: Pt, q: Pt) -> Pt {
    [p[0] + q[0], p[1] + q[1], p[2] + q[2], p[3] + q[3]]
}

fn diff(p: Pt, q: Pt) -> Pt {
    [p[0] - q[0], p[1] - q[1], p[2] - q[2], p[3] - q[3]]
}

fn step(p: Pt, k: i64) -> Pt {
    add(p, UNIT[k.rem_euclid(12) as usize])
}

fn direction(p: Pt, q: Pt) -> i64 {
    let d = diff(q, p);
    UNIT.iter().position(|u| *u == d).expect("unit edge") as i64
}

/// `(a + b sqrt3)(c + d sqrt3)`
fn zmul(a: (i64, i64), b: (i64, i64)) -> (i64, i64) {
    (a.0 * b.0 + 3 * a.1 * b.1, a.0 * b.1 + a.1 * b.0)
}

fn zsign(z: (i64, i64)) -> i64 {
    let (a, b) = z;
    match (a.signum(), b.signum()) {
        (x, y) if x >= 0 && y >= 0 => (x + y).signum(),
        (x, y) if x <= 0 && y <= 0 => (x + y).signum(),
        _ => (a * a - 3 * b * b).signum() * a.signum(),
    }
}

fn cross(u: Pt, v: Pt) -> (i64, i64) {
    let p = zmul((u[0], u[1]), (v[2], v[3]));
    let q = zmul((u[2], u[3]), (v[0], v[1]));
    (p.0 - q.0, p.1 - q.1)
}

fn dotp(u: Pt, v: Pt) -> (i64, i64) {
    let p = zmul((u[0], u[1]), (v[0], v[1]));
    let q = zmul((u[2], u[3]), (v[2], v[3]));
    (p.0 + q.0, p.1 + q.1)
}

fn orient(p: Pt, q: Pt, r: Pt) -> i64 {
    zsign(cross(diff(q, p), diff(r, p)))
}

fn on_segment(p: Pt, q: Pt, r: Pt) -> bool {
    orient(p, q, r) == 0 && zsign(dotp(diff(r, p), diff(r, q))) <= 0
}

fn segments_meet(p1: Pt, p2: Pt, p3: Pt, p4: Pt) -> bool {
    let (o1, o2, o3, o4) = (orient(p1, p2, p3), orient(p1, p2, p4), orient(p3, p4, p1), orient(p3, p4, p2));
    if o1 * o2 < 0 && o3 * o4 < 0 {
        return true;
    }
    on_segment(p1, p2, p3) || on_segment(p1, p2, p4) || on_segment(p3, p4, p1) || on_segment(p3, p4, p2)
}

/// Eight times the signed area, as `a + b sqrt3`.
fn area8(l: &[Pt]) -> (i64, i64) {
    let mut s = (0, 0);
    for i in 0..l.len() {
        let c = cross(l[i], l[(i + 1) % l.len()]);
        s = (s.0 + c.0, s.1 + c.1);
    }
    // doubled coordinates scale the shoelace sum 2 * area by 4
    s
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum TileSet {
    Triangles,
    SquaresAndTriangles,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Tile {
    square: bool,
    verts: Vec<Pt>,
}

fn make_tile(square: bool, mut verts: Vec<Pt>) -> Tile {
    verts.sort();
    Tile { square, verts }
}

fn cancel_spikes(l: &mut Vec<Pt>) {
    loop {
        let n = l.len();
        if n < 3 {
            if n <= 2 {
                l.clear();
            }
            return;
        }
        let spike = (0..n).find(|&i| l[(i + n - 1) % n] == l[(i + 1) % n]);
        match spike {
            Some(i) => {
                let j = (i + 1) % n;
                let (a, b) = (i.max(j), i.min(j));
                l.remove(a);
                l.remove(b);
            }
            None => return,
        }
    }
}

fn normalize(loops: Vec<Vec<Pt>>) -> Vec<Vec<Pt>> {
    let mut out = Vec::new();
    let mut work = loops;
    while let Some(mut l) = work.pop() {
        cancel_spikes(&mut l);
        if l.is_empty() {
            continue;
        }
        let n = l.len();
        let mut split = None;
        'outer: for i in 0..n {
            for j in i + 1..n {
                if l[i] == l[j] {
                    split = Some((i, j));
                    break 'outer;
                }
            }
        }
        match split {
            Some((i, j)) => {
                let inner: Vec<Pt> = l[i..j].to_vec();
                let mut outer: Vec<Pt> = l[j..].to_vec();
                outer.extend_from_slice(&l[..i]);
                work.push(inner);
                work.push(outer);
            }
            None => out.push(l),
        }
    }
    out.sort();
    out
}

fn valid(loops: &[Vec<Pt>]) -> bool {
    let mut segs = Vec::new();
    for l in loops {
        let a = area8(l);
        if zsign(a) <= 0 {
            return false;
        }
        for i in 0..l.len() {
            segs.push((l[i], l[(i + 1) % l.len()]));
        }
    }
    for i in 0..segs.len() {
        for j in i + 1..segs.len() {
            let (p1, p2) = segs[i];
            let (p3, p4) = segs[j];
            let shared = [p1, p2].iter().filter(|p| **p == p3 || **p == p4).count();
            if shared == 2 {
                return false;
            }
            if shared == 0 && segments_meet(p1, p2, p3, p4) {
                return false;
            }
        }
    }
    true
}

fn tile_all(loops: Vec<Vec<Pt>>, placed: &mut Vec<Tile>, squares: bool, out: &mut BTreeSet<Vec<Tile>>) {
    if loops.is_empty() {
        let mut t = placed.clone();
        t.sort();
        out.insert(t);
        return;
    }
    let first = &loops[0];
    let (a, b) = (first[0], first[1]);
    let d = direction(a, b);
    let mut options = vec![false];
    if squares {
        options.push(true);
    }
    for sq in options {
        let (inserted, tile) = if sq {
            let p = step(a, d + 3);
            let q = step(p, d);
            (vec![p, q], make_tile(true, vec![a, b, q, p]))
        } else {
            let c = step(a, d + 2);
            (vec![c], make_tile(false, vec![a, b, c]))
        };
        let mut nl = vec![a];
        nl.extend(inserted);
        nl.extend_from_slice(&first[1..]);
        let mut next = vec![nl];
        next.extend(loops[1..].iter().cloned());
        let next = normalize(next);
        if !valid(&next) {
            continue;
        }
        placed.push(tile);
        tile_all(next, placed, squares, out);
        placed.pop();
    }
}

/// A polygon given by its set of edge directions (multiples of 30 degrees),
/// with every edge-to-edge tiling of it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Jewel {
    pub directions: Vec<u8>,
    pub sides: usize,
    pub squares: usize,
    pub triangles: usize,
    pub tilings: usize,
    /// Every tiling puts two squares edge to edge, so no bouquet of atoms
    /// meeting only at the edge realizes it.
    pub adjacent_squares_forced: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JewelCatalog {
    pub tiles: TileSet,
    pub candidates: usize,
    pub jewels: Vec<Jewel>,
}

fn polygon(dirs: &[u8]) -> Vec<Pt> {
    let mut p = [0; 4];
    let mut out = Vec::new();
    for &k in dirs {
        out.push(p);
        p = step(p, k as i64);
    }
    out
}

fn canonical_mask(mask: u16) -> u16 {
    let mut best = u16::MAX;
    for r in 0..12 {
        for refl in [false, true] {
            let mut m = 0u16;
            for k in 0..12 {
                if mask >> k & 1 == 1 {
                    let img = if refl { (r + 12 - k) % 12 } else { (r + k) % 12 };
                    m |= 1 << img;
                }
            }
            best = best.min(m);
        }
    }
    best
}

fn adjacent_squares(tiling: &[Tile]) -> bool {
    let sq: Vec<&Tile> = tiling.iter().filter(|t| t.square).collect();
    sq.iter().enumerate().any(|(i, a)| sq[i + 1..].iter().any(|b| a.verts.iter().filter(|v| b.verts.contains(v)).count() == 2))
}

/// All strictly convex polygons with unit edges admitting a tiling, up to
/// rotation and reflection.
///
/// Corner angles are sums of 60 and 90 degree tile corners below 180, so
/// exterior turns are 30, 60, 90 or 120 degrees and each of the twelve
/// directions is used at most once. That makes the candidate list finite.
pub fn enumerate_jewels(tiles: TileSet) -> JewelCatalog {
    let squares = tiles == TileSet::SquaresAndTriangles;
    let mut seen = BTreeSet::new();
    for mask in 1u16..(1 << 12) {
        let dirs: Vec<u8> = (0..12u8).filter(|k| mask >> k & 1 == 1).collect();
        if dirs.len() < 3 {
            continue;
        }
        let gaps_ok = (0..dirs.len()).all(|i| {
            let g = (dirs[(i + 1) % dirs.len()] as i64 - dirs[i] as i64).rem_euclid(12);
            (1..=4).contains(&g)
        });
        let closes = dirs.iter().fold([0i64; 4], |p, &k| step(p, k as i64)) == [0; 4];
        if gaps_ok && closes {
            seen.insert(canonical_mask(mask));
        }
    }
    let candidates = seen.len();
    let mut jewels = Vec::new();
    for mask in seen {
        let dirs: Vec<u8> = (0..12u8).filter(|k| mask >> k & 1 == 1).collect();
        let poly = polygon(&dirs);
        let a = area8(&poly);
        // area = squares + triangles * sqrt3 / 4
        if a.0 % 8 != 0 || a.1 % 2 != 0 || (!squares && a.0 != 0) {
            continue;
        }
        let mut found = BTreeSet::new();
        tile_all(vec![poly], &mut Vec::new(), squares, &mut found);
        if found.is_empty() {
            continue;
        }
        jewels.push(Jewel {
            sides: dirs.len(),
            directions: dirs,
            squares: (a.0 / 8) as usize,
            triangles: (a.1 / 2) as usize,
            tilings: found.len(),
            adjacent_squares_forced: found.iter().all(|t| adjacent_squares(t)),
        });
    }
    jewels.sort_by_key(|j| (j.squares + j.triangles, j.sides, j.directions.clone()));
    JewelCatalog { tiles, candidates, jewels }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_sign() {
        assert_eq!(zsign((-1, 1)), 1);
        assert_eq!(zsign((2, -1)), 1);
        assert_eq!(zsign((-2, 1)), -1);
        assert_eq!(zsign((0, 0)), 0);
        assert_eq!(zsign((-5, 3)), 1);
    }

    #[test]
    fn unit_steps_have_unit_length() {
        for u in UNIT {
            assert_eq!(dotp(u, u), (4, 0));
        }
    }

    #[test]
    fn single_tiles() {
        let tri = polygon(&[0, 4, 8]);
        assert_eq!(area8(&tri), (0, 2));
        let sq = polygon(&[0, 3, 6, 9]);
        assert_eq!(area8(&sq), (8, 0));
    }

    #[test]
    fn triangle_jewels() {
        let c = enumerate_jewels(TileSet::Triangles);
        let sizes: Vec<usize> = c.jewels.iter().map(|j| j.triangles).collect();
        assert_eq!(sizes, vec![1, 2, 6]);
        assert!(c.jewels.iter().all(|j| j.squares == 0));
        assert_eq!(c.jewels[2].sides, 6);
    }

    #[test]
    fn square_triangle_jewels() {
        let c = enumerate_jewels(TileSet::SquaresAndTriangles);
        assert_eq!(c.jewels.len(), 11);
        assert_eq!(c.jewels.iter().map(|j| j.squares + j.triangles).max(), Some(18));
        let forced: Vec<&Jewel> = c.jewels.iter().filter(|j| j.adjacent_squares_forced).collect();
        assert_eq!(forced.len(), 1);
        assert_eq!((forced[0].squares, forced[0].triangles, forced[0].sides), (2, 6, 8));
        let tri: Vec<&Jewel> = c.jewels.iter().filter(|j| j.squares == 0).collect();
        assert_eq!(tri, enumerate_jewels(TileSet::Triangles).jewels.iter().collect::<Vec<_>>());
    }
}
