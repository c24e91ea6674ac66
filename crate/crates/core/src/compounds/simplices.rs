//! Exhaustive search for compounds of 4-simplices whose edge links are all
//! triangle jewels.

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};

use serde::Serialize;

use super::{simplex_atom, Compound, CompoundError};
use crate::complex::FVector;

type Atom = [usize; 5];

fn facets(a: &Atom) -> impl Iterator<Item = [usize; 4]> + '_ {
    (0..5).map(move |skip| {
        let mut f = [0; 4];
        let mut k = 0;
        for (i, &v) in a.iter().enumerate() {
            if i != skip {
                f[k] = v;
                k += 1;
            }
        }
        f
    })
}

fn edges(a: &Atom) -> impl Iterator<Item = (usize, usize)> + '_ {
    (0..5).flat_map(move |i| (i + 1..5).map(move |j| (a[i], a[j])))
}

struct EdgeFan<'a> {
    atoms: Vec<&'a Atom>,
}

fn edge_fans(atoms: &[Atom]) -> BTreeMap<(usize, usize), EdgeFan<'_>> {
    let mut m: BTreeMap<(usize, usize), EdgeFan> = BTreeMap::new();
    for a in atoms {
        for e in edges(a) {
            m.entry(e).or_insert_with(|| EdgeFan { atoms: Vec::new() }).atoms.push(a);
        }
    }
    m
}

fn common(atoms: &[&Atom]) -> Vec<usize> {
    let mut c: Vec<usize> = atoms[0].to_vec();
    for a in &atoms[1..] {
        c.retain(|v| a.contains(v));
    }
    c
}

/// The outer pairs `{x, y}` of atoms `R + {x, y}` around a ridge `R`: a path
/// (`Some(false)`), a closed cycle (`Some(true)`), or neither (`None`).
fn fan_shape(atoms: &[&Atom], ridge: &[usize]) -> Option<bool> {
    let mut deg: BTreeMap<usize, usize> = BTreeMap::new();
    let mut pairs = Vec::new();
    for a in atoms {
        let outer: Vec<usize> = a.iter().copied().filter(|v| !ridge.contains(v)).collect();
        for &v in &outer {
            *deg.entry(v).or_default() += 1;
        }
        pairs.push((outer[0], outer[1]));
    }
    if deg.values().any(|&d| d > 2) {
        return None;
    }
    let cycle = deg.values().all(|&d| d == 2);
    // a cycle must be a single one through all outer vertices
    if cycle {
        let mut adj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for &(x, y) in &pairs {
            adj.entry(x).or_default().push(y);
            adj.entry(y).or_default().push(x);
        }
        let start = pairs[0].0;
        let (mut prev, mut cur, mut len) = (start, pairs[0].1, 1);
        while cur != start {
            let next = if adj[&cur][0] == prev { adj[&cur][1] } else { adj[&cur][0] };
            prev = cur;
            cur = next;
            len += 1;
        }
        if len != pairs.len() {
            return None;
        }
    }
    Some(cycle)
}

fn facet_counts(atoms: &[Atom]) -> BTreeMap<[usize; 4], usize> {
    let mut m = BTreeMap::new();
    for a in atoms {
        for f in facets(a) {
            *m.entry(f).or_default() += 1;
        }
    }
    m
}

/// Whether the simplices can still be completed to a compound whose edge
/// links are triangle jewels: every facet in at most two atoms, and the
/// atoms at any edge share a ridge through it, at most six of them, arranged
/// as part of a hexagon.
pub fn partial_valid(atoms: &[Vec<usize>]) -> bool {
    let atoms: Vec<Atom> = atoms.iter().map(|a| to_atom(a)).collect();
    partial_ok(&atoms)
}

fn to_atom(a: &[usize]) -> Atom {
    let mut x: Atom = a.try_into().expect("five vertices");
    x.sort_unstable();
    x
}

fn partial_ok(atoms: &[Atom]) -> bool {
    if facet_counts(atoms).values().any(|&c| c > 2) {
        return false;
    }
    for fan in edge_fans(atoms).values() {
        let k = fan.atoms.len();
        if k == 1 {
            continue;
        }
        let c = common(&fan.atoms);
        if k > 6 || c.len() < 3 {
            return false;
        }
        if k >= 3 {
            match fan_shape(&fan.atoms, &c) {
                None => return false,
                Some(true) if k != 6 => return false,
                _ => {}
            }
        }
    }
    true
}

/// Every edge link is a whole triangle jewel: one triangle, two sharing an
/// edge, or a closed hexagon.
fn complete_ok(atoms: &[Atom]) -> bool {
    if !partial_ok(atoms) {
        return false;
    }
    edge_fans(atoms).values().all(|fan| match fan.atoms.len() {
        1 => true,
        2 => common(&fan.atoms).len() == 4,
        6 => fan_shape(&fan.atoms, &common(&fan.atoms)) == Some(true),
        _ => false,
    })
}

fn refine_colors(atoms: &[Atom], n: usize) -> Vec<usize> {
    let mut color = vec![0usize; n];
    let mut classes = 1;
    loop {
        let sig: Vec<(usize, Vec<Vec<usize>>)> = (0..n)
            .map(|v| {
                let mut around: Vec<Vec<usize>> = atoms
                    .iter()
                    .filter(|a| a.contains(&v))
                    .map(|a| {
                        let mut c: Vec<usize> = a.iter().filter(|&&u| u != v).map(|&u| color[u]).collect();
                        c.sort_unstable();
                        c
                    })
                    .collect();
                around.sort();
                (color[v], around)
            })
            .collect();
        let ranks: BTreeSet<&(usize, Vec<Vec<usize>>)> = sig.iter().collect();
        let ranks: Vec<&(usize, Vec<Vec<usize>>)> = ranks.into_iter().collect();
        let new: Vec<usize> = sig.iter().map(|s| ranks.binary_search(&s).expect("present")).collect();
        let count = ranks.len();
        color = new;
        if count == classes {
            return color;
        }
        classes = count;
    }
}

/// Lexicographically least relabelled atom list over all labellings that
/// respect the refined vertex colours.
fn canonical(atoms: &[Atom], n: usize) -> Vec<Atom> {
    let color = refine_colors(atoms, n);
    let mut classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (v, &c) in color.iter().enumerate().take(n) {
        classes.entry(c).or_default().push(v);
    }
    let blocks: Vec<Vec<usize>> = classes.into_values().collect();
    let mut best: Option<Vec<Atom>> = None;
    let mut label = vec![usize::MAX; n];
    assign(&blocks, 0, 0, &mut label, &mut vec![false; n], atoms, &mut best);
    best.expect("at least one labelling")
}

fn assign(
    blocks: &[Vec<usize>],
    bi: usize,
    next: usize,
    label: &mut Vec<usize>,
    used: &mut Vec<bool>,
    atoms: &[Atom],
    best: &mut Option<Vec<Atom>>,
) {
    if bi == blocks.len() {
        let mut img: Vec<Atom> = atoms
            .iter()
            .map(|a| {
                let mut x = a.map(|v| label[v]);
                x.sort_unstable();
                x
            })
            .collect();
        img.sort_unstable();
        if best.as_ref().is_none_or(|b| img < *b) {
            *best = Some(img);
        }
        return;
    }
    let block = &blocks[bi];
    let base: usize = blocks[..bi].iter().map(|b| b.len()).sum();
    let placed = next - base;
    if placed == block.len() {
        assign(blocks, bi + 1, next, label, used, atoms, best);
        return;
    }
    for &v in block {
        if !used[v] {
            used[v] = true;
            label[v] = next;
            assign(blocks, bi, next + 1, label, used, atoms, best);
            used[v] = false;
            label[v] = usize::MAX;
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SimplexCompound {
    pub atoms: Vec<Vec<usize>>,
    pub fvector: FVector,
    pub convex: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SimplexSearch {
    pub compounds: Vec<SimplexCompound>,
    pub states_explored: usize,
    pub largest_partial: usize,
    pub atom_cap: usize,
}

/// Grow compounds one simplex at a time, gluing onto a free facet with a
/// fresh apex or any existing vertex, keeping only states whose edge links
/// still fit inside a triangle jewel. States are deduplicated up to
/// relabelling. The search must die out below `atom_cap`.
pub fn classify_simplex_compounds() -> Result<SimplexSearch, CompoundError> {
    const CAP: usize = 12;
    let start = vec![[0, 1, 2, 3, 4]];
    let mut seen: HashSet<Vec<Atom>> = HashSet::new();
    seen.insert(canonical(&start, 5));
    let mut queue = VecDeque::from([(start, 5usize)]);
    let mut found: BTreeSet<Vec<Atom>> = BTreeSet::new();
    let mut largest = 0;
    let mut explored = 0;
    while let Some((atoms, n)) = queue.pop_front() {
        explored += 1;
        largest = largest.max(atoms.len());
        assert!(atoms.len() < CAP, "simplex search reached the atom cap");
        if complete_ok(&atoms) {
            found.insert(canonical(&atoms, n));
        }
        let counts = facet_counts(&atoms);
        for (f, _) in counts.iter().filter(|(_, &c)| c == 1) {
            for apex in 0..=n {
                if f.contains(&apex) {
                    continue;
                }
                let mut a: Atom = [f[0], f[1], f[2], f[3], apex];
                a.sort_unstable();
                if atoms.contains(&a) {
                    continue;
                }
                let mut next = atoms.clone();
                next.push(a);
                if !partial_ok(&next) {
                    continue;
                }
                let m = if apex == n { n + 1 } else { n };
                if seen.insert(canonical(&next, m)) {
                    queue.push_back((next, m));
                }
            }
        }
    }
    let atom = simplex_atom()?;
    let mut compounds = Vec::new();
    for atoms in found {
        let c = Compound::from_labelled(atoms.iter().map(|a| (atom.clone(), a.to_vec())).collect())?;
        compounds.push(SimplexCompound {
            atoms: atoms.iter().map(|a| a.to_vec()).collect(),
            fvector: c.f_vector()?,
            convex: c.check_convex()?.convex,
        });
    }
    compounds.sort_by_key(|c| c.atoms.len());
    Ok(SimplexSearch { compounds, states_explored: explored, largest_partial: largest, atom_cap: CAP })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> Vec<Vec<usize>> {
        (0..6).map(|i| vec![0, 1, 2, 3 + i, 3 + (i + 1) % 6]).collect()
    }

    #[test]
    fn ring_is_complete() {
        let atoms: Vec<Atom> = ring().iter().map(|a| to_atom(a)).collect();
        assert!(complete_ok(&atoms));
        assert!(!complete_ok(&atoms[..5]));
        assert!(partial_ok(&atoms[..5]));
    }

    #[test]
    fn seventh_simplex_is_rejected() {
        let base = ring();
        let atoms: Vec<Atom> = base.iter().map(|a| to_atom(a)).collect();
        let counts = facet_counts(&atoms);
        for (f, _) in counts.iter().filter(|(_, &c)| c == 1) {
            for apex in 0..=9 {
                if f.contains(&apex) {
                    continue;
                }
                let mut next = base.clone();
                next.push(vec![f[0], f[1], f[2], f[3], apex]);
                if next.iter().filter(|a| to_atom(a) == to_atom(&next[6])).count() > 1 {
                    continue;
                }
                assert!(!partial_valid(&next), "{next:?}");
            }
        }
    }

    #[test]
    fn canonical_ignores_labels() {
        let a = vec![[0, 1, 2, 3, 4], [1, 2, 3, 4, 5]];
        let b = vec![[0, 2, 3, 4, 5], [1, 2, 3, 4, 5]];
        assert_eq!(canonical(&a, 6), canonical(&b, 6));
    }

    #[test]
    fn three_compounds() {
        let s = classify_simplex_compounds().unwrap();
        let f: Vec<FVector> = s.compounds.iter().map(|c| c.fvector.clone()).collect();
        assert_eq!(f, vec![FVector::from([5, 10, 10, 5]), FVector::from([6, 14, 16, 8]), FVector::from([9, 27, 36, 18])]);
        assert!(s.compounds.iter().all(|c| c.convex));
        assert!(s.largest_partial < s.atom_cap);
    }
}
