use std::collections::{HashMap, VecDeque};

use rayon::prelude::*;
use serde::Serialize;

use super::{build_sg_prime, enumerate_obstructing_loops, random_cocycle, Cocycle, CoverError, LoopCensus};
use crate::arith::Rational;
use crate::complex::SurfaceComplex;

/// splitmix64 of the seed advanced `trial + 1` steps.
pub fn trial_seed(seed: u64, trial: u64) -> u64 {
    let mut z = seed.wrapping_add((trial.wrapping_add(1)).wrapping_mul(0x9e37_79b9_7f4a_7c15));
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// The cyclic cover of `s` defined by `c`, restricted to the component of
/// vertex `(0, 0)`. Vertex `(v, t)` sits over `v` on sheet `t`; edge `e`
/// from `a` to `b` lifts to `(a, t) -> (b, t + c(e))`.
pub fn build_cover(s: &SurfaceComplex, c: &Cocycle) -> Result<SurfaceComplex, CoverError> {
    c.check(s)?;
    let n = c.modulus;
    let val = |e: usize| c.values[e].value();
    let mut around = vec![Vec::new(); s.num_vertices()];
    for (e, &(a, b)) in s.edges().iter().enumerate() {
        around[a].push((e, false));
        around[b].push((e, true));
    }
    let mut index: HashMap<(usize, u64), usize> = HashMap::new();
    let mut order = Vec::new();
    let mut queue = VecDeque::from([(0usize, 0u64)]);
    index.insert((0, 0), 0);
    order.push((0, 0));
    while let Some((v, t)) = queue.pop_front() {
        for &(e, rev) in &around[v] {
            let (a, b) = s.ends(e);
            let next = if rev { (a, (t + n - val(e)) % n) } else { (b, (t + val(e)) % n) };
            if let std::collections::hash_map::Entry::Vacant(e) = index.entry(next) {
                e.insert(order.len());
                order.push(next);
                queue.push_back(next);
            }
        }
    }
    let mut ends = Vec::new();
    let mut edge_index: HashMap<(usize, u64), usize> = HashMap::new();
    for (e, &(a, b)) in s.edges().iter().enumerate() {
        for &(v, t) in &order {
            if v == a {
                edge_index.insert((e, t), ends.len());
                ends.push((index[&(a, t)], index[&(b, (t + val(e)) % n)]));
            }
        }
    }
    let mut walks = Vec::new();
    for (f, w) in s.walks().iter().enumerate() {
        let start = s.corners(f)[0];
        for &(v, t0) in &order {
            if v != start {
                continue;
            }
            let mut t = t0;
            let mut lifted = Vec::with_capacity(w.len());
            for &(e, rev) in w {
                if rev {
                    t = (t + n - val(e)) % n;
                    lifted.push((edge_index[&(e, t)], true));
                } else {
                    lifted.push((edge_index[&(e, t)], false));
                    t = (t + val(e)) % n;
                }
            }
            walks.push(lifted);
        }
    }
    let cover = SurfaceComplex::new(order.len(), ends, walks)?;
    let chi = cover.f_vector().euler_characteristic();
    Ok(cover.with_genus(((2 - chi) / 2) as u64))
}

/// The cover is strongly regular exactly when no obstructing loop lifts to a
/// closed loop, that is when the cocycle is nonzero on every one.
pub fn strongly_regular_via_loops(census: &LoopCensus, c: &Cocycle) -> bool {
    census.loops.iter().all(|l| !c.evaluate(&l.walk()).is_zero())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TrialRecord {
    pub trial: u64,
    pub seed: u64,
    pub surjective: bool,
    pub vanishing_loops: usize,
    pub strongly_regular: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExperimentReport {
    pub g: u64,
    pub n: u64,
    pub trials: u64,
    pub seed: u64,
    pub loops: usize,
    pub successes: u64,
    #[serde(serialize_with = "crate::fvec::ser_rat")]
    pub fraction: Rational,
    /// `1 - L/n`, the union bound on the success probability.
    #[serde(serialize_with = "crate::fvec::ser_rat")]
    pub bound: Rational,
    pub surjective_trials: u64,
    pub surjective_successes: u64,
    pub log: Vec<TrialRecord>,
}

impl ExperimentReport {
    pub fn conditional_fraction(&self) -> Option<Rational> {
        (self.surjective_trials > 0)
            .then(|| Rational::new(self.surjective_successes.into(), self.surjective_trials.into()))
    }
}

fn run_trial(cover: &super::CoverSurface, census: &LoopCensus, n: u64, seed: u64, trial: u64) -> Result<TrialRecord, CoverError> {
    let s = trial_seed(seed, trial);
    let c = random_cocycle(&cover.homology, n, s)?;
    c.check(&cover.surface)?;
    let vanishing = census.loops.iter().filter(|l| c.evaluate(&l.walk()).is_zero()).count();
    Ok(TrialRecord { trial, seed: s, surjective: c.is_surjective(), vanishing_loops: vanishing, strongly_regular: vanishing == 0 })
}

/// Random `Z/n` covers of the `F_q` cover of `S_g`, judged by the
/// obstructing loops. Trial `i` uses `trial_seed(seed, i)`, so the log does
/// not depend on the thread count.
pub fn thm10_experiment(g: u64, n: u64, trials: u64, seed: u64) -> Result<ExperimentReport, CoverError> {
    let cover = build_sg_prime(g)?;
    let census = enumerate_obstructing_loops(&cover)?;
    let log: Vec<TrialRecord> =
        (0..trials).into_par_iter().map(|i| run_trial(&cover, &census, n, seed, i)).collect::<Result<_, _>>()?;
    let successes = log.iter().filter(|r| r.strongly_regular).count() as u64;
    let surjective_trials = log.iter().filter(|r| r.surjective).count() as u64;
    let surjective_successes = log.iter().filter(|r| r.surjective && r.strongly_regular).count() as u64;
    let loops = census.count();
    Ok(ExperimentReport {
        g,
        n,
        trials,
        seed,
        loops,
        successes,
        fraction: if trials == 0 { Rational::from_integer(0.into()) } else { Rational::new(successes.into(), trials.into()) },
        bound: Rational::from_integer(1.into()) - Rational::new((loops as u64).into(), n.into()),
        surjective_trials,
        surjective_successes,
        log,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub g: u64,
    pub n: u64,
    pub trials: u64,
    pub agreements: u64,
    pub strongly_regular: u64,
}

impl OracleReport {
    pub fn all_agree(&self) -> bool {
        self.agreements == self.trials
    }
}

/// Build each random cover explicitly and compare the face-poset strong
/// regularity check with the loop criterion.
pub fn oracle_agreement(g: u64, n: u64, trials: u64, seed: u64) -> Result<OracleReport, CoverError> {
    let cover = build_sg_prime(g)?;
    let census = enumerate_obstructing_loops(&cover)?;
    let results: Vec<(bool, bool)> = (0..trials)
        .into_par_iter()
        .map(|i| -> Result<(bool, bool), CoverError> {
            let c = random_cocycle(&cover.homology, n, trial_seed(seed, i))?;
            let lifted = build_cover(&cover.surface, &c)?;
            Ok((strongly_regular_via_loops(&census, &c), lifted.is_strongly_regular()?))
        })
        .collect::<Result<_, _>>()?;
    Ok(OracleReport {
        g,
        n,
        trials,
        agreements: results.iter().filter(|(a, b)| a == b).count() as u64,
        strongly_regular: results.iter().filter(|(_, b)| *b).count() as u64,
    })
}

#[cfg(test)]
mod tests {
    use super::super::build_sg_prime;
    use super::*;
    use crate::complex::FVector;

    #[test]
    fn seeds_differ() {
        assert_ne!(trial_seed(7, 0), trial_seed(7, 1));
        assert_ne!(trial_seed(7, 0), trial_seed(8, 0));
        assert_eq!(trial_seed(7, 3), trial_seed(7, 3));
    }

    #[test]
    fn trivial_cocycle_gives_the_base() {
        let s = build_sg_prime(1).unwrap();
        let census = enumerate_obstructing_loops(&s).unwrap();
        let c = Cocycle::zero(&s.homology, 16).unwrap();
        let cover = build_cover(&s.surface, &c).unwrap();
        assert_eq!(cover.f_vector(), s.surface.f_vector());
        assert!(!strongly_regular_via_loops(&census, &c));
        assert!(!cover.is_strongly_regular().unwrap());
    }

    #[test]
    fn surjective_cover_has_full_fibres() {
        let s = build_sg_prime(1).unwrap();
        let c = Cocycle::from_generators(&s.homology, 128, vec![1, 0]).unwrap();
        assert!(c.is_surjective());
        let cover = build_cover(&s.surface, &c).unwrap();
        assert_eq!(cover.f_vector(), FVector::from([640, 1280, 640]));
        assert!(cover.is_regular());
        assert_eq!(cover.genus(), Some(1));
    }

    #[test]
    fn non_surjective_component() {
        let s = build_sg_prime(1).unwrap();
        let c = Cocycle::from_generators(&s.homology, 12, vec![4, 8]).unwrap();
        assert!(!c.is_surjective());
        let cover = build_cover(&s.surface, &c).unwrap();
        assert_eq!(cover.f_vector(), FVector::from([15, 30, 15]));
    }

    #[test]
    fn oracle_small() {
        let r = oracle_agreement(1, 16, 50, 1).unwrap();
        assert!(r.all_agree(), "{r:?}");
        assert!(r.strongly_regular > 0 && r.strongly_regular < 50);
    }

    #[test]
    fn experiment_is_deterministic() {
        let a = thm10_experiment(1, 32, 20, 5).unwrap();
        let b = thm10_experiment(1, 32, 20, 5).unwrap();
        assert_eq!(a, b);
        let z = thm10_experiment(1, 1, 10, 5).unwrap();
        assert_eq!(z.successes, 0);
    }
}
