//! The fifteen end-to-end checks, each reported as a pass/fail line with
//! the values behind it.

use std::cmp::Ordering;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::arith::{int, rat, QuadNum, Rational};
use crate::complex::FVector;
use crate::compounds::{
    build_cross_chain, build_cut600_chain, classify_simplex_compounds, enumerate_cross_simplex_compounds, enumerate_jewels,
    TileSet,
};
use crate::covers::{
    build_sg_prime, cap_fvector, enumerate_obstructing_loops, oracle_agreement, sausage_fvector, theorem2_accounting, thm10_experiment,
    verify_lemma11, verify_lemma9, Theorem2Params,
};
use crate::fvec::{self, e_fvector_from_simple, e_fvector_from_simplicial};
use crate::zoo::{self, check_edge_tangent, hyperbolic_dihedral_cos2, Polytope, Q5};

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub id: u32,
    pub title: &'static str,
    pub pass: bool,
    pub details: Vec<String>,
    #[serde(skip)]
    pub seconds: f64,
}

impl CheckResult {
    pub fn line(&self) -> String {
        format!("{} {:>2} {} ({:.1}s)", if self.pass { "PASS" } else { "FAIL" }, self.id, self.title, self.seconds)
    }
}

type Outcome = Result<(bool, Vec<String>), String>;

struct Log {
    ok: bool,
    lines: Vec<String>,
}

impl Log {
    fn new() -> Self {
        Log { ok: true, lines: Vec::new() }
    }

    fn check(&mut self, pass: bool, what: impl Into<String>) {
        let what = what.into();
        self.lines.push(format!("[{}] {what}", if pass { "ok" } else { "FAILED" }));
        self.ok &= pass;
    }

    fn eq<T: PartialEq + std::fmt::Display>(&mut self, what: &str, got: T, want: T) {
        let pass = got == want;
        self.check(pass, format!("{what}: {got} (expected {want})"));
    }

    fn done(self) -> Outcome {
        Ok((self.ok, self.lines))
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn within(log: &mut Log, start: Instant, limit: Duration) {
    let t = start.elapsed();
    log.check(t < limit, format!("runtime {:.1}s < {}s", t.as_secs_f64(), limit.as_secs()));
}

fn c1() -> Outcome {
    let mut log = Log::new();
    log.eq("fatness (5,10,10,5)", FVector::from([5, 10, 10, 5]).fatness3().map_err(err)?, rat(2, 1));
    log.eq("fatness (16,32,24,8)", FVector::from([16, 32, 24, 8]).fatness3().map_err(err)?, rat(7, 3));
    let f600 = zoo::build_600cell().map_err(err)?.lattice.complex().f_vector();
    let e = e_fvector_from_simplicial(&f600).map_err(err)?;
    log.eq("E(600-cell)", e.fvector.clone(), FVector::from([720, 3600, 3600, 720]));
    log.eq("fatness of E(600-cell)", e.fatness, rat(5, 1));
    log.done()
}

fn c2() -> Outcome {
    let mut log = Log::new();
    let cube = zoo::build_cube4().map_err(err)?.lattice.complex().f_vector();
    log.eq("E from 4-cube", e_fvector_from_simple(&cube).map_err(err)?.fvector, FVector::from([24, 96, 96, 24]));
    let f120 = zoo::build_600cell().map_err(err)?.lattice.complex().dual().f_vector();
    log.eq("120-cell", f120.clone(), FVector::from([600, 1200, 720, 120]));
    log.eq("E from 120-cell", e_fvector_from_simple(&f120).map_err(err)?.fvector, FVector::from([720, 3600, 3600, 720]));
    let simplicial = [
        ("simplex", zoo::build_simplex4().map_err(err)?.lattice.complex().f_vector()),
        ("cross polytope", zoo::build_cross4().map_err(err)?.lattice.complex().f_vector()),
        ("600-cell", zoo::build_600cell().map_err(err)?.lattice.complex().f_vector()),
    ];
    for (name, f) in simplicial {
        let a = e_fvector_from_simplicial(&f).map_err(err)?;
        let b = e_fvector_from_simple(&f.reversed()).map_err(err)?;
        log.check(a == b, format!("dual routes agree on {name}: {} / {}", a.fvector, a.fatness));
    }
    let b = e_fvector_from_simple(&cube).map_err(err)?;
    let a = e_fvector_from_simplicial(&cube.reversed()).map_err(err)?;
    log.check(a == b, format!("dual routes agree on 4-cube: {} / {}", a.fvector, a.fatness));
    log.done()
}

fn c3() -> Outcome {
    let mut log = Log::new();
    let start = Instant::now();
    let t = enumerate_cross_simplex_compounds();
    log.check(t.counts == vec![1, 1, 3, 3, 6, 3, 2, 1, 1], format!("orbits by k: {:?}", t.counts));
    log.eq("total", t.total, 21);
    log.eq("Burnside count", t.burnside_total, 21);
    log.check(t.orbit_size_sums == t.raw_counts, format!("orbit sizes sum to raw counts {:?}", t.raw_counts));
    log.lines.push(format!("rotations only: {:?} (total {})", t.rotation_counts, t.rotation_total));
    within(&mut log, start, Duration::from_secs(60));
    log.done()
}

fn c4() -> Outcome {
    let mut log = Log::new();
    let start = Instant::now();
    let tri = enumerate_jewels(TileSet::Triangles);
    let mixed = enumerate_jewels(TileSet::SquaresAndTriangles);
    log.eq("triangle jewels", tri.jewels.len(), 3);
    log.eq("square-triangle jewels", mixed.jewels.len(), 11);
    let restricted: Vec<_> = mixed.jewels.iter().filter(|j| j.squares == 0).cloned().collect();
    log.check(restricted == tri.jewels, "triangle-only part of the mixed catalog equals the triangle catalog");
    let forced = mixed.jewels.iter().filter(|j| j.adjacent_squares_forced).count();
    log.eq("jewels whose tilings all have adjacent squares", forced, 1);
    within(&mut log, start, Duration::from_secs(120));
    log.done()
}

fn c5() -> Outcome {
    let mut log = Log::new();
    let s = classify_simplex_compounds().map_err(err)?;
    log.eq("simplex compounds", s.compounds.len(), 3);
    let fs: Vec<String> = s.compounds.iter().map(|c| c.fvector.to_string()).collect();
    log.check(
        s.compounds.iter().map(|c| c.fvector.clone()).collect::<Vec<_>>()
            == vec![FVector::from([5, 10, 10, 5]), FVector::from([6, 14, 16, 8]), FVector::from([9, 27, 36, 18])],
        format!("f-vectors {}", fs.join(" ")),
    );
    log.check(s.compounds.iter().all(|c| c.convex), "all three are convex");
    if let Some(last) = s.compounds.last() {
        log.eq("E of the ring of six", e_fvector_from_simplicial(&last.fvector).map_err(err)?.fvector, FVector::from([27, 108, 108, 27]));
    }
    log.done()
}

fn vertex_facet_counts(p: &Polytope<Q5>) -> Vec<usize> {
    let n = p.model.vertices.len();
    (0..n).map(|v| p.lattice.facets().iter().filter(|&&f| p.lattice.vertex_bits(f) >> v & 1 == 1).count()).collect()
}

fn ico_ridges(p: &Polytope<Q5>) -> Result<usize, String> {
    let mut n = 0;
    for &r in p.lattice.ridges() {
        let (a, b) = p.lattice.ridge_facets(r).map_err(err)?;
        if p.lattice.facet_size(a) == 12 && p.lattice.facet_size(b) == 12 {
            n += 1;
        }
    }
    Ok(n)
}

fn c6() -> Outcome {
    let mut log = Log::new();
    let p600 = zoo::build_600cell().map_err(err)?;
    log.eq("600-cell", p600.lattice.complex().f_vector(), FVector::from([120, 720, 1200, 600]));
    log.check(vertex_facet_counts(&p600).iter().all(|&c| c == 20), "every 600-cell vertex lies in 20 facets");
    let snub = zoo::build_snub24().map_err(err)?;
    log.eq("snub 24-cell", snub.lattice.complex().f_vector(), FVector::from([96, 432, 480, 144]));
    log.eq("icosahedron-icosahedron ridges of the snub 24-cell", ico_ridges(&snub)?, 96);
    let cut = zoo::cut_600cell(&[0]).map_err(err)?;
    let f = cut.lattice.complex().f_vector();
    log.eq("600-cell cut once", f.clone(), FVector::from([119, 708, 1170, 581]));
    log.check(f.euler_check(None), "Euler characteristic 0");
    log.done()
}

fn c7() -> Outcome {
    let mut log = Log::new();
    let simplex = zoo::build_simplex4().map_err(err)?;
    let t = check_edge_tangent(&simplex).map_err(err)?;
    log.check(t.tangent && t.r2 == rat(3, 10), format!("simplex edge-tangent, r^2 = {}", t.r2));
    let all = simplex.lattice.ridges().iter().all(|&r| {
        hyperbolic_dihedral_cos2(&simplex.lattice, r, &t.r2).ok() == Some((rat(1, 4), Ordering::Greater))
    });
    log.check(all, "simplex: (cos^2, sign) = (1/4, +) on every ridge");

    let cross = zoo::build_cross4().map_err(err)?;
    let t = check_edge_tangent(&cross).map_err(err)?;
    log.check(t.tangent && t.r2 == rat(1, 2), format!("cross polytope edge-tangent, r^2 = {}", t.r2));
    let all = cross
        .lattice
        .ridges()
        .iter()
        .all(|&r| hyperbolic_dihedral_cos2(&cross.lattice, r, &t.r2).map(|x| x.0 == rat(0, 1)).unwrap_or(false));
    log.check(all, "cross polytope: cos^2 = 0 on every ridge");

    let p600 = zoo::build_600cell().map_err(err)?;
    let t = check_edge_tangent(&p600).map_err(err)?;
    let r2 = QuadNum::new(int(5), int(2)) / QuadNum::new(int(6), int(2));
    log.check(t.tangent && t.r2 == r2, format!("600-cell edge-tangent, r^2 = {}", t.r2));
    let c = QuadNum::<5>::new(rat(1, 4), rat(-1, 4));
    let want = (c.clone() * c, Ordering::Less);
    let all = p600.lattice.ridges().iter().all(|&r| hyperbolic_dihedral_cos2(&p600.lattice, r, &t.r2).ok() == Some(want.clone()));
    log.check(all, "600-cell: (cos^2, sign) = (((1 - sqrt5)/4)^2, -) on every ridge");
    log.done()
}

fn c8() -> Outcome {
    let mut log = Log::new();
    for n in 1..=5u64 {
        let (_, filled) = build_cross_chain(n as usize).map_err(err)?;
        let f = filled.f_vector().map_err(err)?;
        let want = fvec::cross_chain_filled().eval(n).map_err(err)?;
        log.check(f == want, format!("cross chain n = {n}: built {f}, formula {want}"));
    }
    log.check(
        fvec::cross_chain_filled().euler_identity() && !fvec::cross_chain_filled_misprint().euler_identity(),
        "84n-52, 42n-26 satisfy Euler; the quoted 84n-54 does not",
    );
    log.eq("E limit fatness of the cross chain", fvec::cross_chain_e().limit_fatness(), rat(14, 3));
    log.eq("cut-600 chain at n = 1", fvec::cut600_chain_q().eval(1).map_err(err)?, FVector::from([120, 720, 1200, 600]));
    let built = build_cut600_chain(2).map_err(err)?.f_vector().map_err(err)?;
    log.eq("cut-600 chain at n = 2, built", built, fvec::cut600_chain_q().eval(2).map_err(err)?);
    log.eq("E limit fatness of the cut-600 chain", fvec::cut600_chain_e().limit_fatness(), rat(560, 111));
    let q = fvec::cut600_chain_q().forms;
    log.eq("limit kissing number", rat(2 * q[1].0, q[0].0), rat(666, 53));
    log.done()
}

fn c9() -> Outcome {
    let mut log = Log::new();
    let (a, b, r) = fvec::corona_counts();
    log.check((a, b, r) == (697, 792, 96), format!("corona counts ({a}, {b}, {r})"));
    let c = fvec::corona(a, b, r).map_err(err)?;
    log.eq("corona f-vector", c.fvector.clone(), FVector::from([72840, 459360, 773040, 386520]));
    log.eq("fatness", c.fatness.clone(), rat(3221, 638));
    log.eq("kissing number", c.kissing.clone(), rat(7656, 607));
    let cap = zoo::cap_complex().map_err(err)?;
    let tets = cap.cells_of_dim(3).iter().filter(|&&f| cap.vertices_of(f).len() == 4).count();
    let forced = fvec::cap_facets_from_total(a, b, 386520).unwrap_or_else(|| rat(0, 1));
    log.check(
        forced == Rational::from_integer((tets as i64).into()),
        format!("cap has {tets} simplicial facets, as forced by f_3 = 386520 (not 30)"),
    );
    log.done()
}

fn c10() -> Outcome {
    let mut log = Log::new();
    for g in [1, 2, 3, 4, 7] {
        let s = build_sg_prime(g).map_err(err)?;
        let r = verify_lemma9(&s);
        let failed: Vec<&str> = r.items.iter().filter(|i| !i.pass).map(|i| i.name.as_str()).collect();
        log.check(r.all_pass(), format!("g = {g}, q = {}: f = {}, K_{} skeleton, failed {:?}", r.q, r.fvector, r.skeleton_vertices, failed));
    }
    log.done()
}

fn c11() -> Outcome {
    let mut log = Log::new();
    for g in [1, 2, 3] {
        let s = build_sg_prime(g).map_err(err)?;
        let c = enumerate_obstructing_loops(&s).map_err(err)?;
        log.check(
            c.within_bounds(),
            format!("g = {g}: L = {} <= {} and < {}", c.count(), c.bound, c.coarse_bound),
        );
        let r = verify_lemma11(&s, &c);
        log.check(r.passed(), format!("g = {g}: indivisible {} / support < 4g {} / k(q-k) >= 4g {}", r.all_indivisible, r.support_below_4g, r.split_at_least_4g));
    }
    log.done()
}

fn c12(seed: u64) -> Outcome {
    let mut log = Log::new();
    for (g, n, trials) in [(1, 16, 50), (2, 32, 20)] {
        let r = oracle_agreement(g, n, trials, seed).map_err(err)?;
        log.check(
            r.all_agree(),
            format!("g = {g}, n = {n}: {}/{} agree ({} strongly regular)", r.agreements, r.trials, r.strongly_regular),
        );
    }
    log.done()
}

fn c13(seed: u64) -> Outcome {
    let mut log = Log::new();
    let start = Instant::now();
    let r = thm10_experiment(1, 128, 200, seed).map_err(err)?;
    let threshold = r.bound.clone() - rat(1, 10);
    log.check(
        r.fraction >= threshold,
        format!("{}/{} strongly regular; need >= 1 - {}/128 - 0.10 = {}", r.successes, r.trials, r.loops, threshold),
    );
    log.check(r.loops <= 10, format!("L(1) = {}", r.loops));
    if let Some(c) = r.conditional_fraction() {
        log.lines.push(format!("surjective trials {}: fraction {}", r.surjective_trials, c));
    }
    within(&mut log, start, Duration::from_secs(120));
    log.done()
}

fn c14() -> Outcome {
    let mut log = Log::new();
    let s = build_sg_prime(1).map_err(err)?;
    for n in 1..=3usize {
        let direct = s.surface.product_with_path(n).map_err(err)?.f_vector();
        let formula = crate::complex::product_f_vector(&s.surface.f_vector(), n as u128).map_err(err)?;
        log.check(direct == formula, format!("S' x path({n}): {direct}"));
    }
    for g in 1..=3u64 {
        let core = build_sg_prime(g).map_err(err)?.surface.f_vector();
        let cap = cap_fvector(&core, 1).map_err(err)?;
        let fat: Vec<Rational> = (1..=50u128)
            .map(|n| sausage_fvector(&core, n, &cap, &cap).map(|r| r.fatness))
            .collect::<Result<_, _>>()
            .map_err(err)?;
        log.check(
            fat.windows(2).all(|w| w[0] < w[1]),
            format!("g = {g}, caps {cap}: fatness increases over N = 1..50, reaching {}", fat[49]),
        );
    }
    for g in 1..=4u64 {
        let c = build_sg_prime(g).map_err(err)?;
        let lim = sausage_fvector(&c.surface.f_vector(), 1, &FVector::from([0, 0, 0, 0]), &FVector::from([0, 0, 0, 0]))
            .map_err(err)?
            .limit;
        log.eq(&format!("limit fatness, g = {g}"), lim, rat(2 * g as i64 + 1, 1));
    }
    let p = Theorem2Params::default();
    let mut ok = true;
    for g in 1..=20 {
        let r = theorem2_accounting(g, &p).map_err(err)?;
        ok &= r.degrees == vec![12, 13, 13, 12] && r.fatness_degree == 1 && r.exponent == rat(1, 12);
    }
    log.check(ok, "g = 1..20: f-vector degrees (12, 13, 13, 12), fatness degree 1, exponent 1/12");
    let r = theorem2_accounting(1, &p).map_err(err)?;
    log.check(r.limit_fatness >= rat(2, 1), format!("g = 1: limit fatness {}", r.limit_fatness));
    log.done()
}

fn c15() -> Outcome {
    let mut log = Log::new();
    let cube = zoo::build_cube4().map_err(err)?;
    log.eq("f_013(4-cube)", cube.lattice.complex().flag_vector(&[0, 1, 3]).map_err(err)?, 192);
    log.eq("f_03(4-cube)", cube.lattice.complex().flag_vector(&[0, 3]).map_err(err)?, 64);
    log.check(fvec::steinitz_check(&FVector::from([4, 6, 4])), "Steinitz (4,6,4) holds");
    log.check(fvec::steinitz_check(&FVector::from([8, 12, 6])), "Steinitz (8,12,6) holds");
    log.check(!fvec::steinitz_check(&FVector::from([5, 9, 5])), "Steinitz (5,9,5) fails");
    log.done()
}

pub const TITLES: [&str; 15] = [
    "fatness values",
    "E-construction f-vectors",
    "cross polytope with simplices",
    "jewel catalogs",
    "compounds of simplices",
    "polytope zoo",
    "edge tangency and dihedral angles",
    "chains",
    "corona",
    "F_q cover structure",
    "obstructing loops",
    "loop criterion against direct check",
    "random covers",
    "sausage and vertex exponent",
    "flag vector and Steinitz",
];

/// Run one check by number (1 to 15).
pub fn run_check(id: u32, seed: u64) -> CheckResult {
    let start = Instant::now();
    let outcome = match id {
        1 => c1(),
        2 => c2(),
        3 => c3(),
        4 => c4(),
        5 => c5(),
        6 => c6(),
        7 => c7(),
        8 => c8(),
        9 => c9(),
        10 => c10(),
        11 => c11(),
        12 => c12(seed),
        13 => c13(seed),
        14 => c14(),
        15 => c15(),
        _ => Err(format!("no check {id}")),
    };
    let (pass, details) = match outcome {
        Ok(x) => x,
        Err(e) => (false, vec![format!("error: {e}")]),
    };
    let title = TITLES.get(id as usize - 1).copied().unwrap_or("unknown");
    CheckResult { id, title, pass, details, seconds: start.elapsed().as_secs_f64() }
}

pub fn run_all(seed: u64) -> Vec<CheckResult> {
    (1..=15).map(|id| run_check(id, seed)).collect()
}

