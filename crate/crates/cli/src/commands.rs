use std::collections::BTreeMap;
use std::fmt::Display;

use fatlab_core::arith::{rat, AnglePi, OrderedField, QuadNum, Rational};
use fatlab_core::complex::{CellComplex, FVector};
use fatlab_core::compounds::{
    build_cross_chain, build_cut600_chain, classify_simplex_compounds, cross_with_simplices, enumerate_cross_simplex_compounds,
    enumerate_jewels, facet_labels, ring_of_ten_check, Compound, RidgeVerdict, TileSet,
};
use fatlab_core::covers::{
    build_sg_prime, cap_fvector, enumerate_obstructing_loops, sausage_fvector, star_scan_count, theorem2_accounting,
    thm10_experiment, verify_lemma11, verify_lemma9, Theorem2Params,
};
use fatlab_core::fvec::{self, e_fvector_from_simple, e_fvector_from_simplicial};
use fatlab_core::verify;
use fatlab_core::zoo::{self, check_edge_tangent, ridge_angles, IntoQ5, Polytope};
use serde_json::json;

use crate::report::{decimal, show, Report, Source};
use crate::{ChainKind, Cli, Command, CompoundsCommand, CoversCommand, Family, Side, Tiles, ZooName};

type Res<T> = Result<T, Box<dyn std::error::Error>>;

pub fn run(cli: &Cli) -> Res<Report> {
    match &cli.command {
        Command::Fvector { counts } => fvector(counts),
        Command::Econ { counts, from, family, n, atoms, bonds, rings } => match family {
            Some(f) => econ_family(*f, *n, (*atoms, *bonds, *rings)),
            None => econ(counts, *from),
        },
        Command::Zoo { name, cuts } => zoo_report(*name, cuts, cli),
        Command::Compounds { command } => match command {
            CompoundsCommand::Prop4 => prop4(),
            CompoundsCommand::Prop5 => prop5(),
            CompoundsCommand::Jewels { tiles } => jewels(*tiles),
            CompoundsCommand::Chain { kind, n } => chain(*kind, *n),
            CompoundsCommand::Ring10 => ring10(),
        },
        Command::Covers { command } => match command {
            CoversCommand::Sgprime { g } => sgprime(*g),
            CoversCommand::Loops { g } => loops(*g),
            CoversCommand::Experiment { g, n, trials } => experiment(*g, *n, *trials, cli.seed),
            CoversCommand::Sausage { g, slices } => sausage(*g, *slices),
            CoversCommand::Thm2 { g, slice_exponent } => thm2(*g, *slice_exponent),
        },
        Command::VerifyAll { only } => verify_all(only, cli.seed),
    }
}

fn fv_json(f: &FVector) -> serde_json::Value {
    json!(f.counts().iter().map(|c| c.to_string()).collect::<Vec<_>>())
}

fn rat_json(r: &Rational) -> serde_json::Value {
    json!({ "exact": r.to_string(), "decimal": decimal(r) })
}

const KNOWN_FATNESS: [([u128; 4], i64, i64); 3] = [([5, 10, 10, 5], 2, 1), ([16, 32, 24, 8], 7, 3), ([720, 3600, 3600, 720], 5, 1)];

fn fvector(counts: &[u128]) -> Res<Report> {
    let f = FVector::new(counts.to_vec());
    let mut r = Report::new(format!("fvector {}", counts.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ")));
    let surface = f.len() == 3;
    let fat = if surface { f.fatness2()? } else { f.fatness3()? };
    let chi = f.euler_characteristic();
    r.line(format!("f-vector  {f}"));
    r.line(format!("fatness   {}", show(&fat)));
    r.line(format!("euler     {chi}"));
    let mut data = json!({ "fvector": fv_json(&f), "fatness": fat.to_string(), "fatness_decimal": decimal(&fat), "euler": chi });
    if surface {
        let st = fvec::steinitz_check(&f);
        r.line(format!("steinitz  {}", if st { "realizable as a 3-polytope" } else { "not a 3-polytope" }));
        data["steinitz"] = json!(st);
        r.claim("euler.sphere", Source::Trivial, 2, chi);
    } else {
        let (simple, simplicial) = (fvec::simple_ds_check(&f), fvec::simplicial_ds_check(&f));
        r.line(format!("simple Dehn-Sommerville      {}", yes(simple)));
        r.line(format!("simplicial Dehn-Sommerville  {}", yes(simplicial)));
        data["simple_ds"] = json!(simple);
        data["simplicial_ds"] = json!(simplicial);
        r.claim("euler.sphere", Source::Trivial, 0, chi);
        for (known, p, q) in KNOWN_FATNESS {
            if f.counts() == known {
                r.claim("fatness", Source::Published, rat(p, q), fat.clone());
            }
        }
    }
    r.data = data;
    Ok(r)
}

fn yes(b: bool) -> &'static str {
    if b {
        "holds"
    } else {
        "fails"
    }
}

fn econ(counts: &[u128], from: Side) -> Res<Report> {
    if counts.len() != 4 {
        return Err("econ needs four counts or --family".into());
    }
    let f = FVector::new(counts.to_vec());
    let (e, side) = match from {
        Side::Simplicial => (e_fvector_from_simplicial(&f)?, "simplicial"),
        Side::Simple => (e_fvector_from_simple(&f)?, "simple"),
    };
    let mut r = Report::new(format!("econ --from {side} {f}"));
    r.line(format!("input ({side})  {f}"));
    r.line(format!("E f-vector        {}", e.fvector));
    r.line(format!("E fatness         {}", show(&e.fatness)));
    let dual = match from {
        Side::Simplicial => e_fvector_from_simple(&f.reversed())?,
        Side::Simple => e_fvector_from_simplicial(&f.reversed())?,
    };
    r.claim("econ.dual_route", Source::Derived, e.fvector.to_string(), dual.fvector.to_string());
    let known: [(Side, [u128; 4], [u128; 4], Source); 3] = [
        (Side::Simplicial, [120, 720, 1200, 600], [720, 3600, 3600, 720], Source::Published),
        (Side::Simple, [600, 1200, 720, 120], [720, 3600, 3600, 720], Source::Published),
        (Side::Simple, [16, 32, 24, 8], [24, 96, 96, 24], Source::Trivial),
    ];
    for (s, input, out, src) in known {
        if std::mem::discriminant(&s) == std::mem::discriminant(&from) && f.counts() == input {
            r.claim("econ.fvector", src, FVector::from(out).to_string(), e.fvector.to_string());
        }
    }
    if let Ok(k) = fvec::kissing_average(&f) {
        if matches!(from, Side::Simplicial) {
            r.line(format!("kissing number    {}", show(&k)));
        }
    }
    r.data = json!({ "input": fv_json(&f), "from": side, "fvector": fv_json(&e.fvector), "fatness": e.fatness.to_string(), "fatness_decimal": decimal(&e.fatness) });
    Ok(r)
}

fn family_json(family: &str, n: u64, f: &FVector, fat: &Rational, kissing: Option<&Rational>) -> serde_json::Value {
    json!({
        "family": family,
        "n": n,
        "fvector": fv_json(f),
        "fatness": fat.to_string(),
        "fatness_decimal": decimal(fat),
        "kissing": kissing.map(|k| k.to_string()),
    })
}

fn econ_family(family: Family, n: u64, counts: (Option<u64>, Option<u64>, Option<u64>)) -> Res<Report> {
    match family {
        Family::Cross => {
            let c = fvec::cross_chain(n)?;
            let mut r = Report::new(format!("econ --family cross --n {n}"));
            let k = fvec::kissing_average(&c.filled)?;
            r.line(format!("chain of {n} cross polytopes, {} caulking simplices", 12 * (n - 1)));
            r.line(format!("bare compound     {}", c.base));
            r.line(format!("filled compound   {}", c.filled));
            r.line(format!("E f-vector        {}", c.e));
            r.line(format!("E fatness         {}", show(&c.fatness)));
            r.line(format!("kissing number    {}", show(&k)));
            r.line(format!("limit fatness     {}", show(&fvec::cross_chain_e().limit_fatness())));
            r.line("filled f_2, f_3 are 84n - 52, 42n - 26; the forms 84n - 54, 42n - 26 fail Euler".to_string());
            r.claim("cross.limit", Source::Published, rat(14, 3), fvec::cross_chain_e().limit_fatness());
            r.claim("cross.euler", Source::Trivial, 0, c.filled.euler_characteristic());
            r.claim_with(
                "cross.misprint_fails_euler",
                Source::Derived,
                "fails".into(),
                yes(fvec::cross_chain_filled_misprint().euler_identity()).into(),
                !fvec::cross_chain_filled_misprint().euler_identity(),
            );
            r.data = family_json("cross", n, &c.e, &c.fatness, Some(&k));
            r.data["compound"] = fv_json(&c.filled);
            Ok(r)
        }
        Family::Cut600 => {
            let c = fvec::cut600_chain(n)?;
            let mut r = Report::new(format!("econ --family cut600 --n {n}"));
            let lim = fvec::cut600_chain_e().limit_fatness();
            let q = fvec::cut600_chain_q().forms;
            let klim = rat(2 * q[1].0, q[0].0);
            r.line(format!("chain of {n} cut 600-cells"));
            r.line(format!("compound          {}", c.q));
            r.line(format!("E f-vector        {}", c.e));
            r.line(format!("E fatness         {}", show(&c.fatness)));
            r.line(format!("kissing number    {}", show(&c.kissing)));
            r.line(format!("limit fatness     {}", show(&lim)));
            r.line(format!("limit kissing     {}", show(&klim)));
            r.claim("cut600.limit", Source::Published, rat(560, 111), lim);
            r.claim("cut600.kissing_limit", Source::Published, rat(666, 53), klim);
            r.claim("cut600.euler", Source::Trivial, 0, c.q.euler_characteristic());
            if n == 1 {
                r.claim("cut600.n1", Source::Trivial, "(120, 720, 1200, 600)".to_string(), c.q.to_string());
            }
            r.data = family_json("cut600", n, &c.e, &c.fatness, Some(&c.kissing));
            r.data["compound"] = fv_json(&c.q);
            Ok(r)
        }
        Family::Corona => {
            let (a0, b0, r0) = fvec::corona_counts();
            let (a, b, rr) = (counts.0.unwrap_or(a0), counts.1.unwrap_or(b0), counts.2.unwrap_or(r0));
            let c = fvec::corona(a, b, rr)?;
            let mut r = Report::new(format!("econ --family corona --atoms {a} --bonds {b} --rings {rr}"));
            r.line(format!("atoms {a}, bonds {b}, rings {rr}"));
            r.line(format!("compound          {}", c.fvector));
            r.line(format!("E fatness         {}", show(&c.fatness)));
            r.line(format!("kissing number    {}", show(&c.kissing)));
            r.line(format!(
                "kissing below the sphere-packing bound {}: {}",
                fvec::kissing_bound(),
                fvec::below_kissing_bound(&c.kissing)
            ));
            if (a, b, rr) == (a0, b0, r0) {
                r.claim("corona.fvector", Source::Published, "(72840, 459360, 773040, 386520)".to_string(), c.fvector.to_string());
                r.claim("corona.fatness", Source::Published, rat(3221, 638), c.fatness.clone());
                r.claim("corona.kissing", Source::Published, rat(7656, 607), c.kissing.clone());
                let cap = fvec::cap_facets_from_total(a, b, 386520).unwrap_or_else(|| rat(0, 1));
                r.line(format!("simplicial facets per cap forced by f_3 = 386520: {cap} (a cap has 20; 30 would not fit)"));
                r.claim("corona.cap_facets", Source::Derived, rat(20, 1), cap);
            }
            let e = e_fvector_from_simplicial(&c.fvector)?;
            r.data = family_json("corona", a, &e.fvector, &c.fatness, Some(&c.kissing));
            r.data["compound"] = fv_json(&c.fvector);
            Ok(r)
        }
    }
}

fn complex_summary(r: &mut Report, c: &CellComplex) -> Res<FVector> {
    let f = c.f_vector();
    let fat = f.fatness3()?;
    r.line(format!("f-vector   {f}"));
    r.line(format!("fatness    {}", show(&fat)));
    r.line(format!("flag f_03  {}", c.flag_vector(&[0, 3])?));
    let mut sizes: BTreeMap<usize, usize> = BTreeMap::new();
    for &fc in c.cells_of_dim(3) {
        *sizes.entry(c.vertices_of(fc).len()).or_default() += 1;
    }
    r.line(format!(
        "facets by vertex count  {}",
        sizes.iter().map(|(k, v)| format!("{v} x {k}")).collect::<Vec<_>>().join(", ")
    ));
    r.claim("euler", Source::Trivial, 0, f.euler_characteristic());
    Ok(f)
}

fn polytope_report<F>(r: &mut Report, p: &Polytope<F>, r2: Option<F>, angle: Option<AnglePi>) -> Res<()>
where
    F: OrderedField + IntoQ5 + Display,
{
    complex_summary(r, p.lattice.complex())?;
    let t = check_edge_tangent(p)?;
    r.line(format!("edge-tangent  {} (r^2 = {})", t.tangent, t.r2));
    if let Some(want) = r2 {
        r.claim_with("tangency.r2", Source::Derived, want.to_string(), t.r2.to_string(), t.tangent && want == t.r2);
    }
    if t.tangent {
        let angles = ridge_angles(p)?;
        let mut hist: BTreeMap<String, usize> = BTreeMap::new();
        for a in angles.values() {
            *hist.entry(a.to_string()).or_default() += 1;
        }
        r.line(format!(
            "ridge angles  {}",
            hist.iter().map(|(a, n)| format!("{n} x {a}")).collect::<Vec<_>>().join(", ")
        ));
        if let Some(a) = angle {
            let got = if hist.len() == 1 { hist.keys().next().cloned().unwrap_or_default() } else { format!("{hist:?}") };
            r.claim("dihedral", Source::Published, a.to_string(), got);
        }
    }
    Ok(())
}

fn zoo_report(name: ZooName, cuts: &[usize], cli: &Cli) -> Res<Report> {
    let mut r = Report::new(format!("zoo {name:?}").to_lowercase());
    let q5 = |a: i64, b: i64, c: i64, d: i64| QuadNum::<5>::new(rat(a, 1), rat(b, 1)) / QuadNum::<5>::new(rat(c, 1), rat(d, 1));
    let (complex, coords) = match name {
        ZooName::Simplex => {
            let p = zoo::build_simplex4()?;
            polytope_report(&mut r, &p, Some(rat(3, 10)), Some(AnglePi::frac(1, 3)))?;
            (p.lattice.complex().clone(), Some(p.model.to_json()))
        }
        ZooName::Cross => {
            let p = zoo::build_cross4()?;
            polytope_report(&mut r, &p, Some(rat(1, 2)), Some(AnglePi::frac(1, 2)))?;
            (p.lattice.complex().clone(), Some(p.model.to_json()))
        }
        ZooName::Cube => {
            let p = zoo::build_cube4()?;
            polytope_report(&mut r, &p, None, None)?;
            r.claim("flag.f013", Source::Published, 192, p.lattice.complex().flag_vector(&[0, 1, 3])?);
            (p.lattice.complex().clone(), Some(p.model.to_json()))
        }
        ZooName::Cell600 => {
            let p = zoo::build_600cell()?;
            polytope_report(&mut r, &p, Some(q5(5, 2, 6, 2)), Some(AnglePi::frac(3, 5)))?;
            r.claim("fvector", Source::Derived, "(120, 720, 1200, 600)".to_string(), p.lattice.complex().f_vector().to_string());
            (p.lattice.complex().clone(), Some(p.model.to_json()))
        }
        ZooName::Cell120 => {
            let c = zoo::build_600cell()?.lattice.complex().dual();
            let f = complex_summary(&mut r, &c)?;
            r.claim("fvector", Source::Trivial, "(600, 1200, 720, 120)".to_string(), f.to_string());
            (c, None)
        }
        ZooName::Snub24 => {
            let p = zoo::build_snub24()?;
            polytope_report(&mut r, &p, None, None)?;
            r.claim("fvector", Source::Published, "(96, 432, 480, 144)".to_string(), p.lattice.complex().f_vector().to_string());
            (p.lattice.complex().clone(), Some(p.model.to_json()))
        }
        ZooName::Cut600 => {
            r.command = format!("zoo cut600 --cuts {}", cuts.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(","));
            let p = zoo::cut_600cell(cuts)?;
            polytope_report(&mut r, &p, None, None)?;
            if cuts.len() == 1 {
                r.claim("fvector", Source::Derived, "(119, 708, 1170, 581)".to_string(), p.lattice.complex().f_vector().to_string());
            }
            (p.lattice.complex().clone(), Some(p.model.to_json()))
        }
        ZooName::Cap => {
            let c = zoo::cap_complex()?;
            let f = c.f_vector();
            r.line(format!("f-vector   {f} (a ball: 12 boundary vertices, 20 boundary triangles)"));
            let tets = c.cells_of_dim(3).iter().filter(|&&t| c.vertices_of(t).len() == 4).count();
            r.claim("cap.simplicial_facets", Source::Derived, 20, tets);
            (c, None)
        }
    };
    r.data = json!({ "fvector": fv_json(&complex.f_vector()) });
    if let Some(path) = &cli.out {
        std::fs::write(path, serde_json::to_string_pretty(&complex.to_json())? + "\n")?;
        r.line(format!("complex written to {}", path.display()));
        if let Some(c) = coords {
            let side = path.with_extension("coords.json");
            std::fs::write(&side, serde_json::to_string_pretty(&c)? + "\n")?;
            r.line(format!("coordinates written to {}", side.display()));
        }
    }
    Ok(r)
}

fn prop4() -> Res<Report> {
    let s = classify_simplex_compounds()?;
    let mut r = Report::new("compounds prop4");
    r.line(format!("states explored {}, largest partial compound {} simplices", s.states_explored, s.largest_partial));
    r.line(format!("{:<6}  {:<20}  {:<6}  {:<24}  {}", "atoms", "f-vector", "convex", "E f-vector", "E fatness"));
    let mut rows = Vec::new();
    for c in &s.compounds {
        let e = e_fvector_from_simplicial(&c.fvector)?;
        r.line(format!("{:<6}  {:<20}  {:<6}  {:<24}  {}", c.atoms.len(), c.fvector.to_string(), c.convex, e.fvector.to_string(), show(&e.fatness)));
        rows.push(json!({ "atoms": c.atoms, "fvector": fv_json(&c.fvector), "convex": c.convex, "e_fvector": fv_json(&e.fvector), "fatness": e.fatness.to_string() }));
    }
    r.claim("prop4.count", Source::Published, 3, s.compounds.len());
    let fs: Vec<String> = s.compounds.iter().map(|c| c.fvector.to_string()).collect();
    r.claim("prop4.fvectors", Source::Derived, "(5, 10, 10, 5) (6, 14, 16, 8) (9, 27, 36, 18)".to_string(), fs.join(" "));
    if let Some(last) = s.compounds.last() {
        r.claim("prop4.ring_e", Source::Published, "(27, 108, 108, 27)".to_string(), e_fvector_from_simplicial(&last.fvector)?.fvector.to_string());
    }
    r.data = json!({ "compounds": rows, "states_explored": s.states_explored });
    Ok(r)
}

fn prop5() -> Res<Report> {
    let t = enumerate_cross_simplex_compounds();
    let mut r = Report::new("compounds prop5");
    let row = |head: &str, xs: &[usize], total: usize| {
        format!("{head:<2} | {} | {total}", xs.iter().map(|x| format!("{x:>2}")).collect::<Vec<_>>().join(" "))
    };
    r.line(format!("{:<2} | {} | Total", "k", (0..=8).map(|k| format!("{k:>2}")).collect::<Vec<_>>().join(" ")));
    r.line(row("#", &t.counts, t.total));
    r.line(String::new());
    r.line(format!("orientation-preserving symmetries only: {:?}, total {}", t.rotation_counts, t.rotation_total));
    r.line(format!("Burnside count {}; independent facet sets by size {:?}", t.burnside_total, t.raw_counts));
    let mut orbits = Vec::new();
    for rep in t.representatives.iter() {
        let c = cross_with_simplices(rep)?;
        let f = c.f_vector()?;
        let e = e_fvector_from_simplicial(&f)?;
        let glued: Vec<Vec<usize>> = rep.iter().map(|&m| facet_labels(m)).collect();
        orbits.push(json!({ "k": rep.len(), "glued_facets": glued, "fvector": fv_json(&f), "e_fvector": fv_json(&e.fvector), "fatness": e.fatness.to_string() }));
    }
    r.claim("prop5.table", Source::Published, "1,1,3,3,6,3,2,1,1".to_string(), t.counts.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(","));
    r.claim("prop5.total", Source::Published, 21, t.total);
    r.claim("prop5.burnside", Source::Derived, t.total, t.burnside_total);
    r.claim_with(
        "prop5.orbit_sizes",
        Source::Derived,
        format!("{:?}", t.raw_counts),
        format!("{:?}", t.orbit_size_sums),
        t.raw_counts == t.orbit_size_sums,
    );
    r.data = json!({ "counts": t.counts, "total": t.total, "rotation_counts": t.rotation_counts, "burnside_total": t.burnside_total, "orbits": orbits });
    Ok(r)
}

fn jewels(tiles: Tiles) -> Res<Report> {
    let set = match tiles {
        Tiles::Tri => TileSet::Triangles,
        Tiles::Trisq => TileSet::SquaresAndTriangles,
    };
    let cat = enumerate_jewels(set);
    let mut r = Report::new(format!("compounds jewels --tiles {}", if matches!(tiles, Tiles::Tri) { "tri" } else { "trisq" }));
    r.line(format!("{} candidate polygons, {} jewels", cat.candidates, cat.jewels.len()));
    r.line(format!("{:<5}  {:<7}  {:<9}  {:<7}  {:<26}  {}", "sides", "squares", "triangles", "tilings", "edge directions", "note"));
    for j in &cat.jewels {
        let dirs = j.directions.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(" ");
        let note = if j.adjacent_squares_forced { "squares always adjacent" } else { "" };
        r.line(format!("{:<5}  {:<7}  {:<9}  {:<7}  {:<26}  {}", j.sides, j.squares, j.triangles, j.tilings, dirs, note));
    }
    let want = if matches!(tiles, Tiles::Tri) { 3 } else { 11 };
    r.claim("jewels.count", Source::Published, want, cat.jewels.len());
    if matches!(tiles, Tiles::Trisq) {
        let tri = enumerate_jewels(TileSet::Triangles);
        let restricted: Vec<_> = cat.jewels.iter().filter(|j| j.squares == 0).cloned().collect();
        r.claim("jewels.triangle_restriction", Source::Derived, tri.jewels.len(), restricted.len());
        let forced = cat.jewels.iter().filter(|j| j.adjacent_squares_forced).count();
        r.claim("jewels.adjacent_squares", Source::Published, 1, forced);
    }
    r.data = serde_json::to_value(&cat)?;
    Ok(r)
}

fn compound_lines(r: &mut Report, c: &Compound) -> Res<FVector> {
    let f = c.f_vector()?;
    let conv = c.check_convex()?;
    let e = e_fvector_from_simplicial(&f)?;
    r.line(format!("atoms        {}", c.num_atoms()));
    r.line(format!("f-vector     {f}"));
    r.line(format!(
        "ridges       {} convex, {} flat, {} reflex",
        conv.count(RidgeVerdict::StrictlyConvex),
        conv.count(RidgeVerdict::Flat),
        conv.count(RidgeVerdict::Reflex)
    ));
    r.line(format!("closed       {}", c.boundary_is_closed()?));
    r.line(format!("E f-vector   {}", e.fvector));
    r.line(format!("E fatness    {}", show(&e.fatness)));
    Ok(f)
}

fn chain(kind: ChainKind, n: usize) -> Res<Report> {
    if n == 0 {
        return Err("chain length must be at least 1".into());
    }
    match kind {
        ChainKind::Cross => {
            let (bare, filled) = build_cross_chain(n)?;
            let mut r = Report::new(format!("compounds chain --kind cross --n {n}"));
            r.line("bare chain".to_string());
            let fb = compound_lines(&mut r, &bare)?;
            r.line(String::new());
            r.line("caulked chain".to_string());
            let ff = compound_lines(&mut r, &filled)?;
            let conv = filled.check_convex()?;
            r.claim("chain.bare", Source::Published, fvec::cross_chain_base().eval(n as u64)?.to_string(), fb.to_string());
            r.claim("chain.filled", Source::Derived, fvec::cross_chain_filled().eval(n as u64)?.to_string(), ff.to_string());
            r.claim("chain.convex", Source::Derived, true, conv.convex);
            r.data = json!({ "kind": "cross", "n": n, "bare": fv_json(&fb), "filled": fv_json(&ff), "convex": conv.convex });
            Ok(r)
        }
        ChainKind::Cut600 => {
            let c = build_cut600_chain(n)?;
            let mut r = Report::new(format!("compounds chain --kind cut600 --n {n}"));
            let f = compound_lines(&mut r, &c)?;
            let conv = c.check_convex()?;
            r.claim("chain.fvector", Source::Published, fvec::cut600_chain_q().eval(n as u64)?.to_string(), f.to_string());
            r.claim("chain.convex", Source::Derived, true, conv.convex);
            r.data = json!({ "kind": "cut600", "n": n, "fvector": fv_json(&f), "convex": conv.convex });
            Ok(r)
        }
    }
}

fn ring10() -> Res<Report> {
    let c = ring_of_ten_check()?;
    let mut r = Report::new("compounds ring10");
    r.line(format!("ridge angle at a doubly cut ridge  {}", c.ridge_angle));
    r.line(format!("link triangle angles               {}", c.link_triangle.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(", ")));
    r.line(format!("ten around a triangle              {} (closes: {})", c.ten, c.ten_closes));
    r.line(format!("nine around a triangle             {} ({:?})", c.nine, c.nine_verdict));
    r.claim("ring10.angle", Source::Derived, AnglePi::frac(1, 5).to_string(), c.ridge_angle.to_string());
    r.claim("ring10.closes", Source::Derived, true, c.passed());
    r.data = serde_json::to_value(&c)?;
    Ok(r)
}

fn sgprime(g: u64) -> Res<Report> {
    let s = build_sg_prime(g)?;
    let rep = verify_lemma9(&s);
    let mut r = Report::new(format!("covers sgprime --g {g}"));
    r.line(format!("g = {g}, q = {}, f-vector {}, fatness {}", rep.q, rep.fvector, rep.fatness));
    r.line(format!("genus {}, first homology rank {}", s.cover_genus(), rep.homology_rank));
    r.line(format!("1-skeleton is K_{} (not K_{})", rep.skeleton_vertices, rep.skeleton_vertices + 1));
    for (k, i) in rep.items.iter().enumerate() {
        r.line(format!("  [{}] {} {}", k + 1, i.name, i.detail));
        r.claim_with(&format!("sgprime.{}", k + 1), Source::Published, "holds".into(), yes(i.pass).into(), i.pass);
    }
    r.claim("sgprime.homology_rank", Source::Derived, 2 * s.cover_genus() as usize, rep.homology_rank);
    r.data = serde_json::to_value(&rep)?;
    Ok(r)
}

fn loops(g: u64) -> Res<Report> {
    let s = build_sg_prime(g)?;
    let c = enumerate_obstructing_loops(&s)?;
    let l11 = verify_lemma11(&s, &c);
    let mut r = Report::new(format!("covers loops --g {g}"));
    r.line(format!("g = {g}, q = {}: {} obstructing loops", c.q, c.count()));
    r.line(format!("bound (4g+1)4g(4g-2)(4g-3)/4 = {}, coarse bound 64 g^4 = {}", c.bound, c.coarse_bound));
    r.line(format!("largest support {}, smallest split k(q-k) = {}", l11.max_support, l11.min_split));
    r.claim_with("loops.bound", Source::Published, format!("<= {}", c.bound), c.count().to_string(), c.count() as u64 <= c.bound);
    r.claim_with("loops.coarse", Source::Published, format!("< {}", c.coarse_bound), c.count().to_string(), (c.count() as u64) < c.coarse_bound);
    r.claim("loops.star_scan", Source::Derived, star_scan_count(&s.surface)?, c.count());
    r.claim("loops.indivisible", Source::Published, true, l11.all_indivisible);
    r.claim("loops.support", Source::Published, true, l11.support_below_4g);
    r.claim("loops.split", Source::Published, true, l11.split_at_least_4g);
    r.data = json!({ "census": c, "loop_classes": l11 });
    Ok(r)
}

fn experiment(g: u64, n: u64, trials: u64, seed: u64) -> Res<Report> {
    let e = thm10_experiment(g, n, trials, seed)?;
    let mut r = Report::new(format!("covers experiment --g {g} --n {n} --trials {trials} --seed {seed}"));
    r.line(format!("L({g}) = {}, union bound 1 - L/n = {}", e.loops, show(&e.bound)));
    r.line(format!("strongly regular covers {} of {}, fraction {}", e.successes, e.trials, show(&e.fraction)));
    if let Some(c) = e.conditional_fraction() {
        r.line(format!("among {} surjective cocycles: {} strongly regular, fraction {}", e.surjective_trials, e.surjective_successes, show(&c)));
    }
    let threshold = e.bound.clone() - rat(1, 10);
    r.claim_with("experiment.fraction", Source::Published, format!(">= {}", decimal(&threshold)), decimal(&e.fraction), e.fraction >= threshold);
    r.data = serde_json::to_value(&e)?;
    Ok(r)
}

fn sausage(g: u64, slices: u128) -> Res<Report> {
    if slices == 0 {
        return Err("at least one slice is needed".into());
    }
    let s = build_sg_prime(g)?;
    let core = s.surface.f_vector();
    let cap = cap_fvector(&core, 1)?;
    let rep = sausage_fvector(&core, slices, &cap, &cap)?;
    let next = sausage_fvector(&core, slices + 1, &cap, &cap)?;
    let mut r = Report::new(format!("covers sausage --g {g} --slices {slices}"));
    r.line(format!("core S'_{g}  {core}"));
    r.line(format!("each cap    {cap}"));
    r.line(format!("f-vector    {}", rep.fvector));
    r.line(format!("fatness     {}", show(&rep.fatness)));
    r.line(format!("limit       {}", show(&rep.limit)));
    r.line("cap edges are not counted, so the fatness shown is a lower bound".to_string());
    r.claim("sausage.limit", Source::Published, rat(2 * g as i64 + 1, 1), rep.limit.clone());
    r.claim("sausage.increasing", Source::Derived, true, next.fatness > rep.fatness);
    r.data = json!({ "g": g, "slices": slices.to_string(), "core": fv_json(&core), "cap": fv_json(&cap), "fvector": fv_json(&rep.fvector), "fatness": rat_json(&rep.fatness), "limit": rat_json(&rep.limit) });
    Ok(r)
}

fn thm2(g: u64, slice_exponent: u32) -> Res<Report> {
    let params = Theorem2Params { slice_exponent, ..Theorem2Params::default() };
    let t = theorem2_accounting(g, &params)?;
    let mut r = Report::new(format!("covers thm2 --g {g} --slice-exponent {slice_exponent}"));
    r.line(format!("g = {g} (using {} so that q = {} is a prime power), n = {}", t.g_used, t.q, t.n));
    r.line(format!("cover of genus {}  {}", t.cover_genus, t.cover_fvector));
    r.line(format!("each cap          {}", t.cap_fvector));
    r.line(format!("slices            {}", t.slices));
    r.line(format!("f-vector          {}", t.fvector));
    r.line(format!("fatness           {}", show(&t.fatness)));
    r.line(format!("limit fatness     {}", show(&t.limit_fatness)));
    r.line(format!("degrees in g      {:?}; fatness ~ {} g", t.degrees, t.fatness_constant));
    let d0 = t.degrees.first().copied().unwrap_or(0);
    r.claim("thm2.fatness_degree", Source::Published, 1, t.fatness_degree);
    r.claim("thm2.exponent", Source::Published, rat(1, 12), t.exponent.clone());
    if slice_exponent == 7 {
        r.claim("thm2.vertex_degree", Source::Published, 12, d0);
    }
    r.data = serde_json::to_value(&t)?;
    Ok(r)
}

fn verify_all(only: &[u32], seed: u64) -> Res<Report> {
    let ids: Vec<u32> = if only.is_empty() { (1..=15).collect() } else { only.to_vec() };
    if let Some(bad) = ids.iter().find(|&&i| !(1..=15).contains(&i)) {
        return Err(format!("no check {bad}").into());
    }
    let mut r = Report::new(format!("verify-all --seed {seed}"));
    let mut results = Vec::new();
    for id in ids {
        let c = verify::run_check(id, seed);
        r.line(c.line());
        if !c.pass {
            for d in &c.details {
                r.line(format!("      {d}"));
            }
        }
        r.claim_with(&format!("check.{id:02}"), Source::Derived, "pass".into(), if c.pass { "pass" } else { "fail" }.into(), c.pass);
        results.push(c);
    }
    r.data = serde_json::to_value(&results)?;
    Ok(r)
}
