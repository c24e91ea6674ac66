use std::process::{Command, Output};

fn fatlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fatlab")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut a = args.to_vec();
    a.push("--json");
    let o = fatlab(&a);
    serde_json::from_slice(&o.stdout).expect("valid json")
}

#[test]
fn fvector_of_e_600_cell() {
    let o = fatlab(&["fvector", "720", "3600", "3600", "720"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("fatness   5\n"), "{s}");
    assert!(s.contains("euler     0\n"), "{s}");
}

#[test]
fn fvector_json_has_exact_and_decimal_fatness() {
    let v = json(&["fvector", "16", "32", "24", "8"]);
    assert_eq!(v["data"]["fatness"], "7/3");
    assert_eq!(v["data"]["fatness_decimal"], "2.333333");
}

#[test]
fn non_sphere_fails_its_claim() {
    let o = fatlab(&["fvector", "5", "9", "5"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("not a 3-polytope"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(fatlab(&["nonsense"]).status.code(), Some(2));
    assert_eq!(fatlab(&["fvector", "1"]).status.code(), Some(2));
    assert_eq!(fatlab(&["covers", "loops", "--g", "0"]).status.code(), Some(2));
    assert_eq!(fatlab(&["verify-all", "--only", "16"]).status.code(), Some(2));
}

#[test]
fn prop5_table_row() {
    let o = fatlab(&["compounds", "prop5"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("#  |  1  1  3  3  6  3  2  1  1 | 21"), "{s}");
    let v = json(&["compounds", "prop5"]);
    assert_eq!(v["data"]["orbits"].as_array().unwrap().len(), 21);
}

#[test]
fn corona_family_json() {
    let v = json(&["econ", "--family", "corona"]);
    assert_eq!(v["data"]["family"], "corona");
    assert_eq!(v["data"]["fatness"], "3221/638");
    assert_eq!(v["data"]["fatness_decimal"], "5.048589");
    assert_eq!(v["data"]["kissing"], "7656/607");
    assert!(v["claims"].as_array().unwrap().iter().all(|c| c["pass"] == true));
}

#[test]
fn claims_carry_sources() {
    let v = json(&["econ", "--family", "cut600", "--n", "4"]);
    let sources: Vec<&str> = v["claims"].as_array().unwrap().iter().map(|c| c["source"].as_str().unwrap()).collect();
    assert!(sources.contains(&"published") && sources.contains(&"trivial"));
}

#[test]
fn experiment_json_is_reproducible() {
    let args = ["covers", "experiment", "--g", "1", "--n", "32", "--trials", "40", "--seed", "11", "--json"];
    let a = fatlab(&args);
    let mut more = args.to_vec();
    more.extend(["--threads", "3"]);
    let b = fatlab(&more);
    assert_eq!(a.stdout, b.stdout);
    let c = fatlab(&["covers", "experiment", "--g", "1", "--n", "32", "--trials", "40", "--seed", "12", "--json"]);
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn zoo_writes_complex_and_coordinates() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cross.json");
    let o = fatlab(&["zoo", "cross", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let c: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(c["dim"], 3);
    let cells = c["cells"].as_array().unwrap();
    assert_eq!(cells.len(), 8 + 24 + 32 + 16);
    let coords: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("cross.coords.json")).unwrap()).unwrap();
    assert_eq!(coords["vertices"].as_array().unwrap().len(), 8);
    assert_eq!(coords["r2"], "1/2");
}

#[test]
fn out_flag_redirects_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let o = fatlab(&["covers", "thm2", "--g", "2", "--json", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["data"]["degrees"], serde_json::json!([12, 13, 13, 12]));
    assert_eq!(v["data"]["exponent"], "1/12");
}

#[test]
fn covers_commands_pass() {
    for args in [
        vec!["covers", "sgprime", "--g", "3"],
        vec!["covers", "loops", "--g", "2"],
        vec!["covers", "sausage", "--g", "1", "--slices", "10"],
        vec!["compounds", "jewels", "--tiles", "trisq"],
        vec!["compounds", "chain", "--kind", "cross", "--n", "2"],
        vec!["compounds", "ring10"],
        vec!["zoo", "600-cell"],
    ] {
        let o = fatlab(&args);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stdout(&o));
    }
}

#[test]
fn verify_all_subset() {
    let v = json(&["verify-all", "--only", "1,3,15", "--seed", "7"]);
    let checks = v["data"].as_array().unwrap();
    assert_eq!(checks.len(), 3);
    assert!(checks.iter().all(|c| c["pass"] == true));
}
