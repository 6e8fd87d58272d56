use std::path::Path;
use std::process::Command;

use halfplane::formats::{parse_polynomial, polynomial_from_value, polynomial_json};
use serde_json::{json, Value};

const FANO_LINES: [[usize; 3]; 7] = [[1, 2, 3], [3, 4, 5], [1, 5, 6], [1, 4, 7], [2, 5, 7], [3, 6, 7], [2, 4, 6]];

fn fano_json() -> Value {
    let mut bases = Vec::new();
    for a in 1..=7 {
        for b in a + 1..=7 {
            for c in b + 1..=7 {
                if !FANO_LINES.contains(&[a, b, c]) {
                    bases.push(vec![a, b, c]);
                }
            }
        }
    }
    json!({ "n": 7, "bases": bases })
}

fn triangle_json() -> Value {
    json!({ "n": 3, "edges": [{ "u": 1, "v": 2 }, { "u": 2, "v": 3 }, { "u": 1, "v": 3, "w": "1" }] })
}

fn write(dir: &Path, name: &str, v: &Value) -> String {
    let p = dir.join(name);
    std::fs::write(&p, v.to_string()).unwrap();
    p.to_str().unwrap().to_owned()
}

fn run(args: &[&str]) -> (i32, Value, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_halfplane")).args(args).output().unwrap();
    let stdout = String::from_utf8(out.stdout).unwrap();
    let report = serde_json::from_str(&stdout).unwrap_or(Value::Null);
    (out.status.code().unwrap(), report, String::from_utf8(out.stderr).unwrap())
}

#[test]
fn verify_jump_reports_the_hole() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "f.json", &json!({ "dim": 1, "points": [[0], [3]] }));
    let (code, report, _) = run(&["verify", "jump", &f]);
    assert_eq!(code, 1);
    assert_eq!(report["result"]["violation"], json!({ "alpha": [0], "beta": [3], "sigma": [1] }));

    let f = write(dir.path(), "g.json", &json!({ "dim": 1, "points": [[0], [1], [3]] }));
    assert_eq!(run(&["verify", "jump", &f]).0, 0);
}

#[test]
fn verify_delta_and_matroid() {
    let dir = tempfile::tempdir().unwrap();
    let ok = write(dir.path(), "d.json", &json!({ "dim": 2, "points": [[0, 0], [1, 1]] }));
    assert_eq!(run(&["verify", "delta", &ok]).0, 0);
    let bad = write(dir.path(), "e.json", &json!({ "dim": 3, "points": [[0, 0, 0], [1, 1, 1]] }));
    assert_eq!(run(&["verify", "delta", &bad]).0, 1);
    let u23 = write(dir.path(), "u.json", &json!({ "n": 3, "bases": [[1, 2], [1, 3], [2, 3]] }));
    assert_eq!(run(&["verify", "matroid", &u23]).0, 0);
    let mixed = write(dir.path(), "m.json", &json!({ "n": 3, "bases": [[1], [2, 3]] }));
    let (code, report, _) = run(&["verify", "matroid", &mixed]);
    assert_eq!(code, 1);
    assert_eq!(report["result"]["violation"]["kind"], "cardinality");
}

#[test]
fn obstruct_fano_is_not_hpp() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "fano.json", &fano_json());
    let (code, report, _) = run(&["obstruct", &f]);
    assert_eq!(code, 10);
    let r = &report["result"];
    assert_eq!(r["status"], "NotHPP");
    assert_eq!(r["quotient_graphs"].as_array().unwrap().len(), 21);
    assert_eq!(r["witness"]["kind"], "rayleigh");
    assert!(r["steps"].as_array().unwrap().iter().all(|s| s["ok"] == true));
}

#[test]
fn obstruct_uniform_is_inconclusive() {
    let dir = tempfile::tempdir().unwrap();
    let mut bases = Vec::new();
    for a in 1..=5 {
        for b in a + 1..=5 {
            for c in b + 1..=5 {
                bases.push(vec![a, b, c]);
            }
        }
    }
    let f = write(dir.path(), "u35.json", &json!({ "n": 5, "bases": bases }));
    let (code, report, _) = run(&["obstruct", &f]);
    assert_eq!(code, 0);
    assert_eq!(report["result"]["status"], "Inconclusive");
}

#[test]
fn construct_matching_on_triangle() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "tri.json", &triangle_json());
    let (code, report, _) = run(&["construct", "matching", &f]);
    assert_eq!(code, 0);
    let p = polynomial_from_value(report["result"]["polynomial"].clone()).unwrap();
    let expected = parse_polynomial(
        r#"{"nvars":3,"terms":[{"exp":[0,0,0],"re":"1"},{"exp":[1,1,0],"re":"1"},{"exp":[1,0,1],"re":"1"},{"exp":[0,1,1],"re":"1"}]}"#,
    )
    .unwrap();
    assert_eq!(p, expected);
    assert_eq!(report["result"]["tag"]["half_plane"], "right");
}

#[test]
fn construct_other_kinds() {
    let dir = tempfile::tempdir().unwrap();
    let tri = write(dir.path(), "tri.json", &triangle_json());
    let (code, report, _) = run(&["construct", "spanning-tree", &tri, "--root", "2"]);
    assert_eq!(code, 0);
    assert_eq!(report["result"]["polynomial"]["terms"].as_array().unwrap().len(), 3);
    let (_, report, _) = run(&["construct", "forest", &tri]);
    assert_eq!(report["result"]["polynomial"]["terms"].as_array().unwrap().len(), 16);

    let pencil = write(
        dir.path(),
        "pencil.json",
        &json!({ "pencil": [[["1", "0"], ["0", "0"]], [["0", "0"], ["0", "1"]]], "constant": [["0", "1"], ["1", "0"]] }),
    );
    let (code, report, _) = run(&["construct", "det-pencil", &pencil]);
    assert_eq!(code, 0);
    assert_eq!(report["result"]["tag"]["kind"], "det-pencil");

    let skew = write(dir.path(), "skew.json", &json!([["0", "1"], ["-1", "0"]]));
    let (_, report, _) = run(&["construct", "principal-minors", &skew]);
    assert_eq!(report["result"]["tag"]["half_plane"], "right");

    let bad = write(dir.path(), "bad.json", &json!([["1", "2"], ["3", "4"]]));
    assert_eq!(run(&["construct", "principal-minors", &bad]).0, 3);
}

#[test]
fn check_stability_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    // 1 + z1 z2 is Hurwitz but not upper half-plane stable
    let refuted = write(
        dir.path(),
        "a.json",
        &json!({ "nvars": 2, "terms": [{ "exp": [0, 0], "re": "1" }, { "exp": [1, 1], "re": "1" }] }),
    );
    let (code, report, _) = run(&["check-stability", &refuted]);
    assert_eq!(code, 1);
    assert_eq!(report["result"]["status"], "RefutedWithWitness");

    let stable = write(
        dir.path(),
        "b.json",
        &json!({ "nvars": 2, "terms": [{ "exp": [1, 0], "re": "1" }, { "exp": [0, 1], "re": "1" }] }),
    );
    let (code, report, _) = run(&["check-stability", &stable]);
    assert_eq!(code, 0);
    assert_eq!(report["result"]["method"], "bivariate-determinant");
}

#[test]
fn rayleigh_and_check_support() {
    let dir = tempfile::tempdir().unwrap();
    let fano = write(dir.path(), "fano.json", &fano_json());
    let (code, report, _) = run(&["rayleigh", &fano]);
    assert_eq!(code, 1);
    assert_eq!(report["result"]["domain"], "AllReals");
    let u23 = write(dir.path(), "u.json", &json!({ "n": 3, "bases": [[1, 2], [1, 3], [2, 3]] }));
    assert_eq!(run(&["rayleigh", &u23, "--domain", "positive-orthant"]).0, 0);

    let holey = write(
        dir.path(),
        "h.json",
        &json!({ "nvars": 1, "terms": [{ "exp": [0], "re": "1" }, { "exp": [3], "re": "1" }] }),
    );
    let (code, report, _) = run(&["check-support", &holey]);
    assert_eq!(code, 1);
    assert_eq!(report["result"]["internal_zero"], json!([1]));
}

#[test]
fn polarize_and_realify() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "p.json", &json!({ "nvars": 1, "terms": [{ "exp": [2], "re": "1" }] }));
    let (code, report, _) = run(&["polarize", &f]);
    assert_eq!(code, 0);
    assert_eq!(report["result"]["degrees"], json!([2]));
    assert_eq!(report["result"]["polynomial"]["nvars"], 2);

    let c = write(
        dir.path(),
        "c.json",
        &json!({ "nvars": 1, "terms": [{ "exp": [0], "re": "1", "im": "1" }, { "exp": [1], "re": "1" }] }),
    );
    let (code, report, _) = run(&["realify", &c]);
    assert_eq!(code, 0);
    assert_eq!(report["result"]["polynomial"]["terms"][0]["re"], "2/1");
    // alpha = -1 cancels the constant term
    assert_eq!(run(&["realify", &c, "--alpha", "-1"]).0, 3);
}

#[test]
fn malformed_input_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let dup = write(
        dir.path(),
        "d.json",
        &json!({ "nvars": 1, "terms": [{ "exp": [1], "re": "1" }, { "exp": [1], "re": "2" }] }),
    );
    let (code, report, stderr) = run(&["check-stability", &dup]);
    assert_eq!(code, 2);
    assert_eq!(report["result"]["error"], "parse");
    assert!(stderr.contains("duplicate"));
    assert_eq!(run(&["check-stability", "/nonexistent/x.json"]).0, 2);
}

#[test]
fn reports_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let fano = write(dir.path(), "fano.json", &fano_json());
    let strip = |mut v: Value| {
        v.as_object_mut().unwrap().remove("elapsed_ms");
        v
    };
    let a = strip(run(&["obstruct", &fano, "--seed", "7", "--samples", "500"]).1);
    let b = strip(run(&["obstruct", &fano, "--seed", "7", "--samples", "500"]).1);
    assert_eq!(a, b);
    assert_eq!(a["seed"], 7);
    assert_eq!(a["budget"]["samples"], 500);
    assert_eq!(a["input_sha256"].as_str().unwrap().len(), 64);
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let tri = write(dir.path(), "tri.json", &triangle_json());
    let out = dir.path().join("report.json");
    let (code, _, _) = run(&["construct", "degree", &tri, "--out", out.to_str().unwrap()]);
    assert_eq!(code, 0);
    let report: Value = serde_json::from_str(&std::fs::read_to_string(out).unwrap()).unwrap();
    let p = polynomial_from_value(report["result"]["polynomial"].clone()).unwrap();
    // round trip through the canonical form
    assert_eq!(polynomial_from_value(polynomial_json(&p)).unwrap(), p);
    assert_eq!(p.len(), 8);
}
