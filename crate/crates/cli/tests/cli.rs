use std::process::Command;

use serde_json::Value;

fn run(args: &[&str]) -> (i32, Value) {
    let out = Command::new(env!("CARGO_BIN_EXE_congruence")).args(args).output().expect("binary runs");
    let code = out.status.code().expect("exit code");
    let json = if out.stdout.is_empty() {
        Value::Null
    } else {
        serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("bad json from {args:?}: {e}"))
    };
    (code, json)
}

fn ok(args: &[&str]) -> Value {
    let (code, v) = run(args);
    assert_eq!(code, 0, "{args:?}: {v}");
    v
}

fn exit_code(args: &[&str]) -> i32 {
    run(args).0
}

fn fixtures_dir() -> String {
    format!("{}/../core/fixtures", env!("CARGO_MANIFEST_DIR"))
}

/// 2x2 integer matrix product, kept apart from the library's matrices.
fn mat_mul(a: [i64; 4], b: [i64; 4]) -> [i64; 4] {
    [
        a[0] * b[0] + a[1] * b[2],
        a[0] * b[1] + a[1] * b[3],
        a[2] * b[0] + a[3] * b[2],
        a[2] * b[1] + a[3] * b[3],
    ]
}

#[test]
fn index_examples() {
    let v = ok(&["index", "abelian:4,2", "--pi", "(1,0),(0,1)"]);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["results"]["orbit_length"], 24);
    assert_eq!(v["results"]["factorization_holds"], true);

    let v = ok(&["index", "dihedral:7", "--pi", "r,s"]);
    assert_eq!(v["results"]["orbit_length"], 42);
    assert_eq!(v["results"]["rho_index"], 3);
    assert_eq!(v["results"]["inner_index"], 14);

    let v = ok(&["index", "fp:g128.pres", "--pi", "g1,g2"]);
    assert_eq!(v["results"]["group_order"], 128);
    assert_eq!(v["results"]["orbit_length"], 6144);
    assert_eq!(v["results"]["inner_index"], 64);
    assert_eq!(v["results"]["rho_index"], 96);
}

#[test]
fn default_pi_uses_first_generators() {
    let v = ok(&["index", "dihedral:6"]);
    assert_eq!(v["inputs"]["pi"], serde_json::json!(["r", "s"]));
    assert_eq!(v["results"]["orbit_length"], 36);
}

#[test]
fn congruence_examples() {
    let v = ok(&["congruence", "dihedral:5"]);
    assert_eq!(v["results"]["is_congruence"], true);
    assert_eq!(v["results"]["rho_index"], 3);

    // Γ¹(3) has index 9 · (1 - 1/9) = 8
    let v = ok(&["congruence", "abelian:3,1", "--pi", "(1,0),(0,0)"]);
    assert_eq!(v["results"]["is_congruence"], true);
    assert_eq!(v["results"]["rho_index"], 8);
    assert_eq!(v["results"]["level"], 3);

    let v = ok(&["congruence", "fp:g128.pres", "--pi", "g1,g2"]);
    assert_eq!(v["results"]["is_congruence"], false);
    assert_eq!(v["results"]["level"], 8);
    assert!(v["results"]["witness"].is_string());
}

#[test]
fn verify_presentation_and_identities() {
    let v = ok(&["verify", "presentation"]);
    assert_eq!(v["passed"], true);
    assert_eq!(v["results"]["aut_plus_relations"], 6);
    assert_eq!(v["checks"].as_array().unwrap().len(), 9);

    for n in ["3", "4", "5", "6"] {
        let v = ok(&["verify", &format!("dihedral-identities:{n}")]);
        assert!(v["checks"].as_array().unwrap().iter().all(|c| c["passed"] == true));
    }
}

#[test]
fn verify_tables() {
    let v = ok(&["verify", "table1"]);
    assert_eq!(v["results"]["words"], 30);
    assert_eq!(v["checks"].as_array().unwrap().len(), 30);

    let v = ok(&["verify", "table2"]);
    assert_eq!(v["results"]["words"], 17);
    assert_eq!(v["results"]["generated_index"], v["results"]["rho_index"]);
}

#[test]
fn verify_witness_reports_membership() {
    let (code, v) = run(&["verify", "witness"]);
    // Evaluate the word by hand: e1 = [[1,0],[1,1]], e2 = [[1,1],[0,1]].
    let word = v["results"]["word"].as_str().unwrap();
    let mut m = [1, 0, 0, 1];
    for syl in word.split_whitespace() {
        let (g, k) = syl.split_once('^').map_or((syl, 1), |(g, k)| (g, k.parse::<i64>().unwrap()));
        let step = match (g, k.signum()) {
            ("e1", 1) => [1, 0, 1, 1],
            ("e1", _) => [1, 0, -1, 1],
            ("e2", 1) => [1, 1, 0, 1],
            _ => [1, -1, 0, 1],
        };
        for _ in 0..k.abs() {
            m = mat_mul(m, step);
        }
    }
    assert_eq!(m, [-327, -80, 560, 137]);
    assert_eq!(v["results"]["matrix"], "[[-327,-80],[560,137]]");
    assert_eq!(v["results"]["level"], 8);

    let checks = v["checks"].as_array().unwrap();
    let item = |prefix: &str| checks.iter().find(|c| c["name"].as_str().unwrap().starts_with(prefix)).unwrap();
    assert_eq!(item(word)["passed"], true);
    assert_eq!(item("det = 1")["passed"], true);
    assert_eq!(item("≡ I mod 8")["passed"], true);
    assert_eq!(item("computed witness")["passed"], true);
    // The exit code must agree with the membership item.
    let rejected = item("rejected by membership")["passed"] == true;
    assert_eq!(v["results"]["contained"] == false, rejected);
    assert_eq!(code, if rejected { 0 } else { 1 });
}

#[test]
fn census_examples() {
    let v = ok(&["census", "abelian:6,1"]);
    assert_eq!(v["results"]["transitive"], true);
    let v = ok(&["census", "dihedral:4"]);
    assert_eq!(v["results"]["transitive"], true);

    let v = ok(&["census", "perm:A5"]);
    assert_eq!(v["results"]["transitive"], false);
    assert!(v["results"]["distinct_indices"].as_array().unwrap().len() >= 2);
    assert_eq!(v["results"]["census"]["epimorphisms"], 2280);
    assert_eq!(v["results"]["census"]["kernels"], 19);
}

#[test]
fn conjecture_examples() {
    for (p, q, conj) in [("2", "3", 18), ("2", "5", 30), ("3", "7", 168)] {
        let v = ok(&["conjecture", p, q]);
        assert_eq!(v["results"]["conjectured_index"], conj);
        assert!(v["results"]["computed_index"].as_u64().unwrap() > 0);
    }
    // D3 and D5 fall under the 6n dihedral formula
    assert_eq!(ok(&["conjecture", "2", "3"])["results"]["computed_index"], 18);
    assert_eq!(ok(&["conjecture", "2", "5"])["results"]["computed_index"], 30);
    assert_eq!(exit_code(&["conjecture", "3", "5"]), 2);
    assert_eq!(exit_code(&["conjecture", "4", "5"]), 2);
}

#[test]
fn reports_are_deterministic() {
    for args in [&["index", "dihedral:5"][..], &["census", "abelian:4,2"], &["verify", "table2"]] {
        let mut a = ok(args);
        let mut b = ok(args);
        a.as_object_mut().unwrap().remove("timing");
        b.as_object_mut().unwrap().remove("timing");
        assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    }
}

#[test]
fn fixture_directory_matches_built_ins() {
    let dir = fixtures_dir();
    let a = ok(&["verify", "table1"]);
    let b = ok(&["verify", "table1", "--fixtures", &dir]);
    assert_eq!(a["fixtures"], b["fixtures"]);
    for (_, h) in a["fixtures"].as_object().unwrap() {
        assert_eq!(h.as_str().unwrap().len(), 64);
    }
    assert_eq!(exit_code(&["verify", "table1", "--fixtures", "/nonexistent"]), 2);
}

#[test]
fn exit_codes() {
    assert_eq!(exit_code(&["index", "abelian:4,3"]), 2);
    assert_eq!(exit_code(&["index", "torus:2"]), 2);
    assert_eq!(exit_code(&["index", "dihedral:4", "--pi", "r,r"]), 2);
    assert_eq!(exit_code(&["index", "dihedral:4", "--pi", "r,t"]), 2);
    assert_eq!(exit_code(&["verify", "nothing"]), 2);
    assert_eq!(exit_code(&["index", "fp:g128.pres", "--max-cosets", "50"]), 3);
    assert_eq!(exit_code(&["census", "perm:A5", "--max-pairs", "100"]), 3);
    assert_eq!(exit_code(&["index", "perm:A5", "--max-order", "10"]), 3);
}

#[test]
fn text_output() {
    let out = Command::new(env!("CARGO_BIN_EXE_congruence"))
        .args(["--text", "index", "dihedral:3"])
        .output()
        .unwrap();
    let s = String::from_utf8(out.stdout).unwrap();
    assert!(s.starts_with("index (ok)"));
    assert!(s.contains("orbit_length: 18"));
}
