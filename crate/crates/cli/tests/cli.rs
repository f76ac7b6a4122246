use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use ptop_core::finspace::{find_homeomorphism, FinSpace, DEFAULT_HOMEO_BUDGET};
use ptop_core::json;
use ptop_core::pointed::{enumerate_pointed, s0};

fn ptop(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ptop"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn sierpinski_text() -> String {
    json::to_canonical_string(&json::space_to_value(&FinSpace::sierpinski(), Some(0)))
}

#[test]
fn smash_with_unit_is_homeomorphic() {
    let dir = tempfile::tempdir().unwrap();
    let unit = write(
        dir.path(),
        "s0.json",
        &json::to_canonical_string(&json::pointed_to_value(&s0())),
    );
    for (i, x) in enumerate_pointed(3).unwrap().iter().enumerate() {
        let xf = write(
            dir.path(),
            &format!("x{i}.json"),
            &json::to_canonical_string(&json::pointed_to_value(x)),
        );
        let o = ptop(&["smash", s(&unit), s(&xf)]);
        assert_eq!(code(&o), 0);
        let (out, b) = json::parse_space(std::str::from_utf8(&o.stdout).unwrap()).unwrap();
        assert!(b.is_some());
        assert!(find_homeomorphism(&out, x.space(), DEFAULT_HOMEO_BUDGET).0.is_found());
        let out_file = write(dir.path(), "out.json", std::str::from_utf8(&o.stdout).unwrap());
        assert_eq!(code(&ptop(&["homeo", s(&out_file), s(&xf)])), 0);
    }
}

#[test]
fn runs_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let x = write(dir.path(), "x.json", &sierpinski_text());
    let cmds: Vec<Vec<&str>> = vec![
        vec!["smash", s(&x), s(&x)],
        vec!["compare", "--tree", "[[1,2],3]", s(&x), s(&x), s(&x)],
        vec!["homotopy", "--model", "interval5", "--op", "suspension", s(&x)],
        vec!["witness", "nonregular", "--truncation", "8"],
        vec!["witness", "diag", "--truncation", "6", "--seed", "4"],
        vec!["exp", s(&x), s(&x)],
        vec!["export-dot", s(&x)],
    ];
    for c in cmds {
        let a = ptop(&c);
        let b = ptop(&c);
        assert_eq!(code(&a), 0, "{c:?}: {}", String::from_utf8_lossy(&a.stderr));
        assert_eq!(a.stdout, b.stdout, "{c:?}");
    }
}

#[test]
fn canonical_files_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let text = sierpinski_text();
    let x = write(dir.path(), "x.json", &text);
    let o = ptop(&["canon", s(&x)]);
    assert_eq!(o.stdout, text.as_bytes());
    let out = dir.path().join("copy.json");
    assert_eq!(code(&ptop(&["canon", s(&x), "--out", s(&out)])), 0);
    assert_eq!(std::fs::read_to_string(&out).unwrap(), text);
}

#[test]
fn input_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let unpointed = write(dir.path(), "u.json", r#"{"points": ["a"], "opens": [[], [0]]}"#);
    let x = write(dir.path(), "x.json", &sierpinski_text());
    let o = ptop(&["smash", s(&unpointed), s(&x)]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("basepoint"));

    let bad = write(
        dir.path(),
        "bad.json",
        r#"{"points": ["a","b","c"], "opens": [[], [0], [1], [0,1,2]]}"#,
    );
    let o = ptop(&["canon", s(&bad)]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("opens #1 and #2"));

    let broken = write(
        dir.path(),
        "broken.json",
        "{\"points\": [\"a\"],\n  \"opens\": [[] [0]]}",
    );
    let o = ptop(&["canon", s(&broken)]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));

    assert_eq!(code(&ptop(&["compare", "--tree", "[[2,1],3]", s(&x), s(&x), s(&x)])), 2);
    assert_eq!(code(&ptop(&["compare", "--tree", "[1,2]", s(&x)])), 2);
    assert_eq!(
        code(&ptop(&["homotopy", "--model", "interval4", "--op", "cylinder", s(&x)])),
        2
    );
    assert_eq!(code(&ptop(&["assoc-scan", "--format", "dot"])), 2);
    assert_eq!(code(&ptop(&["smash", "missing.json", s(&x)])), 2);
    assert_eq!(code(&ptop(&["no-such-command"])), 2);
}

#[test]
fn scan_reports() {
    let o = ptop(&["assoc-scan", "--max-points", "2"]);
    assert_eq!(code(&o), 0);
    assert!(String::from_utf8_lossy(&o.stderr).contains("all triples regularly associative"));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["triples"], 125);
    let o = ptop(&["coherence-scan", "--max-points", "2"]);
    assert_eq!(code(&o), 0);
}

#[test]
fn certificates_verify_and_tampering_is_caught() {
    let dir = tempfile::tempdir().unwrap();
    let o = ptop(&["witness", "nonregular", "--truncation", "8"]);
    assert_eq!(code(&o), 0);
    let mut v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let kinds: Vec<&str> = v["certificates"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["kind"].as_str().unwrap())
        .collect();
    assert_eq!(&kinds[..3], ["sqrt2_convergents", "saturation", "closedness"]);
    assert!(kinds[3..].iter().all(|k| *k == "witness_search") && kinds.len() > 3);
    let good = write(dir.path(), "c.json", std::str::from_utf8(&o.stdout).unwrap());
    assert_eq!(code(&ptop(&["verify", s(&good)])), 0);

    v["certificates"][3]["witnesses"][0][1] = serde_json::json!([1, 7]);
    let bad = write(dir.path(), "t.json", &json::to_canonical_string(&v));
    assert_eq!(code(&ptop(&["verify", s(&bad)])), 1);
}

#[test]
fn short_truncation_is_inconclusive() {
    let dir = tempfile::tempdir().unwrap();
    let spec =
        r#"{"u": [1,4], "v": [1,4], "w": [[-1,64],[1,64]], "x_radius": [1,4], "y_bound": [1,2], "w_radius": [1,2]}"#;
    let f = write(dir.path(), "spec.json", spec);
    let o = ptop(&["witness", "nonregular", "--truncation", "8", "--spec", s(&f)]);
    assert_eq!(code(&o), 3);
    assert!(String::from_utf8_lossy(&o.stderr).contains("increase truncation"));
    let o = ptop(&["witness", "nonregular", "--truncation", "100", "--spec", s(&f)]);
    assert_eq!(code(&o), 0);
}

#[test]
fn embed_and_homotopy_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let o = ptop(&["witness", "embed", "--truncation", "4"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["images"].as_array().unwrap().len(), 81);
    let x = write(dir.path(), "x.json", &sierpinski_text());
    for op in [
        "cylinder",
        "cone-minus",
        "cone-plus",
        "suspension",
        "paths",
        "cocone-minus",
        "cocone-plus",
        "loops",
    ] {
        for model in ["interval3", "interval5"] {
            let o = ptop(&["homotopy", "--model", model, "--op", op, s(&x)]);
            assert_eq!(code(&o), 0, "{op} {model}");
            assert!(json::parse_pointed(std::str::from_utf8(&o.stdout).unwrap()).is_ok());
        }
    }
    let o = ptop(&["homotopy", "--op", "suspension", "--format", "dot", s(&x)]);
    assert!(String::from_utf8_lossy(&o.stdout).starts_with("digraph"));
}

#[test]
fn homeomorphism_budget() {
    let dir = tempfile::tempdir().unwrap();
    let d = json::to_canonical_string(&json::space_to_value(&FinSpace::discrete(6), None));
    let a = write(dir.path(), "a.json", &d);
    assert_eq!(code(&ptop(&["homeo", s(&a), s(&a)])), 0);
    assert_eq!(code(&ptop(&["homeo", s(&a), s(&a), "--budget", "1"])), 3);
    let x = write(dir.path(), "x.json", &sierpinski_text());
    assert_eq!(code(&ptop(&["homeo", s(&a), s(&x)])), 1);
}
