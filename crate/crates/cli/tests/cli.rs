use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;
use slocc_cy::arith::Rationals;
use slocc_cy::states::catalog::{ghz, separable, w_state};
use slocc_cy::states::{parse_state, random_state, QTensor, SloccOperator};
use slocc_cy_cli::run;

fn invoke(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("slocc-cy").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn write_state(dir: &Path, name: &str, t: &QTensor) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, t.to_json()).unwrap();
    path
}

fn json(s: &str) -> Value {
    serde_json::from_str(s).unwrap()
}

#[test]
fn classify_ghz_qutrit() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ghz3.json");
    std::fs::write(
        &path,
        r#"{"n":3,"d":3,"entries":[{"idx":[0,0,0],"c":"1"},{"idx":[1,1,1],"c":"1"},{"idx":[2,2,2],"c":"1"}]}"#,
    )
    .unwrap();
    let (code, out, _) = invoke(&["classify", path.to_str().unwrap(), "--primes", "5,7,11"]);
    assert_eq!(code, 0);
    let report = json(&out);
    assert_eq!(report["status"], "SingularModel");
    assert_eq!(report["tool"], "slocc-cy");
    assert_eq!(report["version"], env!("CARGO_PKG_VERSION"));
    assert_eq!(report["input_hash"], ghz(3, 3).content_hash());
    assert_eq!(report["primes_used"], serde_json::json!([5, 7, 11]));
}

#[test]
fn moduli_dim_report() {
    let (code, out, _) = invoke(&["moduli-dim", "--n", "5", "--d", "2"]);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["dimension"], 16);
    let (_, out, _) = invoke(&["moduli-dim", "--n", "3", "--d", "3"]);
    assert_eq!(json(&out)["dimension"], 2);
}

#[test]
fn equiv_of_slocc_image_is_never_distinct() {
    let dir = tempfile::tempdir().unwrap();
    for (n, d, seed) in [(3, 3, 2), (4, 2, 5)] {
        let a = random_state(n, d, 4, seed);
        let b = a.apply_slocc(&Rationals, &SloccOperator::random(n, d, 3, seed + 1)).unwrap();
        let pa = write_state(dir.path(), "a.json", &a);
        let pb = write_state(dir.path(), "b.json", &b);
        let (code, out, _) = invoke(&["equiv", pa.to_str().unwrap(), pb.to_str().unwrap()]);
        assert_eq!(code, 0);
        assert_ne!(json(&out)["comparison"]["outcome"], "DistinctCertified");
    }
}

#[test]
fn equiv_distinguishes_statuses() {
    let dir = tempfile::tempdir().unwrap();
    let pa = write_state(dir.path(), "a.json", &ghz(3, 3));
    let pb = write_state(dir.path(), "b.json", &separable(3, 3));
    let (_, out, _) = invoke(&["equiv", pa.to_str().unwrap(), pb.to_str().unwrap()]);
    assert_eq!(json(&out)["comparison"]["outcome"], "DistinctCertified");
    let pc = write_state(dir.path(), "c.json", &ghz(4, 2));
    let (code, _, err) = invoke(&["equiv", pa.to_str().unwrap(), pc.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("format"));
}

#[test]
fn hyperdet_values() {
    let dir = tempfile::tempdir().unwrap();
    let g = write_state(dir.path(), "g.json", &ghz(3, 2));
    let w = write_state(dir.path(), "w.json", &w_state(3));
    let (_, out, _) = invoke(&["hyperdet", g.to_str().unwrap()]);
    assert_eq!(json(&out)["value"], "1");
    assert_eq!(json(&out)["kind"], "cayley");
    let (code, out, _) = invoke(&["hyperdet", w.to_str().unwrap(), "--strict"]);
    assert_eq!(json(&out)["value"], "0");
    assert_eq!(code, 1);
    let g4 = write_state(dir.path(), "g4.json", &ghz(4, 2));
    let (_, out, _) = invoke(&["hyperdet", g4.to_str().unwrap()]);
    assert_eq!(json(&out)["kind"], "schlaefli");
    let g33 = write_state(dir.path(), "g33.json", &ghz(3, 3));
    assert_eq!(invoke(&["hyperdet", g33.to_str().unwrap()]).0, 2);
}

#[test]
fn strict_flags_degenerate_input() {
    let dir = tempfile::tempdir().unwrap();
    let sep = write_state(dir.path(), "sep.json", &separable(3, 3));
    let (code, out, _) = invoke(&["classify", sep.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["status"], "RankDeficient");
    assert_eq!(invoke(&["classify", sep.to_str().unwrap(), "--strict"]).0, 1);
    let (code, out, _) = invoke(&["roundtrip", sep.to_str().unwrap(), "--strict"]);
    assert_eq!(code, 1);
    let results = json(&out)["results"].as_array().unwrap().clone();
    assert_eq!(results.len(), 3);
    assert!(results.iter().all(|r| r["error"].as_str().unwrap().contains("V_eta")));
    let good = write_state(dir.path(), "good.json", &random_state(3, 3, 5, 2));
    assert_eq!(invoke(&["classify", good.to_str().unwrap(), "--strict"]).0, 0);
}

#[test]
fn usage_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let good = write_state(dir.path(), "good.json", &random_state(3, 3, 5, 2));
    let good = good.to_str().unwrap();
    assert_eq!(invoke(&["classify", good, "--primes", "4"]).0, 2);
    assert_eq!(invoke(&["classify", good, "--frobnicate"]).0, 2);
    assert_eq!(invoke(&["classify", "/nonexistent/state.json"]).0, 2);
    assert_eq!(invoke(&["launch"]).0, 2);
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"n":3,"d":3,"entries":[{"idx":[0,3,0],"c":"1"}]}"#).unwrap();
    let (code, _, err) = invoke(&["classify", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("usage"));
    assert_eq!(invoke(&["hilbert", good, "--k-max", "40"]).0, 2);
    assert_eq!(invoke(&["--help"]).0, 0);
}

#[test]
fn sample_writes_canonical_states() {
    let (code, out, _) = invoke(&["sample", "--n", "4", "--d", "2", "--seed", "9", "--bound", "3"]);
    assert_eq!(code, 0);
    let parsed = parse_state(out.as_bytes()).unwrap();
    assert_eq!(parsed, random_state(4, 2, 3, 9));
    assert_eq!(out.trim_end(), parsed.to_json());

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s.json");
    let (code, out, _) = invoke(&["sample", "--n", "3", "--d", "3", "--out", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    let written = parse_state(&std::fs::read(&path).unwrap()).unwrap();
    assert_eq!(json(&out)["state_hash"], written.content_hash());
}

#[test]
fn reports_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let t = write_state(dir.path(), "t.json", &random_state(4, 2, 4, 11));
    let t = t.to_str().unwrap();
    for args in [
        vec!["classify", t],
        vec!["jinv", t],
        vec!["smoothness", t, "--primes", "13,17"],
        vec!["hilbert", t, "--primes", "13"],
        vec!["roundtrip", t],
        vec!["hyperdet", t],
    ] {
        let first = invoke(&args);
        let second = invoke(&args);
        assert_eq!(first, second, "{args:?}");
    }
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let t = write_state(dir.path(), "t.json", &random_state(3, 3, 5, 2));
    let report = dir.path().join("report.json");
    let (code, out, _) = invoke(&["jinv", t.to_str().unwrap(), "--out", report.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    let written = json(&std::fs::read_to_string(&report).unwrap());
    assert_eq!(written["command"], "jinv");
    assert!(written["j"].is_array());
}

#[test]
fn binary_respects_no_color() {
    let dir = tempfile::tempdir().unwrap();
    let t = write_state(dir.path(), "t.json", &ghz(3, 3));
    let bin = env!("CARGO_BIN_EXE_slocc-cy");
    let plain = Command::new(bin)
        .args(["classify", t.to_str().unwrap(), "--primes", "5", "--pretty"])
        .env("NO_COLOR", "1")
        .output()
        .unwrap();
    assert!(plain.status.success());
    let text = String::from_utf8(plain.stdout).unwrap();
    assert!(text.contains("SingularModel"));
    assert!(!text.contains('\x1b'));
    let colored = Command::new(bin)
        .args(["classify", t.to_str().unwrap(), "--primes", "5", "--pretty"])
        .env_remove("NO_COLOR")
        .output()
        .unwrap();
    assert!(String::from_utf8(colored.stdout).unwrap().contains('\x1b'));
    let usage = Command::new(bin).arg("classify").output().unwrap();
    assert_eq!(usage.status.code(), Some(2));
}
