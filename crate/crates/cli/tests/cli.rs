use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

const W0: &str = r#"{"prime":null,"terms":[{"eigenvalue":"1/3","multiplicity":2}]}"#;
const GRADED: &str = r#"{"grades":[{"element":{"prime":null,"terms":[{"eigenvalue":"1/3","multiplicity":2}]},"grade":"1/2"}],"kind":"affine"}"#;

fn qbost(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qbost"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = qbost(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn fixture(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "fixtures", &format!("{name}.json")]
        .iter()
        .collect();
    std::fs::read_to_string(path).unwrap()
}

fn golden() -> Vec<(&'static str, Vec<&'static str>)> {
    vec![
        ("zeta_affine_l2_q3", vec!["zeta", "affine", "--l", "2", "--q", "3", "--order", "4"]),
        ("zeta_projective_p1_q2", vec!["zeta", "projective", "--n", "1", "--q", "2", "--order", "4"]),
        ("zeta_affine_formal", vec!["zeta", "affine", "--l", "1", "--q", "formal", "--order", "3"]),
        ("zeta_necklace_q2", vec!["zeta", "necklace", "--q", "2", "--order", "6"]),
        ("bc_mustar_mu", vec!["bc", "normalize", "--word", r#"[{"mustar":2},{"mu":2}]"#]),
        ("bc_rho_e0", vec!["bc", "normalize", "--word", r#"[{"mu":2},{"e":"0/1"},{"mustar":2}]"#]),
        ("bc_push_e", vec!["bc", "normalize", "--word", r#"[{"mustar":3},{"e":"1/3"}]"#]),
        ("bc_q_rho", vec!["bc", "normalize", "--ring", "R", "--word", r#"[{"mu":2},{"E":["1","0/1"]},{"mustar":2}]"#]),
        ("bc_q_push", vec!["bc", "normalize", "--ring", "R", "--word", r#"[{"mustar":2},{"E":["1/2","1/3"]}]"#]),
        ("witt_ghost", vec!["witt", "ghost", "--x", r#"["1","-1","0","-1"]"#]),
        ("witt_unghost", vec!["witt", "unghost", "--g", r#"["2","2","2"]"#]),
        ("witt_frob", vec!["witt", "frob", "--x", r#"["1","1","1","1"]"#, "--n", "2"]),
        ("witt_versch", vec!["witt", "versch", "--x", r#"["1","2"]"#, "--n", "2"]),
        ("qwitt_ghost", vec!["qwitt", "ghost", "--q", "2", "--x", r#"["1","1"]"#]),
        ("geodef_omega", vec!["geodef", "omega", "--w0", W0, "--grade", "1/2", "--kind", "affine"]),
        ("geodef_divisor", vec!["geodef", "divisor", "--x", GRADED]),
        ("geodef_versch", vec!["geodef", "versch", "--x", GRADED, "--n", "2"]),
    ]
}

#[test]
fn golden_outputs() {
    for (name, args) in golden() {
        assert_eq!(stdout(&args), fixture(name), "{name}");
    }
}

#[test]
fn outputs_are_deterministic() {
    let args = ["qsm", "zeta", "--q", "3", "--s", "2"];
    assert_eq!(stdout(&args), stdout(&args));
}

#[test]
fn exit_codes() {
    assert_eq!(qbost(&[]).status.code(), Some(2));
    assert_eq!(qbost(&["--bogus"]).status.code(), Some(2));
    assert_eq!(qbost(&["zeta", "frobnicate"]).status.code(), Some(2));
    let out = qbost(&["qsm", "partition", "--q", "2", "--beta", "1.4"]);
    assert_eq!(out.status.code(), Some(1));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert!(err["error"].as_str().unwrap().contains("1.5"));
    assert_eq!(qbost(&["bc", "normalize", "--ring", "Z", "--word", "[]"]).status.code(), Some(1));
    assert_eq!(qbost(&["bc", "normalize", "--ring", "K", "--word", r#"[{"mu":1}]"#]).status.code(), Some(1));
}

#[test]
fn pretty_format_is_same_value() {
    let compact: Value = serde_json::from_str(&stdout(&["zeta", "projective", "--n", "2", "--q", "2", "--order", "5"])).unwrap();
    let pretty: Value = serde_json::from_str(&stdout(&[
        "--format", "pretty", "zeta", "projective", "--n", "2", "--q", "2", "--order", "5",
    ]))
    .unwrap();
    assert_eq!(compact, pretty);
}

#[test]
fn outputs_feed_back_in() {
    let p1 = stdout(&["zeta", "projective", "--n", "1", "--q", "2", "--order", "6"]);
    let sq = stdout(&["zeta", "product", "--x", p1.trim(), "--y", p1.trim()]);
    let v: Value = serde_json::from_str(&sq).unwrap();
    let c: Vec<&str> = v["series"]["coeffs"].as_array().unwrap().iter().map(|c| c.as_str().unwrap()).collect();
    assert_eq!(&c[..3], &["1", "9", "53"]);
    let a = stdout(&["zeta", "affine", "--l", "1", "--q", "2", "--order", "6"]);
    let shifted = stdout(&["zeta", "shift", "--x", p1.trim(), "--l", "1"]);
    let prod = stdout(&["zeta", "product", "--x", p1.trim(), "--y", a.trim()]);
    let s: Value = serde_json::from_str(&shifted).unwrap();
    let p: Value = serde_json::from_str(&prod).unwrap();
    assert_eq!(s["series"], p["series"]);

    let x = stdout(&["bc", "normalize", "--word", r#"[{"mu":2},{"e":"1/3"}]"#]);
    let y = stdout(&["bc", "normalize", "--word", r#"[{"mustar":3},{"e":"1/2"}]"#]);
    let xy = stdout(&["bc", "mul", "--x", x.trim(), "--y", y.trim()]);
    let word = stdout(&["bc", "normalize", "--word", r#"[{"mu":2},{"e":"1/3"},{"mustar":3},{"e":"1/2"}]"#]);
    assert_eq!(xy, word);
}

#[test]
fn qsm_commands() {
    let d: Value = serde_json::from_str(&stdout(&["qsm", "zeta", "--q", "2", "--s", "2", "--tol", "1e-9"])).unwrap();
    let e: Value = serde_json::from_str(&stdout(&[
        "qsm", "zeta", "--q", "2", "--s", "2", "--tol", "1e-9", "--method", "euler",
    ]))
    .unwrap();
    assert!((d["value"].as_f64().unwrap() - e["value"].as_f64().unwrap()).abs() < 1e-8);
    assert!(d["errorBound"].as_f64().unwrap() <= 1e-9);
    let p: Value = serde_json::from_str(&stdout(&["qsm", "partition", "--q", "2", "--beta", "2"])).unwrap();
    assert!(p["converged"].as_bool().unwrap());
    let c: Value = serde_json::from_str(&stdout(&["qsm", "check", "--system", "qclassic", "--t", "0.7", "--samples", "16"])).unwrap();
    assert_eq!(c["pass"], Value::Bool(true));
}

#[test]
fn diagram_command() {
    let v: Value = serde_json::from_str(&stdout(&["qwitt", "diagram", "--w0", W0, "--q", "3", "--n", "2", "--order", "6"])).unwrap();
    assert_eq!(v["pass"], Value::Bool(true));
    assert_eq!(v["squares"].as_array().unwrap().len(), 3);
}
