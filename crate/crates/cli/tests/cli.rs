use serde_json::Value;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_nilpotent"));
    c.env_remove("NILPOTENT_DATA_DIR");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let o = run(args);
    assert!(o.status.success(), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    String::from_utf8(o.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut a = vec!["--format", "json"];
    a.extend_from_slice(args);
    serde_json::from_str(&stdout(&a)).unwrap()
}

fn root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn num(v: &Value) -> f64 {
    v.as_f64().unwrap()
}

/// Compares against `tests/golden/<name>`; `UPDATE_GOLDEN=1` rewrites it.
fn golden(name: &str, actual: &str) {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, actual).unwrap();
        return;
    }
    let expected = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(actual, expected, "golden file {name} differs");
}

#[test]
fn multiply_units() {
    assert_eq!(stdout(&["algebra", "multiply", "--a", "qi", "--b", "qj"]).trim(), "qk");
    assert_eq!(stdout(&["algebra", "multiply", "--a", "qj", "--b", "qi"]).trim(), "-qk");
}

#[test]
fn tcp_is_identity() {
    let out = stdout(&["algebra", "cpt", "--op", "TCP", "--E", "5", "--p", "0,0,4", "--m", "3"]);
    assert!(out.contains("= X (identity)"), "{out}");
    let out = stdout(&["algebra", "cpt", "--op", "P", "--E", "5", "--p", "0,0,4", "--m", "3"]);
    assert!(!out.contains("identity"), "{out}");
}

#[test]
fn verify_suite() {
    let out = stdout(&["algebra", "verify"]);
    let first = out.lines().next().unwrap();
    assert!(first.starts_with("64 group elements, ") && first.ends_with(" identities OK"), "{first}");
    let v = json(&["algebra", "verify", "--samples", "50"]);
    assert_eq!(v["passed"], Value::Bool(true));
    assert_eq!(v["randomOracle"]["passed"], 50);
}

#[test]
fn solve_examples() {
    let v = json(&["solve", "--family", "coulomb", "--qA", "0.1", "--j", "0.5", "--nprime", "0"]);
    assert!((num(&v["levels"]["EOverM"]) - 0.994987).abs() < 1e-6);
    assert_eq!(v["consistent"], Value::Bool(true));
    let v = json(&["solve", "--family", "strong", "--q", "0.4", "--sigma", "1", "--E", "0.75", "--radius"]);
    assert!((num(&v["radius"]) - 3.75).abs() < 1e-12);
    let v = json(&["solve", "--family", "oscillator", "--m", "1", "--j", "0.5", "--nprime", "0"]);
    assert_eq!(v["levels"]["E"], "-1/2");
}

#[test]
fn solve_potential_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("v.json");
    std::fs::write(&path, r#"{"terms": {}, "coulombPhase": "3/5", "q": "1"}"#).unwrap();
    let v = json(&["solve", "--potential", path.to_str().unwrap(), "--m", "5"]);
    assert_eq!(v["matching"]["family"], "coulomb");
    assert_eq!(v["matching"]["branches"][0]["solution"]["energy"], "4");
    let o = run(&["solve", "--potential", dir.path().join("missing.json").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn gut_defaults() {
    let v = json(&["gut"]);
    assert!((num(&v["MX"]) / 2.9e19 - 1.0).abs() < 0.05);
    assert!((num(&v["invAlphaG"]) - 52.4).abs() < 0.1);
    assert!((num(&v["invAlphaEmMu"]) - 128.0).abs() < 1.0);
    assert!((num(&v["invAlphaEm14tev"]) - 118.0).abs() < 1.0);
    let v = json(&["gut", "--mu", "0.112"]);
    assert!((num(&v["couplings"][0]["alpha3"]) - 1.0).abs() < 0.02);
    let v = json(&["gut", "--legacy-su5"]);
    let mx = num(&v["unification"]["MX"]);
    assert!((1e14..1e16).contains(&mx));
    assert!((num(&v["at1e15"]["sin2Hypercharge"]) - 0.6).abs() < 0.01);
}

#[test]
fn mass_examples() {
    let v = json(&["mass", "--decuplet"]);
    let units: Vec<f64> = v["decuplet"].as_array().unwrap().iter().map(|r| num(&r["predictedUnits"])).collect();
    assert_eq!(units, [20.0, 20.0, 22.0, 24.0]);
    assert!(v.get("bosons").is_none());
    let b = &json(&["mass", "--bosons"])["bosons"];
    assert!((num(&b["mH"]) - 182.0).abs() < 1.0);
    assert!((num(&b["mZFromZeros"]) - 91.0).abs() < 1.0);
    assert!((num(&b["f"]) - 241.35).abs() < 1e-9);
    assert!((num(&b["mTop"]) - 174.0).abs() < 0.5);
    let k = &json(&["mass", "--ckm"])["ckm"]["rotated"];
    for (x, t) in k.as_array().unwrap().iter().zip([0.0269, 0.216, 1.76]) {
        assert!((num(x) / t - 1.0).abs() < 0.01);
    }
}

#[test]
fn mass_overrides() {
    let a = json(&["mass", "--decuplet"]);
    let b = json(&["mass", "--decuplet", "--alpha-inverse", "100"]);
    let gev = |v: &Value| num(&v["decuplet"][0]["predictedGev"]);
    assert!((gev(&b) / gev(&a) - 100.0 / 137.036).abs() < 1e-9);
}

#[test]
fn charges_commands() {
    let v = json(&["charges", "grid"]);
    assert_eq!(v["count"], 24);
    assert_eq!(json(&["charges", "grid", "--extended"])["count"], 25);
    assert_eq!(json(&["charges", "zeros", "--states", "sss"])["ground"], 6);
    let w = json(&["charges", "weak", "--combo", "us~"]);
    assert_eq!(w["display"], "0 or ±(1 + z_P)w");
    let d = json(&["charges", "dirac", "--w", "1", "--s", "0", "--e", "5"]);
    assert_eq!(d["rows"], serde_json::json!(["-1", "-1", "-1", "-1"]));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["algebra", "multiply", "--a", "qi"]).status.code(), Some(1));
    assert_eq!(run(&["--no-such-flag"]).status.code(), Some(1));
    assert_eq!(run(&["solve", "--family", "coulomb", "--qA", "2"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    let missing = run(&["--data-dir", "/nonexistent/nilpotent", "mass"]);
    assert_eq!(missing.status.code(), Some(3));
    let env = bin().env("NILPOTENT_DATA_DIR", "/nonexistent/nilpotent").args(["gut"]).output().unwrap();
    assert_eq!(env.status.code(), Some(3));
}

#[test]
fn data_dir_from_env() {
    let dir = tempfile::tempdir().unwrap();
    let data = root().join("crates/core/data");
    for f in ["multiplets.csv", "charge_tables.csv"] {
        std::fs::copy(data.join(f), dir.path().join(f)).unwrap();
    }
    let constants = std::fs::read_to_string(data.join("constants.json")).unwrap();
    let mut c: Value = serde_json::from_str(&constants).unwrap();
    c["lambdaCKM"] = serde_json::json!(0.0);
    std::fs::write(dir.path().join("constants.json"), c.to_string()).unwrap();
    let out = bin()
        .env("NILPOTENT_DATA_DIR", dir.path())
        .args(["--format", "json", "mass", "--ckm"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["ckm"]["rotated"], v["ckm"]["input"]);
}

#[test]
fn deterministic_output() {
    for args in [
        &["--format", "json", "--seed", "7", "algebra", "verify", "--samples", "200"][..],
        &["--format", "csv", "gut"],
        &["--format", "json", "mass"],
    ] {
        assert_eq!(run(args).stdout, run(args).stdout, "{args:?}");
    }
}

#[test]
fn csv_has_header() {
    let out = stdout(&["--format", "csv", "gut"]);
    let mut r = csv::Reader::from_reader(out.as_bytes());
    assert_eq!(r.headers().unwrap().iter().collect::<Vec<_>>(), ["mu", "1/alpha", "1/alpha2", "1/alpha3", "alpha3", "sin2"]);
    assert_eq!(r.records().count(), 7);
    let out = stdout(&["--format", "csv", "charges", "table", "--rep", "A"]);
    assert!(out.lines().count() > 1 && out.lines().next().unwrap().contains(','));
}

#[test]
fn output_matches_schemas() {
    let cases: &[(&str, &[&str])] = &[
        ("gut", &["gut"]),
        ("gut-mu", &["gut", "--mu", "0.112,91.1867"]),
        ("gut-legacy", &["gut", "--legacy-su5"]),
        ("mass", &["mass"]),
        ("mass", &["mass", "--octet", "--ratios"]),
        ("algebra-verify", &["algebra", "verify", "--samples", "20"]),
        ("solve", &["solve", "--family", "coulomb", "--qA", "1/10"]),
        ("solve", &["solve", "--family", "lennard-jones", "--A", "1/2i"]),
        ("charges-table", &["charges", "table"]),
    ];
    for (schema, args) in cases {
        let path = root().join(format!("docs/schemas/{schema}.schema.json"));
        let s: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
        let v = jsonschema::validator_for(&s).unwrap();
        let out = json(args);
        let errors: Vec<String> = v.iter_errors(&out).map(|e| format!("{} at {}", e, e.instance_path)).collect();
        assert!(errors.is_empty(), "{args:?} against {schema}: {errors:?}");
        // parse, reserialize, reparse
        let again: Value = serde_json::from_str(&serde_json::to_string(&out).unwrap()).unwrap();
        assert_eq!(again, out);
    }
}

#[test]
fn golden_reports() {
    golden("gut.json", &stdout(&["--format", "json", "gut"]));
    golden("gut.txt", &stdout(&["gut"]));
    golden("mass.json", &stdout(&["--format", "json", "mass"]));
    golden("mass.txt", &stdout(&["mass"]));
    golden("decuplet.csv", &stdout(&["--format", "csv", "mass", "--decuplet"]));
    golden("charges-A.csv", &stdout(&["--format", "csv", "charges", "table", "--rep", "A"]));
    golden("verify.txt", &stdout(&["algebra", "verify"]));
}
