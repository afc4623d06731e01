use std::path::PathBuf;
use std::process::Command;

use qschur::dump::Dump;
use qschur_core::g2::build_xn;
use qschur_core::hecke::KlTable;
use qschur_core::schur::SchurAlgebra;
use qschur_core::tmodule::canonical_t;
use qschur_core::weightsets::WeightSet;
use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("qschur").chain(args.iter().copied());
    let code = qschur::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn run_json(args: &[&str]) -> Value {
    let mut a = args.to_vec();
    a.extend(["--format", "json"]);
    let (code, out, err) = run(&a);
    assert_eq!(code, 0, "{}", err);
    serde_json::from_str(&out).unwrap()
}

fn seed_file(name: &str, body: &str) -> PathBuf {
    let p = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&p, body).unwrap();
    p
}

#[test]
fn info_census() {
    let v = run_json(&["info", "--type", "G2", "--weights", "g2:n=2"]);
    assert_eq!(v["weights"], 37);
    assert_eq!(v["orbits"], 6);
    assert_eq!(v["xi"], 127);
    assert_eq!(v["regular_orbit"], true);
    let v = run_json(&["info", "--n", "3"]);
    assert_eq!(v["weights"], 73);
    assert_eq!(v["xi"], 469);
}

#[test]
fn argument_errors_exit_2() {
    assert_eq!(run(&["info", "--type", "Q7"]).0, 2);
    assert_eq!(run(&["info", "--weights", "g2:n=x"]).0, 2);
    assert_eq!(run(&["info", "--weights", "g2:n=1", "--n", "2"]).0, 2);
    assert_eq!(run(&["info", "--weights", "/nonexistent/seeds.json"]).0, 2);
    assert_eq!(run(&["info", "--type", "B2"]).0, 2);
    assert_eq!(run(&["nonsense"]).0, 2);
    assert_eq!(run(&["g2", "verify", "--suite", "C", "--n", "3"]).0, 2);
    assert_eq!(run(&["schur", "coords", "100000"]).0, 2);
    assert_eq!(run(&["schur", "verify", "--suite", "duality", "--q-samples", "0"]).0, 2);
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("Usage"));
}

#[test]
fn duality_refuses_sets_without_regular_orbit() {
    let (code, _, err) = run(&["schur", "verify", "--suite", "duality", "--weights", "g2:n=1"]);
    assert_eq!(code, 2);
    let report: Value = serde_json::from_str(err.trim()).unwrap();
    assert_eq!(report["error"], "argument");
    assert!(report["message"].as_str().unwrap().contains("regular orbit"));
}

#[test]
fn duality_on_seed_files() {
    let b2 = seed_file("b2.json", "[[-1, -1], [0, 0]]");
    let v = run_json(&["schur", "verify", "--suite", "duality", "--type", "B2", "--weights", b2.to_str().unwrap()]);
    assert_eq!(v["pass"], true);
    assert_eq!(v["samples"].as_array().unwrap().len(), 4);
    assert!(v["samples"].as_array().unwrap().iter().all(|s| s["centralizer_dim"] == 8));
    let g2 = seed_file("g2.json", r#"["(1,2,-3)", "(0,0,0)"]"#);
    let v = run_json(&["schur", "verify", "--suite", "duality", "--weights", g2.to_str().unwrap(), "--q-samples", "3"]);
    assert_eq!(v["pass"], true);
    assert_eq!(v["samples"][1]["q"], "3");
}

#[test]
fn g2_suites_report_schema() {
    for suite in ["A", "B", "C"] {
        let v = run_json(&["g2", "verify", "--suite", suite, "--n", "2"]);
        assert_eq!(v["pass"], true, "suite {}", suite);
        let checks = v["checks"].as_array().unwrap();
        assert!(!checks.is_empty());
        for c in checks {
            let keys: Vec<&str> = c.as_object().unwrap().keys().map(String::as_str).collect();
            assert_eq!(keys, ["formula_id", "instance", "lhs", "rhs", "status"]);
            assert_eq!(c["status"], "pass");
        }
    }
    let (code, out, _) = run(&["g2", "verify", "--suite", "b", "--n", "3"]);
    assert_eq!(code, 0);
    assert!(out.contains("(chosen)"));
}

#[test]
fn schur_suites_pass_on_x1() {
    for suite in ["positivity", "bar"] {
        let v = run_json(&["schur", "verify", "--suite", suite, "--n", "1"]);
        assert_eq!(v["pass"], true, "{}", suite);
        assert!(v["failures"].as_array().unwrap().is_empty());
    }
}

#[test]
fn bases_and_products() {
    let v = run_json(&["hecke", "cbasis", "--type", "G2"]);
    let els = v["elements"].as_array().unwrap();
    assert_eq!(els.len(), 12);
    let top = els.iter().find(|e| e["length"] == 6).unwrap();
    assert_eq!(top["terms"].as_array().unwrap().len(), 12);
    assert_eq!(top["terms"][11][1], "q^6");

    let v = run_json(&["tmodule", "cbasis", "--n", "1"]);
    assert_eq!(v["canonical"].as_array().unwrap().len(), 13);
    let v = run_json(&["tmodule", "bar", "--n", "1"]);
    assert_eq!(v["bar"].as_array().unwrap().len(), 13);

    let v = run_json(&["schur", "cbasis", "--n", "1"]);
    assert_eq!(v["dim"], 19);
    let ws = build_xn(1).unwrap();
    let s = SchurAlgebra::new(&ws);
    let unit = ws.xi_index(0, 0, 0).unwrap();
    let v = run_json(&["schur", "compose", &unit.to_string(), &unit.to_string()]);
    assert_eq!(v["product"].as_array().unwrap().len(), 1);
    assert_eq!(v["product"][0][1], "1");
    let name = ws.render_xi(&ws.xi()[5]);
    let v = run_json(&["schur", "coords", &name, "--basis", "canonical"]);
    assert_eq!(v["xi"], name);
    assert_eq!(v["std"].as_array().unwrap().len(), s.canonical_table().unwrap()[5].len());
    let v = run_json(&["schur", "compose", "3", "7", "--basis", "canonical"]);
    assert_eq!(v["basis"], "canonical");
}

#[test]
fn json_output_is_deterministic() {
    let a = run(&["dump", "--all", "--n", "1", "--format", "json", "--jobs", "1"]);
    let b = run(&["dump", "--all", "--n", "1", "--format", "json", "--jobs", "4"]);
    assert_eq!(a, b);
    let a = run(&["schur", "verify", "--suite", "positivity", "--n", "1", "--format", "json", "--jobs", "1"]);
    let b = run(&["schur", "verify", "--suite", "positivity", "--n", "1", "--format", "json", "--jobs", "3"]);
    assert_eq!(a, b);
}

fn assert_round_trip(args: &[&str], ws: &WeightSet) {
    let mut a = vec!["dump", "--all", "--format", "json"];
    a.extend(args);
    let (code, out, err) = run(&a);
    assert_eq!(code, 0, "{}", err);
    let d = Dump::from_json(&out).unwrap();
    assert_eq!(d, Dump::build(ws, true).unwrap());
    let r = d.restore().unwrap();
    assert_eq!(r.ws.elements(), ws.elements());
    assert_eq!(r.ws.orbits(), ws.orbits());
    assert_eq!(r.ws.xi(), ws.xi());
    let s = SchurAlgebra::new(ws);
    for n in 0..s.dim() {
        assert_eq!(r.canonical[n], s.canonical(n).unwrap());
        assert_eq!(r.std.as_ref().unwrap()[n], s.std(n));
    }
    let kl = KlTable::full(ws.group());
    for (w, c) in r.kl.as_ref().unwrap().iter().enumerate() {
        assert_eq!(c, kl.get(w));
    }
    let mut kl = KlTable::new(ws.group());
    for (i, c) in r.canonical_t.as_ref().unwrap().iter().enumerate() {
        assert_eq!(*c, canonical_t(ws, &mut kl, i).unwrap());
    }
    assert_eq!(Dump::build(&r.ws, true).unwrap(), d);
}

#[test]
fn dump_round_trips() {
    assert_round_trip(&["--n", "1"], &build_xn(1).unwrap());
    let p = seed_file("a2.json", "[[-1, -1], [0, -1], [0, 0]]");
    let datum = qschur_core::rootdata::CartanDatum::parse("A2").unwrap();
    let seeds = qschur::weights::parse_seeds(&datum, "[[-1, -1], [0, -1], [0, 0]]").unwrap();
    let ws = WeightSet::from_seeds(&datum, &seeds, 100).unwrap();
    assert_round_trip(&["--type", "A2", "--weights", p.to_str().unwrap()], &ws);
}

#[test]
fn restore_rejects_tampered_dumps() {
    let (_, out, _) = run(&["dump", "--n", "1", "--format", "json"]);
    let mut v: Value = serde_json::from_str(&out).unwrap();
    v["weights"][0] = serde_json::json!([5, 5]);
    let d: Dump = serde_json::from_value(v.clone()).unwrap();
    assert!(d.restore().is_err());
    v["format"] = "other".into();
    let d: Dump = serde_json::from_value(v).unwrap();
    assert!(d.restore().is_err());
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_qschur");
    let ok = Command::new(bin).args(["info", "--n", "1"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("|X| = 13"));
    let bad = Command::new(bin).args(["info", "--type", "Z9"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
    let refused = Command::new(bin).args(["schur", "verify", "--suite", "duality", "--n", "1"]).output().unwrap();
    assert_eq!(refused.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&refused.stderr).starts_with('{'));
}
