use std::path::PathBuf;
use std::process::Command;

use gorenstein_cli::checks::{all_checks, Status};
use gorenstein_cli::report::{ReportDocument, REPORT_SCHEMA};
use gorenstein_cli::run_command;

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "fixtures", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run_command(args.iter().copied(), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn validate(text: &str) -> ReportDocument {
    let schema: serde_json::Value = serde_json::from_str(REPORT_SCHEMA).unwrap();
    let validator = jsonschema::validator_for(&schema).unwrap();
    let value: serde_json::Value = serde_json::from_str(text).unwrap();
    let errors: Vec<String> = validator.iter_errors(&value).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{errors:?}\n{text}");
    let doc: ReportDocument = serde_json::from_value(value.clone()).unwrap();
    assert_eq!(serde_json::to_value(&doc).unwrap(), value, "lossless round trip");
    doc
}

#[test]
fn classify_fixture_prints_a1sp() {
    let (code, out, _) = run(&["classify", "--ideal", &fixture("a1sp.json")]);
    assert_eq!((code, out.trim()), (0, "A1sp"));
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_gorenstein");
    let st = Command::new(bin).args(["construct", "gfat", "--d", "3"]).output().unwrap();
    assert_eq!(st.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&st.stderr).contains("at least 4"));
    let st = Command::new(bin).args(["classify", "--ideal", &fixture("a1sp.json")]).output().unwrap();
    assert_eq!(st.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&st.stdout).trim(), "A1sp");
    let st = Command::new(bin).arg("no-such-command").output().unwrap();
    assert_eq!(st.status.code(), Some(2));
}

#[test]
fn usage_and_computational_errors() {
    assert_eq!(run(&["construct", "gfat", "--d", "3"]).0, 2);
    assert_eq!(run(&["classify", "--ideal", "/nonexistent.json"]).0, 2);
    assert_eq!(run(&["verify-paper", "--filter", "no-such-check"]).0, 2);
    assert_eq!(run(&["construct", "gfat", "--d", "5", "--field", "Fp(3)"]).0, 2);
    let dir = tempfile::tempdir().unwrap();
    // x^2 - 2 has no rational roots.
    let irr = dir.path().join("irrational.json");
    std::fs::write(&irr, r#"{"ring": {"field": "QQ", "vars": ["x"]}, "generators": ["x^2 - 2"]}"#).unwrap();
    let (code, _, err) = run(&["classify", "--ideal", irr.to_str().unwrap()]);
    assert_eq!(code, 3, "{err}");
    assert!(err.contains("irrational support"), "{err}");
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"ring": {"field": "QQ", "vars": ["x"]}, "generators": ["x^^2"]}"#).unwrap();
    assert_eq!(run(&["gb", "--ideal", bad.to_str().unwrap()]).0, 2);
}

#[test]
fn script_runs_and_reports_errors() {
    let (code, out, _) = run(&["run", &fixture("g6.gor")]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().collect::<Vec<_>>(), ["6", "[1, 5, 6, 6]", "true", "29"]);
    let dir = tempfile::tempdir().unwrap();
    let s = dir.path().join("bad.gor");
    std::fs::write(&s, "ideal I = x^2;").unwrap();
    let (code, _, err) = run(&["run", s.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("line 1, column 1: no ring declared"), "{err}");
    std::fs::write(&s, "ring R = QQ[x];\nprint tangent(ideal(x^2 - 2));").unwrap();
    assert_eq!(run(&["run", s.to_str().unwrap()]).0, 3);
}

#[test]
fn tangent_filter_reports_expected_value() {
    let (code, out, _) = run(&["verify-paper", "--filter", "tangent-g6"]);
    assert_eq!(code, 0);
    assert!(out.contains("PASS tangent-g6"), "{out}");
    assert!(out.contains("29 = expected 29"), "{out}");
    let (code, json, _) = run(&["--json", "verify-paper", "--filter", "tangent-g6"]);
    assert_eq!(code, 0);
    let doc = validate(&json);
    assert_eq!(doc.verdicts.len(), 1);
    assert_eq!(doc.verdicts[0].status, Status::Pass);
    assert!(doc.verdicts[0].detail.contains("29 = expected 29"));
}

#[test]
fn rational_mode_skips_checks_needing_i() {
    let (code, out, _) = run(&["verify-paper", "--filter", "g6", "--field", "QQ"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("SKIP scandinavian-g6"), "{out}");
    assert!(out.contains("PASS tangent-g6"), "{out}");
}

#[test]
fn every_check_has_a_distinct_name_and_criterion() {
    let checks = all_checks();
    let mut names: Vec<_> = checks.iter().map(|c| c.name).collect();
    names.dedup();
    assert_eq!(names.len(), checks.len());
    for n in 1..=16u8 {
        assert!(checks.iter().any(|c| c.criterion == n), "criterion {n} has no check");
    }
}

#[test]
fn json_reports_validate_and_match_text() {
    let g6 = fixture("g6.json");
    let a1sp = fixture("a1sp.json");
    let cases: Vec<Vec<&str>> = vec![
        vec!["gb", "--ideal", &a1sp],
        vec!["hfun", "--ideal", &g6, "--up-to", "3"],
        vec!["classify", "--ideal", &a1sp],
        vec!["classify", "--ideal", &g6],
        vec!["tangent", "--ideal", &g6],
        vec!["is-ag", "--ideal", &g6],
        vec!["stratum", "--ideal", &g6],
        vec!["construct", "gfat", "--d", "6"],
        vec!["family-fiber", "--family", "a26-to-a25-a01", "--b", "1"],
        vec!["catalog", "list"],
        vec!["catalog", "show", "A2sp"],
        vec!["run", "fixtures/g6.gor"],
    ];
    let g6_script = fixture("g6.gor");
    for mut args in cases {
        if args[0] == "run" {
            args[1] = &g6_script;
        }
        let (code, text, err) = run(&args);
        assert_eq!(code, 0, "{args:?}: {err}");
        let mut jargs = vec!["--json"];
        jargs.extend(&args);
        let (code, json, err) = run(&jargs);
        assert_eq!(code, 0, "{args:?}: {err}");
        let doc = validate(&json);
        assert_eq!(doc.command, args[..if args[0] == "construct" || args[0] == "catalog" { 2 } else { 1 }].join(" "));
        // Every number in the text form appears in the JSON form.
        let digits = |s: &str| -> Vec<String> {
            s.split(|c: char| !c.is_ascii_digit()).filter(|t| !t.is_empty()).map(String::from).collect()
        };
        let json_numbers = digits(&json);
        for n in digits(&text) {
            assert!(json_numbers.contains(&n), "{args:?}: {n} missing from JSON");
        }
    }
}

#[test]
fn tangent_json_carries_scheme_report() {
    let (_, json, _) = run(&["--json", "tangent", "--ideal", &fixture("g6.json")]);
    let doc = validate(&json);
    let s = doc.scheme.unwrap();
    assert_eq!((s.degree, s.tangent_dim, s.ag), (6, Some(29), true));
    assert_eq!(s.label.unwrap().to_string(), "A4,6");
}

#[test]
fn constructions_from_matrix_files() {
    let (code, out, err) = run(&["construct", "scandinavian", "--matrix", &fixture("scandinavian_g6.json")]);
    assert_eq!(code, 0, "{err}");
    assert_eq!(out.lines().count(), 9);
    let dir = tempfile::tempdir().unwrap();
    let write = |name: &str, body: &str| {
        let p = dir.path().join(name);
        std::fs::write(&p, body).unwrap();
        p.to_string_lossy().into_owned()
    };
    let ring = r#"{"field": "QQ", "vars": ["x0", "x1", "x2", "x3", "x4"]}"#;
    let ah = write(
        "ah.json",
        &format!(
            r#"{{"ring": {ring}, "entries": [["0","x2","x1","x3","x0"],["-x2","0","0","0","x3"],["-x1","0","0","-x2","0"],["-x3","0","x2","0","x1"],["-x0","-x3","0","-x1","0"]]}}"#
        ),
    );
    let (code, out, err) = run(&["construct", "anglo-hellenic", "--matrix", &ah, "--s", "x4"]);
    assert_eq!(code, 0, "{err}");
    assert!(out.lines().any(|l| l.replace(" ", "") == "-x1*x2+x4^2"), "{out}");
    let not_anti = write("na.json", &format!(r#"{{"ring": {ring}, "entries": [["0","x1","0","0","0"],["x1","0","0","0","0"],["0","0","0","0","0"],["0","0","0","0","0"],["0","0","0","0","0"]]}}"#));
    let (code, _, err) = run(&["construct", "anglo-hellenic", "--matrix", &not_anti, "--s", "x4"]);
    assert_eq!(code, 2);
    assert!(err.contains("antisymmetric"), "{err}");
    let aa = write(
        "aa.json",
        &format!(r#"{{"ring": {{"field": {{"Fp": 65537}}, "vars": ["x0","x1","x2","x3","x4"]}}, "entries": [[["-x3","x1"],["256*x4","-x2"]],[["x2","256*x4"],["-x1","x3"]]]}}"#),
    );
    let (code, out, _) = run(&["construct", "anglo-american", "--array", &aa]);
    assert_eq!(code, 0);
    assert!(!out.is_empty());
    let (code, out, _) = run(&["construct", "japanese", "--conic", "x1*x2", "--cubic", "x2^3 - x1^3"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 9);
    let g5 = write(
        "g5.json",
        r#"{"ring": {"field": "QQ", "vars": ["x0","x1","x2","x3"]}, "generators": ["x1*x2","x1*x3","x2*x3","x2^2 - x1^2","x3^2 - x1^2"]}"#,
    );
    let (code, out, err) = run(&["construct", "italian", "--ideal", &g5, "--g", "-x4"]);
    assert_eq!(code, 0, "{err}");
    assert!(out.contains("f = "), "{out}");
    let sym = write("s.json", &format!(r#"{{"ring": {ring}, "entries": [["x0","x1","x2"],["x1","x3","x4"],["x2","x4","x0"]]}}"#));
    let anti = write("a.json", &format!(r#"{{"ring": {ring}, "entries": [["0","x1","x2"],["-x1","0","x3"],["-x2","-x3","0"]]}}"#));
    let (code, out, err) = run(&["construct", "british", "--a", &anti, "--s", &sym, "--q", "1"]);
    assert_eq!(code, 0, "{err}");
    assert_eq!(out.lines().count(), 15);
}

#[test]
fn project_subcommand_drops_the_simple_point() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("a35.json");
    std::fs::write(
        &p,
        r#"{"ring": {"field": "QQ", "vars": ["x0","x1","x2","x3","x4"]},
            "generators": ["x0*x1","x0*x2","x0*x3","x1*x2","x1*x3","x2*x3","x1^2 - x0*x4","x2^2 - x0*x4","x3^2 - x0*x4"]}"#,
    )
    .unwrap();
    let (code, out, err) = run(&["project", "--ideal", p.to_str().unwrap(), "--point", "1,0,0,0,0"]);
    assert_eq!(code, 0, "{err}");
    let q = dir.path().join("proj.json");
    let (_, json, _) = run(&["--json", "project", "--ideal", p.to_str().unwrap(), "--point", "1,0,0,0,0"]);
    let doc = validate(&json);
    std::fs::write(&q, serde_json::to_string(&doc.result.unwrap()["ideal"]).unwrap()).unwrap();
    let (_, label, _) = run(&["classify", "--ideal", q.to_str().unwrap()]);
    assert_eq!(label.trim(), "A3,5");
    assert!(!out.is_empty());
}
