use momentforge::cli::{run_with, EXIT_INVALID, EXIT_OK};

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("momentforge").chain(args.iter().copied());
    let code = run_with(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

const WORKED: &str = "P=0,0,1,0;Q=1,0,0,1";
const TYPICAL: &str = "P=1,0,-5,0;Q=0,1,0,1";

#[test]
fn worked_pencil_moment_by_brute_force() {
    let (code, out, _) = run(&["moment", "--pencil", WORKED, "--q", "3", "--method", "brute"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.lines().any(|l| l.split_whitespace().eq(["M~2", "9"])), "{out}");
}

#[test]
fn moment_methods_agree_in_json() {
    let get = |method: &str| {
        let (code, out, err) = run(&["--json", "moment", "--pencil", TYPICAL, "--q", "31", "--method", method]);
        assert_eq!(code, EXIT_OK, "{err}");
        serde_json::from_str::<serde_json::Value>(&out).unwrap()
    };
    let (brute, fast, smooth) = (get("brute"), get("fast"), get("smooth"));
    for key in ["m2", "m2_tilde", "a_inf", "delta", "c", "c_tilde", "s"] {
        assert_eq!(brute.get(key), fast.get(key), "{key}");
        assert_eq!(fast.get(key), smooth.get(key), "{key}");
    }
    assert!(smooth["smooth"]["d"].is_i64());
    assert!(brute["smooth"].is_null());
}

#[test]
fn moment_over_extension_field() {
    let (code, out, _) = run(&["--json", "moment", "--pencil", TYPICAL, "--q", "25"]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["q"], 25);
}

#[test]
fn classify_case8() {
    let (code, out, _) = run(&["classify", "--pencil", "P=1,0,0,1;Q=0,0,0,1"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.lines().next(), Some("Case8"));
    let (_, out, _) = run(&["--json", "classify", "--pencil", "P=1,0,0,1;Q=0,0,0,1", "--mod", "7"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["case"], "Case8");
    assert_eq!(v["mod"], 7);
}

#[test]
fn invariants_report_prediction() {
    let (code, out, _) = run(&["--json", "invariants", "--pencil", TYPICAL]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["typical"], true);
    assert_eq!(v["conic_identity"], true);
    assert!(v["predicted_bias"].is_i64());
}

#[test]
fn verify_passes_and_names_every_check() {
    let (code, out, _) = run(&["verify", "--pencil", TYPICAL, "--qmax", "13"]);
    assert_eq!(code, EXIT_OK, "{out}");
    for name in [
        "threefold-count",
        "curve-formula",
        "curve-defect",
        "resultant-identity",
        "conic-discriminant",
        "smooth-moment",
        "quotient-identity",
        "quotient-conic",
        "weil-bounds",
        "l-polynomials",
    ] {
        assert!(out.contains(name), "{name} missing from\n{out}");
    }
    assert!(!out.contains("FAIL"));
}

#[test]
fn invalid_input_exits_with_one() {
    assert_eq!(run(&["moment", "--pencil", "P=1,2;Q=1", "--q", "5"]).0, EXIT_INVALID);
    assert_eq!(run(&["moment", "--pencil", WORKED, "--q", "6"]).0, EXIT_INVALID);
    assert_eq!(run(&["moment", "--pencil", WORKED, "--q", "5", "--method", "magic"]).0, EXIT_INVALID);
    assert_eq!(run(&["moment", "--pencil", WORKED, "--q", "5", "--bogus"]).0, EXIT_INVALID);
    assert_eq!(run(&["oracle", "threefold", "--pencil", WORKED, "--q", "37"]).0, EXIT_INVALID);
    assert_eq!(run(&["sweep", "--pencil", "P=0,0,0,1;Q=0,0,0,2", "--xmax", "50", "--out", "/dev/null"]).0, EXIT_INVALID);
    let (code, _, err) = run(&["nonsense"]);
    assert_eq!(code, EXIT_INVALID);
    assert!(!err.is_empty());
}

#[test]
fn help_and_version_exit_zero() {
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("verify"));
    assert_eq!(run(&["--version"]).0, EXIT_OK);
}

#[test]
fn oracle_threefold_in_even_characteristic() {
    let (code, out, _) = run(&["--json", "oracle", "threefold", "--pencil", WORKED, "--q", "4"]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["threefold"], 80);
    assert_eq!(v["holds"], true);
}

#[test]
fn pencil_from_json_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("pencil.json");
    std::fs::write(&path, r#"{"a": ["0", "0", "1", "0"], "b": ["1", "0", "0", "1"]}"#).unwrap();
    let spec = format!("@{}", path.display());
    let (code, out, _) = run(&["moment", "--pencil", &spec, "--q", "3"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("M~2       9"), "{out}");
}

#[test]
fn sweep_csv_is_independent_of_workers_and_matches_json() {
    let dir = tempfile::tempdir().unwrap();
    let one = dir.path().join("one.csv");
    let three = dir.path().join("three.csv");
    let json = dir.path().join("rows.json");
    for (path, workers) in [(&one, "1"), (&three, "3")] {
        let p = path.to_str().unwrap();
        let (code, _, err) = run(&["sweep", "--pencil", TYPICAL, "--xmax", "800", "--out", p, "--workers", workers]);
        assert_eq!(code, EXIT_OK, "{err}");
    }
    let csv_one = std::fs::read(&one).unwrap();
    assert_eq!(csv_one, std::fs::read(&three).unwrap());
    let (code, _, _) = run(&["--json", "sweep", "--pencil", TYPICAL, "--xmax", "800", "--out", json.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    let rows: Vec<serde_json::Value> = serde_json::from_slice(&std::fs::read(&json).unwrap()).unwrap();
    let mut reader = csv::Reader::from_reader(csv_one.as_slice());
    let header = reader.headers().unwrap().clone();
    let records: Vec<_> = reader.records().map(Result::unwrap).collect();
    assert_eq!(records.len(), rows.len());
    for (record, row) in records.iter().zip(&rows) {
        for (name, field) in header.iter().zip(record.iter()) {
            let expected = match &row[name] {
                serde_json::Value::Null => String::new(),
                serde_json::Value::String(s) => s.clone(),
                other => other.to_string(),
            };
            assert_eq!(field, expected, "column {name}");
        }
    }
}

#[test]
fn bias_reports_exact_identity() {
    let (code, out, err) = run(&["--json", "bias", "--pencil", TYPICAL, "--xmax", "3000"]);
    assert_eq!(code, EXIT_OK, "{err}");
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["avg2_exact_identity"], true);
    assert!(v["predicted"].is_i64());
    assert!(v["chebotarev_average"].is_string());
}
