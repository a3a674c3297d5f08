use std::fs;
use std::path::Path;

use lenzkit::cli::run;
use serde_json::Value;

fn lenzkit(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("lenzkit").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn gen(dir: &Path, name: &str, args: &[&str]) -> String {
    let out = dir.join(name).display().to_string();
    let mut full = vec!["gen"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["--out", &out]);
    let (code, _, err) = lenzkit(&full);
    assert_eq!(code, 0, "{err}");
    out
}

fn json(text: &str) -> Value {
    serde_json::from_str(text).unwrap()
}

#[test]
fn gen_writes_points_and_sidecar() {
    let dir = tempfile::tempdir().unwrap();
    let path = gen(
        dir.path(),
        "u.json",
        &["--kind", "even-unit", "--d", "6", "--n", "24"],
    );
    let file = json(&fs::read_to_string(&path).unwrap());
    assert_eq!(file["schema"], "pointconfig/1");
    assert_eq!(file["points"].as_array().unwrap().len(), 24);
    let report = json(&fs::read_to_string(format!("{path}.report.json")).unwrap());
    assert_eq!(report["achieved_count"], 216);
    assert_eq!(report["expected_count"], 216);

    let sphere = gen(
        dir.path(),
        "s.json",
        &["--kind", "sphere-diam", "--n", "15"],
    );
    let (code, out, _) = lenzkit(&["count", &sphere, "--kind", "diameter"]);
    assert_eq!((code, out.trim()), (0, "28"));
}

#[test]
fn unachievable_d5_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("x.json").display().to_string();
    let (code, _, err) = lenzkit(&["gen", "--kind", "d5-diam", "--n", "8", "--out", &out]);
    assert_eq!(code, 2);
    assert!(err.contains("unachievable"), "{err}");
    assert!(!Path::new(&out).exists());
}

#[test]
fn table_csv_rows() {
    let (code, out, _) = lenzkit(&[
        "table",
        "--formula",
        "diam",
        "--d",
        "4..7",
        "--n",
        "6..12",
        "--format",
        "csv",
    ]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "d,n,value,case,asymptotic_only");
    assert_eq!(lines.len(), 29);
    assert!(lines.iter().any(|l| l.starts_with("5,10,35,")));
    assert!(lines.iter().any(|l| l.starts_with("6,12,51,")));
}

#[test]
fn count_unit_square() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sq.json");
    fs::write(
        &path,
        r#"{"schema": "pointconfig/1", "dim": 2, "points": [[0,0],[1,0],[1,1],[0,1]]}"#,
    )
    .unwrap();
    let (code, out, _) = lenzkit(&["count", path.to_str().unwrap(), "--kind", "unit"]);
    assert_eq!((code, out.trim()), (0, "4"));
    let (_, out, _) = lenzkit(&["count", path.to_str().unwrap(), "--kind", "diameter"]);
    assert_eq!(out.trim(), "2");
}

#[test]
fn detect_finds_three_circles() {
    let dir = tempfile::tempdir().unwrap();
    let path = gen(
        dir.path(),
        "u.json",
        &[
            "--kind",
            "even-unit",
            "--d",
            "6",
            "--n",
            "24",
            "--seed",
            "5",
        ],
    );
    let (code, out, _) = lenzkit(&["detect", &path]);
    assert_eq!(code, 0);
    let s = json(&out);
    assert_eq!(s["partition"].as_array().unwrap().len(), 3);
    assert!(s["residual"].as_array().unwrap().is_empty());
    assert_eq!(s["pairwise_orthogonal"], true);
}

#[test]
fn verify_and_tampering() {
    let dir = tempfile::tempdir().unwrap();
    let path = gen(
        dir.path(),
        "d.json",
        &[
            "--kind",
            "even-unit",
            "--d",
            "6",
            "--n",
            "24",
            "--seed",
            "1",
        ],
    );
    let (code, out, _) = lenzkit(&["verify", &path]);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["match"], true);

    let sidecar = format!("{path}.report.json");
    let mut report = json(&fs::read_to_string(&sidecar).unwrap());
    report["generator"]["generator"] = Value::from("even-diam");
    fs::write(&sidecar, report.to_string()).unwrap();
    let (code, out, _) = lenzkit(&["verify", &path]);
    assert_eq!(code, 3);
    assert_eq!(json(&out)["match"], false);
}

#[test]
fn edited_points_break_sidecar_consistency() {
    let dir = tempfile::tempdir().unwrap();
    let path = gen(
        dir.path(),
        "u.json",
        &["--kind", "even-unit", "--d", "6", "--n", "12"],
    );
    let mut file = json(&fs::read_to_string(&path).unwrap());
    file["points"][0][0] = Value::from(0.25);
    fs::write(&path, file.to_string()).unwrap();
    let (code, out, _) = lenzkit(&["verify", &path]);
    assert_eq!(code, 3);
    let v = json(&out);
    assert_eq!(
        (v["match"].clone(), v["sidecar_consistent"].clone()),
        (Value::from(false), Value::from(false))
    );
}

#[test]
fn malformed_files_exit_1() {
    let dir = tempfile::tempdir().unwrap();
    let cases = [
        ("broken.json", "{\"schema\": "),
        (
            "schema.json",
            r#"{"schema": "other", "dim": 2, "points": []}"#,
        ),
        (
            "ragged.json",
            r#"{"schema": "pointconfig/1", "dim": 2, "points": [[0, 1, 2]]}"#,
        ),
    ];
    for (name, text) in cases {
        let path = dir.path().join(name);
        fs::write(&path, text).unwrap();
        let (code, _, err) = lenzkit(&["count", path.to_str().unwrap(), "--kind", "unit"]);
        assert_eq!(code, 1, "{name}");
        assert!(err.contains(name), "{err}");
    }
    let (code, _, _) = lenzkit(&["count", "/nonexistent/p.json", "--kind", "unit"]);
    assert_eq!(code, 1);
    let (code, _, _) = lenzkit(&["gen", "--kind", "even-unit", "--n", "5", "--out", "x"]);
    assert_eq!(code, 1);
}

#[test]
fn round_trip_and_byte_stability() {
    let kinds: [&[&str]; 4] = [
        &[
            "--kind",
            "even-diam",
            "--d",
            "8",
            "--n",
            "30",
            "--seed",
            "3",
        ],
        &["--kind", "d4-diam", "--n", "17"],
        &[
            "--kind",
            "d5-diam",
            "--n",
            "20",
            "--strategy",
            "sphere-heavy",
            "--seed",
            "9",
        ],
        &["--kind", "squares", "--n", "11"],
    ];
    let (a, b) = (tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap());
    for args in kinds {
        let p = gen(a.path(), "c.json", args);
        let q = gen(b.path(), "c.json", args);
        assert_eq!(fs::read(&p).unwrap(), fs::read(&q).unwrap());
        assert_eq!(
            fs::read(format!("{p}.report.json")).unwrap(),
            fs::read(format!("{q}.report.json")).unwrap()
        );
        let report = json(&fs::read_to_string(format!("{p}.report.json")).unwrap());
        let kind = if report["kind"] == "unit-distance" {
            "unit"
        } else {
            "diameter"
        };
        let (_, out, _) = lenzkit(&["count", &p, "--kind", kind]);
        assert_eq!(out.trim(), report["achieved_count"].to_string());
        let first = lenzkit(&["detect", &p, "--seed", "4"]);
        assert_eq!(first, lenzkit(&["detect", &p, "--seed", "4"]));
        assert_eq!(lenzkit(&["verify", &p]), lenzkit(&["verify", &p]));
    }
}
