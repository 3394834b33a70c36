use std::process::{Command, Output};

fn cmpp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cmpp"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("json on stdout")
}

#[test]
fn verify_exit_codes() {
    let ok = cmpp(&["verify", "--family", "main", "--ell", "1", "--i", "1", "--max-weight", "20"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).starts_with("PASS"));

    let ok = cmpp(&["verify", "--family", "main", "--ell", "3", "--i", "2", "--max-weight", "25"]);
    assert_eq!(ok.status.code(), Some(0));

    let bad = cmpp(&[
        "verify", "--family", "main", "--ell", "1", "--i", "1", "--max-weight", "20", "--perturb", "1",
    ]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&bad.stdout).starts_with("FAIL"));

    let usage = cmpp(&["verify", "--family", "main", "--ell", "1"]);
    assert_eq!(usage.status.code(), Some(2));
    let usage = cmpp(&["verify", "--family", "nonsense", "--ell", "1", "--i", "0"]);
    assert_eq!(usage.status.code(), Some(2));
    let usage = cmpp(&["verify", "--family", "bounded-p0", "--ell", "1"]);
    assert_eq!(usage.status.code(), Some(2));
}

#[test]
fn verify_writes_reports() {
    let dir = std::env::temp_dir().join(format!("cmpp-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let json = dir.join("report.json");
    let csv = dir.join("report.csv");
    let out = cmpp(&[
        "verify", "--family", "bressoud", "--ell", "2", "--a", "1", "--max-weight", "15",
        "--json", json.to_str().unwrap(), "--csv", csv.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(report["pass"], true);
    assert_eq!(report["family"], "bressoud");
    let text = std::fs::read_to_string(&csv).unwrap();
    assert!(text.starts_with("family,ell,index,j,n,series,count,match\n"));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn heights_worked_example() {
    let out = cmpp(&["heights", "--ell", "3", "--k", "0,0,1,0", "--parts", "3:0,7:1,14:2,23:2,26:2,34:1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    let hs: Vec<u64> = v["heights"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["relative_height"].as_u64().unwrap())
        .collect();
    assert_eq!(hs, vec![0, 1, 2, 2, 0, 1]);
    assert_eq!(v["profile"], serde_json::json!([2, 2, 2]));
    assert!(v.get("trace").is_none());

    let traced = cmpp(&[
        "heights", "--ell", "3", "--k", "0,0,1,0", "--parts", "3:0,7:1,14:2,23:2,26:2,34:1", "--trace",
    ]);
    let v = stdout_json(&traced);
    assert_eq!(v["trace"]["folds"].as_array().unwrap().len(), 6);
}

#[test]
fn heights_rejects_inadmissible_and_malformed() {
    // literal reading with 26 at height 1 collides with 23 on the standard grid
    let out = cmpp(&["heights", "--ell", "3", "--k", "0,0,1,0", "--parts", "3:0,7:1,14:2,23:2,26:1,34:1"]);
    assert_eq!(out.status.code(), Some(2));
    let out = cmpp(&["heights", "--ell", "3", "--k", "0,0,1,0", "--parts", "3;0"]);
    assert_eq!(out.status.code(), Some(2));
    let out = cmpp(&[
        "heights", "--ell", "3", "--k", "0,0,1,0", "--variant", "reflected", "--parts",
        "3:0,7:1,14:2,23:2,26:1,34:1",
    ]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn decompose_and_base() {
    let out = cmpp(&["decompose", "--ell", "3", "--i", "2", "--parts", "3:0,7:1,14:2,23:2,26:2,34:1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["vector"], serde_json::json!([[2, 17], [3, 16], [5, 8]]));
    assert_eq!(v["weight_check"], true);
    let mags: Vec<u64> = v["base"]
        .as_array()
        .unwrap()
        .iter()
        .map(|p| p["magnitude"].as_u64().unwrap())
        .collect();
    assert_eq!(mags, vec![1, 3, 6, 10, 15, 21]);

    let out = cmpp(&["base", "--ell", "3", "--i", "2", "--profile", "2,2,2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["weight"], 56);
    assert_eq!(v["partition"]["variant"], "standard");

    let out = cmpp(&["base", "--ell", "3", "--i", "2", "--profile", "2,two"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn enumerate_formats() {
    let out = cmpp(&["enumerate", "--ell", "1", "--k", "0,1", "--max-weight", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text, "j,n,count\n0,0,1\n1,1,1\n1,2,1\n1,3,1\n1,4,1\n2,4,1\n");

    let out = cmpp(&["enumerate", "--ell", "1", "--k", "0,1", "--max-weight", "4", "--format", "json"]);
    let v = stdout_json(&out);
    assert_eq!(v["totals"], serde_json::json!(["1", "1", "1", "1", "2"]));

    let out = cmpp(&["enumerate", "--ell", "1", "--k", "0,1", "--max-weight", "4", "--format", "stream"]);
    let lines: Vec<_> = String::from_utf8(out.stdout).unwrap().lines().map(String::from).collect();
    assert_eq!(lines.len(), 6);
    assert_eq!(lines[0], r#"{"ell":1,"k":[0,1],"variant":"standard","parts":[]}"#);
}

#[test]
fn series_formats() {
    let out = cmpp(&["series", "--family", "main", "--ell", "1", "--i", "1", "--max-weight", "6", "--max-z", "3"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("z_degree,q_degree,coefficient\n0,0,1\n1,1,1\n"));
    assert!(text.contains("\n2,4,1\n"));

    let out = cmpp(&[
        "series", "--family", "bounded-p0", "--ell", "1", "--bound", "5", "--max-weight", "10", "--max-z", "2",
        "--format", "json",
    ]);
    let v = stdout_json(&out);
    let z1: Vec<_> = v.as_array().unwrap().iter().filter(|e| e["z"] == 1).collect();
    assert_eq!(z1.len(), 3);
    assert_eq!(z1[0]["c"], "1");
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "--family", "star", "--ell", "2", "--i", "1", "--max-weight", "18"];
    assert_eq!(cmpp(&args).stdout, cmpp(&args).stdout);
    let args = ["enumerate", "--ell", "2", "--i", "0", "--max-weight", "12", "--format", "stream"];
    assert_eq!(cmpp(&args).stdout, cmpp(&args).stdout);
}

#[test]
fn heights_and_base_csv() {
    let out = cmpp(&["heights", "--ell", "3", "--i", "2", "--parts", "3:0,7:1,14:2,23:2,26:2,34:1", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text, "magnitude,absolute_height,relative_height\n3,0,0\n7,1,1\n14,2,2\n23,2,2\n26,2,0\n34,1,1\n");

    let out = cmpp(&["base", "--ell", "3", "--i", "2", "--profile", "1,0,1", "--format", "csv"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "magnitude,absolute_height\n1,1\n5,2\n");

    let out = cmpp(&["heights", "--ell", "3", "--i", "2", "--parts", "3:0", "--trace", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(2));
    let out = cmpp(&["decompose", "--ell", "3", "--i", "2", "--parts", "3:0", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(2));
}
