use std::fs;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sigma-lab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn sigma_of_k2() {
    let out = run(&["sigma", "--graph6", "A_"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "1\n");
}

#[test]
fn star_spectrum() {
    let out = run(&["spectrum", "--family", "star", "--n", "5"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "5, 1, 1, 1, 0\n");
}

#[test]
fn families_need_their_parameters() {
    let out = run(&["sigma", "--family", "complete-bipartite", "--r", "2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--s"));
    let out = run(&[
        "sigma",
        "--family",
        "complete-bipartite",
        "--r",
        "2",
        "--s",
        "3",
    ]);
    assert_eq!(stdout(&out), "2\n");
    let out = run(&["sigma", "--family", "remark", "--s", "3"]);
    assert_eq!(stdout(&out), "3\n");
    let out = run(&["sigma", "--family", "spider", "--kind", "thin", "--k", "2"]);
    assert_eq!(stdout(&out), "2\n");
}

#[test]
fn file_input_labels_each_line() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("in.g6");
    fs::write(&path, ">>graph6<<A_\n\nDQc\n").unwrap();
    let out = run(&["sigma", "--file", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "A_ 1\nDQc 2\n");
}

#[test]
fn classify_reports_witnesses() {
    let out = run(&["classify", "--graph6", "Ch"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["sigma"], 2);
    assert_eq!(v["spider"]["kind"], "thin");
    assert_eq!(v["cograph"], false);
    assert_eq!(v["tree"], true);
    assert_eq!(v["spectrum"][3], 0.0);
}

#[test]
fn compose_join() {
    let out = run(&["compose", "--op", "join", "--left", "A_", "--right", "A?"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "graph6 C}\nspectrum 4, 4, 2, 0\n");
    let out = run(&["compose", "--op", "union", "--left", "A_", "--right", "@"]);
    assert_eq!(stdout(&out), "graph6 B_\nspectrum 2, 0, 0\n");
}

#[test]
fn enumerate_counts() {
    let out = run(&["enumerate", "--n", "5"]);
    assert_eq!(stdout(&out).lines().count(), 34);
    let out = run(&["enumerate", "--n", "4", "--up-to"]);
    assert_eq!(stdout(&out).lines().count(), 18);
    let out = run(&["enumerate", "--n", "9"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verify_order_seven_writes_report() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("report.json");
    let csv = dir.path().join("summary.csv");
    let out = run(&[
        "verify",
        "--enumerate",
        "7",
        "--laws",
        "all",
        "--out",
        json.to_str().unwrap(),
        "--csv",
        csv.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let summary = fs::read_to_string(&csv).unwrap();
    assert_eq!(stdout(&out), summary);
    assert!(summary.starts_with("law,holds,fails,na,errors\n"));
    assert_eq!(summary.lines().count(), 16);
    let report: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(report["graphs"], 1252);
    for law in report["laws"].as_array().unwrap() {
        assert_eq!(law["fails"], 0, "{}", law["id"]);
    }
}

#[test]
fn reports_are_identical_across_job_counts() {
    let dir = tempfile::tempdir().unwrap();
    let mut reports = Vec::new();
    for jobs in ["1", "4"] {
        let path = dir.path().join(format!("r{jobs}.json"));
        let out = run(&[
            "verify",
            "--enumerate",
            "6",
            "--jobs",
            jobs,
            "--out",
            path.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0));
        let mut v: serde_json::Value =
            serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
        v["runtime_ms"] = 0.into();
        reports.push(v);
    }
    assert_eq!(reports[0], reports[1]);
}

#[test]
fn verify_selected_laws_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c5.g6");
    fs::write(&path, "Dhc\n").unwrap();
    let out = run(&[
        "verify",
        "--file",
        path.to_str().unwrap(),
        "--laws",
        "sigma_oracle,grone",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "law,holds,fails,na,errors\ngrone,1,0,0,0\nsigma_oracle,1,0,0,0\n"
    );
}

#[test]
fn usage_and_parse_errors_exit_one() {
    assert_eq!(run(&["sigma"]).status.code(), Some(1));
    assert_eq!(
        run(&["sigma", "--graph6", "A_", "--family", "star"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(run(&["sigma", "--bogus"]).status.code(), Some(1));
    assert_eq!(run(&["sigma", "--graph6", "A!"]).status.code(), Some(1));
    assert_eq!(
        run(&["verify", "--enumerate", "3", "--laws", "nope"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        run(&["verify", "--file", "/nonexistent/x.g6"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn malformed_corpus_line_is_reported_with_its_number() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.g6");
    fs::write(&path, "A_\nA_x\n").unwrap();
    let out = run(&["verify", "--file", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
}

#[test]
fn a_failing_verdict_exits_two() {
    // a tie tolerance of 5 makes the floating count of C5 disagree with the exact one
    let out = run(&[
        "verify",
        "--graph6",
        "Dhc",
        "--laws",
        "sigma_oracle",
        "--tie-tol",
        "5",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("counterexample sigma_oracle: Dhc"));
}
