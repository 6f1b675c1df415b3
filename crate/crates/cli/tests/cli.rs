use std::process::{Command, Output};

fn hirzewahl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hirzewahl"))
        .args(args)
        .env_remove("HIRZEWAHL_JOBS")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = hirzewahl(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn corank_json_reports_nine() {
    let text = stdout(&[
        "corank", "--n", "0", "--a", "6", "--b", "9", "--delta", "1", "--format", "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["corank"], 9);
    assert_eq!(v["g"], 40);
    assert_eq!(v["g_tilde"], 39);
}

#[test]
fn genus_text() {
    assert_eq!(
        stdout(&["genus", "--n", "0", "--a", "6", "--b", "9", "--delta", "1"]),
        "g=40 g~=39\n"
    );
}

#[test]
fn scan_tsv_has_one_row_per_tuple() {
    let args = [
        "scan", "--n", "0..2", "--a", "6..8", "--b", "6..20", "--delta", "1..2", "--format", "tsv",
    ];
    let text = stdout(&args);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(
        lines[0],
        "n\ta\tb\tdelta\tg\tg_tilde\tthmA\tcorank\treider_A\treider_B\tnotes"
    );
    assert_eq!(lines.len(), 1 + 3 * 3 * 15 * 2);
    assert!(lines[1..].iter().all(|l| l.split('\t').count() == 11));
    let keys: Vec<Vec<u32>> = lines[1..]
        .iter()
        .map(|l| l.split('\t').take(4).map(|x| x.parse().unwrap()).collect())
        .collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
}

#[test]
fn scan_is_byte_identical_across_job_counts() {
    let base = [
        "scan", "--n", "0..3", "--a", "6..7", "--b", "20..40", "--delta", "0..2", "--format",
        "json",
    ];
    let one = stdout(&[&base[..], &["--jobs", "1"]].concat());
    let four = stdout(&[&base[..], &["--jobs", "4"]].concat());
    let again = stdout(&[&base[..], &["--jobs", "4"]].concat());
    assert_eq!(one, four);
    assert_eq!(four, again);
    let rows: serde_json::Value = serde_json::from_str(&one).unwrap();
    let first = &rows[0];
    for key in [
        "n", "a", "b", "delta", "g", "g_tilde", "thmA", "corank", "reider_A", "reider_B", "notes",
    ] {
        assert!(first.get(key).is_some(), "missing {key}");
    }
}

#[test]
fn output_file_matches_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("scan.tsv");
    let args = [
        "scan", "--n", "1", "--a", "6..7", "--b", "10..20", "--delta", "1", "--format", "tsv",
    ];
    let direct = stdout(&args);
    let p = path.to_str().unwrap();
    assert_eq!(stdout(&[&args[..], &["--output", p]].concat()), "");
    assert_eq!(std::fs::read_to_string(&path).unwrap(), direct);
}

#[test]
fn strict_mode_exit_codes() {
    let blocked = ["check-reider", "--n", "0", "1,1,1"];
    assert_eq!(hirzewahl(&blocked).status.code(), Some(0));
    assert_eq!(
        hirzewahl(&[&blocked[..], &["--strict"]].concat())
            .status
            .code(),
        Some(1)
    );
    let fine = ["check-reider", "--n", "0", "2,3,1", "--strict"];
    assert_eq!(hirzewahl(&fine).status.code(), Some(0));
    let unmet = [
        "corank", "--n", "0", "--a", "5", "--b", "9", "--delta", "1", "--strict",
    ];
    assert_eq!(hirzewahl(&unmet).status.code(), Some(1));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["frobnicate"][..],
        &["genus", "--n", "0", "--a", "6", "--b", "9", "--bogus"],
        &["scan", "--n", "3..1", "--a", "6", "--b", "6"],
        &["intersect", "--n", "0", "1"],
    ] {
        let out = hirzewahl(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
        assert!(out.stdout.is_empty());
    }
}

#[test]
fn domain_errors_exit_two_with_message() {
    let out = hirzewahl(&[
        "corank",
        "--n",
        "3",
        "--a",
        "6",
        "--b",
        "60",
        "--delta",
        "1",
        "--target-m",
        "3",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("m = n = 3"));
    let out = hirzewahl(&[
        "gaussian-rank",
        "--n",
        "0",
        "--a",
        "6",
        "--b",
        "9",
        "--delta",
        "1",
        "--max-wedge",
        "100",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("741"));
}

#[test]
fn embedding_and_intersection() {
    let text = stdout(&[
        "corank",
        "--n",
        "0",
        "--a",
        "6",
        "--b",
        "9",
        "--delta",
        "1",
        "--target-m",
        "5",
    ]);
    assert!(text.contains("embedding: cannot embed (9 vs 11)"));
    assert_eq!(
        stdout(&["intersect", "--n", "0", "6,9,2", "-2,-2,-1"]),
        "intersection=-28\n"
    );
    assert_eq!(
        stdout(&["intersect", "--n", "2", "1,0", "1,0"]),
        "intersection=-2\n"
    );
}

#[test]
fn cohomology_and_checks() {
    let text = stdout(&["cohomology", "--n", "2", "2,4", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["h0"], 9);
    assert_eq!(
        stdout(&["cohomology", "--n", "0", "4,7,1"]).lines().next(),
        Some("h0=39")
    );
    assert_eq!(
        stdout(&["check-ample", "--n", "2", "1,3"]),
        "bpf=true\nvery_ample=true\n"
    );
    assert_eq!(
        stdout(&["check-ample", "--n", "2", "1,2"]),
        "bpf=true\nvery_ample=false\n"
    );
    let jet = stdout(&[
        "check-jet",
        "--n",
        "1",
        "--a",
        "5",
        "--b",
        "9",
        "--delta",
        "2",
    ]);
    assert!(jet.starts_with("jet_ample=true\n"));
    assert_eq!(
        stdout(&["conjecture", "--n", "0", "--delta", "1", "--seed", "42"]),
        "lhs=9\nrhs=8\nholds=true\nseed=42\n"
    );
}

#[test]
fn gaussian_rank_timing_stays_off_stdout() {
    let args = [
        "gaussian-rank",
        "--n",
        "0",
        "--a",
        "6",
        "--b",
        "9",
        "--delta",
        "0",
        "--format",
        "json",
    ];
    let plain = stdout(&args);
    let out = hirzewahl(&[&args[..], &["--timing"]].concat());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), plain);
    assert!(String::from_utf8_lossy(&out.stderr).contains("elapsed_ms="));
    let v: serde_json::Value = serde_json::from_str(&plain).unwrap();
    assert_eq!(v["rank"], 222);
    assert_eq!(v["surjective"], "surjective");
    assert!(v.get("timing_ms").is_none());
}

#[test]
fn jobs_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_hirzewahl"))
        .args(["scan", "--n", "0", "--a", "6", "--b", "9", "--delta", "1"])
        .env("HIRZEWAHL_JOBS", "2")
        .output()
        .unwrap();
    assert!(out.status.success());
    let bad = Command::new(env!("CARGO_BIN_EXE_hirzewahl"))
        .args(["scan", "--n", "0", "--a", "6", "--b", "9"])
        .env("HIRZEWAHL_JOBS", "many")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}
