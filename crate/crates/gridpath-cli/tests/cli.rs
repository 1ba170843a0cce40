//! End-to-end checks of the `gridpath` binary: output discipline, exit
//! codes, input normalization, metrics, and the bench harness contract.

use std::fs;
use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

use tempfile::TempDir;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_gridpath"))
}

fn write_file(dir: &TempDir, name: &str, contents: &[u8]) -> std::path::PathBuf {
    let path = dir.path().join(name);
    fs::write(&path, contents).unwrap();
    path
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout_line(out: &Output) -> String {
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn lcs_prints_exactly_one_line_for_each_algo() {
    let dir = TempDir::new().unwrap();
    let a = write_file(&dir, "a", b"tokyo");
    let b = write_file(&dir, "b", b"kyoto");
    for algo in ["standard", "sublinear", "table"] {
        let out = run(&["lcs", path_str(&a), path_str(&b), "--algo", algo]);
        assert_eq!(stdout_line(&out), "3\n", "algo {algo}");
    }
}

#[test]
fn empty_input_gives_zero() {
    let dir = TempDir::new().unwrap();
    let a = write_file(&dir, "a", b"");
    let b = write_file(&dir, "b", b"anything");
    let out = run(&["lcs", path_str(&a), path_str(&b)]);
    assert_eq!(stdout_line(&out), "0\n");
}

#[test]
fn standard_and_sublinear_agree_on_random_pairs() {
    let dir = TempDir::new().unwrap();
    let mut state = 0x2545F4914F6CDD1Du64;
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    for trial in 0..100 {
        let la = (next() % 120) as usize;
        let lb = (next() % 120) as usize;
        let a_bytes: Vec<u8> = (0..la).map(|_| b'a' + (next() % 4) as u8).collect();
        let b_bytes: Vec<u8> = (0..lb).map(|_| b'a' + (next() % 4) as u8).collect();
        let a = write_file(&dir, &format!("a{trial}"), &a_bytes);
        let b = write_file(&dir, &format!("b{trial}"), &b_bytes);
        let std_out = run(&["lcs", path_str(&a), path_str(&b), "--algo", "standard"]);
        let sub_out = run(&["lcs", path_str(&a), path_str(&b), "--algo", "sublinear"]);
        assert_eq!(
            stdout_line(&std_out),
            stdout_line(&sub_out),
            "trial {trial}"
        );
    }
}

#[test]
fn unreadable_file_exits_2() {
    let out = run(&["lcs", "/nonexistent/file1", "/nonexistent/file2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
    assert!(out.stdout.is_empty());
}

#[test]
fn bad_flags_exit_2() {
    let dir = TempDir::new().unwrap();
    let a = write_file(&dir, "a", b"x");
    let out = run(&["lcs", path_str(&a), path_str(&a), "--algo", "wrong"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn stdin_dash_feeds_one_input() {
    let dir = TempDir::new().unwrap();
    let b = write_file(&dir, "b", b"kyoto");
    let mut child = bin()
        .args(["lcs", "-", path_str(&b)])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.as_mut().unwrap().write_all(b"tokyo").unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(stdout_line(&out), "3\n");
}

#[test]
fn double_stdin_exits_2() {
    let out = run(&["lcs", "-", "-"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn trailing_newline_is_stripped_once_unless_raw() {
    let dir = TempDir::new().unwrap();
    let plain = write_file(&dir, "plain", b"abc");
    let with_nl = write_file(&dir, "nl", b"abc\n");
    let with_crlf = write_file(&dir, "crlf", b"abc\r\n");
    let double_nl = write_file(&dir, "nn", b"abc\n\n");

    for f in [&with_nl, &with_crlf] {
        let out = run(&["lcs", path_str(f), path_str(&plain)]);
        assert_eq!(stdout_line(&out), "3\n");
    }
    // Only one newline comes off.
    let out = run(&["lcs", path_str(&double_nl), path_str(&plain)]);
    assert_eq!(stdout_line(&out), "3\n");
    let out = run(&["editdist", path_str(&double_nl), path_str(&plain)]);
    assert_eq!(stdout_line(&out), "1\n");
    // Raw keeps the newline: "abc\n" vs "abc" has distance 1, not 0.
    let out = run(&["editdist", "--raw", path_str(&with_nl), path_str(&plain)]);
    assert_eq!(stdout_line(&out), "1\n");
}

#[test]
fn editdist_defaults_and_costs() {
    let dir = TempDir::new().unwrap();
    let k = write_file(&dir, "k", b"kitten");
    let s = write_file(&dir, "s", b"sitting");
    let out = run(&["editdist", path_str(&k), path_str(&s)]);
    assert_eq!(stdout_line(&out), "3\n");
    let out = run(&["editdist", path_str(&k), path_str(&k)]);
    assert_eq!(stdout_line(&out), "0\n");
    // Substitution at 2 prices it as delete+insert; kitten/sitting LCS is
    // 4, so the distance becomes 6 + 7 - 2*4 = 5.
    let out = run(&["editdist", path_str(&k), path_str(&s), "--cost-sub", "2"]);
    assert_eq!(stdout_line(&out), "5\n");
    let out = run(&["editdist", path_str(&k), path_str(&s), "--cost-ins", "-1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn chars_mode_counts_scalars() {
    let dir = TempDir::new().unwrap();
    let a = write_file(&dir, "a", "héllo".as_bytes());
    let b = write_file(&dir, "b", "hello".as_bytes());
    let byte_out = run(&["editdist", path_str(&a), path_str(&b)]);
    assert_eq!(stdout_line(&byte_out), "2\n"); // two-byte é vs one-byte e
    let char_out = run(&["editdist", "--chars", path_str(&a), path_str(&b)]);
    assert_eq!(stdout_line(&char_out), "1\n");
    let bad = write_file(&dir, "bad", &[0xff, 0xfe]);
    let out = run(&["lcs", "--chars", path_str(&bad), path_str(&b)]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn metrics_json_has_the_documented_keys() {
    let dir = TempDir::new().unwrap();
    let a = write_file(&dir, "a", b"tokyo");
    let b = write_file(&dir, "b", b"kyoto");
    let metrics = dir.path().join("m.json");
    let out = run(&[
        "lcs",
        path_str(&a),
        path_str(&b),
        "--block-size",
        "2",
        "--metrics",
        path_str(&metrics),
    ]);
    assert_eq!(stdout_line(&out), "3\n");
    let json: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(&metrics).unwrap()).unwrap();
    for key in [
        "algo",
        "m",
        "n",
        "m_hat",
        "block",
        "result",
        "peak_aux_bits",
        "leaf_count",
        "inner_count",
        "max_depth",
        "elapsed_ms",
    ] {
        assert!(json.get(key).is_some(), "missing key {key}");
    }
    assert_eq!(json["algo"], "sublinear");
    assert_eq!(json["result"], 3);
    assert_eq!(json["block"], 2);
    assert_eq!(json["m_hat"], 8);
}

#[test]
fn table_algo_refuses_oversized_inputs() {
    let dir = TempDir::new().unwrap();
    let big = vec![b'a'; 4096];
    let a = write_file(&dir, "a", &big);
    let out = run(&["lcs", path_str(&a), path_str(&a), "--algo", "table"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cell"));
}

#[test]
fn bench_rows_agree_across_algos_and_reruns() {
    let dir = TempDir::new().unwrap();
    let out_a = dir.path().join("a.csv");
    let out_b = dir.path().join("b.csv");
    let args = |out: &Path| {
        vec![
            "bench".to_string(),
            "--min-n".into(),
            "256".into(),
            "--max-n".into(),
            "256".into(),
            "--seed".into(),
            "42".into(),
            "--algos".into(),
            "standard,sublinear".into(),
            "--out".into(),
            out.to_str().unwrap().to_string(),
        ]
    };
    assert!(bin().args(args(&out_a)).status().unwrap().success());
    assert!(bin().args(args(&out_b)).status().unwrap().success());

    let strip_elapsed = |csv: &str| -> Vec<String> {
        csv.lines()
            .map(|line| {
                line.rsplit_once(',')
                    .map(|(head, _)| head.to_string())
                    .unwrap()
            })
            .collect()
    };
    let a = fs::read_to_string(&out_a).unwrap();
    let b = fs::read_to_string(&out_b).unwrap();
    assert_eq!(
        strip_elapsed(&a),
        strip_elapsed(&b),
        "same seed must reproduce"
    );

    let rows: Vec<&str> = a.lines().collect();
    assert_eq!(
        rows[0],
        "n,algo,B,result,peak_aux_bits,leaf_count,max_depth,elapsed_ms"
    );
    assert_eq!(rows.len(), 3);
    let result_of = |row: &str| row.split(',').nth(3).unwrap().to_string();
    assert_eq!(
        result_of(rows[1]),
        result_of(rows[2]),
        "both solvers, same answer"
    );
}

#[test]
fn bench_validates_bounds() {
    let out = run(&["bench", "--min-n", "100", "--max-n", "256", "--seed", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["bench", "--min-n", "512", "--max-n", "256", "--seed", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&[
        "bench", "--min-n", "64", "--max-n", "64", "--seed", "1", "--algos", "table",
    ]);
    assert_eq!(out.status.code(), Some(2));
}
