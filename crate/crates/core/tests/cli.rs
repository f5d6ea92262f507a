mod common;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use common::*;
use htdecomp::format::parse_json_decomposition;
use htdecomp::{det_k_decomp, serialize_decomposition, validate, Config, Format};
use tempfile::TempDir;

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path
}

fn htdecomp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_htdecomp"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(out: &Output) -> &str {
    std::str::from_utf8(&out.stdout).unwrap()
}

fn stderr(out: &Output) -> &str {
    std::str::from_utf8(&out.stderr).unwrap()
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    let tri = write(dir.path(), "tri.hg", H_TRI);
    let tri = tri.to_str().unwrap();

    let found = htdecomp(&["--k", "2", tri]);
    assert_eq!(found.status.code(), Some(0), "{}", stderr(&found));
    assert!(stdout(&found).starts_with("lambda: {"));

    let none = htdecomp(&["--k", "1", tri]);
    assert_eq!(none.status.code(), Some(1));
    assert!(stdout(&none).is_empty());

    assert_eq!(htdecomp(&["--k", "0", tri]).status.code(), Some(2));
    assert_eq!(htdecomp(&[tri]).status.code(), Some(2));
    assert_eq!(htdecomp(&["--k", "2", "--format", "xml", tri]).status.code(), Some(2));
    assert_eq!(
        htdecomp(&["--k", "2", dir.path().join("missing.hg").to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );

    let bad = write(dir.path(), "bad.hg", "e1(a,b)");
    let out = htdecomp(&["--k", "2", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("terminating"));

    let syntax = write(dir.path(), "syntax.hg", "e1(a,b),\n e2(b c).");
    let out = htdecomp(&["--k", "2", syntax.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line 2"));

    let cyc = write(dir.path(), "c8.hg", &serialize_cycle(8));
    assert_eq!(
        htdecomp(&["--k", "2", "--timeout", "0", cyc.to_str().unwrap()])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        htdecomp(&["--k", "2", "--timeout", "60", cyc.to_str().unwrap()])
            .status
            .code(),
        Some(0)
    );
}

fn serialize_cycle(n: usize) -> String {
    let terms: Vec<String> = (0..n).map(|i| format!("e{i}(v{i},v{})", (i + 1) % n)).collect();
    format!("{}.", terms.join(", "))
}

#[test]
fn stats_line_goes_to_stderr() {
    let dir = TempDir::new().unwrap();
    let path = write(dir.path(), "b.hg", BRIDGED_TRIANGLES);
    let out = htdecomp(&["--k", "2", "--stats", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let line = stderr(&out).lines().next().unwrap();
    let pairs: Vec<(&str, &str)> = line.split(' ').map(|kv| kv.split_once('=').unwrap()).collect();
    let keys: Vec<&str> = pairs.iter().map(|(k, _)| *k).collect();
    assert_eq!(
        keys,
        [
            "decomp_cov_calls",
            "decomp_add_calls",
            "cover_candidates",
            "fail_cache_hits",
            "succ_cache_hits",
            "placeholders",
            "wall_ms"
        ]
    );
    assert!(pairs[4].1.parse::<u64>().unwrap() >= 1);
    assert!(!stdout(&out).contains("decomp_cov_calls"));
}

#[test]
fn validate_flag_keeps_output() {
    let dir = TempDir::new().unwrap();
    let path = write(
        dir.path(),
        "grid.hg",
        "a(x1,x2), b(x2,x3), c(x3,x4), d(x4,x1), e(x1,x3).",
    );
    let path = path.to_str().unwrap();
    for format in ["text", "gml", "json"] {
        let plain = htdecomp(&["--k", "2", "--format", format, path]);
        let checked = htdecomp(&["--k", "2", "--validate", "--format", format, path]);
        assert_eq!(plain.status.code(), Some(0));
        assert_eq!(checked.status.code(), Some(0));
        assert_eq!(plain.stdout, checked.stdout);
    }
}

#[test]
fn output_file_and_json_round_trip() {
    let dir = TempDir::new().unwrap();
    let input = write(dir.path(), "c6.hg", &serialize_cycle(6));
    let output = dir.path().join("out.json");
    let out = htdecomp(&[
        "--k",
        "2",
        "--format",
        "json",
        "--output",
        output.to_str().unwrap(),
        input.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());

    let h = cycle(6);
    let tree = parse_json_decomposition(&h, &fs::read_to_string(&output).unwrap()).unwrap();
    assert!(validate(&h, &tree, 2).is_valid_within_width());
    let (direct, _) = det_k_decomp(&h, Config::new(2)).unwrap();
    assert_eq!(Some(tree), direct);
}

#[test]
fn json_round_trip_over_corpus() {
    for (name, h) in corpus() {
        for k in 1..=3 {
            if let (Some(tree), _) = det_k_decomp(&h, Config::new(k)).unwrap() {
                let json = serialize_decomposition(&h, &tree, Format::Json).unwrap();
                assert_eq!(parse_json_decomposition(&h, &json).unwrap(), tree, "{name} k={k}");
            }
        }
    }
}

#[test]
fn engine_flags_are_accepted() {
    let dir = TempDir::new().unwrap();
    let path = write(dir.path(), "c7.hg", &serialize_cycle(7));
    let path = path.to_str().unwrap();
    for flags in [
        &["--no-fail-cache"][..],
        &["--no-succ-cache"],
        &["--all-covers"],
        &["--empty-components", "reject"],
        &["--no-fail-cache", "--no-succ-cache", "--all-covers"],
    ] {
        let mut args = vec!["--k", "2", "--validate"];
        args.extend_from_slice(flags);
        args.push(path);
        assert_eq!(htdecomp(&args).status.code(), Some(0), "{flags:?}");
        args[1] = "1";
        assert_eq!(htdecomp(&args).status.code(), Some(1), "{flags:?}");
    }
}

#[test]
fn long_path_does_not_overflow() {
    let dir = TempDir::new().unwrap();
    let terms: Vec<String> = (0..1500).map(|i| format!("e{i}(v{i},v{})", i + 1)).collect();
    let path = write(dir.path(), "path.hg", &format!("{}.", terms.join(",\n")));
    let out = htdecomp(&["--k", "1", "--validate", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
}
