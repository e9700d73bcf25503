use std::process::{Command, Output};

use ftres_core::{FamilySpec, Graph};

fn ftres(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ftres"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

#[test]
fn gen_headers() {
    for (args, header) in [
        (["gen", "antiprism2", "--n", "6"], "18 42"),
        (["gen", "spoly", "--n", "6"], "24 48"),
        (["gen", "tpoly", "--n", "6"], "24 48"),
        (["gen", "cycle", "--n", "8"], "8 8"),
    ] {
        let out = ftres(&args);
        assert_eq!(code(&out), 0);
        assert_eq!(stdout(&out).lines().next(), Some(header));
    }
}

#[test]
fn gen_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    for (family, n) in [
        ("antiprism2", "7"),
        ("spoly", "9"),
        ("tpoly", "8"),
        ("petersen", "0"),
        ("kmn", "3"),
    ] {
        let path = dir.path().join(format!("{family}.txt"));
        let out = ftres(&["gen", family, "--n", n, "--out", path.to_str().unwrap()]);
        assert_eq!(code(&out), 0);
        let parsed = Graph::from_edge_list(&std::fs::read_to_string(&path).unwrap()).unwrap();
        let family = ftres_core::Family::from_name(family).unwrap();
        let expected = FamilySpec::new(family, n.parse().ok(), None)
            .unwrap()
            .generate()
            .unwrap();
        assert_eq!(parsed, expected);
        // Stable bytes across runs.
        let again = ftres(&["gen", family.name(), "--n", n]);
        assert_eq!(stdout(&again), expected.to_edge_list());
    }
}

#[test]
fn solve_examples() {
    let out = ftres(&[
        "solve",
        "fdim",
        "--family",
        "antiprism2",
        "--n",
        "6",
        "--no-time",
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("status: value\nvalue: 4\n"), "{text}");
    assert!(!text.contains("wall_time_ms"));

    let out = ftres(&["solve", "ifr", "--family", "complete", "--n", "4"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("status: undefined"));

    let out = ftres(&[
        "solve", "dim", "--family", "tpoly", "--n", "7", "--format", "text",
    ]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("dim(tpoly(n=7)) = 3 [value]"));
}

#[test]
fn exit_codes() {
    // Parameter errors.
    assert_eq!(code(&ftres(&["gen", "cycle", "--n", "2"])), 2);
    assert_eq!(code(&ftres(&["gen", "nosuch", "--n", "5"])), 2);
    assert_eq!(
        code(&ftres(&[
            "solve", "nosuch", "--family", "cycle", "--n", "5"
        ])),
        2
    );
    assert_eq!(
        code(&ftres(&["verify-theorem", "--family", "spoly", "--n", "5"])),
        2
    );
    assert_eq!(
        code(&ftres(&[
            "solve",
            "dim",
            "--family",
            "cycle",
            "--n",
            "5",
            "--workers",
            "0"
        ])),
        2
    );
    assert_eq!(code(&ftres(&["survey", "--count", "1"])), 2);

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "3 1\n0 x\n").unwrap();
    assert_eq!(
        code(&ftres(&["solve", "dim", "--input", bad.to_str().unwrap()])),
        2
    );

    // Disconnected input.
    let split = dir.path().join("split.txt");
    std::fs::write(&split, "4 2\n0 1\n2 3\n").unwrap();
    assert_eq!(
        code(&ftres(&[
            "solve",
            "dim",
            "--input",
            split.to_str().unwrap()
        ])),
        3
    );
    assert_eq!(
        code(&ftres(&["chain", "--input", split.to_str().unwrap()])),
        3
    );

    // Cap below beta.
    let out = ftres(&[
        "solve", "ifr", "--family", "cycle", "--n", "12", "--max-k", "2",
    ]);
    assert_eq!(code(&out), 4);
    assert!(stdout(&out).contains("status: unknown_beyond_cap"));
    let out = ftres(&[
        "open-problem",
        "--family",
        "spoly",
        "--n",
        "6",
        "--max-k",
        "3",
        "--no-time",
    ]);
    assert_eq!(code(&out), 4);
}

#[test]
fn solve_is_independent_of_workers() {
    for inv in ["dim", "fdim", "ir", "ifr", "beta"] {
        let base = ftres(&["solve", inv, "--family", "spoly", "--n", "7", "--no-time"]);
        for w in ["2", "4", "8"] {
            let other = ftres(&[
                "solve",
                inv,
                "--family",
                "spoly",
                "--n",
                "7",
                "--no-time",
                "--workers",
                w,
            ]);
            assert_eq!(base.stdout, other.stdout, "{inv} workers={w}");
        }
    }
}

#[test]
fn survey_is_deterministic() {
    let a = ftres(&["survey", "--seed", "11", "--count", "20", "--no-time"]);
    let b = ftres(&["survey", "--seed", "11", "--count", "20", "--workers", "4"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let c = ftres(&["survey", "--seed", "12", "--count", "20"]);
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn chain_examples() {
    let out = ftres(&["chain", "--family", "graphH"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).lines().next(), Some("2 4 2 4 5 | chain OK"));

    let out = ftres(&["chain", "--family", "cycle", "--n", "6"]);
    assert_eq!(stdout(&out).lines().next(), Some("2 3 2 3 3 | chain OK"));

    let out = ftres(&["chain", "--family", "kmn", "--n", "3"]);
    assert_eq!(stdout(&out).lines().next(), Some("4 6 - - 3 | chain OK"));
}

#[test]
fn verify_theorem_reports() {
    let out = ftres(&["verify-theorem", "--family", "antiprism2", "--n", "6..14"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert_eq!(text.lines().filter(|l| l.ends_with("=> PASS")).count(), 9);
    assert!(text.ends_with("all PASS\n"));

    let out = ftres(&["verify-theorem", "--family", "tpoly", "--n", "7"]);
    let text = stdout(&out);
    assert!(text.contains("stated j^1_1+j^2_1+j^4_1+j^6_1"), "{text}");
    assert!(text.contains("alternate j^1_1+j^2_1+j^4_1+j^5_1"), "{text}");
    assert!(text.contains("valid: "));

    assert_eq!(
        code(&ftres(&[
            "verify-theorem",
            "--family",
            "spoly",
            "--n",
            "6..12"
        ])),
        0
    );
}

#[test]
fn verify_tables_csv() {
    let out = ftres(&["verify-tables", "--family", "antiprism2", "--n", "6..10"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let cells = text.lines().filter(|l| l.starts_with("cell,")).count();
    assert_eq!(cells, (6..=10).map(|n| 3 * n * 4).sum::<usize>());
    assert!(text
        .lines()
        .any(|l| l.starts_with("anomaly,antiprism2,7,") && l.ends_with(",duplicated_row")));
    assert!(text.starts_with("kind,family,n,parity,vertex,landmark,printed,bfs,rows,verdict\n"));

    let out = ftres(&["verify-tables", "--family", "spoly", "--n", "6..10"]);
    let shifts: Vec<_> = stdout(&out)
        .lines()
        .filter(|l| l.starts_with("shift,"))
        .map(String::from)
        .collect();
    assert_eq!(shifts.len(), 10);
    assert!(shifts.iter().all(|l| l.ends_with(",pass")));
}

#[test]
fn open_problem_rows() {
    let out = ftres(&["open-problem", "--n", "6", "--no-time"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 3);
    for row in rows {
        let cols: Vec<&str> = row.split(',').collect();
        assert_eq!(cols.len(), 7);
        assert!(cols[2] == "value" || cols[2] == "undefined");
        assert_eq!(cols[5], "true");
        assert_eq!(cols[6], "-");
    }
}
