//! End-to-end runs of the `gee` binary.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn gee(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gee"))
        .args(args)
        .output()
        .expect("failed to launch gee")
}

fn read_csv(path: &Path) -> Vec<Vec<f64>> {
    fs::read_to_string(path)
        .unwrap()
        .lines()
        .map(|l| l.split(',').map(|t| t.parse().unwrap()).collect())
        .collect()
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn embed_chain_serial() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("chain.txt");
    let labels = dir.path().join("chain.lab");
    let out = dir.path().join("z.csv");
    fs::write(&graph, "0 1\n1 2\n").unwrap();
    fs::write(&labels, "1\n1\n2\n").unwrap();

    let o = gee(&[
        "embed",
        "--graph",
        s(&graph),
        "--labels",
        s(&labels),
        "--k",
        "2",
        "--serial",
        "--out",
        s(&out),
    ]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    assert_eq!(
        read_csv(&out),
        vec![vec![0.5, 0.0], vec![0.5, 1.0], vec![0.5, 0.0]]
    );

    let stdout = String::from_utf8(o.stdout).unwrap();
    let line = stdout.lines().next().unwrap();
    assert!(line.starts_with("n=3 s=2 k=2 workers=1 time_s="), "{line}");
}

#[test]
fn serial_and_parallel_agree_through_the_cli() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("g.txt");
    let labels = dir.path().join("y.txt");
    let zs = dir.path().join("zs.bin");
    let zp = dir.path().join("zp.bin");
    assert!(gee(&[
        "gen-er",
        "--nodes",
        "3000",
        "--edges",
        "40000",
        "--seed",
        "5",
        "--out",
        s(&graph)
    ])
    .status
    .success());
    assert!(gee(&[
        "gen-labels",
        "--nodes",
        "3000",
        "--k",
        "7",
        "--fraction",
        "0.2",
        "--seed",
        "6",
        "--out",
        s(&labels)
    ])
    .status
    .success());

    for directed in [false, true] {
        let mut base = vec![
            "embed",
            "--graph",
            s(&graph),
            "--labels",
            s(&labels),
            "--k",
            "7",
            "--format",
            "binary",
        ];
        if directed {
            base.push("--directed");
        }
        let serial = [base.clone(), vec!["--serial", "--out", s(&zs)]].concat();
        let parallel = [base, vec!["--workers", "4", "--out", s(&zp)]].concat();
        assert!(gee(&serial).status.success());
        assert!(gee(&parallel).status.success());
        let a = gee::encoder::read_embedding(&zs).unwrap();
        let b = gee::encoder::read_embedding(&zp).unwrap();
        assert!(a.max_abs_diff(&b).unwrap() <= 1e-9);
        assert!(a.sum() > 0.0);
    }
}

#[test]
fn generated_labels_have_requested_count() {
    let dir = tempfile::tempdir().unwrap();
    let labels = dir.path().join("y.txt");
    let o = gee(&[
        "gen-labels",
        "--nodes",
        "1000",
        "--k",
        "50",
        "--fraction",
        "0.1",
        "--seed",
        "1",
        "--out",
        s(&labels),
    ]);
    assert!(o.status.success());
    let text = fs::read_to_string(&labels).unwrap();
    assert_eq!(text.lines().count(), 1000);
    assert_eq!(text.lines().filter(|l| *l != "0").count(), 100);
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("missing.txt");
    let out = dir.path().join("z.csv");

    let o = gee(&[
        "embed",
        "--graph",
        s(&missing),
        "--labels",
        "x",
        "--k",
        "2",
        "--out",
        s(&out),
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("missing.txt"));

    assert_eq!(gee(&["embed", "--nope"]).status.code(), Some(1));
    assert_eq!(gee(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(gee(&[]).status.code(), Some(1));

    // Label outside 0..=k is a data error.
    let graph = dir.path().join("g.txt");
    let labels = dir.path().join("y.txt");
    fs::write(&graph, "0 1\n").unwrap();
    fs::write(&labels, "1\n5\n").unwrap();
    let o = gee(&[
        "embed",
        "--graph",
        s(&graph),
        "--labels",
        s(&labels),
        "--k",
        "2",
        "--out",
        s(&out),
    ]);
    assert_eq!(o.status.code(), Some(2));

    // Malformed edge line.
    fs::write(&graph, "0 x\n").unwrap();
    let o = gee(&[
        "embed",
        "--graph",
        s(&graph),
        "--labels",
        s(&labels),
        "--k",
        "2",
        "--out",
        s(&out),
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains(":1:"));
}

#[test]
fn small_bench_runs_write_reports() {
    let dir = tempfile::tempdir().unwrap();
    let out_dir = dir.path().join("scaling");
    let o = gee(&[
        "bench-scaling",
        "--nodes",
        "2000",
        "--edges",
        "50000",
        "--workers",
        "1,2",
        "--reps",
        "3",
        "--out-dir",
        s(&out_dir),
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let csv = fs::read_to_string(out_dir.join("results.csv")).unwrap();
    assert_eq!(csv.lines().count(), 3);
    assert!(csv.starts_with("name,n,s,k,workers,atomics,median_s,reps\n"));
    assert!(out_dir.join("speedup_vs_workers.svg").exists());

    let out_dir = dir.path().join("sweep");
    let o = gee(&[
        "bench-sweep",
        "--sizes",
        "20000,40000",
        "--workers",
        "2",
        "--reps",
        "3",
        "--out-dir",
        s(&out_dir),
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(String::from_utf8_lossy(&o.stdout).contains("r2="));
    assert!(
        fs::metadata(out_dir.join("time_vs_edges.svg"))
            .unwrap()
            .len()
            > 0
    );
}
