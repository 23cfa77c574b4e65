use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use chordless::cycles::verify_chordless_cycle;
use chordless::generate::{generate, Family};

fn chordless(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chordless"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    dir.join(name)
}

fn summary(out: &Output) -> String {
    stdout(out).lines().last().unwrap_or_default().to_string()
}

#[test]
fn generate_cycle_to_file() {
    let path = scratch("cycle3.txt");
    let out = chordless(&["generate", "cycle:3", "-o", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(fs::read_to_string(&path).unwrap(), "0 1\n1 2\n2 0\n");
}

#[test]
fn generate_grid_line_count() {
    let out = chordless(&["generate", "grid:4x10"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().count(), 66);
}

#[test]
fn generate_rejects_degenerate_spec() {
    assert_eq!(chordless(&["generate", "grid:0x5"]).status.code(), Some(2));
    assert_eq!(chordless(&["generate", "hexagon:5"]).status.code(), Some(2));
}

#[test]
fn triangle_canonical() {
    let path = scratch("triangle.txt");
    fs::write(&path, "0 1\n1 2\n2 0\n").unwrap();
    let out = chordless(&["enumerate", path.to_str().unwrap(), "--canonical"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "0 1 2\ntriangles=1 chordless_cycles=0 total=1\n"
    );
}

#[test]
fn grid_6x6_parallel_count() {
    let out = chordless(&["enumerate", "grid:6x6", "--engine", "par", "--count-only"]);
    assert!(out.status.success());
    assert_eq!(summary(&out), "triangles=0 chordless_cycles=3436 total=3436");
    let report = String::from_utf8(out.stderr).unwrap();
    assert!(report.contains("engine=par"));
    assert!(report.contains("max_degree=4"));
}

#[test]
fn engines_print_the_same_cycles() {
    let run = |engine| {
        let out = chordless(&["enumerate", "wheel:9", "--engine", engine, "--sorted"]);
        assert!(out.status.success());
        stdout(&out)
    };
    let seq = run("seq");
    assert_eq!(seq, run("par"));
    assert!(seq.ends_with("triangles=9 chordless_cycles=1 total=10\n"));
}

#[test]
fn printed_cycles_are_chordless() {
    let g = generate(Family::Grid(4, 5)).unwrap();
    let out = chordless(&["enumerate", "grid:4x5", "--workers", "3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    let (summary, cycles) = lines.split_last().unwrap();
    for line in cycles {
        let seq: Vec<u32> = line.split(' ').map(|t| t.parse().unwrap()).collect();
        verify_chordless_cycle(&g, &seq).unwrap();
    }
    assert_eq!(
        *summary,
        format!("triangles=0 chordless_cycles={0} total={0}", cycles.len())
    );
}

#[test]
fn parse_error_exit_code() {
    let path = scratch("bad.txt");
    fs::write(&path, "0 1\n1 two\n").unwrap();
    let out = chordless(&["enumerate", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8(out.stderr).unwrap().contains("line 2"));

    fs::write(&path, "0 1\n3 3\n").unwrap();
    let out = chordless(&["enumerate", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn fixed_capacity_exit_code() {
    let out = chordless(&["enumerate", "grid:5x6", "--capacity", "4"]);
    assert_eq!(out.status.code(), Some(4));
    let out = chordless(&["enumerate", "grid:5x6", "--capacity", "100000", "--count-only"]);
    assert!(out.status.success());
    assert_eq!(summary(&out), "triangles=0 chordless_cycles=749 total=749");
}

#[test]
fn evolution_csv() {
    let path = scratch("evolution.csv");
    let out = chordless(&[
        "enumerate",
        "grid:4x10",
        "--count-only",
        "--evolution",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let csv = fs::read_to_string(&path).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("round,frontier_size,cycles_total"));
    let last: Vec<u64> = lines
        .last()
        .unwrap()
        .split(',')
        .map(|t| t.parse().unwrap())
        .collect();
    assert_eq!(last[1], 0);
    assert_eq!(last[2], 1823);

    let out = chordless(&["enumerate", "grid:4x10", "--engine", "seq", "--evolution", "x.csv"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn niche_overlap_input() {
    // Predators 0..4 each hunt two of the prey 4..7 so that their
    // overlap graph is the 4-cycle 0-1-2-3.
    let path = scratch("foodweb.txt");
    fs::write(&path, "0 4\n0 7\n1 4\n1 5\n2 5\n2 6\n3 6\n3 7\n").unwrap();
    let out = chordless(&["enumerate", path.to_str().unwrap(), "--niche-overlap", "--canonical"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "0 1 2 3\ntriangles=0 chordless_cycles=1 total=1\n"
    );
}

#[test]
fn labels_dump() {
    let out = chordless(&["labels", "wheel:4"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "0 0\n1 1\n2 2\n3 3\n4 4\n");
}

#[test]
fn bench_csv() {
    let out = chordless(&["bench", "grid:4x5", "--repetitions", "2", "--workers", "2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(
        lines[0],
        "graph,n,m,max_degree,triangles,chordless_cycles,seq_ms,par_ms,speedup"
    );
    let row: Vec<&str> = lines[1].split(',').collect();
    assert_eq!(row.len(), 9);
    assert_eq!(&row[..6], &["grid:4x5", "20", "31", "4", "0", "58"]);
    assert!(row[8].parse::<f64>().unwrap() > 0.0);
}

#[test]
fn bench_empty_and_failing_inputs() {
    let out = chordless(&["bench"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "graph,n,m,max_degree,triangles,chordless_cycles,seq_ms,par_ms,speedup\n"
    );
    let out = chordless(&["bench", "missing-file.txt", "--repetitions", "1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().count(), 1);
    assert!(String::from_utf8(out.stderr).unwrap().contains("missing-file.txt"));
}

#[test]
fn bench_random_graphs() {
    let out = chordless(&[
        "bench", "--random", "3", "--random-n", "12", "--random-p", "0.4", "--seed", "7",
        "--repetitions", "1",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 4);
    assert!(text.lines().nth(1).unwrap().starts_with("random-7-0,12,"));
}

#[test]
fn frontier_limit_keeps_output() {
    let full = chordless(&["enumerate", "grid:5x6", "--sorted"]);
    let sliced = chordless(&["enumerate", "grid:5x6", "--sorted", "--frontier-limit", "3"]);
    assert!(sliced.status.success());
    assert_eq!(stdout(&full), stdout(&sliced));
    assert_eq!(chordless(&["enumerate", "grid:5x6", "--frontier-limit", "0"]).status.code(), Some(2));
}
