use std::path::Path;
use std::process::{Command, Output};

const FIG1: &str = "# six-vertex worked example\n6 6 3 3\n\
0 0 2\n0 2 5\n1 0 6\n1 2 2\n2 1 3\n2 5 1\n3 3 1\n3 4 4\n4 1 4\n4 5 3\n5 3 5\n5 4 1\n";

fn pmmwm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pmmwm")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn oracle_on_worked_example_prints_four() {
    let dir = tempfile::tempdir().unwrap();
    let inst = write(dir.path(), "fig1.txt", FIG1);
    let out = pmmwm(&["oracle", &inst]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "4");
}

#[test]
fn solve_is_reproducible_and_reloads() {
    let dir = tempfile::tempdir().unwrap();
    let inst = dir.path().join("g.txt").to_string_lossy().into_owned();
    let gen = pmmwm(&["generate", "--n1", "30", "--n2", "34", "--m", "4", "--density", "0.4", "--seed", "5", "-o", &inst]);
    assert!(gen.status.success());
    let (a, b) = (dir.path().join("a.json"), dir.path().join("b.json"));
    for p in [&a, &b] {
        let out = pmmwm(&[
            "solve", &inst, "--seed", "9", "--max-iterations", "25", "--reproducible", "--json",
            p.to_str().unwrap(),
        ]);
        assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    }
    let ja = std::fs::read(&a).unwrap();
    assert_eq!(ja, std::fs::read(&b).unwrap());

    let file = pmmwm::harness::SolutionFile::read(&a).unwrap();
    let loaded = pmmwm::load_instance(&inst).unwrap();
    let sol = file.reload(&loaded).unwrap();
    assert!(pmmwm::validate_solution(&loaded.graph, &sol).is_ok());
}

#[test]
fn bench_and_self_compare() {
    let dir = tempfile::tempdir().unwrap();
    let data = dir.path().join("data");
    std::fs::create_dir(&data).unwrap();
    write(&data, "fig1.txt", FIG1);
    write(&data, "tiny.txt", "2 2 2 1\n0 0 1\n0 1 2\n1 0 2\n1 1 1\n");
    let csv = dir.path().join("r.csv").to_string_lossy().into_owned();
    let out = pmmwm(&[
        "bench", data.to_str().unwrap(), "--oracle", "--jobs", "2", "--max-iterations", "10", "-o", &csv,
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let rows = pmmwm::harness::read_reports(Path::new(&csv)).unwrap();
    assert_eq!(rows.iter().map(|r| r.instance.as_str()).collect::<Vec<_>>(), ["fig1.txt", "tiny.txt"]);
    assert_eq!(rows[0].optimum.as_deref(), Some("4"));
    assert_eq!(rows[1].objective, "1");

    let cmp = dir.path().join("c.csv").to_string_lossy().into_owned();
    let out = pmmwm(&["compare", &csv, &csv, "-o", &cmp]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("tie 2 (100.0%)"), "{}", stdout(&out));
    let text = std::fs::read_to_string(&cmp).unwrap();
    assert!(text.lines().skip(1).all(|l| l.contains(",tie,") && l.ends_with(",1.0")), "{text}");
}

#[test]
fn benchmark_gen_writes_manifest() {
    let dir = tempfile::tempdir().unwrap();
    let out = pmmwm(&["benchmark-gen", "--group", "consistent-sparse", "-o", dir.path().to_str().unwrap()]);
    assert!(out.status.success());
    let manifest = std::fs::read_to_string(dir.path().join("manifest.csv")).unwrap();
    assert_eq!(manifest.lines().count(), 61);
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(pmmwm(&["solve"]).status.code(), Some(2));
    assert_eq!(pmmwm(&["solve", "/nonexistent/x.txt"]).status.code(), Some(6));
    let bad = write(dir.path(), "bad.txt", "2 2 1 2\n0 0 -1\n");
    assert_eq!(pmmwm(&["solve", &bad]).status.code(), Some(3));
    let infeasible = write(dir.path(), "inf.txt", "2 2 1 2\n0 0 1\n1 0 1\n");
    assert_eq!(pmmwm(&["solve", &infeasible]).status.code(), Some(4));
    let big = write(dir.path(), "big.txt", &{
        let mut s = String::from("9 9 2 9\n");
        for u in 0..9 {
            for v in 0..9 {
                s.push_str(&format!("{u} {v} 1\n"));
            }
        }
        s
    });
    assert_eq!(pmmwm(&["oracle", &big]).status.code(), Some(5));
    let fig = write(dir.path(), "fig1.txt", FIG1);
    assert_eq!(pmmwm(&["solve", &fig, "--pop-size", "1"]).status.code(), Some(2));
}
