use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_old-digraphs"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("old-digraphs-cli-{}-{name}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    dir
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn min_old_and_extremal() {
    let dir = scratch("min");
    let example = write(&dir, "construct.txt", "4\n1 0\n0 2\n2 1\n3 3\n0 1\n0 3\n0 0\n2 0\n");
    let o = run(&["min-old", &example]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "gamma 4\nwitness 0 1 2 3\n");
    assert_eq!(stdout(&run(&["extremal", &example])), "YES\n");

    let twins = write(&dir, "twins.txt", "# two sinks fed by 0\n3\n0 1\n0 2\n");
    assert_eq!(stdout(&run(&["min-old", &twins])), "NOT LOCATABLE\n");
    assert_eq!(stdout(&run(&["extremal", &twins])), "NO\n");

    let k3 = write(&dir, "k3.txt", "3\n0 1\n1 0\n1 2\n2 1\n0 2\n2 0\n");
    assert_eq!(stdout(&run(&["min-old", &k3])), "gamma 2\nwitness 0 1\n");
    fs::remove_dir_all(dir).unwrap();
}

#[test]
fn parse_errors_exit_two() {
    let dir = scratch("parse");
    let bad = write(&dir, "bad.txt", "2\n0 1\n0 1\n");
    let o = run(&["min-old", &bad]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
    assert_eq!(run(&["min-old", "/nonexistent/file"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "NOPE"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "MAIN", "--max-n", "9"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["gen", "tc-tree", "-,-"]).status.code(), Some(2));
    fs::remove_dir_all(dir).unwrap();
}

#[test]
fn analyze_reports_forcing_structure() {
    let dir = scratch("analyze");
    let example = write(&dir, "construct.txt", "4\n1 0\n0 2\n2 1\n3 3\n0 1\n0 3\n0 0\n2 0\n");
    let text = stdout(&run(&["analyze", &example]));
    assert!(text.contains("gamma 4\n"));
    assert!(text.contains("vertex 0: dom-forced by 2\n"), "{text}");
    assert!(text.contains("forcing-cycles (0 2 1) (3)\n"), "{text}");
    assert!(text.contains("h-forest yes\n"));
    let dot = stdout(&run(&["analyze", &example, "--dot"]));
    assert!(dot.starts_with("digraph D {"));
    assert!(dot.contains("1 -> 0 [style=dashed];"));
    fs::remove_dir_all(dir).unwrap();
}

#[test]
fn generators_emit_edge_lists() {
    assert_eq!(stdout(&run(&["gen", "cycle", "3"])), "3\n0 1\n1 2\n2 0\n");
    assert_eq!(stdout(&run(&["gen", "tc-tree", "-,0,1"])), "3\n0 1\n0 2\n1 2\n");
    assert_eq!(stdout(&run(&["gen", "tc-tree", "-,0", "--loops"])), "2\n0 0\n0 1\n1 1\n");
    let half = stdout(&run(&["gen", "half-graph", "2"]));
    assert!(half.starts_with("4\n"));

    let dir = scratch("gen");
    let bp = write(&dir, "bp.txt", "4\nfplus: 2 0 1 3\nvd: 0\nparent 1 0\nparent 2 1\nparent 2 3\n");
    let built = stdout(&run(&["gen", "blueprint", &bp]));
    let path = write(&dir, "built.txt", &built);
    assert_eq!(stdout(&run(&["extremal", &path])), "YES\n");
    let bad = write(&dir, "bad.txt", "2\nfplus: 0 1\n");
    assert_eq!(run(&["gen", "blueprint", &bad]).status.code(), Some(2));
    fs::remove_dir_all(dir).unwrap();
}

#[test]
fn verify_exit_codes_and_determinism() {
    let strip = |o: &Output| stdout(o).lines().filter(|l| !l.starts_with("elapsed-ms")).collect::<Vec<_>>().join("\n");
    let one = run(&["verify", "MAIN", "--max-n", "3", "--workers", "1"]);
    let four = bin().args(["verify", "MAIN", "--max-n", "3"]).env("OLD_DIGRAPHS_WORKERS", "4").output().unwrap();
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(strip(&one), strip(&four));
    assert!(stdout(&one).contains("status: VERIFIED"));

    let trees = run(&["verify", "TREES", "--max-n", "4"]);
    assert_eq!(trees.status.code(), Some(1));
    assert!(stdout(&trees).contains("counterexample: extremal tree digraph missing from the recursion | 3: 0 2, 1 1, 1 2, 2 0, 2 1, 2 2"));
}

#[test]
fn enum_trees_and_figures() {
    let text = stdout(&run(&["enum-trees", "3", "--provenance"]));
    assert!(text.starts_with("order 3\nclasses 4\nlabelled 21\n"), "{text}");
    assert!(text.contains("C1 rule"));
    let labelled = stdout(&run(&["enum-trees", "3", "--labelled"]));
    assert_eq!(labelled.lines().filter(|l| l.starts_with("labelled 3:")).count(), 21);

    let dir = scratch("fig");
    let o = run(&["figures", dir.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(dir.join("construct_h.dot").exists());
    assert!(dir.join("tree_n4_9.dot").exists());
    let dots = scratch("dots");
    run(&["enum-trees", "4", "--dot-dir", dots.to_str().unwrap()]);
    assert_eq!(fs::read_dir(&dots).unwrap().count(), 10);
    fs::remove_dir_all(dir).unwrap();
    fs::remove_dir_all(dots).unwrap();
}
