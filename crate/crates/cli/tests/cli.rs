use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use signed_maxcut::format::parse_instance;
use signed_maxcut::oracle;

fn smc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_smc"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

const K4_NEG: &str = "p signed 4 6\ne 1 2 -\ne 1 3 -\ne 1 4 -\ne 2 3 -\ne 2 4 -\ne 3 4 -\n";

#[test]
fn bound_on_a_path() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(
        dir.path(),
        "p3.sg",
        "c path\np signed 3 2\ne 1 2 -\ne 2 3 -\n",
    );
    let o = smc(&["bound", &f]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "ptq=6 pt=6/4 components=1\n");
}

#[test]
fn solve_negative_k4() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "k4.sg", K4_NEG);
    let o = smc(&["solve", &f, "--k", "1", "--check-oracle"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("answer=yes beta=4 route="));

    let o = smc(&["solve", &f, "--k", "2"]);
    assert_eq!(stdout(&o), "answer=no beta=4 route=full-enumeration\n");
}

#[test]
fn flag_overrides_stored_parameter() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(
        dir.path(),
        "k4.sg",
        &K4_NEG.replace("p signed 4 6\n", "p signed 4 6\nk 2\n"),
    );
    assert!(stdout(&smc(&["solve", &f])).starts_with("answer=no"));
    assert!(stdout(&smc(&["solve", &f, "--k", "-1"])).starts_with("answer=yes"));
}

#[test]
fn balance_reports_witnesses() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "b.sg", "p signed 3 2\ne 1 2 -\ne 2 3 +\n");
    assert_eq!(stdout(&smc(&["balance", &f])), "balanced W=1\n");
    let f = write(
        dir.path(),
        "u.sg",
        "p signed 3 3\ne 1 2 -\ne 2 3 +\ne 1 3 +\n",
    );
    assert!(stdout(&smc(&["balance", &f])).starts_with("unbalanced cycle="));
}

#[test]
fn oracle_command() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "k4.sg", K4_NEG);
    assert_eq!(stdout(&smc(&["oracle", &f])), "beta=4\n");
    assert_eq!(smc(&["oracle", &f, "--limit", "3"]).status.code(), Some(1));
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(smc(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(smc(&["solve"]).status.code(), Some(1));
    let f = write(dir.path(), "k4.sg", K4_NEG);
    // no parameter anywhere
    assert_eq!(smc(&["solve", &f]).status.code(), Some(1));

    let bad = write(dir.path(), "loop.sg", "p signed 2 1\ne 1 1 +\n");
    let o = smc(&["solve", &bad, "--k", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
    let missing = dir.path().join("missing.sg");
    assert_eq!(
        smc(&["bound", missing.to_str().unwrap()]).status.code(),
        Some(2)
    );
    assert!(smc(&["--help"]).status.success());
}

#[test]
fn cancelling_pairs_load_as_no_edge() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "c.sg", "p signed 2 2\ne 1 2 +\ne 1 2 -\n");
    assert_eq!(stdout(&smc(&["bound", &f])), "ptq=0 pt=0/4 components=2\n");
}

#[test]
fn gen_random_is_deterministic() {
    let args = [
        "gen", "random", "--n", "6", "--p", "0.5", "--neg", "0.7", "--seed", "42",
    ];
    let a = smc(&args);
    let b = smc(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let inst = parse_instance(&stdout(&a)).unwrap();
    assert!(inst.graph.is_connected());
    assert_eq!(inst.graph.vertex_count(), 6);
    assert!(stdout(&a).contains("seed-used="));
}

#[test]
fn gen_foc_to_file_and_kernelize() {
    let dir = tempfile::tempdir().unwrap();
    let inst_path = dir.path().join("foc.sg");
    let inst_path = inst_path.to_str().unwrap();
    let o = smc(&[
        "gen",
        "foc",
        "--cliques",
        "4",
        "--size",
        "5",
        "--s-count",
        "1",
        "--k",
        "4",
        "--seed",
        "3",
        "--out",
        inst_path,
    ]);
    assert!(o.status.success());
    let text = fs::read_to_string(inst_path).unwrap();
    let inst = parse_instance(&text).unwrap();
    assert_eq!(inst.k, Some(4));
    assert!(inst.graph.is_connected());

    let kern_path = dir.path().join("kernel.sg");
    let o = smc(&["kernelize", inst_path, "--out", kern_path.to_str().unwrap()]);
    assert!(o.status.success());
    let line = stdout(&o);
    let want = oracle::decide(&inst.graph, 4).unwrap();
    if line.starts_with("answer=yes reason=") {
        assert!(want);
    } else {
        assert!(line.starts_with("kernel n="), "{line}");
        assert!(line.contains("bound=B(k)=3204"), "{line}");
        let ktext = fs::read_to_string(&kern_path).unwrap();
        assert!(ktext.starts_with("c kernel-of "));
        assert!(ktext.lines().nth(1).unwrap().starts_with("c S"));
        let kern = parse_instance(&ktext).unwrap();
        assert_eq!(oracle::decide(&kern.graph, kern.k.unwrap()).unwrap(), want);
    }
}

#[test]
fn kernelize_to_stdout_is_a_valid_instance() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "k4.sg", K4_NEG);
    let o = smc(&["kernelize", &f, "--k", "2"]);
    assert!(o.status.success());
    let kern = parse_instance(&stdout(&o)).unwrap();
    assert!(!oracle::decide(&kern.graph, kern.k.unwrap()).unwrap());
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("kernel n="));

    let o = smc(&["kernelize", &f, "--k", "0"]);
    assert_eq!(stdout(&o), "answer=yes reason=k-nonpositive\n");
}

#[test]
fn gen_rejects_bad_probability() {
    let o = smc(&[
        "gen", "random", "--n", "4", "--p", "1.5", "--neg", "0.5", "--seed", "1",
    ]);
    assert_eq!(o.status.code(), Some(1));
}
