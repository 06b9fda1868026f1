use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn saa(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_saa")).args(args).output().expect("run saa")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn fixture(dir: &Path, name: &str, p: u64, r: Option<u64>) -> PathBuf {
    let file = dir.join(format!("{name}{}_p{p}.saa", r.map_or(String::new(), |r| format!("_r{r}"))));
    let p = p.to_string();
    let r = r.map(|r| r.to_string());
    let mut args = vec!["builtin", name, "--p", &p, "-o", file.to_str().unwrap()];
    if let Some(r) = &r {
        args.extend(["--r", r]);
    }
    let o = saa(&args);
    assert!(o.status.success(), "{}", stderr(&o));
    file
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let file = dir.join(name);
    std::fs::write(&file, text).unwrap();
    file
}

fn run_ok(args: &[&str]) -> String {
    let o = saa(args);
    assert_eq!(o.status.code(), Some(0), "stderr: {}", stderr(&o));
    stdout(&o)
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn describe_example12() {
    let dir = TempDir::new().unwrap();
    let f = fixture(dir.path(), "example12", 3, None);
    let out = run_ok(&["describe", p(&f)]);
    assert_eq!(
        out,
        "dimension 12 over GF(3)\n\
         class 4; lcs dims 12 9 6 3 0\n\
         class 4; center dim 3; ucs dims 0 3 6 9 12\n\
         center isotropic: yes\n\
         rank 3; dim L2L2 3\n"
    );
}

#[test]
fn describe_pr_and_abelian() {
    let dir = TempDir::new().unwrap();
    let pr = fixture(dir.path(), "Pr", 7, Some(2));
    assert!(run_ok(&["describe", p(&pr)]).contains("class 5; center dim 2"));
    let a8 = fixture(dir.path(), "abelian8", 3, None);
    assert!(run_ok(&["describe", p(&a8)]).contains("class 1;"));
}

#[test]
fn describe_survives_save_and_load() {
    let dir = TempDir::new().unwrap();
    let f = fixture(dir.path(), "maxclass5", 5, None);
    let text = std::fs::read_to_string(&f).unwrap();
    let data = saa::presentation::parse_saa(&text).unwrap();
    assert_eq!(run_ok(&["describe", p(&f)]), saa::cli::describe(&data.algebra()));
}

#[test]
fn classify_labels() {
    let dir = TempDir::new().unwrap();
    for (name, r, want) in [("P2", None, "L2"), ("P3", None, "L3"), ("Pr", Some(6), "Lr(1)"), ("Pr", Some(3), "Lr(3)"), ("abelian8", None, "Abelian(8)")] {
        let f = fixture(dir.path(), name, 7, r);
        assert_eq!(run_ok(&["classify", p(&f)]), format!("{want}\n"));
    }
    let p1 = fixture(dir.path(), "P1", 5, None);
    assert_eq!(run_ok(&["classify", p(&p1)]), "N6\n");
}

#[test]
fn classify_rejects_large_and_non_nilpotent() {
    let dir = TempDir::new().unwrap();
    let f = fixture(dir.path(), "example12", 3, None);
    let o = saa(&["classify", p(&f)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("unsupported dimension 12"));

    let bad = write(dir.path(), "bad.saa", "saa 1\np 5\nn 2\nt 1 3 4 1\nt 2 3 4 1\n");
    let o = saa(&["classify", p(&bad)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("not nilpotent"), "{}", stderr(&o));
}

#[test]
fn census_lines() {
    assert_eq!(
        run_ok(&["census", "--n", "4", "--p", "3", "--format", "lines"]),
        "class Abelian(8) count 1\nclass L2 count 368\nclass L3 count 3600\nclass Lr(1) count 2592\n"
    );
    assert_eq!(run_ok(&["census", "--n", "3", "--p", "3", "--format", "lines"]), "class Abelian(6) count 1\nclass N6 count 8\n");
}

#[test]
fn census_output_does_not_depend_on_jobs() {
    let one = run_ok(&["census", "--n", "4", "--p", "3", "--jobs", "1"]);
    let four = run_ok(&["census", "--n", "4", "--p", "3", "--jobs", "4"]);
    assert_eq!(one, four);
    assert!(one.starts_with("census n=4 p=3: 6561 presentations, 4 classes\n"));
}

#[test]
fn census_budget_and_dimension_errors() {
    let o = saa(&["census", "--n", "4", "--p", "3", "--budget", "100"]);
    assert_eq!(o.status.code(), Some(1));
    let o = saa(&["census", "--n", "5", "--p", "3"]);
    assert_eq!(o.status.code(), Some(1));
    let o = saa(&["census", "--n", "4", "--p", "4"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn maximal_class_reports() {
    let dir = TempDir::new().unwrap();
    let m5 = fixture(dir.path(), "maxclass5", 3, None);
    assert_eq!(run_ok(&["maximal-class", p(&m5)]), "criterion: yes; class 7 = 2n−3; agreement: yes\n");
    let zero = write(dir.path(), "zero.saa", "saa 1\np 3\nn 4\n");
    assert!(run_ok(&["maximal-class", p(&zero)]).starts_with("criterion: no; class 1"));
    let ex = fixture(dir.path(), "l5dim2", 3, None);
    assert!(run_ok(&["maximal-class", p(&ex)]).starts_with("criterion: yes; class 5"));

    let small = write(dir.path(), "small.saa", "saa 1\np 3\nn 3\ny 1 2 3 1\n");
    assert_eq!(saa(&["maximal-class", p(&small)]).status.code(), Some(1));
}

#[test]
fn iso_verdicts() {
    let dir = TempDir::new().unwrap();
    let p1 = fixture(dir.path(), "Pr", 7, Some(1));
    let p2 = fixture(dir.path(), "Pr", 7, Some(2));
    let p6 = fixture(dir.path(), "Pr", 7, Some(6));
    assert_eq!(run_ok(&["iso", p(&p1), p(&p2)]), "non-isomorphic\n");
    assert_eq!(run_ok(&["iso", p(&p1), p(&p6)]), "isomorphic\n");
    assert_eq!(run_ok(&["iso", p(&p1), p(&p1)]), "isomorphic (identity)\n");

    let other = fixture(dir.path(), "Pr", 5, Some(1));
    assert_eq!(saa(&["iso", p(&p1), p(&other)]).status.code(), Some(1));
    let big = fixture(dir.path(), "example12", 7, None);
    let big2 = fixture(dir.path(), "maxclass6", 7, None);
    assert_eq!(saa(&["iso", p(&big), p(&big2)]).status.code(), Some(1));
}

#[test]
fn iso_brute_force_with_witness_and_budget() {
    let dir = TempDir::new().unwrap();
    let a = fixture(dir.path(), "P1", 2, None);
    let b = write(dir.path(), "alpha.saa", "saa 1\np 2\nn 3\nx 1 2 3 1\n");
    let out = run_ok(&["iso", "--brute-force", p(&a), p(&b)]);
    assert!(out.starts_with("isomorphic\nwitness:\n"), "{out}");

    let abelian = fixture(dir.path(), "abelian6", 2, None);
    let o = saa(&["iso", "--brute-force", "--budget", "10", p(&abelian), p(&a)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("undecided"));
}

#[test]
fn verify_paper_only_filter() {
    let out = run_ok(&["verify-paper", "--only", "duality"]);
    assert_eq!(out.lines().count(), 2, "{out}");
    assert!(out.starts_with("PASS duality:"));
    assert!(out.ends_with("1/1 checks passed\n"));

    let o = saa(&["verify-paper", "--only", "nonsense"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn builtin_output_is_bit_exact() {
    let out = run_ok(&["builtin", "Pr", "--r", "2", "--p", "7"]);
    assert_eq!(out, "saa 1\np 7\nn 4\nx 1 2 4 1\nx 2 3 4 2\ny 1 2 3 1\n");
    let dir = TempDir::new().unwrap();
    let f = fixture(dir.path(), "Pr", 7, Some(2));
    assert_eq!(std::fs::read_to_string(f).unwrap(), out);
}

#[test]
fn builtin_errors() {
    assert_eq!(saa(&["builtin", "nosuch", "--p", "3"]).status.code(), Some(1));
    assert_eq!(saa(&["builtin", "Pr", "--p", "7"]).status.code(), Some(1));
    assert_eq!(saa(&["builtin", "Pr", "--r", "7", "--p", "7"]).status.code(), Some(1));
    assert_eq!(saa(&["builtin", "P2", "--r", "1", "--p", "7"]).status.code(), Some(1));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(saa(&[]).status.code(), Some(2));
    assert_eq!(saa(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(saa(&["census", "--n", "four", "--p", "3"]).status.code(), Some(2));
    assert_eq!(saa(&["describe"]).status.code(), Some(2));
    assert_eq!(saa(&["--help"]).status.code(), Some(0));
}

#[test]
fn malformed_file_is_a_domain_error() {
    let dir = TempDir::new().unwrap();
    let f = write(dir.path(), "bad.saa", "saa 1\np 3\nn 3\nx 1 2 3 1\nt 1 2 3 1\n");
    let o = saa(&["describe", p(&f)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("line 5"), "{}", stderr(&o));
    let missing = saa(&["describe", "/nonexistent/file.saa"]);
    assert_eq!(missing.status.code(), Some(1));
}

#[test]
fn output_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let f = fixture(dir.path(), "maxclass6", 5, None);
    assert_eq!(run_ok(&["describe", p(&f)]), run_ok(&["describe", p(&f)]));
}
