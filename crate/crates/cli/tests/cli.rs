use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

use polypath::{parse_document, parse_rank_table, parse_support_family};
use polypath_cli::{run, EXIT_FAILS, EXIT_OK, EXIT_USAGE};
use tempfile::TempDir;

const STAIRCASE: &str = "polymatroid supports
n=9 k=4
1: 1
2: 1
3: 1 2
4: 1 2
5: 1 2 3
6: 2 3 4
7: 3 4
8: 3 4
9: 4
";

const U23: &str = "polymatroid rank
elements: e f g
{e}: 1
{f}: 1
{g}: 1
{e,f}: 2
{e,g}: 2
{f,g}: 2
{e,f,g}: 2
";

const TRIANGLE: &str = "polymatroid supports
n=3 k=3
a: 1 2
b: 2 3
c: 1 3
";

struct Run {
    code: i32,
    out: String,
    err: String,
}

fn polypath(args: &[&str]) -> Run {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(std::iter::once("polypath").chain(args.iter().copied()), &mut out, &mut err);
    Run { code, out: String::from_utf8(out).unwrap(), err: String::from_utf8(err).unwrap() }
}

fn file(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    fs::write(&path, text).unwrap();
    path
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn lp_staircase() {
    let dir = TempDir::new().unwrap();
    let f = file(&dir, "staircase.supports", STAIRCASE);
    let r = polypath(&["lp", p(&f)]);
    assert_eq!(r.code, EXIT_OK, "{}", r.err);
    let lines: Vec<&str> = r.out.lines().collect();
    assert_eq!(lines[0], "lattice-path");
    assert_eq!(lines[1], "element-order: 1 2 3 4 5 6 7 8 9");
    assert_eq!(lines[2], "universe-order: 1 2 3 4");
    assert_eq!(lines[7], "interval 5: 1 3");
}

#[test]
fn boolean_u23() {
    let dir = TempDir::new().unwrap();
    let f = file(&dir, "u23.rank", U23);
    let r = polypath(&["boolean", p(&f)]);
    assert_eq!((r.code, r.out.as_str()), (EXIT_FAILS, "not-boolean deficit X={} value=-1\n"));
    let r = polypath(&["check", p(&f)]);
    assert_eq!((r.code, r.out.as_str()), (EXIT_OK, "normalized: yes\nmonotone: yes\nsubmodular: yes\n"));
    let s = file(&dir, "staircase.supports", STAIRCASE);
    assert_eq!(polypath(&["boolean", p(&s)]).out, "boolean\n");
}

#[test]
fn check_reports_violation() {
    let dir = TempDir::new().unwrap();
    let bad = file(&dir, "bad.rank", "polymatroid rank\nelements: a b\n{a}: 2\n{b}: 1\n{a,b}: 1\n");
    let r = polypath(&["check", p(&bad)]);
    assert_eq!(r.code, EXIT_FAILS);
    assert!(r.out.contains("monotone: no"));
    assert!(r.out.contains("violation: "));
    assert_eq!(polypath(&["boolean", p(&bad)]).out, "not-polymatroid\n");
}

#[test]
fn verify_small() {
    let r = polypath(&["verify", "--n", "3", "--k", "4"]);
    assert_eq!(r.code, EXIT_OK);
    assert!(r.out.starts_with("verified n<=3 k<=4 families=86 mismatches=0\n"), "{}", r.out);
    for tag in ["cycle3", "T1", "T2", "T3", "T4"] {
        let line = r.out.lines().find(|l| l.starts_with(&format!("tag {tag}:"))).unwrap();
        assert_ne!(line, format!("tag {tag}: 0"));
    }
    assert_eq!(polypath(&["verify", "--n", "6", "--k", "1"]).code, EXIT_USAGE);
}

#[test]
fn supports_round_trip() {
    let dir = TempDir::new().unwrap();
    let s = file(&dir, "staircase.supports", STAIRCASE);
    let ranked = polypath(&["minor", p(&s)]);
    assert_eq!(ranked.out, STAIRCASE);
    let table = parse_support_family(STAIRCASE).unwrap().rank_table();
    let r = file(&dir, "staircase.rank", &polypath::write_rank_table(&table));
    let back = polypath(&["supports", p(&r)]);
    assert_eq!(back.code, EXIT_OK);
    assert_eq!(parse_support_family(&back.out).unwrap().rank_table(), table);
    // the staircase rows come back in order
    assert_eq!(back.out, STAIRCASE);
    let u = file(&dir, "u23.rank", U23);
    assert_eq!(polypath(&["supports", p(&u)]).code, EXIT_FAILS);
}

#[test]
fn rank_and_minor() {
    let dir = TempDir::new().unwrap();
    let u = file(&dir, "u23.rank", U23);
    assert_eq!(polypath(&["rank", p(&u), "--set", "e,f"]).out, "2\n");
    assert_eq!(polypath(&["rank", p(&u), "--set", ""]).out, "0\n");
    assert_eq!(polypath(&["rank", p(&u), "--set", "e,x"]).code, EXIT_USAGE);
    let s = file(&dir, "staircase.supports", STAIRCASE);
    assert_eq!(polypath(&["rank", p(&s), "--set", "1,9"]).out, "2\n");

    let m = polypath(&["minor", p(&u), "--delete", "e", "--contract", "f"]);
    assert_eq!(m.code, EXIT_OK);
    let minor = parse_rank_table(&m.out).unwrap();
    assert_eq!(minor.ground().names(), ["g"]);
    assert_eq!(minor.total_rank(), 1);
    let mf = file(&dir, "minor.rank", &m.out);
    assert_eq!(polypath(&["check", p(&mf)]).code, EXIT_OK);

    let m = polypath(&["minor", p(&s), "--delete", "1,2", "--contract", "9"]);
    assert!(m.out.starts_with("polymatroid supports\nn=6 k=4\n"));
    assert_eq!(polypath(&["minor", p(&s), "--delete", "1", "--contract", "1"]).code, EXIT_USAGE);
}

#[test]
fn witness_and_lp_on_triangle() {
    let dir = TempDir::new().unwrap();
    let t = file(&dir, "triangle.supports", TRIANGLE);
    let r = polypath(&["witness", p(&t)]);
    assert_eq!(r.code, EXIT_FAILS);
    assert_eq!(r.out, "status: excluded-minor-found\ndelete: {}\ncontract: {}\ntype: cycle3\nroles: e=a f=b g=c\n");
    assert_eq!(polypath(&["lp", p(&t)]).out, "not-lattice-path\n");
    let s = file(&dir, "staircase.supports", STAIRCASE);
    let r = polypath(&["witness", p(&s)]);
    assert_eq!((r.code, r.out.as_str()), (EXIT_OK, "status: lattice-path\n"));
    let u = file(&dir, "u23.rank", U23);
    assert_eq!(polypath(&["lp", p(&u)]).code, EXIT_FAILS);
}

#[test]
fn render_outputs() {
    let dir = TempDir::new().unwrap();
    let s = file(&dir, "staircase.supports", STAIRCASE);
    let r = polypath(&["render", p(&s)]);
    assert_eq!(r.code, EXIT_OK);
    assert!(r.out.starts_with("A4 | . . . . . 6 7 8 9\nA3 | . . . . 5 6 7 8 .\n"));
    let svg = dir.path().join("out.svg");
    let r = polypath(&["render", p(&s), "--format", "svg", "--out", p(&svg)]);
    assert_eq!((r.code, r.out.as_str()), (EXIT_OK, ""));
    assert!(fs::read_to_string(&svg).unwrap().starts_with("<svg"));
    let t = file(&dir, "triangle.supports", TRIANGLE);
    assert_eq!(polypath(&["render", p(&t)]).code, EXIT_FAILS);
    assert_eq!(polypath(&["render", p(&s), "--format", "png"]).code, EXIT_USAGE);
}

#[test]
fn gen_instances() {
    let r = polypath(&["gen", "--type", "T1", "--sizes", "T=1,U=1,V=1,Z=1"]);
    assert_eq!(r.code, EXIT_OK);
    assert_eq!(r.out, "polymatroid supports\nn=3 k=4\n1: 1 4\n2: 2 4\n3: 3 4\n");
    let positional = polypath(&["gen", "--type", "t1", "--sizes", "1,1,1,0,0,0,1"]);
    assert_eq!(positional.out, r.out);
    let cycle = polypath(&["gen", "--type", "cycle4", "--sizes", "Z1=1,Z3=1,Z5=1,Z7=1"]);
    assert_eq!(cycle.out, "polymatroid supports\nn=4 k=4\n1: 1 2\n2: 2 3\n3: 3 4\n4: 1 4\n");
    assert_eq!(polypath(&["gen", "--type", "T3", "--sizes", "1,1,1"]).code, EXIT_USAGE);
    assert_eq!(polypath(&["gen", "--type", "G7", "--sizes", "1"]).code, EXIT_USAGE);
    assert_eq!(polypath(&["gen", "--type", "F1", "--sizes", "1,1,1,1,1"]).code, EXIT_USAGE);
    let dir = TempDir::new().unwrap();
    let g = file(&dir, "f4.supports", &polypath(&["gen", "--type", "F4", "--sizes", "1,1,1,1,1"]).out);
    let w = polypath(&["witness", p(&g)]);
    assert!(w.out.contains("type: F4\n"));
}

#[test]
fn malformed_inputs() {
    let dir = TempDir::new().unwrap();
    let bad = file(&dir, "bad.txt", "polymatroid rank\nelements: a\n{a}: x\n");
    let r = polypath(&["check", p(&bad)]);
    assert_eq!(r.code, EXIT_USAGE);
    assert!(r.err.contains("line 3"), "{}", r.err);
    assert!(r.out.is_empty());
    assert_eq!(polypath(&["check", "/nonexistent/file"]).code, EXIT_USAGE);
    assert_eq!(polypath(&["frobnicate"]).code, EXIT_USAGE);
    assert_eq!(polypath(&[]).code, EXIT_USAGE);
    assert_eq!(polypath(&["--help"]).code, EXIT_OK);
}

fn binary(args: &[&str], threads: Option<&str>) -> std::process::Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_polypath"));
    cmd.args(args);
    match threads {
        Some(t) => cmd.env("POLYPATH_THREADS", t),
        None => cmd.env_remove("POLYPATH_THREADS"),
    };
    cmd.output().unwrap()
}

#[test]
fn binary_is_deterministic() {
    let a = binary(&["verify", "--n", "4", "--k", "4"], None);
    let b = binary(&["verify", "--n", "4", "--k", "4"], Some("1"));
    let c = binary(&["verify", "--n", "4", "--k", "4"], Some("3"));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);
    let bad = binary(&["verify", "--n", "2", "--k", "2"], Some("zero"));
    assert_eq!(bad.status.code(), Some(2));
    assert!(bad.stdout.is_empty());
}

#[test]
fn binary_exit_codes() {
    let dir = TempDir::new().unwrap();
    let u = file(&dir, "u23.rank", U23);
    let r = binary(&["boolean", p(&u)], None);
    assert_eq!(r.status.code(), Some(1));
    assert_eq!(String::from_utf8(r.stdout).unwrap(), "not-boolean deficit X={} value=-1\n");
    let s = file(&dir, "staircase.supports", STAIRCASE);
    let first = binary(&["render", p(&s), "--format", "svg"], None);
    let second = binary(&["render", p(&s), "--format", "svg"], None);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    assert!(matches!(parse_document(STAIRCASE), Ok(polypath::Document::Supports(_))));
}
