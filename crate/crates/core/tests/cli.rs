use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn spec(name: &str) -> String {
    format!("{}/specs/{name}.json", env!("CARGO_MANIFEST_DIR"))
}

fn run(args: &[&str], out: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gauss-variety"))
        .args(args)
        .arg("--out")
        .arg(out)
        .output()
        .unwrap()
}

fn read_csv(path: PathBuf) -> (Vec<String>, Vec<Vec<String>>) {
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.ends_with('\n') && !text.contains('\r'), "{}", path.display());
    let mut lines = text.lines();
    let header = lines.next().unwrap().split(',').map(String::from).collect();
    let rows = lines.map(|l| l.split(',').map(String::from).collect()).collect();
    (header, rows)
}

fn col(header: &[String], rows: &[Vec<String>], name: &str) -> Vec<f64> {
    let i = header.iter().position(|h| h == name).unwrap();
    rows.iter().map(|r| r[i].parse().unwrap()).collect()
}

#[test]
fn moments_match_gamma() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(&["moments", "--spec", &spec("line"), "--mmax", "2"], dir.path());
    assert!(o.status.success());
    let (h, rows) = read_csv(dir.path().join("moments.csv"));
    assert_eq!(h, ["m", "I_m", "tail_bound", "R", "nodes"]);
    let want = [std::f64::consts::PI.sqrt(), 1.0, std::f64::consts::PI.sqrt() / 2.0];
    for (v, w) in col(&h, &rows, "I_m").iter().zip(want) {
        assert!((v - w).abs() < 1e-8 * w);
    }
}

#[test]
fn single_moment_row() {
    let dir = tempfile::tempdir().unwrap();
    assert!(run(&["moments", "--spec", &spec("line"), "--mmax", "0"], dir.path()).status.success());
    let (_, rows) = read_csv(dir.path().join("moments.csv"));
    assert_eq!(rows.len(), 1);
}

#[test]
fn missing_spec_exits_2_and_names_path() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(&["moments", "--spec", "/no/such/variety.json"], dir.path());
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("/no/such/variety.json"));
}

#[test]
fn bad_flags_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(run(&["moments", "--bogus"], dir.path()).status.code(), Some(2));
    assert_eq!(run(&["project"], dir.path()).status.code(), Some(2));
    assert_eq!(run(&["lemma", "--k", "-1"], dir.path()).status.code(), Some(2));
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"kind": "graph", "n": 2}"#).unwrap();
    assert_eq!(
        run(&["growth", "--spec", bad.to_str().unwrap()], dir.path()).status.code(),
        Some(2)
    );
}

#[test]
fn numerical_failure_exits_1() {
    // x^400 overflows long before e^{-x^2} can tame it
    let dir = tempfile::tempdir().unwrap();
    let o = run(&["basis", "--spec", &spec("line"), "--degree", "200"], dir.path());
    assert_eq!(o.status.code(), Some(1));
    let msg = String::from_utf8_lossy(&o.stderr);
    assert!(msg.contains("Gram") && msg.contains("x1^"), "{msg}");
    assert_eq!(msg.lines().count(), 1);
}

#[test]
fn project_sweep_decreasing_on_cylinder() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(&["project", "--spec", &spec("cylinder"), "--degree", "8", "--alpha", "0.25"], dir.path());
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let (h, rows) = read_csv(dir.path().join("projection.csv"));
    assert_eq!(h, ["D", "residual_norm", "f_norm", "rel_residual"]);
    assert_eq!(col(&h, &rows, "D"), [2.0, 4.0, 6.0, 8.0]);
    let rel = col(&h, &rows, "rel_residual");
    assert!(rel.windows(2).all(|w| w[1] < w[0]), "{rel:?}");
}

#[test]
fn lemma_reaches_small_constants() {
    let dir = tempfile::tempdir().unwrap();
    assert!(run(&["lemma", "--k", "1", "--mmax", "60"], dir.path()).status.success());
    let (h, rows) = read_csv(dir.path().join("cm.csv"));
    assert_eq!(h, ["k", "m", "cm_closed", "cm_brute", "cstar"]);
    assert_eq!(rows.len(), 60);
    assert!(*col(&h, &rows, "cm_closed").last().unwrap() < 1e-6);
}

#[test]
fn growth_slope_on_parabola() {
    let dir = tempfile::tempdir().unwrap();
    assert!(run(&["growth", "--spec", &spec("parabola")], dir.path()).status.success());
    let (h, rows) = read_csv(dir.path().join("growth.csv"));
    assert_eq!(h, ["r", "volume", "C", "l", "slope"]);
    for (r, s) in col(&h, &rows, "r").iter().zip(col(&h, &rows, "slope")) {
        if *r >= 10.0 {
            assert!((0.8..=1.1).contains(&s), "r={r} slope={s}");
        }
    }
}

#[test]
fn basis_and_gram_files() {
    let dir = tempfile::tempdir().unwrap();
    assert!(run(&["basis", "--spec", &spec("circle"), "--degree", "2"], dir.path()).status.success());
    let (h, rows) = read_csv(dir.path().join("basis.csv"));
    assert_eq!(h, ["basis_index", "monomial_exponents", "coefficient"]);
    let max_index = rows.iter().map(|r| r[0].parse::<usize>().unwrap()).max().unwrap();
    assert_eq!(max_index, 4);
    assert!(rows.iter().all(|r| r[1] != "0;2"));
    let (h, rows) = read_csv(dir.path().join("gram.csv"));
    assert_eq!(h, ["i", "j", "gram"]);
    assert_eq!(rows.len(), 36);
}

#[test]
fn unweighted_basis_only_on_compact_charts() {
    let dir = tempfile::tempdir().unwrap();
    let ok = run(&["basis", "--spec", &spec("interval"), "--weight", "none", "--degree", "3"], dir.path());
    assert!(ok.status.success());
    let bad = run(&["basis", "--spec", &spec("line"), "--weight", "none"], dir.path());
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn equivalence_sides_agree() {
    let dir = tempfile::tempdir().unwrap();
    assert!(run(&["equivalence", "--spec", &spec("parabola"), "--degree", "4"], dir.path()).status.success());
    let (h, rows) = read_csv(dir.path().join("equivalence.csv"));
    assert_eq!(h, ["D", "lhs", "rhs", "rel_gap"]);
    assert!(col(&h, &rows, "rel_gap").iter().all(|g| *g < 1e-8));
}

#[test]
fn floats_have_seventeen_digits() {
    let dir = tempfile::tempdir().unwrap();
    assert!(run(&["lemma", "--mmax", "3"], dir.path()).status.success());
    let (_, rows) = read_csv(dir.path().join("cm.csv"));
    for cell in [&rows[0][0], &rows[1][2], &rows[2][4]] {
        let mantissa = cell.trim_start_matches('-').split('e').next().unwrap();
        assert_eq!(mantissa.replace('.', "").len(), 17, "{cell}");
    }
}

#[test]
fn output_directory_created() {
    let dir = tempfile::tempdir().unwrap();
    let nested = dir.path().join("a/b/c");
    assert!(run(&["lemma", "--mmax", "2"], &nested).status.success());
    assert!(nested.join("cm.csv").exists());
}
