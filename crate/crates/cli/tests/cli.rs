use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../core/fixtures")
        .join(name)
        .display()
        .to_string()
}

fn qalex(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qalex")).args(args).output().expect("run qalex")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn matrix_ideals_of_tetrahedron_presentation() {
    let (p, q) = (fixture("tetra2.pres"), fixture("tetrahedron.qnd"));
    let o = qalex(&["matrix", "--presentation", &p, "--quandle", &q, "--images", "0,1", "--d", "1", "--d", "2"]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.contains("4 x 2 matrix"), "{s}");
    assert!(s.contains("E_1: t^2 - t + 1, -t^2 - t + 1\n"), "{s}");
    assert!(s.contains("E_2: 1\n"), "{s}");
}

#[test]
fn ideal_comparison_verdicts() {
    let (p, q) = (fixture("tetra2.pres"), fixture("tetrahedron.qnd"));
    let base = ["ideal", "--presentation", &p, "--quandle", &q, "--images", "0,1"];
    let run = |extra: &[&str]| stdout(&qalex(&[&base[..], extra].concat()));
    assert!(run(&["--d", "1", "--compare", "t^2 + t - 1; t^2 - t + 1"]).ends_with("EQUAL\n"));
    assert!(run(&["--d", "2", "--compare", "1"]).ends_with("EQUAL\n"));
    assert!(run(&["--d", "2", "--compare", "2"]).ends_with("NOT-EQUAL\n"));
}

#[test]
fn colorings_json() {
    let o = qalex(&["--format", "json", "colorings", "--diagram", &fixture("trefoil.pd"), "--quandle", &fixture("r3.qnd")]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["count"], 9);
    assert_eq!(v["colorings"].as_array().unwrap().len(), 9);
}

#[test]
fn invariant_granny_square() {
    let (q, c) = (fixture("s4_4cycles.qnd"), fixture("theta_z4.coc"));
    let g = stdout(&qalex(&["invariant", "--diagram", &fixture("granny.pd"), "--quandle", &q, "--cocycle", &c]));
    assert!(g.contains("E_0 ideals:\n(0) x 6\n(u - 1) x 48\n(u^2 - 1) x 96\n"), "{g}");
    let s = stdout(&qalex(&["invariant", "--diagram", &fixture("square.pd"), "--quandle", &q, "--cocycle", &c]));
    assert!(s.contains("E_0 ideals:\n(0) x 102\n(u - 1) x 48\n"), "{s}");
    let d = stdout(&qalex(&["distinguish", &fixture("granny.pd"), &fixture("square.pd"), "--quandle", &q, "--cocycle", &c]));
    assert!(d.ends_with("\nDISTINGUISHED\n"), "{d}");
    let same = stdout(&qalex(&["distinguish", &fixture("granny.pd"), &fixture("granny.pd"), "--quandle", &q, "--cocycle", &c]));
    assert!(same.ends_with("NOT-DISTINGUISHED\n"));
}

#[test]
fn search_reproduces_shipped_cocycle() {
    let out = std::env::temp_dir().join(format!("qalex-search-{}.coc", std::process::id()));
    let o = qalex(&[
        "search-cocycle",
        "--quandle",
        &fixture("s4_4cycles.qnd"),
        "--modulus",
        "4",
        "--filter-diagram",
        &fixture("trefoil.pd"),
        "--filter-multiset",
        "e:6,u:24",
        "--output",
        out.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let found = std::fs::read_to_string(&out).unwrap();
    std::fs::remove_file(&out).ok();
    let shipped = std::fs::read_to_string(fixture("theta_z4.coc")).unwrap();
    assert_eq!(found, shipped);
}

#[test]
fn search_exhaustion_exit_code() {
    let o = qalex(&[
        "--budget",
        "5",
        "search-cocycle",
        "--quandle",
        &fixture("s4_4cycles.qnd"),
        "--modulus",
        "4",
        "--filter-diagram",
        &fixture("trefoil.pd"),
        "--filter-multiset",
        "u:30",
    ]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn check_reports_violations() {
    let dir = std::env::temp_dir().join(format!("qalex-check-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.qnd");
    std::fs::write(&bad, "quandle 2\n0 0\n0 1\n").unwrap();
    let o = qalex(&["check", "--quandle", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL"));

    let o = qalex(&["check", "--quandle", &fixture("s4_4cycles.qnd"), "--cocycle", &fixture("theta_z4.coc")]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).matches("PASS").count(), 2);

    let garbled = dir.join("garbled.pd");
    std::fs::write(&garbled, "X[1,2,+]\n").unwrap();
    let o = qalex(&["check", "--diagram", garbled.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn verify_theorem_all_colorings() {
    let o = qalex(&[
        "verify-theorem",
        "--diagram",
        &fixture("hopf.pd"),
        "--quandle",
        &fixture("s4_4cycles.qnd"),
        "--cocycle",
        &fixture("theta_z4.coc"),
    ]);
    assert!(o.status.success());
    assert!(stdout(&o).ends_with("12/12 colorings satisfy the identity\n"));
}

#[test]
fn deficiency_and_missing_file() {
    assert_eq!(stdout(&qalex(&["deficiency", "--presentation", &fixture("tetra2.pres")])), "-2\n");
    assert_eq!(qalex(&["colorings", "--diagram", "/nonexistent.pd", "--quandle", &fixture("r3.qnd")]).status.code(), Some(2));
    assert_eq!(qalex(&["colorings"]).status.code(), Some(2));
}
