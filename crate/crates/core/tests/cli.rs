//! Golden-file and exit-code tests against the built binary.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use braidforge::conjugacy::ConjugacyCertificate;
use braidforge::ttk::FiberednessCertificate;

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_braidforge"));
    cmd.env_remove("BRAIDFORGE_CONFIG");
    cmd
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn golden_path(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name)
}

/// Compares `actual` with the golden file; `UPDATE_GOLDEN=1` rewrites it.
fn check_golden(name: &str, actual: &str) {
    let path = golden_path(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        fs::write(&path, actual).unwrap();
    }
    let expected = fs::read_to_string(&path)
        .unwrap_or_else(|e| panic!("missing golden file {}: {e}", path.display()));
    assert_eq!(actual, expected, "golden mismatch for {name}");
}

fn golden_run(name: &str, args: &[&str], code: i32) {
    let o = run(args);
    assert_eq!(o.status.code(), Some(code), "{args:?}: {}", stderr(&o));
    check_golden(name, &stdout(&o));
}

#[test]
fn build_golden() {
    golden_run(
        "build_k4_3_2_m2.txt",
        &["build", "-p", "4", "-q", "3", "-r", "2", "-n", "-2"],
        0,
    );
    golden_run(
        "build_k3_5_2_m1.txt",
        &["build", "-p", "3", "-q", "5", "-r", "2", "-n", "-1"],
        0,
    );
}

#[test]
fn build_examples_are_literal() {
    let o = run(&["build", "-p", "4", "-q", "3", "-r", "2", "-n", "-2"]);
    assert_eq!(stdout(&o), "B3: 2 1 2 1 2 1 2 1 -1 -1 -1 -1\n");
}

#[test]
fn nf_golden() {
    golden_run("nf_half_twist.txt", &["nf", "B3: 2 1 2"], 0);
    golden_run("nf_mixed.txt", &["nf", "B4: 1 3 -2 1 2 -3"], 0);
}

#[test]
fn eq_golden_and_codes() {
    golden_run(
        "eq_braid_relation.txt",
        &["eq", "B3: 1 2 1", "B3: 2 1 2"],
        0,
    );
    golden_run("eq_distinct.txt", &["eq", "B3: 1", "B3: 2"], 1);
    let o = run(&["eq", "B3: 1", "B4: 1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn fibered_golden() {
    golden_run(
        "fibered_k7_3_2_m2.txt",
        &["fibered", "-p", "7", "-q", "3", "-r", "2", "-n", "-2"],
        0,
    );
    golden_run(
        "fibered_k4_3_2_m2.json",
        &[
            "fibered", "-p", "4", "-q", "3", "-r", "2", "-n", "-2", "--json",
        ],
        0,
    );
    golden_run(
        "fibered_k5_3_2_p1.json",
        &[
            "fibered", "-p", "5", "-q", "3", "-r", "2", "-n", "1", "--json",
        ],
        0,
    );
    golden_run(
        "fibered_k5_3_2_m1.json",
        &[
            "fibered",
            "-p",
            "5",
            "-q",
            "3",
            "-r",
            "2",
            "-n",
            "-1",
            "--json",
            "--verify-steps",
        ],
        0,
    );
}

#[test]
fn alexander_golden() {
    golden_run(
        "alexander_twist_knot.txt",
        &["alexander", "B3: 2 1 2 1 2 1 2 1 -1 -1 -1 -1"],
        0,
    );
    golden_run("alexander_trefoil.txt", &["alexander", "B2: 1 1 1"], 0);
    let o = run(&["alexander", "B2: 1 1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("not a knot"));
}

#[test]
fn slope_golden() {
    golden_run(
        "slope_2_3_1.txt",
        &["slope", "-k", "2", "-q", "3", "-m", "1"],
        0,
    );
    assert_eq!(
        stdout(&run(&["slope", "-k", "2", "-q", "5", "-m", "2"])),
        "56\n"
    );
    assert_eq!(
        run(&["slope", "-k", "2", "-q", "4", "-m", "2"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn conjugacy_golden() {
    golden_run(
        "conjugacy_2_3_1.txt",
        &["conjugacy", "-k", "2", "-q", "3", "-m", "1"],
        0,
    );
    golden_run(
        "conjugacy_2_5_2.json",
        &["conjugacy", "-k", "2", "-q", "5", "-m", "2", "--json"],
        0,
    );
    let o = run(&["conjugacy", "-k", "2", "-q", "4", "-m", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("gcd"));
}

#[test]
fn lemmas_golden() {
    golden_run("lemmas_s7.txt", &["lemmas", "--smax", "7"], 0);
}

#[test]
fn sweep_golden_csv() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("sweep.csv");
    let certs = dir.path().join("certs");
    let o = run(&[
        "sweep",
        "--kmax",
        "3",
        "--qmax",
        "6",
        "--out",
        csv.to_str().unwrap(),
        "--cert-dir",
        certs.to_str().unwrap(),
        "--jobs",
        "3",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    check_golden("sweep_k3_q6.csv", &fs::read_to_string(&csv).unwrap());
    assert_eq!(fs::read_dir(&certs).unwrap().count(), 22);
    let one = fs::read_to_string(certs.join("k2_q5_m2.json")).unwrap();
    let cert: ConjugacyCertificate = serde_json::from_str(&one).unwrap();
    assert!(cert.is_valid());
}

#[test]
fn sweep_smallest_case() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("s.csv");
    let o = run(&[
        "sweep",
        "--kmax",
        "2",
        "--qmax",
        "2",
        "--out",
        csv.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        fs::read_to_string(&csv).unwrap(),
        "k,q,m,slope,valid,len_beta1,len_beta2,alexander_equal\n2,2,1,9,true,5,5,true\n"
    );
}

#[test]
fn sweep_staged_resume_matches_single_run() {
    let dir = tempfile::tempdir().unwrap();
    let whole = dir.path().join("whole.csv");
    let staged = dir.path().join("staged.csv");
    let w = whole.to_str().unwrap();
    let s = staged.to_str().unwrap();
    assert!(run(&["sweep", "--kmax", "3", "--qmax", "5", "--out", w])
        .status
        .success());

    let o = run(&[
        "sweep", "--kmax", "3", "--qmax", "5", "--out", s, "--limit", "4",
    ]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("rerun with --resume"));
    assert_eq!(
        fs::read_to_string(dir.path().join("staged.csv.cursor")).unwrap(),
        "4\n"
    );
    let mut finished = false;
    for _ in 0..10 {
        let o = run(&[
            "sweep", "--kmax", "3", "--qmax", "5", "--out", s, "--limit", "4", "--resume",
        ]);
        assert!(o.status.success(), "{}", stderr(&o));
        if !stdout(&o).contains("rerun with --resume") {
            finished = true;
            break;
        }
    }
    assert!(finished, "18 tuples in batches of 4 need 4 resumes");
    assert!(!dir.path().join("staged.csv.cursor").exists());
    assert_eq!(
        fs::read_to_string(&staged).unwrap(),
        fs::read_to_string(&whole).unwrap()
    );
}

#[test]
fn sweep_reads_config_file() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("cfg.csv");
    let cfg = dir.path().join("braidforge.conf");
    fs::write(
        &cfg,
        format!(
            "# test config\nkmax = 2\nqmax = 3\nout = {}\njobs = 1\n",
            csv.display()
        ),
    )
    .unwrap();
    let o = bin()
        .env("BRAIDFORGE_CONFIG", &cfg)
        .args(["sweep"])
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(fs::read_to_string(&csv).unwrap().lines().count(), 1 + 3);

    // flags override the file
    let o = bin()
        .env("BRAIDFORGE_CONFIG", &cfg)
        .args(["sweep", "--qmax", "2"])
        .output()
        .unwrap();
    assert!(o.status.success());
    assert_eq!(fs::read_to_string(&csv).unwrap().lines().count(), 1 + 1);

    fs::write(&cfg, "kmax = lots\n").unwrap();
    let o = bin()
        .env("BRAIDFORGE_CONFIG", &cfg)
        .args(["sweep"])
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn malformed_word_reports_position() {
    let o = run(&["nf", "B3: 1 2 0 1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("token 3"), "{}", stderr(&o));
    let o = run(&["nf", "1 2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("token 0"), "{}", stderr(&o));
    let o = run(&["eq", "B3: 1", "B3: 3"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn help_and_version() {
    let o = run(&["--help"]);
    assert_eq!(o.status.code(), Some(0));
    for sub in [
        "build",
        "nf",
        "eq",
        "fibered",
        "alexander",
        "slope",
        "conjugacy",
        "sweep",
        "lemmas",
    ] {
        assert!(stdout(&o).contains(sub), "help lacks {sub}");
    }
    let o = run(&["--version"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("braidforge "));
    assert_eq!(run(&[]).status.code(), Some(2));
    assert_eq!(run(&["build", "-p", "4"]).status.code(), Some(2));
}

#[test]
fn json_and_text_verdicts_agree() {
    for (p, q, r, n) in [
        ("5", "3", "2", "-1"),
        ("4", "3", "2", "-2"),
        ("3", "5", "2", "-1"),
        ("5", "3", "2", "1"),
    ] {
        let text = run(&["fibered", "-p", p, "-q", q, "-r", r, "-n", n]);
        let json = run(&["fibered", "-p", p, "-q", q, "-r", r, "-n", n, "--json"]);
        assert_eq!(text.status.code(), json.status.code());
        let cert: FiberednessCertificate = serde_json::from_slice(&json.stdout).unwrap();
        let first = stdout(&text).lines().next().unwrap().to_string();
        assert_eq!(first, format!("{}: {}", cert.params, cert.status));
    }
    for (k, q, m) in [("2", "3", "1"), ("3", "7", "4")] {
        let text = run(&["conjugacy", "-k", k, "-q", q, "-m", m]);
        let json = run(&["conjugacy", "-k", k, "-q", q, "-m", m, "--json"]);
        assert_eq!(text.status.code(), json.status.code());
        let cert: ConjugacyCertificate = serde_json::from_slice(&json.stdout).unwrap();
        assert!(stdout(&text)
            .lines()
            .next()
            .unwrap()
            .ends_with(&cert.status.to_string()));
    }
}

#[test]
fn outputs_use_lf_line_endings() {
    let o = run(&["conjugacy", "-k", "2", "-q", "3", "-m", "1", "--json"]);
    assert!(!stdout(&o).contains('\r'));
    assert!(stdout(&o).ends_with("}\n"));
}
