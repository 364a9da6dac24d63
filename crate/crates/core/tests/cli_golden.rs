use std::path::Path;
use std::process::{Command, Output};

use toric_stci::groebner::{AnyIdeal, IdealFile};
use toric_stci::toric::FinitePointSet;
use toric_stci::verify::Verdict;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_toric-stci"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("run binary")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn toric_ideal_n2() {
    let o = run(&["toric-ideal", "--family", "n=2,d=6,a=1"]);
    assert_eq!((code(&o), stdout(&o).as_str()), (0, "x1^6*x2 - y1^6\n"));
    let o = run(&["toric-ideal", "--family", "n=2,d=10,a=2"]);
    assert_eq!((code(&o), stdout(&o).as_str()), (0, "x1^20*x2 - y1^10\n"));
}

#[test]
fn toric_ideal_json_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("gb.json");
    let o = run(&[
        "toric-ideal",
        "--family",
        "n=3,d=6,a=1,1",
        "--json",
        path_str(&path),
    ]);
    assert_eq!(code(&o), 0);
    let file = IdealFile::from_json(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(file.field, "Q");
    assert_eq!(file.vars, ["x1", "x2", "x3", "y1", "y2"]);
    assert_eq!(file.gens.join("\n") + "\n", stdout(&o));
    let AnyIdeal::Rational(ideal) = file.load().unwrap() else {
        panic!("expected rational ideal");
    };
    assert_eq!(ideal.generators().len(), 8);
}

#[test]
fn toric_ideal_prime_field_and_lex() {
    let o = run(&[
        "toric-ideal",
        "--family",
        "n=2,d=6,a=1",
        "--field",
        "Fp:7",
        "--order",
        "lex",
    ]);
    assert_eq!((code(&o), stdout(&o).as_str()), (0, "x1^6*x2 - y1^6\n"));
}

#[test]
fn toric_ideal_from_config_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("config.json");
    std::fs::write(
        &path,
        r#"{"n": 1, "vars": ["a", "b", "c"], "params": ["s"], "points": [[1], [2], [3]]}"#,
    )
    .unwrap();
    let o = run(&["toric-ideal", "--config", path_str(&path)]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(stdout(&o), "b^2 - a*c\na*b - c\na^2 - b\n");
}

#[test]
fn verify_holds() {
    let o = run(&["verify", "--family", "n=2,d=6,a=1"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).lines().next(), Some("HOLDS"));
    let o = run(&[
        "verify",
        "--family",
        "n=3,d=6,a=1,1",
        "--candidates-builtin",
    ]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).lines().next(), Some("HOLDS"));
}

#[test]
fn verify_fails_with_two_binomials() {
    let dir = tempfile::tempdir().unwrap();
    let cands = dir.path().join("cands.txt");
    std::fs::write(
        &cands,
        "# two binomials\ny1^6 - x1^6*x3\n\ny2^6 - x2^6*x3\n",
    )
    .unwrap();
    let json = dir.path().join("verdict.json");
    let o = run(&[
        "verify",
        "--family",
        "n=3,d=6,a=1,1",
        "--candidates",
        path_str(&cands),
        "--q",
        "7",
        "--json",
        path_str(&json),
    ]);
    assert_eq!(code(&o), 2);
    let out = stdout(&o);
    assert!(out.starts_with("FAILS\n"));
    assert!(out.contains("reverse failure [0]: x2*y1 - x1*y2"));
    assert!(out.contains("separating point (1,1,1,1,2)"));

    let text = std::fs::read_to_string(&json).unwrap();
    let value: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(value["crosschecks"][0]["p"], 7);
    assert_eq!(value["crosschecks"][0]["equal"], false);
    let verdict = Verdict::from_json(&text).unwrap();
    assert!(!verdict.holds);
    assert!(!verdict.reverse_failures.is_empty());
}

#[test]
fn verify_in_prime_field() {
    let o = run(&["verify", "--family", "n=3,d=6,a=1,1", "--field", "Fp:13"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("field: Fp:13"));
}

#[test]
fn verify_without_builtin_candidates() {
    let o = run(&[
        "verify",
        "--family",
        "n=4,d=6,a=1,1,1",
        "--candidates-builtin",
    ]);
    assert_eq!(code(&o), 1);
    assert!(String::from_utf8_lossy(&o.stderr).contains("open problem"));
}

#[test]
fn verify_json_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let verdicts: Vec<Verdict> = (0..2)
        .map(|i| {
            let path = dir.path().join(format!("v{i}.json"));
            let o = run(&[
                "verify",
                "--family",
                "n=3,d=6,a=2,3",
                "--json",
                path_str(&path),
            ]);
            assert_eq!(code(&o), 0);
            Verdict::from_json(&std::fs::read_to_string(&path).unwrap()).unwrap()
        })
        .collect();
    assert!(verdicts[0].same_outcome(&verdicts[1]));
    assert!(verdicts[0].holds);
}

#[test]
fn points_report() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("points.json");
    let o = run(&[
        "points",
        "--family",
        "n=2,d=6,a=1",
        "--q",
        "2",
        "--json",
        path_str(&json),
    ]);
    assert_eq!(code(&o), 0);
    assert_eq!(
        stdout(&o),
        "# 4 points over F_2 in dimension 3\n0,0,0\n0,1,0\n1,0,0\n1,1,1\n"
    );
    let set: FinitePointSet =
        serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(set.len(), 4);

    let o = run(&[
        "points",
        "--family",
        "n=2,d=6,a=1",
        "--q",
        "7",
        "--candidates-builtin",
    ]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("# 49 points over F_7"));
}

#[test]
fn points_cap() {
    let o = run(&[
        "points",
        "--family",
        "n=3,d=6,a=1,1",
        "--q",
        "13",
        "--cap",
        "1000",
    ]);
    assert_eq!(code(&o), 1);
    let o = run(&["points", "--family", "n=2,d=6,a=1", "--q", "9"]);
    assert_eq!(code(&o), 1);
}

#[test]
fn witness_subcommand() {
    let o = run(&[
        "witness",
        "--family",
        "n=3,d=6,a=1,1",
        "--q",
        "7",
        "--point",
        "1,1,1,1,1",
    ]);
    assert_eq!(
        (code(&o), stdout(&o).as_str()),
        (0, "witness u = (1,1,1)\n")
    );
    let o = run(&[
        "witness",
        "--family",
        "n=3,d=6,a=1,1",
        "--q",
        "7",
        "--point",
        "0,0,3,0,0",
    ]);
    assert_eq!(
        (code(&o), stdout(&o).as_str()),
        (2, "no witness: no-dth-root\n")
    );
    let o = run(&[
        "witness",
        "--family",
        "n=3,d=6,a=1,1",
        "--q",
        "7",
        "--point",
        "1,1,0,1,0",
    ]);
    assert_eq!(
        (code(&o), stdout(&o).as_str()),
        (2, "no witness: equation-violated\n")
    );
    let o = run(&[
        "witness",
        "--family",
        "n=3,d=6,a=1,1",
        "--q",
        "7",
        "--point",
        "1,1",
    ]);
    assert_eq!(code(&o), 1);
}

#[test]
fn bounds_subcommand() {
    let o = run(&["bounds", "--family", "n=3,d=6,a=1,1"]);
    assert_eq!(code(&o), 0);
    assert_eq!(
        stdout(&o),
        "N=5\ncodim=2\nlower=3 (etale-cohomological bound)\nupper=5 (Eisenbud-Evans)\nara=3\n"
    );
    let o = run(&["bounds", "--family", "n=2,d=6,a=1"]);
    assert!(stdout(&o).starts_with("N=3\ncodim=1\nlower=1"));
    let o = run(&["bounds", "--family", "n=2,d=8,a=1"]);
    assert_eq!(code(&o), 1);
    assert!(String::from_utf8_lossy(&o.stderr).contains("two distinct primes"));
}

#[test]
fn usage_errors() {
    assert_eq!(code(&run(&[])), 1);
    assert_eq!(code(&run(&["frobnicate"])), 1);
    assert_eq!(code(&run(&["toric-ideal"])), 1);
    assert_eq!(code(&run(&["toric-ideal", "--family", "n=2,d=6"])), 1);
    assert_eq!(code(&run(&["toric-ideal", "--family", "n=2,d=8,a=1"])), 1);
    assert_eq!(
        code(&run(&[
            "toric-ideal",
            "--family",
            "n=2,d=6,a=1",
            "--order",
            "deglex"
        ])),
        1
    );
    assert_eq!(
        code(&run(&[
            "verify",
            "--family",
            "n=2,d=6,a=1",
            "--candidates",
            "/nonexistent/cands.txt"
        ])),
        1
    );
    assert_eq!(code(&run(&["--help"])), 0);
}

#[test]
fn non_strict_family_warns() {
    let o = run(&["toric-ideal", "--family", "n=2,d=8,a=1", "--no-strict"]);
    assert_eq!((code(&o), stdout(&o).as_str()), (0, "x1^8*x2 - y1^8\n"));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("warning:"));
}

#[test]
fn step_limit_from_environment_and_flag() {
    let o = bin()
        .args(["verify", "--family", "n=3,d=6,a=1,1"])
        .env("TORIC_STCI_STEP_LIMIT", "1")
        .output()
        .unwrap();
    assert_eq!(code(&o), 1);
    assert!(String::from_utf8_lossy(&o.stderr).contains("step limit"));

    let o = bin()
        .args([
            "verify",
            "--family",
            "n=3,d=6,a=1,1",
            "--step-limit",
            "100000",
        ])
        .env("TORIC_STCI_STEP_LIMIT", "1")
        .output()
        .unwrap();
    assert_eq!(code(&o), 0);
}
