use std::process::Command;
use std::sync::Arc;

use hopf_cli::job::{AlgebraSource, ComoduleSource, LeftSpec, Task};
use hopf_cli::{parse_input, render, run, CliError, JobSpec, RunOptions, Verb};
use hopf_core::cochain::ComplexKind;
use hopf_core::comodule::pair_graded;
use hopf_core::hopf::{algebra_by_name, Family};
use hopf_core::linalg::{Matrix, Scalar};
use proptest::prelude::*;

const Z2_JOB: &str = r#"
[algebra]
builtin = "group_algebra:Z2"

[[comodule]]
catalog = "regular"

[[task]]
kind = "axioms"

[[task]]
kind = "cohomology"
complex = "dual"
degrees = [0, 1]
"#;

const RIGHT_ZERO_JOB: &str = r#"
[algebra]
family = "function"
name = "right-zero+1"
labels = ["1", "a", "b"]
table = [[0, 1, 2], [1, 1, 2], [2, 1, 2]]

[[task]]
kind = "mean"
"#;

fn dense(m: &Matrix) -> Vec<Vec<Scalar>> {
    m.to_dense()
}

fn report_opts() -> RunOptions {
    RunOptions::new(Verb::Report)
}

fn task<'a>(r: &'a hopf_cli::Report, name: &str) -> &'a serde_json::Value {
    &r.jobs[0].tasks.iter().find(|t| t.task == name).unwrap().result
}

#[test]
fn zero_denominator_is_rejected_with_its_field() {
    let text = r#"
[algebra]
builtin = "group_algebra:Z2"

[[comodule]]
label = "bad"
beta = [["1/0"], ["0"]]
"#;
    match parse_input(text) {
        Err(CliError::Input { field, message }) => {
            assert_eq!(field, "comodule[0].beta[0][0]");
            assert!(message.contains("denominator"), "{message}");
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn malformed_toml_reports_a_line() {
    let err = parse_input("[algebra\nbuiltin = 1").unwrap_err();
    assert!(matches!(err, CliError::Parse(ref m) if m.contains("line")), "{err}");
}

#[test]
fn minimal_z2_job() {
    let job = parse_input(Z2_JOB).unwrap();
    assert_eq!(job.algebra, AlgebraSource::Builtin("group_algebra:Z2".into()));
    let report = run(&[job], &report_opts()).unwrap();
    assert!(report.consistent);
    let rows = &report.jobs[0].h_dims;
    assert_eq!(rows.len(), 2);
    assert!(rows.iter().all(|r| r.bicomodule == "regular"));
    // The algebra is commutative, so ∂₀ vanishes on the regular bicomodule.
    assert_eq!((rows[0].degree, rows[0].dim_h), (0, 2));
    assert_eq!((rows[1].degree, rows[1].dim_h), (1, 0));
}

#[test]
fn explicit_pair_graded_comodule_over_z3_round_trips() {
    let h = Arc::new(algebra_by_name("group_algebra:Z3").unwrap());
    let b = pair_graded(h).unwrap();
    assert_eq!(b.space_dim(), 9);
    let job = JobSpec {
        algebra: AlgebraSource::Builtin("group_algebra:Z3".into()),
        comodules: vec![
            ComoduleSource::Explicit {
                label: "pairs".into(),
                dim: 9,
                beta: dense(b.beta()),
                gamma: LeftSpec::Matrix(dense(b.gamma())),
            },
            ComoduleSource::Catalog("pair-graded".into()),
        ],
        tasks: vec![
            Task::Cohomology { kind: ComplexKind::Dual, degrees: vec![0, 1, 2] },
            Task::Cohomology { kind: ComplexKind::Natural, degrees: vec![0, 1, 2] },
        ],
        degree_cap: Some(3),
    };
    let text = render(&job);
    assert_eq!(parse_input(&text).unwrap(), job);
    let report = run(&[parse_input(&text).unwrap()], &report_opts()).unwrap();
    let rows = &report.jobs[0].h_dims;
    let dims = |label: &str| rows.iter().filter(|r| r.bicomodule == label).map(|r| (r.complex.clone(), r.degree, r.dim_h)).collect::<Vec<_>>();
    assert_eq!(dims("pairs"), dims("pair-graded"));
    assert!(dims("pairs").iter().all(|(_, n, d)| *n == 0 || *d == 0));
}

#[test]
fn mis_sized_matrix_fails_before_any_computation() {
    let text = r#"
[algebra]
builtin = "group_algebra:S3"

[[comodule]]
label = "short"
dim = 2
beta = [["1", "0"], ["0", "1"]]

[[task]]
kind = "cohomology"
"#;
    let job = parse_input(text).unwrap();
    let err = hopf_cli::validate(&job, 3).unwrap_err();
    match &err {
        CliError::Input { field, message } => {
            assert_eq!(field, "comodule[0].beta");
            assert!(message.contains("12×2"), "{message}");
        }
        other => panic!("{other:?}"),
    }
    assert!(run(&[job], &report_opts()).is_err());
    assert_eq!(err.exit_code(), 2);
}

#[test]
fn degree_beyond_cap_is_an_input_error() {
    let text = "[algebra]\nbuiltin = \"group_algebra:Z2\"\n[[comodule]]\ncatalog = \"all\"\n[[task]]\nkind = \"cohomology\"\ndegrees = [3]\n";
    let job = parse_input(text).unwrap();
    assert!(matches!(run(&[job], &report_opts()), Err(CliError::Input { .. })));
}

#[test]
fn unknown_names_are_rejected() {
    let job = parse_input("[algebra]\nbuiltin = \"group_algebra:Z9\"").unwrap();
    assert!(run(&[job], &report_opts()).is_err());
    let job = parse_input("[algebra]\nbuiltin = \"group_algebra:Z2\"\n[[comodule]]\ncatalog = \"nope\"").unwrap();
    assert!(matches!(run(&[job], &report_opts()), Err(CliError::Input { .. })));
    assert!(parse_input("[algebra]\nbuiltin = \"group_algebra:Z2\"\n[[task]]\nkind = \"everything\"").is_err());
}

#[test]
fn broken_explicit_algebra_is_rejected_with_witness() {
    // Z2 group algebra with a comultiplication that is not multiplicative.
    let text = r#"
[algebra]
labels = ["e", "a"]
unit = ["1", "0"]
counit = ["1", "1"]
mult = [["1", "0", "0", "1"], ["0", "1", "1", "0"]]
comult = [["1", "0"], ["0", "0"], ["0", "0"], ["0", "0"]]

[[task]]
kind = "axioms"
"#;
    let job = parse_input(text).unwrap();
    match run(&[job], &report_opts()) {
        Err(CliError::Rejected { task, message }) => {
            assert_eq!(task, "axioms");
            assert!(message.contains("basis index"), "{message}");
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn s3_codiagonal_job() {
    let job = parse_input("[algebra]\nbuiltin = \"group_algebra:S3\"\n[[task]]\nkind = \"axioms\"\n[[task]]\nkind = \"codiagonal\"").unwrap();
    let report = run(&[job], &report_opts()).unwrap();
    assert!(report.consistent);
    let c = task(&report, "codiagonal");
    assert_eq!(c["found"], true);
    assert_eq!(c["kronecker"]["gram_psd"], true);
    assert_eq!(c["kronecker"]["gram_size"], 36);
    assert_eq!(report.jobs[0].tasks[0].task, "axioms");
}

#[test]
fn right_zero_mean_is_infeasible_with_certificate() {
    let job = parse_input(RIGHT_ZERO_JOB).unwrap();
    let report = run(&[job], &RunOptions::new(Verb::Mean)).unwrap();
    let m = task(&report, "mean");
    assert_eq!(m["outcome"]["exists"], false);
    assert!(m["outcome"]["farkas"].as_array().is_some_and(|a| !a.is_empty()));
    assert_eq!(m["certificate_valid"], true);
    assert!(report.consistent);
}

#[test]
fn cayley_table_matches_builtin() {
    let job = parse_input(RIGHT_ZERO_JOB).unwrap();
    let r = hopf_cli::resolve(&job).unwrap();
    let builtin = algebra_by_name("function_algebra:right-zero+1").unwrap();
    assert_eq!(r.hopf.mult(), builtin.mult());
    assert_eq!(r.hopf.comult(), builtin.comult());
    assert!(matches!(r.hopf.family(), Family::Function(_)));
}

#[test]
fn verbs_filter_tasks() {
    let job = parse_input(Z2_JOB).unwrap();
    let r = run(std::slice::from_ref(&job), &RunOptions::new(Verb::Check)).unwrap();
    assert_eq!(r.jobs[0].tasks.len(), 1);
    let r = run(&[JobSpec::builtin("group_algebra:Z2")], &RunOptions::new(Verb::Verify)).unwrap();
    let names: Vec<&str> = r.jobs[0].tasks.iter().map(|t| t.task.as_str()).collect();
    assert_eq!(names, ["codiagonal-vanishing", "pair-graded", "invariant-mean-criterion", "dual-natural", "operator-cohomology"]);
}

#[test]
fn reports_are_deterministic() {
    let jobs = hopf_cli::catalog_jobs("group_algebra:S3").unwrap();
    let a = run(&jobs, &report_opts()).unwrap().to_json();
    let b = run(&jobs, &report_opts()).unwrap().to_json();
    assert_eq!(a, b);
    assert!(!a.contains("wall_clock"));
    let timed = run(&jobs, &RunOptions { timings: true, ..report_opts() }).unwrap().to_json();
    assert!(timed.contains("wall_clock_ms"));
}

#[test]
fn digest_depends_on_the_job_not_its_spelling() {
    let a = parse_input(Z2_JOB).unwrap();
    let b = parse_input(&Z2_JOB.replace("\n\n", "\n")).unwrap();
    let ra = run(&[a], &report_opts()).unwrap();
    let rb = run(&[b], &report_opts()).unwrap();
    assert_eq!(ra.input_digest, rb.input_digest);
    let rc = run(&[parse_input(&Z2_JOB.replace("[0, 1]", "[0]")).unwrap()], &report_opts()).unwrap();
    assert_ne!(ra.input_digest, rc.input_digest);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_hopfcoh");
    let ok = Command::new(bin).args(["check", "--catalog", "group_algebra:Z3"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&ok.stdout).unwrap();
    assert_eq!(v["consistent"], true);
    let bad = Command::new(bin).args(["check", "--catalog", "group_algebra:Q8"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
    let dir = std::env::temp_dir().join(format!("hopfcoh-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let input = dir.join("bad.toml");
    std::fs::write(&input, "[algebra]\nbuiltin = \"group_algebra:Z2\"\n[[comodule]]\nlabel = \"x\"\nbeta = [[\"1/0\"]]\n").unwrap();
    let bad = Command::new(bin).args(["report", "--input"]).arg(&input).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("beta[0][0]"));
    let out = dir.join("z2.md");
    let md = Command::new(bin).args(["cohomology", "--catalog", "group_algebra:Z2", "--format", "markdown", "--output"]).arg(&out).output().unwrap();
    assert_eq!(md.status.code(), Some(0));
    assert!(std::fs::read_to_string(&out).unwrap().contains("| group_algebra:Z2 | regular | natural | 0 |"));
    std::fs::remove_dir_all(&dir).unwrap();
}

fn arb_scalar() -> impl Strategy<Value = Scalar> {
    (-9i64..9, 1i64..6, -3i64..3, 1i64..4).prop_map(|(a, b, c, d)| Scalar::new(hopf_core::linalg::rat(a, b), hopf_core::linalg::rat(c, d)))
}

fn arb_task() -> impl Strategy<Value = Task> {
    prop_oneof![
        Just(Task::Axioms),
        Just(Task::Saturation),
        Just(Task::Haar),
        Just(Task::Mean),
        Just(Task::PairGraded),
        (prop::sample::select(vec![ComplexKind::Natural, ComplexKind::Dual, ComplexKind::Bar]), prop::collection::vec(0usize..3, 0..3))
            .prop_map(|(kind, degrees)| Task::Cohomology { kind, degrees }),
    ]
}

fn arb_job() -> impl Strategy<Value = JobSpec> {
    let comodule = (1usize..3, prop::collection::vec(arb_scalar(), 8), 0usize..3).prop_map(|(dim, vals, g)| {
        let beta: Vec<Vec<Scalar>> = (0..2 * dim).map(|r| (0..dim).map(|c| vals[(r * dim + c) % 8].clone()).collect()).collect();
        let gamma = match g {
            0 => LeftSpec::Zero,
            1 => LeftSpec::Trivial,
            _ => LeftSpec::Matrix(beta.iter().rev().cloned().collect()),
        };
        ComoduleSource::Explicit { label: format!("x{dim}"), dim, beta, gamma }
    });
    (
        prop::collection::vec(comodule, 0..3),
        prop::collection::vec(arb_task(), 0..4),
        prop::option::of(1usize..5),
        any::<bool>(),
    )
        .prop_map(|(mut comodules, tasks, degree_cap, catalog)| {
            if catalog {
                comodules.push(ComoduleSource::Catalog("all".into()));
            }
            JobSpec { algebra: AlgebraSource::Builtin("group_algebra:Z2".into()), comodules, tasks, degree_cap }
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn parse_render_parse_is_identity(job in arb_job()) {
        let once = parse_input(&render(&job)).unwrap();
        prop_assert_eq!(&once, &job);
        prop_assert_eq!(parse_input(&render(&once)).unwrap(), once);
    }
}
