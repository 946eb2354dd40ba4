use std::sync::Arc;
use std::time::Instant;

use hopf_core::amenability::{
    check_codiagonal_vanishing, check_invariant_mean_criterion, check_pair_graded, find_codiagonal, find_invariant_mean,
    kronecker_codiagonal, CodiagonalPositivity, CodiagonalSearch, CounitStatus,
};
use hopf_core::cochain::{cohomology, identify_dual_natural, identify_operator_cohomology, CochainComplex, CodiagonalSide, ComplexKind};
use hopf_core::comodule::Bicomodule;
use hopf_core::hopf::{counit_find, haar_state, AxiomReport, Family, HaarSearch, HopfStarAlgebra, Positivity};
use hopf_core::linalg::lp::Feasibility;
use hopf_core::linalg::scalar::Rational;
use hopf_core::linalg::{verify_inconsistency, Scalar};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::error::CliError;
use crate::job::{render, resolve, validate, JobSpec, Resolved, Task};
use crate::report::{BicomoduleSummary, HRow, JobReport, Report, TaskReport};

pub const DEFAULT_DEGREE_CAP: usize = hopf_core::cochain::DEFAULT_DEGREE_CAP;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verb {
    Check,
    Cohomology,
    Codiagonal,
    Mean,
    Verify,
    Report,
}

impl Verb {
    pub fn name(self) -> &'static str {
        match self {
            Verb::Check => "check",
            Verb::Cohomology => "cohomology",
            Verb::Codiagonal => "codiagonal",
            Verb::Mean => "mean",
            Verb::Verify => "verify",
            Verb::Report => "report",
        }
    }

    fn accepts(self, task: &Task) -> bool {
        match self {
            Verb::Report => true,
            Verb::Check => matches!(task, Task::Axioms | Task::Saturation | Task::Counit | Task::Haar),
            Verb::Cohomology => matches!(task, Task::Cohomology { .. }),
            Verb::Codiagonal => matches!(task, Task::Codiagonal),
            Verb::Mean => matches!(task, Task::Mean),
            Verb::Verify => matches!(
                task,
                Task::CodiagonalVanishing | Task::PairGraded | Task::InvariantMeanCriterion | Task::DualNatural | Task::OperatorCohomology
            ),
        }
    }

    /// Tasks run when the job lists none.
    pub fn default_tasks(self, cap: usize) -> Vec<Task> {
        let degrees: Vec<usize> = (0..cap).collect();
        let all = vec![
            Task::Axioms,
            Task::Saturation,
            Task::Counit,
            Task::Haar,
            Task::Cohomology { kind: ComplexKind::Natural, degrees: degrees.clone() },
            Task::Cohomology { kind: ComplexKind::Dual, degrees: degrees.clone() },
            Task::Cohomology { kind: ComplexKind::Bar, degrees },
            Task::Codiagonal,
            Task::Mean,
            Task::CodiagonalVanishing,
            Task::PairGraded,
            Task::InvariantMeanCriterion,
            Task::DualNatural,
            Task::OperatorCohomology,
        ];
        all.into_iter().filter(|t| self.accepts(t)).collect()
    }
}

#[derive(Clone, Copy, Debug)]
pub struct RunOptions {
    pub verb: Verb,
    /// Overrides the jobs' own caps.
    pub degree_cap: Option<usize>,
    pub timings: bool,
}

impl RunOptions {
    pub fn new(verb: Verb) -> Self {
        RunOptions { verb, degree_cap: None, timings: false }
    }
}

fn cap_for(job: &JobSpec, opts: &RunOptions) -> usize {
    opts.degree_cap.or(job.degree_cap).unwrap_or(DEFAULT_DEGREE_CAP)
}

fn tasks_for(job: &JobSpec, opts: &RunOptions, cap: usize) -> Vec<Task> {
    let mut tasks: Vec<Task> = if job.tasks.is_empty() {
        opts.verb.default_tasks(cap)
    } else {
        job.tasks.iter().filter(|t| opts.verb.accepts(t)).cloned().collect()
    };
    // Stable: equal ranks keep their input order.
    tasks.sort_by_key(Task::rank);
    tasks
}

pub fn input_digest(jobs: &[JobSpec], opts: &RunOptions) -> String {
    let mut hasher = Sha256::new();
    hasher.update(format!("verb={}\n", opts.verb.name()));
    for job in jobs {
        hasher.update(format!("cap={}\n", cap_for(job, opts)));
        hasher.update(render(job));
        hasher.update("\n");
    }
    hex::encode(hasher.finalize())
}

/// Validate and resolve every job, then run them in order.
pub fn run(jobs: &[JobSpec], opts: &RunOptions) -> Result<Report, CliError> {
    let start = Instant::now();
    let mut prepared = Vec::with_capacity(jobs.len());
    for job in jobs {
        let cap = cap_for(job, opts);
        validate(job, cap)?;
        let tasks = tasks_for(job, opts, cap);
        if let Some(t) = tasks.iter().find(|t| matches!(t, Task::Cohomology { degrees, .. } if degrees.iter().any(|n| n + 1 > cap))) {
            return Err(CliError::Input { field: "degree_cap".into(), message: format!("`{}` needs a larger degree cap than {cap}", t.name()) });
        }
        prepared.push((cap, tasks));
    }
    let mut resolved = Vec::with_capacity(jobs.len());
    for job in jobs {
        resolved.push(resolve(job)?);
    }
    let mut reports = Vec::new();
    for ((cap, tasks), r) in prepared.into_iter().zip(&resolved) {
        reports.push(run_job(r, &tasks, cap, opts.timings)?);
    }
    let consistent = reports.iter().all(|r| r.consistent);
    Ok(Report {
        tool: "hopfcoh".into(),
        version: env!("CARGO_PKG_VERSION").into(),
        input_digest: input_digest(jobs, opts),
        consistent,
        jobs: reports,
        wall_clock_ms: opts.timings.then(|| start.elapsed().as_millis()),
    })
}

fn family_name(h: &HopfStarAlgebra) -> String {
    match h.family() {
        Family::Function(m) => format!("function algebra of {}", m.name()),
        Family::Group(g) => format!("group algebra of {}", g.name()),
        Family::Dual => "dual".into(),
        Family::Explicit => "explicit".into(),
    }
}

fn run_job(r: &Resolved, tasks: &[Task], cap: usize, timings: bool) -> Result<JobReport, CliError> {
    let h = &r.hopf;
    let axioms = h.check_axioms();
    if let Some(bad) = axioms.failures().next() {
        let at = bad.witness.map_or(String::new(), |w| format!(" at basis index {w}"));
        return Err(CliError::Rejected { task: "axioms".into(), message: format!("{} fails{at}", bad.axiom) });
    }
    let bicomodules = r
        .bicomodules
        .iter()
        .map(|b| BicomoduleSummary {
            label: b.label().to_string(),
            dim: b.space_dim(),
            right_nondegenerate: b.right().check_nondegenerate().either(),
            left_nondegenerate: b.left().check_nondegenerate().either(),
        })
        .collect();
    let mut out = Vec::new();
    let mut h_dims = Vec::new();
    for task in tasks {
        let start = Instant::now();
        let abort = |e: hopf_core::Error| CliError::Aborted { task: task.name().into(), message: e.to_string() };
        let (consistent, result) = match task {
            Task::Axioms => (true, axioms_json(&axioms)),
            Task::Saturation => (true, serde_json::to_value(h.check_saturated()).expect("serializes")),
            Task::Counit => counit_task(h),
            Task::Haar => (true, haar_task(h)),
            Task::Cohomology { kind, degrees } => cohomology_task(&r.bicomodules, *kind, degrees, cap, &mut h_dims).map_err(abort)?,
            Task::Codiagonal => codiagonal_task(h).map_err(abort)?,
            Task::Mean => mean_task(h).map_err(abort)?,
            Task::CodiagonalVanishing => vanishing_task(h, cap).map_err(abort)?,
            Task::PairGraded => pair_graded_task(h, cap).map_err(abort)?,
            Task::InvariantMeanCriterion => mean_criterion_task(h, cap).map_err(abort)?,
            Task::DualNatural => dual_natural_task(&r.bicomodules, cap).map_err(abort)?,
            Task::OperatorCohomology => operator_task(&r.bicomodules, cap).map_err(abort)?,
        };
        out.push(TaskReport {
            task: task.name().into(),
            consistent,
            result,
            wall_clock_ms: timings.then(|| start.elapsed().as_millis()),
        });
    }
    let consistent = out.iter().all(|t| t.consistent);
    Ok(JobReport {
        algebra: h.name().to_string(),
        dim: h.dim(),
        family: family_name(h),
        degree_cap: cap,
        bicomodules,
        tasks: out,
        h_dims,
        consistent,
    })
}

fn sv(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(|s| Value::String(s.to_string())).collect())
}

fn rv(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(|s| Value::String(s.to_string())).collect())
}

fn not_applicable(reason: impl Into<String>) -> (bool, Value) {
    (true, json!({ "applicable": false, "reason": reason.into() }))
}

fn axioms_json(a: &AxiomReport) -> Value {
    json!({ "all_hold": a.all_hold(), "checks": serde_json::to_value(&a.checks).expect("serializes") })
}

fn counit_task(h: &HopfStarAlgebra) -> (bool, Value) {
    let c = counit_find(h);
    match (&c.counit, &c.certificate) {
        (Some(eps), _) => (
            true,
            json!({
                "found": true,
                "counit": sv(eps),
                "unique": c.unique,
                "two_sided": c.two_sided,
                "method": "exact row reduction of (ε⊗id)∘δ = id",
            }),
        ),
        (None, cert) => {
            let valid = cert.as_ref().is_some_and(|y| verify_inconsistency(&c.system.0, &c.system.1, y));
            (
                valid,
                json!({
                    "found": false,
                    "certificate": cert.as_deref().map(sv),
                    "certificate_valid": valid,
                    "method": "left-kernel vector y with yᵀA = 0 and yᵀb ≠ 0",
                }),
            )
        }
    }
}

fn haar_task(h: &HopfStarAlgebra) -> Value {
    match haar_state(h) {
        HaarSearch::Found { state, positivity } => {
            let pos = match positivity {
                Positivity::Coordinatewise => json!({ "kind": "coordinatewise" }),
                Positivity::PositiveDefinite(r) => json!({ "kind": "positive-definite", "psd": r.is_psd }),
                Positivity::Unchecked => json!({ "kind": "unchecked" }),
            };
            json!({ "found": true, "state": sv(&state), "positivity": pos })
        }
        HaarSearch::Absent { certificate } => json!({ "found": false, "certificate": sv(&certificate) }),
    }
}

fn cohomology_task(
    bicomodules: &[Bicomodule],
    kind: ComplexKind,
    degrees: &[usize],
    cap: usize,
    h_dims: &mut Vec<HRow>,
) -> hopf_core::Result<(bool, Value)> {
    let mut consistent = true;
    let mut entries = Vec::new();
    let top = degrees.iter().copied().max().unwrap_or(0);
    for b in bicomodules {
        let cx = CochainComplex::build(b, kind, top, cap)?;
        let chain = cx.chain_property().iter().all(|(_, ok)| *ok);
        consistent &= chain;
        let mut rows = Vec::new();
        for &n in degrees {
            let c = cohomology(&cx, n)?;
            h_dims.push(HRow {
                bicomodule: b.label().to_string(),
                complex: kind.name().into(),
                degree: n,
                dim_cochains: c.dim_cochains,
                dim_h: c.dim_h,
            });
            rows.push(json!({
                "degree": n,
                "dim_cochains": c.dim_cochains,
                "dim_kernel": c.dim_kernel,
                "dim_image_prev": c.dim_image_prev,
                "dim_h": c.dim_h,
                "representatives": c.representatives.iter().map(|v| sv(v)).collect::<Vec<_>>(),
            }));
        }
        entries.push(json!({ "bicomodule": b.label(), "chain_property": chain, "degrees": rows }));
    }
    Ok((consistent, json!({ "complex": kind.name(), "bicomodules": entries })))
}

fn codiagonal_task(h: &HopfStarAlgebra) -> hopf_core::Result<(bool, Value)> {
    if h.counit().is_none() {
        return Ok(not_applicable("no counit"));
    }
    let search = find_codiagonal(h)?;
    let (mut consistent, mut result) = match &search {
        CodiagonalSearch::Found { certificate, solution_dim } => {
            let positivity = match &certificate.positivity {
                Some(CodiagonalPositivity::Coordinatewise(ok)) => json!({ "kind": "coordinatewise", "holds": ok }),
                Some(CodiagonalPositivity::PositiveDefinite(r)) => json!({ "kind": "positive-definite", "holds": r.is_psd }),
                None => Value::Null,
            };
            (
                certificate.holds(),
                json!({
                    "found": true,
                    "functional": sv(&certificate.functional),
                    "solution_dim": solution_dim,
                    "identities_hold": certificate.holds(),
                    "positivity": positivity,
                    "method": "exact row reduction of the two codiagonal identities",
                }),
            )
        }
        CodiagonalSearch::Absent { certificate } => (
            true,
            json!({
                "found": false,
                "certificate": sv(certificate),
                "method": "left-kernel vector of the codiagonal system",
            }),
        ),
    };
    if let Family::Group(g) = h.family() {
        let k = kronecker_codiagonal(g)?;
        let ok = k.certificate.holds() && k.psd.is_psd && k.block_structure;
        consistent &= ok;
        result["kronecker"] = json!({
            "identities_hold": k.certificate.holds(),
            "gram_psd": k.psd.is_psd,
            "gram_size": k.gram.rows(),
            "classes": k.classes.len(),
            "block_structure": k.block_structure,
            "method": "exact LDLᵀ pivots of the pair Gram matrix",
        });
    }
    Ok((consistent, result))
}

fn mean_task(h: &HopfStarAlgebra) -> hopf_core::Result<(bool, Value)> {
    let Family::Function(m) = h.family() else {
        return Ok(not_applicable("means are computed on function algebras of monoids"));
    };
    let s = find_invariant_mean(m)?;
    let outcome = match &s.outcome {
        Feasibility::Feasible(w) => json!({ "exists": true, "weights": rv(w) }),
        Feasibility::Infeasible(y) => json!({ "exists": false, "farkas": rv(y) }),
    };
    Ok((
        s.consistent(),
        json!({
            "monoid": s.monoid,
            "outcome": outcome,
            "certificate_valid": s.certificate_valid,
            "oracle_feasible": s.oracle_feasible,
            "method": "phase-I simplex with Bland's rule, exact rationals",
        }),
    ))
}

fn side_name(s: Option<CodiagonalSide>) -> Value {
    match s {
        Some(CodiagonalSide::Right) => json!("right"),
        Some(CodiagonalSide::Left) => json!("left"),
        None => Value::Null,
    }
}

fn vanishing_task(h: &Arc<HopfStarAlgebra>, cap: usize) -> hopf_core::Result<(bool, Value)> {
    if cap < 2 {
        return Ok(not_applicable("needs a degree cap of at least 2"));
    }
    let r = check_codiagonal_vanishing(h.clone(), cap)?;
    let counit = match &r.counit {
        CounitStatus::Present => json!({ "present": true }),
        CounitStatus::Absent { h1_dim, identity_cocycle, identity_not_exact } => json!({
            "present": false,
            "h1_dim": h1_dim,
            "identity_cocycle": identity_cocycle,
            "identity_not_exact": identity_not_exact,
        }),
    };
    let entries: Vec<Value> = r
        .entries
        .iter()
        .map(|e| {
            json!({
                "bicomodule": e.label,
                "degree": e.degree,
                "nondegenerate": e.nondegenerate,
                "dim_h": e.dim_h,
                "side": side_name(e.side),
                "cocycles_checked": e.cocycles_checked,
                "homotopy_holds": e.homotopy_holds,
            })
        })
        .collect();
    Ok((
        r.holds,
        json!({
            "saturated": r.saturated,
            "counit": counit,
            "codiagonal_found": r.codiagonal.as_ref().is_some_and(|c| c.certificate().is_some()),
            "entries": entries,
            "holds": r.holds,
        }),
    ))
}

fn pair_graded_task(h: &HopfStarAlgebra, cap: usize) -> hopf_core::Result<(bool, Value)> {
    let Family::Group(g) = h.family() else {
        return Ok(not_applicable("pair grading needs a group algebra"));
    };
    let r = check_pair_graded(g, cap)?;
    Ok((
        r.holds,
        json!({
            "cocycles": r.cocycles,
            "graded_form": r.graded_form,
            "primitive": r.primitive,
            "h1_dim": r.h1_dim,
            "holds": r.holds,
        }),
    ))
}

fn mean_criterion_task(h: &HopfStarAlgebra, cap: usize) -> hopf_core::Result<(bool, Value)> {
    let Family::Function(m) = h.family() else {
        return Ok(not_applicable("means are computed on function algebras of monoids"));
    };
    if m.identity().is_none() {
        return Ok(not_applicable("the monoid has no identity"));
    }
    let r = check_invariant_mean_criterion(m, cap)?;
    let catalog: Vec<Value> = r.catalog_h1.iter().map(|(l, d)| json!({ "bicomodule": l, "h1_dim": d })).collect();
    Ok((
        r.consistent,
        json!({
            "mean_exists": r.mean.exists(),
            "quotient_dim": r.quotient_dim,
            "cocycle": r.cocycle,
            "exact": r.exact,
            "certificate_valid": r.certificate_valid,
            "h1_quotient": r.h1_quotient,
            "catalog_h1": catalog,
            "explicit_primitive": r.explicit_primitive,
            "invariant_from_primitive": r.invariant_from_primitive,
            "consistent": r.consistent,
        }),
    ))
}

fn dual_natural_task(bicomodules: &[Bicomodule], cap: usize) -> hopf_core::Result<(bool, Value)> {
    let mut consistent = true;
    let mut entries = Vec::new();
    for b in bicomodules {
        let rows = identify_dual_natural(b, cap - 1, cap)?;
        let degrees: Vec<Value> = rows
            .iter()
            .map(|r| {
                consistent &= r.sign_identity && r.dual_dim == r.natural_dim;
                json!({
                    "degree": r.degree,
                    "sign_identity": r.sign_identity,
                    "witness": r.witness,
                    "dual_dim": r.dual_dim,
                    "natural_dim": r.natural_dim,
                })
            })
            .collect();
        entries.push(json!({ "bicomodule": b.label(), "degrees": degrees }));
    }
    Ok((consistent, json!({ "bicomodules": entries })))
}

fn operator_task(bicomodules: &[Bicomodule], cap: usize) -> hopf_core::Result<(bool, Value)> {
    let mut consistent = true;
    let mut entries = Vec::new();
    for b in bicomodules {
        let rows = identify_operator_cohomology(b, cap - 1, cap)?;
        let degrees: Vec<Value> = rows
            .iter()
            .map(|r| {
                consistent &= r.identical;
                json!({ "degree": r.degree, "identical": r.identical, "witness": r.witness })
            })
            .collect();
        entries.push(json!({ "bicomodule": b.label(), "degrees": degrees }));
    }
    Ok((consistent, json!({ "bicomodules": entries })))
}

/// Jobs for every catalog algebra (`all`) or for one builtin name.
pub fn catalog_jobs(name: &str) -> Result<Vec<JobSpec>, CliError> {
    if name == "all" {
        return Ok(hopf_core::hopf::catalog::catalog_algebras()
            .iter()
            .map(|h| JobSpec::builtin(&builtin_name(h)))
            .collect());
    }
    hopf_core::hopf::algebra_by_name(name).map_err(|e| CliError::Input { field: "--catalog".into(), message: e.to_string() })?;
    Ok(vec![JobSpec::builtin(name)])
}

fn builtin_name(h: &HopfStarAlgebra) -> String {
    match h.family() {
        Family::Function(m) => format!("function_algebra:{}", m.name()),
        Family::Group(g) => format!("group_algebra:{}", g.name()),
        _ => h.name().to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_tasks_respect_the_cap() {
        let tasks = Verb::Cohomology.default_tasks(2);
        assert_eq!(tasks.len(), 3);
        assert!(tasks.iter().all(|t| matches!(t, Task::Cohomology { degrees, .. } if degrees == &[0, 1])));
    }

    #[test]
    fn tasks_run_axioms_first() {
        let mut job = JobSpec::builtin("group_algebra:Z2");
        job.tasks = vec![Task::Codiagonal, Task::Saturation, Task::Axioms];
        let order: Vec<&str> = tasks_for(&job, &RunOptions::new(Verb::Report), 3).iter().map(Task::name).collect();
        assert_eq!(order, ["axioms", "saturation", "codiagonal"]);
    }

    #[test]
    fn flag_overrides_job_cap() {
        let mut job = JobSpec::builtin("group_algebra:Z2");
        job.degree_cap = Some(2);
        assert_eq!(cap_for(&job, &RunOptions::new(Verb::Check)), 2);
        assert_eq!(cap_for(&job, &RunOptions { degree_cap: Some(4), ..RunOptions::new(Verb::Check) }), 4);
        assert_eq!(cap_for(&JobSpec::builtin("x"), &RunOptions::new(Verb::Check)), DEFAULT_DEGREE_CAP);
    }

    #[test]
    fn catalog_all_covers_every_algebra() {
        let jobs = catalog_jobs("all").unwrap();
        assert_eq!(jobs.len(), hopf_core::hopf::catalog_algebras().len());
        assert!(catalog_jobs("group_algebra:nope").is_err());
    }

    #[test]
    fn mean_is_not_applicable_on_group_algebras() {
        let r = run(&[JobSpec::builtin("group_algebra:Z2")], &RunOptions::new(Verb::Mean)).unwrap();
        assert_eq!(r.jobs[0].tasks[0].result["applicable"], false);
        assert!(r.consistent);
    }
}
