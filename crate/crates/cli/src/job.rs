//! Job files: a TOML document naming an algebra, the bicomodules to use and
//! the tasks to run.
//!
//! ```toml
//! degree_cap = 3
//!
//! [algebra]
//! builtin = "group_algebra:S3"
//!
//! [[comodule]]
//! catalog = "all"
//!
//! [[task]]
//! kind = "cohomology"
//! complex = "dual"
//! degrees = [0, 1, 2]
//! ```
//!
//! Scalars are strings (`"3"`, `"-1/2"`, `"1/2+1/3 i"`) or TOML integers.

use std::sync::Arc;

use hopf_core::cochain::ComplexKind;
use hopf_core::comodule::{catalog_bicomodules, Bicomodule, LeftCoaction, RightCoaction};
use hopf_core::hopf::{algebra_by_name, function_algebra, group_algebra, Family, FiniteGroup, FiniteMonoid, HopfStarAlgebra};
use hopf_core::linalg::{Matrix, Scalar};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CayleyFamily {
    Function,
    Group,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraSource {
    /// `function_algebra:NAME` or `group_algebra:NAME`.
    Builtin(String),
    Cayley { family: CayleyFamily, name: String, labels: Vec<String>, table: Vec<Vec<usize>>, identity: bool },
    Explicit {
        name: String,
        labels: Vec<String>,
        mult: Vec<Vec<Scalar>>,
        unit: Vec<Scalar>,
        comult: Vec<Vec<Scalar>>,
        counit: Option<Vec<Scalar>>,
        star: Option<Vec<Vec<Scalar>>>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LeftSpec {
    Zero,
    Trivial,
    Matrix(Vec<Vec<Scalar>>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ComoduleSource {
    /// A catalog label, or `all`.
    Catalog(String),
    Explicit { label: String, dim: usize, beta: Vec<Vec<Scalar>>, gamma: LeftSpec },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Task {
    Axioms,
    Saturation,
    Counit,
    Haar,
    Cohomology { kind: ComplexKind, degrees: Vec<usize> },
    Codiagonal,
    Mean,
    CodiagonalVanishing,
    PairGraded,
    InvariantMeanCriterion,
    DualNatural,
    OperatorCohomology,
}

impl Task {
    pub fn name(&self) -> &'static str {
        match self {
            Task::Axioms => "axioms",
            Task::Saturation => "saturation",
            Task::Counit => "counit",
            Task::Haar => "haar",
            Task::Cohomology { .. } => "cohomology",
            Task::Codiagonal => "codiagonal",
            Task::Mean => "mean",
            Task::CodiagonalVanishing => "codiagonal-vanishing",
            Task::PairGraded => "pair-graded",
            Task::InvariantMeanCriterion => "invariant-mean-criterion",
            Task::DualNatural => "dual-natural",
            Task::OperatorCohomology => "operator-cohomology",
        }
    }

    /// Execution order: axioms first, cross-checks last.
    pub(crate) fn rank(&self) -> usize {
        match self {
            Task::Axioms => 0,
            Task::Saturation => 1,
            Task::Counit => 2,
            Task::Haar => 3,
            Task::Cohomology { .. } => 4,
            Task::Codiagonal => 5,
            Task::Mean => 6,
            Task::CodiagonalVanishing => 7,
            Task::PairGraded => 8,
            Task::InvariantMeanCriterion => 9,
            Task::DualNatural => 10,
            Task::OperatorCohomology => 11,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JobSpec {
    pub algebra: AlgebraSource,
    pub comodules: Vec<ComoduleSource>,
    pub tasks: Vec<Task>,
    pub degree_cap: Option<usize>,
}

impl JobSpec {
    pub fn builtin(name: &str) -> Self {
        JobSpec {
            algebra: AlgebraSource::Builtin(name.to_string()),
            comodules: vec![ComoduleSource::Catalog("all".into())],
            tasks: Vec::new(),
            degree_cap: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
enum RawScalar {
    Int(i64),
    Text(String),
}

type RawMatrix = Vec<Vec<RawScalar>>;

#[derive(Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawAlgebra {
    #[serde(skip_serializing_if = "Option::is_none")]
    builtin: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    family: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    identity: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    table: Option<Vec<Vec<usize>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    unit: Option<Vec<RawScalar>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    counit: Option<Vec<RawScalar>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    mult: Option<RawMatrix>,
    #[serde(skip_serializing_if = "Option::is_none")]
    comult: Option<RawMatrix>,
    #[serde(skip_serializing_if = "Option::is_none")]
    star: Option<RawMatrix>,
}

#[derive(Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawComodule {
    #[serde(skip_serializing_if = "Option::is_none")]
    catalog: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    label: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    dim: Option<usize>,
    /// `zero` (default) or `trivial` when no `gamma` matrix is given.
    #[serde(skip_serializing_if = "Option::is_none")]
    left: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    beta: Option<RawMatrix>,
    #[serde(skip_serializing_if = "Option::is_none")]
    gamma: Option<RawMatrix>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTask {
    kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    complex: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    degrees: Option<Vec<usize>>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawJob {
    #[serde(skip_serializing_if = "Option::is_none")]
    degree_cap: Option<usize>,
    algebra: RawAlgebra,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    comodule: Vec<RawComodule>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    task: Vec<RawTask>,
}

fn field(path: impl Into<String>, message: impl Into<String>) -> CliError {
    CliError::Input { field: path.into(), message: message.into() }
}

fn scalar(path: &str, raw: &RawScalar) -> Result<Scalar, CliError> {
    match raw {
        RawScalar::Int(v) => Ok(Scalar::int(*v)),
        RawScalar::Text(t) => t.parse().map_err(|e| field(path, format!("{e}"))),
    }
}

fn vector(path: &str, raw: &[RawScalar]) -> Result<Vec<Scalar>, CliError> {
    raw.iter().enumerate().map(|(i, v)| scalar(&format!("{path}[{i}]"), v)).collect()
}

fn matrix(path: &str, raw: &RawMatrix) -> Result<Vec<Vec<Scalar>>, CliError> {
    let rows: Vec<Vec<Scalar>> =
        raw.iter().enumerate().map(|(i, r)| vector(&format!("{path}[{i}]"), r)).collect::<Result<_, _>>()?;
    if let Some(first) = rows.first() {
        if let Some(i) = rows.iter().position(|r| r.len() != first.len()) {
            return Err(field(format!("{path}[{i}]"), format!("row has {} entries, expected {}", rows[i].len(), first.len())));
        }
    }
    Ok(rows)
}

fn raw_vector(v: &[Scalar]) -> Vec<RawScalar> {
    v.iter().map(|s| RawScalar::Text(s.to_string())).collect()
}

fn raw_matrix(m: &[Vec<Scalar>]) -> RawMatrix {
    m.iter().map(|r| raw_vector(r)).collect()
}

fn parse_kind(path: &str, name: &str) -> Result<ComplexKind, CliError> {
    Ok(match name {
        "natural" => ComplexKind::Natural,
        "dual" => ComplexKind::Dual,
        "bar" => ComplexKind::Bar,
        "restricted" => ComplexKind::Restricted,
        other => return Err(field(path, format!("unknown complex `{other}`"))),
    })
}

fn parse_task(i: usize, raw: &RawTask) -> Result<Task, CliError> {
    let path = format!("task[{i}]");
    let simple = |t: Task| {
        if raw.complex.is_some() || raw.degrees.is_some() {
            Err(field(&path, format!("`{}` takes no complex or degrees", raw.kind)))
        } else {
            Ok(t)
        }
    };
    match raw.kind.as_str() {
        "axioms" => simple(Task::Axioms),
        "saturation" => simple(Task::Saturation),
        "counit" => simple(Task::Counit),
        "haar" => simple(Task::Haar),
        "codiagonal" => simple(Task::Codiagonal),
        "mean" => simple(Task::Mean),
        "codiagonal-vanishing" => simple(Task::CodiagonalVanishing),
        "pair-graded" => simple(Task::PairGraded),
        "invariant-mean-criterion" => simple(Task::InvariantMeanCriterion),
        "dual-natural" => simple(Task::DualNatural),
        "operator-cohomology" => simple(Task::OperatorCohomology),
        "cohomology" => {
            let kind = parse_kind(&format!("{path}.complex"), raw.complex.as_deref().unwrap_or("dual"))?;
            let degrees = raw.degrees.clone().unwrap_or_else(|| vec![0, 1, 2]);
            Ok(Task::Cohomology { kind, degrees })
        }
        other => Err(field(format!("{path}.kind"), format!("unknown task `{other}`"))),
    }
}

fn parse_algebra(raw: &RawAlgebra) -> Result<AlgebraSource, CliError> {
    let sources = [raw.builtin.is_some(), raw.table.is_some(), raw.mult.is_some()];
    if sources.iter().filter(|s| **s).count() != 1 {
        return Err(field("algebra", "give exactly one of `builtin`, `table` or `mult`"));
    }
    if let Some(name) = &raw.builtin {
        return Ok(AlgebraSource::Builtin(name.clone()));
    }
    let name = raw.name.clone().unwrap_or_else(|| "custom".into());
    if let Some(table) = &raw.table {
        let family = match raw.family.as_deref() {
            Some("function") => CayleyFamily::Function,
            Some("group") => CayleyFamily::Group,
            Some(other) => return Err(field("algebra.family", format!("expected `function` or `group`, got `{other}`"))),
            None => return Err(field("algebra.family", "required with `table`")),
        };
        let labels = raw.labels.clone().unwrap_or_else(|| (0..table.len()).map(|i| i.to_string()).collect());
        return Ok(AlgebraSource::Cayley { family, name, labels, table: table.clone(), identity: raw.identity.unwrap_or(true) });
    }
    let mult = matrix("algebra.mult", raw.mult.as_ref().expect("checked above"))?;
    let comult = matrix("algebra.comult", raw.comult.as_ref().ok_or_else(|| field("algebra.comult", "required with `mult`"))?)?;
    let unit = vector("algebra.unit", raw.unit.as_ref().ok_or_else(|| field("algebra.unit", "required with `mult`"))?)?;
    let counit = raw.counit.as_ref().map(|c| vector("algebra.counit", c)).transpose()?;
    let star = raw.star.as_ref().map(|s| matrix("algebra.star", s)).transpose()?;
    let labels = raw.labels.clone().unwrap_or_else(|| (0..unit.len()).map(|i| format!("e{i}")).collect());
    Ok(AlgebraSource::Explicit { name, labels, mult, unit, comult, counit, star })
}

fn parse_comodule(i: usize, raw: &RawComodule) -> Result<ComoduleSource, CliError> {
    let path = format!("comodule[{i}]");
    if let Some(name) = &raw.catalog {
        if raw.beta.is_some() || raw.gamma.is_some() || raw.dim.is_some() {
            return Err(field(&path, "`catalog` cannot be combined with matrices"));
        }
        return Ok(ComoduleSource::Catalog(name.clone()));
    }
    let beta = matrix(&format!("{path}.beta"), raw.beta.as_ref().ok_or_else(|| field(&path, "needs `catalog` or `beta`"))?)?;
    let dim = raw.dim.unwrap_or_else(|| beta.first().map_or(0, Vec::len));
    let gamma = match (&raw.gamma, raw.left.as_deref()) {
        (Some(_), Some(_)) => return Err(field(&path, "give `gamma` or `left`, not both")),
        (Some(g), None) => LeftSpec::Matrix(matrix(&format!("{path}.gamma"), g)?),
        (None, None | Some("zero")) => LeftSpec::Zero,
        (None, Some("trivial")) => LeftSpec::Trivial,
        (None, Some(other)) => return Err(field(format!("{path}.left"), format!("expected `zero` or `trivial`, got `{other}`"))),
    };
    let label = raw.label.clone().unwrap_or_else(|| format!("comodule-{i}"));
    Ok(ComoduleSource::Explicit { label, dim, beta, gamma })
}

/// Parse a job file. TOML errors carry line and column.
pub fn parse_input(text: &str) -> Result<JobSpec, CliError> {
    let raw: RawJob = toml::from_str(text).map_err(|e| CliError::Parse(e.to_string()))?;
    let algebra = parse_algebra(&raw.algebra)?;
    let comodules = raw.comodule.iter().enumerate().map(|(i, c)| parse_comodule(i, c)).collect::<Result<_, _>>()?;
    let tasks = raw.task.iter().enumerate().map(|(i, t)| parse_task(i, t)).collect::<Result<_, _>>()?;
    Ok(JobSpec { algebra, comodules, tasks, degree_cap: raw.degree_cap })
}

/// Canonical text form; `parse_input(&render(&j)) == j`.
pub fn render(job: &JobSpec) -> String {
    let algebra = match &job.algebra {
        AlgebraSource::Builtin(name) => RawAlgebra { builtin: Some(name.clone()), ..Default::default() },
        AlgebraSource::Cayley { family, name, labels, table, identity } => RawAlgebra {
            family: Some(match family {
                CayleyFamily::Function => "function".into(),
                CayleyFamily::Group => "group".into(),
            }),
            name: Some(name.clone()),
            labels: Some(labels.clone()),
            identity: Some(*identity),
            table: Some(table.clone()),
            ..Default::default()
        },
        AlgebraSource::Explicit { name, labels, mult, unit, comult, counit, star } => RawAlgebra {
            name: Some(name.clone()),
            labels: Some(labels.clone()),
            unit: Some(raw_vector(unit)),
            counit: counit.as_deref().map(raw_vector),
            mult: Some(raw_matrix(mult)),
            comult: Some(raw_matrix(comult)),
            star: star.as_deref().map(raw_matrix),
            ..Default::default()
        },
    };
    let comodule = job
        .comodules
        .iter()
        .map(|c| match c {
            ComoduleSource::Catalog(name) => RawComodule { catalog: Some(name.clone()), ..Default::default() },
            ComoduleSource::Explicit { label, dim, beta, gamma } => {
                let (left, gamma) = match gamma {
                    LeftSpec::Zero => (Some("zero".to_string()), None),
                    LeftSpec::Trivial => (Some("trivial".to_string()), None),
                    LeftSpec::Matrix(g) => (None, Some(raw_matrix(g))),
                };
                RawComodule { label: Some(label.clone()), dim: Some(*dim), left, beta: Some(raw_matrix(beta)), gamma, ..Default::default() }
            }
        })
        .collect();
    let task = job
        .tasks
        .iter()
        .map(|t| match t {
            Task::Cohomology { kind, degrees } => {
                RawTask { kind: t.name().into(), complex: Some(kind.name().into()), degrees: Some(degrees.clone()) }
            }
            other => RawTask { kind: other.name().into(), complex: None, degrees: None },
        })
        .collect();
    let raw = RawJob { degree_cap: job.degree_cap, algebra, comodule, task };
    toml::to_string(&raw).expect("job serializes")
}

fn shape_of(m: &[Vec<Scalar>]) -> (usize, usize) {
    (m.len(), m.first().map_or(0, Vec::len))
}

fn expect_shape(path: &str, m: &[Vec<Scalar>], want: (usize, usize)) -> Result<(), CliError> {
    let got = shape_of(m);
    // An empty row list has no column count to compare.
    if got == want || (got.0 == 0 && want.0 == 0) {
        Ok(())
    } else {
        Err(field(path, format!("matrix is {}×{}, expected {}×{}", got.0, got.1, want.0, want.1)))
    }
}

fn algebra_dim(source: &AlgebraSource) -> Result<usize, CliError> {
    Ok(match source {
        AlgebraSource::Builtin(name) => algebra_by_name(name).map_err(|e| field("algebra.builtin", e.to_string()))?.dim(),
        AlgebraSource::Cayley { table, .. } => table.len(),
        AlgebraSource::Explicit { unit, .. } => unit.len(),
    })
}

/// Every dimension and name check that needs no linear algebra. Runs before
/// anything is built.
pub fn validate(job: &JobSpec, cap: usize) -> Result<(), CliError> {
    let d = algebra_dim(&job.algebra)?;
    match &job.algebra {
        AlgebraSource::Builtin(_) => {}
        AlgebraSource::Cayley { labels, table, .. } => {
            if labels.len() != d {
                return Err(field("algebra.labels", format!("{} labels for a table of order {d}", labels.len())));
            }
            for (i, row) in table.iter().enumerate() {
                if row.len() != d {
                    return Err(field(format!("algebra.table[{i}]"), format!("row has {} entries, expected {d}", row.len())));
                }
                if let Some(v) = row.iter().find(|&&v| v >= d) {
                    return Err(field(format!("algebra.table[{i}]"), format!("entry {v} out of range 0..{d}")));
                }
            }
        }
        AlgebraSource::Explicit { labels, mult, comult, counit, star, .. } => {
            if labels.len() != d {
                return Err(field("algebra.labels", format!("{} labels, unit has {d} entries", labels.len())));
            }
            expect_shape("algebra.mult", mult, (d, d * d))?;
            expect_shape("algebra.comult", comult, (d * d, d))?;
            if let Some(c) = counit {
                if c.len() != d {
                    return Err(field("algebra.counit", format!("{} entries, expected {d}", c.len())));
                }
            }
            if let Some(s) = star {
                expect_shape("algebra.star", s, (d, d))?;
            }
        }
    }
    for (i, c) in job.comodules.iter().enumerate() {
        if let ComoduleSource::Explicit { dim, beta, gamma, .. } = c {
            expect_shape(&format!("comodule[{i}].beta"), beta, (dim * d, *dim))?;
            if let LeftSpec::Matrix(g) = gamma {
                expect_shape(&format!("comodule[{i}].gamma"), g, (d * dim, *dim))?;
            }
        }
    }
    for (i, t) in job.tasks.iter().enumerate() {
        if let Task::Cohomology { degrees, .. } = t {
            if let Some(&n) = degrees.iter().find(|&&n| n + 1 > cap) {
                return Err(field(format!("task[{i}].degrees"), format!("degree {n} needs a degree cap of at least {}", n + 1)));
            }
        }
    }
    if cap == 0 {
        return Err(field("degree_cap", "must be at least 1"));
    }
    Ok(())
}

fn to_matrix(rows: &[Vec<Scalar>], cols: usize) -> Matrix {
    if rows.is_empty() {
        return Matrix::zeros(0, cols);
    }
    Matrix::from_rows(rows.to_vec()).expect("rows checked at parse time")
}

/// The algebra and bicomodules named by a validated job.
pub struct Resolved {
    pub hopf: Arc<HopfStarAlgebra>,
    pub bicomodules: Vec<Bicomodule>,
}

fn core(path: &str) -> impl Fn(hopf_core::Error) -> CliError + '_ {
    move |e| field(path, e.to_string())
}

pub fn resolve(job: &JobSpec) -> Result<Resolved, CliError> {
    let hopf = match &job.algebra {
        AlgebraSource::Builtin(name) => algebra_by_name(name).map_err(core("algebra.builtin"))?,
        AlgebraSource::Cayley { family, name, labels, table, identity } => {
            let monoid = if *identity {
                FiniteMonoid::with_identity(name.clone(), labels.clone(), table.clone())
            } else {
                FiniteMonoid::new(name.clone(), labels.clone(), table.clone())
            }
            .map_err(core("algebra.table"))?;
            match family {
                CayleyFamily::Function => function_algebra(&monoid),
                CayleyFamily::Group => group_algebra(&FiniteGroup::from_monoid(monoid).map_err(core("algebra.table"))?),
            }
        }
        AlgebraSource::Explicit { name, labels, mult, unit, comult, counit, star } => {
            let d = unit.len();
            HopfStarAlgebra::new(
                name.clone(),
                labels.clone(),
                to_matrix(mult, d * d),
                unit.clone(),
                to_matrix(comult, d),
                counit.clone(),
                star.as_deref().map(|s| to_matrix(s, d)),
                Family::Explicit,
            )
            .map_err(core("algebra"))?
        }
    };
    let hopf = Arc::new(hopf);
    let mut bicomodules = Vec::new();
    for (i, c) in job.comodules.iter().enumerate() {
        let path = format!("comodule[{i}]");
        match c {
            ComoduleSource::Catalog(name) => {
                let all = catalog_bicomodules(&hopf);
                if name == "all" {
                    bicomodules.extend(all);
                } else {
                    let b = all
                        .into_iter()
                        .find(|b| b.label() == name)
                        .ok_or_else(|| field(format!("{path}.catalog"), format!("no catalog bicomodule `{name}` over {}", hopf.name())))?;
                    bicomodules.push(b);
                }
            }
            ComoduleSource::Explicit { label, dim, beta, gamma } => {
                let right = RightCoaction::new(hopf.clone(), *dim, to_matrix(beta, *dim)).map_err(core(&format!("{path}.beta")))?;
                let b = match gamma {
                    LeftSpec::Zero => Bicomodule::one_sided(label.clone(), right),
                    LeftSpec::Trivial => Bicomodule::left_trivial(label.clone(), right).map_err(core(&path))?,
                    LeftSpec::Matrix(g) => {
                        let left = LeftCoaction::new(hopf.clone(), *dim, to_matrix(g, *dim)).map_err(core(&format!("{path}.gamma")))?;
                        Bicomodule::new(label.clone(), right, left).map_err(core(&path))?
                    }
                };
                bicomodules.push(b);
            }
        }
    }
    Ok(Resolved { hopf, bicomodules })
}
