//! Report records. Every scalar is a string, every list is in a canonical
//! order, and map keys are sorted, so equal jobs give equal bytes.

use std::fmt::Write;

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub tool: String,
    pub version: String,
    /// SHA-256 of the canonical rendering of every job.
    pub input_digest: String,
    pub consistent: bool,
    pub jobs: Vec<JobReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_clock_ms: Option<u128>,
}

#[derive(Clone, Debug, Serialize)]
pub struct BicomoduleSummary {
    pub label: String,
    pub dim: usize,
    pub right_nondegenerate: bool,
    pub left_nondegenerate: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct JobReport {
    pub algebra: String,
    pub dim: usize,
    pub family: String,
    pub degree_cap: usize,
    pub bicomodules: Vec<BicomoduleSummary>,
    pub tasks: Vec<TaskReport>,
    pub h_dims: Vec<HRow>,
    pub consistent: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct TaskReport {
    pub task: String,
    pub consistent: bool,
    pub result: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_clock_ms: Option<u128>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct HRow {
    pub bicomodule: String,
    pub complex: String,
    pub degree: usize,
    pub dim_cochains: usize,
    pub dim_h: usize,
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "# {} report\n", self.tool);
        let _ = writeln!(out, "- input digest: `{}`", self.input_digest);
        let _ = writeln!(out, "- consistent: {}", if self.consistent { "yes" } else { "NO" });
        if let Some(ms) = self.wall_clock_ms {
            let _ = writeln!(out, "- wall clock: {ms} ms");
        }
        let rows: Vec<(&str, &HRow)> = self.jobs.iter().flat_map(|j| j.h_dims.iter().map(move |r| (j.algebra.as_str(), r))).collect();
        if !rows.is_empty() {
            out.push_str("\n## Cohomology dimensions\n\n");
            out.push_str("| algebra | bicomodule | complex | n | dim Cⁿ | dim Hⁿ |\n|---|---|---|---|---|---|\n");
            for (a, r) in rows {
                let _ = writeln!(out, "| {a} | {} | {} | {} | {} | {} |", r.bicomodule, r.complex, r.degree, r.dim_cochains, r.dim_h);
            }
        }
        out.push_str("\n## Tasks\n\n| algebra | cap | task | consistent |\n|---|---|---|---|\n");
        for j in &self.jobs {
            for t in &j.tasks {
                let _ = writeln!(out, "| {} | {} | {} | {} |", j.algebra, j.degree_cap, t.task, if t.consistent { "yes" } else { "NO" });
            }
        }
        out
    }
}
