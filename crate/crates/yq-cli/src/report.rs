//! Running a configuration and rendering the report.
//!
//! The report body (everything except the `timing` section) depends only
//! on the configuration: results are sorted by id and wall times live in
//! `timing`, so two runs with the same flags produce identical bodies.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::Path;
use std::time::Instant;

use serde::Serialize;
use yq_verify::Status;

use crate::config::{Format, RunConfig};
use crate::suites::{run_suite, CenterSection, CheckRecord, SuiteError};

/// Process exit codes of `yq`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExitCode {
    /// Every check passed.
    Pass = 0,
    /// Some check failed.
    Fail = 1,
    /// Invalid command line or configuration.
    Usage = 2,
    /// A division by `u ∓ v` or an inversion was attempted on an element
    /// that does not satisfy its precondition.
    Precondition = 3,
    /// Anything else (I/O, internal errors).
    Internal = 4,
}

impl ExitCode {
    /// Numeric process status.
    pub fn code(self) -> i32 {
        self as i32
    }
}

/// Tool name and version.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ToolInfo {
    /// Binary name.
    pub name: &'static str,
    /// Crate version.
    pub version: &'static str,
}

/// Counts by status.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    /// Number of checks.
    pub total: usize,
    /// Passing checks.
    pub pass: usize,
    /// Failing checks.
    pub fail: usize,
    /// Checks stopped by a division precondition.
    pub precondition: usize,
}

/// Wall times, kept apart from the deterministic body.
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct Timing {
    /// Total seconds.
    pub total_seconds: f64,
    /// Seconds per suite.
    pub suites: BTreeMap<String, f64>,
    /// Seconds per check.
    pub checks: BTreeMap<String, f64>,
}

/// A complete verification report.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    /// Report format version.
    pub schema: u32,
    /// Producer.
    pub tool: ToolInfo,
    /// The configuration that was run.
    pub config: RunConfig,
    /// Counts by status.
    pub summary: Summary,
    /// Inferred definitions, e.g. `hprime`.
    pub bindings: BTreeMap<String, String>,
    /// Identities stated in alternative forms, and whether any form holds
    /// (e.g. which variant of the rank-three `e_1 e_2` relation verifies).
    pub groups: BTreeMap<String, bool>,
    /// The central series, when the center suite ran.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub center: Option<CenterSection>,
    /// Check results sorted by id.
    pub results: Vec<CheckRecord>,
    /// Wall times.
    pub timing: Timing,
}

impl Report {
    /// Exit status implied by the results: precondition violations take
    /// precedence over failures.
    pub fn exit_code(&self) -> ExitCode {
        if self.summary.precondition > 0 {
            ExitCode::Precondition
        } else if self.summary.fail > 0 {
            ExitCode::Fail
        } else {
            ExitCode::Pass
        }
    }

    /// The report body without timing, as JSON (used to compare runs).
    pub fn body_json(&self) -> serde_json::Value {
        let mut v = serde_json::to_value(self).expect("report serializes");
        v.as_object_mut().expect("object").remove("timing");
        v
    }

    /// Pretty JSON of the full report.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    /// One line per check followed by bindings, groups and a summary.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.results {
            let mut line = format!("{:<12} {:<28} n={} L={}", r.status.to_string().to_uppercase(), r.id, r.n, r.order);
            if let Some(i) = r.instance.as_ref().filter(|i| !i.is_empty()) {
                line += &format!(" [{i}]");
            }
            if r.status != Status::Pass {
                if let Some(d) = &r.detail {
                    line += &format!(": {d}");
                }
            }
            out += &line;
            out.push('\n');
        }
        for (k, v) in &self.bindings {
            out += &format!("binding {k} = {v}\n");
        }
        for (k, v) in &self.groups {
            out += &format!("group {k}: {}\n", if *v { "holds" } else { "no form holds" });
        }
        if let Some(c) = &self.center {
            for (r, z) in c.z.iter().enumerate() {
                out += &format!("z[{r}] = {z}\n");
            }
            out += &format!("center routes equal: {}\n", c.routes_equal);
        }
        let s = &self.summary;
        out += &format!(
            "summary: {} checks, {} pass, {} fail, {} precondition ({:.2}s)\n",
            s.total, s.pass, s.fail, s.precondition, self.timing.total_seconds
        );
        out
    }

    /// Rendered in the configured format.
    pub fn render(&self) -> String {
        match self.config.format {
            Format::Json => self.to_json(),
            Format::Text => self.to_text(),
        }
    }
}

/// Runs every selected suite of a validated configuration.
pub fn run(config: &RunConfig) -> Result<Report, SuiteError> {
    let start = Instant::now();
    let mut results = Vec::new();
    let mut bindings = BTreeMap::new();
    let mut groups = BTreeMap::new();
    let mut center = None;
    let mut timing = Timing::default();
    for &suite in &config.suites {
        let t = Instant::now();
        let out = run_suite(suite, config.n, config.order, config.seed)?;
        timing.suites.insert(suite.as_str().to_string(), t.elapsed().as_secs_f64());
        results.extend(out.records);
        bindings.extend(out.bindings);
        groups.extend(out.groups);
        if out.center.is_some() {
            center = out.center;
        }
    }
    results.sort_by(|a, b| a.id.cmp(&b.id));
    let mut summary = Summary { total: results.len(), ..Default::default() };
    for r in &results {
        match r.status {
            Status::Pass => summary.pass += 1,
            Status::Fail => summary.fail += 1,
            Status::Precondition => summary.precondition += 1,
        }
        timing.checks.insert(r.id.clone(), r.seconds);
    }
    timing.total_seconds = start.elapsed().as_secs_f64();
    Ok(Report {
        schema: 1,
        tool: ToolInfo { name: "yq", version: env!("CARGO_PKG_VERSION") },
        config: config.clone(),
        summary,
        bindings,
        groups,
        center,
        results,
        timing,
    })
}

/// Writes `text` to `path` atomically: a temporary file in the same
/// directory is written, flushed and renamed over the target.
pub fn write_atomic(path: &Path, text: &str) -> std::io::Result<()> {
    let dir = path.parent().filter(|p| !p.as_os_str().is_empty()).unwrap_or(Path::new("."));
    let name = path.file_name().map(|n| n.to_string_lossy().into_owned()).unwrap_or_else(|| "report".into());
    let tmp = dir.join(format!(".{name}.{}.tmp", std::process::id()));
    let mut f = std::fs::File::create(&tmp)?;
    f.write_all(text.as_bytes())?;
    f.sync_all()?;
    drop(f);
    std::fs::rename(&tmp, path).map_err(|e| {
        let _ = std::fs::remove_file(&tmp);
        e
    })
}
