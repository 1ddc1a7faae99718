//! Verification harness over `leinster-core`: loads an algebra or monoid,
//! runs the selected suites and assembles a deterministic JSON report.

pub mod catalog;
pub mod config;
pub mod schema;
pub mod suites;

use std::collections::BTreeMap;
use std::fmt::Write as _;

use leinster_core::bar_cobar::{cobar_bar, BarComplex};
use leinster_core::exact_linear::FiniteComplex;
use leinster_core::leinster::FaceSignRule;
use leinster_core::Status;
use rayon::prelude::*;
use serde::Serialize;

pub use config::{CliError, InputSource, NegativeControl, RunConfig, Subject, Suite, Target};
pub use suites::SuiteResult;

pub const SCHEMA_VERSION: u32 = 1;
pub const TOOL: &str = "leinster";

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub schema_version: u32,
    pub tool: &'static str,
    pub version: &'static str,
    pub input: String,
    pub config: RunConfig,
    pub status: Status,
    pub checks: usize,
    pub failed: usize,
    pub suites: Vec<SuiteResult>,
}

impl RunReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    /// One line per suite plus failing checks with their witnesses.
    pub fn summary(&self) -> String {
        let mut out = String::new();
        for s in &self.suites {
            let passed = s.reports.iter().filter(|r| r.passed()).count();
            let _ = writeln!(out, "{:<12} {:<9} {passed}/{}", s.suite.name(), status_word(s.status), s.reports.len());
            if let Some(e) = &s.error {
                let _ = writeln!(out, "    error: {e}");
            }
            for r in s.reports.iter().filter(|r| !r.passed()) {
                let _ = writeln!(out, "    {} {}: {}", status_word(r.status), r.name, r.witness.as_deref().unwrap_or(""));
            }
        }
        let _ = writeln!(
            out,
            "{}: {} checks, {} failed ({})",
            status_word(self.status),
            self.checks,
            self.failed,
            self.input
        );
        out
    }

    /// 0 when every suite passed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.status == Status::Pass {
            0
        } else {
            1
        }
    }
}

pub fn status_word(s: Status) -> &'static str {
    match s {
        Status::Pass => "pass",
        Status::Fail => "fail",
        Status::Undecided => "undecided",
    }
}

/// Loads the input, runs every selected suite and collects the results in
/// suite order.
pub fn run(cfg: &RunConfig) -> Result<RunReport, CliError> {
    cfg.validate()?;
    let subject = Subject::load(&cfg.input)?;
    subject.monoid(cfg.max_weight)?;
    let work = || -> Vec<SuiteResult> {
        cfg.suites
            .par_iter()
            .map(|&s| suites::run_suite(s, &subject, cfg))
            .collect()
    };
    let results = match cfg.jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build()
            .map_err(|e| CliError::Config(e.to_string()))?
            .install(work),
        None => work(),
    };
    let checks = results.iter().map(|s| s.reports.len()).sum();
    let failed = results
        .iter()
        .flat_map(|s| &s.reports)
        .filter(|r| r.status == Status::Fail)
        .count();
    let status = if results.iter().all(|s| s.status == Status::Pass) {
        Status::Pass
    } else if results.iter().any(|s| s.status == Status::Fail) {
        Status::Fail
    } else {
        Status::Undecided
    };
    Ok(RunReport {
        schema_version: SCHEMA_VERSION,
        tool: TOOL,
        version: env!("CARGO_PKG_VERSION"),
        input: subject.name().to_string(),
        config: cfg.clone(),
        status,
        checks,
        failed,
        suites: results,
    })
}

/// Complex whose homology `homology` reports.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum ComplexKind {
    /// The input algebra itself.
    Algebra,
    /// The truncated bar complex.
    Bar,
    /// Cobar of the bar coalgebra.
    CobarBar,
}

#[derive(Clone, Debug, Serialize)]
pub struct HomologyReport {
    pub input: String,
    pub complex: ComplexKind,
    pub max_weight: usize,
    /// Betti numbers for every degree carrying cells, zeros included.
    pub dims: BTreeMap<i64, usize>,
}

impl HomologyReport {
    pub fn table(&self) -> String {
        let mut out = format!("{:>6}  {:>4}\n", "degree", "dim");
        for (d, n) in &self.dims {
            let _ = writeln!(out, "{d:>6}  {n:>4}");
        }
        out
    }
}

fn dims<K: leinster_core::exact_linear::Label>(cx: Result<FiniteComplex<K>, leinster_core::LinearError>) -> Result<BTreeMap<i64, usize>, CliError> {
    cx.and_then(|c| c.homology_dims()).map_err(|e| CliError::Input(e.to_string()))
}

pub fn homology(input: &InputSource, complex: ComplexKind, max_weight: usize) -> Result<HomologyReport, CliError> {
    if max_weight == 0 || max_weight > config::MAX_WEIGHT_CAP {
        return Err(CliError::Config(format!(
            "max-weight = {max_weight} is outside 1..={}",
            config::MAX_WEIGHT_CAP
        )));
    }
    let subject = Subject::load(input)?;
    let dims = match complex {
        ComplexKind::Algebra => {
            let a = subject
                .algebra()
                .ok_or_else(|| CliError::Input("the algebra complex needs a dg algebra input".into()))?;
            dims(FiniteComplex::new((0..a.dim()).map(|i| (i, a.degree(i))), |&i| a.d_basis(i).clone(), None))?
        }
        ComplexKind::Bar => {
            let bar = BarComplex::new(subject.monoid(max_weight)?, max_weight, FaceSignRule::Standard)
                .map_err(|e| CliError::Input(e.to_string()))?;
            dims(bar.complex())?
        }
        ComplexKind::CobarBar => {
            let (_, c) = cobar_bar(subject.monoid(max_weight)?, max_weight).map_err(|e| CliError::Input(e.to_string()))?;
            dims(c.complex())?
        }
    };
    Ok(HomologyReport {
        input: subject.name().to_string(),
        complex,
        max_weight,
        dims,
    })
}
