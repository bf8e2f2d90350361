//! Named, reproducible verification scenarios and their JSON reports.
//!
//! Every scenario builds its groups from scratch, checks measured values
//! against expectations and returns a [`Report`]. Reports are deterministic:
//! two runs differ only in `wall_time_ms`.

mod context;
mod criteria;
mod misc;
mod normalizers;
mod odd_index;
mod registry;

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use context::Ctx;
pub use registry::scenario_ids;

pub const DEFAULT_CAP: u64 = 5_000_000;

/// Resource limits for one scenario run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    /// Most group elements any single enumeration may visit (also bounds
    /// the number of subgroups a search may collect).
    pub elements: u64,
    /// Largest group order a scenario may construct and work in.
    pub order: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { elements: DEFAULT_CAP, order: DEFAULT_CAP }
    }
}

/// Optional per-field overrides.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CapsOverride {
    pub elements: Option<u64>,
    pub order: Option<u64>,
}

impl CapsOverride {
    pub fn apply(&self, caps: Caps) -> Caps {
        Caps { elements: self.elements.unwrap_or(caps.elements), order: self.order.unwrap_or(caps.order) }
    }
}

/// Default caps plus per-scenario overrides, keyed by scenario id.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CapsConfig {
    #[serde(default)]
    pub defaults: CapsOverride,
    #[serde(default)]
    pub scenarios: BTreeMap<String, CapsOverride>,
}

impl CapsConfig {
    pub fn caps_for(&self, base: Caps, id: &str) -> Caps {
        let caps = self.defaults.apply(base);
        self.scenarios.get(id).map_or(caps, |o| o.apply(caps))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// A cap stopped the run before the claim could be decided.
    Truncated,
    /// The claim is out of reach at any desk-scale cap; nothing is asserted.
    Unreachable,
}

/// A permutation recorded by a scenario, replayable with
/// `Perm::parse_cycles(degree, &cycles)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub role: String,
    pub degree: usize,
    pub cycles: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub id: String,
    pub claim: String,
    pub exploratory: bool,
    pub status: Status,
    pub caps: Caps,
    pub measured: BTreeMap<String, Value>,
    pub expected: BTreeMap<String, Value>,
    pub mismatches: Vec<String>,
    pub witnesses: Vec<Witness>,
    pub truncated: Vec<String>,
    pub wall_time_ms: u64,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    /// The report with its timing field zeroed, for reproducibility checks.
    pub fn without_timing(&self) -> Report {
        Report { wall_time_ms: 0, ..self.clone() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScenarioInfo {
    pub id: String,
    pub claim: String,
    pub exploratory: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScenarioError {
    #[error("unknown scenario `{0}`")]
    UnknownScenario(String),
    #[error("invalid filter pattern `{pattern}`: {reason}")]
    InvalidFilter { pattern: String, reason: String },
    #[error("could not start worker pool: {0}")]
    Pool(String),
}

/// The registry in id order.
pub fn list_scenarios() -> Vec<ScenarioInfo> {
    registry::registry()
        .iter()
        .map(|s| ScenarioInfo { id: s.id.clone(), claim: s.claim.to_string(), exploratory: s.exploratory })
        .collect()
}

pub fn run_scenario(id: &str, caps: Caps) -> Result<Report, ScenarioError> {
    let def = registry::find(id).ok_or_else(|| ScenarioError::UnknownScenario(id.to_string()))?;
    let start = Instant::now();
    let mut ctx = Ctx::new(caps);
    if let Err(stop) = (def.run)(&mut ctx) {
        ctx.stop(stop);
    }
    Ok(ctx.finish(def, start.elapsed().as_millis() as u64))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Summary {
    pub reports: Vec<Report>,
    pub passed: usize,
    pub failed: usize,
    pub truncated: usize,
    pub unreachable: usize,
}

impl Summary {
    fn from_reports(reports: Vec<Report>) -> Self {
        let count = |s: Status| reports.iter().filter(|r| r.status == s).count();
        Summary {
            passed: count(Status::Pass),
            failed: count(Status::Fail),
            truncated: count(Status::Truncated),
            unreachable: count(Status::Unreachable),
            reports,
        }
    }

    /// 0 when everything passed, 1 on any failure, 2 on truncation without
    /// failure. Unreachable scenarios do not affect the code.
    pub fn exit_code(&self) -> i32 {
        if self.failed > 0 {
            1
        } else if self.truncated > 0 {
            2
        } else {
            0
        }
    }
}

/// Runs every scenario whose id matches `filter` (a glob) on `jobs` worker
/// threads, with caps chosen per id by `caps_for`. Reports come back in id
/// order regardless of scheduling.
pub fn run_all(
    filter: Option<&str>,
    jobs: usize,
    caps_for: impl Fn(&str) -> Caps + Sync,
) -> Result<Summary, ScenarioError> {
    let pattern = filter
        .map(|f| {
            glob::Pattern::new(f)
                .map_err(|e| ScenarioError::InvalidFilter { pattern: f.to_string(), reason: e.to_string() })
        })
        .transpose()?;
    let ids: Vec<String> =
        scenario_ids().into_iter().filter(|id| pattern.as_ref().is_none_or(|p| p.matches(id))).collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| ScenarioError::Pool(e.to_string()))?;
    let reports = pool.install(|| {
        ids.par_iter().map(|id| run_scenario(id, caps_for(id)).expect("id comes from the registry")).collect::<Vec<_>>()
    });
    Ok(Summary::from_reports(reports))
}
