//! Orchestration for the `orthoinv` command: configuration, suite
//! scheduling, caching of S_m[z] constructions and JSON reports.

pub mod cache;

use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use serde::Serialize;
use thiserror::Error;

use orthoinv_core::gf::Field;
use orthoinv_core::invariants::{EPair, InvariantSet, DEFAULT_TERM_BUDGET};
use orthoinv_core::relations::{run_suite, CheckResult, Status, SuiteOptions, SUITES};

use cache::Cache;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error(transparent)]
    Core(#[from] orthoinv_core::Error),
    #[error("report serialization: {0}")]
    Json(#[from] serde_json::Error),
}

impl HarnessError {
    pub fn io(path: &Path, source: std::io::Error) -> Self {
        HarnessError::Io { path: path.to_path_buf(), source }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RunConfig {
    pub m: usize,
    pub q: u32,
    pub suites: Vec<String>,
    pub degree_cap: u32,
    pub term_budget: usize,
    pub jobs: usize,
    pub cache_dir: Option<PathBuf>,
    pub report_path: Option<PathBuf>,
}

impl RunConfig {
    pub fn new(m: usize, q: u32) -> Self {
        RunConfig {
            m,
            q,
            suites: vec!["all".into()],
            degree_cap: SuiteOptions::default().degree_cap,
            term_budget: DEFAULT_TERM_BUDGET,
            jobs: 1,
            cache_dir: None,
            report_path: None,
        }
    }

    pub fn with_suites(mut self, suites: &[&str]) -> Self {
        self.suites = suites.iter().map(|s| s.to_string()).collect();
        self
    }

    /// Checks the parameters and expands `all` into the individual suites.
    pub fn resolved_suites(&self) -> Result<Vec<String>, HarnessError> {
        if !(1..=3).contains(&self.m) {
            return Err(HarnessError::Config(format!("m = {} is outside 1..=3", self.m)));
        }
        Field::with_order(self.q).map_err(|_| HarnessError::Config(format!("q = {} is not one of 2, 4, 8, 16", self.q)))?;
        if self.jobs == 0 {
            return Err(HarnessError::Config("jobs must be positive".into()));
        }
        if self.suites.is_empty() {
            return Err(HarnessError::Config("no suite selected".into()));
        }
        let mut out: Vec<String> = Vec::new();
        for s in &self.suites {
            if !SUITES.contains(&s.as_str()) {
                return Err(HarnessError::Config(format!("unknown suite {s:?}; expected one of {}", SUITES.join(", "))));
            }
            let expanded: Vec<&str> = if s == "all" { SUITES.iter().copied().filter(|x| *x != "all").collect() } else { vec![s] };
            for x in expanded {
                if !out.iter().any(|o| o == x) {
                    out.push(x.to_string());
                }
            }
        }
        Ok(out)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub suite: String,
    pub name: String,
    pub status: String,
    pub millis: u128,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub wall_millis: u128,
    pub cache_hits: usize,
    pub cache_misses: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub config: RunConfig,
    pub checks: Vec<CheckRecord>,
    pub summary: Summary,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    /// 0 if nothing failed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        i32::from(!self.all_passed())
    }

    pub fn check(&self, name: &str) -> Option<&CheckRecord> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn write(&self, path: &Path) -> Result<(), HarnessError> {
        let text = serde_json::to_string_pretty(self)?;
        std::fs::write(path, text + "\n").map_err(|e| HarnessError::io(path, e))
    }
}

fn record(suite: &str, r: CheckResult) -> CheckRecord {
    CheckRecord { suite: suite.to_string(), name: r.name, status: r.status.to_string(), millis: r.millis, detail: r.detail, witness: r.witness }
}

/// Loads cached S_m[z] constructions into `set`.
fn seed_from_cache(cache: &Cache, set: &InvariantSet) {
    let (m, q) = (set.m(), set.q());
    if let Some(mut u) = cache.load("u", m, q) {
        if u.len() == 1 {
            set.seed_u(u.remove(0));
        }
    }
    if let Some(d) = cache.load("dickson", m, q) {
        set.seed_dickson(d);
    }
    if let Some(flat) = cache.load("e", m, q) {
        let pairs: Vec<EPair> = flat.chunks_exact(2).map(|c| EPair { e: c[0].clone(), b: c[1].clone() }).collect();
        if flat.len() % 2 == 0 {
            set.seed_e(pairs);
        }
    }
}

fn store_to_cache(cache: &Cache, set: &InvariantSet) -> Result<(), HarnessError> {
    let (m, q) = (set.m(), set.q());
    if let Some(u) = set.built_u() {
        cache.store("u", m, q, &[u])?;
    }
    if let Some(d) = set.built_dickson() {
        cache.store("dickson", m, q, &d.iter().collect::<Vec<_>>())?;
    }
    if let Some(e) = set.built_e() {
        cache.store("e", m, q, &e.iter().flat_map(|p| [&p.e, &p.b]).collect::<Vec<_>>())?;
    }
    Ok(())
}

/// Builds (or loads) the invariant set, runs the selected suites on up to
/// `jobs` threads and writes the report if a path is configured.
pub fn run(config: &RunConfig) -> Result<Report, HarnessError> {
    let suites = config.resolved_suites()?;
    let start = Instant::now();
    let field = Field::with_order(config.q)?;
    let set = InvariantSet::with_budget(config.m, field, config.term_budget)?;
    let cache = config.cache_dir.as_ref().map(Cache::open).transpose()?;
    if let Some(c) = &cache {
        seed_from_cache(c, &set);
    }
    let opts = SuiteOptions { degree_cap: config.degree_cap, ..SuiteOptions::default() };

    let slots: Vec<Mutex<Option<Vec<CheckRecord>>>> = suites.iter().map(|_| Mutex::new(None)).collect();
    let next = AtomicUsize::new(0);
    let worker = || -> Result<(), HarnessError> {
        loop {
            let i = next.fetch_add(1, Ordering::Relaxed);
            let Some(name) = suites.get(i) else { return Ok(()) };
            let records = run_suite(name, &set, &opts)?.into_iter().map(|r| record(name, r)).collect();
            *slots[i].lock().expect("suite slot") = Some(records);
        }
    };
    std::thread::scope(|scope| {
        let handles: Vec<_> = (0..config.jobs.min(suites.len())).map(|_| scope.spawn(worker)).collect();
        handles.into_iter().try_for_each(|h| h.join().expect("suite worker panicked"))
    })?;

    if let Some(c) = &cache {
        store_to_cache(c, &set)?;
    }
    let checks: Vec<CheckRecord> = slots.into_iter().flat_map(|s| s.into_inner().expect("suite slot").unwrap_or_default()).collect();
    let count = |st: Status| checks.iter().filter(|c| c.status == st.to_string()).count();
    let summary = Summary {
        total: checks.len(),
        passed: count(Status::Pass),
        failed: count(Status::Fail),
        skipped: count(Status::Skipped),
        wall_millis: start.elapsed().as_millis(),
        cache_hits: cache.as_ref().map_or(0, Cache::hits),
        cache_misses: cache.as_ref().map_or(0, Cache::misses),
    };
    let report = Report { config: config.clone(), checks, summary };
    if let Some(path) = &config.report_path {
        report.write(path)?;
    }
    Ok(report)
}
