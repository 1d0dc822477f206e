//! Verification of identities, each reported as a [`CheckResult`].
//!
//! A check passes only if its residual is exactly zero. Checks whose inputs
//! exceed the term budget are reported as skipped with the reason.

mod algebra;
mod checks;
mod lemmas;
mod series;
mod suites;

pub use algebra::{extract_remainder, LinearRelation};
pub use checks::*;
pub use lemmas::*;
pub use series::{ci_series, free_module_series, hilbert_check, rank_formula_check, PowerSeries};
pub use suites::{run_suite, SuiteOptions, SUITES};

use std::fmt;
use std::time::Instant;

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub status: Status,
    /// SHA-256 of the canonical text of the nonzero residual, for failures.
    pub witness: Option<String>,
    pub detail: String,
    pub millis: u128,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// What a check body concludes.
pub enum Outcome {
    Pass(String),
    /// Failure with the canonical text of the residual.
    Fail { detail: String, residual: String },
    Skip(String),
}

impl Outcome {
    pub fn pass(detail: impl Into<String>) -> Self {
        Outcome::Pass(detail.into())
    }

    pub fn fail(detail: impl Into<String>, residual: impl Into<String>) -> Self {
        Outcome::Fail { detail: detail.into(), residual: residual.into() }
    }

    /// Pass if `residual` is empty text, fail otherwise.
    pub fn from_residual(detail: impl Into<String>, residual: Option<String>) -> Self {
        match residual {
            None => Outcome::Pass(detail.into()),
            Some(r) => Outcome::fail(detail, r),
        }
    }
}

pub fn digest(text: &str) -> String {
    hex::encode(Sha256::digest(text.as_bytes()))
}

/// Runs a check body, timing it and converting errors: budget overruns
/// become skips, everything else a failure.
pub fn run_check(name: impl Into<String>, body: impl FnOnce() -> Result<Outcome>) -> CheckResult {
    let name = name.into();
    let start = Instant::now();
    let outcome = body();
    let millis = start.elapsed().as_millis();
    let (status, witness, detail) = match outcome {
        Ok(Outcome::Pass(d)) => (Status::Pass, None, d),
        Ok(Outcome::Skip(d)) => (Status::Skipped, None, d),
        Ok(Outcome::Fail { detail, residual }) => {
            let residual = if residual.is_empty() { detail.clone() } else { residual };
            (Status::Fail, Some(digest(&residual)), detail)
        }
        Err(e @ (Error::BudgetExceeded { .. } | Error::CapExceeded(_))) => (Status::Skipped, None, format!("skipped: {e}")),
        Err(e) => (Status::Fail, Some(digest(&e.to_string())), format!("error: {e}")),
    };
    CheckResult { name, status, witness, detail, millis }
}
