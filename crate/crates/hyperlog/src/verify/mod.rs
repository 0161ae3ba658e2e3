//! Theorem-keyed verification suites.
//!
//! Each check sweeps a claim over parameter grids and produces a
//! [`VerificationReport`]: worst margin, located violations, and a
//! `Pass`/`Fail` status meaning *the numeric verdict matches the claim* —
//! including negative claims, where e.g. an expected non-concavity verdict
//! with a located witness counts as `Pass`. Question-backed sweeps always
//! report `Exploratory` and never gate.

mod checks;
mod sweeps;

pub use sweeps::{run_sweep, sweep_ids, SweepOutput};

use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;
use serde_json::Value;

use crate::analysis::GridSpec;
use crate::error::Error;
use crate::Result;

/// Default absolute tolerance on inequality margins.
pub const DEFAULT_TOL: f64 = 1e-9;

/// At most this many violations are stored per report; `n_violations` always
/// carries the full count.
pub const VIOLATION_CAP: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Status {
    Pass,
    Fail,
    Exploratory,
}

/// A located inequality violation: `lhs ≤ rhs` failed by `gap = lhs − rhs`
/// at the given point coordinates.
#[derive(Debug, Clone, Serialize)]
pub struct Violation {
    pub point: Vec<f64>,
    pub lhs: f64,
    pub rhs: f64,
    pub gap: f64,
}

/// One verification run. Field order is the serialization order.
///
/// `worst_margin` is the smallest slack-discounted margin `rhs − lhs` seen,
/// so `Pass` implies `worst_margin ≥ −tolerance` even where individual
/// points ran under a widened tolerance (near-1 evaluations).
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub theorem_id: String,
    pub params: BTreeMap<String, Value>,
    pub grids: BTreeMap<String, GridSpec>,
    pub tolerance: f64,
    pub status: Status,
    pub worst_margin: f64,
    pub n_violations: usize,
    pub violations: Vec<Violation>,
    pub runtime_ms: u64,
}

/// Flag and config-file overrides for a check run.
#[derive(Debug, Clone, Default)]
pub struct CheckConfig {
    pub c: Option<f64>,
    pub d: Option<f64>,
    pub a: Option<f64>,
    pub b: Option<f64>,
    pub p: Option<f64>,
    pub grid_n: Option<usize>,
    pub tol: Option<f64>,
}

impl CheckConfig {
    pub(crate) fn tol_or(&self, default: f64) -> f64 {
        self.tol.unwrap_or(default)
    }

    pub(crate) fn n_or(&self, default: usize) -> usize {
        self.grid_n.unwrap_or(default).max(8)
    }
}

/// Margin accumulator shared by the checks.
pub(crate) struct Recorder {
    base_tol: f64,
    worst: f64,
    n_violations: usize,
    violations: Vec<Violation>,
}

impl Recorder {
    pub(crate) fn new(base_tol: f64) -> Self {
        Recorder {
            base_tol,
            worst: f64::INFINITY,
            n_violations: 0,
            violations: Vec::new(),
        }
    }

    /// Record the claim `lhs ≤ rhs` with the base tolerance.
    pub(crate) fn record(&mut self, point: &[f64], lhs: f64, rhs: f64) {
        let tol = self.base_tol;
        self.record_tol(point, lhs, rhs, tol);
    }

    /// Record `lhs ≤ rhs` with a per-point tolerance (widened near `x = 1`).
    /// The margin is discounted by the widening so `worst_margin` stays
    /// comparable with the base tolerance.
    pub(crate) fn record_tol(&mut self, point: &[f64], lhs: f64, rhs: f64, tol: f64) {
        let margin = rhs - lhs;
        let discounted = margin + (tol - self.base_tol);
        if discounted < self.worst {
            self.worst = discounted;
        }
        // NaN margins count as violations.
        if margin.is_nan() || margin < -tol {
            self.n_violations += 1;
            if self.violations.len() < VIOLATION_CAP {
                self.violations.push(Violation {
                    point: point.to_vec(),
                    lhs,
                    rhs,
                    gap: lhs - rhs,
                });
            }
        }
    }

    /// Record a verdict-style result carrying its own margin (used by
    /// monotonicity/concavity matches whose slack handling already happened).
    pub(crate) fn record_verdict(&mut self, point: &[f64], ok: bool, margin: f64) {
        if margin < self.worst {
            self.worst = margin;
        }
        if !ok {
            self.n_violations += 1;
            if self.violations.len() < VIOLATION_CAP {
                self.violations.push(Violation {
                    point: point.to_vec(),
                    lhs: -margin,
                    rhs: 0.0,
                    gap: -margin,
                });
            }
        }
    }

    pub(crate) fn merge(&mut self, other: Recorder) {
        if other.worst < self.worst {
            self.worst = other.worst;
        }
        self.n_violations += other.n_violations;
        for v in other.violations {
            if self.violations.len() < VIOLATION_CAP {
                self.violations.push(v);
            }
        }
    }

    pub(crate) fn worst_margin(&self) -> f64 {
        if self.worst.is_finite() {
            self.worst
        } else {
            0.0
        }
    }

    pub(crate) fn status(&self) -> Status {
        if self.n_violations == 0 {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

/// Incremental report assembly; measures runtime from construction.
pub(crate) struct ReportBuilder {
    theorem_id: String,
    params: BTreeMap<String, Value>,
    grids: BTreeMap<String, GridSpec>,
    tolerance: f64,
    started: Instant,
}

impl ReportBuilder {
    pub(crate) fn new(theorem_id: &str, tolerance: f64) -> Self {
        ReportBuilder {
            theorem_id: theorem_id.to_string(),
            params: BTreeMap::new(),
            grids: BTreeMap::new(),
            tolerance,
            started: Instant::now(),
        }
    }

    pub(crate) fn param(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.params.insert(key.to_string(), value.into());
        self
    }

    pub(crate) fn grid(&mut self, name: &str, grid: GridSpec) -> &mut Self {
        self.grids.insert(name.to_string(), grid);
        self
    }

    pub(crate) fn finish(self, rec: Recorder) -> VerificationReport {
        let status = rec.status();
        self.finish_with_status(rec, status)
    }

    pub(crate) fn finish_exploratory(self, rec: Recorder) -> VerificationReport {
        self.finish_with_status(rec, Status::Exploratory)
    }

    fn finish_with_status(self, rec: Recorder, status: Status) -> VerificationReport {
        VerificationReport {
            theorem_id: self.theorem_id,
            params: self.params,
            grids: self.grids,
            tolerance: self.tolerance,
            status,
            worst_margin: rec.worst_margin(),
            n_violations: rec.n_violations,
            violations: rec.violations,
            runtime_ms: self.started.elapsed().as_millis() as u64,
        }
    }
}

/// All check identifiers in registry order.
pub fn check_ids() -> &'static [&'static str] {
    &[
        "bern",
        "kmvthm",
        "ssthm2",
        "ssthm",
        "2ndmain",
        "1.57-1",
        "1.57-2",
        "1.57-3",
        "1.57-4",
        "1.57-5",
        "1.57-6",
        "1.57-7",
        "pvlem",
        "kuLemma",
        "mylemma1",
        "mylemma2",
        "ssthm5",
        "myrmk43",
        "ssthm55",
        "my49",
        "logconlemma",
        "logcor",
        "logcor1",
        "T-bound",
        "ssthm7",
        "myq3",
        "my44",
        "my46",
    ]
}

/// Run one theorem-keyed check. `ssthm4` is accepted as an alias of
/// `2ndmain` (same claim).
pub fn run_check(id: &str, cfg: &CheckConfig) -> Result<VerificationReport> {
    match id {
        "bern" => checks::check_bern(cfg),
        "kmvthm" => checks::check_kmvthm(cfg),
        "ssthm2" => checks::check_ssthm2(cfg),
        "ssthm" => checks::check_ssthm(cfg),
        "2ndmain" | "ssthm4" => checks::check_2ndmain(cfg),
        "1.57-1" => checks::check_157(1, cfg),
        "1.57-2" => checks::check_157(2, cfg),
        "1.57-3" => checks::check_157(3, cfg),
        "1.57-4" => checks::check_157(4, cfg),
        "1.57-5" => checks::check_157(5, cfg),
        "1.57-6" => checks::check_157(6, cfg),
        "1.57-7" => checks::check_157(7, cfg),
        "pvlem" => checks::check_pvlem(cfg),
        "kuLemma" => checks::check_kulemma(cfg),
        "mylemma1" => checks::check_mylemma1(cfg),
        "mylemma2" => checks::check_mylemma2(cfg),
        "ssthm5" => checks::check_ssthm5(cfg),
        "myrmk43" => checks::check_myrmk43(cfg),
        "ssthm55" => checks::check_ssthm55(cfg),
        "my49" => checks::check_my49(cfg),
        "logconlemma" => checks::check_logconlemma(cfg),
        "logcor" => checks::check_logcor(cfg),
        "logcor1" => checks::check_logcor1(cfg),
        "T-bound" => checks::check_tbound(cfg),
        "ssthm7" => checks::check_ssthm7(cfg),
        "myq3" => checks::check_myq3(cfg),
        "my44" => checks::check_my44(cfg),
        "my46" => checks::check_my46(cfg),
        other => Err(Error::UnknownId(other.to_string())),
    }
}

/// Run the full registry in order.
pub fn run_all(cfg: &CheckConfig) -> Result<Vec<VerificationReport>> {
    check_ids().iter().map(|id| run_check(id, cfg)).collect()
}
