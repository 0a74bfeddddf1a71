use serde::{Deserialize, Serialize};

use super::config::{Experiment, ExperimentConfig};
use crate::bounds::BoundReport;
use crate::geometry::{BettiVector, Density, HausdorffBracket};
use crate::stats::{wilson_interval, Z_95};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrialRecord {
    pub n: u64,
    pub trial: u64,
    pub seed: u64,
    pub hausdorff: HausdorffBracket,
    /// Density at the experiment's ε (ε/2 for reconstruction).
    pub density: Density,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub betti: Option<BettiVector>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub conditions_met: Option<bool>,
    pub success: bool,
}

/// One line of `table.csv`.
///
/// `empirical` is the frequency of the failure event: `d_H > ε` for density
/// experiments (undecided brackets count as failures), a Betti mismatch for
/// reconstruction. `bound` is the smallest applicable theoretical upper bound
/// on its probability.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SummaryRow {
    pub n: u64,
    pub bound: Option<f64>,
    pub empirical: f64,
    pub wilson_lo: f64,
    pub wilson_hi: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Aggregate {
    pub n: u64,
    pub trials: u64,
    pub failures: u64,
    /// Brackets that straddle ε.
    pub undecided: u64,
    pub empirical: f64,
    pub wilson_lo: f64,
    pub wilson_hi: f64,
    pub bound: Option<f64>,
    pub bound_vacuous: Option<bool>,
    /// `empirical - 3 · half-width ≤ bound`; absent without a bound.
    pub sound: Option<bool>,
}

impl Aggregate {
    pub(crate) fn new(n: u64, records: &[TrialRecord], bound: Option<f64>) -> Self {
        let trials = records.len() as u64;
        let failures = records.iter().filter(|t| !t.success).count() as u64;
        let undecided = records
            .iter()
            .filter(|t| t.density == Density::Unknown)
            .count() as u64;
        let iv = wilson_interval(failures, trials, Z_95);
        let empirical = failures as f64 / trials as f64;
        Aggregate {
            n,
            trials,
            failures,
            undecided,
            empirical,
            wilson_lo: iv.lo,
            wilson_hi: iv.hi,
            bound,
            bound_vacuous: bound.map(|b| b > 1.0),
            sound: bound.map(|b| empirical - 3.0 * iv.half_width() <= b),
        }
    }

    pub fn row(&self) -> SummaryRow {
        SummaryRow {
            n: self.n,
            bound: self.bound,
            empirical: self.empirical,
            wilson_lo: self.wilson_lo,
            wilson_hi: self.wilson_hi,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// Everything an experiment produced, except wall-clock timings.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentReport {
    pub experiment: Experiment,
    pub config: ExperimentConfig,
    pub aggregates: Vec<Aggregate>,
    /// Tail bounds, for every `n` and every applicable formula.
    pub bounds: Vec<BoundReport>,
    pub threshold: Option<BoundReport>,
    pub checks: Vec<Check>,
    /// All checks passed.
    pub passed: bool,
    pub notes: Vec<String>,
    pub trials: Vec<TrialRecord>,
}

impl ExperimentReport {
    pub fn rows(&self) -> Vec<SummaryRow> {
        self.aggregates.iter().map(Aggregate::row).collect()
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Timings {
    pub experiment: Option<Experiment>,
    pub total_seconds: f64,
    pub worker_threads: usize,
}
