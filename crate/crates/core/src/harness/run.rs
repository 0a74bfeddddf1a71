use super::config::{Experiment, ExperimentConfig, MAX_TRAJECTORY};
use super::report::{Aggregate, Check, ExperimentReport, TrialRecord};
use super::theory::{density_threshold, tail_bounds};
use crate::bounds::BoundReport;
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::geometry::{hausdorff_to_support_with, Density, SupportModel};
use crate::processes::{ProcessConfig, StationaryProcess};
use crate::rng::derive_seed;
use crate::topology::reconstruction_verdict_with;

/// Seed of trial `k` at trajectory length `n`. Sweeps use a separate stream
/// per length so that adding a length leaves the others unchanged.
pub fn trial_seed(config: &ExperimentConfig, n: u64, k: u64) -> u64 {
    match config.experiment {
        Experiment::Sweep => derive_seed(derive_seed(config.seed, n), k),
        _ => derive_seed(config.seed, k),
    }
}

struct Context<'a> {
    config: &'a ExperimentConfig,
    support: SupportModel,
    exec: Execution,
}

impl Context<'_> {
    fn process(&self) -> &ProcessConfig {
        &self.config.process
    }

    fn density_trials(&self, n: u64) -> Result<Vec<TrialRecord>> {
        let c = self.config;
        self.exec
            .map(c.trials as usize, |k| {
                let seed = trial_seed(c, n, k as u64);
                let cloud = self.process().simulate(n as usize, seed)?;
                let hausdorff = hausdorff_to_support_with(
                    &cloud,
                    &self.support,
                    c.delta,
                    Execution::Sequential,
                )?;
                let density = hausdorff.density_at(c.epsilon);
                Ok(TrialRecord {
                    n,
                    trial: k as u64,
                    seed,
                    hausdorff,
                    density,
                    betti: None,
                    conditions_met: None,
                    success: density == Density::Dense,
                })
            })
            .into_iter()
            .collect()
    }

    fn reconstruction_trials(&self, n: u64, r: f64) -> Result<Vec<TrialRecord>> {
        let c = self.config;
        self.exec
            .map(c.trials as usize, |k| {
                let seed = trial_seed(c, n, k as u64);
                let cloud = self.process().simulate(n as usize, seed)?;
                let hausdorff = hausdorff_to_support_with(
                    &cloud,
                    &self.support,
                    c.delta,
                    Execution::Sequential,
                )?;
                let v = reconstruction_verdict_with(
                    &cloud,
                    &self.support,
                    c.epsilon,
                    r,
                    c.delta,
                    Execution::Sequential,
                )?;
                Ok(TrialRecord {
                    n,
                    trial: k as u64,
                    seed,
                    hausdorff,
                    density: v.density,
                    betti: Some(v.betti_cloud),
                    conditions_met: Some(v.conditions_met),
                    success: v.success,
                })
            })
            .into_iter()
            .collect()
    }

    fn tails(&self, n: u64, report: &mut Partial) -> Result<Option<f64>> {
        let tails = tail_bounds(self.process(), self.config.epsilon, n)?;
        let best = tails.items.iter().map(|b| b.value).reduce(f64::min);
        report.bounds.extend(tails.items);
        report.note_all(tails.notes);
        Ok(best)
    }

    fn threshold(&self, report: &mut Partial) -> Result<Option<BoundReport>> {
        let t = density_threshold(self.process(), self.config.epsilon, self.config.alpha)?;
        report.note_all(t.notes);
        Ok(t.items.into_iter().next())
    }
}

#[derive(Default)]
struct Partial {
    aggregates: Vec<Aggregate>,
    bounds: Vec<BoundReport>,
    threshold: Option<BoundReport>,
    checks: Vec<Check>,
    notes: Vec<String>,
    trials: Vec<TrialRecord>,
}

impl Partial {
    fn note_all(&mut self, notes: Vec<String>) {
        for n in notes {
            if !self.notes.contains(&n) {
                self.notes.push(n);
            }
        }
    }

    fn check(&mut self, name: &str, passed: bool, detail: String) {
        self.checks.push(Check {
            name: name.to_owned(),
            passed,
            detail,
        });
    }

    fn soundness_checks(&mut self) {
        let rows: Vec<_> = self
            .aggregates
            .iter()
            .filter_map(|a| a.sound.map(|s| (a.n, s, a.empirical, a.bound)))
            .collect();
        for (n, sound, empirical, bound) in rows {
            let detail = format!(
                "n={n}: empirical failure {empirical} vs bound {}",
                bound.unwrap_or(f64::NAN)
            );
            self.check("bound_soundness", sound, detail);
        }
    }

    fn guarantee_check(&mut self, alpha: f64, n0: f64) {
        let Some(a) = self.aggregates.last() else {
            return;
        };
        let trials = a.trials as f64;
        let success = 1.0 - a.empirical;
        let floor = 1.0 - alpha - 3.0 * (alpha / trials).sqrt();
        let detail = format!(
            "n={} >= n0={n0}: P(d_H <= eps) = {success} vs floor {floor}",
            a.n
        );
        self.check("threshold_guarantee", success >= floor, detail);
    }

    fn finish(self, config: &ExperimentConfig) -> ExperimentReport {
        ExperimentReport {
            experiment: config.experiment,
            config: config.clone(),
            passed: self.checks.iter().all(|c| c.passed),
            aggregates: self.aggregates,
            bounds: self.bounds,
            threshold: self.threshold,
            checks: self.checks,
            notes: self.notes,
            trials: self.trials,
        }
    }
}

fn context(
    config: &ExperimentConfig,
    exec: Execution,
    expected: Experiment,
) -> Result<Context<'_>> {
    config.validate()?;
    if config.experiment != expected {
        return Err(Error::Config(format!(
            "config describes a {:?} experiment, not {:?}",
            config.experiment, expected
        )));
    }
    Ok(Context {
        config,
        support: config.resolved_support()?,
        exec,
    })
}

pub fn run_experiment(config: &ExperimentConfig) -> Result<ExperimentReport> {
    run_experiment_with(config, Execution::default())
}

pub fn run_experiment_with(config: &ExperimentConfig, exec: Execution) -> Result<ExperimentReport> {
    match config.experiment {
        Experiment::Density => density(config, exec),
        Experiment::Reconstruction => reconstruction(config, exec),
        Experiment::BoundCheck => bound_check(config, exec),
        Experiment::Sweep => sweep(config, exec),
    }
}

/// Empirical `P(d_H(X_n, M) ≤ ε)` at a single `n`, against the applicable
/// tail bounds and threshold.
pub fn run_density_experiment(config: &ExperimentConfig) -> Result<ExperimentReport> {
    density(config, Execution::default())
}

/// Reconstruction verdicts per trial, with SVG-ready records.
pub fn run_reconstruction_experiment(config: &ExperimentConfig) -> Result<ExperimentReport> {
    reconstruction(config, Execution::default())
}

/// Tail bound against empirical failure frequency across `n_list`.
pub fn run_bound_sweep(config: &ExperimentConfig) -> Result<ExperimentReport> {
    sweep(config, Execution::default())
}

/// Simulation at the computed threshold `⌈n₀⌉`.
pub fn run_bound_check(config: &ExperimentConfig) -> Result<ExperimentReport> {
    bound_check(config, Execution::default())
}

fn density(config: &ExperimentConfig, exec: Execution) -> Result<ExperimentReport> {
    let ctx = context(config, exec, Experiment::Density)?;
    let n = config.n.expect("validated");
    let mut out = Partial::default();
    let bound = ctx.tails(n, &mut out)?;
    out.threshold = ctx.threshold(&mut out)?;
    let trials = ctx.density_trials(n)?;
    out.aggregates.push(Aggregate::new(n, &trials, bound));
    out.trials = trials;
    out.soundness_checks();
    if let Some(n0) = out.threshold.as_ref().map(|t| t.value) {
        if n as f64 >= n0 {
            out.guarantee_check(config.alpha, n0);
        }
    }
    Ok(out.finish(config))
}

fn sweep(config: &ExperimentConfig, exec: Execution) -> Result<ExperimentReport> {
    let ctx = context(config, exec, Experiment::Sweep)?;
    let mut out = Partial::default();
    out.threshold = ctx.threshold(&mut out)?;
    for &n in config.n_list.as_deref().expect("validated") {
        let bound = ctx.tails(n, &mut out)?;
        let trials = ctx.density_trials(n)?;
        out.aggregates.push(Aggregate::new(n, &trials, bound));
        out.trials.extend(trials);
    }
    out.soundness_checks();
    let bounds: Vec<f64> = out.aggregates.iter().filter_map(|a| a.bound).collect();
    if bounds.len() == out.aggregates.len() && bounds.len() > 1 {
        let monotone = bounds.windows(2).all(|w| w[1] <= w[0]);
        out.check(
            "bound_monotone",
            monotone,
            format!("bounds across n_list: {bounds:?}"),
        );
    }
    Ok(out.finish(config))
}

fn bound_check(config: &ExperimentConfig, exec: Execution) -> Result<ExperimentReport> {
    let ctx = context(config, exec, Experiment::BoundCheck)?;
    let mut out = Partial::default();
    let Some(threshold) = ctx.threshold(&mut out)? else {
        return Err(Error::Config(format!(
            "no sample-size threshold is available for this process: {}",
            out.notes.join("; ")
        )));
    };
    let n0 = threshold.value;
    let n = threshold.sample_size().expect("threshold");
    out.threshold = Some(threshold);
    if n > MAX_TRAJECTORY {
        out.notes.push(format!(
            "threshold n0 = {n0} exceeds the simulation cap {MAX_TRAJECTORY}; not simulated"
        ));
        return Ok(out.finish(config));
    }
    let bound = ctx.tails(n, &mut out)?;
    let trials = ctx.density_trials(n)?;
    out.aggregates.push(Aggregate::new(n, &trials, bound));
    out.trials = trials;
    out.soundness_checks();
    out.guarantee_check(config.alpha, n0);
    Ok(out.finish(config))
}

fn reconstruction(config: &ExperimentConfig, exec: Execution) -> Result<ExperimentReport> {
    let ctx = context(config, exec, Experiment::Reconstruction)?;
    let n = config.n.expect("validated");
    let r = config.r.expect("validated");
    let mut out = Partial::default();
    let trials = ctx.reconstruction_trials(n, r)?;
    out.aggregates.push(Aggregate::new(n, &trials, None));
    let guaranteed: Vec<_> = trials
        .iter()
        .filter(|t| t.conditions_met == Some(true) && t.density == Density::Dense)
        .collect();
    let broken = guaranteed.iter().filter(|t| !t.success).count();
    out.check(
        "guarantee_implies_success",
        broken == 0,
        format!(
            "{} of {} guaranteed trials failed to reconstruct",
            broken,
            guaranteed.len()
        ),
    );
    if let Some(target) = config.success_target {
        let freq = 1.0 - out.aggregates[0].empirical;
        out.check(
            "success_target",
            freq >= target,
            format!("success frequency {freq} vs target {target}"),
        );
    }
    out.trials = trials;
    Ok(out.finish(config))
}
