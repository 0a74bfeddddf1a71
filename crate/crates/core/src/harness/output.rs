use std::fs;
use std::path::Path;

use super::config::Experiment;
use super::report::{ExperimentReport, Timings};
use super::run::trial_seed;
use super::svg::render_trial_svg;
use crate::error::Result;
use crate::processes::StationaryProcess;

pub fn write_report_json(report: &ExperimentReport, dir: &Path) -> Result<()> {
    let mut text = serde_json::to_string_pretty(report)?;
    text.push('\n');
    fs::write(dir.join("report.json"), text)?;
    Ok(())
}

/// `n,bound,empirical,wilson_lo,wilson_hi` with CRLF line ends and minimal
/// quoting.
pub fn table_csv(report: &ExperimentReport) -> Result<Vec<u8>> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::CRLF)
        .from_writer(Vec::new());
    for row in report.rows() {
        w.serialize(row)?;
    }
    if report.aggregates.is_empty() {
        w.write_record(["n", "bound", "empirical", "wilson_lo", "wilson_hi"])?;
    }
    Ok(w.into_inner().map_err(|e| e.into_error())?)
}

pub fn write_table_csv(report: &ExperimentReport, dir: &Path) -> Result<()> {
    fs::write(dir.join("table.csv"), table_csv(report)?)?;
    Ok(())
}

/// `trial_<k>.svg` for each requested trial of a density or reconstruction
/// experiment. Trajectories are regenerated from their seeds.
pub fn write_trial_svgs(report: &ExperimentReport, dir: &Path) -> Result<Vec<String>> {
    let config = &report.config;
    let r = match report.experiment {
        Experiment::Reconstruction => config.r,
        Experiment::Density => None,
        _ => return Ok(Vec::new()),
    };
    let n = config.n.expect("validated");
    let support = config.resolved_support()?;
    let mut written = Vec::new();
    for &k in config.svg_trials.iter().filter(|&&k| k < config.trials) {
        let cloud = config
            .process
            .simulate(n as usize, trial_seed(config, n, k))?;
        let name = format!("trial_{k}.svg");
        fs::write(dir.join(&name), render_trial_svg(&cloud, &support, r))?;
        written.push(name);
    }
    Ok(written)
}

pub fn write_timings(timings: &Timings, dir: &Path) -> Result<()> {
    let mut text = serde_json::to_string_pretty(timings)?;
    text.push('\n');
    fs::write(dir.join("timings.json"), text)?;
    Ok(())
}

/// Writes `report.json`, `table.csv` and the trial SVGs into `dir`.
pub fn write_outputs(report: &ExperimentReport, dir: &Path) -> Result<()> {
    fs::create_dir_all(dir)?;
    write_report_json(report, dir)?;
    write_table_csv(report, dir)?;
    write_trial_svgs(report, dir)?;
    Ok(())
}
