//! Monte Carlo experiments and their artifacts.
//!
//! An experiment is described by one JSON document ([`ExperimentConfig`]) and
//! produces `report.json`, `table.csv`, `trial_<k>.svg` and `timings.json`.
//! Everything except `timings.json` is a pure function of the configuration.
//! See `docs/config-schema.md` for the field reference.

mod config;
mod output;
mod report;
mod run;
mod svg;
mod theory;

pub use config::{Experiment, ExperimentConfig, MAX_TRAJECTORY};
pub use output::{
    table_csv, write_outputs, write_report_json, write_table_csv, write_timings, write_trial_svgs,
};
pub use report::{Aggregate, Check, ExperimentReport, SummaryRow, Timings, TrialRecord};
pub use run::{
    run_bound_check, run_bound_sweep, run_density_experiment, run_experiment, run_experiment_with,
    run_reconstruction_experiment, trial_seed,
};
pub use svg::render_trial_svg;
pub use theory::{ar1_transition_floor, uniform_noise_floor};
