use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;
use reachkit::harness::{
    run_experiment_with, write_outputs, write_timings, Experiment, ExperimentConfig, Timings,
};
use reachkit::{Error, Execution};

const EXIT_CONFIG: u8 = 1;
const EXIT_IO: u8 = 2;
const EXIT_SCIENTIFIC: u8 = 3;

/// Monte Carlo checks of density bounds and union-of-balls reconstruction.
#[derive(Debug, Parser)]
#[command(name = "reachkit", version)]
struct Cli {
    experiment: Experiment,
    /// Experiment description (JSON).
    #[arg(long)]
    config: PathBuf,
    /// Exit with status 3 when a scientific check fails.
    #[arg(long)]
    strict: bool,
    /// Output directory; overrides `output_dir` from the config.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Run trials on a single thread.
    #[arg(long)]
    sequential: bool,
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Io(_) | Error::Csv(_) => EXIT_IO,
        _ => EXIT_CONFIG,
    }
}

fn run(cli: &Cli) -> Result<bool, Error> {
    let started = Instant::now();
    let text = std::fs::read_to_string(&cli.config)?;
    let config = ExperimentConfig::from_json(&text)?;
    if config.experiment != cli.experiment {
        return Err(Error::Config(format!(
            "{} describes a {:?} experiment but {:?} was requested",
            cli.config.display(),
            config.experiment,
            cli.experiment
        )));
    }
    let exec = if cli.sequential {
        Execution::Sequential
    } else {
        Execution::default()
    };
    let report = run_experiment_with(&config, exec)?;
    let dir = cli
        .out
        .clone()
        .or_else(|| config.output_dir.clone())
        .unwrap_or_else(|| PathBuf::from("out"));
    write_outputs(&report, &dir)?;
    let timings = Timings {
        experiment: Some(config.experiment),
        total_seconds: started.elapsed().as_secs_f64(),
        worker_threads: exec.worker_threads(),
    };
    write_timings(&timings, &dir)?;
    for c in &report.checks {
        println!(
            "{} {}: {}",
            if c.passed { "PASS" } else { "FAIL" },
            c.name,
            c.detail
        );
    }
    for note in &report.notes {
        println!("note: {note}");
    }
    println!("wrote {}", dir.display());
    Ok(report.passed)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_CONFIG } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(passed) if passed || !cli.strict => ExitCode::SUCCESS,
        Ok(_) => ExitCode::from(EXIT_SCIENTIFIC),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
