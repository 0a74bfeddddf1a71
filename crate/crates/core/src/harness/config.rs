use std::path::PathBuf;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::SupportModel;
use crate::processes::{ProcessConfig, StationaryProcess};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
#[value(rename_all = "snake_case")]
pub enum Experiment {
    Density,
    Reconstruction,
    BoundCheck,
    Sweep,
}

/// One experiment, read from a single JSON document.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub experiment: Experiment,
    pub process: ProcessConfig,
    /// Defaults to the support the process declares.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub support: Option<SupportModel>,
    pub epsilon: f64,
    #[serde(default = "default_alpha")]
    pub alpha: f64,
    /// Ball radius; required for reconstruction.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<f64>,
    /// Grid resolution for Hausdorff brackets on supports without a closed form.
    pub delta: f64,
    pub trials: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n_list: Option<Vec<u64>>,
    pub seed: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output_dir: Option<PathBuf>,
    /// Trials drawn as SVG.
    #[serde(default = "default_svg_trials")]
    pub svg_trials: Vec<u64>,
    /// Minimum reconstruction success frequency counted as a pass.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub success_target: Option<f64>,
}

fn default_alpha() -> f64 {
    0.05
}

fn default_svg_trials() -> Vec<u64> {
    vec![0]
}

/// Largest trajectory length an experiment will simulate.
pub const MAX_TRAJECTORY: u64 = 50_000_000;

fn config_err(msg: impl Into<String>) -> Error {
    Error::Config(msg.into())
}

impl ExperimentConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        let config: ExperimentConfig =
            serde_json::from_str(text).map_err(|e| config_err(e.to_string()))?;
        config.validate()?;
        Ok(config)
    }

    /// The configured support, or the one the process declares.
    pub fn resolved_support(&self) -> Result<SupportModel> {
        self.support
            .clone()
            .or_else(|| self.process.support())
            .ok_or_else(|| config_err("the process declares no support; set `support`"))
    }

    pub fn validate(&self) -> Result<()> {
        let positive = |name: &str, x: f64| {
            if x.is_finite() && x > 0.0 {
                Ok(())
            } else {
                Err(config_err(format!(
                    "{name} must be positive and finite, got {x}"
                )))
            }
        };
        self.process
            .validate()
            .map_err(|e| config_err(format!("process: {e}")))?;
        let support = self.resolved_support()?;
        support
            .validate()
            .map_err(|e| config_err(format!("support: {e}")))?;
        if support.dim() != self.process.dim() {
            return Err(config_err(format!(
                "support dimension {} differs from process dimension {}",
                support.dim(),
                self.process.dim()
            )));
        }
        positive("epsilon", self.epsilon)?;
        positive("delta", self.delta)?;
        if !(self.alpha > 0.0 && self.alpha < 1.0) {
            return Err(config_err(format!(
                "alpha must lie in (0, 1), got {}",
                self.alpha
            )));
        }
        if self.trials == 0 {
            return Err(config_err("trials must be at least 1"));
        }
        if let Some(r) = self.r {
            positive("r", r)?;
        }
        if let Some(t) = self.success_target {
            if !(0.0..=1.0).contains(&t) {
                return Err(config_err(format!(
                    "success_target must lie in [0, 1], got {t}"
                )));
            }
        }
        let length = |n: u64| {
            if (1..=MAX_TRAJECTORY).contains(&n) {
                Ok(())
            } else {
                Err(config_err(format!(
                    "trajectory length {n} outside 1..={MAX_TRAJECTORY}"
                )))
            }
        };
        match self.experiment {
            Experiment::Density | Experiment::Reconstruction => {
                length(self.n.ok_or_else(|| config_err("`n` is required"))?)?;
                if self.delta >= self.epsilon {
                    return Err(config_err("delta must be smaller than epsilon"));
                }
            }
            Experiment::Sweep => {
                let list = self.n_list.as_deref().unwrap_or_default();
                if list.is_empty() {
                    return Err(config_err("`n_list` must be nonempty"));
                }
                if !list.windows(2).all(|w| w[0] < w[1]) {
                    return Err(config_err("`n_list` must be strictly ascending"));
                }
                list.iter().try_for_each(|&n| length(n))?;
                if self.delta >= self.epsilon {
                    return Err(config_err("delta must be smaller than epsilon"));
                }
            }
            Experiment::BoundCheck => {
                if self.delta >= self.epsilon {
                    return Err(config_err("delta must be smaller than epsilon"));
                }
            }
        }
        if self.experiment == Experiment::Reconstruction {
            if self.r.is_none() {
                return Err(config_err("`r` is required for reconstruction"));
            }
            if self.delta >= self.epsilon / 2.0 {
                return Err(config_err("reconstruction needs delta < epsilon / 2"));
            }
        }
        Ok(())
    }
}
