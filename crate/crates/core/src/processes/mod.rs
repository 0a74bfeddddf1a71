//! Seeded samplers for stationary sequences on compact supports.
//!
//! Every sampler is a pure function of its configuration and a 64-bit seed
//! (see [`crate::rng`]); identical inputs give bit-identical trajectories.

mod approximable;
mod autoregressive;
mod circle;
mod dependent;

use serde::{Deserialize, Serialize};

pub use approximable::{CoupledPair, GeometricSeries, TruncatedApproxConfig};
pub use autoregressive::{ArConfig, SreConfig};
pub use circle::{
    mobius_step, sample_wrapped_cauchy, wrapped_cauchy_angle, MobiusChainConfig, DEFAULT_BURN_IN,
};
pub use dependent::{MDependentConfig, MovingAverage};

use crate::error::{ensure, Result};
use crate::geometry::{PointCloud, SupportModel};
use crate::rng::{rng_from_seed, SimRng};

/// A stationary sequence that can be sampled from a seed.
pub trait StationaryProcess: Sync {
    /// Dimension of one observation `X_i`.
    fn dim(&self) -> usize;

    fn validate(&self) -> Result<()>;

    /// The support of `X_1`, or a known superset of it, when available.
    fn support(&self) -> Option<SupportModel>;

    /// Appends `n` consecutive observations to `out`. Configuration is
    /// assumed valid.
    fn sample_into(&self, n: usize, rng: &mut SimRng, out: &mut Vec<f64>);

    /// The trajectory `X_1, ..., X_n` driven by `seed`.
    fn simulate(&self, n: usize, seed: u64) -> Result<PointCloud> {
        ensure!(n >= 1, "trajectory length must be positive");
        self.validate()?;
        let mut rng = rng_from_seed(seed);
        let mut out = Vec::with_capacity(n * self.dim());
        self.sample_into(n, &mut rng, &mut out);
        PointCloud::from_flat(self.dim(), out)
    }
}

/// JSON-serialisable choice among the built-in process families.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum ProcessConfig {
    Mobius(MobiusChainConfig),
    Ar(ArConfig),
    Sre(SreConfig),
    MovingAverage(MovingAverage),
    GeometricSeries(GeometricSeries),
}

impl ProcessConfig {
    fn inner(&self) -> &dyn StationaryProcess {
        match self {
            ProcessConfig::Mobius(p) => p,
            ProcessConfig::Ar(p) => p,
            ProcessConfig::Sre(p) => p,
            ProcessConfig::MovingAverage(p) => p,
            ProcessConfig::GeometricSeries(p) => p,
        }
    }
}

impl StationaryProcess for ProcessConfig {
    fn dim(&self) -> usize {
        self.inner().dim()
    }

    fn validate(&self) -> Result<()> {
        self.inner().validate()
    }

    fn support(&self) -> Option<SupportModel> {
        self.inner().support()
    }

    fn sample_into(&self, n: usize, rng: &mut SimRng, out: &mut Vec<f64>) {
        self.inner().sample_into(n, rng, out)
    }
}
