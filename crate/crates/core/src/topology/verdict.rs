use serde::{Deserialize, Serialize};

use super::complex::cech_complex_with;
use super::homology::betti_numbers;
use crate::error::{ensure, Result};
use crate::exec::Execution;
use crate::geometry::{
    epsilon_density_check, radius_window_check, BettiVector, Density, PointCloud, SupportModel,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReconstructionVerdict {
    /// `ε ∈ (0, τ/2)` and `r ∈ (ε, τ/2)`.
    pub conditions_met: bool,
    /// Whether the cloud is `ε/2`-dense in the support.
    pub density: Density,
    pub betti_cloud: BettiVector,
    pub betti_support: BettiVector,
    pub success: bool,
}

impl ReconstructionVerdict {
    /// Conditions and certified density that guarantee a homotopy
    /// equivalence between the union of balls and the support.
    pub fn guaranteed(&self) -> bool {
        self.conditions_met && self.density == Density::Dense
    }
}

/// Compares the homology of the union of `r`-balls around `cloud` with that
/// of `support`.
pub fn reconstruction_verdict(
    cloud: &PointCloud,
    support: &SupportModel,
    epsilon: f64,
    r: f64,
    delta: f64,
) -> Result<ReconstructionVerdict> {
    reconstruction_verdict_with(cloud, support, epsilon, r, delta, Execution::default())
}

pub fn reconstruction_verdict_with(
    cloud: &PointCloud,
    support: &SupportModel,
    epsilon: f64,
    r: f64,
    delta: f64,
    exec: Execution,
) -> Result<ReconstructionVerdict> {
    ensure!(
        delta > 0.0 && delta < epsilon / 2.0,
        "grid resolution {delta} must lie in (0, epsilon / 2)"
    );
    let window = radius_window_check(epsilon, r, support.reach())?;
    let density = epsilon_density_check(cloud, support, epsilon / 2.0, delta)?;
    let betti_cloud = betti_numbers(&cech_complex_with(cloud, r, exec)?)?;
    let betti_support = support.betti();
    Ok(ReconstructionVerdict {
        conditions_met: window.in_window,
        density,
        betti_cloud,
        betti_support,
        success: betti_cloud == betti_support,
    })
}
