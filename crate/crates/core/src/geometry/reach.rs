use serde::{Deserialize, Serialize};

use crate::error::{ensure, Error, Result};

/// A reach `tau` together with an offset radius `offset_r < tau`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ReachInfo {
    pub tau: f64,
    pub offset_r: f64,
}

/// Reach of the `r`-offset of a set with reach `tau`: `tau - r`.
pub fn offset_reach(info: ReachInfo) -> Result<f64> {
    let ReachInfo { tau, offset_r } = info;
    ensure!(
        tau > 0.0 && !tau.is_nan(),
        "reach must be positive, got {tau}"
    );
    ensure!(
        offset_r >= 0.0 && offset_r.is_finite(),
        "offset radius must be nonnegative, got {offset_r}"
    );
    ensure!(
        offset_r < tau,
        "offset radius {offset_r} must be below the reach {tau}"
    );
    Ok(tau - offset_r)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RadiusWindow {
    /// `0 < ε < τ/2` and `ε < r < τ/2`.
    pub in_window: bool,
    /// `ε/2 + r²/τ < r`.
    pub strict_inequality: bool,
}

/// Checks the admissible (ε, r) window for union-of-balls reconstruction of a
/// set with reach `tau`. An infinite reach is accepted.
pub fn radius_window_check(epsilon: f64, r: f64, tau: f64) -> Result<RadiusWindow> {
    ensure!(
        epsilon.is_finite() && epsilon > 0.0,
        "epsilon must be positive and finite, got {epsilon}"
    );
    ensure!(
        r.is_finite() && r > 0.0,
        "radius must be positive and finite, got {r}"
    );
    ensure!(
        tau > 0.0 && !tau.is_nan(),
        "reach must be positive, got {tau}"
    );
    let half = tau / 2.0;
    Ok(RadiusWindow {
        in_window: epsilon < half && epsilon < r && r < half,
        strict_inequality: epsilon / 2.0 + r * r / tau < r,
    })
}

/// Upper bound `1 / ρ` on the ε-covering number of a block support, given
/// `ρ = inf_x P(|Y - x| <= ε/2)`.
pub fn covering_number_bound(rho_half: f64) -> Result<f64> {
    if rho_half.is_nan() || rho_half <= 0.0 {
        return Err(Error::VacuousBound(format!(
            "covering bound needs a positive concentration, got {rho_half}"
        )));
    }
    ensure!(
        rho_half <= 1.0,
        "concentration is a probability, got {rho_half}"
    );
    Ok(1.0 / rho_half)
}
