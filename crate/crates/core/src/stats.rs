//! Binomial confidence intervals used by the estimators and reports.

use serde::{Deserialize, Serialize};
use statrs::distribution::{Beta, ContinuousCDF};

/// Two-sided 95% normal quantile.
pub const Z_95: f64 = 1.959_963_984_540_054;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    pub fn half_width(&self) -> f64 {
        0.5 * (self.hi - self.lo)
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }
}

/// Wilson score interval for `successes` out of `trials` at normal quantile `z`.
pub fn wilson_interval(successes: u64, trials: u64, z: f64) -> Interval {
    assert!(trials > 0, "Wilson interval needs at least one trial");
    assert!(successes <= trials);
    let n = trials as f64;
    let p = successes as f64 / n;
    let z2 = z * z;
    let denom = 1.0 + z2 / n;
    let centre = (p + z2 / (2.0 * n)) / denom;
    let half = z * (p * (1.0 - p) / n + z2 / (4.0 * n * n)).sqrt() / denom;
    Interval {
        lo: if successes == 0 {
            0.0
        } else {
            (centre - half).max(0.0)
        },
        hi: if successes == trials {
            1.0
        } else {
            (centre + half).min(1.0)
        },
    }
}

/// One-sided Clopper-Pearson lower confidence bound at level `confidence`.
pub fn clopper_pearson_lower(successes: u64, trials: u64, confidence: f64) -> f64 {
    assert!(successes <= trials && trials > 0);
    if successes == 0 {
        return 0.0;
    }
    let beta = Beta::new(successes as f64, (trials - successes) as f64 + 1.0)
        .expect("positive shape parameters");
    beta.inverse_cdf(1.0 - confidence).clamp(0.0, 1.0)
}

/// One-sided Clopper-Pearson upper confidence bound at level `confidence`.
pub fn clopper_pearson_upper(successes: u64, trials: u64, confidence: f64) -> f64 {
    assert!(successes <= trials && trials > 0);
    if successes == trials {
        return 1.0;
    }
    let beta = Beta::new(successes as f64 + 1.0, (trials - successes) as f64)
        .expect("positive shape parameters");
    beta.inverse_cdf(confidence).clamp(0.0, 1.0)
}
