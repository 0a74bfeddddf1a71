//! Linear recursions `X_{n+1} = A_{n+1} X_n + B_{n+1}` with surely bounded
//! coefficients, so that the stationary law has compact support.

use rand::Rng;
use serde::{Deserialize, Serialize};

use super::circle::DEFAULT_BURN_IN;
use super::StationaryProcess;
use crate::error::{ensure, Result};
use crate::geometry::SupportModel;
use crate::rng::SimRng;

fn default_burn_in() -> usize {
    DEFAULT_BURN_IN
}

/// Scalar AR(k) `Y_n = α_1 Y_{n-1} + ... + α_k Y_{n-k} + B_n` with
/// `B_n` uniform on `[-c, c]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArConfig {
    pub coefficients: Vec<f64>,
    pub noise_half_width: f64,
    #[serde(default = "default_burn_in")]
    pub burn_in: usize,
}

impl ArConfig {
    pub fn ar1(rho: f64, noise_half_width: f64) -> Self {
        ArConfig {
            coefficients: vec![rho],
            noise_half_width,
            burn_in: DEFAULT_BURN_IN,
        }
    }

    /// `c / (1 - Σ|α_i|)` when the coefficients are absolutely summable below 1.
    ///
    /// For AR(1) this is exactly the stationary support `[-c/(1-|ρ|), c/(1-|ρ|)]`.
    pub fn support_radius(&self) -> Option<f64> {
        let s: f64 = self.coefficients.iter().map(|a| a.abs()).sum();
        (s < 1.0).then(|| self.noise_half_width / (1.0 - s))
    }
}

impl StationaryProcess for ArConfig {
    fn dim(&self) -> usize {
        1
    }

    fn validate(&self) -> Result<()> {
        let a = &self.coefficients;
        ensure!(!a.is_empty(), "AR order must be at least 1");
        ensure!(
            a.iter().all(|x| x.is_finite()),
            "AR coefficients must be finite"
        );
        ensure!(
            self.noise_half_width.is_finite() && self.noise_half_width > 0.0,
            "noise half-width must be positive, got {}",
            self.noise_half_width
        );
        match a.len() {
            1 => ensure!(a[0].abs() < 1.0, "AR(1) needs |rho| < 1, got {}", a[0]),
            2 => ensure!(
                a[1].abs() < 1.0 && a[1] + a[0].abs() < 1.0,
                "AR(2) needs |a2| < 1 and a2 + |a1| < 1, got {a:?}"
            ),
            // Sufficient condition for higher orders.
            _ => ensure!(
                a.iter().map(|x| x.abs()).sum::<f64>() < 1.0,
                "AR(k>2) needs sum |a_i| < 1, got {a:?}"
            ),
        }
        Ok(())
    }

    fn support(&self) -> Option<SupportModel> {
        self.support_radius()
            .map(|r| SupportModel::Interval { a: -r, b: r })
    }

    fn sample_into(&self, n: usize, rng: &mut SimRng, out: &mut Vec<f64>) {
        let c = self.noise_half_width;
        let k = self.coefficients.len();
        // history[0] is the most recent value.
        let mut history = vec![0.0; k];
        if k == 1 {
            let r = self.support_radius().expect("validated AR(1)");
            history[0] = rng.random_range(-r..=r);
        }
        for step in 0..self.burn_in + n {
            let noise = rng.random_range(-c..=c);
            let y = self
                .coefficients
                .iter()
                .zip(&history)
                .map(|(a, y)| a * y)
                .sum::<f64>()
                + noise;
            history.rotate_right(1);
            history[0] = y;
            if step >= self.burn_in {
                out.push(y);
            }
        }
    }
}

/// Stochastic recurrence in `R^d` with `|A| <= ρ̄ < 1` and `|B| <= c` surely.
///
/// `A` has i.i.d. uniform entries rescaled to Frobenius norm `ρ̄` (which bounds
/// the operator norm); `B` is uniform in the ball of radius `c`. The state
/// stays in the ball of radius `c / (1 - ρ̄)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SreConfig {
    pub dim: usize,
    pub rho_bar: f64,
    pub noise_radius: f64,
    #[serde(default = "default_burn_in")]
    pub burn_in: usize,
}

impl SreConfig {
    pub fn support_radius(&self) -> f64 {
        self.noise_radius / (1.0 - self.rho_bar)
    }
}

fn uniform_in_ball(d: usize, radius: f64, rng: &mut SimRng, out: &mut [f64]) {
    loop {
        for x in out.iter_mut() {
            *x = rng.random_range(-1.0..=1.0);
        }
        let s: f64 = out.iter().map(|x| x * x).sum();
        if s <= 1.0 {
            break;
        }
    }
    debug_assert_eq!(out.len(), d);
    for x in out.iter_mut() {
        *x *= radius;
    }
}

impl StationaryProcess for SreConfig {
    fn dim(&self) -> usize {
        self.dim
    }

    fn validate(&self) -> Result<()> {
        ensure!(self.dim >= 1, "SRE dimension must be at least 1");
        ensure!(
            (0.0..1.0).contains(&self.rho_bar),
            "operator-norm bound must lie in [0, 1), got {}",
            self.rho_bar
        );
        ensure!(
            self.noise_radius.is_finite() && self.noise_radius > 0.0,
            "noise radius must be positive, got {}",
            self.noise_radius
        );
        Ok(())
    }

    fn support(&self) -> Option<SupportModel> {
        Some(SupportModel::Ball {
            center: vec![0.0; self.dim],
            radius: self.support_radius(),
        })
    }

    fn sample_into(&self, n: usize, rng: &mut SimRng, out: &mut Vec<f64>) {
        let d = self.dim;
        let mut x = vec![0.0; d];
        uniform_in_ball(d, self.support_radius(), rng, &mut x);
        let mut a = vec![0.0; d * d];
        let mut b = vec![0.0; d];
        let mut next = vec![0.0; d];
        for step in 0..self.burn_in + n {
            for v in a.iter_mut() {
                *v = rng.random_range(-1.0..=1.0);
            }
            let frob = a.iter().map(|v| v * v).sum::<f64>().sqrt();
            let scale = if frob > 0.0 { self.rho_bar / frob } else { 0.0 };
            uniform_in_ball(d, self.noise_radius, rng, &mut b);
            for i in 0..d {
                next[i] = scale
                    * a[i * d..(i + 1) * d]
                        .iter()
                        .zip(&x)
                        .map(|(p, q)| p * q)
                        .sum::<f64>()
                    + b[i];
            }
            std::mem::swap(&mut x, &mut next);
            if step >= self.burn_in {
                out.extend_from_slice(&x);
            }
        }
    }
}
