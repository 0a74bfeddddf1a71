//! Bernoulli shifts `X_n = f(ε_n, ε_{n-1}, ...)` and their m-dependent
//! truncations `X_n^(m) = f(ε_n, ..., ε_{n-m}, 0, ...)`.

use rand::Rng;
use serde::{Deserialize, Serialize};

use super::StationaryProcess;
use crate::error::{ensure, Result};
use crate::geometry::{PointCloud, SupportModel};
use crate::rng::{rng_from_seed, SimRng};

/// A bounded functional of an i.i.d. innovation sequence together with the
/// Lipschitz-type constants `c_m` that control its truncations.
///
/// The infinite past is represented by the `depth` most recent innovations;
/// `f` receives them newest first.
pub struct TruncatedApproxConfig<F, E> {
    pub m: usize,
    pub depth: usize,
    pub f: F,
    pub innovation: E,
    /// Value substituted for innovations older than `ε_{n-m}`.
    pub zero: f64,
    /// `c_0, c_1, ...`, non-increasing.
    pub c: Vec<f64>,
    pub f_sup: f64,
}

/// A trajectory and its truncation driven by the same innovations.
#[derive(Debug, Clone, PartialEq)]
pub struct CoupledPair {
    pub full: PointCloud,
    pub truncated: PointCloud,
    /// `max_i |X_i - X_i^(m)|`.
    pub max_gap: f64,
    /// `2 c_m |f|_inf`.
    pub gap_bound: f64,
}

impl<F, E> TruncatedApproxConfig<F, E>
where
    F: Fn(&[f64]) -> f64 + Sync,
    E: Fn(&mut SimRng) -> f64 + Sync,
{
    pub fn c_m(&self) -> f64 {
        self.c[self.m]
    }

    /// `2 c_m |f|_inf`, the sure bound on `|X_i - X_i^(m)|`.
    pub fn gap_bound(&self) -> f64 {
        2.0 * self.c_m() * self.f_sup
    }

    fn innovations(&self, n: usize, rng: &mut SimRng) -> Vec<f64> {
        // Oldest first: ε_{2-depth}, ..., ε_n.
        (0..n + self.depth - 1)
            .map(|_| (self.innovation)(rng))
            .collect()
    }

    fn evaluate(&self, eps: &[f64], n: usize, truncate: bool) -> Vec<f64> {
        let mut args = vec![0.0; self.depth];
        (0..n)
            .map(|i| {
                // Newest innovation for X_{i+1} sits at index i + depth - 1.
                for (j, slot) in args.iter_mut().enumerate() {
                    *slot = if truncate && j > self.m {
                        self.zero
                    } else {
                        eps[i + self.depth - 1 - j]
                    };
                }
                (self.f)(&args)
            })
            .collect()
    }

    /// Simulates `X_1..X_n` and `X_1^(m)..X_n^(m)` from one innovation stream
    /// and checks the sure gap bound `2 c_m |f|_inf` on every index.
    pub fn truncate_approximable(&self, n: usize, seed: u64) -> Result<CoupledPair> {
        ensure!(n >= 1, "trajectory length must be positive");
        self.validate()?;
        let mut rng = rng_from_seed(seed);
        let eps = self.innovations(n, &mut rng);
        let full = self.evaluate(&eps, n, false);
        let truncated = self.evaluate(&eps, n, true);
        let max_gap = full
            .iter()
            .zip(&truncated)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        let gap_bound = self.gap_bound();
        ensure!(
            max_gap <= gap_bound * (1.0 + 1e-12) + 1e-15,
            "observed truncation gap {max_gap} exceeds 2 c_m |f|_inf = {gap_bound}; the supplied c_m is wrong"
        );
        Ok(CoupledPair {
            full: PointCloud::from_flat(1, full)?,
            truncated: PointCloud::from_flat(1, truncated)?,
            max_gap,
            gap_bound,
        })
    }
}

impl<F, E> StationaryProcess for TruncatedApproxConfig<F, E>
where
    F: Fn(&[f64]) -> f64 + Sync,
    E: Fn(&mut SimRng) -> f64 + Sync,
{
    fn dim(&self) -> usize {
        1
    }

    fn validate(&self) -> Result<()> {
        ensure!(
            self.depth > self.m,
            "depth {} must exceed truncation m = {}",
            self.depth,
            self.m
        );
        ensure!(self.m < self.c.len(), "no constant c_m for m = {}", self.m);
        ensure!(
            self.c.iter().all(|c| c.is_finite() && *c >= 0.0),
            "c_m must be finite and nonnegative"
        );
        ensure!(
            self.c.windows(2).all(|w| w[1] <= w[0]),
            "c_m must be non-increasing"
        );
        ensure!(
            self.f_sup.is_finite() && self.f_sup >= 0.0,
            "|f|_inf must be finite"
        );
        Ok(())
    }

    fn support(&self) -> Option<SupportModel> {
        None
    }

    fn sample_into(&self, n: usize, rng: &mut SimRng, out: &mut Vec<f64>) {
        let eps = self.innovations(n, rng);
        out.extend(self.evaluate(&eps, n, false));
    }
}

/// `f(x) = Σ_j 2^{-j} x_{-j}` over uniform innovations on `[-1, 1]`.
///
/// `|f|_inf = 2`, `c_m = 2^{-(m+1)}`, so truncation at depth `m` moves every
/// point by at most `2^{1-m}`. `depth` innovations stand in for the infinite
/// past (64 reproduces the series to double precision).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeometricSeries {
    pub m: usize,
    #[serde(default = "default_depth")]
    pub depth: usize,
}

fn default_depth() -> usize {
    64
}

fn geometric_f(x: &[f64]) -> f64 {
    x.iter()
        .enumerate()
        .map(|(j, v)| v * 0.5f64.powi(j as i32))
        .sum()
}

fn uniform_symmetric(rng: &mut SimRng) -> f64 {
    rng.random_range(-1.0..=1.0)
}

type FnConfig = TruncatedApproxConfig<fn(&[f64]) -> f64, fn(&mut SimRng) -> f64>;

impl GeometricSeries {
    pub fn config(&self) -> FnConfig {
        TruncatedApproxConfig {
            m: self.m,
            depth: self.depth,
            f: geometric_f,
            innovation: uniform_symmetric,
            zero: 0.0,
            c: (0..self.depth.max(self.m + 1))
                .map(|k| 0.5f64.powi(k as i32 + 1))
                .collect(),
            f_sup: 2.0,
        }
    }

    /// Closed-form `2 c_m |f|_inf = 2^{1-m}`.
    pub fn gap_bound(&self) -> f64 {
        2.0f64.powi(1 - self.m as i32)
    }
}

impl StationaryProcess for GeometricSeries {
    fn dim(&self) -> usize {
        1
    }

    fn validate(&self) -> Result<()> {
        self.config().validate()
    }

    fn support(&self) -> Option<SupportModel> {
        Some(SupportModel::Interval { a: -2.0, b: 2.0 })
    }

    fn sample_into(&self, n: usize, rng: &mut SimRng, out: &mut Vec<f64>) {
        self.config().sample_into(n, rng, out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::hausdorff_between_clouds;

    #[test]
    fn zero_constant_gives_identical_clouds() {
        let cfg = TruncatedApproxConfig {
            m: 1,
            depth: 8,
            f: |x: &[f64]| x[0] + 0.5 * x[1],
            innovation: uniform_symmetric,
            zero: 0.0,
            c: vec![0.5, 0.0, 0.0],
            f_sup: 1.5,
        };
        let pair = cfg.truncate_approximable(200, 3).unwrap();
        assert_eq!(pair.full, pair.truncated);
        assert_eq!(pair.gap_bound, 0.0);
    }

    #[test]
    fn geometric_series_gap_matches_series_tail() {
        for m in [0usize, 1, 3, 5, 8] {
            let g = GeometricSeries { m, depth: 64 };
            let pair = g.config().truncate_approximable(2000, m as u64).unwrap();
            // Direct tail: Σ_{j>m} 2^{-j} = 2^{-m}, which is ≤ 2^{1-m}.
            let tail: f64 = (m + 1..64).map(|j| 0.5f64.powi(j as i32)).sum();
            assert!(pair.max_gap <= tail + 1e-15);
            assert!(pair.max_gap <= g.gap_bound());
            assert!((pair.gap_bound - g.gap_bound()).abs() < 1e-15);
            let dh = hausdorff_between_clouds(&pair.full, &pair.truncated).unwrap();
            assert!(dh <= pair.max_gap);
        }
    }

    #[test]
    fn hausdorff_below_epsilon_when_truncation_is_deep_enough() {
        let eps = 0.1;
        for seed in 0..20 {
            let g = GeometricSeries { m: 5, depth: 64 };
            assert!(g.gap_bound() < eps);
            let pair = g.config().truncate_approximable(500, seed).unwrap();
            assert!(hausdorff_between_clouds(&pair.full, &pair.truncated).unwrap() < eps);
        }
    }

    #[test]
    fn wrong_constants_are_caught() {
        let cfg = TruncatedApproxConfig {
            m: 0,
            depth: 16,
            f: geometric_f,
            innovation: uniform_symmetric,
            zero: 0.0,
            c: vec![0.01],
            f_sup: 2.0,
        };
        assert!(cfg.truncate_approximable(500, 1).is_err());
        let increasing = TruncatedApproxConfig {
            c: vec![0.1, 0.2],
            ..cfg
        };
        assert!(increasing.validate().is_err());
    }
}
