//! Wrapped Cauchy innovations and the Möbius Markov chain on the unit circle.

use std::f64::consts::TAU;

use num_complex::Complex64;
use rand::Rng;
use rand_distr::{Cauchy, Distribution};
use serde::{Deserialize, Serialize};

use super::StationaryProcess;
use crate::error::{ensure, Error, Result};
use crate::geometry::{Point, SupportModel};
use crate::rng::SimRng;

/// Steps discarded before recording when no burn-in is given.
pub const DEFAULT_BURN_IN: usize = 1000;

fn default_burn_in() -> usize {
    DEFAULT_BURN_IN
}

fn check_phi(phi: f64) -> Result<()> {
    ensure!(
        (0.0..1.0).contains(&phi),
        "wrapped Cauchy concentration must lie in [0, 1), got {phi}"
    );
    Ok(())
}

/// Wrapped Cauchy sampler: a Cauchy draw of scale `-ln φ` reduced mod 2π.
/// `φ = 0` is the uniform law.
#[derive(Debug, Clone, Copy)]
enum WrappedCauchy {
    Uniform,
    Wrapped(Cauchy<f64>),
}

impl WrappedCauchy {
    fn new(phi: f64) -> Result<Self> {
        check_phi(phi)?;
        if phi == 0.0 {
            return Ok(WrappedCauchy::Uniform);
        }
        let scale = -phi.ln();
        Cauchy::new(0.0, scale)
            .map(WrappedCauchy::Wrapped)
            .map_err(|e| Error::contract(format!("wrapped Cauchy scale {scale}: {e}")))
    }

    fn angle(&self, rng: &mut SimRng) -> f64 {
        match self {
            WrappedCauchy::Uniform => rng.random::<f64>() * TAU,
            WrappedCauchy::Wrapped(c) => c.sample(rng).rem_euclid(TAU),
        }
    }
}

/// Angle in `[0, 2π)` of one wrapped Cauchy draw centred at 0.
pub fn wrapped_cauchy_angle(phi: f64, rng: &mut SimRng) -> Result<f64> {
    Ok(WrappedCauchy::new(phi)?.angle(rng))
}

/// One wrapped Cauchy draw as a point of the unit circle.
pub fn sample_wrapped_cauchy(phi: f64, rng: &mut SimRng) -> Result<Point> {
    let t = wrapped_cauchy_angle(phi, rng)?;
    Point::new(vec![t.cos(), t.sin()])
}

/// `((x + β) / (βx + 1)) · ε`, renormalised to the unit circle.
pub fn mobius_step(x: Complex64, beta: f64, eps: Complex64) -> Result<Complex64> {
    ensure!(
        (x.norm() - 1.0).abs() <= 1e-9,
        "state {x} is not on the unit circle"
    );
    ensure!(
        (eps.norm() - 1.0).abs() <= 1e-9,
        "innovation {eps} is not on the unit circle"
    );
    ensure!(beta.abs() < 1.0, "|beta| must be below 1, got {beta}");
    step_unchecked(x, beta, eps)
}

#[inline]
fn step_unchecked(x: Complex64, beta: f64, eps: Complex64) -> Result<Complex64> {
    let denom = beta * x + 1.0;
    let size = denom.norm();
    if size < 1e-12 {
        return Err(Error::SingularMap(size));
    }
    let z = (x + beta) / denom * eps;
    Ok(z / z.norm())
}

/// Möbius chain `X_n = (X_{n-1} + β)/(β X_{n-1} + 1) · ε_n` with wrapped
/// Cauchy innovations of concentration `φ`.
///
/// `X_0` is uniform on the circle and the first `burn_in` steps are
/// discarded. For `β = 0` the uniform law is invariant, so no burn-in is
/// needed there.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MobiusChainConfig {
    pub beta: f64,
    pub phi: f64,
    #[serde(default = "default_burn_in")]
    pub burn_in: usize,
}

impl MobiusChainConfig {
    /// β = 0, φ = 0: independent uniform points on the circle.
    pub fn uniform() -> Self {
        MobiusChainConfig {
            beta: 0.0,
            phi: 0.0,
            burn_in: 0,
        }
    }
}

impl StationaryProcess for MobiusChainConfig {
    fn dim(&self) -> usize {
        2
    }

    fn validate(&self) -> Result<()> {
        ensure!(
            self.beta.abs() < 1.0 && self.beta.is_finite(),
            "|beta| must be below 1, got {}",
            self.beta
        );
        check_phi(self.phi)
    }

    fn support(&self) -> Option<SupportModel> {
        Some(SupportModel::UnitCircle)
    }

    fn sample_into(&self, n: usize, rng: &mut SimRng, out: &mut Vec<f64>) {
        let law = WrappedCauchy::new(self.phi).expect("validated concentration");
        let mut x = Complex64::from_polar(1.0, rng.random::<f64>() * TAU);
        for step in 0..self.burn_in + n {
            let eps = Complex64::from_polar(1.0, law.angle(rng));
            x = step_unchecked(x, self.beta, eps).expect("|beta| < 1 keeps the map regular");
            if step >= self.burn_in {
                out.extend_from_slice(&[x.re, x.im]);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::rng_from_seed;

    /// ∫ cos θ f_φ(θ) dθ by the composite Simpson rule on the wrapped density.
    fn mean_cos_by_quadrature(phi: f64) -> f64 {
        let density = |t: f64| (1.0 - phi * phi) / (TAU * (1.0 + phi * phi - 2.0 * phi * t.cos()));
        let n = 20_000;
        let h = TAU / n as f64;
        let mut acc = 0.0;
        for k in 0..=n {
            let t = k as f64 * h;
            let w = if k == 0 || k == n {
                1.0
            } else if k % 2 == 1 {
                4.0
            } else {
                2.0
            };
            acc += w * t.cos() * density(t);
        }
        acc * h / 3.0
    }

    #[test]
    fn quadrature_oracle_recovers_concentration() {
        assert!((mean_cos_by_quadrature(0.5) - 0.5).abs() < 1e-9);
    }

    #[test]
    fn wrapped_cauchy_mean_cosine() {
        let mut rng = rng_from_seed(7);
        let n = 100_000;
        let mean: f64 = (0..n)
            .map(|_| wrapped_cauchy_angle(0.5, &mut rng).unwrap().cos())
            .sum::<f64>()
            / n as f64;
        let oracle = mean_cos_by_quadrature(0.5);
        assert!((mean - oracle).abs() < 0.01, "mean cos {mean} vs {oracle}");
    }

    #[test]
    fn uniform_case_passes_chi_square() {
        let mut rng = rng_from_seed(11);
        let bins = 20;
        let n = 100_000;
        let mut counts = vec![0u64; bins];
        for _ in 0..n {
            let t = wrapped_cauchy_angle(0.0, &mut rng).unwrap();
            counts[((t / TAU) * bins as f64) as usize % bins] += 1;
        }
        let expected = n as f64 / bins as f64;
        let chi2: f64 = counts
            .iter()
            .map(|&c| (c as f64 - expected).powi(2) / expected)
            .sum();
        // 99th percentile of chi-square with 19 degrees of freedom.
        assert!(chi2 < 36.191, "chi2 = {chi2}");
    }

    #[test]
    fn draws_are_unit_modulus() {
        let mut rng = rng_from_seed(3);
        for phi in [0.0, 0.2, 0.9, 0.999] {
            for _ in 0..1000 {
                let p = sample_wrapped_cauchy(phi, &mut rng).unwrap();
                assert!((p.coords()[0].hypot(p.coords()[1]) - 1.0).abs() < 1e-12);
            }
        }
        assert!(wrapped_cauchy_angle(1.0, &mut rng).is_err());
        assert!(wrapped_cauchy_angle(-0.1, &mut rng).is_err());
    }

    #[test]
    fn mobius_step_examples() {
        let x = Complex64::from_polar(1.0, 0.7);
        let e = Complex64::from_polar(1.0, -1.9);
        let z = mobius_step(x, 0.0, e).unwrap();
        assert!((z - x * e).norm() < 1e-15);

        let one = Complex64::new(1.0, 0.0);
        assert!((mobius_step(one, 0.5, one).unwrap() - one).norm() < 1e-15);

        let i = Complex64::new(0.0, 1.0);
        let oracle = (i + 0.5) / (0.5 * i + 1.0);
        let z = mobius_step(i, 0.5, one).unwrap();
        assert!((z - oracle / oracle.norm()).norm() < 1e-15);
        assert!((z.norm() - 1.0).abs() < 1e-15);

        assert!(mobius_step(Complex64::new(2.0, 0.0), 0.5, one).is_err());
        assert!(mobius_step(one, 1.0, one).is_err());
    }

    #[test]
    fn chain_stays_on_circle() {
        let cfg = MobiusChainConfig {
            beta: -0.8,
            phi: 0.3,
            burn_in: 100,
        };
        let cloud = cfg.simulate(5000, 1).unwrap();
        for p in cloud.iter() {
            assert!((p[0].hypot(p[1]) - 1.0).abs() < 1e-9);
        }
        let five = MobiusChainConfig {
            beta: 0.0,
            phi: 0.0,
            burn_in: DEFAULT_BURN_IN,
        }
        .simulate(5, 99)
        .unwrap();
        assert_eq!(five.len(), 5);
        assert_eq!(
            five,
            MobiusChainConfig {
                beta: 0.0,
                phi: 0.0,
                burn_in: DEFAULT_BURN_IN
            }
            .simulate(5, 99)
            .unwrap()
        );
        assert!(MobiusChainConfig {
            beta: 1.0,
            phi: 0.0,
            burn_in: 0
        }
        .simulate(5, 0)
        .is_err());
    }
}
