//! Which closed-form bounds apply to which process family.

use serde_json::json;

use crate::bounds::{
    approximable_threshold, blocking_tail_bound, mobius_kappa, moving_average_concentration,
    tail_m_dependent, tail_markov, threshold_m_dependent, threshold_markov, threshold_mobius,
    uniform_circle_concentration, uniform_cube_image_concentration, BlockingSchedule, BoundReport,
    DependenceInputs, TruncationInputs, MOBIUS_V,
};
use crate::error::{Error, Result};
use crate::processes::{ArConfig, GeometricSeries, ProcessConfig};

/// Infimum over `x, y` in the stationary support `[-L, L]` of the AR(1)
/// transition density `f_B(y - ρx)` for noise uniform on `[-c, c]`.
///
/// `y - ρx` ranges over `[-(1+|ρ|)L, (1+|ρ|)L]`, which stays inside `[-c, c]`
/// only when `ρ = 0`.
pub fn ar1_transition_floor(rho: f64, c: f64) -> f64 {
    let support = c / (1.0 - rho.abs());
    if (1.0 + rho.abs()) * support <= c {
        1.0 / (2.0 * c)
    } else {
        0.0
    }
}

/// Infimum of the uniform noise density itself, `1 / 2c`. This is a floor on
/// the transition density only when `ρ = 0`.
pub fn uniform_noise_floor(c: f64) -> f64 {
    1.0 / (2.0 * c)
}

/// Applicable tail bounds, or the reason a family has none.
pub(crate) struct Applicable<T> {
    pub items: Vec<T>,
    pub notes: Vec<String>,
}

impl<T> Applicable<T> {
    fn new() -> Self {
        Applicable {
            items: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn push(&mut self, r: Result<T>, what: &str) -> Result<()> {
        match r {
            Ok(v) => self.items.push(v),
            Err(Error::VacuousBound(m) | Error::DegenerateConcentration(m)) => {
                self.notes.push(format!("{what}: not applicable ({m})"))
            }
            Err(Error::TruncationDepthInsufficient { m, gap, epsilon }) => self.notes.push(
                format!("{what}: truncation depth {m} too small (gap {gap} >= epsilon {epsilon})"),
            ),
            Err(e) => return Err(e),
        }
        Ok(())
    }
}

fn markov_tail(
    b: f64,
    kappa: f64,
    v_d: f64,
    epsilon: f64,
    n: u64,
    dep: DependenceInputs,
) -> Result<BoundReport> {
    let value = tail_markov(b, kappa, v_d, epsilon, n)?;
    BoundReport::tail(
        "markov_tail",
        value,
        crate::bounds::echo_inputs([
            ("b", json!(b)),
            ("kappa", json!(kappa)),
            ("v_d", json!(v_d)),
            ("epsilon", json!(epsilon)),
            ("n", json!(n)),
            ("dependence", serde_json::to_value(dep)?),
        ]),
    )
}

fn ma_kappas(m: usize, epsilon: f64) -> Result<(f64, f64)> {
    Ok((
        moving_average_concentration(m, m + 1, epsilon / 2.0)?,
        moving_average_concentration(m, m + 1, epsilon / 4.0)?,
    ))
}

fn ar1(ar: &ArConfig) -> Option<(f64, f64)> {
    match ar.coefficients.as_slice() {
        [rho] => Some((*rho, ar.noise_half_width)),
        _ => None,
    }
}

/// Upper bounds on `P(d_H(X_n, M) > ε)` available for `process`.
pub(crate) fn tail_bounds(
    process: &ProcessConfig,
    epsilon: f64,
    n: u64,
) -> Result<Applicable<BoundReport>> {
    let mut out = Applicable::new();
    match process {
        ProcessConfig::Mobius(p) => {
            let dep = DependenceInputs::Mobius {
                phi: p.phi,
                v: MOBIUS_V,
            };
            out.push(
                markov_tail(1.0, mobius_kappa(p.phi), MOBIUS_V, epsilon, n, dep),
                "markov_tail",
            )?;
            if p.beta == 0.0 && p.phi == 0.0 {
                let schedule = BlockingSchedule::singletons(n)?;
                let (rho_half, rho_quarter) = (
                    uniform_circle_concentration(epsilon / 2.0),
                    uniform_circle_concentration(epsilon / 4.0),
                );
                let r = blocking_tail_bound(schedule, rho_half, rho_quarter, 0.0).and_then(|v| {
                    BoundReport::tail(
                        "blocking_tail",
                        v,
                        crate::bounds::echo_inputs([
                            ("epsilon", json!(epsilon)),
                            ("schedule", serde_json::to_value(schedule)?),
                            ("rho_half", json!(rho_half)),
                            ("rho_quarter", json!(rho_quarter)),
                            ("mixing_term", json!(0.0)),
                            (
                                "dependence",
                                serde_json::to_value(DependenceInputs::Independent)?,
                            ),
                        ]),
                    )
                });
                out.push(r, "blocking_tail")?;
            }
        }
        ProcessConfig::MovingAverage(p) => {
            let (kh, kq) = ma_kappas(p.m, epsilon)?;
            let r = tail_m_dependent(n, p.m as u64, kh, kq).and_then(|v| {
                BoundReport::tail(
                    "m_dependent_tail",
                    v,
                    crate::bounds::echo_inputs([
                        ("epsilon", json!(epsilon)),
                        ("n", json!(n)),
                        ("kappa_half", json!(kh)),
                        ("kappa_quarter", json!(kq)),
                        (
                            "dependence",
                            serde_json::to_value(DependenceInputs::MDependent { m: p.m as u64 })?,
                        ),
                    ]),
                )
            });
            out.push(r, "m_dependent_tail")?;
        }
        ProcessConfig::Ar(p) => match ar1(p) {
            Some((rho, c)) => {
                let kappa = ar1_transition_floor(rho, c);
                let dep = DependenceInputs::Markov {
                    b: 1.0,
                    kappa,
                    v_d: 1.0,
                    nu_mass: 2.0 * c / (1.0 - rho.abs()),
                };
                out.push(markov_tail(1.0, kappa, 1.0, epsilon, n, dep), "markov_tail")?;
            }
            None => out
                .notes
                .push("no closed-form tail bound for AR(k) with k > 1".into()),
        },
        ProcessConfig::Sre(_) => out
            .notes
            .push("no closed-form tail bound for random difference equations".into()),
        ProcessConfig::GeometricSeries(_) => out
            .notes
            .push("approximable sequences: only a sample-size threshold is available".into()),
    }
    Ok(out)
}

fn geometric_series_kappas(g: &GeometricSeries, epsilon: f64) -> Result<(f64, f64)> {
    // Blocks of m + 1 truncated values are a linear image of 2m + 1 uniforms on [-1, 1].
    let m = g.m;
    let row: f64 = (0..=m).map(|j| 0.25f64.powi(j as i32)).sum();
    let frobenius = ((m + 1) as f64 * row).sqrt();
    Ok((
        uniform_cube_image_concentration(frobenius, 2 * m + 1, 2.0, epsilon / 2.0)?,
        uniform_cube_image_concentration(frobenius, 2 * m + 1, 2.0, epsilon / 4.0)?,
    ))
}

/// Sample size beyond which `process` is `(ε, α)`-dense, when known.
pub(crate) fn density_threshold(
    process: &ProcessConfig,
    epsilon: f64,
    alpha: f64,
) -> Result<Applicable<BoundReport>> {
    let mut out = Applicable::new();
    match process {
        ProcessConfig::Mobius(p) => {
            out.push(threshold_mobius(p.phi, epsilon, alpha), "mobius_threshold")?
        }
        ProcessConfig::MovingAverage(p) => {
            let (kh, kq) = ma_kappas(p.m, epsilon)?;
            let r = threshold_m_dependent(p.m as u64, kh, kq, alpha).and_then(|v| {
                BoundReport::threshold(
                    "m_dependent_threshold",
                    v,
                    crate::bounds::echo_inputs([
                        ("m", json!(p.m)),
                        ("epsilon", json!(epsilon)),
                        ("alpha", json!(alpha)),
                        ("kappa_half", json!(kh)),
                        ("kappa_quarter", json!(kq)),
                    ]),
                )
            });
            out.push(r, "m_dependent_threshold")?;
        }
        ProcessConfig::Ar(p) => match ar1(p) {
            Some((rho, c)) => {
                let kappa = ar1_transition_floor(rho, c);
                let r = threshold_markov(1.0, kappa, 1.0, epsilon, alpha).and_then(|v| {
                    BoundReport::threshold(
                        "markov_threshold",
                        v,
                        crate::bounds::echo_inputs([
                            ("b", json!(1.0)),
                            ("kappa", json!(kappa)),
                            ("v_d", json!(1.0)),
                            ("epsilon", json!(epsilon)),
                            ("alpha", json!(alpha)),
                        ]),
                    )
                });
                let r = if kappa == 0.0 {
                    Err(Error::VacuousBound(format!(
                        "transition density has no positive floor for rho = {rho}"
                    )))
                } else {
                    r
                };
                out.push(r, "markov_threshold")?;
            }
            None => out
                .notes
                .push("no closed-form threshold for AR(k) with k > 1".into()),
        },
        ProcessConfig::GeometricSeries(g) => {
            let (kh, kq) = geometric_series_kappas(g, epsilon)?;
            let trunc = TruncationInputs {
                m: g.m as u64,
                c_m: 0.5f64.powi(g.m as i32 + 1),
                f_sup: 2.0,
            };
            out.push(
                approximable_threshold(trunc, kh, kq, epsilon, alpha),
                "approximable_threshold",
            )?;
        }
        ProcessConfig::Sre(_) => out
            .notes
            .push("no closed-form threshold for random difference equations".into()),
    }
    Ok(out)
}
