use std::f64::consts::TAU;

use serde_json::json;

use super::report::{echo, BoundReport};
use crate::error::{ensure, Error, Result};

/// Lower bound on `arc(ε) / ε` over `ε ∈ (0, 2)` for the unit circle.
pub const MOBIUS_V: f64 = 2.0;

fn check_alpha(alpha: f64) -> Result<()> {
    ensure!(
        alpha > 0.0 && alpha < 1.0,
        "alpha must lie in (0, 1), got {alpha}"
    );
    Ok(())
}

fn check_unit(name: &str, x: f64) -> Result<()> {
    if x == 0.0 {
        return Err(Error::VacuousBound(format!("{name} = 0")));
    }
    ensure!(x > 0.0 && x <= 1.0, "{name} must lie in (0, 1], got {x}");
    Ok(())
}

/// Sample size beyond which an m-dependent sequence is `(ε, α)`-dense:
/// `2(m+1)/κ_{ε/2} (ln 1/α + ln 1/κ_{ε/4}) + 3(m+1)`.
pub fn threshold_m_dependent(
    m: u64,
    kappa_half: f64,
    kappa_quarter: f64,
    alpha: f64,
) -> Result<f64> {
    check_unit("kappa_half", kappa_half)?;
    check_unit("kappa_quarter", kappa_quarter)?;
    check_alpha(alpha)?;
    let w = (m + 1) as f64;
    Ok(2.0 * w / kappa_half * ((1.0 / alpha).ln() + (1.0 / kappa_quarter).ln()) + 3.0 * w)
}

fn markov_mass(b: f64, kappa: f64, v_d: f64, epsilon: f64) -> Result<f64> {
    if kappa == 0.0 || v_d == 0.0 {
        return Err(Error::VacuousBound(format!(
            "minorisation constant κ V_d = {}",
            kappa * v_d
        )));
    }
    ensure!(
        [b, kappa, v_d, epsilon]
            .iter()
            .all(|x| x.is_finite() && *x > 0.0),
        "Markov inputs must be finite and positive"
    );
    let c = kappa * epsilon.powf(b) * v_d;
    if c >= 2f64.powf(b) {
        return Err(Error::DegenerateConcentration(format!(
            "κ ε^b V_d = {c} is at least 2^b"
        )));
    }
    Ok(c)
}

/// `4^b (1 - κ ε^b V_d / 2^b)^n / (κ ε^b V_d)` for a uniformly minorised chain.
pub fn tail_markov(b: f64, kappa: f64, v_d: f64, epsilon: f64, n: u64) -> Result<f64> {
    let c = markov_mass(b, kappa, v_d, epsilon)?;
    Ok(4f64.powf(b) * (1.0 - c / 2f64.powf(b)).powf(n as f64) / c)
}

/// `2^b / (κ ε^b V_d) · (ln(4^b / (κ ε^b V_d)) + ln 1/α)`.
pub fn threshold_markov(b: f64, kappa: f64, v_d: f64, epsilon: f64, alpha: f64) -> Result<f64> {
    let c = markov_mass(b, kappa, v_d, epsilon)?;
    check_alpha(alpha)?;
    Ok(2f64.powf(b) / c * ((4f64.powf(b) / c).ln() + (1.0 / alpha).ln()))
}

/// Lower bound `(1/2π)(1-φ)/(1+φ)` on the transition density of the Möbius
/// chain with respect to arc length.
pub fn mobius_kappa(phi: f64) -> f64 {
    (1.0 - phi) / (1.0 + phi) / TAU
}

/// Sample size beyond which the Möbius chain is `(ε, α)`-dense on the circle.
pub fn threshold_mobius(phi: f64, epsilon: f64, alpha: f64) -> Result<BoundReport> {
    ensure!(
        (0.0..1.0).contains(&phi),
        "phi must lie in [0, 1), got {phi}"
    );
    ensure!(
        epsilon.is_finite() && epsilon > 0.0,
        "epsilon must be positive, got {epsilon}"
    );
    check_alpha(alpha)?;
    let kappa = mobius_kappa(phi);
    let c = kappa * MOBIUS_V * epsilon;
    ensure!(c < 4.0, "ε κ v = {c} must be below 4");
    let n0 = 2.0 / c * ((1.0 / alpha).ln() + (4.0 / c).ln());
    BoundReport::threshold(
        "mobius_threshold",
        n0,
        echo([
            ("phi", json!(phi)),
            ("epsilon", json!(epsilon)),
            ("alpha", json!(alpha)),
            ("kappa", json!(kappa)),
            ("v", json!(MOBIUS_V)),
        ]),
    )
}

/// `4 asin(ε/2) / ε`: arc length of `B(u, ε) ∩ S¹` per unit radius.
pub fn circle_arc_ratio(epsilon: f64) -> Result<f64> {
    ensure!(
        epsilon > 0.0 && epsilon < 2.0,
        "epsilon must lie in (0, 2), got {epsilon}"
    );
    Ok(4.0 * (epsilon / 2.0).asin() / epsilon)
}

/// The constants that control a truncation `X^(m)` of `X_n = f(ε_n, ε_{n-1}, ...)`.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct TruncationInputs {
    pub m: u64,
    pub c_m: f64,
    pub f_sup: f64,
}

impl TruncationInputs {
    /// `2 c_m |f|_inf`, the sure distance between the sample and its truncation.
    pub fn gap(&self) -> f64 {
        2.0 * self.c_m * self.f_sup
    }
}

/// Applies [`threshold_m_dependent`] to the m-dependent truncation. At the
/// returned sample size the original sequence is within `2ε` of its support
/// with probability at least `1 - α`.
pub fn approximable_threshold(
    trunc: TruncationInputs,
    kappa_half: f64,
    kappa_quarter: f64,
    epsilon: f64,
    alpha: f64,
) -> Result<BoundReport> {
    ensure!(
        epsilon.is_finite() && epsilon > 0.0,
        "epsilon must be positive, got {epsilon}"
    );
    ensure!(
        trunc.c_m >= 0.0 && trunc.f_sup >= 0.0 && trunc.gap().is_finite(),
        "truncation constants must be finite and nonnegative"
    );
    if trunc.gap() >= epsilon {
        return Err(Error::TruncationDepthInsufficient {
            m: trunc.m as usize,
            gap: trunc.gap(),
            epsilon,
        });
    }
    let n0 = threshold_m_dependent(trunc.m, kappa_half, kappa_quarter, alpha)?;
    BoundReport::threshold(
        "approximable_threshold",
        n0,
        echo([
            ("m", json!(trunc.m)),
            ("c_m", json!(trunc.c_m)),
            ("f_sup", json!(trunc.f_sup)),
            ("kappa_half", json!(kappa_half)),
            ("kappa_quarter", json!(kappa_quarter)),
            ("epsilon", json!(epsilon)),
            ("alpha", json!(alpha)),
            ("guarantee_radius", json!(2.0 * epsilon)),
        ]),
    )
}

/// Smallest `m ≤ max_m` with `2 c_m |f|_inf < ε`.
pub fn minimal_truncation_depth(
    c: impl Fn(u64) -> f64,
    f_sup: f64,
    epsilon: f64,
    max_m: u64,
) -> Result<u64> {
    (0..=max_m)
        .find(|&m| 2.0 * c(m) * f_sup < epsilon)
        .ok_or_else(|| Error::TruncationDepthInsufficient {
            m: max_m as usize,
            gap: 2.0 * c(max_m) * f_sup,
            epsilon,
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};

    #[test]
    fn m_dependent_threshold() {
        let n0 = threshold_m_dependent(0, 0.5, 0.5, 0.05).unwrap();
        assert_abs_diff_eq!(n0, 4.0 * (20f64.ln() + 2f64.ln()) + 3.0, epsilon = 1e-12);
        assert_abs_diff_eq!(n0, 17.755, epsilon = 1e-3);
        // Linear in m + 1.
        let a = threshold_m_dependent(1, 0.3, 0.2, 0.1).unwrap();
        let b = threshold_m_dependent(3, 0.3, 0.2, 0.1).unwrap();
        assert_relative_eq!(b, 2.0 * a, max_relative = 1e-14);
        let limit = threshold_m_dependent(2, 0.4, 0.2, 1.0 - 1e-12).unwrap();
        assert_abs_diff_eq!(limit, 6.0 / 0.4 * 5f64.ln() + 9.0, epsilon = 1e-9);
        assert!(matches!(
            threshold_m_dependent(0, 0.0, 0.5, 0.05),
            Err(Error::VacuousBound(_))
        ));
        assert!(threshold_m_dependent(0, 0.5, 0.5, 1.0).is_err());
    }

    #[test]
    fn markov_threshold() {
        let n0 = threshold_markov(1.0, 1.0 / TAU, 2.0, 0.1, 0.05).unwrap();
        let c = 0.1 / std::f64::consts::PI;
        assert_abs_diff_eq!(n0, 2.0 / c * ((4.0 / c).ln() + 20f64.ln()), epsilon = 1e-9);
        assert_abs_diff_eq!(n0, 491.9, epsilon = 0.05);
        let half = threshold_markov(1.0, 1.0 / TAU, 2.0, 0.05, 0.05).unwrap();
        assert!(half > 2.0 * n0);
        assert!(tail_markov(1.0, 1.0 / TAU, 2.0, 0.1, n0.ceil() as u64).unwrap() <= 0.05);
        assert!(matches!(
            threshold_markov(1.0, 1.0, 2.0, 1.0, 0.05),
            Err(Error::DegenerateConcentration(_))
        ));
    }

    #[test]
    fn mobius_threshold() {
        let r = threshold_mobius(0.0, 0.1, 0.05).unwrap();
        assert_abs_diff_eq!(
            r.value,
            threshold_markov(1.0, 1.0 / TAU, 2.0, 0.1, 0.05).unwrap(),
            epsilon = 1e-9
        );
        assert_eq!(r.sample_size(), Some(492));
        assert!(!r.vacuous);
        assert_eq!(r.inputs["v"], json!(2.0));
        // φ = 1/2 divides κ by 3: the prefactor triples and the log term grows by ln 3.
        let s = threshold_mobius(0.5, 0.1, 0.05).unwrap();
        let c = 0.1 / std::f64::consts::PI / 3.0;
        assert_abs_diff_eq!(
            s.value,
            2.0 / c * (20f64.ln() + (4.0 / c).ln()),
            epsilon = 1e-9
        );
        assert!(s.value > 3.0 * r.value);
        assert!(threshold_mobius(0.999, 0.1, 0.05).unwrap().value > 1e5);
    }

    #[test]
    fn arc_ratio() {
        assert_abs_diff_eq!(
            circle_arc_ratio(2f64.sqrt()).unwrap(),
            std::f64::consts::PI / 2f64.sqrt(),
            epsilon = 1e-14
        );
        assert_abs_diff_eq!(circle_arc_ratio(1e-6).unwrap(), 2.0, epsilon = 1e-6);
        let mut prev = 0.0;
        for i in 1..10_000 {
            let v = circle_arc_ratio(2.0 * i as f64 / 10_000.0).unwrap();
            assert!(v >= 2.0 && v >= prev);
            prev = v;
        }
        assert!(circle_arc_ratio(2.0).is_err());
    }

    #[test]
    fn truncation_depth() {
        let c = |m: u64| 0.5f64.powi(m as i32);
        assert_eq!(minimal_truncation_depth(c, 1.0, 0.1, 60).unwrap(), 5);
        let at = |m| TruncationInputs {
            m,
            c_m: c(m),
            f_sup: 1.0,
        };
        assert!(matches!(
            approximable_threshold(at(3), 0.5, 0.5, 0.1, 0.05),
            Err(Error::TruncationDepthInsufficient { m: 3, .. })
        ));
        assert!(approximable_threshold(at(5), 0.5, 0.5, 0.1, 0.05).is_ok());
        let exact = TruncationInputs {
            m: 2,
            c_m: 0.0,
            f_sup: 1.0,
        };
        let r = approximable_threshold(exact, 0.4, 0.3, 0.1, 0.05).unwrap();
        assert_eq!(r.value, threshold_m_dependent(2, 0.4, 0.3, 0.05).unwrap());
        assert_eq!(r.inputs["guarantee_radius"], json!(0.2));
    }
}
