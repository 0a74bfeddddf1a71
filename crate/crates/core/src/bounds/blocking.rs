use serde::{Deserialize, Serialize};

use crate::error::{ensure, Error, Result};

/// `k` blocks of `r` consecutive observations taken from the first `k r` of `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockingSchedule {
    pub k: u64,
    pub r: u64,
    pub n: u64,
}

impl BlockingSchedule {
    pub fn new(k: u64, r: u64, n: u64) -> Result<Self> {
        ensure!(
            k >= 1 && r >= 1,
            "block count and length must be positive (k={k}, r={r})"
        );
        ensure!(
            k.checked_mul(r).is_some_and(|kr| kr <= n),
            "schedule k={k}, r={r} does not fit in n={n}"
        );
        Ok(BlockingSchedule { k, r, n })
    }

    /// One block per observation.
    pub fn singletons(n: u64) -> Result<Self> {
        Self::new(n, 1, n)
    }
}

/// `r = ⌊(ln n)^γ⌋`, `k = ⌊n / (ln n)^γ⌋` with `γ = 1 / beta_exponent`.
pub fn schedule_for_mixing(n: u64, beta_exponent: f64) -> Result<BlockingSchedule> {
    ensure!(n >= 3, "mixing schedule needs n >= 3, got {n}");
    ensure!(
        beta_exponent.is_finite() && beta_exponent > 1.0,
        "mixing exponent must exceed 1, got {beta_exponent}"
    );
    let len = (n as f64).ln().powf(1.0 / beta_exponent);
    let r = (len.floor() as u64).max(1);
    let mut k = ((n as f64) / len).floor() as u64;
    // Rounding in n / len can push k one past the exact floor.
    while k * r > n {
        k -= 1;
    }
    BlockingSchedule::new(k, r, n)
}

/// Upper bound on `P(d_H(X_n, M) > ε)` from `⌊k/2⌋` alternating blocks:
/// `(k² β_r + k exp(-⌊k/2⌋ ρ_r(ε/2))) / (k ρ_r(ε/4))`.
pub fn blocking_tail_bound(
    schedule: BlockingSchedule,
    rho_half: f64,
    rho_quarter: f64,
    mixing_term: f64,
) -> Result<f64> {
    ensure!(
        (0.0..=1.0).contains(&rho_half),
        "rho_half must lie in [0, 1], got {rho_half}"
    );
    ensure!(
        rho_quarter <= 1.0,
        "rho_quarter must not exceed 1, got {rho_quarter}"
    );
    ensure!(
        mixing_term.is_finite() && mixing_term >= 0.0,
        "mixing term must be finite and nonnegative, got {mixing_term}"
    );
    if rho_quarter.is_nan() || rho_quarter <= 0.0 {
        return Err(Error::VacuousBound(format!("rho_quarter = {rho_quarter}")));
    }
    let k = schedule.k as f64;
    let half_k = (schedule.k / 2) as f64;
    Ok((k * k * mixing_term + k * (-half_k * rho_half).exp()) / (k * rho_quarter))
}

/// Upper bound on `P(d_H(X_n, M) > ε)` for an m-dependent sequence:
/// `(1 - κ_{ε/2})^{⌊⌊n/(m+1)⌋/2⌋} / κ_{ε/4}`.
pub fn tail_m_dependent(n: u64, m: u64, kappa_half: f64, kappa_quarter: f64) -> Result<f64> {
    ensure!(
        (0.0..=1.0).contains(&kappa_half),
        "kappa_half must lie in [0, 1], got {kappa_half}"
    );
    ensure!(
        kappa_quarter <= 1.0,
        "kappa_quarter must not exceed 1, got {kappa_quarter}"
    );
    if kappa_quarter.is_nan() || kappa_quarter <= 0.0 {
        return Err(Error::VacuousBound(format!(
            "kappa_quarter = {kappa_quarter}"
        )));
    }
    let blocks = n / (m + 1) / 2;
    Ok((1.0 - kappa_half).powf(blocks as f64) / kappa_quarter)
}

/// `β_r ≤ (1 - κ ν(M))^r` for a chain whose transition density is bounded
/// below by `κ` on the support, relative to a reference measure of total
/// mass `ν(M)`.
pub fn geometric_mixing(kappa: f64, nu_mass: f64, r: u64) -> Result<f64> {
    let mass = kappa * nu_mass;
    ensure!(
        mass.is_finite() && mass > 0.0 && mass <= 1.0,
        "minorisation mass κ ν(M) must lie in (0, 1], got {mass}"
    );
    Ok((1.0 - mass).powf(r as f64))
}

/// The dependence structure behind a tail bound.
///
/// Coefficient tables hold `c_1, c_2, ...` and must be non-increasing; lags
/// past the end of a table use its last entry.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case", deny_unknown_fields)]
pub enum DependenceInputs {
    Independent,
    MDependent {
        m: u64,
    },
    BetaMixing {
        beta: Vec<f64>,
    },
    WeakPsi {
        psi: Vec<f64>,
    },
    /// Uniform minorisation `k(x, y) ≥ κ` against `ν`, with `ν(B(x, ε) ∩ M) ≥ V_d ε^b`.
    Markov {
        b: f64,
        kappa: f64,
        v_d: f64,
        nu_mass: f64,
    },
    Mobius {
        phi: f64,
        v: f64,
    },
}

impl DependenceInputs {
    pub fn validate(&self) -> Result<()> {
        match self {
            DependenceInputs::Independent | DependenceInputs::MDependent { .. } => Ok(()),
            DependenceInputs::BetaMixing { beta: table }
            | DependenceInputs::WeakPsi { psi: table } => {
                ensure!(!table.is_empty(), "coefficient table is empty");
                ensure!(
                    table.iter().all(|c| c.is_finite() && *c >= 0.0),
                    "coefficients must be finite and nonnegative"
                );
                ensure!(
                    table.windows(2).all(|w| w[1] <= w[0]),
                    "coefficients must be non-increasing"
                );
                Ok(())
            }
            DependenceInputs::Markov {
                b,
                kappa,
                v_d,
                nu_mass,
            } => {
                ensure!(
                    [b, kappa, v_d, nu_mass]
                        .iter()
                        .all(|x| x.is_finite() && **x > 0.0),
                    "Markov inputs must be finite and positive"
                );
                Ok(())
            }
            DependenceInputs::Mobius { phi, v } => {
                ensure!(
                    (0.0..1.0).contains(phi),
                    "phi must lie in [0, 1), got {phi}"
                );
                ensure!(v.is_finite() && *v > 0.0, "v must be positive, got {v}");
                Ok(())
            }
        }
    }

    /// The coefficient at lag `r` that enters [`blocking_tail_bound`].
    pub fn mixing_term(&self, r: u64) -> Result<f64> {
        self.validate()?;
        ensure!(r >= 1, "lag must be positive");
        match self {
            DependenceInputs::Independent => Ok(0.0),
            DependenceInputs::MDependent { m } => {
                ensure!(
                    r > *m,
                    "blocks of length {r} are not separated for an {m}-dependent sequence"
                );
                Ok(0.0)
            }
            DependenceInputs::BetaMixing { beta: table }
            | DependenceInputs::WeakPsi { psi: table } => {
                let i = (r as usize - 1).min(table.len() - 1);
                Ok(table[i])
            }
            DependenceInputs::Markov { kappa, nu_mass, .. } => {
                geometric_mixing(*kappa, *nu_mass, r)
            }
            DependenceInputs::Mobius { phi, .. } => {
                geometric_mixing(super::mobius_kappa(*phi), std::f64::consts::TAU, r)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn schedule_examples() {
        let s = schedule_for_mixing(55, 2.0).unwrap();
        assert_eq!((s.k, s.r), (27, 2));
        let s = schedule_for_mixing(1_000_000, 2.0).unwrap();
        assert_eq!((s.k, s.r), (269_039, 3));
        assert!(schedule_for_mixing(2, 2.0).is_err());
        assert!(schedule_for_mixing(100, 1.0).is_err());
    }

    #[test]
    fn schedule_always_fits() {
        for n in 3..20_000u64 {
            for e in [1.01, 1.5, 2.0, 7.0] {
                let s = schedule_for_mixing(n, e).unwrap();
                assert!(s.k * s.r <= n && s.k >= 1 && s.r >= 1);
            }
        }
    }

    #[test]
    fn tail_examples() {
        let s = BlockingSchedule::new(10, 1, 10).unwrap();
        assert_abs_diff_eq!(
            blocking_tail_bound(s, 1.0, 1.0, 0.0).unwrap(),
            (-5.0f64).exp(),
            epsilon = 1e-15
        );
        let s = BlockingSchedule::new(20, 5, 100).unwrap();
        let expected = (400e-6 + 20.0 * (-3.0f64).exp()) / 4.0;
        assert_abs_diff_eq!(
            blocking_tail_bound(s, 0.3, 0.2, 1e-6).unwrap(),
            expected,
            epsilon = 1e-12
        );
        assert_abs_diff_eq!(expected, 0.24903, epsilon = 1e-5);
        assert!(blocking_tail_bound(s, 0.3, 0.2, 1.0).unwrap() >= 1.0);
        assert!(matches!(
            blocking_tail_bound(s, 0.3, 0.0, 0.0),
            Err(Error::VacuousBound(_))
        ));
        assert!(BlockingSchedule::new(20, 6, 100).is_err());
    }

    #[test]
    fn m_dependent_tail() {
        // n = 60, m = 2: 20 blocks, 10 used.
        let v = tail_m_dependent(60, 2, 0.5, 0.25).unwrap();
        assert_abs_diff_eq!(v, 0.5f64.powi(10) / 0.25, epsilon = 1e-15);
        assert!(tail_m_dependent(60, 2, 0.5, 0.0).is_err());
    }

    #[test]
    fn mixing_terms() {
        let beta = DependenceInputs::BetaMixing {
            beta: vec![0.5, 0.25, 0.1],
        };
        assert_eq!(beta.mixing_term(2).unwrap(), 0.25);
        assert_eq!(beta.mixing_term(10).unwrap(), 0.1);
        assert!(DependenceInputs::BetaMixing {
            beta: vec![0.1, 0.2]
        }
        .mixing_term(1)
        .is_err());
        assert_eq!(
            DependenceInputs::MDependent { m: 2 }
                .mixing_term(3)
                .unwrap(),
            0.0
        );
        assert!(DependenceInputs::MDependent { m: 2 }
            .mixing_term(2)
            .is_err());
        // Möbius: 1 - κ 2π = 2φ / (1 + φ).
        let mob = DependenceInputs::Mobius { phi: 0.5, v: 2.0 };
        assert_abs_diff_eq!(
            mob.mixing_term(3).unwrap(),
            (2.0f64 / 3.0).powi(3),
            epsilon = 1e-14
        );
        assert_eq!(
            DependenceInputs::Mobius { phi: 0.0, v: 2.0 }
                .mixing_term(1)
                .unwrap(),
            0.0
        );
        let json = serde_json::to_string(&mob).unwrap();
        assert_eq!(json, r#"{"family":"mobius","phi":0.5,"v":2.0}"#);
    }
}
