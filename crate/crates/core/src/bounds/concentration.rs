use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{ensure, Result};
use crate::exec::{argmin_first, Execution};
use crate::geometry::{squared_distance, SupportModel};
use crate::processes::StationaryProcess;
use crate::rng::{derive_seed, rng_from_seed, splitmix64};
use crate::stats::{clopper_pearson_lower, clopper_pearson_upper};

const CENTER_STREAM: u64 = 0xC3A7_E125_0F1D_B10C;

/// Monte Carlo estimate of `ρ_m(ε) = inf_x P(|(X_1, ..., X_m) - x| ≤ ε)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConcentrationEstimate {
    pub m: usize,
    pub epsilon: f64,
    /// Smallest empirical hit frequency over the candidate centres.
    pub rho_hat: f64,
    /// One-sided 97.5% Clopper-Pearson lower bound at the minimising centre.
    pub lower_conf: f64,
    /// Clopper-Pearson upper bound at the minimising centre, Bonferroni
    /// corrected over all centres to simultaneous level 97.5%. If every centre
    /// has concentration at least `t`, then `upper_conf ≥ t` with that
    /// probability.
    pub upper_conf: f64,
    pub trials: u64,
    /// Number of candidate centres evaluated.
    pub grid_size: usize,
    /// All simulated blocks coincide.
    pub degenerate: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConcentrationOptions {
    /// Resolution of the product grid of candidate centres; must be below ε.
    pub delta: f64,
    /// Independent block draws; at least 100.
    pub trials: u64,
    pub seed: u64,
    /// Simulated blocks added to the candidate centres.
    pub sample_centers: usize,
    /// The product grid is skipped when it would exceed this many points.
    pub max_grid_centers: usize,
    pub execution: Execution,
}

impl ConcentrationOptions {
    pub fn new(delta: f64, trials: u64, seed: u64) -> Self {
        ConcentrationOptions {
            delta,
            trials,
            seed,
            sample_centers: 256,
            max_grid_centers: 50_000,
            execution: Execution::default(),
        }
    }
}

fn simulate_blocks<P: StationaryProcess + ?Sized>(
    p: &P,
    m: usize,
    count: usize,
    master: u64,
    exec: Execution,
) -> Vec<f64> {
    exec.map(count, |i| {
        let mut rng = rng_from_seed(derive_seed(master, i as u64));
        let mut out = Vec::with_capacity(m * p.dim());
        p.sample_into(m, &mut rng, &mut out);
        out
    })
    .concat()
}

fn block_support(support: &SupportModel, m: usize) -> SupportModel {
    if m == 1 {
        support.clone()
    } else {
        SupportModel::ProductBlock {
            base: Box::new(support.clone()),
            copies: m,
        }
    }
}

/// Estimates `ρ_m(ε)` by minimising, over a set of candidate centres, the
/// fraction of `trials` independent blocks within `ε` of the centre.
///
/// Candidate centres are a `delta`-grid of the product of the marginal
/// support (when the process exposes one) and simulated blocks. The product
/// can be larger than the true block support, which only lowers the estimate.
pub fn estimate_concentration<P: StationaryProcess + ?Sized>(
    process: &P,
    m: usize,
    epsilon: f64,
    opts: &ConcentrationOptions,
) -> Result<ConcentrationEstimate> {
    process.validate()?;
    ensure!(m >= 1, "block length must be positive");
    ensure!(
        epsilon.is_finite() && epsilon > 0.0,
        "epsilon must be positive, got {epsilon}"
    );
    ensure!(
        opts.trials >= 100,
        "at least 100 trials are required, got {}",
        opts.trials
    );
    ensure!(
        opts.delta > 0.0 && opts.delta < epsilon,
        "grid resolution {} must lie in (0, epsilon)",
        opts.delta
    );
    let n = opts.trials;
    let exec = opts.execution;
    let width = m * process.dim();
    let blocks = simulate_blocks(process, m, n as usize, opts.seed, exec);
    let support = process.support().map(|s| block_support(&s, m));

    let certain = |grid_size: usize, degenerate: bool| ConcentrationEstimate {
        m,
        epsilon,
        rho_hat: 1.0,
        lower_conf: clopper_pearson_lower(n, n, 0.975),
        upper_conf: 1.0,
        trials: n,
        grid_size,
        degenerate,
    };
    let first = &blocks[..width];
    if blocks.chunks_exact(width).all(|b| b == first) {
        return Ok(certain(1, true));
    }
    if support.as_ref().is_some_and(|s| epsilon >= s.diameter()) {
        return Ok(certain(0, false));
    }

    let mut centers = Vec::new();
    if let Some(grid) = support
        .and_then(|s| s.grid(opts.delta).ok())
        .filter(|g| g.len() <= opts.max_grid_centers)
    {
        centers.extend_from_slice(grid.as_flat());
    }
    let center_seed = splitmix64(opts.seed ^ CENTER_STREAM);
    centers.extend(simulate_blocks(
        process,
        m,
        opts.sample_centers,
        center_seed,
        exec,
    ));
    let count = centers.len() / width;
    ensure!(
        count > 0,
        "no candidate centres: the process has no support model and sample_centers is 0"
    );

    let eps2 = epsilon * epsilon;
    let hits = exec.map(count, |c| {
        let x = &centers[c * width..(c + 1) * width];
        blocks
            .chunks_exact(width)
            .filter(|b| squared_distance(b, x) <= eps2)
            .count() as f64
    });
    let (_, min_hits) = argmin_first(&hits).expect("at least one centre");
    let s = min_hits as u64;
    Ok(ConcentrationEstimate {
        m,
        epsilon,
        rho_hat: s as f64 / n as f64,
        lower_conf: clopper_pearson_lower(s, n, 0.975),
        upper_conf: clopper_pearson_upper(s, n, 1.0 - 0.025 / count as f64),
        trials: n,
        grid_size: count,
        degenerate: false,
    })
}

/// `ρ₁(ε/√m)^m`, a lower bound on `ρ_m(ε)` for independent coordinates.
pub fn tensorized_lower(rho1_at: impl Fn(f64) -> f64, m: usize, epsilon: f64) -> Result<f64> {
    ensure!(m >= 1, "block length must be positive");
    ensure!(epsilon > 0.0, "epsilon must be positive, got {epsilon}");
    let r = rho1_at(epsilon / (m as f64).sqrt());
    ensure!(
        (0.0..=1.0).contains(&r),
        "single-site concentration {r} is not a probability"
    );
    Ok(r.powi(m as i32))
}

/// `ρ₁(ε)` for the uniform distribution on the unit circle: `4 asin(ε/2) / 2π`.
pub fn uniform_circle_concentration(epsilon: f64) -> f64 {
    if epsilon >= 2.0 {
        1.0
    } else {
        2.0 * (epsilon / 2.0).max(0.0).asin() / PI
    }
}

/// Lower bound on `inf_x P(|A U - x| ≤ ε)` over `x` in the image of the cube,
/// for `U` uniform on `[0, side]^inputs` and `|A|_F = frobenius`.
///
/// `|A(U - u)| ≤ |A|_F √k |U - u|_∞`, and every coordinate window of
/// half-width `h ≤ side` inside the cube has length at least `h`.
pub fn uniform_cube_image_concentration(
    frobenius: f64,
    inputs: usize,
    side: f64,
    epsilon: f64,
) -> Result<f64> {
    ensure!(
        frobenius > 0.0 && side > 0.0 && inputs >= 1,
        "degenerate linear map"
    );
    ensure!(epsilon > 0.0, "epsilon must be positive, got {epsilon}");
    let h = epsilon / (frobenius * (inputs as f64).sqrt());
    Ok((h.min(side) / side).powi(inputs as i32))
}

/// Lower bound on the concentration of `len` consecutive values of the
/// moving average of `m + 1` uniforms on `[0, 1]`.
pub fn moving_average_concentration(m: usize, len: usize, epsilon: f64) -> Result<f64> {
    ensure!(len >= 1, "block length must be positive");
    let frobenius = (len as f64 / (m + 1) as f64).sqrt();
    uniform_cube_image_concentration(frobenius, len + m, 1.0, epsilon)
}
