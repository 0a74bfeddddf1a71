use std::f64::consts::{PI, TAU};

use serde::{Deserialize, Serialize};

use super::point::PointCloud;
use crate::error::{ensure, Result};

/// Degree-0 and degree-1 Betti numbers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BettiVector {
    pub b0: usize,
    pub b1: usize,
}

impl BettiVector {
    pub const fn new(b0: usize, b1: usize) -> Self {
        BettiVector { b0, b1 }
    }
}

/// Grids larger than this are refused rather than allocated.
const MAX_GRID_POINTS: usize = 20_000_000;

/// A parametric compact support.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawSupport", into = "RawSupport")]
pub enum SupportModel {
    /// The unit circle in the plane, reach 1.
    UnitCircle,
    /// A closed segment `[a, b]` of the real line.
    Interval { a: f64, b: f64 },
    /// A closed Euclidean ball.
    Ball { center: Vec<f64>, radius: f64 },
    /// `copies`-fold product of `base`; used as a superset of a block support.
    ProductBlock {
        base: Box<SupportModel>,
        copies: usize,
    },
}

// Wire form. Struct variants throughout so that `deny_unknown_fields` also
// applies to the unit circle.
#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
enum RawSupport {
    UnitCircle {},
    Interval {
        a: f64,
        b: f64,
    },
    Ball {
        center: Vec<f64>,
        radius: f64,
    },
    ProductBlock {
        base: Box<SupportModel>,
        copies: usize,
    },
}

impl TryFrom<RawSupport> for SupportModel {
    type Error = crate::Error;

    fn try_from(raw: RawSupport) -> Result<Self> {
        let s = match raw {
            RawSupport::UnitCircle {} => SupportModel::UnitCircle,
            RawSupport::Interval { a, b } => SupportModel::Interval { a, b },
            RawSupport::Ball { center, radius } => SupportModel::Ball { center, radius },
            RawSupport::ProductBlock { base, copies } => {
                SupportModel::ProductBlock { base, copies }
            }
        };
        s.validate()?;
        Ok(s)
    }
}

impl From<SupportModel> for RawSupport {
    fn from(s: SupportModel) -> Self {
        match s {
            SupportModel::UnitCircle => RawSupport::UnitCircle {},
            SupportModel::Interval { a, b } => RawSupport::Interval { a, b },
            SupportModel::Ball { center, radius } => RawSupport::Ball { center, radius },
            SupportModel::ProductBlock { base, copies } => {
                RawSupport::ProductBlock { base, copies }
            }
        }
    }
}

impl SupportModel {
    pub fn validate(&self) -> Result<()> {
        match self {
            SupportModel::UnitCircle => {}
            SupportModel::Interval { a, b } => {
                ensure!(
                    a.is_finite() && b.is_finite() && a < b,
                    "interval needs finite a < b, got [{a}, {b}]"
                );
            }
            SupportModel::Ball { center, radius } => {
                ensure!(
                    !center.is_empty(),
                    "ball center must have at least one coordinate"
                );
                ensure!(
                    center.iter().all(|c| c.is_finite()),
                    "ball center must be finite"
                );
                ensure!(
                    radius.is_finite() && *radius > 0.0,
                    "ball radius must be positive, got {radius}"
                );
            }
            SupportModel::ProductBlock { base, copies } => {
                ensure!(*copies >= 1, "product block needs at least one copy");
                base.validate()?;
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        match self {
            SupportModel::UnitCircle => 2,
            SupportModel::Interval { .. } => 1,
            SupportModel::Ball { center, .. } => center.len(),
            SupportModel::ProductBlock { base, copies } => base.dim() * copies,
        }
    }

    /// Reach of the support; `f64::INFINITY` for convex sets.
    pub fn reach(&self) -> f64 {
        match self {
            SupportModel::UnitCircle => 1.0,
            SupportModel::Interval { .. } | SupportModel::Ball { .. } => f64::INFINITY,
            // The reach of a product is the smallest reach of its factors.
            SupportModel::ProductBlock { base, .. } => base.reach(),
        }
    }

    pub fn betti(&self) -> BettiVector {
        match self {
            SupportModel::UnitCircle => BettiVector::new(1, 1),
            SupportModel::Interval { .. } | SupportModel::Ball { .. } => BettiVector::new(1, 0),
            SupportModel::ProductBlock { base, copies } => {
                // Künneth over a field, truncated to degrees 0 and 1.
                let BettiVector { b0, b1 } = base.betti();
                let r = *copies as u32;
                BettiVector::new(b0.pow(r), copies * b1 * b0.pow(r - 1))
            }
        }
    }

    pub fn diameter(&self) -> f64 {
        match self {
            SupportModel::UnitCircle => 2.0,
            SupportModel::Interval { a, b } => b - a,
            SupportModel::Ball { radius, .. } => 2.0 * radius,
            SupportModel::ProductBlock { base, copies } => {
                base.diameter() * (*copies as f64).sqrt()
            }
        }
    }

    /// A finite subset of the support that is `delta`-dense in it.
    pub fn grid(&self, delta: f64) -> Result<PointCloud> {
        ensure!(
            delta.is_finite() && delta > 0.0,
            "grid resolution must be positive, got {delta}"
        );
        self.validate()?;
        match self {
            SupportModel::UnitCircle => {
                // Arc spacing 2π/N keeps every point within chord π/N ≤ δ of the grid.
                let n = (PI / delta).ceil().max(3.0) as usize;
                ensure!(
                    n <= MAX_GRID_POINTS,
                    "circle grid at delta {delta} is too large"
                );
                let coords = (0..n)
                    .flat_map(|k| {
                        let t = TAU * k as f64 / n as f64;
                        [t.cos(), t.sin()]
                    })
                    .collect();
                PointCloud::from_flat(2, coords)
            }
            SupportModel::Interval { a, b } => {
                let steps = ((b - a) / (2.0 * delta)).ceil().max(1.0) as usize;
                ensure!(
                    steps < MAX_GRID_POINTS,
                    "interval grid at delta {delta} is too large"
                );
                let coords = (0..=steps)
                    .map(|k| {
                        if k == steps {
                            *b
                        } else {
                            a + (b - a) * k as f64 / steps as f64
                        }
                    })
                    .collect();
                PointCloud::from_flat(1, coords)
            }
            SupportModel::Ball { center, radius } => ball_grid(center, *radius, delta),
            SupportModel::ProductBlock { base, copies } => {
                let factor = base.grid(delta / (*copies as f64).sqrt())?;
                let total = factor
                    .len()
                    .checked_pow(*copies as u32)
                    .filter(|&t| t <= MAX_GRID_POINTS);
                let Some(total) = total else {
                    return Err(crate::Error::contract(format!(
                        "product grid of {} copies of {} points is too large",
                        copies,
                        factor.len()
                    )));
                };
                let d = factor.dim();
                let mut coords = Vec::with_capacity(total * d * copies);
                let mut idx = vec![0usize; *copies];
                for _ in 0..total {
                    for &i in &idx {
                        coords.extend_from_slice(factor.point(i));
                    }
                    for slot in idx.iter_mut().rev() {
                        *slot += 1;
                        if *slot < factor.len() {
                            break;
                        }
                        *slot = 0;
                    }
                }
                PointCloud::from_flat(d * copies, coords)
            }
        }
    }

    /// Exact `sup_{x in M} min_j |X_j - x|` where a closed form exists.
    ///
    /// The cloud is assumed to lie on the support. For the circle the value is
    /// `2 sin(θ_max / 4)` with `θ_max` the largest angular gap between sample
    /// angles; for an interval it is the largest of the two end gaps and half
    /// the largest interior gap.
    pub fn exact_hausdorff(&self, cloud: &PointCloud) -> Option<f64> {
        match self {
            SupportModel::UnitCircle if cloud.dim() == 2 => {
                let mut angles: Vec<f64> = cloud.iter().map(|p| p[1].atan2(p[0])).collect();
                angles.sort_by(f64::total_cmp);
                let wrap = angles[0] + TAU - angles[angles.len() - 1];
                let widest = angles.windows(2).map(|w| w[1] - w[0]).fold(wrap, f64::max);
                Some(2.0 * (widest / 4.0).sin())
            }
            SupportModel::Interval { a, b } if cloud.dim() == 1 => {
                let mut xs: Vec<f64> = cloud.as_flat().to_vec();
                xs.sort_by(f64::total_cmp);
                let ends = (xs[0] - a).max(b - xs[xs.len() - 1]);
                let inner = xs
                    .windows(2)
                    .map(|w| 0.5 * (w[1] - w[0]))
                    .fold(0.0, f64::max);
                Some(ends.max(inner).max(0.0))
            }
            _ => None,
        }
    }
}

/// Cubic lattice of spacing `2δ/√d` projected onto the ball.
///
/// Projection onto a convex set is 1-Lipschitz, so the projected lattice stays
/// δ-dense in the ball.
fn ball_grid(center: &[f64], radius: f64, delta: f64) -> Result<PointCloud> {
    let d = center.len();
    let h = 2.0 * delta / (d as f64).sqrt();
    let per_axis = (2.0 * radius / h).ceil() as usize + 1;
    let total = per_axis
        .checked_pow(d as u32)
        .filter(|&t| t <= MAX_GRID_POINTS);
    ensure!(
        total.is_some(),
        "ball grid at delta {delta} in dimension {d} is too large"
    );
    let total = total.unwrap_or(0);
    let mut coords = Vec::with_capacity(total * d);
    let mut idx = vec![0usize; d];
    let mut p = vec![0.0; d];
    for _ in 0..total {
        for k in 0..d {
            p[k] = center[k] - radius + (idx[k] as f64 * h).min(2.0 * radius);
        }
        let r = super::euclidean(&p, center);
        if r > radius {
            for k in 0..d {
                p[k] = center[k] + (p[k] - center[k]) * radius / r;
            }
        }
        coords.extend_from_slice(&p);
        for slot in idx.iter_mut().rev() {
            *slot += 1;
            if *slot < per_axis {
                break;
            }
            *slot = 0;
        }
    }
    PointCloud::from_flat(d, coords)
}
