use serde::{Deserialize, Serialize};

use super::point::PointCloud;
use super::spatial::index_for;
use super::support::SupportModel;
use crate::error::{ensure, Error, Result};
use crate::exec::Execution;

/// Enclosure `[lo, hi]` of the Hausdorff distance from a cloud to a support.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HausdorffBracket {
    pub lo: f64,
    pub hi: f64,
    /// True when the value came from a closed form and `lo == hi`.
    pub exact: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Density {
    Dense,
    NotDense,
    /// ε falls inside the bracket; the grid cannot decide.
    Unknown,
}

fn check_dims(a: &PointCloud, b_dim: usize) -> Result<()> {
    if a.dim() != b_dim {
        return Err(Error::DimensionMismatch {
            expected: b_dim,
            found: a.dim(),
        });
    }
    Ok(())
}

/// Largest distance from a point of `from` to the set `to`.
fn directed(from: &PointCloud, to: &PointCloud, exec: Execution) -> f64 {
    let index = index_for(to);
    exec.max_by_index(from.len(), |i| index.nearest_distance(from.point(i)))
        .map_or(0.0, |(_, d)| d)
}

/// Hausdorff distance between two finite clouds of the same dimension.
pub fn hausdorff_between_clouds(a: &PointCloud, b: &PointCloud) -> Result<f64> {
    hausdorff_between_clouds_with(a, b, Execution::default())
}

pub fn hausdorff_between_clouds_with(
    a: &PointCloud,
    b: &PointCloud,
    exec: Execution,
) -> Result<f64> {
    check_dims(b, a.dim())?;
    Ok(directed(a, b, exec).max(directed(b, a, exec)))
}

/// Encloses `sup_{x in M} min_j |X_j - x|`.
///
/// Supports with a closed form (circle, interval) return an exact value.
/// Otherwise the supremum is taken over `support.grid(delta)`: the grid lies in
/// `M` so its maximum is a lower bound, and the distance function is
/// 1-Lipschitz so adding `delta` gives an upper bound.
pub fn hausdorff_to_support(
    cloud: &PointCloud,
    support: &SupportModel,
    delta: f64,
) -> Result<HausdorffBracket> {
    hausdorff_to_support_with(cloud, support, delta, Execution::default())
}

pub fn hausdorff_to_support_with(
    cloud: &PointCloud,
    support: &SupportModel,
    delta: f64,
    exec: Execution,
) -> Result<HausdorffBracket> {
    ensure!(
        delta.is_finite() && delta > 0.0,
        "grid resolution must be positive, got {delta}"
    );
    check_dims(cloud, support.dim())?;
    if let Some(d) = support.exact_hausdorff(cloud) {
        return Ok(HausdorffBracket {
            lo: d,
            hi: d,
            exact: true,
        });
    }
    grid_bracket_with(cloud, support, delta, exec)
}

/// The grid enclosure, bypassing any closed form. Used as an oracle for the
/// exact formulas.
pub fn grid_bracket_with(
    cloud: &PointCloud,
    support: &SupportModel,
    delta: f64,
    exec: Execution,
) -> Result<HausdorffBracket> {
    ensure!(
        delta.is_finite() && delta > 0.0,
        "grid resolution must be positive, got {delta}"
    );
    check_dims(cloud, support.dim())?;
    let grid = support.grid(delta)?;
    let lo = directed(&grid, cloud, exec);
    Ok(HausdorffBracket {
        lo,
        hi: lo + delta,
        exact: false,
    })
}

/// Decides whether `M ⊂ cloud ⊕ ε`, i.e. whether the cloud is ε-dense in `M`.
pub fn epsilon_density_check(
    cloud: &PointCloud,
    support: &SupportModel,
    epsilon: f64,
    delta: f64,
) -> Result<Density> {
    ensure!(
        epsilon.is_finite() && epsilon > 0.0,
        "epsilon must be positive, got {epsilon}"
    );
    ensure!(
        delta < epsilon,
        "grid resolution {delta} must be smaller than epsilon {epsilon}"
    );
    let b = hausdorff_to_support(cloud, support, delta)?;
    Ok(verdict(&b, epsilon))
}

impl HausdorffBracket {
    /// Whether the bracket certifies `d_H ≤ epsilon`, refutes it, or straddles it.
    pub fn density_at(&self, epsilon: f64) -> Density {
        verdict(self, epsilon)
    }
}

fn verdict(b: &HausdorffBracket, epsilon: f64) -> Density {
    if b.hi <= epsilon {
        Density::Dense
    } else if b.lo > epsilon {
        Density::NotDense
    } else {
        Density::Unknown
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, PI};

    fn circle_cloud(angles: &[f64]) -> PointCloud {
        PointCloud::from_xy(
            &angles
                .iter()
                .map(|t| (t.cos(), t.sin()))
                .collect::<Vec<_>>(),
        )
        .unwrap()
    }

    #[test]
    fn between_clouds_examples() {
        let a = PointCloud::from_xy(&[(0.0, 0.0)]).unwrap();
        let b = PointCloud::from_xy(&[(3.0, 4.0)]).unwrap();
        assert_eq!(hausdorff_between_clouds(&a, &b).unwrap(), 5.0);
        assert_eq!(hausdorff_between_clouds(&a, &a).unwrap(), 0.0);
        let two = PointCloud::from_xy(&[(0.0, 0.0), (1.0, 0.0)]).unwrap();
        assert_eq!(hausdorff_between_clouds(&two, &a).unwrap(), 1.0);
        let line = PointCloud::from_flat(1, vec![0.0]).unwrap();
        assert!(matches!(
            hausdorff_between_clouds(&a, &line),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn four_point_circle_exact_and_grid() {
        let cloud = circle_cloud(&[0.0, FRAC_PI_2, PI, 3.0 * FRAC_PI_2]);
        let exact = hausdorff_to_support(&cloud, &SupportModel::UnitCircle, 1e-4).unwrap();
        assert!(exact.exact);
        assert!((exact.lo - 2.0 * (PI / 8.0).sin()).abs() < 1e-12);
        assert!((exact.lo - 0.765_367).abs() < 1e-6);
        let grid = grid_bracket_with(
            &cloud,
            &SupportModel::UnitCircle,
            1e-4,
            Execution::Sequential,
        )
        .unwrap();
        assert!(grid.lo <= exact.lo && exact.lo <= grid.hi, "{grid:?}");
    }

    #[test]
    fn single_point_is_antipodal() {
        let cloud = circle_cloud(&[0.3]);
        let b = hausdorff_to_support(&cloud, &SupportModel::UnitCircle, 0.01).unwrap();
        assert!((b.lo - 2.0).abs() < 1e-12);
    }

    #[test]
    fn grid_against_itself_is_zero() {
        let circle = SupportModel::UnitCircle;
        let g = circle.grid(0.01).unwrap();
        let b = grid_bracket_with(&g, &circle, 0.01, Execution::Sequential).unwrap();
        assert_eq!(b.lo, 0.0);
        let ball = SupportModel::Ball {
            center: vec![0.0, 0.0],
            radius: 1.0,
        };
        let g = ball.grid(0.05).unwrap();
        let b = hausdorff_to_support(&g, &ball, 0.05).unwrap();
        assert_eq!(b.lo, 0.0);
        assert_eq!(b.hi, 0.05);
    }

    #[test]
    fn interval_exact_matches_grid() {
        let seg = SupportModel::Interval { a: -1.0, b: 2.0 };
        let cloud = PointCloud::from_flat(1, vec![0.5, -0.5, 1.0]).unwrap();
        let exact = hausdorff_to_support(&cloud, &seg, 1e-3).unwrap();
        assert_eq!(exact.lo, 1.0);
        let grid = grid_bracket_with(&cloud, &seg, 1e-3, Execution::Sequential).unwrap();
        assert!(grid.lo <= 1.0 && 1.0 <= grid.hi);
    }

    #[test]
    fn density_verdicts() {
        let circle = SupportModel::UnitCircle;
        let delta = 0.01;
        let g = circle.grid(delta).unwrap();
        assert_eq!(
            epsilon_density_check(&g, &circle, 2.0 * delta, delta).unwrap(),
            Density::Dense
        );
        let one = circle_cloud(&[0.0]);
        assert_eq!(
            epsilon_density_check(&one, &circle, 1.0, 0.1).unwrap(),
            Density::NotDense
        );
        let four = circle_cloud(&[0.0, FRAC_PI_2, PI, 3.0 * FRAC_PI_2]);
        assert_eq!(
            epsilon_density_check(&four, &circle, 0.766, 1e-4).unwrap(),
            Density::Dense
        );
        assert!(epsilon_density_check(&four, &circle, 0.1, 0.1).is_err());
        assert!(hausdorff_to_support(&four, &circle, 0.0).is_err());
    }

    #[test]
    fn unknown_when_bracket_straddles() {
        let b = HausdorffBracket {
            lo: 0.09,
            hi: 0.11,
            exact: false,
        };
        assert_eq!(verdict(&b, 0.1), Density::Unknown);
    }
}
