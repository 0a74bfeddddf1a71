use std::f64::consts::TAU;

use proptest::prelude::*;
use rand::Rng;
use reachkit::geometry::{
    epsilon_density_check, grid_bracket_with, hausdorff_between_clouds, hausdorff_to_support,
    Density, PointCloud, SupportModel,
};
use reachkit::rng::rng_from_seed;
use reachkit::Execution;

fn cloud_strategy(max: usize) -> impl Strategy<Value = PointCloud> {
    proptest::collection::vec((-5.0f64..5.0, -5.0f64..5.0), 1..max)
        .prop_map(|xy| PointCloud::from_xy(&xy).unwrap())
}

fn circle_cloud(angles: &[f64]) -> PointCloud {
    PointCloud::from_xy(
        &angles
            .iter()
            .map(|t| (t.cos(), t.sin()))
            .collect::<Vec<_>>(),
    )
    .unwrap()
}

proptest! {
    #[test]
    fn hausdorff_is_a_pseudometric(a in cloud_strategy(20), b in cloud_strategy(20), c in cloud_strategy(20)) {
        let ab = hausdorff_between_clouds(&a, &b).unwrap();
        let ba = hausdorff_between_clouds(&b, &a).unwrap();
        let bc = hausdorff_between_clouds(&b, &c).unwrap();
        let ac = hausdorff_between_clouds(&a, &c).unwrap();
        prop_assert_eq!(ab, ba);
        prop_assert!(ac <= ab + bc + 1e-12);
        prop_assert_eq!(hausdorff_between_clouds(&a, &a).unwrap(), 0.0);
    }

    #[test]
    fn exact_circle_value_is_non_increasing_in_n(angles in proptest::collection::vec(0.0..TAU, 2..60)) {
        let mut prev = f64::INFINITY;
        for n in 1..=angles.len() {
            let d = SupportModel::UnitCircle.exact_hausdorff(&circle_cloud(&angles[..n])).unwrap();
            prop_assert!(d <= prev);
            prev = d;
        }
    }
}

#[test]
fn grid_prefix_monotonicity_on_a_ball() {
    let support = SupportModel::Ball {
        center: vec![0.0, 0.0],
        radius: 1.0,
    };
    let delta = 0.02;
    let mut rng = rng_from_seed(4);
    let pts: Vec<(f64, f64)> = (0..200)
        .map(|_| loop {
            let (x, y) = (rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
            if x * x + y * y <= 1.0 {
                break (x, y);
            }
        })
        .collect();
    let full = PointCloud::from_xy(&pts).unwrap();
    let mut prev_hi = f64::INFINITY;
    for n in [5, 20, 50, 100, 200] {
        let b = hausdorff_to_support(&full.prefix(n).unwrap(), &support, delta).unwrap();
        assert!(b.hi <= prev_hi + delta, "n={n}: {b:?}");
        prev_hi = b.hi;
    }
}

#[test]
fn exact_circle_value_lies_in_grid_bracket() {
    let mut rng = rng_from_seed(99);
    for _ in 0..100 {
        let n = rng.random_range(1..=300);
        let angles: Vec<f64> = (0..n).map(|_| rng.random_range(0.0..TAU)).collect();
        let cloud = circle_cloud(&angles);
        let exact = SupportModel::UnitCircle.exact_hausdorff(&cloud).unwrap();
        let b = grid_bracket_with(
            &cloud,
            &SupportModel::UnitCircle,
            1e-3,
            Execution::Sequential,
        )
        .unwrap();
        assert!(b.lo <= exact && exact <= b.hi, "{exact} outside {b:?}");
    }
}

#[test]
fn dense_verdict_means_grid_is_covered() {
    let support = SupportModel::Interval { a: 0.0, b: 1.0 };
    let cloud = PointCloud::from_flat(1, (0..=50).map(|k| k as f64 / 50.0).collect()).unwrap();
    assert_eq!(
        epsilon_density_check(&cloud, &support, 0.02, 0.005).unwrap(),
        Density::Dense
    );
    let grid = support.grid(0.005).unwrap();
    for g in grid.iter() {
        let nearest = cloud
            .iter()
            .map(|p| (p[0] - g[0]).abs())
            .fold(f64::INFINITY, f64::min);
        assert!(nearest <= 0.02);
    }
    let sparse = PointCloud::from_flat(1, vec![0.0, 1.0]).unwrap();
    assert_eq!(
        epsilon_density_check(&sparse, &support, 0.02, 0.005).unwrap(),
        Density::NotDense
    );
}
