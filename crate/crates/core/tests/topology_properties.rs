use std::f64::consts::TAU;

use rand::seq::SliceRandom;
use rand::Rng;
use reachkit::geometry::{BettiVector, PointCloud};
use reachkit::rng::{rng_from_seed, SimRng};
use reachkit::topology::{
    betti_numbers, cech_complex, cech_complex_with, second_betti, CechComplex,
};
use reachkit::Execution;

fn union_find_components(c: &CechComplex) -> usize {
    let mut parent: Vec<usize> = (0..c.vertex_count).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for &[a, b] in &c.edges {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        parent[ra] = rb;
    }
    (0..c.vertex_count)
        .filter(|&v| find(&mut parent, v) == v)
        .count()
}

fn random_cloud(rng: &mut SimRng, max: usize) -> PointCloud {
    let n = rng.random_range(1..=max);
    let xy: Vec<(f64, f64)> = (0..n)
        .map(|_| (rng.random::<f64>(), rng.random::<f64>()))
        .collect();
    PointCloud::from_xy(&xy).unwrap()
}

#[test]
fn components_and_euler_poincare() {
    let mut rng = rng_from_seed(1);
    for _ in 0..1000 {
        let cloud = random_cloud(&mut rng, 12);
        let r = rng.random_range(0.01..0.6);
        let c = cech_complex(&cloud, r).unwrap();
        let b = betti_numbers(&c).unwrap();
        assert_eq!(b.b0, union_find_components(&c));
        let b2 = second_betti(&c).unwrap() as i64;
        assert_eq!(b.b0 as i64 - b.b1 as i64 + b2, c.euler_characteristic());
    }
}

#[test]
fn complexes_grow_with_radius() {
    let mut rng = rng_from_seed(2);
    for _ in 0..200 {
        let cloud = random_cloud(&mut rng, 15);
        let r1 = rng.random_range(0.01..0.5);
        let r2 = r1 + rng.random_range(0.0..0.3);
        let small = cech_complex(&cloud, r1).unwrap();
        let large = cech_complex(&cloud, r2).unwrap();
        assert!(small
            .edges
            .iter()
            .all(|e| large.edges.binary_search(e).is_ok()));
        assert!(small
            .triangles
            .iter()
            .all(|t| large.triangles.binary_search(t).is_ok()));
    }
}

#[test]
fn betti_numbers_ignore_labels() {
    let mut rng = rng_from_seed(3);
    for _ in 0..200 {
        let cloud = random_cloud(&mut rng, 20);
        let r = rng.random_range(0.05..0.4);
        let mut perm: Vec<usize> = (0..cloud.len()).collect();
        perm.shuffle(&mut rng);
        let a = betti_numbers(&cech_complex(&cloud, r).unwrap()).unwrap();
        let b = betti_numbers(&cech_complex(&cloud.permuted(&perm), r).unwrap()).unwrap();
        assert_eq!(a, b);
    }
}

#[test]
fn execution_policies_build_the_same_complex() {
    let mut rng = rng_from_seed(4);
    let cloud = random_cloud(&mut rng, 300);
    let a = cech_complex_with(&cloud, 0.08, Execution::Sequential).unwrap();
    let b = cech_complex_with(&cloud, 0.08, Execution::Parallel).unwrap();
    assert_eq!(a, b);
    a.validate().unwrap();
}

/// Random circle clouds whose largest angular gap keeps the Hausdorff
/// distance `2 sin(gap / 4)` strictly below `ε / 2`.
#[test]
fn dense_circle_clouds_have_circle_homology() {
    let mut rng = rng_from_seed(5);
    for _ in 0..500 {
        let eps: f64 = rng.random_range(0.1..0.49);
        let r = rng.random_range(eps..0.5);
        let max_gap = 4.0 * (eps / 4.0).asin() * 0.999;
        let mut angles = vec![0.0];
        while TAU - angles.last().unwrap() > max_gap {
            let next = angles.last().unwrap() + rng.random_range(0.05 * max_gap..max_gap);
            if next >= TAU {
                break;
            }
            angles.push(next);
        }
        let xy: Vec<_> = angles.iter().map(|t| (t.cos(), t.sin())).collect();
        let c = cech_complex(&PointCloud::from_xy(&xy).unwrap(), r).unwrap();
        assert_eq!(
            betti_numbers(&c).unwrap(),
            BettiVector::new(1, 1),
            "eps={eps} r={r} n={}",
            xy.len()
        );
    }
}
