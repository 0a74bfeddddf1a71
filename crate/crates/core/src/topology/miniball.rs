use serde::{Deserialize, Serialize};

use crate::error::{ensure, Result};
use crate::geometry::{euclidean, squared_distance, Point};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MiniBall {
    pub center: Point,
    pub radius: f64,
}

/// Largest point count accepted by [`min_enclosing_ball`].
pub const MAX_MINIBALL_POINTS: usize = 12;

/// Centre of the smallest sphere through `pts` within their affine hull, or
/// `None` when the points are affinely dependent.
fn circumcenter(pts: &[&[f64]]) -> Option<Vec<f64>> {
    let p0 = pts[0];
    let k = pts.len() - 1;
    if k == 0 {
        return Some(p0.to_vec());
    }
    let u: Vec<Vec<f64>> = pts[1..]
        .iter()
        .map(|p| p.iter().zip(p0).map(|(a, b)| a - b).collect())
        .collect();
    let dot = |a: &[f64], b: &[f64]| a.iter().zip(b).map(|(x, y)| x * y).sum::<f64>();
    // Solve G λ = b / 2 with G_ij = u_i · u_j, b_i = |u_i|²; the centre is p0 + Σ λ_i u_i.
    let mut a: Vec<Vec<f64>> = (0..k)
        .map(|i| {
            let mut row: Vec<f64> = (0..k).map(|j| dot(&u[i], &u[j])).collect();
            row.push(0.5 * dot(&u[i], &u[i]));
            row
        })
        .collect();
    let scale = (0..k).map(|i| a[i][i]).fold(0.0, f64::max);
    for col in 0..k {
        let piv = (col..k).max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))?;
        if a[piv][col].abs() <= 1e-12 * scale {
            return None;
        }
        a.swap(col, piv);
        let pivot = a[col].clone();
        for (row, r) in a.iter_mut().enumerate() {
            if row != col {
                let f = r[col] / pivot[col];
                for (x, p) in r[col..=k].iter_mut().zip(&pivot[col..=k]) {
                    *x -= f * p;
                }
            }
        }
    }
    let mut center = p0.to_vec();
    for i in 0..k {
        let lambda = a[i][k] / a[i][i];
        for (c, ui) in center.iter_mut().zip(&u[i]) {
            *c += lambda * ui;
        }
    }
    Some(center)
}

/// Smallest closed ball containing a handful of points.
///
/// The optimal ball is the circumball of some subset of at most `d + 1`
/// points, so the minimum over those subsets of the largest distance from
/// the subset's circumcentre to every input point is the optimal radius.
pub fn min_enclosing_ball(pts: &[&[f64]]) -> Result<MiniBall> {
    ensure!(!pts.is_empty(), "enclosing ball of no points");
    ensure!(
        pts.len() <= MAX_MINIBALL_POINTS,
        "at most {MAX_MINIBALL_POINTS} points, got {}",
        pts.len()
    );
    let d = pts[0].len();
    ensure!(
        pts.iter().all(|p| p.len() == d),
        "points of mixed dimension"
    );
    let max_support = (d + 1).min(pts.len());
    let mut best: Option<(Vec<f64>, f64)> = None;
    let mut subset = Vec::with_capacity(max_support);
    for mask in 1u32..(1 << pts.len()) {
        if mask.count_ones() as usize > max_support {
            continue;
        }
        subset.clear();
        subset.extend(
            (0..pts.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| pts[i]),
        );
        let Some(c) = circumcenter(&subset) else {
            continue;
        };
        let r = pts
            .iter()
            .map(|p| squared_distance(p, &c))
            .fold(0.0, f64::max)
            .sqrt();
        if best.as_ref().is_none_or(|(_, b)| r < *b) {
            best = Some((c, r));
        }
    }
    let (center, radius) = best.expect("singletons always have a circumcentre");
    Ok(MiniBall {
        center: Point::new(center)?,
        radius,
    })
}

/// Radius of the smallest ball containing a triangle: half the longest side
/// when the triangle is not acute, the circumradius otherwise.
pub(crate) fn triangle_radius(a: &[f64], b: &[f64], c: &[f64]) -> f64 {
    let ab = squared_distance(a, b);
    let bc = squared_distance(b, c);
    let ca = squared_distance(c, a);
    let longest = ab.max(bc).max(ca);
    if 2.0 * longest >= ab + bc + ca {
        return 0.5 * longest.sqrt();
    }
    // 4 area² = |u|²|v|² - (u·v)² for edges u, v from a.
    let uv: f64 = a
        .iter()
        .zip(b)
        .zip(c)
        .map(|((x, y), z)| (y - x) * (z - x))
        .sum();
    let four_area_sq = ab * ca - uv * uv;
    (ab * bc * ca / (4.0 * four_area_sq)).sqrt()
}

pub(crate) fn edge_radius(a: &[f64], b: &[f64]) -> f64 {
    0.5 * euclidean(a, b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    #[test]
    fn small_examples() {
        let b = min_enclosing_ball(&[&[0.0, 0.0]]).unwrap();
        assert_eq!((b.center.coords(), b.radius), (&[0.0, 0.0][..], 0.0));
        let b = min_enclosing_ball(&[&[0.0, 0.0], &[2.0, 0.0]]).unwrap();
        assert_eq!((b.center.coords(), b.radius), (&[1.0, 0.0][..], 1.0));
        let h = 3f64.sqrt() / 2.0;
        let b = min_enclosing_ball(&[&[0.0, 0.0], &[1.0, 0.0], &[0.5, h]]).unwrap();
        assert_abs_diff_eq!(b.radius, 1.0 / 3f64.sqrt(), epsilon = 1e-15);
        // Obtuse: diametral ball of the long side.
        let b = min_enclosing_ball(&[&[0.0, 0.0], &[4.0, 0.0], &[2.0, 0.5]]).unwrap();
        assert_abs_diff_eq!(b.radius, 2.0, epsilon = 1e-15);
        // Duplicates and collinear points.
        let b = min_enclosing_ball(&[&[1.0, 1.0], &[1.0, 1.0], &[3.0, 1.0]]).unwrap();
        assert_abs_diff_eq!(b.radius, 1.0, epsilon = 1e-15);
        let b = min_enclosing_ball(&[&[0.0], &[5.0], &[2.0]]).unwrap();
        assert_abs_diff_eq!(b.radius, 2.5, epsilon = 1e-15);
    }

    #[test]
    fn equilateral_radius_matches_grid_search() {
        let h = 3f64.sqrt() / 2.0;
        let pts = [[0.0, 0.0], [1.0, 0.0], [0.5, h]];
        let mut best = f64::INFINITY;
        let steps = 2000;
        for i in 0..=steps {
            for j in 0..=steps {
                let c = [i as f64 / steps as f64, j as f64 / steps as f64];
                let r = pts.iter().map(|p| euclidean(p, &c)).fold(0.0, f64::max);
                best = best.min(r);
            }
        }
        assert_abs_diff_eq!(best, 0.57735, epsilon = 1e-3);
        assert_abs_diff_eq!(
            triangle_radius(&pts[0], &pts[1], &pts[2]),
            0.57735,
            epsilon = 1e-5
        );
    }

    proptest! {
        #[test]
        fn ball_encloses_and_matches_triangle_formula(
            coords in proptest::collection::vec(-10.0f64..10.0, 6),
        ) {
            let (a, b, c) = (&coords[0..2], &coords[2..4], &coords[4..6]);
            let ball = min_enclosing_ball(&[a, b, c]).unwrap();
            for p in [a, b, c] {
                prop_assert!(euclidean(p, ball.center.coords()) <= ball.radius + 1e-12 * (1.0 + ball.radius));
            }
            let fast = triangle_radius(a, b, c);
            prop_assert!((fast - ball.radius).abs() <= 1e-9 * (1.0 + ball.radius), "{} vs {}", fast, ball.radius);
        }

        #[test]
        fn tetrahedron_ball_encloses(coords in proptest::collection::vec(-1.0f64..1.0, 12)) {
            let pts: Vec<&[f64]> = coords.chunks(3).collect();
            let ball = min_enclosing_ball(&pts).unwrap();
            for p in &pts {
                prop_assert!(euclidean(p, ball.center.coords()) <= ball.radius + 1e-12);
            }
            let centroid: Vec<f64> = (0..3).map(|k| pts.iter().map(|p| p[k]).sum::<f64>() / 4.0).collect();
            let around_centroid = pts.iter().map(|p| euclidean(p, &centroid)).fold(0.0, f64::max);
            prop_assert!(ball.radius <= around_centroid + 1e-12);
            for p in &pts[1..] {
                prop_assert!(ball.radius + 1e-12 >= 0.5 * euclidean(pts[0], p));
            }
        }
    }
}
