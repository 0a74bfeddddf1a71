//! Nearest-neighbour distance queries.
//!
//! [`BruteForce`] is the reference path. [`KdTree`] is an accelerated path
//! that must return the same distances; the tests check the two against each
//! other.

use super::point::{squared_distance, PointCloud};

pub trait NearestDistance: Sync {
    /// Distance from `query` to the closest point of the indexed cloud.
    fn nearest_distance(&self, query: &[f64]) -> f64;
}

pub struct BruteForce<'a> {
    cloud: &'a PointCloud,
}

impl<'a> BruteForce<'a> {
    pub fn new(cloud: &'a PointCloud) -> Self {
        BruteForce { cloud }
    }
}

impl NearestDistance for BruteForce<'_> {
    fn nearest_distance(&self, query: &[f64]) -> f64 {
        self.cloud
            .iter()
            .map(|p| squared_distance(p, query))
            .fold(f64::INFINITY, f64::min)
            .sqrt()
    }
}

/// Balanced kd-tree stored implicitly in a permutation of point indices.
pub struct KdTree<'a> {
    cloud: &'a PointCloud,
    order: Vec<usize>,
}

impl<'a> KdTree<'a> {
    pub fn new(cloud: &'a PointCloud) -> Self {
        let mut order: Vec<usize> = (0..cloud.len()).collect();
        build(cloud, &mut order, 0);
        KdTree { cloud, order }
    }

    fn search(&self, lo: usize, hi: usize, depth: usize, q: &[f64], best: &mut f64) {
        if lo >= hi {
            return;
        }
        let mid = lo + (hi - lo) / 2;
        let p = self.cloud.point(self.order[mid]);
        let d2 = squared_distance(p, q);
        if d2 < *best {
            *best = d2;
        }
        let axis = depth % self.cloud.dim();
        let diff = q[axis] - p[axis];
        let (near, far) = if diff < 0.0 {
            ((lo, mid), (mid + 1, hi))
        } else {
            ((mid + 1, hi), (lo, mid))
        };
        self.search(near.0, near.1, depth + 1, q, best);
        if diff * diff < *best {
            self.search(far.0, far.1, depth + 1, q, best);
        }
    }
}

fn build(cloud: &PointCloud, idx: &mut [usize], depth: usize) {
    if idx.len() <= 1 {
        return;
    }
    let axis = depth % cloud.dim();
    let mid = idx.len() / 2;
    idx.select_nth_unstable_by(mid, |&a, &b| {
        cloud.point(a)[axis]
            .total_cmp(&cloud.point(b)[axis])
            .then(a.cmp(&b))
    });
    let (left, right) = idx.split_at_mut(mid);
    build(cloud, left, depth + 1);
    build(cloud, &mut right[1..], depth + 1);
}

impl NearestDistance for KdTree<'_> {
    fn nearest_distance(&self, query: &[f64]) -> f64 {
        let mut best = f64::INFINITY;
        self.search(0, self.order.len(), 0, query, &mut best);
        best.sqrt()
    }
}

/// Picks the kd-tree for larger low-dimensional clouds and brute force otherwise.
pub fn index_for(cloud: &PointCloud) -> Box<dyn NearestDistance + '_> {
    if cloud.len() >= 32 && cloud.dim() <= 8 {
        Box::new(KdTree::new(cloud))
    } else {
        Box::new(BruteForce::new(cloud))
    }
}
