use serde::{Deserialize, Serialize};

use crate::error::{ensure, Error, Result};

/// A point of R^d with finite coordinates.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<f64>", into = "Vec<f64>")]
pub struct Point(Vec<f64>);

impl Point {
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        ensure!(!coords.is_empty(), "a point needs at least one coordinate");
        ensure!(
            coords.iter().all(|c| c.is_finite()),
            "point coordinates must be finite: {coords:?}"
        );
        Ok(Point(coords))
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[f64] {
        &self.0
    }

    pub fn distance(&self, other: &Point) -> f64 {
        euclidean(&self.0, &other.0)
    }
}

impl TryFrom<Vec<f64>> for Point {
    type Error = Error;

    fn try_from(v: Vec<f64>) -> Result<Self> {
        Point::new(v)
    }
}

impl From<Point> for Vec<f64> {
    fn from(p: Point) -> Self {
        p.0
    }
}

impl AsRef<[f64]> for Point {
    fn as_ref(&self) -> &[f64] {
        &self.0
    }
}

#[inline]
pub fn squared_distance(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum()
}

#[inline]
pub fn euclidean(a: &[f64], b: &[f64]) -> f64 {
    squared_distance(a, b).sqrt()
}

/// An ordered, nonempty list of points sharing one ambient dimension.
///
/// Coordinates are stored row-major in a single buffer.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawCloud", into = "RawCloud")]
pub struct PointCloud {
    dim: usize,
    coords: Vec<f64>,
}

#[derive(Serialize, Deserialize)]
struct RawCloud {
    dim: usize,
    points: Vec<Vec<f64>>,
}

impl TryFrom<RawCloud> for PointCloud {
    type Error = Error;

    fn try_from(raw: RawCloud) -> Result<Self> {
        let points = raw
            .points
            .into_iter()
            .map(Point::new)
            .collect::<Result<Vec<_>>>()?;
        let cloud = PointCloud::from_points(&points)?;
        if cloud.dim != raw.dim {
            return Err(Error::DimensionMismatch {
                expected: raw.dim,
                found: cloud.dim,
            });
        }
        Ok(cloud)
    }
}

impl From<PointCloud> for RawCloud {
    fn from(c: PointCloud) -> Self {
        RawCloud {
            dim: c.dim,
            points: c.iter().map(<[f64]>::to_vec).collect(),
        }
    }
}

impl PointCloud {
    /// Builds a cloud from a flat row-major buffer.
    pub fn from_flat(dim: usize, coords: Vec<f64>) -> Result<Self> {
        ensure!(dim >= 1, "ambient dimension must be at least 1");
        ensure!(!coords.is_empty(), "a point cloud must be nonempty");
        ensure!(
            coords.len().is_multiple_of(dim),
            "buffer of length {} is not a multiple of dim {dim}",
            coords.len()
        );
        ensure!(
            coords.iter().all(|c| c.is_finite()),
            "point coordinates must be finite"
        );
        Ok(PointCloud { dim, coords })
    }

    pub fn from_points(points: &[Point]) -> Result<Self> {
        let first = points
            .first()
            .ok_or_else(|| Error::contract("a point cloud must be nonempty"))?;
        let dim = first.dim();
        let mut coords = Vec::with_capacity(dim * points.len());
        for p in points {
            if p.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: p.dim(),
                });
            }
            coords.extend_from_slice(p.coords());
        }
        Ok(PointCloud { dim, coords })
    }

    /// Convenience constructor for planar clouds.
    pub fn from_xy(points: &[(f64, f64)]) -> Result<Self> {
        let coords = points.iter().flat_map(|&(x, y)| [x, y]).collect();
        PointCloud::from_flat(2, coords)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.coords.len() / self.dim
    }

    /// Always false: clouds are nonempty by construction.
    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn point(&self, i: usize) -> &[f64] {
        &self.coords[i * self.dim..(i + 1) * self.dim]
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = &[f64]> + '_ {
        self.coords.chunks_exact(self.dim)
    }

    pub fn as_flat(&self) -> &[f64] {
        &self.coords
    }

    pub fn to_points(&self) -> Vec<Point> {
        self.iter().map(|c| Point(c.to_vec())).collect()
    }

    /// The first `n` points, or an error if the cloud is shorter.
    pub fn prefix(&self, n: usize) -> Result<PointCloud> {
        ensure!(
            n >= 1 && n <= self.len(),
            "prefix length {n} outside 1..={}",
            self.len()
        );
        Ok(PointCloud {
            dim: self.dim,
            coords: self.coords[..n * self.dim].to_vec(),
        })
    }

    /// Reorders the points; `perm[i]` is the source index of the new point `i`.
    pub fn permuted(&self, perm: &[usize]) -> PointCloud {
        let mut coords = Vec::with_capacity(self.coords.len());
        for &j in perm {
            coords.extend_from_slice(self.point(j));
        }
        PointCloud {
            dim: self.dim,
            coords,
        }
    }
}
