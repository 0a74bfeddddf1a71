use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::miniball::{edge_radius, triangle_radius};
use crate::error::{ensure, Error, Result};
use crate::exec::Execution;
use crate::geometry::PointCloud;

/// Slack on closed-ball intersection tests.
pub const BALL_TOLERANCE: f64 = 1e-12;

/// The 2-skeleton of the nerve of equal closed balls around a cloud.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CechComplex {
    pub vertex_count: usize,
    pub edges: Vec<[usize; 2]>,
    pub triangles: Vec<[usize; 3]>,
    pub radius: f64,
}

fn malformed(msg: String) -> Error {
    Error::MalformedComplex(msg)
}

impl CechComplex {
    /// Checks index ranges, strict ordering and downward closure.
    pub fn validate(&self) -> Result<()> {
        let v = self.vertex_count;
        for e in &self.edges {
            if !(e[0] < e[1] && e[1] < v) {
                return Err(malformed(format!(
                    "edge {e:?} is not an increasing pair below {v}"
                )));
            }
        }
        if !self.edges.windows(2).all(|w| w[0] < w[1]) {
            return Err(malformed("edges are not sorted and distinct".into()));
        }
        for t in &self.triangles {
            if !(t[0] < t[1] && t[1] < t[2] && t[2] < v) {
                return Err(malformed(format!(
                    "triangle {t:?} is not an increasing triple below {v}"
                )));
            }
            for face in [[t[0], t[1]], [t[0], t[2]], [t[1], t[2]]] {
                if self.edge_index(face).is_none() {
                    return Err(malformed(format!("triangle {t:?} lacks edge {face:?}")));
                }
            }
        }
        if !self.triangles.windows(2).all(|w| w[0] < w[1]) {
            return Err(malformed("triangles are not sorted and distinct".into()));
        }
        Ok(())
    }

    pub(crate) fn edge_index(&self, e: [usize; 2]) -> Option<usize> {
        self.edges.binary_search(&e).ok()
    }

    /// `V - E + F`.
    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count as i64 - self.edges.len() as i64 + self.triangles.len() as i64
    }

    /// Every simplex on its own line as space-separated vertex indices:
    /// vertices, then edges, then triangles.
    pub fn to_simplex_list(&self) -> String {
        let mut out = String::new();
        for i in 0..self.vertex_count {
            writeln!(out, "{i}").unwrap();
        }
        for [a, b] in &self.edges {
            writeln!(out, "{a} {b}").unwrap();
        }
        for [a, b, c] in &self.triangles {
            writeln!(out, "{a} {b} {c}").unwrap();
        }
        out
    }

    /// Parses [`to_simplex_list`](Self::to_simplex_list) output. Blank lines
    /// and lines starting with `#` are skipped; simplices may appear in any
    /// order but vertices must be `0..V`.
    pub fn from_simplex_list(text: &str, radius: f64) -> Result<Self> {
        let mut vertices = Vec::new();
        let mut edges = Vec::new();
        let mut triangles = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let idx: Vec<usize> = line
                .split_whitespace()
                .map(|t| {
                    t.parse()
                        .map_err(|_| malformed(format!("line {}: bad index {t:?}", lineno + 1)))
                })
                .collect::<Result<_>>()?;
            match idx.as_slice() {
                [a] => vertices.push(*a),
                [a, b] => edges.push([*a, *b]),
                [a, b, c] => triangles.push([*a, *b, *c]),
                _ => {
                    return Err(malformed(format!(
                        "line {}: expected 1 to 3 indices",
                        lineno + 1
                    )))
                }
            }
        }
        vertices.sort_unstable();
        if vertices.iter().enumerate().any(|(i, &v)| i != v) {
            return Err(malformed("vertices are not exactly 0..V".into()));
        }
        edges.sort_unstable();
        triangles.sort_unstable();
        let complex = CechComplex {
            vertex_count: vertices.len(),
            edges,
            triangles,
            radius,
        };
        complex.validate()?;
        Ok(complex)
    }
}

/// Čech complex of closed balls of radius `r`, up to triangles.
pub fn cech_complex(cloud: &PointCloud, r: f64) -> Result<CechComplex> {
    cech_complex_with(cloud, r, Execution::default())
}

pub fn cech_complex_with(cloud: &PointCloud, r: f64, exec: Execution) -> Result<CechComplex> {
    ensure!(
        r.is_finite() && r > 0.0,
        "ball radius must be positive, got {r}"
    );
    let n = cloud.len();
    let limit = r + BALL_TOLERANCE;
    let neighbours: Vec<Vec<usize>> = exec.map(n, |i| {
        let p = cloud.point(i);
        (i + 1..n)
            .filter(|&j| edge_radius(p, cloud.point(j)) <= limit)
            .collect()
    });
    let triangles: Vec<Vec<[usize; 3]>> = exec.map(n, |i| {
        let mut out = Vec::new();
        let ni = &neighbours[i];
        for (a, &j) in ni.iter().enumerate() {
            let nj = &neighbours[j];
            for &k in &ni[a + 1..] {
                if nj.binary_search(&k).is_ok()
                    && triangle_radius(cloud.point(i), cloud.point(j), cloud.point(k)) <= limit
                {
                    out.push([i, j, k]);
                }
            }
        }
        out
    });
    let edges = neighbours
        .iter()
        .enumerate()
        .flat_map(|(i, nb)| nb.iter().map(move |&j| [i, j]))
        .collect();
    Ok(CechComplex {
        vertex_count: n,
        edges,
        triangles: triangles.concat(),
        radius: r,
    })
}
