//! Vector arithmetic, tolerance policy, point configurations and the
//! distance-graph machinery every other module builds on.

mod fit;
mod graph;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};

pub use fit::{
    affine_span, check_orthogonal_bipartite, fit_sphere, fit_sphere_in_span, AffineSpan,
    OrthogonalityReport, SphereFit, SPAN_REL_TOL,
};
pub use graph::{
    build_distance_graph, contains_complete_multipartite, diameter_of, is_bipartite_with_witness,
    simple_cycles, BipartiteWitness, DistanceGraph, DistanceKind, MULTIPARTITE_VERTEX_LIMIT,
};

/// A point in `R^d`.
pub type Point = Vec<f64>;

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

pub fn sub(a: &[f64], b: &[f64]) -> Point {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn add(a: &[f64], b: &[f64]) -> Point {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn scale(a: &[f64], s: f64) -> Point {
    a.iter().map(|x| x * s).collect()
}

pub fn dist(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y) * (x - y))
        .sum::<f64>()
        .sqrt()
}

/// Standard basis vector `e_i` of `R^dim`.
pub fn unit_vector(dim: usize, i: usize) -> Point {
    let mut v = vec![0.0; dim];
    v[i] = 1.0;
    v
}

/// A finite list of points in `R^dim` plus free-form metadata.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PointConfig {
    pub dim: usize,
    pub points: Vec<Point>,
    #[serde(default)]
    pub meta: BTreeMap<String, String>,
}

impl PointConfig {
    /// Builds a configuration, checking that every point has `dim` finite
    /// coordinates.
    pub fn new(dim: usize, points: Vec<Point>) -> Result<Self> {
        let config = PointConfig {
            dim,
            points,
            meta: BTreeMap::new(),
        };
        config.validate()?;
        Ok(config)
    }

    pub fn empty(dim: usize) -> Self {
        PointConfig {
            dim,
            points: Vec::new(),
            meta: BTreeMap::new(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.dim == 0 {
            return Err(invalid("dimension must be positive"));
        }
        for (i, p) in self.points.iter().enumerate() {
            if p.len() != self.dim {
                return Err(invalid(format!(
                    "point {i} has {} coordinates, expected {}",
                    p.len(),
                    self.dim
                )));
            }
            if p.iter().any(|x| !x.is_finite()) {
                return Err(invalid(format!("point {i} has a non-finite coordinate")));
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn with_meta(mut self, key: &str, value: impl ToString) -> Self {
        self.meta.insert(key.to_string(), value.to_string());
        self
    }

    /// The sub-configuration on the given indices, in the given order.
    pub fn subset(&self, indices: &[usize]) -> PointConfig {
        PointConfig {
            dim: self.dim,
            points: indices.iter().map(|&i| self.points[i].clone()).collect(),
            meta: BTreeMap::new(),
        }
    }

    /// Pads every point with zeros (or truncates) to `dim` coordinates.
    pub fn lifted(&self, dim: usize) -> PointConfig {
        let points = self
            .points
            .iter()
            .map(|p| {
                let mut q = p.clone();
                q.resize(dim, 0.0);
                q
            })
            .collect();
        PointConfig {
            dim,
            points,
            meta: self.meta.clone(),
        }
    }
}

/// How close two lengths must be to count as equal.
///
/// A distance `x` matches a target `t` when `|x - t| <= eps_abs + eps_rel * t`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TolerancePolicy {
    pub eps_abs: f64,
    pub eps_rel: f64,
}

impl Default for TolerancePolicy {
    fn default() -> Self {
        TolerancePolicy {
            eps_abs: 1e-9,
            eps_rel: 1e-12,
        }
    }
}

impl TolerancePolicy {
    pub fn new(eps_abs: f64, eps_rel: f64) -> Result<Self> {
        if !(eps_abs > 0.0 && eps_rel > 0.0) {
            return Err(invalid("tolerances must be strictly positive"));
        }
        if eps_abs >= 1e-3 {
            return Err(invalid("eps_abs must be below 1e-3"));
        }
        Ok(TolerancePolicy { eps_abs, eps_rel })
    }

    /// Absolute slack allowed around `target`.
    pub fn slack(&self, target: f64) -> f64 {
        self.eps_abs + self.eps_rel * target.abs()
    }

    pub fn matches(&self, length: f64, target: f64) -> bool {
        (length - target).abs() <= self.slack(target)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_ragged_and_nan_points() {
        assert!(PointConfig::new(2, vec![vec![0.0, 1.0], vec![1.0]]).is_err());
        assert!(PointConfig::new(2, vec![vec![0.0, f64::NAN]]).is_err());
        assert!(PointConfig::new(0, vec![]).is_err());
        assert!(PointConfig::new(3, vec![]).unwrap().is_empty());
    }

    #[test]
    fn tolerance_bounds() {
        assert!(TolerancePolicy::new(0.0, 1e-12).is_err());
        assert!(TolerancePolicy::new(1e-3, 1e-12).is_err());
        let tol = TolerancePolicy::default();
        assert!(tol.matches(1.0 + 5e-10, 1.0));
        assert!(!tol.matches(1.0 + 5e-9, 1.0));
    }
}
