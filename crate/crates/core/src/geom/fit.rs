use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use super::{add, dist, dot, scale, sub, Point, PointConfig, TolerancePolicy};
use crate::error::{Error, Result};

/// Singular values below this fraction of the largest one are treated as
/// zero when deciding the dimension of an affine span.
pub const SPAN_REL_TOL: f64 = 1e-6;

/// An affine subspace given by a base point and an orthonormal basis of its
/// direction space.
#[derive(Debug, Clone, PartialEq)]
pub struct AffineSpan {
    pub origin: Point,
    pub basis: Vec<Point>,
    /// All singular values of the centred point matrix, descending.
    pub singular_values: Vec<f64>,
}

impl AffineSpan {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of `p - origin` in the span basis.
    pub fn coords(&self, p: &[f64]) -> Vec<f64> {
        let v = sub(p, &self.origin);
        self.basis.iter().map(|b| dot(&v, b)).collect()
    }

    pub fn lift(&self, coords: &[f64]) -> Point {
        let mut p = self.origin.clone();
        for (c, b) in coords.iter().zip(&self.basis) {
            for (x, y) in p.iter_mut().zip(b) {
                *x += c * y;
            }
        }
        p
    }

    /// Euclidean distance from `p` to the affine subspace.
    pub fn distance_to(&self, p: &[f64]) -> f64 {
        dist(p, &self.lift(&self.coords(p)))
    }

    /// Keeps only the leading `k` directions.
    pub fn truncated(mut self, k: usize) -> AffineSpan {
        self.basis.truncate(k);
        self
    }
}

/// Principal directions of a point set through its centroid. With
/// `max_dim = None` the dimension is the numerical rank (see
/// [`SPAN_REL_TOL`]); otherwise exactly the leading `max_dim` directions are
/// kept (fewer if the points do not supply them).
pub fn affine_span(points: &[Point], max_dim: Option<usize>) -> AffineSpan {
    let n = points.len();
    let dim = points.first().map_or(0, |p| p.len());
    let mut origin = vec![0.0; dim];
    for p in points {
        for (o, x) in origin.iter_mut().zip(p) {
            *o += x;
        }
    }
    if n > 0 {
        origin.iter_mut().for_each(|o| *o /= n as f64);
    }
    if n < 2 || dim == 0 {
        return AffineSpan {
            origin,
            basis: Vec::new(),
            singular_values: Vec::new(),
        };
    }
    // eigenvectors of the Gram matrix; nalgebra's SVD can return tilted
    // singular vectors when the point matrix has many zero columns
    let centred = DMatrix::from_fn(n, dim, |i, j| points[i][j] - origin[j]);
    let eig = (centred.transpose() * &centred).symmetric_eigen();
    let mut order: Vec<usize> = (0..dim).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[b].total_cmp(&eig.eigenvalues[a]));
    order.truncate(n.min(dim));
    let singular_values: Vec<f64> = order
        .iter()
        .map(|&i| eig.eigenvalues[i].max(0.0).sqrt())
        .collect();
    let top = singular_values.first().copied().unwrap_or(0.0);
    let rank = singular_values
        .iter()
        .take_while(|&&s| s > (SPAN_REL_TOL * top).max(1e-13))
        .count();
    let k = max_dim.map_or(rank, |m| m.min(order.len()));
    let basis = order[..k]
        .iter()
        .map(|&i| eig.eigenvectors.column(i).iter().copied().collect())
        .collect();
    AffineSpan {
        origin,
        basis,
        singular_values,
    }
}

/// Result of a least-squares sphere fit inside an affine span.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SphereFit {
    pub center: Point,
    pub radius: f64,
    /// `max |dist(center, p) - radius|` over the fitted points, measured in the
    /// ambient space.
    pub residual: f64,
    /// Dimension of the span the sphere lives in (1 = point pair, 2 = circle,
    /// 3 = 2-sphere, ...).
    pub span_dim: usize,
    pub basis: Vec<Point>,
}

/// Algebraic least-squares sphere `|y|^2 = 2 c.y + b` in span coordinates.
pub fn fit_sphere_in_span(points: &[Point], span: &AffineSpan) -> Result<SphereFit> {
    let k = span.dim();
    if k == 0 {
        return Err(Error::DegenerateInput("points span no direction".into()));
    }
    if points.len() < k + 1 {
        return Err(Error::DegenerateInput(format!(
            "{} points cannot determine a sphere in a {k}-dimensional span",
            points.len()
        )));
    }
    let coords: Vec<Vec<f64>> = points.iter().map(|p| span.coords(p)).collect();
    let a = DMatrix::from_fn(points.len(), k + 1, |i, j| {
        if j < k {
            2.0 * coords[i][j]
        } else {
            1.0
        }
    });
    let rhs = DVector::from_fn(points.len(), |i, _| dot(&coords[i], &coords[i]));
    let qr = a.qr();
    let r = qr.r();
    let diag = r.diagonal().abs();
    if diag.min() <= 1e-14 * diag.max() {
        return Err(Error::DegenerateInput(
            "sphere fit is rank deficient".into(),
        ));
    }
    let sol = r
        .solve_upper_triangular(&(qr.q().transpose() * rhs))
        .ok_or_else(|| Error::DegenerateInput("sphere fit is rank deficient".into()))?;
    let c: Vec<f64> = (0..k).map(|j| sol[j]).collect();
    let r2 = sol[k] + dot(&c, &c);
    if !(r2 > 0.0) || !r2.is_finite() {
        return Err(Error::DegenerateInput(
            "sphere fit has no real radius".into(),
        ));
    }
    let radius = r2.sqrt();
    let center = span.lift(&c);
    let residual = points
        .iter()
        .map(|p| (dist(p, &center) - radius).abs())
        .fold(0.0, f64::max);
    Ok(SphereFit {
        center,
        radius,
        residual,
        span_dim: k,
        basis: span.basis.clone(),
    })
}

/// Least-squares sphere through a configuration, restricted to the affine
/// span of its points. For `span dim + 1` points this is the circumsphere.
pub fn fit_sphere(config: &PointConfig) -> Result<SphereFit> {
    if config.len() < 2 {
        return Err(Error::InvalidInput(
            "sphere fitting needs at least 2 points".into(),
        ));
    }
    config.validate()?;
    let span = affine_span(&config.points, None);
    if span.dim() == 0 {
        return Err(Error::DegenerateInput("all points coincide".into()));
    }
    fit_sphere_in_span(&config.points, &span)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OrthogonalityReport {
    pub orthogonal: bool,
    pub r_a: f64,
    pub r_b: f64,
    /// `|r_a^2 + r_b^2 - 1|`.
    pub radius_identity_residual: f64,
    pub common_center: Point,
    /// Largest `|u.v|` between direction vectors of the two spans.
    pub max_direction_dot: f64,
    /// Distance between the two fitted sphere centres.
    pub center_gap: f64,
}

/// Checks the structure forced on two point sets whose cross distances are
/// all 1: orthogonal spans, spheres about the common point, and
/// `r_a^2 + r_b^2 = 1`.
pub fn check_orthogonal_bipartite(
    a: &PointConfig,
    b: &PointConfig,
    tol: &TolerancePolicy,
) -> Result<OrthogonalityReport> {
    if a.len() < 3 || b.len() < 3 {
        return Err(Error::PreconditionViolation(
            "both sets need at least 3 points".into(),
        ));
    }
    if a.dim != b.dim {
        return Err(Error::InvalidInput("dimension mismatch".into()));
    }
    a.validate()?;
    b.validate()?;
    for (i, p) in a.points.iter().enumerate() {
        for (j, q) in b.points.iter().enumerate() {
            let d = dist(p, q);
            if !tol.matches(d, 1.0) {
                return Err(Error::PreconditionViolation(format!(
                    "cross pair ({i}, {j}) has length {d}, not 1"
                )));
            }
        }
    }
    let span_a = affine_span(&a.points, None);
    let span_b = affine_span(&b.points, None);
    if span_a.dim() < 2 || span_b.dim() < 2 {
        return Err(Error::DegenerateInput(
            "a set is collinear and cannot lie on a sphere with 3 points".into(),
        ));
    }
    let fit_a = fit_sphere_in_span(&a.points, &span_a)?;
    let fit_b = fit_sphere_in_span(&b.points, &span_b)?;
    let max_direction_dot = span_a
        .basis
        .iter()
        .flat_map(|u| span_b.basis.iter().map(move |v| dot(u, v).abs()))
        .fold(0.0, f64::max);
    let center_gap = dist(&fit_a.center, &fit_b.center);
    let common_center = scale(&add(&fit_a.center, &fit_b.center), 0.5);
    let radius_identity_residual = (fit_a.radius.powi(2) + fit_b.radius.powi(2) - 1.0).abs();
    let slack = tol.slack(1.0);
    let orthogonal = max_direction_dot <= slack
        && center_gap <= slack
        && radius_identity_residual <= slack
        && fit_a.residual <= slack
        && fit_b.residual <= slack;
    Ok(OrthogonalityReport {
        orthogonal,
        r_a: fit_a.radius,
        r_b: fit_b.radius,
        radius_identity_residual,
        common_center,
        max_direction_dot,
        center_gap,
    })
}
