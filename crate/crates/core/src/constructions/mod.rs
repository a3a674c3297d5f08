//! Generators for circle, sphere and Lenz configurations.
//!
//! Every generator that returns a [`ConstructionReport`] recounts its output
//! with [`build_distance_graph`] before returning; a build whose recount
//! differs from the target count is reported as
//! [`Error::ConstructionFailed`] rather than returned.

mod lenz;
mod planar;
mod sphere;

use nalgebra::DMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::formulas::{diam_formula, unit_formula_even};
use crate::geom::{
    build_distance_graph, diameter_of, dot, DistanceKind, Point, PointConfig, TolerancePolicy,
};

pub use lenz::{
    lenz_d4_diam, lenz_d5_diam, lenz_even_diam, lenz_even_unit, lenz_odd_diam, weak_lenz_frame_d5,
    BlockKind, D5Strategy, FrameBlock, LenzFrame, WeakLenzFrameD5,
};
pub use planar::{arc_with_one_diameter, squares_on_circle, star_circumradius, star_polygon};
pub use sphere::{
    five_points_seven_diameters, sphere_diameter_config, sphere_n_diameter_config,
    OddSphereGeometry, SphereDiameterBuild,
};

/// Diameter-kind outputs must have diameter within this of 1.
pub const DIAMETER_SLACK: f64 = 1e-9;

/// The generator (and its parameters other than the point count) that
/// produced a configuration.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "generator", rename_all = "kebab-case")]
pub enum Generator {
    EvenUnit { d: usize },
    EvenDiam { d: usize },
    D4Diam,
    OddDiam { d: usize },
    D5Diam { strategy: D5Strategy },
    SphereDiam,
    SphereNDiam { radius: f64 },
    Squares,
    Star,
    Arc { radius: f64 },
}

impl Generator {
    pub fn name(&self) -> &'static str {
        match self {
            Generator::EvenUnit { .. } => "even-unit",
            Generator::EvenDiam { .. } => "even-diam",
            Generator::D4Diam => "d4-diam",
            Generator::OddDiam { .. } => "odd-diam",
            Generator::D5Diam { .. } => "d5-diam",
            Generator::SphereDiam => "sphere-diam",
            Generator::SphereNDiam { .. } => "sphere-n-diam",
            Generator::Squares => "squares",
            Generator::Star => "star",
            Generator::Arc { .. } => "arc",
        }
    }

    pub fn distance_kind(&self) -> DistanceKind {
        match self {
            Generator::EvenUnit { .. } | Generator::Squares => DistanceKind::UnitDistance,
            _ => DistanceKind::Diameter,
        }
    }

    /// Ambient dimension of the generator's output.
    pub fn dim(&self) -> usize {
        match *self {
            Generator::EvenUnit { d } | Generator::EvenDiam { d } | Generator::OddDiam { d } => d,
            Generator::D4Diam => 4,
            Generator::D5Diam { .. } => 5,
            Generator::SphereDiam | Generator::SphereNDiam { .. } => 3,
            Generator::Squares | Generator::Star | Generator::Arc { .. } => 2,
        }
    }

    /// The count the construction is designed to reach on `n` points, taken
    /// from the closed-form formulas (never from the generator itself).
    pub fn expected_count(&self, n: usize) -> Result<u64> {
        let n64 = n as u64;
        Ok(match *self {
            Generator::EvenUnit { d } => unit_formula_even(d, n)?.value,
            Generator::EvenDiam { d } | Generator::OddDiam { d } => diam_formula(d, n)?.value,
            Generator::D4Diam => diam_formula(4, n)?.value,
            Generator::D5Diam { .. } => diam_formula(5, n)?.value,
            Generator::SphereDiam => {
                if n < 4 {
                    return Err(invalid("sphere diameter count needs n >= 4"));
                }
                2 * n64 - 2
            }
            Generator::SphereNDiam { .. } | Generator::Star => n64,
            Generator::Squares => {
                if n % 4 == 0 {
                    n64
                } else {
                    n64.saturating_sub(1)
                }
            }
            Generator::Arc { .. } => 1,
        })
    }

    /// Runs the generator on `n` points.
    pub fn build(&self, n: usize) -> Result<ConstructionReport> {
        match *self {
            Generator::EvenUnit { d } => lenz_even_unit(d, n),
            Generator::EvenDiam { d } => lenz_even_diam(d, n),
            Generator::D4Diam => lenz_d4_diam(n),
            Generator::OddDiam { d } => lenz_odd_diam(d, n),
            Generator::D5Diam { strategy } => lenz_d5_diam(n, strategy),
            Generator::SphereDiam => sphere_diameter_config(n).map(|b| b.report),
            Generator::SphereNDiam { radius } => {
                let config = sphere_n_diameter_config(n, radius)?;
                finish(*self, config, vec![(0..n).collect()], None, None)
            }
            Generator::Squares => {
                let config = squares_on_circle(n)?;
                finish(*self, config, vec![(0..n).collect()], None, None)
            }
            Generator::Star => {
                let config = star_polygon(n)?;
                finish(*self, config, vec![(0..n).collect()], None, None)
            }
            Generator::Arc { radius } => {
                let config = arc_with_one_diameter(n, radius)?;
                finish(*self, config, vec![(0..n).collect()], None, None)
            }
        }
    }
}

/// Diagnostics of the root-finding sphere construction.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolverStats {
    pub iterations: usize,
    pub final_residual: f64,
    pub r_solution: f64,
    /// Sign changes of the residual seen on the coarse grid.
    pub sign_changes: usize,
}

/// A generated configuration together with its target and recounted totals.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConstructionReport {
    pub generator: Generator,
    pub config: PointConfig,
    pub expected_count: u64,
    pub achieved_count: u64,
    pub kind: DistanceKind,
    /// Point indices of each frame component, in frame block order.
    pub classes: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub frame: Option<LenzFrame>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub solver_stats: Option<SolverStats>,
}

impl ConstructionReport {
    /// Applies a seeded random orthogonal map to the points and the frame.
    pub fn rotated(&self, seed: u64) -> ConstructionReport {
        let q = random_orthogonal(self.config.dim, seed);
        let mut out = self.clone();
        out.config.points = self.config.points.iter().map(|p| apply(&q, p)).collect();
        out.config
            .meta
            .insert("rotation_seed".into(), seed.to_string());
        if let Some(frame) = &self.frame {
            out.frame = Some(frame.mapped(|p| apply(&q, p)));
        }
        out
    }
}

/// Recounts `config` and packages it; fails if the count or (for diameter
/// kinds) the diameter is off.
pub(crate) fn finish(
    generator: Generator,
    mut config: PointConfig,
    classes: Vec<Vec<usize>>,
    frame: Option<LenzFrame>,
    solver_stats: Option<SolverStats>,
) -> Result<ConstructionReport> {
    let kind = generator.distance_kind();
    let n = config.len();
    let expected_count = generator.expected_count(n)?;
    let tol = TolerancePolicy::default();
    let graph = build_distance_graph(&config, kind, &tol)?;
    let achieved_count = graph.edge_count() as u64;
    if kind == DistanceKind::Diameter && n >= 2 {
        let diam = diameter_of(&config)?;
        if (diam - 1.0).abs() > DIAMETER_SLACK {
            return Err(Error::ConstructionFailed(format!(
                "{} on {n} points has diameter {diam}",
                generator.name()
            )));
        }
    }
    if achieved_count != expected_count {
        return Err(Error::ConstructionFailed(format!(
            "{} on {n} points: recount {achieved_count}, expected {expected_count}",
            generator.name()
        )));
    }
    config
        .meta
        .insert("generator".into(), generator.name().into());
    config.meta.insert("n".into(), n.to_string());
    match generator {
        Generator::EvenUnit { d } | Generator::EvenDiam { d } | Generator::OddDiam { d } => {
            config.meta.insert("d".into(), d.to_string());
        }
        Generator::D5Diam { strategy } => {
            config
                .meta
                .insert("strategy".into(), strategy.name().into());
        }
        Generator::SphereNDiam { radius } | Generator::Arc { radius } => {
            config
                .meta
                .insert("radius".into(), format!("{radius:.17e}"));
        }
        _ => {}
    }
    Ok(ConstructionReport {
        generator,
        config,
        expected_count,
        achieved_count,
        kind,
        classes,
        frame,
        solver_stats,
    })
}

/// Haar-distributed orthogonal matrix from the QR factorisation of a seeded
/// Gaussian matrix. Rows of the returned vector are matrix rows.
pub fn random_orthogonal(dim: usize, seed: u64) -> Vec<Vec<f64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g = DMatrix::from_fn(dim, dim, |_, _| rng.sample::<f64, _>(StandardNormal));
    let qr = g.qr();
    let mut q = qr.q();
    let r = qr.r();
    for j in 0..dim {
        if r[(j, j)] < 0.0 {
            for i in 0..dim {
                q[(i, j)] = -q[(i, j)];
            }
        }
    }
    (0..dim)
        .map(|i| (0..dim).map(|j| q[(i, j)]).collect())
        .collect()
}

fn apply(m: &[Vec<f64>], p: &[f64]) -> Point {
    m.iter().map(|row| dot(row, p)).collect()
}

/// Moves every point by a seeded pseudo-random displacement drawn uniformly
/// from the ball of radius `magnitude`.
pub fn perturb(config: &PointConfig, magnitude: f64, seed: u64) -> Result<PointConfig> {
    if !(magnitude >= 0.0) || !magnitude.is_finite() {
        return Err(invalid("perturbation magnitude must be finite and >= 0"));
    }
    if magnitude == 0.0 {
        return Ok(config.clone());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let dim = config.dim;
    let points = config
        .points
        .iter()
        .map(|p| {
            let dir: Vec<f64> = (0..dim).map(|_| rng.sample(StandardNormal)).collect();
            let len = dot(&dir, &dir).sqrt().max(f64::MIN_POSITIVE);
            let u: f64 = rng.random();
            let step = magnitude * u.powf(1.0 / dim as f64) / len;
            p.iter().zip(&dir).map(|(x, v)| x + step * v).collect()
        })
        .collect();
    let mut out = config.clone();
    out.points = points;
    out.meta
        .insert("perturbation".into(), format!("{magnitude:e}"));
    out.meta
        .insert("perturbation_seed".into(), seed.to_string());
    Ok(out)
}
