//! Greedy recovery of a Lenz partition from a raw point cloud.
//!
//! Rounds of seeded RANSAC extract circles (3-point seeds) while a class of
//! at least [`MIN_CIRCLE`] points is found. Every accepted class must share
//! the centre of the first class and have a direction space orthogonal to
//! the others. Leftover points that sit on a 2-sphere through an accepted
//! circle are then absorbed into it (smallest circle first, ties to the
//! class with the smallest index), and finally 4-point seeds look for
//! genuine 2-spheres among what is left.

use rand::{seq::index::sample, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::constructions::BlockKind;
use crate::error::{invalid, Result};
use crate::geom::{
    affine_span, dist, dot, fit_sphere_in_span, norm, scale, sub, AffineSpan, Point, PointConfig,
};

pub const MIN_CIRCLE: usize = 4;
pub const MIN_SPHERE: usize = 5;
const REFIT_ROUNDS: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DetectOptions {
    pub seed: u64,
    /// Seed samples per extraction round.
    pub trials: usize,
}

impl Default for DetectOptions {
    fn default() -> Self {
        DetectOptions {
            seed: 0,
            trials: 256,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FittedBlock {
    pub kind: BlockKind,
    pub center: Point,
    pub radius: f64,
    /// Orthonormal directions of the block's span; for a sphere grown from
    /// a circle the last one is the pole axis.
    pub basis: Vec<Point>,
    /// Largest distance of a member point from the fitted circle or sphere.
    pub residual: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DetectedStructure {
    /// Classes `S_1..S_k`, each sorted, ordered by smallest member.
    pub partition: Vec<Vec<usize>>,
    /// `S_0`, sorted.
    pub residual: Vec<usize>,
    /// One block per class, same order as `partition`.
    pub fitted: Vec<FittedBlock>,
    pub pairwise_orthogonal: bool,
    pub radius_identity_ok: bool,
    pub epsilon_used: f64,
}

struct Class {
    members: Vec<usize>,
    span: AffineSpan,
    center: Point,
    radius: f64,
    residual: f64,
}

impl Class {
    fn kind(&self) -> BlockKind {
        if self.span.dim() == 2 {
            BlockKind::Circle
        } else {
            BlockKind::Sphere2
        }
    }

    fn min_index(&self) -> usize {
        self.members.iter().copied().min().unwrap_or(usize::MAX)
    }
}

struct Detector<'a> {
    points: &'a [Point],
    eps: f64,
    classes: Vec<Class>,
}

impl Detector<'_> {
    fn on_surface(&self, span: &AffineSpan, center: &[f64], radius: f64, p: &[f64]) -> bool {
        span.distance_to(p) <= self.eps && (dist(p, center) - radius).abs() <= self.eps
    }

    /// Centre agrees with the existing classes and directions are
    /// orthogonal to theirs.
    fn compatible(&self, basis: &[Point], center: &[f64], skip: Option<usize>) -> bool {
        self.classes.iter().enumerate().all(|(i, c)| {
            Some(i) == skip
                || (dist(&c.center, center) <= self.eps
                    && basis
                        .iter()
                        .all(|u| c.span.basis.iter().all(|v| dot(u, v).abs() <= self.eps)))
        })
    }

    /// Fits a `k`-dimensional sphere to `seed`, then alternates inlier
    /// collection over `pool` and refitting until the inlier set is
    /// stable.
    fn grow(&self, seed: &[usize], pool: &[usize], k: usize) -> Option<Class> {
        let mut members = seed.to_vec();
        let mut last: Option<Class> = None;
        for _ in 0..REFIT_ROUNDS {
            let pts: Vec<Point> = members.iter().map(|&i| self.points[i].clone()).collect();
            let span = affine_span(&pts, Some(k));
            if span.dim() != k
                || span
                    .singular_values
                    .get(k - 1)
                    .is_none_or(|&s| s <= self.eps)
            {
                return last;
            }
            let fit = fit_sphere_in_span(&pts, &span).ok()?;
            if !self.compatible(&span.basis, &fit.center, None) {
                return last;
            }
            let inliers: Vec<usize> = pool
                .iter()
                .copied()
                .filter(|&i| self.on_surface(&span, &fit.center, fit.radius, &self.points[i]))
                .collect();
            let candidate = Class {
                members: members.clone(),
                span,
                center: fit.center,
                radius: fit.radius,
                residual: fit.residual,
            };
            let stable = inliers == members;
            if candidate.residual <= self.eps && candidate.members.len() >= k + 1 {
                last = Some(candidate);
            }
            if stable || inliers.len() < k + 1 {
                break;
            }
            members = inliers;
        }
        last
    }

    /// Best class over `trials` random `k + 1`-point seeds from `pool`;
    /// ties go to the earliest trial.
    fn ransac(
        &self,
        pool: &[usize],
        k: usize,
        trials: usize,
        rng: &mut ChaCha8Rng,
    ) -> Option<Class> {
        if pool.len() < k + 1 {
            return None;
        }
        let mut best: Option<Class> = None;
        for _ in 0..trials {
            let seed: Vec<usize> = sample(rng, pool.len(), k + 1)
                .into_iter()
                .map(|i| pool[i])
                .collect();
            let mut seed = seed;
            seed.sort_unstable();
            let pts: Vec<Point> = seed.iter().map(|&i| self.points[i].clone()).collect();
            let span = affine_span(&pts, Some(k));
            if span.dim() != k || span.singular_values[k - 1] <= self.eps {
                continue;
            }
            let Ok(fit) = fit_sphere_in_span(&pts, &span) else {
                continue;
            };
            if !self.compatible(&span.basis, &fit.center, None) {
                continue;
            }
            let inliers: Vec<usize> = pool
                .iter()
                .copied()
                .filter(|&i| self.on_surface(&span, &fit.center, fit.radius, &self.points[i]))
                .collect();
            let beats = |n: usize| best.as_ref().is_none_or(|b| n > b.members.len());
            if inliers.len() <= k + 1 || !beats(inliers.len()) {
                continue;
            }
            if let Some(c) = self.grow(&inliers, pool, k) {
                if beats(c.members.len()) {
                    best = Some(c);
                }
            }
        }
        best
    }

    /// Returns the class index and pole direction if `p` lies on a 2-sphere
    /// through an accepted class.
    fn absorber(&self, p: &[f64]) -> Option<(usize, Option<Point>)> {
        let mut best: Option<(usize, Option<Point>)> = None;
        for (i, c) in self.classes.iter().enumerate() {
            if (dist(p, &c.center) - c.radius).abs() > self.eps {
                continue;
            }
            let off = c.span.distance_to(p);
            let choice = match c.kind() {
                BlockKind::Sphere2 if off <= self.eps => Some((i, None)),
                BlockKind::Circle if off > self.eps => {
                    let v = sub(p, &c.center);
                    let in_plane: Point = c.span.basis.iter().fold(vec![0.0; p.len()], |acc, b| {
                        crate::geom::add(&acc, &scale(b, dot(&v, b)))
                    });
                    let w = sub(&v, &in_plane);
                    let axis = scale(&w, 1.0 / norm(&w));
                    self.compatible(&[axis.clone()], &c.center, Some(i))
                        .then_some((i, Some(axis)))
                }
                _ => None,
            };
            let Some(choice) = choice else { continue };
            // a point already inside a sphere's span wins; otherwise the
            // smallest circle, then the smallest member index
            let better = match &best {
                None => true,
                Some((j, axis)) => {
                    let (cur, new) = (&self.classes[*j], c);
                    match (axis.is_none(), choice.1.is_none()) {
                        (true, false) => false,
                        (false, true) => true,
                        _ => {
                            (new.members.len(), new.min_index())
                                < (cur.members.len(), cur.min_index())
                        }
                    }
                }
            };
            if better {
                best = Some(choice);
            }
        }
        best
    }

    fn absorb(&mut self, residual: &mut Vec<usize>) {
        let mut kept = Vec::new();
        for &i in residual.iter() {
            let p = &self.points[i];
            match self.absorber(p) {
                Some((c, axis)) => {
                    let class = &mut self.classes[c];
                    if let Some(axis) = axis {
                        class.span.basis.push(axis);
                    }
                    class.members.push(i);
                    class.members.sort_unstable();
                    let pts: Vec<Point> = class
                        .members
                        .iter()
                        .map(|&m| self.points[m].clone())
                        .collect();
                    class.residual = pts
                        .iter()
                        .map(|q| (dist(q, &class.center) - class.radius).abs())
                        .fold(0.0, f64::max);
                }
                None => kept.push(i),
            }
        }
        *residual = kept;
    }
}

pub fn detect_lenz(config: &PointConfig, epsilon: f64) -> Result<DetectedStructure> {
    detect_lenz_with(config, epsilon, &DetectOptions::default())
}

pub fn detect_lenz_with(
    config: &PointConfig,
    epsilon: f64,
    options: &DetectOptions,
) -> Result<DetectedStructure> {
    if config.is_empty() {
        return Err(invalid("detection needs a nonempty configuration"));
    }
    if !(epsilon > 0.0) || !epsilon.is_finite() {
        return Err(invalid(format!("epsilon must be positive, got {epsilon}")));
    }
    config.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(options.seed);
    let mut det = Detector {
        points: &config.points,
        eps: epsilon,
        classes: Vec::new(),
    };
    let mut residual: Vec<usize> = (0..config.len()).collect();

    if config.dim >= 2 {
        while let Some(c) = det.ransac(&residual, 2, options.trials, &mut rng) {
            if c.members.len() < MIN_CIRCLE {
                break;
            }
            residual.retain(|i| !c.members.contains(i));
            det.classes.push(c);
        }
        det.absorb(&mut residual);
    }
    if config.dim >= 3 {
        while let Some(c) = det.ransac(&residual, 3, options.trials, &mut rng) {
            if c.members.len() < MIN_SPHERE {
                break;
            }
            residual.retain(|i| !c.members.contains(i));
            det.classes.push(c);
        }
    }

    let mut classes = det.classes;
    classes.sort_by_key(Class::min_index);
    let slack = epsilon;
    let mut pairwise_orthogonal = true;
    let mut radius_identity_ok = true;
    for (i, a) in classes.iter().enumerate() {
        for b in &classes[i + 1..] {
            let dots = a
                .span
                .basis
                .iter()
                .flat_map(|u| b.span.basis.iter().map(move |v| dot(u, v).abs()))
                .fold(0.0, f64::max);
            pairwise_orthogonal &= dots <= slack && dist(&a.center, &b.center) <= slack;
            radius_identity_ok &= (a.radius.powi(2) + b.radius.powi(2) - 1.0).abs() <= slack;
        }
    }
    Ok(DetectedStructure {
        partition: classes.iter().map(|c| c.members.clone()).collect(),
        fitted: classes
            .iter()
            .map(|c| FittedBlock {
                kind: c.kind(),
                center: c.center.clone(),
                radius: c.radius,
                basis: c.span.basis.clone(),
                residual: c.residual,
            })
            .collect(),
        residual,
        pairwise_orthogonal,
        radius_identity_ok,
        epsilon_used: epsilon,
    })
}
