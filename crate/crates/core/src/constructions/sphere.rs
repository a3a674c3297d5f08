//! Diameter configurations on a 2-sphere in `R^3`.

use std::f64::consts::{FRAC_1_SQRT_2, PI};

use super::planar::star_circumradius;
use super::{finish, ConstructionReport, Generator, SolverStats, DIAMETER_SLACK};
use crate::error::{invalid, Error, Result};
use crate::geom::{
    build_distance_graph, diameter_of, dist, DistanceKind, Point, PointConfig, TolerancePolicy,
};

const GRID_SAMPLES: usize = 512;
/// Relative margin kept from both ends of the open parameter interval.
const GRID_MARGIN: f64 = 1e-6;
const MAX_BISECTIONS: usize = 200;

/// Output of [`sphere_diameter_config`]: the report plus the sphere all
/// points lie on (in the output's own coordinates).
#[derive(Debug, Clone, PartialEq)]
pub struct SphereDiameterBuild {
    pub report: ConstructionReport,
    pub center: Point,
    pub radius: f64,
}

/// The odd-`m` construction for one value of the free parameter.
///
/// `x_0..x_k` (`k = m - 4`) sit on the circle `C` of radius `r` in the
/// `xy`-plane, consecutive ones at distance 1, symmetric under `y -> -y`.
/// The parameter is the angular defect `beta = pi - alpha` of the unit
/// chord, so `r = 1 / (2 cos(beta / 2))` and `beta` in `(0, pi/k)` covers
/// `r` in `(1/2, r0)`. The apex is on the `z`-axis at distance 1 from `C`;
/// the last two points are the reflections of the apex in the lines from
/// the sphere centre through the midpoints `a` and `b`.
#[derive(Debug, Clone, PartialEq)]
pub struct OddSphereGeometry {
    pub m: usize,
    pub beta: f64,
    pub r: f64,
    /// `x_0..x_k`, apex, then the two reflected points.
    pub points: Vec<[f64; 3]>,
    /// Height of the sphere centre above the plane of `C`.
    pub center_height: f64,
    pub sphere_radius: f64,
    /// `|x_{m-1} x_m| - 1` in the 1-based labelling.
    pub residual: f64,
    pub apex_to_first: f64,
    pub apex_to_second: f64,
}

impl OddSphereGeometry {
    pub fn upper_beta(m: usize) -> f64 {
        PI / (m - 4) as f64
    }

    /// Upper end `r0 = (2 cos(pi / (2(m-4))))^-1` of the radius interval.
    pub fn upper_radius(m: usize) -> f64 {
        star_circumradius(m - 4)
    }

    pub fn at(m: usize, beta: f64) -> OddSphereGeometry {
        let k = m - 4;
        let r = 1.0 / (2.0 * (beta / 2.0).cos());
        // angle_i = q pi / 2 - t beta with q = 2i - k odd and t = q / 2
        let mut points: Vec<[f64; 3]> = (0..=k)
            .map(|i| {
                let q = 2 * i as i64 - k as i64;
                let phi = q as f64 / 2.0 * beta;
                let (c, s) = if q.rem_euclid(4) == 1 {
                    (phi.sin(), phi.cos())
                } else {
                    (-phi.sin(), -phi.cos())
                };
                [r * c, r * s, 0.0]
            })
            .collect();
        let h = (1.0 - r * r).sqrt();
        let apex = [0.0, 0.0, h];
        let c = (1.0 - 2.0 * r * r) / (2.0 * h);
        let s = h - c;
        let a_x = (points[0][0] + points[k][0]) / 2.0;
        let b_x = (points[1][0] + points[k - 1][0]) / 2.0;
        // reflect the apex (0, h) across the line through (0, c) and (x, 0)
        let reflect = |x: f64| -> [f64; 3] {
            let (ux, uz) = (x, -c);
            let len = (ux * ux + uz * uz).sqrt();
            let (ux, uz) = (ux / len, uz / len);
            let (vx, vz) = (0.0, h - c);
            let proj = vx * ux + vz * uz;
            [2.0 * proj * ux - vx, 0.0, c + 2.0 * proj * uz - vz]
        };
        let first = reflect(a_x);
        let second = reflect(b_x);
        points.push(apex);
        points.push(first);
        points.push(second);
        OddSphereGeometry {
            m,
            beta,
            r,
            residual: dist(&first, &second) - 1.0,
            apex_to_first: dist(&apex, &first),
            apex_to_second: dist(&apex, &second),
            points,
            center_height: c,
            sphere_radius: s,
        }
    }

    fn admissible(&self) -> bool {
        self.apex_to_first <= 1.0 + DIAMETER_SLACK && self.apex_to_second <= 1.0 + DIAMETER_SLACK
    }
}

/// Solves for the odd-`m` parameter: coarse sign-change scan, then
/// bisection on the first bracket whose ends satisfy the apex constraints.
fn solve_odd(m: usize) -> Result<(OddSphereGeometry, SolverStats)> {
    let top = OddSphereGeometry::upper_beta(m);
    let lo = top * GRID_MARGIN;
    let hi = top * (1.0 - GRID_MARGIN);
    let grid: Vec<OddSphereGeometry> = (0..GRID_SAMPLES)
        .map(|j| OddSphereGeometry::at(m, lo + (hi - lo) * j as f64 / (GRID_SAMPLES - 1) as f64))
        .collect();
    let changes: Vec<usize> = (0..GRID_SAMPLES - 1)
        .filter(|&j| grid[j].residual.signum() != grid[j + 1].residual.signum())
        .collect();
    let Some(&j) = changes
        .iter()
        .find(|&&j| grid[j].admissible() && grid[j + 1].admissible())
    else {
        let (min, max) = grid.iter().fold((f64::MAX, f64::MIN), |(a, b), g| {
            (a.min(g.residual), b.max(g.residual))
        });
        return Err(Error::ConstructionFailed(format!(
            "m = {m}: no admissible sign change of the residual on the grid \
             ({} sign changes, residual range [{min:e}, {max:e}])",
            changes.len()
        )));
    };
    let (mut a, mut b) = (grid[j].clone(), grid[j + 1].clone());
    let mut iterations = 0;
    while iterations < MAX_BISECTIONS {
        let mid_beta = 0.5 * (a.beta + b.beta);
        if mid_beta <= a.beta || mid_beta >= b.beta {
            break;
        }
        iterations += 1;
        let mid = OddSphereGeometry::at(m, mid_beta);
        if mid.residual == 0.0 {
            a = mid.clone();
            b = mid;
            break;
        }
        if mid.residual.signum() == a.residual.signum() {
            a = mid;
        } else {
            b = mid;
        }
    }
    let best = if a.residual.abs() <= b.residual.abs() {
        a
    } else {
        b
    };
    if !best.admissible() {
        return Err(Error::ConstructionFailed(format!(
            "m = {m}: apex distances {} and {} exceed 1 at the root",
            best.apex_to_first, best.apex_to_second
        )));
    }
    let stats = SolverStats {
        iterations,
        final_residual: best.residual.abs(),
        r_solution: best.r,
        sign_changes: changes.len(),
    };
    Ok((best, stats))
}

/// `m` points of diameter 1 on a common 2-sphere with `2m - 2` diameters,
/// for every `m >= 4` except 5.
///
/// Even `m`: a regular `(m-1)`-gon of diameter 1 plus the point on its axis
/// at distance 1 from every vertex. Odd `m >= 7`: the root-finding
/// construction of [`OddSphereGeometry`].
pub fn sphere_diameter_config(m: usize) -> Result<SphereDiameterBuild> {
    if m == 5 {
        return Err(Error::Unachievable(
            "5 points on a sphere cannot have 8 diameters".into(),
        ));
    }
    if m < 4 {
        return Err(invalid(format!(
            "sphere diameter construction needs m >= 4, got {m}"
        )));
    }
    let (points, height, radius, stats) = if m % 2 == 0 {
        let k = m - 1;
        let rho = star_circumradius(k);
        let h = (1.0 - rho * rho).sqrt();
        let mut pts: Vec<Point> = (0..k)
            .map(|j| {
                let t = 2.0 * PI * j as f64 / k as f64;
                vec![rho * t.cos(), rho * t.sin(), 0.0]
            })
            .collect();
        pts.push(vec![0.0, 0.0, h]);
        let c = (1.0 - 2.0 * rho * rho) / (2.0 * h);
        (pts, c, h - c, None)
    } else {
        let (geo, stats) = solve_odd(m)?;
        let pts = geo.points.iter().map(|p| p.to_vec()).collect();
        (pts, geo.center_height, geo.sphere_radius, Some(stats))
    };
    let config = PointConfig::new(3, points)?;
    let report = finish(
        Generator::SphereDiam,
        config,
        vec![(0..m).collect()],
        None,
        stats,
    )?;
    Ok(SphereDiameterBuild {
        report,
        center: vec![0.0, 0.0, height],
        radius,
    })
}

/// `m` points of diameter 1 with exactly `m` diameters on the 2-sphere of
/// radius `s >= 1/sqrt 2` centred at the origin.
///
/// Odd `m`: the regular `m`-gon of diameter 1 on a small circle. Even `m`:
/// three mutually unit-distance points `A, B, C` and `m - 3` further points
/// on the short arc from `B` to `C` of the circle of sphere points at
/// distance 1 from `A`. The even case is validated numerically.
pub fn sphere_n_diameter_config(m: usize, s: f64) -> Result<PointConfig> {
    if m < 3 {
        return Err(invalid(format!("needs m >= 3, got {m}")));
    }
    if !(s >= FRAC_1_SQRT_2 - 1e-12) || !s.is_finite() {
        return Err(invalid(format!(
            "sphere radius must be >= 1/sqrt 2, got {s}"
        )));
    }
    let points: Vec<Point> = if m % 2 == 1 {
        let rho = star_circumradius(m);
        let z = (s * s - rho * rho).sqrt();
        (0..m)
            .map(|k| {
                let t = 2.0 * PI * k as f64 / m as f64;
                vec![rho * t.cos(), rho * t.sin(), z]
            })
            .collect()
    } else {
        reuleaux_on_sphere(m, s)
    };
    let config = PointConfig::new(3, points)?;
    if m % 2 == 0 {
        let tol = TolerancePolicy::default();
        let diam = diameter_of(&config)?;
        let count = build_distance_graph(&config, DistanceKind::Diameter, &tol)?.edge_count();
        let off_sphere = config
            .points
            .iter()
            .map(|p| (dist(p, &[0.0, 0.0, 0.0]) - s).abs())
            .fold(0.0, f64::max);
        if (diam - 1.0).abs() > DIAMETER_SLACK || count != m || off_sphere > 1e-12 {
            return Err(Error::ConstructionFailed(format!(
                "spherical Reuleaux placement for m = {m}, s = {s}: diameter {diam}, \
                 {count} diameters, off-sphere {off_sphere:e}"
            )));
        }
    }
    Ok(config.with_meta("generator", "sphere-n-diam"))
}

fn reuleaux_on_sphere(m: usize, s: f64) -> Vec<Point> {
    let rho = 1.0 / 3f64.sqrt();
    let z = (s * s - rho * rho).sqrt();
    let vertex = |t: f64| [rho * t.cos(), rho * t.sin(), z];
    let a = vertex(0.0);
    let b = vertex(2.0 * PI / 3.0);
    let c = vertex(4.0 * PI / 3.0);
    // sphere points at distance 1 from A: x.A = s^2 - 1/2
    let lambda = 1.0 - 1.0 / (2.0 * s * s);
    let q = a.map(|x| lambda * x);
    let e1: [f64; 3] = {
        let v = [b[0] - q[0], b[1] - q[1], b[2] - q[2]];
        let l = dist(&v, &[0.0; 3]);
        v.map(|x| x / l)
    };
    let ahat = a.map(|x| x / s);
    let e2 = [
        ahat[1] * e1[2] - ahat[2] * e1[1],
        ahat[2] * e1[0] - ahat[0] * e1[2],
        ahat[0] * e1[1] - ahat[1] * e1[0],
    ];
    let locus_radius = dist(&b, &q);
    let cq = [c[0] - q[0], c[1] - q[1], c[2] - q[2]];
    let phi_c = (cq[0] * e2[0] + cq[1] * e2[1] + cq[2] * e2[2])
        .atan2(cq[0] * e1[0] + cq[1] * e1[1] + cq[2] * e1[2]);
    let mut points = vec![a.to_vec(), b.to_vec(), c.to_vec()];
    for j in 1..=m - 3 {
        let phi = phi_c * j as f64 / (m - 2) as f64;
        let (cs, sn) = (phi.cos(), phi.sin());
        points.push(
            (0..3)
                .map(|i| q[i] + locus_radius * (cs * e1[i] + sn * e2[i]))
                .collect(),
        );
    }
    points
}

/// Five points on a sphere with seven diameters: the 6-point even
/// construction with one polygon vertex removed.
pub fn five_points_seven_diameters() -> PointConfig {
    let build = sphere_diameter_config(6).expect("m = 6 construction");
    let mut config = build.report.config.clone();
    config.points.remove(0);
    config.meta.clear();
    config.with_meta("generator", "five-point-sphere")
}
