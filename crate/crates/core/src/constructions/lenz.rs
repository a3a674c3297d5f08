//! Lenz frames and the optimised Lenz assemblies.

use std::f64::consts::FRAC_1_SQRT_2;

use serde::{Deserialize, Serialize};

use super::planar::{arc_with_one_diameter, squares_on_circle, star_circumradius, star_polygon};
use super::sphere::{sphere_diameter_config, sphere_n_diameter_config};
use super::{finish, ConstructionReport, Generator};
use crate::error::{invalid, Error, Result};
use crate::formulas::{
    d4_split_value, optimize_diam_split_d4, optimize_unit_partition_even, PartitionPlan,
};
use crate::geom::{dist, dot, norm, sub, unit_vector, Point, PointConfig};

const FRAME_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BlockKind {
    Circle,
    Sphere2,
}

impl BlockKind {
    pub fn span_dim(&self) -> usize {
        match self {
            BlockKind::Circle => 2,
            BlockKind::Sphere2 => 3,
        }
    }
}

/// One component of a frame: a circle or 2-sphere given by centre, radius
/// and an orthonormal basis of its span. For a sphere the third basis
/// vector is the pole axis.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FrameBlock {
    pub kind: BlockKind,
    pub basis: Vec<Point>,
    pub center: Point,
    pub radius: f64,
}

impl FrameBlock {
    /// `center + sum_i local_i * basis_i`; `local` is not rescaled.
    pub fn embed(&self, local: &[f64]) -> Point {
        let mut p = self.center.clone();
        for (c, b) in local.iter().zip(&self.basis) {
            for (x, y) in p.iter_mut().zip(b) {
                *x += c * y;
            }
        }
        p
    }
}

/// Orthogonal decomposition carrying a Lenz configuration.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LenzFrame {
    pub dim: usize,
    pub blocks: Vec<FrameBlock>,
    /// Labelled points such as the poles `p+` and `p-` of a sphere block.
    #[serde(default)]
    pub poles: Vec<(String, Point)>,
}

impl LenzFrame {
    fn circle(dim: usize, axes: (usize, usize), radius: f64) -> FrameBlock {
        FrameBlock {
            kind: BlockKind::Circle,
            basis: vec![unit_vector(dim, axes.0), unit_vector(dim, axes.1)],
            center: vec![0.0; dim],
            radius,
        }
    }

    /// `d/2` circles of radius `1/sqrt 2` in the coordinate planes
    /// `(0,1), (2,3), ...`.
    pub fn even(d: usize) -> Result<LenzFrame> {
        if d % 2 != 0 || d < 6 {
            return Err(invalid(format!("even frame needs even d >= 6, got {d}")));
        }
        Ok(LenzFrame {
            dim: d,
            blocks: (0..d / 2)
                .map(|i| Self::circle(d, (2 * i, 2 * i + 1), FRAC_1_SQRT_2))
                .collect(),
            poles: Vec::new(),
        })
    }

    /// Two orthogonal circles in `R^4` with radii `r1` and `sqrt(1 - r1^2)`.
    pub fn d4(r1: f64) -> Result<LenzFrame> {
        if !(r1 > 0.0 && r1 < 1.0) {
            return Err(invalid("r1 must lie in (0, 1)"));
        }
        Ok(LenzFrame {
            dim: 4,
            blocks: vec![
                Self::circle(4, (0, 1), r1),
                Self::circle(4, (2, 3), (1.0 - r1 * r1).sqrt()),
            ],
            poles: Vec::new(),
        })
    }

    /// Odd `d = 2p + 1 >= 7`: the sphere of radius `1/sqrt 2` in
    /// `V_0 + V_p` first (pole axis `e_0`), then circles in `V_1..V_{p-1}`,
    /// where `V_i` is spanned by `e_{2i-1}, e_{2i}`.
    pub fn odd(d: usize) -> Result<LenzFrame> {
        if d % 2 == 0 || d < 7 {
            return Err(invalid(format!("odd frame needs odd d >= 7, got {d}")));
        }
        let p = d / 2;
        let mut blocks = vec![FrameBlock {
            kind: BlockKind::Sphere2,
            basis: vec![
                unit_vector(d, 2 * p - 1),
                unit_vector(d, 2 * p),
                unit_vector(d, 0),
            ],
            center: vec![0.0; d],
            radius: FRAC_1_SQRT_2,
        }];
        blocks.extend((1..p).map(|i| Self::circle(d, (2 * i - 1, 2 * i), FRAC_1_SQRT_2)));
        let pole = |s: f64| {
            let mut v = vec![0.0; d];
            v[0] = s * FRAC_1_SQRT_2;
            v
        };
        Ok(LenzFrame {
            dim: d,
            blocks,
            poles: vec![("p+".into(), pole(1.0)), ("p-".into(), pole(-1.0))],
        })
    }

    /// Strong frame in `R^5`: sphere of radius `r1` in `V_0 + V_1`
    /// (coordinates 1, 2, pole axis 0) and circle of radius
    /// `sqrt(1 - r1^2)` in `V_2` (coordinates 3, 4).
    pub fn d5(r1: f64) -> Result<LenzFrame> {
        if !(r1 > 0.0 && r1 < 1.0) {
            return Err(invalid("r1 must lie in (0, 1)"));
        }
        let sphere = FrameBlock {
            kind: BlockKind::Sphere2,
            basis: vec![unit_vector(5, 1), unit_vector(5, 2), unit_vector(5, 0)],
            center: vec![0.0; 5],
            radius: r1,
        };
        let pole = |s: f64| {
            let mut v = vec![0.0; 5];
            v[0] = s * r1;
            v
        };
        Ok(LenzFrame {
            dim: 5,
            blocks: vec![sphere, Self::circle(5, (3, 4), (1.0 - r1 * r1).sqrt())],
            poles: vec![("p+".into(), pole(1.0)), ("p-".into(), pole(-1.0))],
        })
    }

    pub(crate) fn mapped(&self, f: impl Fn(&[f64]) -> Point) -> LenzFrame {
        let origin = f(&vec![0.0; self.dim]);
        let map_dir = |v: &Point| sub(&f(v), &origin);
        LenzFrame {
            dim: self.dim,
            blocks: self
                .blocks
                .iter()
                .map(|b| FrameBlock {
                    kind: b.kind,
                    basis: b.basis.iter().map(map_dir).collect(),
                    center: f(&b.center),
                    radius: b.radius,
                })
                .collect(),
            poles: self.poles.iter().map(|(l, p)| (l.clone(), f(p))).collect(),
        }
    }

    /// Orthonormal, mutually orthogonal block bases; total span dimension at
    /// most `dim`; common centre; `r_i^2 + r_j^2 = 1`; all radii `1/sqrt 2`
    /// for `dim >= 6`.
    pub fn check_invariants(&self) -> Result<()> {
        let fail = |m: String| Err(Error::PreconditionViolation(m));
        let total: usize = self.blocks.iter().map(|b| b.basis.len()).sum();
        if total > self.dim {
            return fail(format!("blocks span {total} > {} dimensions", self.dim));
        }
        let all: Vec<(usize, &Point)> = self
            .blocks
            .iter()
            .enumerate()
            .flat_map(|(i, b)| b.basis.iter().map(move |v| (i, v)))
            .collect();
        for (a, (_, u)) in all.iter().enumerate() {
            if (norm(u) - 1.0).abs() > FRAME_TOL {
                return fail("basis vector is not unit length".into());
            }
            for (_, v) in &all[a + 1..] {
                if dot(u, v).abs() > FRAME_TOL {
                    return fail("basis vectors are not orthogonal".into());
                }
            }
        }
        for (i, bi) in self.blocks.iter().enumerate() {
            if bi.basis.len() != bi.kind.span_dim() {
                return fail(format!("block {i} basis has wrong size"));
            }
            for bj in &self.blocks[i + 1..] {
                if dist(&bi.center, &bj.center) > FRAME_TOL {
                    return fail("blocks do not share a centre".into());
                }
                if (bi.radius.powi(2) + bj.radius.powi(2) - 1.0).abs() > FRAME_TOL {
                    return fail("radius identity r_i^2 + r_j^2 = 1 fails".into());
                }
            }
            if self.dim >= 6 && (bi.radius - FRAC_1_SQRT_2).abs() > FRAME_TOL {
                return fail(format!("block {i} radius is not 1/sqrt 2"));
            }
        }
        Ok(())
    }
}

/// Embeds per-block local point lists and returns the configuration plus
/// the index classes.
fn assemble(
    frame: &LenzFrame,
    parts: &[(usize, Vec<Point>)],
) -> Result<(PointConfig, Vec<Vec<usize>>)> {
    let mut points = Vec::new();
    let mut classes = Vec::new();
    for (block, locals) in parts {
        let start = points.len();
        points.extend(locals.iter().map(|l| frame.blocks[*block].embed(l)));
        classes.push((start..points.len()).collect());
    }
    Ok((PointConfig::new(frame.dim, points)?, classes))
}

fn planar(config: PointConfig) -> Vec<Point> {
    config.points
}

/// Even `d >= 6`: circles of radius `1/sqrt 2` filled with square packings,
/// sizes from [`optimize_unit_partition_even`].
pub fn lenz_even_unit(d: usize, n: usize) -> Result<ConstructionReport> {
    if n < 1 {
        return Err(invalid("n must be at least 1"));
    }
    let frame = LenzFrame::even(d)?;
    let (plan, _) = optimize_unit_partition_even(d, n)?;
    let parts = plan
        .sizes
        .iter()
        .enumerate()
        .filter(|(_, &k)| k > 0)
        .map(|(i, &k)| Ok((i, planar(squares_on_circle(k)?))))
        .collect::<Result<Vec<_>>>()?;
    let (config, mut classes) = assemble(&frame, &parts)?;
    let mut it = classes.drain(..);
    let classes = plan
        .sizes
        .iter()
        .map(|&k| {
            if k > 0 {
                it.next().unwrap()
            } else {
                Vec::new()
            }
        })
        .collect();
    finish(
        Generator::EvenUnit { d },
        config,
        classes,
        Some(frame),
        None,
    )
}

/// Even `d >= 6`, `n >= d`: balanced sizes, each circle an arc with one
/// diameter.
pub fn lenz_even_diam(d: usize, n: usize) -> Result<ConstructionReport> {
    let frame = LenzFrame::even(d)?;
    if n < d {
        return Err(invalid(format!("needs n >= d = {d}, got {n}")));
    }
    let plan = PartitionPlan::balanced(d / 2, n);
    let parts = plan
        .sizes
        .iter()
        .enumerate()
        .map(|(i, &k)| Ok((i, planar(arc_with_one_diameter(k, FRAC_1_SQRT_2)?))))
        .collect::<Result<Vec<_>>>()?;
    let (config, classes) = assemble(&frame, &parts)?;
    finish(
        Generator::EvenDiam { d },
        config,
        classes,
        Some(frame),
        None,
    )
}

/// `R^4`, `n >= 6`: a star polygon on the smaller circle `C1` and an arc
/// with one diameter on `C2`.
pub fn lenz_d4_diam(n: usize) -> Result<ConstructionReport> {
    let (n1, _, value) = optimize_diam_split_d4(n)?;
    // the star polygon needs an odd class; an odd optimum always exists
    let n1 = if n1 % 2 == 1 {
        n1
    } else {
        (3..=n - 2)
            .find(|&k| k % 2 == 1 && d4_split_value(k, n - k) == value)
            .ok_or_else(|| Error::ConstructionFailed(format!("no odd optimal split for n = {n}")))?
    };
    let r1 = star_circumradius(n1);
    let frame = LenzFrame::d4(r1)?;
    let r2 = frame.blocks[1].radius;
    let parts = vec![
        (0, planar(star_polygon(n1)?)),
        (1, planar(arc_with_one_diameter(n - n1, r2)?)),
    ];
    let (config, classes) = assemble(&frame, &parts)?;
    finish(Generator::D4Diam, config, classes, Some(frame), None)
}

/// Odd `d >= 7`, `n >= 2d`: arcs on `p - 1` circles, and on the sphere
/// block an equatorial arc of `ceil(n/p) - 1` points plus the pole `p+`.
/// The sphere class comes first in point order.
pub fn lenz_odd_diam(d: usize, n: usize) -> Result<ConstructionReport> {
    let frame = LenzFrame::odd(d)?;
    if n < 2 * d {
        return Err(invalid(format!("needs n >= 2d = {}, got {n}", 2 * d)));
    }
    let p = d / 2;
    let plan = PartitionPlan::balanced(p, n);
    // balanced() lists the larger classes first, so sizes[0] = ceil(n/p)
    let sphere_size = plan.sizes[0];
    let mut equator = planar(arc_with_one_diameter(sphere_size - 1, FRAC_1_SQRT_2)?);
    for q in &mut equator {
        q.push(0.0);
    }
    equator.push(vec![0.0, 0.0, FRAC_1_SQRT_2]);
    let mut parts = vec![(0, equator)];
    for (i, &k) in plan.sizes[1..].iter().enumerate() {
        parts.push((i + 1, planar(arc_with_one_diameter(k, FRAC_1_SQRT_2)?)));
    }
    let (config, classes) = assemble(&frame, &parts)?;
    finish(Generator::OddDiam { d }, config, classes, Some(frame), None)
}

/// Which of the two strong Lenz constructions to use in `R^5`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum D5Strategy {
    /// Star polygon when `n` is not a multiple of 4, else sphere-heavy.
    Auto,
    /// `2 n1 - 2` diameters on the sphere, one on the circle.
    SphereHeavy,
    /// Star polygon on the circle, `n1` diameters on a large sphere.
    StarPolygon,
}

impl D5Strategy {
    pub fn name(&self) -> &'static str {
        match self {
            D5Strategy::Auto => "auto",
            D5Strategy::SphereHeavy => "sphere-heavy",
            D5Strategy::StarPolygon => "star-polygon",
        }
    }
}

impl std::str::FromStr for D5Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(D5Strategy::Auto),
            "sphere-heavy" => Ok(D5Strategy::SphereHeavy),
            "star-polygon" => Ok(D5Strategy::StarPolygon),
            _ => Err(invalid(format!("unknown strategy {s:?}"))),
        }
    }
}

/// `R^5`, `n >= 6`, `n != 8`: `t_2(n) + n` diameters.
pub fn lenz_d5_diam(n: usize, strategy: D5Strategy) -> Result<ConstructionReport> {
    if n == 8 {
        return Err(Error::Unachievable(
            "n = 8 in R^5 is unachievable by the strong Lenz constructions".into(),
        ));
    }
    if n < 6 {
        return Err(invalid(format!("needs n >= 6, got {n}")));
    }
    let resolved = match strategy {
        D5Strategy::Auto if n % 4 == 0 => D5Strategy::SphereHeavy,
        D5Strategy::Auto => D5Strategy::StarPolygon,
        s => s,
    };
    let (frame, parts) = match resolved {
        D5Strategy::SphereHeavy => {
            let n1 = [n / 2 + 1, n.div_ceil(2) + 1]
                .into_iter()
                .find(|&k| k >= 4 && k != 5 && n - k >= 2)
                .ok_or_else(|| invalid(format!("no admissible sphere class for n = {n}")))?;
            let build = sphere_diameter_config(n1)?;
            let frame = LenzFrame::d5(build.radius)?;
            let sphere_pts: Vec<Point> = build
                .report
                .config
                .points
                .iter()
                .map(|p| sub(p, &build.center))
                .collect();
            let r2 = frame.blocks[1].radius;
            let circle_pts = planar(arc_with_one_diameter(n - n1, r2)?);
            (frame, vec![(0, sphere_pts), (1, circle_pts)])
        }
        D5Strategy::StarPolygon => {
            if n % 4 == 0 {
                return Err(invalid(format!(
                    "star-polygon strategy needs n not divisible by 4, got {n}"
                )));
            }
            let n2 = if (n / 2) % 2 == 1 {
                n / 2
            } else {
                n.div_ceil(2)
            };
            let r2 = star_circumradius(n2);
            let r1 = (1.0 - r2 * r2).sqrt();
            let frame = LenzFrame::d5(r1)?;
            let sphere_pts = sphere_n_diameter_config(n - n2, r1)?.points;
            (frame, vec![(0, sphere_pts), (1, planar(star_polygon(n2)?))])
        }
        D5Strategy::Auto => unreachable!("resolved above"),
    };
    let (config, classes) = assemble(&frame, &parts)?;
    let mut report = finish(
        Generator::D5Diam { strategy },
        config,
        classes,
        Some(frame),
        None,
    )?;
    report
        .config
        .meta
        .insert("resolved_strategy".into(), resolved.name().into());
    Ok(report)
}

/// Weak Lenz frame in `R^5` (`V_0` = coordinate 0, `V_1` = 1, 2,
/// `V_2` = 3, 4): sphere `Sigma_1` of radius `r1` about `o`, circle `C1`
/// of radius `s1 = sqrt(r1^2 - r^2)` about `o'` parallel to `V_1`, sphere
/// `Sigma_2` of radius `s2 = sqrt(r2^2 + r^2)` about `o'`, and circle `C2`
/// of radius `r2 = sqrt(1 - r1^2)` in `V_2`. `o'` sits at `-r e_0`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WeakLenzFrameD5 {
    pub r1: f64,
    pub r: f64,
    pub r2: f64,
    pub s1: f64,
    pub s2: f64,
    pub o: Point,
    pub o_prime: Point,
    /// `p1+`, `p1-` (poles of `Sigma_1`), then `p2+`, `p2-`.
    pub poles: Vec<(String, Point)>,
}

impl WeakLenzFrameD5 {
    pub fn c1_point(&self, t: f64) -> Point {
        let mut p = self.o_prime.clone();
        p[1] += self.s1 * t.cos();
        p[2] += self.s1 * t.sin();
        p
    }

    pub fn c2_point(&self, t: f64) -> Point {
        vec![0.0, 0.0, 0.0, self.r2 * t.cos(), self.r2 * t.sin()]
    }

    /// Point of `Sigma_2` in direction `(cos(lat), sin(lat) cos(lon),
    /// sin(lat) sin(lon))` of `V_0 + V_2`.
    pub fn sigma2_point(&self, lat: f64, lon: f64) -> Point {
        let mut p = self.o_prime.clone();
        p[0] += self.s2 * lat.cos();
        p[3] += self.s2 * lat.sin() * lon.cos();
        p[4] += self.s2 * lat.sin() * lon.sin();
        p
    }

    pub fn sigma1_point(&self, lat: f64, lon: f64) -> Point {
        vec![
            self.r1 * lat.cos(),
            self.r1 * lat.sin() * lon.cos(),
            self.r1 * lat.sin() * lon.sin(),
            0.0,
            0.0,
        ]
    }

    /// Largest `| |xy| - 1 |` over a `samples x samples` grid of `x` on `C1`
    /// and `y` on `Sigma_2`.
    pub fn cross_distance_error(&self, samples: usize) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..samples {
            let x = self.c1_point(i as f64 * 2.0 * std::f64::consts::PI / samples as f64);
            for j in 0..samples {
                let lat = j as f64 * std::f64::consts::PI / (samples.max(2) - 1) as f64;
                let lon = 0.7 + j as f64 * 2.3;
                let y = self.sigma2_point(lat, lon);
                worst = worst.max((dist(&x, &y) - 1.0).abs());
            }
        }
        worst
    }
}

pub fn weak_lenz_frame_d5(r1: f64, r: f64) -> Result<WeakLenzFrameD5> {
    if !(r1 > 0.0 && r1 < 1.0) {
        return Err(invalid(format!("r1 must lie in (0, 1), got {r1}")));
    }
    if !(r >= 0.0 && r < r1) {
        return Err(invalid(format!("r must lie in [0, r1), got {r}")));
    }
    let r2 = (1.0 - r1 * r1).sqrt();
    let s1 = (r1 * r1 - r * r).sqrt();
    let s2 = (r2 * r2 + r * r).sqrt();
    let o = vec![0.0; 5];
    let mut o_prime = vec![0.0; 5];
    o_prime[0] = -r;
    let axis = |h: f64| {
        let mut v = vec![0.0; 5];
        v[0] = h;
        v
    };
    Ok(WeakLenzFrameD5 {
        r1,
        r,
        r2,
        s1,
        s2,
        o,
        poles: vec![
            ("p1+".into(), axis(r1)),
            ("p1-".into(), axis(-r1)),
            ("p2+".into(), axis(-r + s2)),
            ("p2-".into(), axis(-r - s2)),
        ],
        o_prime,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn even_unit_examples() {
        assert_eq!(lenz_even_unit(6, 12).unwrap().achieved_count, 60);
        assert_eq!(lenz_even_unit(6, 24).unwrap().achieved_count, 216);
        let r = lenz_even_unit(8, 16).unwrap();
        assert_eq!(r.achieved_count, 112);
        assert_eq!(
            r.classes.iter().map(Vec::len).collect::<Vec<_>>(),
            vec![4, 4, 4, 4]
        );
        r.frame.unwrap().check_invariants().unwrap();
        assert!(lenz_even_unit(7, 12).is_err());
    }

    #[test]
    fn even_diam_examples() {
        assert_eq!(lenz_even_diam(6, 12).unwrap().achieved_count, 51);
        assert_eq!(lenz_even_diam(8, 16).unwrap().achieved_count, 100);
        assert_eq!(lenz_even_diam(6, 6).unwrap().achieved_count, 15);
        assert!(lenz_even_diam(6, 5).is_err());
    }

    #[test]
    fn d4_examples() {
        assert_eq!(lenz_d4_diam(8).unwrap().achieved_count, 21);
        assert_eq!(lenz_d4_diam(7).unwrap().achieved_count, 16);
        assert_eq!(lenz_d4_diam(9).unwrap().achieved_count, 26);
        lenz_d4_diam(9)
            .unwrap()
            .frame
            .unwrap()
            .check_invariants()
            .unwrap();
    }

    #[test]
    fn odd_examples() {
        assert_eq!(lenz_odd_diam(7, 14).unwrap().achieved_count, 72);
        assert_eq!(lenz_odd_diam(7, 20).unwrap().achieved_count, 133 + 7 + 2);
        assert_eq!(lenz_odd_diam(9, 20).unwrap().achieved_count, 158);
        let r = lenz_odd_diam(7, 13);
        assert!(r.is_err(), "n < 2d is outside the generator's domain");
        lenz_odd_diam(9, 30)
            .unwrap()
            .frame
            .unwrap()
            .check_invariants()
            .unwrap();
    }

    #[test]
    fn d5_examples() {
        assert_eq!(
            lenz_d5_diam(10, D5Strategy::Auto).unwrap().achieved_count,
            35
        );
        assert_eq!(
            lenz_d5_diam(7, D5Strategy::StarPolygon)
                .unwrap()
                .achieved_count,
            19
        );
        let r = lenz_d5_diam(12, D5Strategy::SphereHeavy).unwrap();
        assert_eq!(r.achieved_count, 48);
        assert_eq!(r.classes[0].len(), 7);
        r.frame.unwrap().check_invariants().unwrap();
        assert!(matches!(
            lenz_d5_diam(8, D5Strategy::Auto),
            Err(Error::Unachievable(_))
        ));
        assert!(matches!(
            lenz_d5_diam(12, D5Strategy::StarPolygon),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn weak_frame_examples() {
        let f = weak_lenz_frame_d5(FRAC_1_SQRT_2, 0.0).unwrap();
        assert!((f.s1 - FRAC_1_SQRT_2).abs() < 1e-15 && (f.s2 - FRAC_1_SQRT_2).abs() < 1e-15);
        assert_eq!(f.o, f.o_prime);
        let f = weak_lenz_frame_d5(0.8, 0.3).unwrap();
        assert!((f.s1 - 0.55f64.sqrt()).abs() < 1e-15);
        assert!((f.s2 - 0.45f64.sqrt()).abs() < 1e-15);
        assert!((f.s1 * f.s1 + f.s2 * f.s2 - 1.0).abs() < 1e-12);
        let f = weak_lenz_frame_d5(0.6, 0.59).unwrap();
        assert!((f.s1 - 0.109).abs() < 1e-3);
        assert!(f.cross_distance_error(16) < 1e-12);
        assert!(weak_lenz_frame_d5(1.0, 0.0).is_err());
        assert!(weak_lenz_frame_d5(0.5, 0.5).is_err());
    }
}
