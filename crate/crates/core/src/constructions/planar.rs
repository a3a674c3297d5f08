use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, PI};

use crate::error::{invalid, Error, Result};
use crate::geom::{dist, Point, PointConfig};

/// Minimum gap between a cross-square chord and length 1.
const CROSS_CHORD_GAP: f64 = 1e-6;
const BASE_ROTATION: f64 = 1.0;
const ROTATION_RETRY_STEP: f64 = 1e-3;
const ROTATION_RETRIES: usize = 100;

/// Circumradius of the regular `m`-gon (`m` odd) whose longest diagonal is 1.
pub fn star_circumradius(m: usize) -> f64 {
    1.0 / (2.0 * (PI / (2.0 * m as f64)).cos())
}

/// `m` points on the circle of radius `1/sqrt 2` with `m` unit distances if
/// `4 | m`, else `m - 1`: whole inscribed squares plus part of one more.
/// Square `j` is turned by `j * phi`; `phi` starts at 1 radian and is nudged
/// until no chord between different squares is near length 1.
pub fn squares_on_circle(m: usize) -> Result<PointConfig> {
    if m < 1 {
        return Err(invalid("squares_on_circle needs m >= 1"));
    }
    for attempt in 0..=ROTATION_RETRIES {
        let phi = BASE_ROTATION + attempt as f64 * ROTATION_RETRY_STEP;
        let (points, square_of): (Vec<Point>, Vec<usize>) = (0..m)
            .map(|i| {
                let (j, k) = (i / 4, i % 4);
                let t = j as f64 * phi + k as f64 * FRAC_PI_2;
                (vec![FRAC_1_SQRT_2 * t.cos(), FRAC_1_SQRT_2 * t.sin()], j)
            })
            .unzip();
        let clash = (0..m).any(|a| {
            (a + 1..m).any(|b| {
                square_of[a] != square_of[b]
                    && (dist(&points[a], &points[b]) - 1.0).abs() <= CROSS_CHORD_GAP
            })
        });
        if !clash {
            return Ok(PointConfig::new(2, points)?
                .with_meta("generator", "squares")
                .with_meta("rotation", format!("{phi}")));
        }
    }
    Err(Error::ConstructionFailed(format!(
        "no square rotation separates cross chords from 1 for m = {m}"
    )))
}

/// Vertices of the regular `m`-gon (`m` odd) scaled to diameter 1; its
/// diameter graph is an `m`-cycle.
pub fn star_polygon(m: usize) -> Result<PointConfig> {
    if m < 3 || m % 2 == 0 {
        return Err(invalid(format!(
            "star polygon needs odd m >= 3, got {m} (even m gives at most m - 1 diameters)"
        )));
    }
    let radius = star_circumradius(m);
    let points = (0..m)
        .map(|k| {
            let t = 2.0 * PI * k as f64 / m as f64;
            vec![radius * t.cos(), radius * t.sin()]
        })
        .collect();
    Ok(PointConfig::new(2, points)?.with_meta("generator", "star"))
}

/// `m` points on the circle of given radius spread over the arc cut off by
/// a chord of length 1, both ends included, so exactly one pair is at
/// distance 1 and every other pair is shorter.
pub fn arc_with_one_diameter(m: usize, radius: f64) -> Result<PointConfig> {
    if m < 2 {
        return Err(invalid("arc needs at least 2 points"));
    }
    if !(2.0 * radius >= 1.0) || !radius.is_finite() {
        return Err(invalid(format!("arc radius must be >= 1/2, got {radius}")));
    }
    let half = (0.5 / radius).min(1.0).asin();
    let points = (0..m)
        .map(|k| {
            let t = -half + 2.0 * half * k as f64 / (m - 1) as f64;
            vec![radius * t.cos(), radius * t.sin()]
        })
        .collect();
    Ok(PointConfig::new(2, points)?.with_meta("generator", "arc"))
}
