//! Recovering the Lenz partition of a rotated, perturbed configuration.
//!
//! `cargo run --example detect_structure`

use lenzkit::constructions::{lenz_odd_diam, perturb, random_orthogonal};
use lenzkit::geom::PointConfig;
use lenzkit::verify::detect_lenz;

fn main() -> lenzkit::Result<()> {
    let rep = lenz_odd_diam(7, 30)?.rotated(11);
    let noisy = perturb(&rep.config, 1e-9, 3)?;
    let s = detect_lenz(&noisy, 1e-6)?;
    println!(
        "generator classes {:?}",
        rep.classes.iter().map(Vec::len).collect::<Vec<_>>()
    );
    for (class, block) in s.partition.iter().zip(&s.fitted) {
        println!(
            "  {:?} of {} points, radius {:.9}, residual {:.1e}",
            block.kind,
            class.len(),
            block.radius,
            block.residual
        );
    }
    println!(
        "residual {:?}, orthogonal {}, radius identities {}",
        s.residual, s.pairwise_orthogonal, s.radius_identity_ok
    );

    let cloud: Vec<Vec<f64>> = random_orthogonal(6, 5)
        .into_iter()
        .chain(random_orthogonal(6, 6))
        .collect();
    let s = detect_lenz(&PointConfig::new(6, cloud)?, 1e-6)?;
    println!(
        "12 generic points: {} classes, {} residual",
        s.partition.len(),
        s.residual.len()
    );
    Ok(())
}
