//! Unit distance Lenz configuration in R^6, recounted and checked for
//! orthogonality of its circles.
//!
//! `cargo run --example even_unit_lenz -- [n]`

use lenzkit::constructions::lenz_even_unit;
use lenzkit::geom::{
    build_distance_graph, check_orthogonal_bipartite, DistanceKind, TolerancePolicy,
};
use lenzkit::verify::verify_construction;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n: usize = std::env::args().nth(1).map_or(Ok(33), |s| s.parse())?;
    let rep = lenz_even_unit(6, n)?.rotated(7);
    let tol = TolerancePolicy::default();
    let g = build_distance_graph(&rep.config, DistanceKind::UnitDistance, &tol)?;
    println!(
        "n = {n}: {} unit distances (formula {})",
        g.edge_count(),
        rep.expected_count
    );
    let sizes: Vec<usize> = rep.classes.iter().map(Vec::len).collect();
    println!("circle sizes {sizes:?}");
    for i in 0..rep.classes.len() {
        for j in i + 1..rep.classes.len() {
            let (a, b) = (
                rep.config.subset(&rep.classes[i]),
                rep.config.subset(&rep.classes[j]),
            );
            if a.len() < 3 || b.len() < 3 {
                continue;
            }
            let o = check_orthogonal_bipartite(&a, &b, &tol)?;
            println!(
                "  circles {i},{j}: orthogonal {} r^2 + r'^2 - 1 = {:.1e}",
                o.orthogonal, o.radius_identity_residual
            );
        }
    }
    let v = verify_construction(&rep)?;
    println!(
        "verify: achieved {} formula {} match {}",
        v.achieved, v.formula, v.matched
    );
    Ok(())
}
