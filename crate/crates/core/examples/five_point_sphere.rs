//! Five points on a sphere with seven diameters, written as a point file.
//!
//! `cargo run --example five_point_sphere -- out.json`

use std::path::PathBuf;

use lenzkit::constructions::five_points_seven_diameters;
use lenzkit::geom::{build_distance_graph, fit_sphere, DistanceKind, TolerancePolicy};
use lenzkit::io::write_config;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let config = five_points_seven_diameters();
    let g = build_distance_graph(&config, DistanceKind::Diameter, &TolerancePolicy::default())?;
    let fit = fit_sphere(&config)?;
    println!("{} points, {} diameters", config.len(), g.edge_count());
    println!(
        "sphere radius {:.12}, fit residual {:.2e}",
        fit.radius, fit.residual
    );
    for (a, b) in &g.edges {
        println!("  diameter {a}-{b}");
    }
    if let Some(path) = std::env::args_os().nth(1).map(PathBuf::from) {
        write_config(&path, &config)?;
        println!("wrote {}", path.display());
    }
    Ok(())
}
