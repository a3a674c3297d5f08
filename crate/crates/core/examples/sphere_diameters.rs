//! 2m - 2 diameters among m points on a 2-sphere, with the root-finder's
//! numbers for odd m.
//!
//! `cargo run --example sphere_diameters`

use lenzkit::constructions::{sphere_diameter_config, OddSphereGeometry};

fn main() -> lenzkit::Result<()> {
    println!("  m  diameters  sphere radius   solver");
    for m in [4, 6, 7, 9, 15, 31, 101] {
        let b = sphere_diameter_config(m)?;
        let solver = match &b.report.solver_stats {
            Some(s) => format!(
                "r = {:.9}, {} iterations, residual {:.1e}",
                s.r_solution, s.iterations, s.final_residual
            ),
            None => "closed form".into(),
        };
        println!(
            "{m:>3}  {:>9}  {:.12}  {solver}",
            b.report.achieved_count, b.radius
        );
    }
    let m = 9;
    let lo = OddSphereGeometry::at(m, 1e-3);
    let hi = OddSphereGeometry::at(m, OddSphereGeometry::upper_beta(m) - 1e-3);
    println!(
        "m = {m}: constraint residual changes sign on the bracket ({:+.3e} .. {:+.3e})",
        lo.residual, hi.residual
    );
    Ok(())
}
