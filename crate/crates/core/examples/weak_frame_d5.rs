//! The weak Lenz frame in R^5: two spheres and two circles whose cross
//! distances are all 1.
//!
//! `cargo run --example weak_frame_d5`

use lenzkit::constructions::weak_lenz_frame_d5;
use lenzkit::geom::dist;

fn main() -> lenzkit::Result<()> {
    for (r1, r) in [(0.5, 0.0), (0.6, 0.2), (0.8, 0.5)] {
        let f = weak_lenz_frame_d5(r1, r)?;
        println!(
            "r1 = {r1}, r = {r}: r2 = {:.6}, s1 = {:.6}, s2 = {:.6}, max |cross distance - 1| = {:.1e}",
            f.r2,
            f.s1,
            f.s2,
            f.cross_distance_error(24)
        );
        let p = f.sigma1_point(0.3, 1.1);
        let q = f.c2_point(2.0);
        println!("  sample Sigma1-C2 distance {:.15}", dist(&p, &q));
    }
    Ok(())
}
