//! Unit distance graphs of even-d Lenz configurations contain K_p(3) but no
//! K_(p+1)(3); an odd cycle certifies that a diameter graph is not bipartite.
//!
//! `cargo run --release --example multipartite_free`

use lenzkit::constructions::{lenz_even_unit, star_polygon};
use lenzkit::geom::{
    build_distance_graph, contains_complete_multipartite, is_bipartite_with_witness, DistanceKind,
    TolerancePolicy,
};

fn main() -> lenzkit::Result<()> {
    let tol = TolerancePolicy::default();
    for n in [12, 18, 24] {
        let rep = lenz_even_unit(6, n)?;
        let g = build_distance_graph(&rep.config, DistanceKind::UnitDistance, &tol)?;
        println!(
            "R^6, n = {n}: K_3(3) {}, K_4(3) {}",
            contains_complete_multipartite(&g, 3, 3)?,
            contains_complete_multipartite(&g, 4, 3)?
        );
    }
    let star = star_polygon(7)?;
    let g = build_distance_graph(&star, DistanceKind::Diameter, &tol)?;
    let w = is_bipartite_with_witness(&g);
    println!(
        "7-gon diameter graph: bipartite {}, odd cycle {:?}",
        w.bipartite, w.odd_cycle
    );
    Ok(())
}
