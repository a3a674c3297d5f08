//! Every diameter generator at a few sizes, with independent recounts.
//!
//! `cargo run --example diameter_constructions`

use lenzkit::constructions::{D5Strategy, Generator};
use lenzkit::geom::diameter_of;
use lenzkit::Error;

fn main() -> lenzkit::Result<()> {
    let generators = [
        Generator::EvenDiam { d: 6 },
        Generator::EvenDiam { d: 8 },
        Generator::D4Diam,
        Generator::OddDiam { d: 7 },
        Generator::D5Diam {
            strategy: D5Strategy::Auto,
        },
        Generator::D5Diam {
            strategy: D5Strategy::StarPolygon,
        },
        Generator::SphereDiam,
    ];
    for g in generators {
        for n in [8, 15, 24, 40] {
            match g.build(n) {
                Ok(rep) => println!(
                    "{:<14} R^{} n={n:<3} diameters {:>4} / {:<4} diameter {:.12}",
                    g.name(),
                    rep.config.dim,
                    rep.achieved_count,
                    rep.expected_count,
                    diameter_of(&rep.config)?
                ),
                Err(e @ (Error::Unachievable(_) | Error::InvalidInput(_))) => {
                    println!("{:<14} n={n:<3} {e}", g.name())
                }
                Err(e) => return Err(e),
            }
        }
    }
    Ok(())
}
