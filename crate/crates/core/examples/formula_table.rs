//! Closed-form maxima next to the partitions that reach them.
//!
//! `cargo run --example formula_table`

use lenzkit::formulas::{
    diam_formula, optimize_diam_split_d4, optimize_unit_partition_even, unit_formula_d4,
    unit_formula_even,
};

fn main() -> lenzkit::Result<()> {
    println!("unit distances, even d");
    for d in [6, 8, 10] {
        for n in [2 * d, 33, 100] {
            let f = unit_formula_even(d, n)?;
            let (plan, best) = optimize_unit_partition_even(d, n)?;
            println!(
                "  d={d:<2} n={n:<3} {:>5}  [{}]  best split {:?} -> {best}",
                f.value, f.case_label, plan.sizes
            );
        }
    }
    println!("unit distances, d = 4");
    for n in [8, 20, 50] {
        println!("  n={n:<3} {}", unit_formula_d4(n)?.value);
    }
    println!("diameters");
    for d in 4..=9 {
        let row: Vec<String> = [20, 50, 101]
            .iter()
            .map(|&n| {
                let f = diam_formula(d, n).expect("n is in range");
                format!(
                    "n={n}: {}{}",
                    f.value,
                    if f.asymptotic_only { "*" } else { "" }
                )
            })
            .collect();
        println!("  d={d}  {}", row.join("  "));
    }
    let (n1, n2, v) = optimize_diam_split_d4(21)?;
    println!("d = 4, n = 21: circles of {n1} and {n2} points give {v}");
    println!("* holds only for n large enough");
    Ok(())
}
