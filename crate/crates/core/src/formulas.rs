//! Closed-form extremal counts and the partition optimisations they come
//! from.
//!
//! The closed forms for `d >= 5` hold as maxima only for `n` beyond an
//! unspecified threshold depending on `d`. They are still evaluated for every
//! `n` in the stated domain; [`FormulaResult::asymptotic_only`] marks them.

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};

/// Class sizes `(n_1, ..., n_p)` for distributing points among frame
/// components.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionPlan {
    pub p: usize,
    pub sizes: Vec<usize>,
    pub total: usize,
}

impl PartitionPlan {
    pub fn new(sizes: Vec<usize>) -> Self {
        PartitionPlan {
            p: sizes.len(),
            total: sizes.iter().sum(),
            sizes,
        }
    }

    /// Class sizes as equal as possible, larger classes first.
    pub fn balanced(p: usize, n: usize) -> Self {
        let (q, s) = (n / p, n % p);
        PartitionPlan::new((0..p).map(|i| q + usize::from(i < s)).collect())
    }

    /// `sum_{i<j} n_i n_j`.
    pub fn cross_pairs(&self) -> u64 {
        let n = self.total as u64;
        let squares: u64 = self.sizes.iter().map(|&x| (x as u64).pow(2)).sum();
        (n * n - squares) / 2
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormulaResult {
    pub value: u64,
    /// Which branch of the piecewise formula applied.
    pub case_label: String,
    pub asymptotic_only: bool,
}

/// Edge count of the Turán graph: complete `p`-partite on `n` vertices with
/// classes of size `floor(n/p)` or `ceil(n/p)`.
pub fn turan_edges(p: usize, n: usize) -> u64 {
    assert!(p >= 1, "turan_edges needs p >= 1");
    PartitionPlan::balanced(p, n).cross_pairs()
}

/// Maximum number of unit distances for even `d >= 6`, with `p = d/2` and
/// `r = n mod 2d`.
pub fn unit_formula_even(d: usize, n: usize) -> Result<FormulaResult> {
    if d % 2 != 0 || d < 6 {
        return Err(invalid(format!("unit formula needs even d >= 6, got {d}")));
    }
    if n < 1 {
        return Err(invalid("n must be at least 1"));
    }
    let p = d / 2;
    let r = n % (2 * d);
    let t = turan_edges(p, n) as i64;
    let (n_i, p_i, d_i, r_i) = (n as i64, p as i64, d as i64, r as i64);
    let (value, case) = if r < p {
        (t + n_i - r_i, "0<=r<=p-1")
    } else if r < 3 * p {
        (t + n_i - p_i, "p<=r<=3p-1")
    } else {
        (t + n_i - 2 * d_i + r_i, "3p<=r<=4p-1")
    };
    Ok(FormulaResult {
        value: value as u64,
        case_label: format!("{case} (r={r})"),
        asymptotic_only: true,
    })
}

/// Maximum number of unit distances in `R^4` for `n >= 5`.
pub fn unit_formula_d4(n: usize) -> Result<FormulaResult> {
    if n < 5 {
        return Err(invalid(format!("u_4(n) formula needs n >= 5, got {n}")));
    }
    let t = turan_edges(2, n);
    let (value, case) = if n % 8 == 0 || n % 10 == 0 {
        (t + n as u64, "8|n or 10|n")
    } else {
        (t + n as u64 - 1, "otherwise")
    };
    Ok(FormulaResult {
        value,
        case_label: case.to_string(),
        asymptotic_only: false,
    })
}

/// Maximum number of diameters in `R^d`, `d >= 4`, `n >= d`.
pub fn diam_formula(d: usize, n: usize) -> Result<FormulaResult> {
    if d < 4 {
        return Err(invalid(format!("diameter formula needs d >= 4, got {d}")));
    }
    if n < d {
        return Err(invalid(format!(
            "diameter formula needs n >= d = {d}, got {n}"
        )));
    }
    let n64 = n as u64;
    let (value, case) = match d {
        4 => {
            let base = turan_edges(2, n) + n64.div_ceil(2);
            if n % 4 == 3 {
                (base, "d=4, n=3 mod 4".to_string())
            } else {
                (base + 1, "d=4, n!=3 mod 4".to_string())
            }
        }
        5 => (turan_edges(2, n) + n64, "d=5".to_string()),
        _ if d % 2 == 0 => {
            let p = d / 2;
            (turan_edges(p, n) + p as u64, "even d>=6".to_string())
        }
        _ => {
            let p = d / 2;
            (
                turan_edges(p, n) + n64.div_ceil(p as u64) + p as u64 - 1,
                "odd d>=7".to_string(),
            )
        }
    };
    Ok(FormulaResult {
        value,
        case_label: case,
        asymptotic_only: true,
    })
}

/// `sum_{i<j} n_i n_j + n - p + #{i : 4 | n_i}`: unit distances of a Lenz
/// configuration in even dimension with `n_i` points on circle `i`, each
/// circle carrying an optimal square packing.
pub fn unit_partition_value(sizes: &[usize]) -> u64 {
    let plan = PartitionPlan::new(sizes.to_vec());
    let bonus = sizes.iter().filter(|&&x| x % 4 == 0).count() as u64;
    plan.cross_pairs() + plan.total as u64 + bonus - plan.p as u64
}

/// Distributes `n` points over `p = d/2` circles to maximise
/// [`unit_partition_value`]. Each `n_i` ranges over
/// `[floor(n/p) - 2d, ceil(n/p) + 2d]`; within that window the search is
/// exhaustive (dynamic programming over the separable objective). Ties go to
/// the lexicographically smallest plan.
pub fn optimize_unit_partition_even(d: usize, n: usize) -> Result<(PartitionPlan, u64)> {
    if d % 2 != 0 || d < 6 {
        return Err(invalid(format!("needs even d >= 6, got {d}")));
    }
    let p = d / 2;
    let lo = (n / p).saturating_sub(2 * d);
    let hi = (n.div_ceil(p) + 2 * d).min(n);
    // The objective is n^2/2 - n_i^2/2 summed, so maximise
    // sum (bonus_i - n_i^2) with integer arithmetic: score(x) = 2[4|x] - x^2.
    let score = |x: usize| -> i64 { 2 * i64::from(x % 4 == 0) - (x as i64) * (x as i64) };
    const NEG: i64 = i64::MIN / 4;
    // best[i][s]: best score of classes i..p summing to s.
    let mut best = vec![vec![NEG; n + 1]; p + 1];
    best[p][0] = 0;
    for i in (0..p).rev() {
        for s in 0..=n {
            let mut b = NEG;
            for x in lo..=hi.min(s) {
                let rest = best[i + 1][s - x];
                if rest > NEG {
                    b = b.max(rest + score(x));
                }
            }
            best[i][s] = b;
        }
    }
    if best[0][n] == NEG {
        return Err(invalid("no admissible composition"));
    }
    let mut sizes = Vec::with_capacity(p);
    let mut remaining = n;
    for i in 0..p {
        let target = best[i][remaining];
        let x = (lo..=hi.min(remaining))
            .find(|&x| {
                let rest = best[i + 1][remaining - x];
                rest > NEG && rest + score(x) == target
            })
            .expect("dp table is consistent");
        sizes.push(x);
        remaining -= x;
    }
    let value = unit_partition_value(&sizes);
    Ok((PartitionPlan::new(sizes), value))
}

/// Diameters of a 4-dimensional Lenz configuration with `n1` points on the
/// smaller circle and `n2 = n - n1` on the larger: `n1 n2 + n1 + [n1 odd]`.
pub fn d4_split_value(n1: usize, n2: usize) -> u64 {
    (n1 * n2 + n1) as u64 + u64::from(n1 % 2 == 1)
}

/// Best split `n = n1 + n2` with `n1 >= 3`, `n2 >= 2`, smallest `n1` on ties.
pub fn optimize_diam_split_d4(n: usize) -> Result<(usize, usize, u64)> {
    if n < 6 {
        return Err(invalid(format!("needs n >= 6, got {n}")));
    }
    let mut best = (0, 0, 0);
    for n1 in 3..=n - 2 {
        let v = d4_split_value(n1, n - n1);
        if v > best.2 {
            best = (n1, n - n1, v);
        }
    }
    Ok(best)
}
