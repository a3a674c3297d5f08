//! Reference implementations used as oracles. They share nothing with the
//! library beyond plain `Vec<f64>` points.

#![allow(dead_code)]

pub const TOL: f64 = 1e-9;

pub fn distance(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).powi(2))
        .sum::<f64>()
        .sqrt()
}

/// Pairs at distance within `TOL` of `target`.
pub fn pairs_at(points: &[Vec<f64>], target: f64) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            if (distance(&points[i], &points[j]) - target).abs() <= TOL {
                out.push((i, j));
            }
        }
    }
    out
}

pub fn max_distance(points: &[Vec<f64>]) -> f64 {
    let mut best = 0.0f64;
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            best = best.max(distance(&points[i], &points[j]));
        }
    }
    best
}

pub fn unit_count(points: &[Vec<f64>]) -> usize {
    pairs_at(points, 1.0).len()
}

pub fn diameter_count(points: &[Vec<f64>]) -> usize {
    pairs_at(points, max_distance(points)).len()
}

/// Calls `f` on every partition of `n` into exactly `parts` nonnegative
/// parts, listed in nonincreasing order.
pub fn for_each_partition(n: usize, parts: usize, f: &mut impl FnMut(&[usize])) {
    fn go(n: usize, parts: usize, cap: usize, acc: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if parts == 0 {
            if n == 0 {
                f(acc);
            }
            return;
        }
        for x in (0..=cap.min(n)).rev() {
            if x * parts < n {
                break;
            }
            acc.push(x);
            go(n - x, parts - 1, x, acc, f);
            acc.pop();
        }
    }
    go(n, parts, n, &mut Vec::new(), f);
}

pub fn cross_pairs(sizes: &[usize]) -> u64 {
    let mut s = 0u64;
    for i in 0..sizes.len() {
        for j in i + 1..sizes.len() {
            s += (sizes[i] * sizes[j]) as u64;
        }
    }
    s
}

/// Maximum of `sum n_i n_j` over all partitions into `p` parts.
pub fn turan_oracle(p: usize, n: usize) -> u64 {
    let mut best = 0;
    for_each_partition(n, p, &mut |s| best = best.max(cross_pairs(s)));
    best
}

/// Best unit count over all Lenz partitions in even dimension `2p`: cross
/// pairs plus `n_i` or `n_i - 1` per circle depending on `n_i mod 4`.
pub fn even_unit_oracle(p: usize, n: usize) -> u64 {
    let mut best = 0;
    for_each_partition(n, p, &mut |s| {
        let inner: u64 = s
            .iter()
            .map(|&x| {
                if x % 4 == 0 {
                    x as u64
                } else {
                    x.saturating_sub(1) as u64
                }
            })
            .sum();
        best = best.max(cross_pairs(s) + inner);
    });
    best
}

/// Best diameter count of a Lenz split in `R^4`: `n1 >= 3` points on the
/// smaller circle carry `n1` diameters if `n1` is odd and `n1 - 1` if even,
/// and the larger circle adds one.
pub fn d4_diam_oracle(n: usize) -> u64 {
    (3..=n - 2)
        .map(|n1| {
            let n2 = n - n1;
            let inner = if n1 % 2 == 1 { n1 + 1 } else { n1 };
            (n1 * n2 + inner) as u64
        })
        .max()
        .unwrap()
}

/// True if the graph on `n` vertices has a simple cycle of even length.
pub fn has_even_cycle(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    // cycles are enumerated from their smallest vertex
    fn dfs(start: usize, v: usize, len: usize, adj: &[Vec<usize>], seen: &mut [bool]) -> bool {
        for &w in &adj[v] {
            if w == start && len >= 3 && len % 2 == 0 {
                return true;
            }
            if w > start && !seen[w] {
                seen[w] = true;
                if dfs(start, w, len + 1, adj, seen) {
                    return true;
                }
                seen[w] = false;
            }
        }
        false
    }
    (0..n).any(|s| {
        let mut seen = vec![false; n];
        seen[s] = true;
        dfs(s, s, 1, &adj, &mut seen)
    })
}
