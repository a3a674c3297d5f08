mod common;

use proptest::prelude::*;

use lenzkit::constructions::{
    lenz_d4_diam, lenz_d5_diam, lenz_even_diam, lenz_even_unit, lenz_odd_diam, perturb,
    random_orthogonal, sphere_diameter_config, weak_lenz_frame_d5, ConstructionReport, D5Strategy,
    Generator,
};
use lenzkit::formulas::{
    diam_formula, turan_edges, unit_formula_d4, unit_formula_even, PartitionPlan,
};
use lenzkit::geom::{
    build_distance_graph, check_orthogonal_bipartite, contains_complete_multipartite, fit_sphere,
    is_bipartite_with_witness, simple_cycles, DistanceGraph, DistanceKind, PointConfig,
    TolerancePolicy,
};
use lenzkit::io::{config_from_str, config_to_string};
use lenzkit::verify::detect_lenz;

fn lenz_report() -> impl Strategy<Value = ConstructionReport> {
    prop_oneof![
        (prop::sample::select(vec![6usize, 8]), 1usize..=48)
            .prop_map(|(d, n)| lenz_even_unit(d, n).unwrap()),
        (prop::sample::select(vec![6usize, 8, 10]), 0usize..=40).prop_map(|(d, k)| lenz_even_diam(
            d,
            d + k
        )
        .unwrap()),
        (prop::sample::select(vec![7usize, 9]), 0usize..=30).prop_map(|(d, k)| lenz_odd_diam(
            d,
            2 * d + k
        )
        .unwrap()),
        (6usize..=60).prop_map(|n| lenz_d4_diam(n).unwrap()),
        (6usize..=60)
            .prop_filter("n = 8 is refused", |&n| n != 8)
            .prop_map(|n| lenz_d5_diam(n, D5Strategy::Auto).unwrap()),
    ]
}

/// Lenz outputs whose classes all have at least 6 points. Smaller classes
/// admit exact spurious circles and spheres (antipodal pairs from different
/// blocks) that a greedy largest-first extraction cannot tell apart.
fn detectable_report() -> impl Strategy<Value = ConstructionReport> {
    lenz_report().prop_filter("small classes are ambiguous", |r| {
        !matches!(r.generator, Generator::D5Diam { .. })
            && r.classes.iter().all(|c| c.is_empty() || c.len() >= 6)
    })
}

fn small_graph() -> impl Strategy<Value = DistanceGraph> {
    (2usize..=9).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)));
            DistanceGraph::from_edges(n, pairs.zip(bits).filter(|(_, keep)| *keep).map(|(e, _)| e))
        })
    })
}

/// Brute force: some assignment of vertices to `classes` groups of exactly
/// `size` (rest unused) is completely joined across groups.
fn multipartite_oracle(g: &DistanceGraph, classes: usize, size: usize) -> bool {
    fn go(
        v: usize,
        g: &DistanceGraph,
        label: &mut Vec<Option<usize>>,
        counts: &mut Vec<usize>,
        size: usize,
    ) -> bool {
        if counts.iter().all(|&c| c == size) {
            return true;
        }
        if v == g.n {
            return false;
        }
        label.push(None);
        if go(v + 1, g, label, counts, size) {
            return true;
        }
        label.pop();
        for c in 0..counts.len() {
            if counts[c] == size {
                continue;
            }
            let ok = (0..v).all(|u| match label[u] {
                Some(l) if l != c => g.has_edge(u, v),
                _ => true,
            });
            if ok {
                label.push(Some(c));
                counts[c] += 1;
                if go(v + 1, g, label, counts, size) {
                    return true;
                }
                counts[c] -= 1;
                label.pop();
            }
        }
        false
    }
    go(0, g, &mut Vec::new(), &mut vec![0; classes], size)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn turan_is_balanced_and_increments(p in 2usize..=10, n in 0usize..=2000) {
        let plan = PartitionPlan::balanced(p, n);
        prop_assert_eq!(turan_edges(p, n), common::cross_pairs(&plan.sizes));
        prop_assert_eq!(turan_edges(p, n + 1) - turan_edges(p, n), (n - n / p) as u64);
        if n <= 30 && p <= 4 {
            prop_assert_eq!(turan_edges(p, n), common::turan_oracle(p, n));
        }
    }

    #[test]
    fn formulas_are_nondecreasing(d in 4usize..=12, n in 0usize..=600) {
        if let (Ok(a), Ok(b)) = (diam_formula(d, n), diam_formula(d, n + 1)) {
            prop_assert!(a.value <= b.value, "diam d={} n={}", d, n);
        }
        if d % 2 == 0 && d >= 6 && n >= 1 {
            let (a, b) = (unit_formula_even(d, n).unwrap(), unit_formula_even(d, n + 1).unwrap());
            prop_assert!(a.value <= b.value, "unit d={} n={}", d, n);
        }
        if n >= 5 {
            prop_assert!(unit_formula_d4(n).unwrap().value <= unit_formula_d4(n + 1).unwrap().value);
        }
    }

    #[test]
    fn distance_graph_ignores_point_order(rep in lenz_report(), seed in any::<u64>()) {
        let n = rep.config.len();
        let mut order: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            order.swap(i, (s >> 33) as usize % (i + 1));
        }
        let shuffled = rep.config.subset(&order);
        let tol = TolerancePolicy::default();
        let g = build_distance_graph(&rep.config, rep.kind, &tol).unwrap();
        let h = build_distance_graph(&shuffled, rep.kind, &tol).unwrap();
        let mut relabelled: Vec<(usize, usize)> = h
            .edges
            .iter()
            .map(|&(a, b)| (order[a].min(order[b]), order[a].max(order[b])))
            .collect();
        relabelled.sort_unstable();
        prop_assert_eq!(relabelled, g.edges);
    }

    #[test]
    fn diameter_outputs_have_unit_diameter(rep in lenz_report()) {
        if rep.kind == DistanceKind::Diameter {
            prop_assert!((common::max_distance(&rep.config.points) - 1.0).abs() <= 1e-9);
        }
        prop_assert_eq!(rep.achieved_count, rep.expected_count);
    }

    #[test]
    fn frame_components_are_orthogonal(rep in lenz_report()) {
        if let Some(frame) = &rep.frame {
            prop_assert!(frame.check_invariants().is_ok());
        }
        // the d5 blocks have offset centers
        if matches!(rep.generator, Generator::D5Diam { .. }) {
            return Ok(());
        }
        let tol = TolerancePolicy::default();
        let big: Vec<&Vec<usize>> = rep.classes.iter().filter(|c| c.len() >= 3).collect();
        for (i, a) in big.iter().enumerate() {
            let fa = fit_sphere(&rep.config.subset(a)).unwrap();
            prop_assert!(fa.residual <= 1e-9);
            for b in &big[i + 1..] {
                let (ca, cb) = (rep.config.subset(a), rep.config.subset(b));
                let r = check_orthogonal_bipartite(&ca, &cb, &tol).unwrap();
                prop_assert!(r.orthogonal, "{:?}", r);
                prop_assert!(r.radius_identity_residual <= 1e-9);
            }
        }
    }

    #[test]
    fn counts_survive_rotation_and_small_noise(rep in lenz_report(), seed in any::<u64>()) {
        let rot = rep.rotated(seed);
        let tol = TolerancePolicy::default();
        let count = |c: &PointConfig, tol: &TolerancePolicy| {
            build_distance_graph(c, rep.kind, tol).unwrap().edge_count() as u64
        };
        prop_assert_eq!(count(&rot.config, &tol), rep.achieved_count);
        // 1e-8 noise moves distances by up to 2e-8, so the count is taken at 1e-7
        let loose = TolerancePolicy::new(1e-7, 1e-12).unwrap();
        let noisy = perturb(&rot.config, 1e-8, seed).unwrap();
        prop_assert_eq!(count(&noisy, &loose), rep.achieved_count);
    }

    #[test]
    fn detector_output_is_a_partition(rep in lenz_report(), extra in 0usize..4, seed in any::<u64>()) {
        let mut config = rep.rotated(seed).config;
        let q = random_orthogonal(config.dim, seed ^ 1);
        for k in 0..extra {
            config.points.push(q[k].iter().map(|x| 0.3 * x + 0.05).collect());
        }
        let s = detect_lenz(&config, 1e-6).unwrap();
        let mut seen: Vec<usize> = s.partition.iter().flatten().chain(&s.residual).copied().collect();
        seen.sort_unstable();
        prop_assert_eq!(seen, (0..config.len()).collect::<Vec<_>>());
        for b in &s.fitted {
            prop_assert!(b.residual <= s.epsilon_used);
        }
    }

    #[test]
    fn larger_epsilon_never_grows_residual(rep in detectable_report(), extra in 0usize..4, seed in any::<u64>()) {
        let mut config = rep.rotated(seed).config;
        let q = random_orthogonal(config.dim, seed ^ 2);
        for k in 0..extra {
            config.points.push(q[k].iter().map(|x| 0.37 * x - 0.02).collect());
        }
        let sizes: Vec<usize> = [1e-7, 1e-6, 1e-5]
            .iter()
            .map(|&e| detect_lenz(&config, e).unwrap().residual.len())
            .collect();
        prop_assert!(sizes[0] >= sizes[1] && sizes[1] >= sizes[2], "{:?}", sizes);
    }

    #[test]
    fn point_files_round_trip(pts in prop::collection::vec(prop::collection::vec(-1e6f64..1e6, 3), 0..20)) {
        let config = PointConfig::new(3, pts).unwrap();
        let back = config_from_str(&config_to_string(&config), std::path::Path::new("p")).unwrap();
        prop_assert_eq!(back, config);
    }

    #[test]
    fn odd_cycle_witness_is_valid(g in small_graph()) {
        let w = is_bipartite_with_witness(&g);
        let cycles = simple_cycles(&g, 1_000_000).unwrap();
        prop_assert_eq!(w.bipartite, cycles.iter().all(|c| c.len() % 2 == 0));
        if let Some(c) = w.odd_cycle {
            prop_assert!(c.len() % 2 == 1 && c.len() >= 3);
            for k in 0..c.len() {
                prop_assert!(g.has_edge(c[k], c[(k + 1) % c.len()]));
            }
        }
    }

    #[test]
    fn multipartite_search_matches_brute_force(g in small_graph(), classes in 2usize..=3, size in 1usize..=3) {
        prop_assert_eq!(
            contains_complete_multipartite(&g, classes, size).unwrap(),
            multipartite_oracle(&g, classes, size)
        );
    }

    #[test]
    fn weak_frame_cross_distances_are_one(r1 in 0.05f64..0.95, t in 0.0f64..0.999) {
        let f = weak_lenz_frame_d5(r1, t * r1).unwrap();
        prop_assert!((f.s1 * f.s1 + f.s2 * f.s2 - 1.0).abs() < 1e-12);
        prop_assert!(f.cross_distance_error(8) < 1e-12);
    }
}

#[test]
fn odd_sphere_edge_census() {
    for m in (7..=41).step_by(2) {
        let b = sphere_diameter_config(m).unwrap();
        let edges = common::pairs_at(&b.report.config.points, 1.0);
        let k = m - 4;
        let on_circle = edges.iter().filter(|&&(a, b)| b <= k && b == a + 1).count();
        let apex = edges.iter().filter(|&&(a, b)| b == k + 1 && a <= k).count();
        let special: Vec<(usize, usize)> =
            edges.iter().copied().filter(|&(_, b)| b >= k + 2).collect();
        assert_eq!((on_circle, apex), (m - 4, m - 3), "m = {m}");
        assert_eq!(
            special,
            vec![
                (0, k + 2),
                (1, k + 3),
                (k - 1, k + 3),
                (k, k + 2),
                (k + 2, k + 3)
            ],
            "m = {m}"
        );
    }
}
