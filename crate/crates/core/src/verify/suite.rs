//! Module invariants evaluated over fixed parameter grids.

use std::f64::consts::FRAC_1_SQRT_2;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::constructions::{
    arc_with_one_diameter, lenz_d4_diam, lenz_d5_diam, lenz_even_diam, lenz_even_unit,
    lenz_odd_diam, sphere_diameter_config, squares_on_circle, star_polygon, D5Strategy,
    DIAMETER_SLACK,
};
use crate::error::{invalid, Error};
use crate::formulas::{
    diam_formula, optimize_diam_split_d4, optimize_unit_partition_even, unit_formula_even,
};
use crate::geom::{
    build_distance_graph, diameter_of, fit_sphere, simple_cycles, DistanceKind, PointConfig,
    TolerancePolicy,
};

use super::{detect_lenz, verify_construction};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Scope {
    Geomcore,
    Formulas,
    Constructions,
    SphereDiameter,
    Detector,
}

impl Scope {
    pub const ALL: [Scope; 5] = [
        Scope::Geomcore,
        Scope::Formulas,
        Scope::Constructions,
        Scope::SphereDiameter,
        Scope::Detector,
    ];
}

impl FromStr for Scope {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Ok(match s {
            "geomcore" => Scope::Geomcore,
            "formulas" => Scope::Formulas,
            "constructions" => Scope::Constructions,
            "sphere_diameter" => Scope::SphereDiameter,
            "detector" => Scope::Detector,
            _ => return Err(invalid(format!("unknown scope {s:?}"))),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub scope: Scope,
    pub name: String,
    pub cases: usize,
    /// At most [`MAX_COUNTEREXAMPLES`] failing cases, described.
    pub counterexamples: Vec<String>,
    pub failures: usize,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub checks: Vec<CheckOutcome>,
    pub passed: bool,
}

pub const MAX_COUNTEREXAMPLES: usize = 5;

struct Check {
    outcome: CheckOutcome,
}

impl Check {
    fn new(scope: Scope, name: &str) -> Self {
        Check {
            outcome: CheckOutcome {
                scope,
                name: name.into(),
                cases: 0,
                counterexamples: Vec::new(),
                failures: 0,
            },
        }
    }

    fn case(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.outcome.cases += 1;
        if !ok {
            self.outcome.failures += 1;
            if self.outcome.counterexamples.len() < MAX_COUNTEREXAMPLES {
                self.outcome.counterexamples.push(describe());
            }
        }
    }

    fn done(self) -> CheckOutcome {
        self.outcome
    }
}

/// Runs every check of the selected scopes; an empty selection yields an
/// empty passing report.
pub fn run_invariant_suite(scopes: &[Scope]) -> SuiteReport {
    let mut selected = scopes.to_vec();
    selected.sort();
    selected.dedup();
    let mut checks = Vec::new();
    for scope in selected {
        match scope {
            Scope::Geomcore => geomcore(&mut checks),
            Scope::Formulas => formulas(&mut checks),
            Scope::Constructions => constructions(&mut checks),
            Scope::SphereDiameter => sphere_diameter(&mut checks),
            Scope::Detector => detector(&mut checks),
        }
    }
    let passed = checks.iter().all(CheckOutcome::passed);
    SuiteReport { checks, passed }
}

fn random_arc(rng: &mut ChaCha8Rng, m: usize) -> PointConfig {
    // sorted angles on a random circle, rescaled to diameter 1
    let radius = rng.random_range(0.6..3.0);
    let span = rng.random_range(0.5..std::f64::consts::PI);
    let mut t: Vec<f64> = (0..m).map(|_| rng.random_range(0.0..span)).collect();
    t.sort_by(f64::total_cmp);
    let pts: Vec<Vec<f64>> = t
        .iter()
        .map(|a| vec![radius * a.cos(), radius * a.sin()])
        .collect();
    let c = PointConfig::new(2, pts).expect("finite points");
    let diam = diameter_of(&c).expect("two or more points");
    PointConfig::new(
        2,
        c.points
            .iter()
            .map(|p| vec![p[0] / diam, p[1] / diam])
            .collect(),
    )
    .expect("finite points")
}

fn geomcore(out: &mut Vec<CheckOutcome>) {
    let tol = TolerancePolicy::default();
    let mut odd = Check::new(
        Scope::Geomcore,
        "concyclic diameter graphs have only odd cycles",
    );
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for trial in 0..100 {
        let m = 3 + trial % 10;
        let cfg = if trial % 3 == 0 && m % 2 == 1 {
            star_polygon(m).expect("odd m")
        } else {
            random_arc(&mut rng, m)
        };
        let g = build_distance_graph(&cfg, DistanceKind::Diameter, &tol).expect("valid config");
        let cycles = simple_cycles(&g, 10_000).expect("small graph");
        let even = cycles.iter().find(|c| c.len() % 2 == 0);
        odd.case(even.is_none(), || format!("m={m}: even cycle {even:?}"));
    }
    out.push(odd.done());

    let mut diam = Check::new(Scope::Geomcore, "scaled arcs have diameter 1");
    for m in 2..=12 {
        let c = random_arc(&mut rng, m);
        let d = diameter_of(&c).expect("two or more points");
        diam.case((d - 1.0).abs() <= 1e-12, || format!("m={m}: diameter {d}"));
    }
    out.push(diam.done());
}

fn formulas(out: &mut Vec<CheckOutcome>) {
    let mut unit = Check::new(Scope::Formulas, "unit partition optimum equals closed form");
    for d in [6, 8, 10] {
        for n in 2 * d..=600 {
            let (_, v) = optimize_unit_partition_even(d, n).expect("valid d");
            let f = unit_formula_even(d, n).expect("valid d").value;
            unit.case(v == f, || format!("d={d} n={n}: optimum {v}, formula {f}"));
        }
    }
    out.push(unit.done());

    let mut d4 = Check::new(Scope::Formulas, "d=4 split optimum equals closed form");
    for n in 6..=600 {
        let (_, _, v) = optimize_diam_split_d4(n).expect("n >= 6");
        let f = diam_formula(4, n).expect("n >= 4").value;
        d4.case(v == f, || format!("n={n}: optimum {v}, formula {f}"));
    }
    out.push(d4.done());
}

fn constructions(out: &mut Vec<CheckOutcome>) {
    let tol = TolerancePolicy::default();
    let count = |c: &PointConfig, kind| {
        build_distance_graph(c, kind, &tol)
            .map(|g| g.edge_count())
            .unwrap_or(usize::MAX)
    };

    let mut circle = Check::new(Scope::Constructions, "circle lemma counts");
    for m in 1..=64 {
        let want = if m % 4 == 0 { m } else { m - 1 };
        let got = squares_on_circle(m).map(|c| count(&c, DistanceKind::UnitDistance));
        circle.case(got.as_ref().ok() == Some(&want), || {
            format!("squares m={m}: {got:?}")
        });
    }
    for m in (3..=41).step_by(2) {
        let got = star_polygon(m).map(|c| count(&c, DistanceKind::Diameter));
        circle.case(got.as_ref().ok() == Some(&m), || {
            format!("star m={m}: {got:?}")
        });
    }
    for radius in [FRAC_1_SQRT_2, 0.7, 0.9] {
        for m in 2..=64 {
            let got = arc_with_one_diameter(m, radius).map(|c| count(&c, DistanceKind::Diameter));
            circle.case(got.as_ref().ok() == Some(&1), || {
                format!("arc m={m} r={radius}: {got:?}")
            });
        }
    }
    out.push(circle.done());

    let mut lenz = Check::new(Scope::Constructions, "Lenz recounts equal the closed forms");
    let mut record =
        |label: String, rep: crate::Result<crate::constructions::ConstructionReport>| {
            let ok = rep.as_ref().is_ok_and(|r| {
                verify_construction(r).is_ok_and(|v| v.matched)
                    && r.frame
                        .as_ref()
                        .is_none_or(|f| f.check_invariants().is_ok())
                    && (r.kind == DistanceKind::UnitDistance
                        || diameter_of(&r.config).is_ok_and(|x| (x - 1.0).abs() <= DIAMETER_SLACK))
            });
            lenz.case(ok, || format!("{label}: {:?}", rep.err()));
        };
    for d in [6, 8] {
        for n in (12..=60).step_by(4) {
            record(format!("even-unit d={d} n={n}"), lenz_even_unit(d, n));
        }
        for n in (d..=60).step_by(5) {
            record(format!("even-diam d={d} n={n}"), lenz_even_diam(d, n));
        }
    }
    for n in (6..=60).step_by(3) {
        record(format!("d4-diam n={n}"), lenz_d4_diam(n));
        if n != 8 {
            record(format!("d5-diam n={n}"), lenz_d5_diam(n, D5Strategy::Auto));
        }
    }
    for d in [7, 9] {
        for n in (2 * d..=60).step_by(5) {
            record(format!("odd-diam d={d} n={n}"), lenz_odd_diam(d, n));
        }
    }
    out.push(lenz.done());

    let mut frames = Check::new(
        Scope::Constructions,
        "rotated frames keep radius and orthogonality",
    );
    for d in 6..=11 {
        let rep = if d % 2 == 0 {
            lenz_even_diam(d, 2 * d)
        } else {
            lenz_odd_diam(d, 2 * d)
        };
        let ok = rep.is_ok_and(|r| {
            r.rotated(d as u64)
                .frame
                .is_some_and(|f| f.check_invariants().is_ok())
        });
        frames.case(ok, || format!("d={d}"));
    }
    out.push(frames.done());
}

fn sphere_diameter(out: &mut Vec<CheckOutcome>) {
    let mut check = Check::new(Scope::SphereDiameter, "2m-2 diameters on a 2-sphere");
    for m in (4..=41).filter(|&m| m != 5) {
        let res = sphere_diameter_config(m);
        let ok = res.as_ref().is_ok_and(|b| {
            let cospherical = fit_sphere(&b.report.config).is_ok_and(|f| f.residual <= 1e-8);
            let solved = b
                .report
                .solver_stats
                .as_ref()
                .is_none_or(|s| s.final_residual <= 1e-10);
            b.report.achieved_count == 2 * m as u64 - 2 && cospherical && solved
        });
        check.case(ok, || format!("m={m}: {:?}", res.err()));
    }
    let refused = matches!(sphere_diameter_config(5), Err(Error::Unachievable(_)));
    check.case(refused, || "m=5 was not refused".into());
    out.push(check.done());
}

fn detector(out: &mut Vec<CheckOutcome>) {
    let mut check = Check::new(Scope::Detector, "detector recovers generated frames");
    let cases: [(usize, usize); 4] = [(6, 24), (8, 40), (7, 24), (9, 32)];
    for (i, &(d, n)) in cases.iter().enumerate() {
        let rep = if d % 2 == 0 {
            lenz_even_unit(d, n)
        } else {
            lenz_odd_diam(d, n)
        };
        let ok = rep.as_ref().is_ok_and(|r| {
            let rot = r.rotated(i as u64);
            detect_lenz(&rot.config, 1e-6)
                .is_ok_and(|s| s.residual.is_empty() && s.partition == r.classes)
        });
        check.case(ok, || format!("d={d} n={n}"));
    }
    out.push(check.done());
}
