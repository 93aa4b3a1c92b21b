//! The reproduction suite: every acceptance criterion as a list of checks.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use super::{
    check_chordal_bound, check_clawfree_link_bound, check_max_degree_bound, check_n2_bound,
    check_n3_bound, check_vertexset_bound, property_suites, CheckReport, Instance, Verdict,
};
use crate::collapse::{collapsibility_number, is_d_collapsible, verify_sequence, CollapseConfig};
use crate::complexes::Complex;
use crate::error::Result;
use crate::graphs::{
    circulant, cycle, dodecahedral, extremal_circulant, path, random_chordal, random_max_degree,
    Graph,
};
use crate::homology::{
    betti_in_degree, betti_via_dual_nerve, disjoint_union_betti, leray_lower_bound, reduced_betti,
    union_leray_check, BettiVector, DEFAULT_FACE_LIMIT,
};
use crate::rainbow::{check_helly_bound, check_union_f_bound, f_exact, find_rainbow_independent};
use crate::set::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Profile {
    /// Skips the direct elimination on the dodecahedral complex.
    Quick,
    Full,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Criterion {
    pub id: usize,
    pub title: String,
    pub reports: Vec<CheckReport>,
    /// Fraction of reports allowed to be inconclusive.
    pub inconclusive_allowance: f64,
    pub runtime_ms: f64,
}

impl Criterion {
    pub fn verdict(&self) -> Verdict {
        if self.reports.iter().any(|r| r.verdict == Verdict::Fail) {
            return Verdict::Fail;
        }
        let open = self
            .reports
            .iter()
            .filter(|r| r.verdict == Verdict::Inconclusive)
            .count();
        if open as f64 > self.inconclusive_allowance * self.reports.len() as f64 {
            Verdict::Inconclusive
        } else {
            Verdict::Pass
        }
    }

    pub fn count(&self, v: Verdict) -> usize {
        self.reports.iter().filter(|r| r.verdict == v).count()
    }
}

/// Turns a passing report into a failure when it ran past `limit_ms`.
fn within(mut r: CheckReport, limit_ms: f64) -> CheckReport {
    if r.verdict == Verdict::Pass && r.runtime_ms > limit_ms {
        r.verdict = Verdict::Fail;
        r.computed = format!(
            "{} (took {:.0} ms, limit {limit_ms:.0} ms)",
            r.computed, r.runtime_ms
        );
    }
    r
}

fn refuse_or(
    name: &str,
    inst: Instance,
    claimed: &str,
    started: Instant,
    r: Result<CheckReport>,
) -> CheckReport {
    r.unwrap_or_else(|e| CheckReport::refused(name, inst, claimed, &e, started))
}

fn criterion(
    id: usize,
    title: &str,
    allowance: f64,
    body: impl FnOnce() -> Vec<CheckReport>,
) -> Criterion {
    let started = Instant::now();
    let reports = body();
    Criterion {
        id,
        title: title.into(),
        reports,
        inconclusive_allowance: allowance,
        runtime_ms: started.elapsed().as_secs_f64() * 1e3,
    }
}

fn extremal_homology() -> Vec<CheckReport> {
    let reports: Vec<CheckReport> = [(2, 2), (2, 3), (4, 2), (4, 3)]
        .into_iter()
        .map(|(k, n)| {
            let started = Instant::now();
            let deg = ((k / 2 + 1) * (n - 1)) as isize - 1;
            let g = extremal_circulant(k, n).expect("valid parameters");
            let inst = Instance::graph(format!("G_{{{k},{n}}}"), &g, Some(n));
            let expected = BettiVector::concentrated(deg, 1);
            match Complex::independence_complex(&g, n).and_then(|x| reduced_betti(&x)) {
                Ok(b) => CheckReport::exact("extremal homology", inst, expected, b, started),
                Err(e) => CheckReport::refused(
                    "extremal homology",
                    inst,
                    format!("{expected}"),
                    &e,
                    started,
                ),
            }
        })
        .collect();
    let total: f64 = reports.iter().map(|r| r.runtime_ms).sum();
    if total <= 10_000.0 {
        return reports;
    }
    reports
        .into_iter()
        .map(|mut r| {
            r.verdict = Verdict::Fail;
            r.computed = format!("{} (group took {total:.0} ms, limit 10000 ms)", r.computed);
            r
        })
        .collect()
}

fn dodecahedral_homology(profile: Profile) -> Vec<CheckReport> {
    let g = dodecahedral();
    let inst = || Instance::graph("dodecahedral graph", &g, Some(8));
    let mut out = Vec::new();

    let started = Instant::now();
    let expected = BettiVector::concentrated(15, 4);
    out.push(match betti_via_dual_nerve(&g, 8) {
        Ok(b) => within(
            CheckReport::exact("dual nerve homology", inst(), expected.clone(), b, started),
            1_000.0,
        ),
        Err(e) => CheckReport::refused(
            "dual nerve homology",
            inst(),
            expected.to_string(),
            &e,
            started,
        ),
    });

    let x = Complex::independence_complex(&g, 8).expect("valid n");
    if profile == Profile::Full {
        for (deg, val) in [(14, 0u64), (15, 4), (16, 0)] {
            let started = Instant::now();
            let name = format!("direct elimination in degree {deg}");
            out.push(match betti_in_degree(&x, deg, DEFAULT_FACE_LIMIT) {
                Ok(b) => within(
                    CheckReport::exact(&name, inst(), val, b, started),
                    600_000.0,
                ),
                Err(e) => CheckReport::refused(&name, inst(), val.to_string(), &e, started),
            });
        }
    }

    let started = Instant::now();
    let lb = leray_lower_bound(&x, None);
    out.push(match lb {
        Ok(l) => {
            let verdict = if l >= 16 {
                Verdict::Pass
            } else {
                Verdict::Fail
            };
            CheckReport::new(
                "Leray lower bound exceeds 2(n-1)",
                inst(),
                "L >= 16 > 14",
                format!("L >= {l}"),
                verdict,
                started,
            )
        }
        Err(e) => CheckReport::refused(
            "Leray lower bound exceeds 2(n-1)",
            inst(),
            "L >= 16 > 14",
            &e,
            started,
        ),
    });

    // Disjoint copies: the union identity lifts the top degree to 17k - 2.
    if let Ok(b) = betti_via_dual_nerve(&g, 8) {
        for k in 2..=3usize {
            let started = Instant::now();
            let union = disjoint_union_betti(&vec![b.clone(); k]);
            let top = union.top_degree().map_or(0, |d| d + 1) as usize;
            let verdict = if top >= 17 * k - 1 {
                Verdict::Pass
            } else {
                Verdict::Fail
            };
            out.push(CheckReport::new(
                "Leray lower bound for disjoint copies",
                Instance::named(format!("{k} disjoint dodecahedral graphs, n = {}", 8 * k)),
                format!("L >= {}", 17 * k - 1),
                format!("L >= {top} from {union}"),
                verdict,
                started,
            ));
        }
    }
    out
}

fn collapsibility_equalities(config: &CollapseConfig) -> Vec<CheckReport> {
    let mut out = Vec::new();
    for (g, n, expected) in [(cycle(4).unwrap(), 2, 2usize), (cycle(6).unwrap(), 3, 4)] {
        let started = Instant::now();
        let inst = Instance::graph(format!("C{}", g.vertex_count()), &g, Some(n));
        let x = Complex::independence_complex(&g, n).expect("valid n");
        let r = collapsibility_number(&x, config);
        let witness_ok = r
            .witness
            .as_ref()
            .is_some_and(|w| w.d == expected && verify_sequence(&x, w).is_valid());
        let refuted = is_d_collapsible(&x, expected - 1, config.budget).is_refuted();
        let verdict = match r.exact() {
            Some(c) if c == expected && witness_ok && refuted => Verdict::Pass,
            Some(_) => Verdict::Fail,
            None => Verdict::Inconclusive,
        };
        let computed = format!(
            "C in [{}, {}], witness verified: {witness_ok}, refuted at d = {}: {refuted}",
            r.lo,
            r.hi,
            expected - 1
        );
        out.push(within(
            CheckReport::new(
                "collapsibility number",
                inst,
                format!("C = {expected}"),
                computed,
                verdict,
                started,
            ),
            60_000.0,
        ));
    }
    out
}

fn chordal_identity(config: &CollapseConfig) -> Vec<CheckReport> {
    let mut out = Vec::new();
    for seed in 0..50u64 {
        let g = random_chordal(4 + (seed % 6) as usize, seed).expect("valid size");
        for n in [2, 3] {
            let started = Instant::now();
            let inst = Instance::graph(format!("random chordal graph, seed {seed}"), &g, Some(n));
            out.push(refuse_or(
                "chordal",
                inst,
                "C = n - 1 or 0",
                started,
                check_chordal_bound(&g, n, config),
            ));
        }
    }
    out
}

fn bounded_degree(config: &CollapseConfig) -> Vec<CheckReport> {
    let mut out = Vec::new();
    for seed in 0..50u64 {
        let g = random_max_degree(5 + (seed % 5) as usize, 3, seed).expect("valid size");
        let started = Instant::now();
        let inst = || {
            Instance::graph(
                format!("random graph with max degree 3, seed {seed}"),
                &g,
                None,
            )
        };
        out.push(refuse_or(
            "pairs",
            inst(),
            "C <= 2",
            started,
            check_n2_bound(&g, config),
        ));
        out.push(refuse_or(
            "triples",
            inst(),
            "C <= 4",
            started,
            check_n3_bound(&g, config),
        ));
        for n in 1..=3 {
            out.push(refuse_or(
                "max-degree",
                inst(),
                "C <= D(n-1)",
                started,
                check_max_degree_bound(&g, n, config),
            ));
        }
    }
    out
}

fn rainbow_numbers() -> Vec<CheckReport> {
    let cases = [
        ("C4", cycle(4).unwrap(), 2, 3usize),
        ("C6", cycle(6).unwrap(), 3, 5),
        ("dodecahedral graph", dodecahedral(), 8, 11),
    ];
    cases
        .into_iter()
        .map(|(name, g, n, expected)| {
            let started = Instant::now();
            let inst = Instance::graph(name, &g, Some(n));
            match f_exact(&g, n, 20) {
                Ok(r) => {
                    // The family is re-checked by plain backtracking, not the
                    // routine that produced it.
                    let family_ok = r.witness_family.len() == expected - 1
                        && r.witness_family.iter().all(|s| s.len() == n && g.is_independent(*s))
                        && find_rainbow_independent(&g, &r.witness_family, n).is_none();
                    let verdict = match r.exact() {
                        Some(f) if f == expected && family_ok => Verdict::Pass,
                        Some(_) => Verdict::Fail,
                        None => Verdict::Inconclusive,
                    };
                    let computed = format!(
                        "f = {} ({:?}, {} families), rainbow-free family of size {} verified: {family_ok}",
                        r.f,
                        r.certificate,
                        r.families_checked,
                        r.witness_family.len()
                    );
                    within(CheckReport::new("rainbow number", inst, format!("f = {expected}"), computed, verdict, started), 60_000.0)
                }
                Err(e) => CheckReport::refused("rainbow number", inst, format!("f = {expected}"), &e, started),
            }
        })
        .collect()
}

fn union_leray() -> Vec<CheckReport> {
    let p2 = path(2).unwrap();
    let c4 = cycle(4).unwrap();
    let cases = [
        ("P2 + P2", vec![p2.clone(), p2.clone()]),
        ("P2 + C4", vec![p2, c4.clone()]),
        ("C4 + C4", vec![c4.clone(), c4]),
    ];
    let mut out = Vec::new();
    for (name, parts) in cases {
        let started = Instant::now();
        let inst = Instance::named(format!("disjoint union {name}"));
        match union_leray_check(&parts) {
            Ok(r) => {
                out.push(CheckReport::exact(
                    "union Leray number",
                    inst.clone(),
                    r.predicted,
                    r.computed,
                    started,
                ));
                out.push(CheckReport::exact(
                    "union Betti identity",
                    inst,
                    r.predicted_betti,
                    r.union_betti,
                    started,
                ));
            }
            Err(e) => out.push(CheckReport::refused(
                "union Leray number",
                inst,
                "sum of parts + m - 1",
                &e,
                started,
            )),
        }
    }
    out
}

fn property_reports(instances: usize) -> Vec<CheckReport> {
    let started = Instant::now();
    property_suites(instances, 0x5eed)
        .into_iter()
        .map(|o| {
            let verdict = if o.failures > 0 {
                Verdict::Fail
            } else if o.instances < instances {
                Verdict::Inconclusive
            } else {
                Verdict::Pass
            };
            let computed = match &o.first_failure {
                Some(f) => format!(
                    "{} failures in {} instances, first: {f}",
                    o.failures, o.instances
                ),
                None => format!("{} instances, {} skipped", o.instances, o.skipped),
            };
            CheckReport::new(
                o.name.clone(),
                Instance::named("seeded random instances"),
                format!("holds on {instances}"),
                computed,
                verdict,
                started,
            )
        })
        .collect()
}

fn further_bounds(config: &CollapseConfig) -> Vec<CheckReport> {
    let mut out = Vec::new();
    let started = Instant::now();
    let g42 = circulant(6, &[1, 2]).unwrap();
    let c6 = cycle(6).unwrap();
    for (g, n, a) in [
        (&g42, 2, VertexSet::singleton(0)),
        (&c6, 3, VertexSet::from_slice(&[0, 3])),
    ] {
        let inst = Instance::graph("claw-free graph", g, Some(n));
        out.push(refuse_or(
            "claw-free-link",
            inst,
            "C <= (n-1)D/2",
            started,
            check_clawfree_link_bound(g, n, a, config),
        ));
    }
    let c4 = Complex::independence_complex(&cycle(4).unwrap(), 2).unwrap();
    let paw = Complex::from_missing_faces(
        VertexSet::full(4),
        vec![
            VertexSet::from_slice(&[0, 2]),
            VertexSet::from_slice(&[0, 3]),
        ],
    )
    .unwrap();
    for x in [c4, paw, Complex::complete(VertexSet::full(4))] {
        out.push(refuse_or(
            "vertex-count",
            Instance::named("small complex"),
            "C <= d|V|/(d+1)",
            started,
            check_vertexset_bound(&x, 1, config),
        ));
    }
    let graphs: [(&str, Graph, usize); 3] = [
        ("C4", cycle(4).unwrap(), 2),
        ("C5", cycle(5).unwrap(), 2),
        ("P4", path(4).unwrap(), 2),
    ];
    for (name, g, n) in graphs {
        let started = Instant::now();
        let inst = Instance::graph(name, &g, Some(n));
        out.push(match check_helly_bound(&g, n, 12, config) {
            Ok(r) => {
                let verdict = match r.holds {
                    Some(true) => Verdict::Pass,
                    Some(false) => Verdict::Fail,
                    None => Verdict::Inconclusive,
                };
                CheckReport::new(
                    "rainbow number at most C + 1",
                    inst,
                    "f <= C + 1",
                    format!("f = {}, C in [{}, {}]", r.f.f, r.c.lo, r.c.hi),
                    verdict,
                    started,
                )
            }
            Err(e) => CheckReport::refused(
                "rainbow number at most C + 1",
                inst,
                "f <= C + 1",
                &e,
                started,
            ),
        });
    }
    let started = Instant::now();
    let (p2, c4g) = (path(2).unwrap(), cycle(4).unwrap());
    out.push(match check_union_f_bound(&p2, &c4g, 12) {
        Ok(r) => {
            let verdict = match r.holds {
                Some(true) => Verdict::Pass,
                Some(false) => Verdict::Fail,
                None => Verdict::Inconclusive,
            };
            CheckReport::new(
                "rainbow number of a union",
                Instance::named("P2 + C4"),
                format!("f <= {}", r.bound),
                format!("f = {}", r.f_union.f),
                verdict,
                started,
            )
        }
        Err(e) => CheckReport::refused(
            "rainbow number of a union",
            Instance::named("P2 + C4"),
            "f <= max(...)",
            &e,
            started,
        ),
    });
    out
}

/// Runs the acceptance suite. Every criterion carries its own reports.
pub fn verify_paper(profile: Profile) -> Vec<Criterion> {
    let config = CollapseConfig::default();
    vec![
        criterion(1, "extremal circulant homology", 0.0, extremal_homology),
        criterion(2, "dodecahedral homology and Leray bound", 0.0, || {
            dodecahedral_homology(profile)
        }),
        criterion(3, "collapsibility equalities on cycles", 0.0, || {
            collapsibility_equalities(&config)
        }),
        criterion(4, "chordal identity on random chordal graphs", 0.0, || {
            chordal_identity(&config)
        }),
        criterion(5, "bounded-degree bounds on random graphs", 0.05, || {
            bounded_degree(&config)
        }),
        criterion(6, "rainbow numbers", 0.0, rainbow_numbers),
        criterion(7, "Leray number of disjoint unions", 0.0, union_leray),
        criterion(8, "randomized identity suites", 0.0, || {
            property_reports(100)
        }),
        criterion(9, "further bound examples", 0.0, || further_bounds(&config)),
    ]
}
