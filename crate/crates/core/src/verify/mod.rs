//! Bound checkers with conservative verdicts, and the reproduction suite.
//!
//! A check passes only when the computed upper end meets the claimed bound,
//! and fails only when an exact lower bound (Leray number or exhaustive
//! refutation) exceeds it. Anything else is inconclusive.

mod properties;
mod suite;

pub use properties::{property_suites, PropertyOutcome};
pub use suite::{verify_paper, Criterion, Profile};

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::collapse::{is_d_collapsible, CollapseConfig, CollapseOutcome};
use crate::complexes::Complex;
use crate::error::{Error, Result};
use crate::graphs::Graph;
use crate::homology::{leray_lower_bound, leray_number};
use crate::set::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Inconclusive => "inconclusive",
        })
    }
}

/// Enough of an instance to rerun a check.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Instance {
    pub description: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub vertices: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub edges: Option<Vec<(usize, usize)>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub n: Option<usize>,
}

impl Instance {
    pub fn named(description: impl Into<String>) -> Self {
        Instance {
            description: description.into(),
            ..Default::default()
        }
    }

    pub fn graph(description: impl Into<String>, g: &Graph, n: Option<usize>) -> Self {
        Instance {
            description: description.into(),
            vertices: Some(g.vertex_count()),
            edges: Some(g.edges()),
            n,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub name: String,
    pub instance: Instance,
    pub claimed: String,
    pub computed: String,
    pub verdict: Verdict,
    pub runtime_ms: f64,
}

impl CheckReport {
    pub fn new(
        name: impl Into<String>,
        instance: Instance,
        claimed: impl Into<String>,
        computed: impl Into<String>,
        verdict: Verdict,
        started: Instant,
    ) -> Self {
        CheckReport {
            name: name.into(),
            instance,
            claimed: claimed.into(),
            computed: computed.into(),
            verdict,
            runtime_ms: started.elapsed().as_secs_f64() * 1e3,
        }
    }

    /// Equality check between two exactly computed values.
    pub fn exact<T: PartialEq + std::fmt::Debug>(
        name: impl Into<String>,
        instance: Instance,
        claimed: T,
        computed: T,
        started: Instant,
    ) -> Self {
        let verdict = if claimed == computed {
            Verdict::Pass
        } else {
            Verdict::Fail
        };
        CheckReport::new(
            name,
            instance,
            format!("{claimed:?}"),
            format!("{computed:?}"),
            verdict,
            started,
        )
    }

    /// Report for a computation that could not be carried out.
    pub fn refused(
        name: impl Into<String>,
        instance: Instance,
        claimed: impl Into<String>,
        err: &Error,
        started: Instant,
    ) -> Self {
        CheckReport::new(
            name,
            instance,
            claimed,
            format!("refused: {err}"),
            Verdict::Inconclusive,
            started,
        )
    }
}

/// What is known about `C(X)` relative to a bound `b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundEvidence {
    /// Exact lower bound on `C(X)`.
    pub lo: usize,
    /// Upper bound on `C(X)`, if established.
    pub hi: Option<usize>,
    pub note: String,
}

impl BoundEvidence {
    pub fn verdict(&self, bound: usize) -> Verdict {
        if self.lo > bound {
            Verdict::Fail
        } else if self.hi.is_some_and(|h| h <= bound) {
            Verdict::Pass
        } else {
            Verdict::Inconclusive
        }
    }

    pub fn describe(&self) -> String {
        match self.hi {
            Some(h) if h == self.lo => format!("C = {h} ({})", self.note),
            Some(h) => format!("C in [{}, {h}] ({})", self.lo, self.note),
            None => format!("C >= {} ({})", self.lo, self.note),
        }
    }
}

/// Tests `C(X) <= bound`: the Leray number gives an exact lower bound, and a
/// single search at `d = bound` either produces a witness or refutes it.
pub fn collapse_against_bound(x: &Complex, bound: usize, config: &CollapseConfig) -> BoundEvidence {
    let lo = leray_number(x, config.leray_vertex_limit)
        .or_else(|_| leray_lower_bound(x, None))
        .unwrap_or(0);
    let dim_bound = x.dimension().map_or(0, |d| (d + 1) as usize);
    if lo > bound {
        return BoundEvidence {
            lo,
            hi: Some(dim_bound),
            note: "Leray number exceeds the bound".into(),
        };
    }
    if dim_bound <= bound {
        return BoundEvidence {
            lo,
            hi: Some(dim_bound),
            note: "dimension + 1".into(),
        };
    }
    match is_d_collapsible(x, bound, config.budget) {
        CollapseOutcome::Witness(w) => BoundEvidence {
            lo,
            hi: Some(bound),
            note: format!("witness with {} steps", w.steps.len()),
        },
        CollapseOutcome::Refuted { nodes } => BoundEvidence {
            lo: bound + 1,
            hi: Some(dim_bound),
            note: format!("refuted at d = {bound} after {nodes} nodes"),
        },
        CollapseOutcome::BudgetExhausted { nodes } => BoundEvidence {
            lo,
            hi: Some(dim_bound),
            note: format!("budget exhausted after {nodes} nodes"),
        },
    }
}

/// Exact `C(X)` for small complexes: searches `d = L, L+1, ...` until a
/// witness appears. `None` if some search ran out of budget first.
pub fn exact_collapsibility(x: &Complex, config: &CollapseConfig) -> Option<usize> {
    let r = crate::collapse::collapsibility_number(x, config);
    r.exact()
}

fn bound_report(
    name: &str,
    instance: Instance,
    claimed: String,
    x: &Complex,
    bound: usize,
    config: &CollapseConfig,
    started: Instant,
) -> CheckReport {
    let ev = collapse_against_bound(x, bound, config);
    CheckReport::new(
        name,
        instance,
        claimed,
        ev.describe(),
        ev.verdict(bound),
        started,
    )
}

/// `C(I_n(G)) <= n - 1` for chordal `G`, with equality when `α(G) >= n`
/// (and `C = 0` otherwise, the complex being a full simplex).
pub fn check_chordal_bound(g: &Graph, n: usize, config: &CollapseConfig) -> Result<CheckReport> {
    let started = Instant::now();
    if !g.is_chordal().0 {
        return Err(Error::Precondition("graph is not chordal".into()));
    }
    let x = Complex::independence_complex(g, n)?;
    let expected = if g.alpha() >= n { n - 1 } else { 0 };
    let ev = collapse_against_bound(&x, expected, config);
    let verdict = match ev.verdict(expected) {
        Verdict::Pass if ev.lo < expected => Verdict::Inconclusive,
        v => v,
    };
    Ok(CheckReport::new(
        "chordal",
        Instance::graph("chordal graph", g, Some(n)),
        format!("C = {expected}"),
        ev.describe(),
        verdict,
        started,
    ))
}

/// `C(I_n(G)) <= Δ(n-1)`. The bound needs `Δ >= 1`: for an edgeless graph
/// it is read with `Δ = 1`.
pub fn check_max_degree_bound(g: &Graph, n: usize, config: &CollapseConfig) -> Result<CheckReport> {
    let started = Instant::now();
    let delta = g.max_degree().max(1);
    let bound = delta * n.saturating_sub(1);
    let x = Complex::independence_complex(g, n)?;
    Ok(bound_report(
        "max-degree",
        Instance::graph("bounded-degree graph", g, Some(n)),
        format!("C <= {bound} (max degree {delta})"),
        &x,
        bound,
        config,
        started,
    ))
}

/// `C(I_2(G)) <= ⌈(Δ+1)/2⌉`.
pub fn check_n2_bound(g: &Graph, config: &CollapseConfig) -> Result<CheckReport> {
    let started = Instant::now();
    let bound = (g.max_degree() + 2) / 2;
    let x = Complex::independence_complex(g, 2)?;
    Ok(bound_report(
        "pairs",
        Instance::graph("bounded-degree graph", g, Some(2)),
        format!("C <= {bound}"),
        &x,
        bound,
        config,
        started,
    ))
}

/// `C(I_3(G)) <= Δ + 2` for even `Δ`, `Δ + 1` for odd `Δ`.
pub fn check_n3_bound(g: &Graph, config: &CollapseConfig) -> Result<CheckReport> {
    let started = Instant::now();
    let delta = g.max_degree();
    let bound = if delta.is_multiple_of(2) {
        delta + 2
    } else {
        delta + 1
    };
    let x = Complex::independence_complex(g, 3)?;
    Ok(bound_report(
        "triples",
        Instance::graph("bounded-degree graph", g, Some(3)),
        format!("C <= {bound}"),
        &x,
        bound,
        config,
        started,
    ))
}

/// `C(lk(I_n(G), A)) <= ⌊(n-1)Δ/2⌋` for claw-free `G` and an independent
/// `(n-1)`-set `A`.
pub fn check_clawfree_link_bound(
    g: &Graph,
    n: usize,
    a: VertexSet,
    config: &CollapseConfig,
) -> Result<CheckReport> {
    let started = Instant::now();
    if let Some((c, leaves)) = g.find_claw() {
        return Err(Error::Precondition(format!(
            "claw centred at {c} with leaves {leaves:?}"
        )));
    }
    if n < 1 || a.len() != n - 1 || !g.is_independent(a) || !a.is_subset(g.vertices()) {
        return Err(Error::Precondition(format!(
            "{a} is not an independent set of size {}",
            n.saturating_sub(1)
        )));
    }
    let bound = (n - 1) * g.max_degree() / 2;
    let x = Complex::independence_complex(g, n)?.link(a);
    let inst = Instance::graph(format!("claw-free graph, link of {a}"), g, Some(n));
    Ok(bound_report(
        "claw-free-link",
        inst,
        format!("C <= {bound}"),
        &x,
        bound,
        config,
        started,
    ))
}

/// `C(X) <= ⌊d|V|/(d+1)⌋` when all missing faces have at most `d+1`
/// vertices, with equality when they are pairwise disjoint `(d+1)`-sets
/// covering `V`.
pub fn check_vertexset_bound(
    x: &Complex,
    d: usize,
    config: &CollapseConfig,
) -> Result<CheckReport> {
    let started = Instant::now();
    if let Some(m) = x.missing_faces().iter().find(|m| m.len() > d + 1) {
        return Err(Error::Precondition(format!(
            "missing face {m} has more than {} vertices",
            d + 1
        )));
    }
    let v = x.vertex_set();
    let bound = d * v.len() / (d + 1);
    let real: Vec<VertexSet> = x
        .missing_faces()
        .iter()
        .copied()
        .filter(|m| m.is_subset(v))
        .collect();
    let disjoint_cover = real.iter().all(|m| m.len() == d + 1)
        && real.iter().map(|m| m.len()).sum::<usize>() == v.len()
        && real.iter().fold(VertexSet::EMPTY, |a, m| a.union(*m)) == v;
    let ev = collapse_against_bound(x, bound, config);
    let mut verdict = ev.verdict(bound);
    let claimed = if disjoint_cover {
        if verdict == Verdict::Pass && ev.lo < bound {
            verdict = Verdict::Inconclusive;
        }
        format!("C = {bound}")
    } else {
        format!("C <= {bound}")
    };
    let inst = Instance::named(format!(
        "complex on {} vertices with {} missing faces, d = {d}",
        v.len(),
        real.len()
    ));
    Ok(CheckReport::new(
        "vertex-count",
        inst,
        claimed,
        ev.describe(),
        verdict,
        started,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{circulant, complete, cycle, path, Graph};

    fn cfg() -> CollapseConfig {
        CollapseConfig::default()
    }

    #[test]
    fn chordal_examples() {
        let r = check_chordal_bound(&path(3).unwrap(), 2, &cfg()).unwrap();
        assert_eq!(r.verdict, Verdict::Pass, "{r:?}");
        let r = check_chordal_bound(&complete(5).unwrap(), 2, &cfg()).unwrap();
        assert_eq!(r.verdict, Verdict::Pass, "{r:?}");
        assert!(check_chordal_bound(&cycle(4).unwrap(), 2, &cfg()).is_err());
    }

    #[test]
    fn degree_examples() {
        let c4 = cycle(4).unwrap();
        assert_eq!(
            check_max_degree_bound(&c4, 2, &cfg()).unwrap().verdict,
            Verdict::Pass
        );
        assert_eq!(check_n2_bound(&c4, &cfg()).unwrap().verdict, Verdict::Pass);
        let r = check_n3_bound(&cycle(6).unwrap(), &cfg()).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        assert!(r.claimed.contains('4'));
    }

    #[test]
    fn claw_free_link_examples() {
        let oct = circulant(6, &[1, 2]).unwrap();
        let r = check_clawfree_link_bound(&oct, 2, VertexSet::singleton(0), &cfg()).unwrap();
        assert_eq!(r.verdict, Verdict::Pass, "{r:?}");
        let r = check_clawfree_link_bound(
            &cycle(6).unwrap(),
            3,
            VertexSet::from_slice(&[0, 3]),
            &cfg(),
        )
        .unwrap();
        assert_eq!(r.verdict, Verdict::Pass, "{r:?}");
        let claw = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(check_clawfree_link_bound(&claw, 2, VertexSet::singleton(1), &cfg()).is_err());
        assert!(check_clawfree_link_bound(
            &cycle(6).unwrap(),
            3,
            VertexSet::from_slice(&[0, 1]),
            &cfg()
        )
        .is_err());
    }

    #[test]
    fn vertex_count_examples() {
        let x = Complex::independence_complex(&cycle(4).unwrap(), 2).unwrap();
        let r = check_vertexset_bound(&x, 1, &cfg()).unwrap();
        assert_eq!((r.verdict, r.claimed.as_str()), (Verdict::Pass, "C = 2"));
        let p4 = Complex::independence_complex(&path(4).unwrap(), 2).unwrap();
        let r = check_vertexset_bound(&p4, 1, &cfg()).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        assert_eq!(exact_collapsibility(&p4, &cfg()), Some(1));
        let full = Complex::complete(VertexSet::full(3));
        assert_eq!(
            check_vertexset_bound(&full, 2, &cfg()).unwrap().verdict,
            Verdict::Pass
        );
        assert!(check_vertexset_bound(&x, 0, &cfg()).is_err());
    }

    #[test]
    fn evidence_verdicts_are_conservative() {
        let ev = BoundEvidence {
            lo: 2,
            hi: Some(5),
            note: String::new(),
        };
        assert_eq!(ev.verdict(3), Verdict::Inconclusive);
        assert_eq!(ev.verdict(1), Verdict::Fail);
        assert_eq!(ev.verdict(5), Verdict::Pass);
        let ev = BoundEvidence {
            lo: 0,
            hi: None,
            note: String::new(),
        };
        assert_eq!(ev.verdict(0), Verdict::Inconclusive);
    }
}
