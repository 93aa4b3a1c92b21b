//! Elementary d-collapses and exact d-collapsibility search.
//!
//! A face `σ` with `|σ| <= d` lying in a unique facet `τ` is free; removing
//! the interval `[σ, τ]` is an elementary d-collapse (`σ = τ` included). A
//! complex mid-collapse is determined by its facet antichain, which is the
//! search state.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::complexes::Complex;
use crate::error::{Error, Result};
use crate::homology::{leray_lower_bound, leray_number, DEFAULT_LERAY_VERTEX_LIMIT};
use crate::set::{maximalize, VertexSet};

/// Default number of search nodes per `is_d_collapsible` call.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CollapseStep {
    #[serde(rename = "free")]
    pub free_face: VertexSet,
    pub carrier: VertexSet,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CollapseSequence {
    pub d: usize,
    pub steps: Vec<CollapseStep>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SequenceCheck {
    Valid,
    Invalid { step: usize, reason: String },
}

impl SequenceCheck {
    pub fn is_valid(&self) -> bool {
        matches!(self, SequenceCheck::Valid)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CollapseOutcome {
    Witness(CollapseSequence),
    /// The whole reachable state space was explored without success.
    Refuted {
        nodes: u64,
    },
    BudgetExhausted {
        nodes: u64,
    },
}

impl CollapseOutcome {
    pub fn witness(&self) -> Option<&CollapseSequence> {
        match self {
            CollapseOutcome::Witness(w) => Some(w),
            _ => None,
        }
    }

    pub fn is_refuted(&self) -> bool {
        matches!(self, CollapseOutcome::Refuted { .. })
    }
}

/// Facets of `X` as a search state (empty for the void complex).
fn state_of(x: &Complex) -> Vec<VertexSet> {
    x.facets().to_vec()
}

/// Whether `sigma` lies in no facet other than `tau`.
fn is_free_in(facets: &[VertexSet], sigma: VertexSet, tau: VertexSet) -> bool {
    facets.iter().all(|&f| f == tau || !sigma.is_subset(f))
}

/// Facets after removing `[sigma, tau]`; `tau` must be a facet.
fn collapse_facets(facets: &[VertexSet], sigma: VertexSet, tau: VertexSet) -> Vec<VertexSet> {
    let rest: Vec<VertexSet> = facets.iter().copied().filter(|&f| f != tau).collect();
    let mut out = rest.clone();
    for v in sigma.iter() {
        let cand = tau.without(v);
        if !rest.iter().any(|f| cand.is_subset(*f)) {
            out.push(cand);
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Calls `visit` on each `size`-subset of `set` in lexicographic order.
fn for_each_subset_of_size(set: VertexSet, size: usize, visit: &mut impl FnMut(VertexSet)) {
    let members = set.to_vec();
    fn rec(
        members: &[usize],
        from: usize,
        need: usize,
        cur: VertexSet,
        visit: &mut impl FnMut(VertexSet),
    ) {
        if need == 0 {
            visit(cur);
            return;
        }
        for i in from..=members.len() - need {
            rec(members, i + 1, need - 1, cur.with(members[i]), visit);
        }
    }
    if size <= members.len() {
        rec(&members, 0, size, VertexSet::EMPTY, visit);
    }
}

/// Free subsets of `tau` of exactly `size` vertices, lexicographically.
fn free_of_size(facets: &[VertexSet], tau: VertexSet, size: usize) -> Vec<VertexSet> {
    let blockers = maximalize(
        facets
            .iter()
            .filter(|&&f| f != tau)
            .map(|f| f.intersection(tau))
            .collect(),
    );
    let mut out = Vec::new();
    for_each_subset_of_size(tau, size, &mut |s| {
        if !blockers.iter().any(|b| s.is_subset(*b)) {
            out.push(s);
        }
    });
    out
}

/// All free pairs `(σ, τ)` with `|σ| <= d`, ordered by `|σ|`, then `σ`, then `τ`.
pub fn free_faces(x: &Complex, d: usize) -> Vec<CollapseStep> {
    let facets = state_of(x);
    let mut out = Vec::new();
    for &tau in &facets {
        for size in 0..=d.min(tau.len()) {
            for s in free_of_size(&facets, tau, size) {
                out.push(CollapseStep {
                    free_face: s,
                    carrier: tau,
                });
            }
        }
    }
    sort_steps(&mut out);
    out
}

fn sort_steps(steps: &mut [CollapseStep]) {
    steps.sort_by(|a, b| {
        a.free_face
            .len()
            .cmp(&b.free_face.len())
            .then_with(|| a.free_face.lex_cmp(&b.free_face))
            .then_with(|| a.carrier.lex_cmp(&b.carrier))
    });
}

fn check_step(facets: &[VertexSet], step: &CollapseStep) -> std::result::Result<(), String> {
    let CollapseStep { free_face, carrier } = *step;
    if !facets.contains(&carrier) {
        return Err(format!("{carrier} is not a facet"));
    }
    if !free_face.is_subset(carrier) {
        return Err(format!("{free_face} is not contained in {carrier}"));
    }
    if !is_free_in(facets, free_face, carrier) {
        return Err(format!("{free_face} lies in more than one facet"));
    }
    Ok(())
}

/// Removes the interval `[σ, τ]` of a legal step.
pub fn apply_collapse(x: &Complex, step: &CollapseStep) -> Result<Complex> {
    let facets = state_of(x);
    check_step(&facets, step).map_err(Error::IllegalCollapse)?;
    Complex::from_facets(
        x.ground(),
        collapse_facets(&facets, step.free_face, step.carrier),
    )
}

/// Replays `seq` on `X`: every step must be legal with `|σ| <= d`, and the
/// result must be void.
pub fn verify_sequence(x: &Complex, seq: &CollapseSequence) -> SequenceCheck {
    let mut facets = state_of(x);
    for (i, step) in seq.steps.iter().enumerate() {
        if step.free_face.len() > seq.d {
            return SequenceCheck::Invalid {
                step: i,
                reason: format!(
                    "free face {} has more than {} vertices",
                    step.free_face, seq.d
                ),
            };
        }
        if let Err(reason) = check_step(&facets, step) {
            return SequenceCheck::Invalid { step: i, reason };
        }
        facets = collapse_facets(&facets, step.free_face, step.carrier);
    }
    if facets.is_empty() {
        SequenceCheck::Valid
    } else {
        SequenceCheck::Invalid {
            step: seq.steps.len(),
            reason: format!("{} facets remain", facets.len()),
        }
    }
}

/// Search moves: for each facet `τ`, the free faces of size `min(d, |τ|)`.
///
/// Smaller free faces are dominated: if `σ ⊂ σ'` are both free in `τ`, then
/// removing `[σ', τ]` and afterwards `[σ, τ \ v]` (for `σ' = σ + v`) yields
/// the same complex as removing `[σ, τ]`. So whatever is reachable after the
/// smaller step is reachable after the larger one.
///
/// A facet with at most `d` vertices is removed without branching. Moves on
/// other carriers never touch it, so in any successful sequence its own
/// first move `[σ*, τ]` can be replaced by removing `τ` up front and peeling
/// the rest of `[σ*, τ]` off later, one vertex at a time.
fn search_moves(facets: &[VertexSet], d: usize) -> Vec<CollapseStep> {
    if let Some(&tau) = facets.iter().find(|f| f.len() <= d) {
        return vec![CollapseStep {
            free_face: tau,
            carrier: tau,
        }];
    }
    let mut out = Vec::new();
    for &tau in facets {
        for s in free_of_size(facets, tau, d) {
            out.push(CollapseStep {
                free_face: s,
                carrier: tau,
            });
        }
    }
    sort_steps(&mut out);
    out
}

/// Witness when every facet has at most `d` vertices: any legal order works,
/// so repeatedly remove the smallest free face of the first facet.
fn greedy_witness(facets: &[VertexSet], d: usize) -> CollapseSequence {
    let mut facets = facets.to_vec();
    let mut steps = Vec::new();
    while let Some(&tau) = facets.first() {
        let sigma = (0..=tau.len())
            .find_map(|k| free_of_size(&facets, tau, k).into_iter().next())
            .expect("a facet is free in itself");
        steps.push(CollapseStep {
            free_face: sigma,
            carrier: tau,
        });
        facets = collapse_facets(&facets, sigma, tau);
    }
    CollapseSequence { d, steps }
}

struct Frame {
    state: Vec<VertexSet>,
    moves: Vec<CollapseStep>,
    next: usize,
}

/// Decides d-collapsibility by depth-first search over facet states, with a
/// table of states already known to fail. `Refuted` is returned only after
/// the reachable state space is exhausted within `budget` expanded nodes.
pub fn is_d_collapsible(x: &Complex, d: usize, budget: u64) -> CollapseOutcome {
    let start = state_of(x);
    if start.is_empty() {
        return CollapseOutcome::Witness(CollapseSequence {
            d,
            steps: Vec::new(),
        });
    }
    if start.iter().all(|f| f.len() <= d) {
        return CollapseOutcome::Witness(greedy_witness(&start, d));
    }
    let mut failed: HashSet<Vec<VertexSet>> = HashSet::new();
    let mut nodes = 1u64;
    let moves = search_moves(&start, d);
    let mut stack = vec![Frame {
        state: start,
        moves,
        next: 0,
    }];
    while let Some(top) = stack.last_mut() {
        if top.next == top.moves.len() {
            let done = stack.pop().expect("non-empty");
            failed.insert(done.state);
            continue;
        }
        let step = top.moves[top.next];
        top.next += 1;
        let child = collapse_facets(&top.state, step.free_face, step.carrier);
        if child.is_empty() || child.iter().all(|f| f.len() <= d) {
            let mut steps: Vec<CollapseStep> = stack.iter().map(|f| f.moves[f.next - 1]).collect();
            steps.extend(greedy_witness(&child, d).steps);
            return CollapseOutcome::Witness(CollapseSequence { d, steps });
        }
        if failed.contains(&child) {
            continue;
        }
        if nodes >= budget {
            return CollapseOutcome::BudgetExhausted { nodes };
        }
        nodes += 1;
        let moves = search_moves(&child, d);
        stack.push(Frame {
            state: child,
            moves,
            next: 0,
        });
    }
    CollapseOutcome::Refuted { nodes }
}

/// Where a bound on the collapsibility number came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "d")]
pub enum BoundSource {
    /// `C >= 0`, or `C = 0` for the void complex.
    Trivial,
    /// `C >= L` with `L` computed exhaustively.
    LerayExact,
    /// `C >= L >=` the top homology degree of the complex plus one.
    LerayLowerBound,
    /// Search exhausted every collapse order at `d - 1`.
    Refuted(usize),
    /// A verified witness at this `d`.
    Witness(usize),
    /// `C <= dim + 1`.
    DimensionPlusOne,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CollapseConfig {
    pub budget: u64,
    pub leray_vertex_limit: usize,
    /// Complexes with more faces are only bracketed, never searched.
    pub max_search_faces: usize,
}

impl Default for CollapseConfig {
    fn default() -> Self {
        CollapseConfig {
            budget: DEFAULT_BUDGET,
            leray_vertex_limit: DEFAULT_LERAY_VERTEX_LIMIT,
            max_search_faces: 100_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CollapsibilityResult {
    pub lo: usize,
    pub hi: usize,
    pub lo_source: BoundSource,
    pub hi_source: BoundSource,
    /// Witness at `hi`, when one was constructed.
    pub witness: Option<CollapseSequence>,
    pub searched: bool,
}

impl CollapsibilityResult {
    pub fn exact(&self) -> Option<usize> {
        (self.lo == self.hi).then_some(self.hi)
    }
}

fn face_count_at_most(x: &Complex, cap: usize) -> bool {
    let bound = x
        .facets()
        .iter()
        .fold(0u128, |a, f| a.saturating_add(1u128 << f.len()));
    if bound <= cap as u128 {
        return true;
    }
    let Some(dim) = x.dimension() else {
        return true;
    };
    let mut used = 0;
    for k in 0..=(dim + 1) as usize {
        match x.faces_of_size(k, cap - used) {
            Ok(f) => used += f.len(),
            Err(_) => return false,
        }
    }
    true
}

/// Collapsibility number `C(X)`, exact when search settles it and otherwise
/// a bracket `[lo, hi]` with the origin of each end.
pub fn collapsibility_number(x: &Complex, config: &CollapseConfig) -> CollapsibilityResult {
    let Some(dim) = x.dimension() else {
        return CollapsibilityResult {
            lo: 0,
            hi: 0,
            lo_source: BoundSource::Trivial,
            hi_source: BoundSource::Trivial,
            witness: Some(CollapseSequence {
                d: 0,
                steps: Vec::new(),
            }),
            searched: false,
        };
    };
    let hi = (dim + 1) as usize;
    let (mut lo, mut lo_source) = match leray_number(x, config.leray_vertex_limit) {
        Ok(l) => (l, BoundSource::LerayExact),
        Err(_) => match leray_lower_bound(x, None) {
            Ok(l) => (l, BoundSource::LerayLowerBound),
            Err(_) => (0, BoundSource::Trivial),
        },
    };
    let mut result = CollapsibilityResult {
        lo,
        hi,
        lo_source,
        hi_source: BoundSource::DimensionPlusOne,
        witness: None,
        searched: false,
    };
    if !face_count_at_most(x, config.max_search_faces) {
        return result;
    }
    result.searched = true;
    let mut d = lo;
    while d < hi {
        match is_d_collapsible(x, d, config.budget) {
            CollapseOutcome::Witness(w) => {
                result.hi = d;
                result.hi_source = BoundSource::Witness(d);
                result.witness = Some(w);
                break;
            }
            CollapseOutcome::Refuted { .. } => {
                if lo == d {
                    lo = d + 1;
                    lo_source = BoundSource::Refuted(d + 1);
                }
            }
            CollapseOutcome::BudgetExhausted { .. } => {}
        }
        d += 1;
    }
    if result.witness.is_none() {
        result.witness = is_d_collapsible(x, hi, config.budget).witness().cloned();
    }
    result.lo = lo;
    result.lo_source = lo_source;
    result
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{cycle, path};

    fn vs(v: &[usize]) -> VertexSet {
        VertexSet::from_slice(v)
    }

    fn c4() -> Complex {
        Complex::independence_complex(&cycle(4).unwrap(), 2).unwrap()
    }

    #[test]
    fn free_faces_examples() {
        let full = Complex::complete(vs(&[0, 1]));
        assert_eq!(
            free_faces(&full, 0),
            vec![CollapseStep {
                free_face: VertexSet::EMPTY,
                carrier: vs(&[0, 1])
            }]
        );
        assert!(free_faces(&c4(), 1).is_empty());
        let two = free_faces(&c4(), 2);
        assert_eq!(two.len(), 4);
        assert!(two
            .iter()
            .all(|s| s.free_face == s.carrier && s.carrier.len() == 2));
    }

    #[test]
    fn apply_examples() {
        let e = Complex::empty(VertexSet::EMPTY);
        let step = CollapseStep {
            free_face: VertexSet::EMPTY,
            carrier: VertexSet::EMPTY,
        };
        assert!(apply_collapse(&e, &step).unwrap().is_void());
        let full = Complex::complete(vs(&[0, 1]));
        let step = CollapseStep {
            free_face: VertexSet::EMPTY,
            carrier: vs(&[0, 1]),
        };
        assert!(apply_collapse(&full, &step).unwrap().is_void());
        let edge = vs(&[0, 1]);
        let y = apply_collapse(
            &c4(),
            &CollapseStep {
                free_face: edge,
                carrier: edge,
            },
        )
        .unwrap();
        assert_eq!(y.facets(), &[vs(&[1, 2]), vs(&[0, 3]), vs(&[2, 3])]);
        let bad = CollapseStep {
            free_face: vs(&[0]),
            carrier: edge,
        };
        assert!(matches!(
            apply_collapse(&c4(), &bad),
            Err(Error::IllegalCollapse(_))
        ));
    }

    #[test]
    fn sequence_checks() {
        let full = Complex::complete(vs(&[0, 1, 2]));
        let seq = CollapseSequence {
            d: 0,
            steps: vec![CollapseStep {
                free_face: VertexSet::EMPTY,
                carrier: vs(&[0, 1, 2]),
            }],
        };
        assert!(verify_sequence(&full, &seq).is_valid());
        let mut twice = seq.clone();
        twice.steps.push(seq.steps[0]);
        assert!(matches!(
            verify_sequence(&full, &twice),
            SequenceCheck::Invalid { step: 1, .. }
        ));
        let short = CollapseSequence {
            d: 0,
            steps: vec![],
        };
        assert!(!verify_sequence(&full, &short).is_valid());
    }

    #[test]
    fn small_collapsibility_numbers() {
        let x = c4();
        assert!(is_d_collapsible(&x, 1, DEFAULT_BUDGET).is_refuted());
        let w = is_d_collapsible(&x, 2, DEFAULT_BUDGET);
        assert!(verify_sequence(&x, w.witness().unwrap()).is_valid());
        let y = Complex::independence_complex(&cycle(6).unwrap(), 3).unwrap();
        assert!(is_d_collapsible(&y, 3, DEFAULT_BUDGET).is_refuted());
        let w = is_d_collapsible(&y, 4, DEFAULT_BUDGET);
        assert!(verify_sequence(&y, w.witness().unwrap()).is_valid());
        let e = Complex::empty(vs(&[0]));
        assert_eq!(
            is_d_collapsible(&e, 0, 10).witness().unwrap().steps.len(),
            1
        );
    }

    #[test]
    fn number_with_provenance() {
        let r = collapsibility_number(&c4(), &CollapseConfig::default());
        assert_eq!(r.exact(), Some(2));
        assert!(verify_sequence(&c4(), r.witness.as_ref().unwrap()).is_valid());
        let p = Complex::independence_complex(&path(3).unwrap(), 2).unwrap();
        assert_eq!(
            collapsibility_number(&p, &CollapseConfig::default()).exact(),
            Some(1)
        );
        let void = Complex::void(vs(&[0]));
        assert_eq!(
            collapsibility_number(&void, &CollapseConfig::default()).exact(),
            Some(0)
        );
    }

    #[test]
    fn budget_exhaustion_is_a_value() {
        let g = crate::graphs::random_max_degree(9, 3, 10).unwrap();
        let y = Complex::independence_complex(&g, 3).unwrap();
        let r = is_d_collapsible(&y, 3, 1000);
        assert!(
            matches!(r, CollapseOutcome::BudgetExhausted { .. }),
            "{r:?}"
        );
    }

    /// All d-collapse orders, no dominance pruning and no memo.
    fn brute_collapsible(facets: &[VertexSet], d: usize) -> bool {
        if facets.is_empty() {
            return true;
        }
        for &tau in facets {
            for k in 0..=d.min(tau.len()) {
                for s in free_of_size(facets, tau, k) {
                    if brute_collapsible(&collapse_facets(facets, s, tau), d) {
                        return true;
                    }
                }
            }
        }
        false
    }

    #[test]
    fn search_agrees_with_unpruned_enumeration() {
        let cases = [
            Complex::independence_complex(&cycle(5).unwrap(), 2).unwrap(),
            Complex::independence_complex(&path(5).unwrap(), 2).unwrap(),
            c4(),
            Complex::from_missing_faces(
                VertexSet::full(5),
                vec![vs(&[0, 1]), vs(&[1, 2, 3]), vs(&[3, 4])],
            )
            .unwrap(),
        ];
        for x in &cases {
            for d in 0..4 {
                let fast = is_d_collapsible(x, d, DEFAULT_BUDGET);
                assert_eq!(
                    fast.witness().is_some(),
                    brute_collapsible(x.facets(), d),
                    "{x:?} d={d}"
                );
            }
        }
    }
}
