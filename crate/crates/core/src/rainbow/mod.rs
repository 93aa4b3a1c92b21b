//! Rainbow independent sets and the rainbow number `f_G(n)`.
//!
//! A family `A_1, ..., A_t` of vertex sets (repeats allowed) has a rainbow
//! independent `n`-set if there are indices `i_1 < ... < i_n` and distinct
//! vertices `a_j ∈ A_{i_j}` forming an independent set. `f_G(n)` is the least
//! `t` such that every family of `t` independent `n`-sets has one.

use serde::{Deserialize, Serialize};

use crate::collapse::{collapsibility_number, CollapseConfig, CollapsibilityResult};
use crate::complexes::Complex;
use crate::error::{Error, Result};
use crate::graphs::{disjoint_union, Graph};
use crate::set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RainbowWitness {
    /// `(family index, chosen vertex)`, indices strictly increasing.
    pub selections: Vec<(usize, usize)>,
}

impl RainbowWitness {
    pub fn vertices(&self) -> VertexSet {
        self.selections.iter().map(|&(_, v)| v).collect()
    }

    /// Checks the witness against `G` and the family.
    pub fn is_valid(&self, g: &Graph, family: &[VertexSet], n: usize) -> bool {
        let idx_ok = self.selections.windows(2).all(|w| w[0].0 < w[1].0);
        let members_ok = self
            .selections
            .iter()
            .all(|&(i, v)| family.get(i).is_some_and(|a| a.contains(v)));
        let verts = self.vertices();
        idx_ok
            && members_ok
            && self.selections.len() == n
            && verts.len() == n
            && g.is_independent(verts)
    }
}

/// Exhaustive backtracking for a rainbow independent `n`-set. Members are
/// tried in order of increasing size; a vertex is only offered if it is not
/// adjacent to (or equal to) an earlier choice. `None` is a certified
/// refutation.
pub fn find_rainbow_independent(
    g: &Graph,
    family: &[VertexSet],
    n: usize,
) -> Option<RainbowWitness> {
    if n == 0 {
        return Some(RainbowWitness {
            selections: Vec::new(),
        });
    }
    if n > family.len() {
        return None;
    }
    let mut order: Vec<usize> = (0..family.len()).collect();
    order.sort_by_key(|&i| (family[i].len(), i));
    let mut chosen = Vec::with_capacity(n);
    if rec(g, family, &order, 0, n, VertexSet::EMPTY, &mut chosen) {
        chosen.sort_unstable();
        Some(RainbowWitness { selections: chosen })
    } else {
        None
    }
}

fn rec(
    g: &Graph,
    family: &[VertexSet],
    order: &[usize],
    pos: usize,
    need: usize,
    blocked: VertexSet,
    chosen: &mut Vec<(usize, usize)>,
) -> bool {
    if need == 0 {
        return true;
    }
    if order.len() - pos < need {
        return false;
    }
    let i = order[pos];
    for v in family[i].difference(blocked).iter() {
        chosen.push((i, v));
        if rec(
            g,
            family,
            order,
            pos + 1,
            need - 1,
            blocked.union(g.closed_neighbors(v)),
            chosen,
        ) {
            return true;
        }
        chosen.pop();
    }
    rec(g, family, order, pos + 1, need, blocked, chosen)
}

/// Rainbow test through bipartite matching, valid when `α(G) = n`: a rainbow
/// independent `n`-set is then one of the `targets`, and it is rainbow iff
/// its vertices can be matched to distinct members containing them.
pub fn rainbow_feasibility_by_matching(
    g: &Graph,
    family: &[VertexSet],
    targets: &[VertexSet],
    n: usize,
) -> Result<bool> {
    let alpha = g.alpha();
    if alpha != n {
        return Err(Error::Precondition(format!(
            "matching test needs alpha(G) = n, got alpha = {alpha}, n = {n}"
        )));
    }
    Ok(targets.iter().any(|&t| saturating_matching(family, t)))
}

/// Whether every vertex of `t` can be matched to a distinct member of
/// `family` containing it (Kuhn's augmenting paths).
fn saturating_matching(family: &[VertexSet], t: VertexSet) -> bool {
    let verts = t.to_vec();
    let mut owner: Vec<Option<usize>> = vec![None; family.len()];
    fn augment(
        v: usize,
        verts: &[usize],
        family: &[VertexSet],
        owner: &mut [Option<usize>],
        seen: &mut [bool],
    ) -> bool {
        for (i, a) in family.iter().enumerate() {
            if seen[i] || !a.contains(verts[v]) {
                continue;
            }
            seen[i] = true;
            if owner[i].is_none_or(|w| augment(w, verts, family, owner, seen)) {
                owner[i] = Some(v);
                return true;
            }
        }
        false
    }
    (0..verts.len()).all(|v| {
        let mut seen = vec![false; family.len()];
        augment(v, &verts, family, &mut owner, &mut seen)
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Certificate {
    /// Every family of size `f` was checked.
    Exhaustive,
    /// The size cap was reached; `f` is only a lower bound.
    Cap,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RainbowNumber {
    /// `f_G(n)` when exhaustive, otherwise a lower bound.
    pub f: usize,
    /// A family of `f - 1` independent `n`-sets without a rainbow
    /// independent `n`-set.
    pub witness_family: Vec<VertexSet>,
    pub certificate: Certificate,
    /// Number of families whose rainbow status was decided.
    pub families_checked: u64,
}

impl RainbowNumber {
    pub fn exact(&self) -> Option<usize> {
        (self.certificate == Certificate::Exhaustive).then_some(self.f)
    }
}

/// Exact `f_G(n)` by enumerating multisets of independent `n`-sets level by
/// level. A family without a rainbow set stays rainbow-free when a member is
/// dropped, so each level only extends the rainbow-free multisets of the
/// previous one (appending indices `>=` the last, to visit each multiset
/// once). The first empty level is `f`. Families of more than `t_cap` sets
/// are not examined.
pub fn f_exact(g: &Graph, n: usize, t_cap: usize) -> Result<RainbowNumber> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    let s = g.independent_sets_of_size(n);
    if s.is_empty() {
        return Ok(RainbowNumber {
            f: 1,
            witness_family: Vec::new(),
            certificate: Certificate::Exhaustive,
            families_checked: 1,
        });
    }
    let use_matching = g.alpha() == n;
    let has_rainbow = |fam: &[VertexSet]| -> bool {
        if use_matching {
            s.iter().any(|&t| saturating_matching(fam, t))
        } else {
            find_rainbow_independent(g, fam, n).is_some()
        }
    };
    // Fewer than n sets never have a rainbow n-set.
    let mut level = multisets(s.len(), n - 1);
    let mut t = n - 1;
    let mut checked = 0u64;
    loop {
        if t >= t_cap {
            return Ok(RainbowNumber {
                f: t + 1,
                witness_family: level[0].iter().map(|&i| s[i]).collect(),
                certificate: Certificate::Cap,
                families_checked: checked,
            });
        }
        let mut next = Vec::new();
        let mut fam = Vec::with_capacity(t + 1);
        for ms in &level {
            let from = ms.last().copied().unwrap_or(0);
            for j in from..s.len() {
                fam.clear();
                fam.extend(ms.iter().map(|&i| s[i]));
                fam.push(s[j]);
                checked += 1;
                if !has_rainbow(&fam) {
                    let mut ext = ms.clone();
                    ext.push(j);
                    next.push(ext);
                }
            }
        }
        if next.is_empty() {
            return Ok(RainbowNumber {
                f: t + 1,
                witness_family: level[0].iter().map(|&i| s[i]).collect(),
                certificate: Certificate::Exhaustive,
                families_checked: checked,
            });
        }
        level = next;
        t += 1;
    }
}

/// Nondecreasing index sequences of length `k` over `0..m`.
fn multisets(m: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|ms: Vec<usize>| {
                let from = ms.last().copied().unwrap_or(0);
                (from..m).map(move |j| {
                    let mut e = ms.clone();
                    e.push(j);
                    e
                })
            })
            .collect();
    }
    out
}

/// `f_G(n) <= C(I_n(G)) + 1`, checked with both sides computed or bracketed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HellyReport {
    pub f: RainbowNumber,
    pub c: CollapsibilityResult,
    /// `Some(true)` if proven, `Some(false)` if violated, `None` if the
    /// available bounds do not decide it.
    pub holds: Option<bool>,
}

pub fn check_helly_bound(
    g: &Graph,
    n: usize,
    t_cap: usize,
    config: &CollapseConfig,
) -> Result<HellyReport> {
    let f = f_exact(g, n, t_cap)?;
    let c = collapsibility_number(&Complex::independence_complex(g, n)?, config);
    let holds = if f.f > c.hi + 1 {
        Some(false)
    } else if f.exact().is_some() {
        Some(true)
    } else {
        None
    };
    Ok(HellyReport { f, c, holds })
}

/// `f_G(t_1 + t_2) <= max(f_{G_1}(t_1), f_{G_2}(t_2) + t_1)` for `G = G_1 ⊔ G_2`
/// and `t_i = α(G_i)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnionFReport {
    pub t1: usize,
    pub t2: usize,
    pub f1: RainbowNumber,
    pub f2: RainbowNumber,
    pub f_union: RainbowNumber,
    pub bound: usize,
    pub holds: Option<bool>,
}

pub fn check_union_f_bound(g1: &Graph, g2: &Graph, t_cap: usize) -> Result<UnionFReport> {
    let (t1, t2) = (g1.alpha(), g2.alpha());
    if t1 == 0 || t2 == 0 {
        return Err(Error::InvalidParameter("both graphs need a vertex".into()));
    }
    let f1 = f_exact(g1, t1, t_cap)?;
    let f2 = f_exact(g2, t2, t_cap)?;
    let f_union = f_exact(&disjoint_union(&[g1.clone(), g2.clone()])?, t1 + t2, t_cap)?;
    let bound = f1.f.max(f2.f + t1);
    let holds = match (f1.exact(), f2.exact(), f_union.exact()) {
        (Some(_), Some(_), Some(fu)) => Some(fu <= bound),
        _ => None,
    };
    Ok(UnionFReport {
        t1,
        t2,
        f1,
        f2,
        f_union,
        bound,
        holds,
    })
}
