use serde::{Deserialize, Serialize};

use super::{disjoint_union_betti, reduced_betti_auto, BettiVector, DEFAULT_FACE_LIMIT};
use crate::complexes::Complex;
use crate::error::{Error, Result};
use crate::graphs::{disjoint_union, Graph};
use crate::set::VertexSet;

/// Default bound on `|V|` for the exhaustive Leray scan.
pub const DEFAULT_LERAY_VERTEX_LIMIT: usize = 14;

/// Top nonzero degree of `X[U]` plus one, floored at 0.
fn induced_top(x: &Complex, u: VertexSet) -> Result<usize> {
    let b = reduced_betti_auto(&x.induced(u), DEFAULT_FACE_LIMIT)?;
    Ok(b.top_degree().map_or(0, |d| (d + 1).max(0) as usize))
}

/// Leray number: the least `d` such that every induced subcomplex has zero
/// reduced homology in all degrees `>= d`. Exhaustive over vertex subsets,
/// skipping those whose induced complex is a cone or a simplex.
pub fn leray_number(x: &Complex, vertex_limit: usize) -> Result<usize> {
    if x.is_void() {
        return Ok(0);
    }
    let verts = x.vertex_set();
    if verts.len() > vertex_limit {
        return Err(Error::SearchLimit {
            size: verts.len(),
            limit: vertex_limit,
        });
    }
    let missing: Vec<VertexSet> = x
        .missing_faces()
        .iter()
        .copied()
        .filter(|m| m.is_subset(verts))
        .collect();
    let mut best = 0usize;
    for u in verts.subsets() {
        // homology of X[U] lives in degrees <= |U| - 2
        if u.len() <= best + 1 {
            continue;
        }
        let covered = missing
            .iter()
            .filter(|m| m.is_subset(u))
            .fold(VertexSet::EMPTY, |a, m| a.union(*m));
        if covered != u {
            continue;
        }
        best = best.max(induced_top(x, u)?);
    }
    Ok(best)
}

/// Lower bound on the Leray number from the given induced subcomplexes
/// (default: the whole complex).
pub fn leray_lower_bound(x: &Complex, subsets: Option<&[VertexSet]>) -> Result<usize> {
    if x.is_void() {
        return Ok(0);
    }
    let own = [x.ground()];
    let subsets = subsets.unwrap_or(&own);
    let mut best = 0;
    for &u in subsets {
        best = best.max(induced_top(x, u.intersection(x.ground()))?);
    }
    Ok(best)
}

/// Both sides of the disjoint-union Leray formula, plus the Betti-vector
/// identity behind it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnionLerayReport {
    pub alphas: Vec<usize>,
    pub component_leray: Vec<usize>,
    /// `L(I_t(G))` with `t = Σ α(G_i)`.
    pub computed: usize,
    /// `Σ ℓ_i + m - 1`.
    pub predicted: usize,
    pub union_betti: BettiVector,
    pub predicted_betti: BettiVector,
}

impl UnionLerayReport {
    pub fn leray_matches(&self) -> bool {
        self.computed == self.predicted
    }

    pub fn betti_matches(&self) -> bool {
        self.union_betti == self.predicted_betti
    }
}

pub fn union_leray_check(graphs: &[Graph]) -> Result<UnionLerayReport> {
    if graphs.is_empty() {
        return Err(Error::InvalidParameter("need at least one graph".into()));
    }
    let mut alphas = Vec::new();
    let mut component_leray = Vec::new();
    let mut component_betti = Vec::new();
    for g in graphs {
        let t = g.alpha().max(1);
        let x = Complex::independence_complex(g, t)?;
        alphas.push(t);
        component_leray.push(leray_number(&x, DEFAULT_LERAY_VERTEX_LIMIT)?);
        component_betti.push(reduced_betti_auto(&x, DEFAULT_FACE_LIMIT)?);
    }
    let union = disjoint_union(graphs)?;
    let t: usize = alphas.iter().sum();
    let x = Complex::independence_complex(&union, t)?;
    let computed = leray_number(&x, DEFAULT_LERAY_VERTEX_LIMIT)?;
    let predicted = component_leray.iter().sum::<usize>() + graphs.len() - 1;
    Ok(UnionLerayReport {
        alphas,
        component_leray,
        computed,
        predicted,
        union_betti: reduced_betti_auto(&x, DEFAULT_FACE_LIMIT)?,
        predicted_betti: disjoint_union_betti(&component_betti),
    })
}
