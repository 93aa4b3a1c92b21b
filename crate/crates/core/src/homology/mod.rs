//! Reduced simplicial homology over the rationals.
//!
//! Chain groups are spanned by faces sorted by bitmask; a face
//! `{v_0 < v_1 < ... < v_k}` has boundary `Σ_j (-1)^j (σ \ v_j)`, and the
//! vertices map to the empty face with coefficient one (the augmentation),
//! so degree `-1` is handled like any other degree.

mod betti;
mod leray;
pub mod rank;

pub use betti::BettiVector;
pub use leray::{
    leray_lower_bound, leray_number, union_leray_check, UnionLerayReport,
    DEFAULT_LERAY_VERTEX_LIMIT,
};

use std::collections::HashMap;

use crate::complexes::{nerve, Complex, SetFamily};
use crate::error::{Error, Result};
use crate::graphs::Graph;
use crate::set::VertexSet;
use rank::{reduce_columns, SparseColumn};

/// Default cap on enumerated faces.
pub const DEFAULT_FACE_LIMIT: usize = 2_000_000;

/// Boundary matrix from `k`-vertex faces to `(k-1)`-vertex faces, as sparse
/// columns (one per `k`-face, in the order of `faces`). Row indices follow
/// the order of `lower`.
pub fn boundary_columns(faces: &[VertexSet], lower: &[VertexSet]) -> Vec<SparseColumn> {
    let index: HashMap<VertexSet, u32> = lower
        .iter()
        .enumerate()
        .map(|(i, f)| (*f, i as u32))
        .collect();
    faces
        .iter()
        .map(|f| {
            let mut col: SparseColumn = f
                .iter()
                .enumerate()
                .map(|(j, v)| {
                    let row = index[&f.without(v)];
                    (row, if j % 2 == 0 { 1 } else { -1 })
                })
                .collect();
            col.sort_unstable_by_key(|e| e.0);
            col
        })
        .collect()
}

/// Dense boundary matrix (rows = `lower`, columns = `faces`), for checks.
pub fn boundary_matrix(faces: &[VertexSet], lower: &[VertexSet]) -> Vec<Vec<i64>> {
    let mut m = vec![vec![0i64; faces.len()]; lower.len()];
    for (c, col) in boundary_columns(faces, lower).into_iter().enumerate() {
        for (r, x) in col {
            m[r as usize][c] = x;
        }
    }
    m
}

/// Faces grouped by vertex count; entry `k` lists the `k`-vertex faces.
fn face_layers(x: &Complex, limit: usize) -> Result<Vec<Vec<VertexSet>>> {
    let top = x.dimension().map_or(0, |d| (d + 2) as usize);
    let mut layers = Vec::with_capacity(top);
    let mut used = 0usize;
    for k in 0..top {
        let faces = x.faces_of_size(k, limit - used).map_err(|e| match e {
            Error::FaceLimit { count, .. } => Error::FaceLimit {
                count: used + count,
                limit,
            },
            e => e,
        })?;
        used += faces.len();
        layers.push(faces);
    }
    Ok(layers)
}

/// Ranks of the boundary maps out of each layer, top layer first, skipping
/// columns that are cleared by the pivots of the layer above.
fn boundary_ranks(layers: &[Vec<VertexSet>]) -> Vec<usize> {
    let mut ranks = vec![0usize; layers.len()];
    let mut cleared: Vec<bool> = Vec::new();
    for k in (1..layers.len()).rev() {
        let faces: Vec<VertexSet> = layers[k]
            .iter()
            .enumerate()
            .filter(|(i, _)| !cleared.get(*i).copied().unwrap_or(false))
            .map(|(_, f)| *f)
            .collect();
        let cols = boundary_columns(&faces, &layers[k - 1]);
        let red = reduce_columns(&cols, layers[k - 1].len());
        ranks[k] = red.rank;
        cleared = vec![false; layers[k - 1].len()];
        for r in red.pivot_rows {
            cleared[r as usize] = true;
        }
    }
    ranks
}

/// Reduced Betti numbers `β̃_{-1}, ..., β̃_{dim X}` by exact elimination.
pub fn reduced_betti(x: &Complex) -> Result<BettiVector> {
    reduced_betti_with_limit(x, DEFAULT_FACE_LIMIT)
}

pub fn reduced_betti_with_limit(x: &Complex, limit: usize) -> Result<BettiVector> {
    if x.is_void() {
        return Ok(BettiVector::zero_void());
    }
    let layers = face_layers(x, limit)?;
    let ranks = boundary_ranks(&layers);
    let values = (0..layers.len())
        .map(|k| {
            let up = ranks.get(k + 1).copied().unwrap_or(0);
            (layers[k].len() - ranks[k] - up) as u64
        })
        .collect();
    Ok(BettiVector::from_values(values))
}

/// `β̃_i` alone, enumerating only the faces of dimensions `i-1`, `i`, `i+1`.
pub fn betti_in_degree(x: &Complex, degree: isize, limit: usize) -> Result<u64> {
    if x.is_void() || degree < -1 {
        return Ok(0);
    }
    let k = (degree + 1) as usize;
    let mut remaining = limit;
    let mut layer = |size: usize| -> Result<Vec<VertexSet>> {
        let faces = x.faces_of_size(size, remaining)?;
        remaining -= faces.len();
        Ok(faces)
    };
    let mid = layer(k)?;
    if mid.is_empty() {
        return Ok(0);
    }
    let top = layer(k + 1)?;
    let low = if k > 0 { layer(k - 1)? } else { Vec::new() };
    let up = reduce_columns(&boundary_columns(&top, &mid), mid.len());
    let down_rank = if k == 0 {
        0
    } else {
        let mut cleared = vec![false; mid.len()];
        for r in &up.pivot_rows {
            cleared[*r as usize] = true;
        }
        let kept: Vec<_> = mid
            .iter()
            .enumerate()
            .filter(|(i, _)| !cleared[*i])
            .map(|(_, f)| *f)
            .collect();
        reduce_columns(&boundary_columns(&kept, &low), low.len()).rank
    };
    Ok((mid.len() - down_rank - up.rank) as u64)
}

/// Betti numbers of a non-void complex `X` with `V ∉ X` through the nerve of
/// the facets of its Alexander dual (the sets `V \ M` over missing faces
/// `M`): `β̃_i(X) = β̃_{|V|-i-3}(N)`.
pub fn betti_via_dual_nerve_complex(x: &Complex) -> Result<BettiVector> {
    if x.is_void() {
        return Ok(BettiVector::zero_void());
    }
    if x.missing_faces().is_empty() {
        return Err(Error::DualityHypothesis(
            "the ground set is a face (complex is complete)".into(),
        ));
    }
    let v = x.ground();
    let family = SetFamily::new(
        v,
        x.missing_faces().iter().map(|m| v.difference(*m)).collect(),
    )?;
    let nerve_betti = reduced_betti(&nerve(&family)?)?;
    let dim = x.dimension().expect("non-void");
    let n = v.len() as isize;
    let values = (-1..=dim).map(|i| nerve_betti.get(n - i - 3)).collect();
    Ok(BettiVector::from_values(values))
}

/// Betti numbers of `I_n(G)` via the nerve of the dual's facets; requires
/// `α(G) >= n`.
pub fn betti_via_dual_nerve(g: &Graph, n: usize) -> Result<BettiVector> {
    let x = Complex::independence_complex(g, n)?;
    if x.missing_faces().is_empty() {
        return Err(Error::DualityHypothesis(format!(
            "alpha(G) = {} < n = {n}, so V is a face of I_n(G)",
            g.alpha()
        )));
    }
    betti_via_dual_nerve_complex(&x)
}

/// Exact Betti numbers by whichever exact route is cheaper: the dual nerve
/// when the complex has few missing faces, direct elimination otherwise.
pub fn reduced_betti_auto(x: &Complex, limit: usize) -> Result<BettiVector> {
    let m = x.missing_faces().len();
    if !x.is_void() && m > 0 && m <= 64 && m <= x.vertex_set().len() {
        if let Ok(b) = betti_via_dual_nerve_complex(x) {
            return Ok(b);
        }
    }
    reduced_betti_with_limit(x, limit)
}

/// Künneth formula for joins: `β̃_i(X ∗ Y) = Σ_{a+b=i-1} β̃_a(X) β̃_b(Y)`.
pub fn join_betti(a: &BettiVector, b: &BettiVector) -> BettiVector {
    betti::shifted_convolution(a, b, 0)
}

/// Betti numbers of `I_t(G_1 ⊔ ... ⊔ G_m)` predicted from the factors
/// `I_{t_i}(G_i)` with `t_i = α(G_i)`: degrees satisfy `Σ k_i = k - 2m + 2`.
pub fn disjoint_union_betti(parts: &[BettiVector]) -> BettiVector {
    let mut it = parts.iter();
    let Some(first) = it.next() else {
        return BettiVector::zero_void();
    };
    it.fold(first.clone(), |acc, b| {
        betti::shifted_convolution(&acc, b, 1)
    })
}
