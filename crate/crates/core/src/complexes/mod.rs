//! Simplicial complexes held canonically by their missing faces.
//!
//! A [`Complex`] lives on a ground set `V`. Its faces are the subsets of `V`
//! containing no missing face. Ground vertices that are themselves missing
//! faces (singletons) are allowed; they matter for Alexander duality, which
//! is taken with respect to the ground set. The void complex (no faces at
//! all) carries an explicit flag and is never confused with `{∅}`.

mod family;
mod io;
mod transversal;

pub use family::{nerve, SetFamily};
pub use io::{parse_complex, write_complex};
pub use transversal::minimal_transversals;

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::graphs::Graph;
use crate::set::{maximalize, minimalize, VertexSet};

#[derive(Clone)]
pub struct Complex {
    ground: VertexSet,
    missing: Vec<VertexSet>,
    void: bool,
    facets: OnceLock<Vec<VertexSet>>,
}

impl PartialEq for Complex {
    fn eq(&self, other: &Self) -> bool {
        self.ground == other.ground && self.void == other.void && self.missing == other.missing
    }
}

impl Eq for Complex {}

impl std::fmt::Debug for Complex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.void {
            write!(f, "Complex(ground={}, void)", self.ground)
        } else {
            write!(
                f,
                "Complex(ground={}, missing={:?})",
                self.ground, self.missing
            )
        }
    }
}

impl Complex {
    fn build(ground: VertexSet, missing: Vec<VertexSet>) -> Self {
        let missing = minimalize(missing);
        if missing.first() == Some(&VertexSet::EMPTY) {
            return Complex::void(ground);
        }
        Complex {
            ground,
            missing,
            void: false,
            facets: OnceLock::new(),
        }
    }

    /// Complex whose minimal non-faces are the minimal members of `missing`.
    /// A missing empty set yields the void complex.
    pub fn from_missing_faces(ground: VertexSet, missing: Vec<VertexSet>) -> Result<Self> {
        if let Some(m) = missing.iter().find(|m| !m.is_subset(ground)) {
            return Err(Error::InvalidParameter(format!(
                "missing face {m} not inside ground set {ground}"
            )));
        }
        Ok(Complex::build(ground, missing))
    }

    /// Complex generated by `facets`; an empty list gives the void complex.
    pub fn from_facets(ground: VertexSet, facets: Vec<VertexSet>) -> Result<Self> {
        if let Some(f) = facets.iter().find(|f| !f.is_subset(ground)) {
            return Err(Error::InvalidParameter(format!(
                "facet {f} not inside ground set {ground}"
            )));
        }
        if facets.is_empty() {
            return Ok(Complex::void(ground));
        }
        let facets = maximalize(facets);
        let complements: Vec<_> = facets.iter().map(|f| ground.difference(*f)).collect();
        let missing = minimal_transversals(&complements);
        let cx = Complex::build(ground, missing);
        let _ = cx.facets.set(facets);
        Ok(cx)
    }

    /// The void complex: no faces, not even the empty set.
    pub fn void(ground: VertexSet) -> Self {
        Complex {
            ground,
            missing: Vec::new(),
            void: true,
            facets: OnceLock::from(Vec::new()),
        }
    }

    /// The complex `{∅}` on `ground`: every ground vertex is a missing face.
    pub fn empty(ground: VertexSet) -> Self {
        Complex::build(ground, ground.iter().map(VertexSet::singleton).collect())
    }

    /// The complete complex `2^U`.
    pub fn complete(u: VertexSet) -> Self {
        Complex::build(u, Vec::new())
    }

    /// Boundary of the simplex on `u`: the single missing face `u`.
    pub fn simplex_boundary(u: VertexSet) -> Result<Self> {
        if u.is_empty() {
            return Err(Error::InvalidParameter(
                "simplex boundary needs a vertex".into(),
            ));
        }
        Ok(Complex::build(u, vec![u]))
    }

    /// `I_n(G)`: vertex sets whose induced subgraph has independence number
    /// below `n`. Its missing faces are the independent `n`-sets of `G`.
    pub fn independence_complex(g: &Graph, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("n must be at least 1".into()));
        }
        Ok(Complex::build(g.vertices(), g.independent_sets_of_size(n)))
    }

    #[inline]
    pub fn ground(&self) -> VertexSet {
        self.ground
    }

    #[inline]
    pub fn is_void(&self) -> bool {
        self.void
    }

    /// Minimal non-faces, sorted by bitmask. Empty for the void complex.
    #[inline]
    pub fn missing_faces(&self) -> &[VertexSet] {
        &self.missing
    }

    /// Vertices that are faces (the ground set minus singleton missing faces).
    pub fn vertex_set(&self) -> VertexSet {
        if self.void {
            return VertexSet::EMPTY;
        }
        let ghosts: VertexSet = self
            .missing
            .iter()
            .filter(|m| m.len() == 1)
            .fold(VertexSet::EMPTY, |a, m| a.union(*m));
        self.ground.difference(ghosts)
    }

    pub fn is_face(&self, s: VertexSet) -> bool {
        !self.void && s.is_subset(self.ground) && !self.missing.iter().any(|m| m.is_subset(s))
    }

    pub fn is_complete(&self) -> bool {
        !self.void && self.missing.is_empty()
    }

    /// Maximal faces, sorted by bitmask; computed once and cached.
    pub fn facets(&self) -> &[VertexSet] {
        self.facets.get_or_init(|| {
            if self.void {
                return Vec::new();
            }
            let mut f: Vec<_> = minimal_transversals(&self.missing)
                .into_iter()
                .map(|t| self.ground.difference(t))
                .collect();
            f.sort();
            f
        })
    }

    /// Dimension; `-1` for `{∅}` and `None` for the void complex.
    pub fn dimension(&self) -> Option<isize> {
        if self.void {
            return None;
        }
        Some(
            self.facets()
                .iter()
                .map(|f| f.len() as isize)
                .max()
                .unwrap_or(0)
                - 1,
        )
    }

    /// Calls `visit` on every face (including `∅`).
    pub fn for_each_face(&self, mut visit: impl FnMut(VertexSet)) {
        if self.void {
            return;
        }
        let verts = self.vertex_set().to_vec();
        let by_vertex = self.missing_by_vertex();
        fn rec(
            cur: VertexSet,
            from: usize,
            verts: &[usize],
            by_vertex: &[Vec<VertexSet>],
            visit: &mut dyn FnMut(VertexSet),
        ) {
            visit(cur);
            for i in from..verts.len() {
                let v = verts[i];
                if by_vertex[v].iter().any(|rest| rest.is_subset(cur)) {
                    continue;
                }
                rec(cur.with(v), i + 1, verts, by_vertex, visit);
            }
        }
        rec(VertexSet::EMPTY, 0, &verts, &by_vertex, &mut visit);
    }

    /// Faces with exactly `size` vertices, in increasing bitmask order.
    /// Refuses once more than `limit` faces have been found.
    pub fn faces_of_size(&self, size: usize, limit: usize) -> Result<Vec<VertexSet>> {
        let mut out = Vec::new();
        if self.void {
            return Ok(out);
        }
        let verts = self.vertex_set().to_vec();
        let by_vertex = self.missing_by_vertex();
        let mut overflow = false;
        #[allow(clippy::too_many_arguments)]
        fn rec(
            cur: VertexSet,
            from: usize,
            size: usize,
            verts: &[usize],
            by_vertex: &[Vec<VertexSet>],
            out: &mut Vec<VertexSet>,
            limit: usize,
            overflow: &mut bool,
        ) {
            if *overflow {
                return;
            }
            if cur.len() == size {
                if out.len() == limit {
                    *overflow = true;
                    return;
                }
                out.push(cur);
                return;
            }
            let need = size - cur.len();
            for i in from..verts.len() {
                if verts.len() - i < need {
                    break;
                }
                let v = verts[i];
                if by_vertex[v].iter().any(|rest| rest.is_subset(cur)) {
                    continue;
                }
                rec(
                    cur.with(v),
                    i + 1,
                    size,
                    verts,
                    by_vertex,
                    out,
                    limit,
                    overflow,
                );
            }
        }
        rec(
            VertexSet::EMPTY,
            0,
            size,
            &verts,
            &by_vertex,
            &mut out,
            limit,
            &mut overflow,
        );
        if overflow {
            return Err(Error::FaceLimit {
                count: limit + 1,
                limit,
            });
        }
        out.sort();
        Ok(out)
    }

    /// For each vertex `v`, the sets `M \ {v}` over missing faces `M ∋ v`.
    fn missing_by_vertex(&self) -> Vec<Vec<VertexSet>> {
        let mut by_vertex = vec![Vec::new(); 64];
        for m in &self.missing {
            for v in m.iter() {
                by_vertex[v].push(m.without(v));
            }
        }
        by_vertex
    }

    /// Face counts by dimension: entry `i` is `f_{i-1}`. Empty for the void complex.
    pub fn f_vector(&self) -> Vec<u64> {
        let mut f = Vec::new();
        self.for_each_face(|s| {
            let k = s.len();
            if f.len() <= k {
                f.resize(k + 1, 0);
            }
            f[k] += 1;
        });
        f
    }

    /// `lk(X, τ)` on the vertices `w ∉ τ` with `τ ∪ {w} ∈ X`; void when `τ ∉ X`.
    pub fn link(&self, tau: VertexSet) -> Complex {
        if !self.is_face(tau) {
            return Complex::void(self.ground.difference(tau));
        }
        let w: VertexSet = self
            .ground
            .difference(tau)
            .iter()
            .filter(|&v| self.is_face(tau.with(v)))
            .collect();
        let missing = self
            .missing
            .iter()
            .map(|m| m.difference(tau))
            .filter(|m| m.is_subset(w))
            .collect();
        Complex::build(w, missing)
    }

    /// `X[U]`: faces contained in `U`, on ground set `ground ∩ U`.
    pub fn induced(&self, u: VertexSet) -> Complex {
        let ground = self.ground.intersection(u);
        if self.void {
            return Complex::void(ground);
        }
        let missing = self
            .missing
            .iter()
            .copied()
            .filter(|m| m.is_subset(u))
            .collect();
        Complex::build(ground, missing)
    }

    /// `X \ v = X[V \ {v}]`.
    pub fn delete_vertex(&self, v: usize) -> Complex {
        self.induced(self.ground.without(v))
    }

    /// Join of complexes on disjoint ground sets.
    pub fn join(&self, other: &Complex) -> Result<Complex> {
        if !self.ground.is_disjoint(other.ground) {
            return Err(Error::OverlappingGroundSets(format!(
                "{} and {} share {}",
                self.ground,
                other.ground,
                self.ground.intersection(other.ground)
            )));
        }
        let ground = self.ground.union(other.ground);
        if self.void || other.void {
            return Ok(Complex::void(ground));
        }
        let missing = self
            .missing
            .iter()
            .chain(other.missing.iter())
            .copied()
            .collect();
        Ok(Complex::build(ground, missing))
    }

    /// True iff every facet contains `v`, i.e. `v` lies in no missing face.
    pub fn is_cone_over(&self, v: usize) -> bool {
        !self.void && self.ground.contains(v) && !self.missing.iter().any(|m| m.contains(v))
    }

    /// Combinatorial Alexander dual with respect to the ground set:
    /// `D(X) = { σ ⊆ V : V \ σ ∉ X }`.
    pub fn alexander_dual(&self) -> Complex {
        if self.void {
            return Complex::complete(self.ground);
        }
        let missing: Vec<_> = self
            .facets()
            .iter()
            .map(|f| self.ground.difference(*f))
            .collect();
        let dual = Complex::build(self.ground, missing);
        if !dual.void {
            let mut facets: Vec<_> = self
                .missing
                .iter()
                .map(|m| self.ground.difference(*m))
                .collect();
            facets.sort();
            let _ = dual.facets.set(facets);
        }
        dual
    }

    /// Same faces on the ground set of actual vertices (singleton missing
    /// faces dropped). Two complexes have the same faces iff their trimmed
    /// forms are equal.
    pub fn trimmed(&self) -> Complex {
        if self.void {
            return Complex::void(VertexSet::EMPTY);
        }
        let verts = self.vertex_set();
        let missing = self
            .missing
            .iter()
            .copied()
            .filter(|m| m.len() > 1)
            .collect();
        Complex::build(verts, missing)
    }

    /// Face-set equality, ignoring ground vertices that are not faces.
    pub fn same_faces(&self, other: &Complex) -> bool {
        self.trimmed() == other.trimmed()
    }

    /// Renames vertex `v` to `map[v]`; `map` must be injective on the ground set.
    pub fn relabel(&self, map: &[usize]) -> Result<Complex> {
        let apply = |s: VertexSet| -> VertexSet { s.iter().map(|v| map[v]).collect() };
        let ground = apply(self.ground);
        if ground.len() != self.ground.len() {
            return Err(Error::InvalidParameter(
                "relabeling is not injective".into(),
            ));
        }
        if self.void {
            return Ok(Complex::void(ground));
        }
        Ok(Complex::build(
            ground,
            self.missing.iter().map(|m| apply(*m)).collect(),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{circulant, cycle, dodecahedral, path};

    fn vs(v: &[usize]) -> VertexSet {
        VertexSet::from_slice(v)
    }

    /// Faces of `I_n(G)` straight from the definition, then minimal non-faces
    /// by scanning every subset.
    fn brute_missing(g: &Graph, n: usize) -> Vec<VertexSet> {
        let all = g.vertices();
        let is_face = |s: VertexSet| g.independence_number(s) < n;
        let mut out: Vec<_> = all
            .subsets()
            .filter(|&s| !is_face(s) && s.iter().all(|v| is_face(s.without(v))))
            .collect();
        out.sort();
        out
    }

    fn brute_facets(x: &Complex) -> Vec<VertexSet> {
        let faces: Vec<_> = x.ground().subsets().filter(|&s| x.is_face(s)).collect();
        let mut f: Vec<_> = faces
            .iter()
            .copied()
            .filter(|&s| !faces.iter().any(|&t| t != s && s.is_subset(t)))
            .collect();
        f.sort();
        f
    }

    #[test]
    fn independence_complex_of_c4() {
        let x = Complex::independence_complex(&cycle(4).unwrap(), 2).unwrap();
        assert_eq!(x.missing_faces(), &[vs(&[0, 2]), vs(&[1, 3])]);
        assert_eq!(
            x.facets(),
            &[vs(&[0, 1]), vs(&[1, 2]), vs(&[0, 3]), vs(&[2, 3])]
        );
        assert_eq!(
            x.missing_faces(),
            brute_missing(&cycle(4).unwrap(), 2).as_slice()
        );
        assert!(x.is_face(vs(&[0, 1])));
        assert!(!x.is_face(vs(&[0, 2])));
        assert!(!Complex::void(vs(&[0])).is_face(VertexSet::EMPTY));
    }

    #[test]
    fn i1_is_the_empty_complex() {
        let g = cycle(5).unwrap();
        let x = Complex::independence_complex(&g, 1).unwrap();
        assert!(!x.is_void());
        assert_eq!(x.facets(), &[VertexSet::EMPTY]);
        assert_eq!(x.f_vector(), vec![1]);
        assert_eq!(x.dimension(), Some(-1));
        assert_eq!(x, Complex::empty(g.vertices()));
    }

    #[test]
    fn facets_and_missing_faces_are_dual() {
        let b = Complex::simplex_boundary(vs(&[0, 1, 2])).unwrap();
        assert_eq!(b.facets(), &[vs(&[0, 1]), vs(&[0, 2]), vs(&[1, 2])]);
        assert_eq!(b.f_vector(), vec![1, 3, 3]);
        assert_eq!(b.dimension(), Some(1));
        let full = Complex::complete(vs(&[0, 1, 2]));
        assert!(full.missing_faces().is_empty());
        assert_eq!(full.facets(), &[vs(&[0, 1, 2])]);

        let c6 = cycle(6).unwrap();
        let x = Complex::independence_complex(&c6, 3).unwrap();
        assert_eq!(x.facets(), brute_facets(&x).as_slice());
        assert!(x.facets().contains(&vs(&[0, 1, 2, 3])));
        let back = Complex::from_facets(x.ground(), x.facets().to_vec()).unwrap();
        assert_eq!(back, x);
    }

    #[test]
    fn missing_faces_match_brute_force_on_small_graphs() {
        for seed in 0..30 {
            let g = crate::graphs::random_max_degree(8, 3, seed).unwrap();
            for n in 1..=3 {
                let x = Complex::independence_complex(&g, n).unwrap();
                assert_eq!(x.missing_faces(), brute_missing(&g, n).as_slice());
                assert_eq!(x.facets(), brute_facets(&x).as_slice());
            }
        }
    }

    #[test]
    fn dodecahedral_i8_has_five_missing_faces() {
        let g = dodecahedral();
        let x = Complex::independence_complex(&g, 8).unwrap();
        assert_eq!(x.missing_faces().len(), 5);
        let d = x.alexander_dual();
        assert_eq!(d.facets().len(), 5);
        for m in x.missing_faces() {
            assert!(d.facets().contains(&g.vertices().difference(*m)));
        }
    }

    #[test]
    fn links_and_deletions() {
        let x = Complex::independence_complex(&cycle(4).unwrap(), 2).unwrap();
        let lk = x.link(vs(&[0]));
        assert_eq!(lk.ground(), vs(&[1, 3]));
        assert_eq!(lk.missing_faces(), &[vs(&[1, 3])]);
        let del = x.delete_vertex(0);
        assert_eq!(del.facets(), &[vs(&[1, 2]), vs(&[2, 3])]);
        assert!(x.link(vs(&[0, 2])).is_void());
        // Link membership against the definition.
        for tau in x.ground().subsets() {
            let l = x.link(tau);
            for s in x.ground().subsets() {
                let expect = x.is_face(tau) && s.is_disjoint(tau) && x.is_face(s.union(tau));
                assert_eq!(l.is_face(s), expect, "tau={tau} s={s}");
            }
        }
    }

    #[test]
    fn joins() {
        let s0a = Complex::simplex_boundary(vs(&[0, 2])).unwrap();
        let s0b = Complex::simplex_boundary(vs(&[1, 3])).unwrap();
        let sq = s0a.join(&s0b).unwrap();
        assert_eq!(
            sq,
            Complex::independence_complex(&cycle(4).unwrap(), 2).unwrap()
        );
        let e = Complex::empty(VertexSet::EMPTY);
        assert_eq!(sq.join(&e).unwrap(), sq);
        // Octahedron: join of three S^0 equals I_2(circulant(6, {1,2})) whose
        // independent pairs are the antipodal pairs {i, i+3}.
        let oct = Complex::simplex_boundary(vs(&[0, 3]))
            .unwrap()
            .join(&Complex::simplex_boundary(vs(&[1, 4])).unwrap())
            .unwrap()
            .join(&Complex::simplex_boundary(vs(&[2, 5])).unwrap())
            .unwrap();
        let i2 = Complex::independence_complex(&circulant(6, &[1, 2]).unwrap(), 2).unwrap();
        assert_eq!(oct.facets(), i2.facets());
        assert_eq!(oct.facets().len(), 8);
        assert!(s0a.join(&s0a).is_err());
    }

    #[test]
    fn cones() {
        assert!(Complex::complete(vs(&[0, 1, 2])).is_cone_over(0));
        let x = Complex::independence_complex(&cycle(4).unwrap(), 2).unwrap();
        assert!(!x.is_cone_over(0));
        let y = Complex::from_missing_faces(vs(&[0, 1, 2, 3]), vec![vs(&[1, 2])]).unwrap();
        assert!(y.is_cone_over(0));
        assert!(y.facets().iter().all(|f| f.contains(0)));
    }

    #[test]
    fn alexander_dual_examples() {
        let b = Complex::simplex_boundary(vs(&[0, 1, 2])).unwrap();
        let d = b.alexander_dual();
        assert_eq!(d.facets(), &[VertexSet::EMPTY]);
        // Direct definition over all 8 subsets.
        for s in b.ground().subsets() {
            assert_eq!(d.is_face(s), !b.is_face(b.ground().difference(s)));
        }
        let x = Complex::independence_complex(&cycle(4).unwrap(), 2).unwrap();
        assert_eq!(x.alexander_dual().alexander_dual(), x);
        assert!(Complex::complete(vs(&[0, 1])).alexander_dual().is_void());
        assert!(Complex::void(vs(&[0, 1])).alexander_dual().is_complete());
    }

    #[test]
    fn link_factorizes_at_simplicial_vertex() {
        let g = path(5).unwrap();
        let v = 0;
        let x = Complex::independence_complex(&g, 3).unwrap();
        let nb = g.neighbors(v);
        let rest = g.vertices().difference(g.closed_neighbors(v));
        let sub = Complex::independence_complex(&g, 2).unwrap().induced(rest);
        // `sub` is I_2 restricted to V \ N[v], i.e. I_2(G[V \ N[v]]).
        let rhs = Complex::complete(nb).join(&sub).unwrap();
        assert!(x.link(VertexSet::singleton(v)).same_faces(&rhs));
    }
}
