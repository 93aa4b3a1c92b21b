use proptest::prelude::*;

use indcx::collapse::{
    apply_collapse, collapsibility_number, free_faces, verify_sequence, CollapseConfig,
};
use indcx::complexes::{nerve, parse_complex, write_complex, Complex, SetFamily};
use indcx::graphs::{disjoint_union, random_chordal, random_max_degree, Graph};
use indcx::homology::{
    betti_via_dual_nerve_complex, disjoint_union_betti, join_betti, leray_number, reduced_betti,
};
use indcx::rainbow::{f_exact, find_rainbow_independent};
use indcx::VertexSet;

fn complex_strategy(max_vertices: usize) -> impl Strategy<Value = Complex> {
    (1..=max_vertices).prop_flat_map(|m| {
        let face = prop::collection::btree_set(0..m, 1..=m.min(4));
        prop::collection::vec(face, 0..=m + 2).prop_map(move |faces| {
            let missing = faces.into_iter().map(|f| f.into_iter().collect()).collect();
            Complex::from_missing_faces(VertexSet::full(m), missing).unwrap()
        })
    })
}

fn graph_strategy(max_vertices: usize) -> impl Strategy<Value = Graph> {
    (1..=max_vertices).prop_flat_map(|m| {
        prop::collection::vec(any::<bool>(), m * (m - 1) / 2).prop_map(move |bits| {
            let pairs = (0..m).flat_map(|u| (u + 1..m).map(move |v| (u, v)));
            let edges: Vec<_> = pairs
                .zip(bits)
                .filter(|(_, b)| *b)
                .map(|(e, _)| e)
                .collect();
            Graph::from_edges(m, &edges).unwrap()
        })
    })
}

/// All faces from the definition: subsets containing no missing face.
fn faces_brute(x: &Complex) -> Vec<VertexSet> {
    if x.is_void() {
        return Vec::new();
    }
    x.ground()
        .subsets()
        .filter(|s| !x.missing_faces().iter().any(|m| m.is_subset(*s)))
        .collect()
}

/// Reduced Euler characteristic `Σ (-1)^(|σ|-1)` over all faces, ∅ included.
fn euler_brute(x: &Complex) -> i64 {
    faces_brute(x)
        .iter()
        .map(|f| if f.len() % 2 == 1 { 1 } else { -1 })
        .sum()
}

fn small_config() -> CollapseConfig {
    CollapseConfig {
        budget: 100_000,
        ..CollapseConfig::default()
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn betti_numbers_match_euler_characteristic(x in complex_strategy(7)) {
        let b = reduced_betti(&x).unwrap();
        let chi: i64 = b
            .nonzero()
            .iter()
            .map(|&(d, v)| if d.rem_euclid(2) == 0 { v as i64 } else { -(v as i64) })
            .sum();
        prop_assert_eq!(chi, euler_brute(&x));
    }

    #[test]
    fn face_enumeration_matches_definition(x in complex_strategy(7)) {
        let mut seen = Vec::new();
        x.for_each_face(|f| seen.push(f));
        seen.sort();
        let mut brute = faces_brute(&x);
        brute.sort();
        prop_assert_eq!(seen, brute);
    }

    #[test]
    fn dual_nerve_route_matches_direct(x in complex_strategy(7)) {
        prop_assume!(!x.is_void() && !x.is_complete() && x.vertex_set() == x.ground());
        prop_assert_eq!(betti_via_dual_nerve_complex(&x).unwrap(), reduced_betti(&x).unwrap());
    }

    #[test]
    fn nerve_of_facets_has_the_same_homology(x in complex_strategy(7)) {
        prop_assume!(!x.is_void());
        let fam = SetFamily::new(x.ground(), x.facets().to_vec()).unwrap();
        prop_assert_eq!(reduced_betti(&nerve(&fam).unwrap()).unwrap(), reduced_betti(&x).unwrap());
    }

    #[test]
    fn joins_convolve_betti_vectors(x in complex_strategy(4), y in complex_strategy(4)) {
        let shift = x.ground().len();
        let map: Vec<usize> = (0..y.ground().len()).map(|i| i + shift).collect();
        let y = y.relabel(&map).unwrap();
        let j = x.join(&y).unwrap();
        let predicted = join_betti(&reduced_betti(&x).unwrap(), &reduced_betti(&y).unwrap());
        prop_assert_eq!(reduced_betti(&j).unwrap(), predicted);
    }

    #[test]
    fn text_format_round_trips(x in complex_strategy(8), facets in any::<bool>()) {
        prop_assert_eq!(parse_complex(&write_complex(&x, facets)).unwrap(), x);
    }

    #[test]
    fn proper_collapses_keep_homology(x in complex_strategy(7), pick in any::<usize>()) {
        let steps: Vec<_> = free_faces(&x, 64)
            .into_iter()
            .filter(|s| s.free_face != s.carrier)
            .collect();
        prop_assume!(!steps.is_empty());
        let step = steps[pick % steps.len()];
        let y = apply_collapse(&x, &step).unwrap();
        prop_assert_eq!(reduced_betti(&y).unwrap(), reduced_betti(&x).unwrap());
    }

    #[test]
    fn collapse_witnesses_verify_and_dominate_leray(x in complex_strategy(6)) {
        let r = collapsibility_number(&x, &small_config());
        if let Some(w) = &r.witness {
            prop_assert!(verify_sequence(&x, w).is_valid());
            prop_assert_eq!(w.d, r.hi);
        }
        let l = leray_number(&x, 14).unwrap();
        prop_assert!(l <= r.hi);
        if let Some(c) = r.exact() {
            prop_assert!(l <= c);
        }
    }

    #[test]
    fn independence_complex_missing_faces(g in graph_strategy(9), n in 1usize..=4) {
        let x = Complex::independence_complex(&g, n).unwrap();
        let mut brute: Vec<VertexSet> = g
            .vertices()
            .subsets()
            .filter(|s| s.len() == n && g.edges().iter().all(|&(u, v)| !(s.contains(u) && s.contains(v))))
            .collect();
        brute.sort();
        prop_assert_eq!(x.missing_faces(), brute.as_slice());
    }

    #[test]
    fn rainbow_number_at_most_collapsibility_plus_one(g in graph_strategy(6), n in 2usize..=3) {
        let f = f_exact(&g, n, 10).unwrap();
        let c = collapsibility_number(&Complex::independence_complex(&g, n).unwrap(), &small_config());
        prop_assert!(f.f <= c.hi + 1, "f = {}, C <= {}", f.f, c.hi);
        prop_assert!(find_rainbow_independent(&g, &f.witness_family, n).is_none());
    }

    #[test]
    fn random_generators_respect_their_contracts(m in 1usize..=12, seed in any::<u64>()) {
        let g = random_max_degree(m, 3, seed).unwrap();
        prop_assert!(g.max_degree() <= 3);
        prop_assert_eq!(g, random_max_degree(m, 3, seed).unwrap());
        prop_assert!(random_chordal(m, seed).unwrap().is_chordal().0);
    }

    #[test]
    fn alpha_adds_over_disjoint_unions(a in graph_strategy(6), b in graph_strategy(6)) {
        let u = disjoint_union(&[a.clone(), b.clone()]).unwrap();
        prop_assert_eq!(u.alpha(), a.alpha() + b.alpha());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn union_homology_identity(a in graph_strategy(4), b in graph_strategy(4)) {
        let (ta, tb) = (a.alpha(), b.alpha());
        let u = disjoint_union(&[a.clone(), b.clone()]).unwrap();
        let whole = reduced_betti(&Complex::independence_complex(&u, ta + tb).unwrap()).unwrap();
        let parts = [
            reduced_betti(&Complex::independence_complex(&a, ta).unwrap()).unwrap(),
            reduced_betti(&Complex::independence_complex(&b, tb).unwrap()).unwrap(),
        ];
        prop_assert_eq!(whole, disjoint_union_betti(&parts));
    }
}
