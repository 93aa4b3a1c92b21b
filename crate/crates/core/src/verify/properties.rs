//! Seeded randomized identity checks over small complexes and graphs.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::collapse::{apply_collapse, collapsibility_number, free_faces, CollapseConfig};
use crate::complexes::{nerve, Complex, SetFamily};
use crate::graphs::{random_chordal, Graph};
use crate::homology::{boundary_matrix, join_betti, leray_number, reduced_betti};
use crate::rainbow::f_exact;
use crate::set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyOutcome {
    pub name: String,
    /// Instances on which the identity was evaluated.
    pub instances: usize,
    /// Instances drawn but not evaluable (an exact value was unavailable).
    pub skipped: usize,
    pub failures: usize,
    pub first_failure: Option<String>,
}

impl PropertyOutcome {
    pub fn passed(&self, min_instances: usize) -> bool {
        self.failures == 0 && self.instances >= min_instances
    }
}

/// `Some(true)` holds, `Some(false)` violated, `None` not evaluable.
type Trial = fn(&mut ChaCha8Rng) -> (Option<bool>, String);

fn run(name: &str, target: usize, seed: u64, trial: Trial) -> PropertyOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = PropertyOutcome {
        name: name.to_string(),
        instances: 0,
        skipped: 0,
        failures: 0,
        first_failure: None,
    };
    let mut attempts = 0;
    while out.instances < target && attempts < 20 * target {
        attempts += 1;
        let (res, desc) = trial(&mut rng);
        match res {
            Some(true) => out.instances += 1,
            Some(false) => {
                out.instances += 1;
                out.failures += 1;
                out.first_failure.get_or_insert(desc);
            }
            None => out.skipped += 1,
        }
    }
    out
}

fn random_complex(rng: &mut ChaCha8Rng, max_vertices: usize) -> Complex {
    let m = rng.gen_range(1..=max_vertices);
    let k = rng.gen_range(0..=m);
    let missing: Vec<VertexSet> = (0..k)
        .map(|_| {
            let size = rng.gen_range(1..=m.min(4));
            let mut verts: Vec<usize> = (0..m).collect();
            verts.shuffle(rng);
            verts[..size].iter().copied().collect()
        })
        .collect();
    Complex::from_missing_faces(VertexSet::full(m), missing).expect("within ground")
}

fn random_graph(rng: &mut ChaCha8Rng, max_vertices: usize) -> Graph {
    let m = rng.gen_range(2..=max_vertices);
    let p = rng.gen_range(0.2..0.6);
    let mut edges = Vec::new();
    for u in 0..m {
        for v in u + 1..m {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(m, &edges).expect("valid edges")
}

fn boundary_squares_to_zero(rng: &mut ChaCha8Rng) -> (Option<bool>, String) {
    let x = random_complex(rng, 7);
    let Some(dim) = x.dimension() else {
        return (None, String::new());
    };
    let layers: Vec<Vec<VertexSet>> = (0..=(dim + 1) as usize)
        .map(|k| x.faces_of_size(k, 1 << 16).expect("small"))
        .collect();
    for k in 2..layers.len() {
        let hi = boundary_matrix(&layers[k], &layers[k - 1]);
        let lo = boundary_matrix(&layers[k - 1], &layers[k - 2]);
        for (r, row) in lo.iter().enumerate() {
            for c in 0..layers[k].len() {
                let s: i64 = row.iter().zip(&hi).map(|(a, h)| a * h[c]).sum();
                if s != 0 {
                    return (
                        Some(false),
                        format!("{x:?}: entry ({r},{c}) of the square is {s}"),
                    );
                }
            }
        }
    }
    (Some(true), String::new())
}

fn alexander_duality(rng: &mut ChaCha8Rng) -> (Option<bool>, String) {
    let x = random_complex(rng, 7);
    if x.is_void() || x.is_complete() {
        return (None, String::new());
    }
    let dual = x.alexander_dual();
    let (bx, bd) = (reduced_betti(&x).unwrap(), reduced_betti(&dual).unwrap());
    let v = x.ground().len() as isize;
    let ok = (-1..=v).all(|i| bd.get(i) == bx.get(v - i - 3));
    (Some(ok), format!("{x:?}: X {bx}, dual {bd}"))
}

fn nerve_of_facets(rng: &mut ChaCha8Rng) -> (Option<bool>, String) {
    let x = random_complex(rng, 7);
    if x.is_void() {
        return (None, String::new());
    }
    let fam = SetFamily::new(x.ground(), x.facets().to_vec()).unwrap();
    let n = nerve(&fam).unwrap();
    let (bx, bn) = (reduced_betti(&x).unwrap(), reduced_betti(&n).unwrap());
    (Some(bx == bn), format!("{x:?}: X {bx}, nerve {bn}"))
}

fn kunneth_join(rng: &mut ChaCha8Rng) -> (Option<bool>, String) {
    let x = random_complex(rng, 5);
    let y = random_complex(rng, 5);
    let shift = x.ground().len();
    let map: Vec<usize> = (0..64).map(|i| (i + shift).min(63)).collect();
    let y = y.relabel(&map[..y.ground().len()]).unwrap();
    let j = x.join(&y).unwrap();
    let (bx, by, bj) = (
        reduced_betti(&x).unwrap(),
        reduced_betti(&y).unwrap(),
        reduced_betti(&j).unwrap(),
    );
    let predicted = join_betti(&bx, &by);
    (
        Some(bj == predicted),
        format!("{x:?} * {y:?}: join {bj}, predicted {predicted}"),
    )
}

fn collapse_keeps_homology(rng: &mut ChaCha8Rng) -> (Option<bool>, String) {
    let x = random_complex(rng, 7);
    if x.is_void() {
        return (None, String::new());
    }
    // Removing a bare facet (free face equal to its carrier) changes
    // homology; a proper interval is a sequence of classical collapses.
    let steps: Vec<_> = free_faces(&x, 64)
        .into_iter()
        .filter(|s| s.free_face != s.carrier)
        .collect();
    let Some(step) = steps.choose(rng) else {
        return (None, String::new());
    };
    let y = apply_collapse(&x, step).unwrap();
    let (bx, by) = (reduced_betti(&x).unwrap(), reduced_betti(&y).unwrap());
    (
        Some(bx == by),
        format!("{x:?} with {step:?}: before {bx}, after {by}"),
    )
}

fn missing_faces_are_independent_sets(rng: &mut ChaCha8Rng) -> (Option<bool>, String) {
    let g = random_graph(rng, 9);
    let n = rng.gen_range(1..=4);
    let x = Complex::independence_complex(&g, n).unwrap();
    let edges = g.edges();
    let mut brute: Vec<VertexSet> = VertexSet::full(g.vertex_count())
        .subsets()
        .filter(|s| s.len() == n && !edges.iter().any(|&(u, v)| s.contains(u) && s.contains(v)))
        .collect();
    brute.sort();
    (
        Some(x.missing_faces() == brute.as_slice()),
        format!("{g:?}, n = {n}"),
    )
}

fn link_factorization(rng: &mut ChaCha8Rng) -> (Option<bool>, String) {
    let g = random_chordal(rng.gen_range(2..=9), rng.gen()).unwrap();
    let n = rng.gen_range(2..=4);
    let simplicial: Vec<usize> = (0..g.vertex_count())
        .filter(|&v| g.is_simplicial(v))
        .collect();
    let &v = simplicial
        .choose(rng)
        .expect("chordal graphs have simplicial vertices");
    let x = Complex::independence_complex(&g, n).unwrap();
    let rest = g.vertices().difference(g.closed_neighbors(v));
    let smaller = Complex::independence_complex(&g, n - 1)
        .unwrap()
        .induced(rest);
    let rhs = Complex::complete(g.neighbors(v)).join(&smaller).unwrap();
    let lk = x.link(VertexSet::singleton(v));
    (
        Some(lk.same_faces(&rhs)),
        format!("{g:?}, n = {n}, v = {v}"),
    )
}

fn small_config() -> CollapseConfig {
    CollapseConfig {
        budget: 200_000,
        ..CollapseConfig::default()
    }
}

fn leray_below_collapsibility(rng: &mut ChaCha8Rng) -> (Option<bool>, String) {
    let x = if rng.gen_bool(0.5) {
        random_complex(rng, 6)
    } else {
        let g = random_graph(rng, 7);
        Complex::independence_complex(&g, rng.gen_range(2..=3)).unwrap()
    };
    let Ok(l) = leray_number(&x, 14) else {
        return (None, String::new());
    };
    match collapsibility_number(&x, &small_config()).exact() {
        Some(c) => (Some(l <= c), format!("{x:?}: L = {l}, C = {c}")),
        None => (None, String::new()),
    }
}

fn rainbow_below_collapsibility(rng: &mut ChaCha8Rng) -> (Option<bool>, String) {
    let g = random_graph(rng, 7);
    let n = rng.gen_range(2..=3);
    let f = f_exact(&g, n, 12).unwrap();
    let x = Complex::independence_complex(&g, n).unwrap();
    match (
        f.exact(),
        collapsibility_number(&x, &small_config()).exact(),
    ) {
        (Some(f), Some(c)) => (
            Some(f <= c + 1),
            format!("{g:?}, n = {n}: f = {f}, C = {c}"),
        ),
        _ => (None, String::new()),
    }
}

/// Runs every identity on `instances` seeded instances each.
pub fn property_suites(instances: usize, seed: u64) -> Vec<PropertyOutcome> {
    let suites: [(&str, Trial); 9] = [
        ("boundary of boundary is zero", boundary_squares_to_zero),
        ("Alexander duality on Betti numbers", alexander_duality),
        ("nerve of the facet cover", nerve_of_facets),
        ("Kunneth formula for joins", kunneth_join),
        (
            "collapsing a proper interval keeps Betti numbers",
            collapse_keeps_homology,
        ),
        (
            "missing faces are the independent n-sets",
            missing_faces_are_independent_sets,
        ),
        (
            "link at a simplicial vertex factors as a join",
            link_factorization,
        ),
        (
            "Leray number at most collapsibility number",
            leray_below_collapsibility,
        ),
        (
            "rainbow number at most collapsibility number + 1",
            rainbow_below_collapsibility,
        ),
    ];
    suites
        .iter()
        .enumerate()
        .map(|(i, (name, trial))| run(name, instances, seed.wrapping_add(i as u64), *trial))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_pass_on_a_few_instances() {
        for o in property_suites(10, 7) {
            assert!(o.passed(10), "{o:?}");
        }
    }
}
