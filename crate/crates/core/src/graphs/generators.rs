//! Deterministic and seeded graph families.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Graph;
use crate::error::{Error, Result};
use crate::set::VertexSet;

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}

/// Cycle `C_m` on `0..m`, `m >= 3`.
pub fn cycle(m: usize) -> Result<Graph> {
    if m < 3 {
        return Err(invalid(format!("cycle needs at least 3 vertices, got {m}")));
    }
    let edges: Vec<_> = (0..m).map(|i| (i, (i + 1) % m)).collect();
    Graph::from_edges(m, &edges)
}

/// Path on `m` vertices (`m - 1` edges).
pub fn path(m: usize) -> Result<Graph> {
    let edges: Vec<_> = (1..m).map(|i| (i - 1, i)).collect();
    Graph::from_edges(m, &edges)
}

pub fn complete(m: usize) -> Result<Graph> {
    let mut edges = Vec::new();
    for u in 0..m {
        for v in u + 1..m {
            edges.push((u, v));
        }
    }
    Graph::from_edges(m, &edges)
}

/// Complete multipartite graph; parts are consecutive index blocks.
pub fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
    let n: usize = parts.iter().sum();
    let mut part_of = Vec::with_capacity(n);
    for (p, &size) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(p, size));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if part_of[u] != part_of[v] {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges)
}

/// Circulant graph: `i ~ i +- s (mod m)` for each distance `s`, `1 <= s <= m/2`.
pub fn circulant(m: usize, distances: &[usize]) -> Result<Graph> {
    if m == 0 {
        return Err(invalid("circulant needs at least one vertex"));
    }
    for &s in distances {
        if s == 0 || s > m / 2 {
            return Err(invalid(format!(
                "circulant distance {s} outside 1..={}",
                m / 2
            )));
        }
    }
    let mut edges = Vec::new();
    for i in 0..m {
        for &s in distances {
            edges.push((i, (i + s) % m));
        }
    }
    Graph::from_edges(m, &edges)
}

/// The extremal graph `G_{k,n}`: a cycle of length `(k/2 + 1) n` with all
/// chords joining vertices at cycle distance at most `k/2`.
pub fn extremal_circulant(k: usize, n: usize) -> Result<Graph> {
    if k == 0 || !k.is_multiple_of(2) {
        return Err(invalid(format!(
            "k must be a positive even integer, got {k}"
        )));
    }
    if n == 0 {
        return Err(invalid("n must be positive"));
    }
    let m = (k / 2 + 1) * n;
    let dist: Vec<usize> = (1..=k / 2).collect();
    circulant(m, &dist)
}

/// Generalized Petersen graph `GP(m, j)`: outer cycle `0..m`, spokes
/// `i ~ m + i`, inner edges `m + i ~ m + (i + j mod m)`.
pub fn generalized_petersen(m: usize, j: usize) -> Result<Graph> {
    if m < 3 {
        return Err(invalid(format!(
            "generalized Petersen needs m >= 3, got {m}"
        )));
    }
    if j == 0 || 2 * j >= m {
        return Err(invalid(format!(
            "generalized Petersen needs 1 <= j < m/2, got j={j}, m={m}"
        )));
    }
    let mut edges = Vec::with_capacity(3 * m);
    for i in 0..m {
        edges.push((i, (i + 1) % m));
        edges.push((i, m + i));
        edges.push((m + i, m + (i + j) % m));
    }
    Graph::from_edges(2 * m, &edges)
}

/// The dodecahedral graph as `GP(10, 2)`: `a_1..a_10` are vertices `0..9`,
/// `b_1..b_10` are vertices `10..19`.
pub fn dodecahedral() -> Graph {
    generalized_petersen(10, 2).expect("valid parameters")
}

/// Disjoint union; the vertices of `graphs[i]` follow those of `graphs[i-1]`.
pub fn disjoint_union(graphs: &[Graph]) -> Result<Graph> {
    let n: usize = graphs.iter().map(|g| g.vertex_count()).sum();
    let mut out = Graph::empty(n)?;
    let mut offset = 0;
    for g in graphs {
        for (u, v) in g.edges() {
            out.add_edge(u + offset, v + offset)?;
        }
        offset += g.vertex_count();
    }
    Ok(out)
}

/// Random graph with maximum degree at most `max_degree`.
///
/// Proposes `4 * m * max_degree` uniform vertex pairs and keeps a proposal
/// unless it is a loop, a repeat, or would push a degree above the cap.
pub fn random_max_degree(m: usize, max_degree: usize, seed: u64) -> Result<Graph> {
    let mut g = Graph::empty(m)?;
    if m < 2 {
        return Ok(g);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..4 * m * max_degree {
        let u = rng.gen_range(0..m);
        let v = rng.gen_range(0..m);
        if u == v || g.has_edge(u, v) {
            continue;
        }
        if g.degree(u) >= max_degree || g.degree(v) >= max_degree {
            continue;
        }
        g.add_edge(u, v)?;
    }
    Ok(g)
}

/// Random chordal graph built by inserting vertices one at a time, each
/// attached to a random clique of the current graph (so each new vertex is
/// simplicial when inserted).
pub fn random_chordal(m: usize, seed: u64) -> Result<Graph> {
    let mut g = Graph::empty(m)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for v in 1..m {
        if rng.gen_bool(0.2) {
            continue;
        }
        let anchor = rng.gen_range(0..v);
        let mut candidates: Vec<usize> = g.neighbors(anchor).iter().filter(|&u| u < v).collect();
        candidates.shuffle(&mut rng);
        let mut clique = VertexSet::singleton(anchor);
        for u in candidates {
            if rng.gen_bool(0.5) && clique.is_subset(g.neighbors(u)) {
                clique.insert(u);
            }
        }
        for u in clique.iter() {
            g.add_edge(u, v)?;
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_degrees() {
        assert!((0..7).all(|v| cycle(7).unwrap().degree(v) == 2));
        for (k, n) in [(2, 2), (2, 3), (4, 2), (4, 3), (6, 2)] {
            let g = extremal_circulant(k, n).unwrap();
            assert_eq!(g.vertex_count(), (k / 2 + 1) * n);
            assert!(
                (0..g.vertex_count()).all(|v| g.degree(v) == k),
                "G_{{{k},{n}}}"
            );
        }
        let gp = generalized_petersen(10, 2).unwrap();
        assert_eq!(gp.vertex_count(), 20);
        assert!((0..20).all(|v| gp.degree(v) == 3));
    }

    #[test]
    fn small_identities() {
        assert_eq!(circulant(4, &[1]).unwrap(), cycle(4).unwrap());
        assert_eq!(extremal_circulant(2, 2).unwrap(), cycle(4).unwrap());
        // K_{2,2} with parts {0,1},{2,3} is the 4-cycle 0-2-1-3.
        let k22 = complete_multipartite(&[2, 2]).unwrap();
        let relabeled = Graph::from_edges(4, &[(0, 2), (2, 1), (1, 3), (3, 0)]).unwrap();
        assert_eq!(k22, relabeled);
        assert_eq!(path(2).unwrap().edges(), vec![(0, 1)]);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(circulant(6, &[4]).is_err());
        assert!(circulant(6, &[0]).is_err());
        assert!(generalized_petersen(10, 5).is_err());
        assert!(generalized_petersen(2, 1).is_err());
        assert!(extremal_circulant(3, 2).is_err());
        assert!(cycle(2).is_err());
    }

    #[test]
    fn dodecahedral_edges_follow_the_a_b_labeling() {
        let g = dodecahedral();
        let a = |i: usize| (i - 1) % 10;
        let b = |i: usize| 10 + (i - 1) % 10;
        for i in 1..=10 {
            assert!(g.has_edge(a(i), b(i)));
            assert!(g.has_edge(a(i), a(i % 10 + 1)));
            assert!(g.has_edge(b(i), b((i + 1) % 10 + 1)));
        }
        assert_eq!(g.edge_count(), 30);
    }

    #[test]
    fn random_generators_respect_contracts() {
        for seed in 0..40 {
            let g = random_max_degree(9, 3, seed).unwrap();
            assert!(g.max_degree() <= 3);
            assert_eq!(g, random_max_degree(9, 3, seed).unwrap());
            let c = random_chordal(9, seed).unwrap();
            assert!(c.is_chordal().0);
            assert!(crate::graphs::tests::brute_chordal(&c));
        }
    }

    #[test]
    fn union_alpha_adds() {
        let parts = [cycle(5).unwrap(), path(4).unwrap(), complete(3).unwrap()];
        let u = disjoint_union(&parts).unwrap();
        assert_eq!(u.alpha(), parts.iter().map(|g| g.alpha()).sum::<usize>());
    }
}
