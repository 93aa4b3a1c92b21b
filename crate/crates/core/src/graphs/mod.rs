//! Simple undirected graphs on at most 64 vertices.
//!
//! Adjacency is stored as one neighbor bitmask per vertex, so every set
//! operation in the independence searches is a handful of word operations.

mod generators;
mod io;

pub use generators::*;
pub use io::{parse_edge_list, write_edge_list};

use crate::error::{Error, Result};
use crate::set::{VertexSet, MAX_VERTICES};

/// Default vertex limit for [`Graph::chromatic_number`].
pub const DEFAULT_COLORING_LIMIT: usize = 40;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl Graph {
    /// Graph with no edges.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                got: n,
                max: MAX_VERTICES,
            });
        }
        Ok(Graph {
            n,
            adj: vec![VertexSet::EMPTY; n],
        })
    }

    /// Builds a graph from unordered pairs, dropping duplicates.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: w,
                    n: self.n,
                });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Open neighborhood `N(v)`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    /// Closed neighborhood `N[v]`.
    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        self.adj[v].with(v)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.adj[v].is_disjoint(s))
    }

    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| s.without(v).is_subset(self.adj[v]))
    }

    /// A vertex whose closed neighborhood is a clique.
    pub fn is_simplicial(&self, v: usize) -> bool {
        self.is_clique(self.closed_neighbors(v))
    }

    /// Induced subgraph on `keep`, relabeled to `0..keep.len()` in increasing order.
    pub fn induced_relabeled(&self, keep: VertexSet) -> Graph {
        let order = keep.to_vec();
        let mut g = Graph::empty(order.len()).expect("subgraph of a valid graph");
        for (i, &u) in order.iter().enumerate() {
            for (j, &v) in order.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.adj[i].insert(j);
                    g.adj[j].insert(i);
                }
            }
        }
        g
    }

    /// Independence number of the induced subgraph `G[U]`.
    pub fn independence_number(&self, within: VertexSet) -> usize {
        self.alpha_rec(within.intersection(self.vertices()))
    }

    /// Independence number of the whole graph.
    pub fn alpha(&self) -> usize {
        self.independence_number(self.vertices())
    }

    fn alpha_rec(&self, cand: VertexSet) -> usize {
        if cand.is_empty() {
            return 0;
        }
        // Vertices of degree <= 1 inside `cand` can always be taken.
        let mut best_v = 0;
        let mut best_deg = 0;
        for v in cand.iter() {
            let d = self.adj[v].intersection(cand).len();
            if d <= 1 {
                return 1 + self.alpha_rec(cand.difference(self.closed_neighbors(v)));
            }
            if d > best_deg {
                best_deg = d;
                best_v = v;
            }
        }
        let without = self.alpha_rec(cand.without(best_v));
        let with = 1 + self.alpha_rec(cand.difference(self.closed_neighbors(best_v)));
        without.max(with)
    }

    /// All independent sets of exactly `size` vertices, in lexicographic order
    /// of their sorted member lists.
    pub fn independent_sets_of_size(&self, size: usize) -> Vec<VertexSet> {
        self.independent_sets_of_size_within(self.vertices(), size)
    }

    /// All independent sets of exactly `size` vertices inside `within`.
    pub fn independent_sets_of_size_within(
        &self,
        within: VertexSet,
        size: usize,
    ) -> Vec<VertexSet> {
        let mut out = Vec::new();
        self.collect_independent(
            VertexSet::EMPTY,
            within.intersection(self.vertices()),
            size,
            &mut out,
        );
        out
    }

    fn collect_independent(
        &self,
        chosen: VertexSet,
        cand: VertexSet,
        size: usize,
        out: &mut Vec<VertexSet>,
    ) {
        if chosen.len() == size {
            out.push(chosen);
            return;
        }
        if chosen.len() + cand.len() < size {
            return;
        }
        let mut rest = cand;
        while let Some(v) = rest.first() {
            rest.remove(v);
            if chosen.len() + 1 + rest.len() < size {
                break;
            }
            self.collect_independent(chosen.with(v), rest.difference(self.adj[v]), size, out);
        }
    }

    /// Chordality by repeated deletion of a simplicial vertex (smallest index first).
    ///
    /// Returns the perfect elimination order when the graph is chordal.
    pub fn is_chordal(&self) -> (bool, Option<Vec<usize>>) {
        let mut remaining = self.vertices();
        let mut order = Vec::with_capacity(self.n);
        while !remaining.is_empty() {
            let simplicial = remaining.iter().find(|&v| {
                let nb = self.adj[v].intersection(remaining);
                nb.iter().all(|u| nb.without(u).is_subset(self.adj[u]))
            });
            match simplicial {
                Some(v) => {
                    order.push(v);
                    remaining.remove(v);
                }
                None => return (false, None),
            }
        }
        (true, Some(order))
    }

    /// True iff no vertex has three pairwise non-adjacent neighbors.
    pub fn is_claw_free(&self) -> bool {
        self.find_claw().is_none()
    }

    /// A claw as `(center, [leaves])`, if one exists.
    pub fn find_claw(&self) -> Option<(usize, [usize; 3])> {
        for c in 0..self.n {
            if let Some(&leaves) = self.independent_sets_of_size_within(self.adj[c], 3).first() {
                let l = leaves.to_vec();
                return Some((c, [l[0], l[1], l[2]]));
            }
        }
        None
    }

    /// Exact chromatic number with a witness coloring (`coloring[v]` in `0..k`).
    pub fn chromatic_number(&self) -> Result<(usize, Vec<usize>)> {
        self.chromatic_number_with_limit(DEFAULT_COLORING_LIMIT)
    }

    pub fn chromatic_number_with_limit(&self, limit: usize) -> Result<(usize, Vec<usize>)> {
        if self.n > limit {
            return Err(Error::SearchLimit {
                size: self.n,
                limit,
            });
        }
        if self.n == 0 {
            return Ok((0, Vec::new()));
        }
        // Largest-degree-first ordering tightens the backtracking.
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(self.degree(v)), v));
        for k in 1..=self.n {
            let mut colors = vec![usize::MAX; self.n];
            if self.color_rec(&order, 0, k, 0, &mut colors) {
                return Ok((k, colors));
            }
        }
        unreachable!("n colors always suffice")
    }

    fn color_rec(
        &self,
        order: &[usize],
        idx: usize,
        k: usize,
        used: usize,
        colors: &mut [usize],
    ) -> bool {
        if idx == order.len() {
            return true;
        }
        let v = order[idx];
        // Symmetry breaking: a fresh color is only ever the next unused one.
        let top = (used + 1).min(k);
        for c in 0..top {
            if self.adj[v].iter().any(|u| colors[u] == c) {
                continue;
            }
            colors[v] = c;
            if self.color_rec(order, idx + 1, k, used.max(c + 1), colors) {
                return true;
            }
        }
        colors[v] = usize::MAX;
        false
    }

    /// Connected components as vertex sets.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::EMPTY;
        let mut comps = Vec::new();
        for s in 0..self.n {
            if seen.contains(s) {
                continue;
            }
            let mut comp = VertexSet::singleton(s);
            let mut frontier = comp;
            while let Some(v) = frontier.first() {
                frontier.remove(v);
                let fresh = self.adj[v].difference(comp);
                comp = comp.union(fresh);
                frontier = frontier.union(fresh);
            }
            seen = seen.union(comp);
            comps.push(comp);
        }
        comps
    }
}
