//! Minimal transversals (hypergraph dualization) by Berge's incremental method.

use crate::set::{minimalize, VertexSet};

/// All inclusion-minimal sets meeting every edge. An empty edge admits no
/// transversal; an empty edge list has the single transversal `∅`.
pub fn minimal_transversals(edges: &[VertexSet]) -> Vec<VertexSet> {
    let mut edges = minimalize(edges.to_vec());
    edges.sort_by_key(|e| (e.len(), e.bits()));
    let mut current = vec![VertexSet::EMPTY];
    for e in edges {
        if e.is_empty() {
            return Vec::new();
        }
        let mut next = Vec::with_capacity(current.len() * 2);
        for t in &current {
            if !t.is_disjoint(e) {
                next.push(*t);
            } else {
                next.extend(e.iter().map(|v| t.with(v)));
            }
        }
        current = minimalize(next);
    }
    current
}
