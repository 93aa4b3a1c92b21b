use serde::{Deserialize, Serialize};

use super::Complex;
use crate::error::{Error, Result};
use crate::set::{maximalize, VertexSet};

/// An ordered list of vertex sets over a common ground set; repetition allowed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SetFamily {
    pub ground: VertexSet,
    pub sets: Vec<VertexSet>,
}

impl SetFamily {
    pub fn new(ground: VertexSet, sets: Vec<VertexSet>) -> Result<Self> {
        if let Some(s) = sets.iter().find(|s| !s.is_subset(ground)) {
            return Err(Error::InvalidParameter(format!(
                "member {s} not inside ground {ground}"
            )));
        }
        Ok(SetFamily { ground, sets })
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }
}

/// Nerve `N(F) = { I ⊆ [m] : ∩_{i∈I} A_i ≠ ∅ }` on the index set `0..m`.
///
/// The facets are the maximal sets `{ i : x ∈ A_i }` over ground points `x`.
pub fn nerve(family: &SetFamily) -> Result<Complex> {
    let m = family.sets.len();
    if m > crate::set::MAX_VERTICES {
        return Err(Error::TooManyVertices {
            got: m,
            max: crate::set::MAX_VERTICES,
        });
    }
    let mut facets: Vec<VertexSet> = family
        .ground
        .iter()
        .map(|x| {
            family
                .sets
                .iter()
                .enumerate()
                .filter(|(_, a)| a.contains(x))
                .map(|(i, _)| i)
                .collect()
        })
        .collect();
    facets.push(VertexSet::EMPTY);
    Complex::from_facets(VertexSet::full(m), maximalize(facets))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(v: &[usize]) -> VertexSet {
        VertexSet::from_slice(v)
    }

    #[test]
    fn small_nerves() {
        let same = SetFamily::new(vs(&[0, 1]), vec![vs(&[0]), vs(&[0])]).unwrap();
        assert!(nerve(&same).unwrap().is_complete());
        let apart = SetFamily::new(vs(&[0, 1]), vec![vs(&[0]), vs(&[1])]).unwrap();
        let n = nerve(&apart).unwrap();
        assert_eq!(n.facets(), &[vs(&[0]), vs(&[1])]);
        assert_eq!(n.missing_faces(), &[vs(&[0, 1])]);
        let none = SetFamily::new(vs(&[0]), vec![VertexSet::EMPTY]).unwrap();
        assert_eq!(nerve(&none).unwrap().facets(), &[VertexSet::EMPTY]);
    }

    #[test]
    fn nerve_membership_matches_definition() {
        let fam = SetFamily::new(
            VertexSet::full(6),
            vec![
                vs(&[0, 1, 2]),
                vs(&[2, 3]),
                vs(&[3, 4, 0]),
                vs(&[5]),
                vs(&[0, 2]),
            ],
        )
        .unwrap();
        let n = nerve(&fam).unwrap();
        for idx in VertexSet::full(5).subsets() {
            let inter = idx
                .iter()
                .fold(fam.ground, |acc, i| acc.intersection(fam.sets[i]));
            assert_eq!(n.is_face(idx), !inter.is_empty(), "{idx}");
        }
    }
}
