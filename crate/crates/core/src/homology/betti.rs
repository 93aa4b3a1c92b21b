use std::collections::BTreeMap;
use std::fmt;

use serde::de::Error as _;
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Reduced Betti numbers indexed by degree, starting at `-1`.
///
/// Equality ignores trailing zeros, so vectors computed over different
/// dimension ranges compare by their homology alone.
#[derive(Clone, Default)]
pub struct BettiVector {
    /// `values[k]` is `β̃_{k-1}`.
    values: Vec<u64>,
}

impl BettiVector {
    pub fn from_values(values: Vec<u64>) -> Self {
        BettiVector { values }
    }

    /// The vector of the void complex: no degrees at all.
    pub fn zero_void() -> Self {
        BettiVector { values: Vec::new() }
    }

    /// Single nonzero entry `value` in `degree`.
    pub fn concentrated(degree: isize, value: u64) -> Self {
        let mut values = vec![0; (degree + 2) as usize];
        values[(degree + 1) as usize] = value;
        BettiVector { values }
    }

    pub fn get(&self, degree: isize) -> u64 {
        if degree < -1 {
            return 0;
        }
        self.values.get((degree + 1) as usize).copied().unwrap_or(0)
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    /// Largest degree stored (`dim X` for a computed vector), `-2` if none.
    pub fn max_degree(&self) -> isize {
        self.values.len() as isize - 2
    }

    /// Largest degree with nonzero Betti number.
    pub fn top_degree(&self) -> Option<isize> {
        self.values
            .iter()
            .rposition(|&b| b != 0)
            .map(|k| k as isize - 1)
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&b| b == 0)
    }

    /// `(degree, β̃)` for every nonzero entry.
    pub fn nonzero(&self) -> Vec<(isize, u64)> {
        self.values
            .iter()
            .enumerate()
            .filter(|(_, &b)| b != 0)
            .map(|(k, &b)| (k as isize - 1, b))
            .collect()
    }

    fn trimmed(&self) -> &[u64] {
        let end = self
            .values
            .iter()
            .rposition(|&b| b != 0)
            .map_or(0, |k| k + 1);
        &self.values[..end]
    }
}

/// `c[k] = Σ_{a+b=k-shift} x[a] y[b]` on the stored indices (index = degree + 1).
pub(crate) fn shifted_convolution(x: &BettiVector, y: &BettiVector, shift: usize) -> BettiVector {
    let (x, y) = (x.trimmed(), y.trimmed());
    if x.is_empty() || y.is_empty() {
        return BettiVector::zero_void();
    }
    let mut values = vec![0u64; x.len() + y.len() - 1 + shift];
    for (a, &p) in x.iter().enumerate() {
        for (b, &q) in y.iter().enumerate() {
            values[a + b + shift] += p * q;
        }
    }
    BettiVector { values }
}

impl PartialEq for BettiVector {
    fn eq(&self, other: &Self) -> bool {
        self.trimmed() == other.trimmed()
    }
}

impl Eq for BettiVector {}

impl fmt::Debug for BettiVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(
                self.values
                    .iter()
                    .enumerate()
                    .map(|(k, b)| (k as isize - 1, b)),
            )
            .finish()
    }
}

impl fmt::Display for BettiVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nz = self.nonzero();
        if nz.is_empty() {
            return write!(f, "all zero");
        }
        let parts: Vec<String> = nz.iter().map(|(i, b)| format!("b{i}={b}")).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl Serialize for BettiVector {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.values.len()))?;
        for (k, b) in self.values.iter().enumerate() {
            map.serialize_entry(&(k as isize - 1).to_string(), b)?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for BettiVector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw: BTreeMap<String, u64> = BTreeMap::deserialize(d)?;
        let mut values = Vec::new();
        for (key, b) in raw {
            let deg: isize = key
                .parse()
                .map_err(|_| D::Error::custom(format!("bad degree `{key}`")))?;
            if deg < -1 {
                return Err(D::Error::custom(format!("degree {deg} below -1")));
            }
            let k = (deg + 1) as usize;
            if values.len() <= k {
                values.resize(k + 1, 0);
            }
            values[k] = b;
        }
        Ok(BettiVector { values })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_is_an_ordered_degree_map() {
        let b = BettiVector::from_values(vec![0, 0, 3]);
        let s = serde_json::to_string(&b).unwrap();
        assert_eq!(s, r#"{"-1":0,"0":0,"1":3}"#);
        assert_eq!(serde_json::from_str::<BettiVector>(&s).unwrap(), b);
        assert!(serde_json::from_str::<BettiVector>(r#"{"-2":1}"#).is_err());
    }

    #[test]
    fn trailing_zeros_do_not_matter() {
        assert_eq!(
            BettiVector::from_values(vec![0, 1]),
            BettiVector::from_values(vec![0, 1, 0, 0])
        );
        assert_eq!(BettiVector::concentrated(2, 4).nonzero(), vec![(2, 4)]);
        assert_eq!(BettiVector::concentrated(2, 4).top_degree(), Some(2));
        assert_eq!(BettiVector::zero_void().top_degree(), None);
    }

    #[test]
    fn convolution_shifts_degrees() {
        // two 0-spheres joined give a circle
        let s0 = BettiVector::concentrated(0, 1);
        assert_eq!(
            shifted_convolution(&s0, &s0, 0),
            BettiVector::concentrated(1, 1)
        );
        let e = BettiVector::concentrated(-1, 1);
        assert_eq!(shifted_convolution(&e, &s0, 0), s0);
        assert_eq!(
            shifted_convolution(&e, &e, 1),
            BettiVector::concentrated(0, 1)
        );
    }
}
