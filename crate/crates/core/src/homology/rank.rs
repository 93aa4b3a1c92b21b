//! Exact rank of sparse integer matrices.
//!
//! Columns are reduced left to right by their lowest nonzero row ("low"),
//! using fraction-free row operations `v <- b·v - a·w` followed by division
//! by the content gcd. Every step is exact over the integers, so the rank is
//! the rank over the rationals. Entries start in `i64` with checked
//! arithmetic; on overflow the whole computation restarts over `BigInt`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A sparse column: `(row, value)` pairs with strictly increasing rows and
/// nonzero values.
pub type SparseColumn = Vec<(u32, i64)>;

/// Result of reducing a matrix column by column.
#[derive(Debug, Clone, Default)]
pub struct Reduction {
    pub rank: usize,
    /// Rows that ended up as the low of some reduced column.
    pub pivot_rows: Vec<u32>,
}

trait Entry: Clone + std::fmt::Debug {
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn is_negative(&self) -> bool;
    fn neg(&self) -> Self;
    /// `b*x - a*y`, `None` on overflow.
    fn combine(b: &Self, x: &Self, a: &Self, y: &Self) -> Option<Self>;
    fn gcd(&self, other: &Self) -> Self;
    fn is_one(&self) -> bool;
    fn div_exact(&self, d: &Self) -> Self;
}

impl Entry for i64 {
    fn from_i64(v: i64) -> Self {
        v
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_negative(&self) -> bool {
        *self < 0
    }
    fn neg(&self) -> Self {
        -*self
    }
    fn combine(b: &Self, x: &Self, a: &Self, y: &Self) -> Option<Self> {
        b.checked_mul(*x)?.checked_sub(a.checked_mul(*y)?)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn is_one(&self) -> bool {
        *self == 1
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
}

impl Entry for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn neg(&self) -> Self {
        -self
    }
    fn combine(b: &Self, x: &Self, a: &Self, y: &Self) -> Option<Self> {
        Some(b * x - a * y)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
}

struct Overflow;

/// `b*v - a*w` merged over rows, dropping zeros.
fn combine<E: Entry>(
    b: &E,
    v: &[(u32, E)],
    a: &E,
    w: &[(u32, E)],
) -> Result<Vec<(u32, E)>, Overflow> {
    let zero = E::from_i64(0);
    let mut out = Vec::with_capacity(v.len() + w.len());
    let (mut i, mut j) = (0, 0);
    while i < v.len() || j < w.len() {
        let (row, x, y) = match (v.get(i), w.get(j)) {
            (Some(p), Some(q)) if p.0 == q.0 => {
                i += 1;
                j += 1;
                (p.0, &p.1, &q.1)
            }
            (Some(p), Some(q)) if p.0 < q.0 => {
                i += 1;
                (p.0, &p.1, &zero)
            }
            (Some(p), None) => {
                i += 1;
                (p.0, &p.1, &zero)
            }
            (_, Some(q)) => {
                j += 1;
                (q.0, &zero, &q.1)
            }
            (None, None) => unreachable!(),
        };
        let val = E::combine(b, x, a, y).ok_or(Overflow)?;
        if !val.is_zero() {
            out.push((row, val));
        }
    }
    Ok(out)
}

/// Divides by the content gcd and makes the low entry positive.
fn normalize<E: Entry>(v: &mut [(u32, E)]) {
    let Some(last) = v.last() else { return };
    let mut g = last.1.gcd(&last.1);
    for (_, x) in v.iter() {
        if g.is_one() {
            break;
        }
        g = g.gcd(x);
    }
    if last.1.is_negative() {
        g = g.neg();
    }
    if !g.is_one() {
        for (_, x) in v.iter_mut() {
            *x = x.div_exact(&g);
        }
    }
}

fn reduce_generic<E: Entry>(
    columns: &[SparseColumn],
    n_rows: usize,
) -> Result<Reduction, Overflow> {
    let mut pivot_of_row: Vec<u32> = vec![u32::MAX; n_rows];
    let mut reduced: Vec<Vec<(u32, E)>> = Vec::new();
    let mut pivot_rows = Vec::new();
    for col in columns {
        let mut v: Vec<(u32, E)> = col.iter().map(|&(r, x)| (r, E::from_i64(x))).collect();
        normalize(&mut v);
        while let Some(&(low, _)) = v.last() {
            let p = pivot_of_row[low as usize];
            if p == u32::MAX {
                pivot_of_row[low as usize] = reduced.len() as u32;
                pivot_rows.push(low);
                reduced.push(v);
                break;
            }
            let w = &reduced[p as usize];
            let a = &v.last().unwrap().1;
            let b = &w.last().unwrap().1;
            let g = a.gcd(b);
            let (a, b) = (a.div_exact(&g), b.div_exact(&g));
            v = combine(&b, &v, &a, w)?;
            normalize(&mut v);
        }
    }
    Ok(Reduction {
        rank: reduced.len(),
        pivot_rows,
    })
}

/// Reduces the columns of an `n_rows`-row integer matrix and returns its rank
/// over the rationals together with the pivot rows.
pub fn reduce_columns(columns: &[SparseColumn], n_rows: usize) -> Reduction {
    match reduce_generic::<i64>(columns, n_rows) {
        Ok(r) => r,
        Err(Overflow) => match reduce_generic::<BigInt>(columns, n_rows) {
            Ok(r) => r,
            Err(Overflow) => unreachable!("BigInt arithmetic does not overflow"),
        },
    }
}

pub fn rank(columns: &[SparseColumn], n_rows: usize) -> usize {
    reduce_columns(columns, n_rows).rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Dense exact rank by rational Gaussian elimination; a reference route
    /// independent of the sparse reduction.
    fn dense_rank(rows: &[Vec<i64>]) -> usize {
        use num_rational::BigRational;
        let mut m: Vec<Vec<BigRational>> = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&x| BigRational::from_integer(BigInt::from(x)))
                    .collect()
            })
            .collect();
        let n_cols = m.first().map_or(0, |r| r.len());
        let mut rank = 0;
        for c in 0..n_cols {
            let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else {
                continue;
            };
            m.swap(rank, p);
            let pivot = m[rank][c].clone();
            for r in 0..m.len() {
                if r != rank && !m[r][c].is_zero() {
                    let f = &m[r][c] / &pivot;
                    for k in c..n_cols {
                        let sub = &f * &m[rank][k];
                        m[r][k] -= sub;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    fn to_columns(rows: &[Vec<i64>]) -> Vec<SparseColumn> {
        let n_cols = rows.first().map_or(0, |r| r.len());
        (0..n_cols)
            .map(|c| {
                rows.iter()
                    .enumerate()
                    .filter(|(_, r)| r[c] != 0)
                    .map(|(i, r)| (i as u32, r[c]))
                    .collect()
            })
            .collect()
    }

    #[test]
    fn small_ranks() {
        let m = vec![vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]];
        assert_eq!(rank(&to_columns(&m), 3), 2);
        assert_eq!(dense_rank(&m), 2);
        assert_eq!(rank(&[], 4), 0);
    }

    #[test]
    fn overflow_falls_back_to_bigint() {
        let big = i64::MAX / 3;
        let m = vec![
            vec![big, big - 1, 1],
            vec![big - 7, big, 2],
            vec![3, big - 5, big],
        ];
        assert_eq!(rank(&to_columns(&m), 3), dense_rank(&m));
    }

    proptest! {
        #[test]
        fn sparse_agrees_with_dense(
            rows in prop::collection::vec(prop::collection::vec(-3i64..=3, 6), 1..7)
        ) {
            prop_assert_eq!(rank(&to_columns(&rows), rows.len()), dense_rank(&rows));
        }
    }
}
