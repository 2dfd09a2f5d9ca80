use std::cmp::Ordering;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use super::BoundaryMatrix;

/// Rank and invariant factors of an integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    /// Number of nonzero diagonal entries, units included.
    pub rank: usize,
    /// Diagonal entries greater than one, each dividing the next.
    pub invariant_factors: Vec<BigUint>,
}

/// Exact Smith normal form over `Z`.
pub fn smith_normal_form(m: &BoundaryMatrix) -> SnfResult {
    snf_rows(m.cols(), m.to_rows())
}

/// Smith normal form of a dense row-major matrix.
pub fn smith_normal_form_dense(m: &[Vec<i64>]) -> SnfResult {
    let cols = m.first().map_or(0, Vec::len);
    let rows = m
        .iter()
        .map(|r| {
            r.iter()
                .enumerate()
                .filter(|(_, &v)| v != 0)
                .map(|(j, &v)| (j as u32, v))
                .collect()
        })
        .collect();
    snf_rows(cols, rows)
}

/// Elimination runs in checked `i64`; any overflow restarts the whole
/// matrix in arbitrary precision.
fn snf_rows(cols: usize, rows: Vec<Vec<(u32, i64)>>) -> SnfResult {
    if let Some(out) = eliminate::<i64>(cols, convert(&rows)) {
        return out;
    }
    eliminate::<BigInt>(cols, convert(&rows)).expect("arbitrary precision cannot overflow")
}

fn convert<T: Coeff>(rows: &[Vec<(u32, i64)>]) -> Vec<Vec<(u32, T)>> {
    rows.iter()
        .map(|r| r.iter().map(|&(j, v)| (j, T::from_i64(v))).collect())
        .collect()
}

/// Integer coefficients for elimination. Arithmetic returns `None` on
/// overflow.
trait Coeff: Clone + PartialEq + std::fmt::Debug {
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn is_unit(&self) -> bool;
    /// `self - f * x`
    fn sub_mul(&self, f: &Self, x: &Self) -> Option<Self>;
    fn mul(&self, other: &Self) -> Option<Self>;
    fn div_trunc(&self, other: &Self) -> Option<Self>;
    fn cmp_abs(&self, other: &Self) -> Ordering;
    fn abs_value(&self) -> BigUint;
}

impl Coeff for i64 {
    fn from_i64(v: i64) -> Self {
        v
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
    fn sub_mul(&self, f: &Self, x: &Self) -> Option<Self> {
        self.checked_sub(f.checked_mul(*x)?)
    }
    fn mul(&self, other: &Self) -> Option<Self> {
        self.checked_mul(*other)
    }
    fn div_trunc(&self, other: &Self) -> Option<Self> {
        self.checked_div(*other)
    }
    fn cmp_abs(&self, other: &Self) -> Ordering {
        self.unsigned_abs().cmp(&other.unsigned_abs())
    }
    fn abs_value(&self) -> BigUint {
        BigUint::from(self.unsigned_abs())
    }
}

impl Coeff for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_unit(&self) -> bool {
        self.magnitude().is_one()
    }
    fn sub_mul(&self, f: &Self, x: &Self) -> Option<Self> {
        Some(self - f * x)
    }
    fn mul(&self, other: &Self) -> Option<Self> {
        Some(self * other)
    }
    fn div_trunc(&self, other: &Self) -> Option<Self> {
        Some(self / other)
    }
    fn cmp_abs(&self, other: &Self) -> Ordering {
        self.magnitude().cmp(other.magnitude())
    }
    fn abs_value(&self) -> BigUint {
        BigInt::magnitude(self).clone()
    }
}

fn eliminate<T: Coeff>(cols: usize, rows: Vec<Vec<(u32, T)>>) -> Option<SnfResult> {
    let mut sparse = Sparse::new(cols, rows);
    let unit_rank = sparse.unit_pivots()?;
    let residue = sparse.residue();
    let diagonal = dense_diagonal(residue)?;
    let rank = unit_rank + diagonal.len();
    Some(SnfResult {
        rank,
        invariant_factors: normalize(diagonal),
    })
}

/// Row-major sparse matrix with a (possibly stale) column index.
struct Sparse<T> {
    rows: Vec<Vec<(u32, T)>>,
    col_rows: Vec<Vec<u32>>,
    row_alive: Vec<bool>,
    col_alive: Vec<bool>,
}

impl<T: Coeff> Sparse<T> {
    fn new(cols: usize, rows: Vec<Vec<(u32, T)>>) -> Self {
        let mut col_rows = vec![Vec::new(); cols];
        for (i, r) in rows.iter().enumerate() {
            for &(j, _) in r {
                col_rows[j as usize].push(i as u32);
            }
        }
        Self {
            row_alive: vec![true; rows.len()],
            col_alive: vec![true; cols],
            rows,
            col_rows,
        }
    }

    fn entry(&self, r: usize, c: u32) -> Option<&T> {
        let row = &self.rows[r];
        row.binary_search_by_key(&c, |&(j, _)| j)
            .ok()
            .map(|k| &row[k].1)
    }

    /// Live rows with a nonzero in column `c`; compacts the index.
    fn column(&mut self, c: usize) -> Vec<u32> {
        let mut list = std::mem::take(&mut self.col_rows[c]);
        list.sort_unstable();
        list.dedup();
        list.retain(|&r| self.row_alive[r as usize] && self.entry(r as usize, c as u32).is_some());
        self.col_rows[c] = list.clone();
        list
    }

    /// Eliminates on unit pivots, sparsest column first and shortest pivot
    /// row within a column, until no live column has a unit entry. Each
    /// pivot clears its column by row operations; the pivot row and column
    /// are then removed. Returns the number of pivots.
    fn unit_pivots(&mut self) -> Option<usize> {
        let mut rank = 0;
        loop {
            let mut order: Vec<usize> = (0..self.col_alive.len())
                .filter(|&c| self.col_alive[c])
                .collect();
            order.sort_by_cached_key(|&c| (self.col_rows[c].len(), c));
            let mut progress = false;
            for c in order {
                let members = self.column(c);
                if members.is_empty() {
                    self.col_alive[c] = false;
                    continue;
                }
                let pivot = members
                    .iter()
                    .copied()
                    .filter(|&r| self.entry(r as usize, c as u32).is_some_and(T::is_unit))
                    .min_by_key(|&r| (self.rows[r as usize].len(), r));
                let Some(p) = pivot else { continue };
                let p = p as usize;
                let unit = self.entry(p, c as u32).cloned()?;
                let pivot_row = std::mem::take(&mut self.rows[p]);
                for &r in members.iter().filter(|&&r| r as usize != p) {
                    let r = r as usize;
                    let a = self.entry(r, c as u32).cloned()?;
                    // row_r -= a * unit * row_p, which zeroes column c since unit^2 = 1
                    let factor = a.mul(&unit)?;
                    let merged = combine(&self.rows[r], &factor, &pivot_row)?;
                    for &(j, _) in &merged {
                        if self.entry(r, j).is_none() {
                            self.col_rows[j as usize].push(r as u32);
                        }
                    }
                    self.rows[r] = merged;
                }
                self.row_alive[p] = false;
                self.col_alive[c] = false;
                rank += 1;
                progress = true;
            }
            if !progress {
                return Some(rank);
            }
        }
    }

    /// The live submatrix as dense rows.
    fn residue(self) -> Vec<Vec<T>> {
        let live_cols: Vec<usize> = (0..self.col_alive.len())
            .filter(|&c| self.col_alive[c])
            .collect();
        let mut position = vec![usize::MAX; self.col_alive.len()];
        for (k, &c) in live_cols.iter().enumerate() {
            position[c] = k;
        }
        self.rows
            .into_iter()
            .zip(self.row_alive)
            .filter(|(r, alive)| *alive && !r.is_empty())
            .map(|(r, _)| {
                let mut dense = vec![T::from_i64(0); live_cols.len()];
                for (j, v) in r {
                    dense[position[j as usize]] = v;
                }
                dense
            })
            .collect()
    }
}

/// `row - factor * pivot` for sorted sparse rows, dropping zeros.
fn combine<T: Coeff>(row: &[(u32, T)], factor: &T, pivot: &[(u32, T)]) -> Option<Vec<(u32, T)>> {
    let zero = T::from_i64(0);
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut k) = (0, 0);
    while i < row.len() || k < pivot.len() {
        let take_row = k == pivot.len() || (i < row.len() && row[i].0 < pivot[k].0);
        let take_pivot = i == row.len() || (k < pivot.len() && pivot[k].0 < row[i].0);
        if take_row {
            out.push(row[i].clone());
            i += 1;
        } else if take_pivot {
            let v = zero.sub_mul(factor, &pivot[k].1)?;
            out.push((pivot[k].0, v));
            k += 1;
        } else {
            let v = row[i].1.sub_mul(factor, &pivot[k].1)?;
            if !v.is_zero() {
                out.push((row[i].0, v));
            }
            i += 1;
            k += 1;
        }
    }
    Some(out)
}

/// Diagonalizes a dense matrix by unimodular row and column operations and
/// returns the nonzero diagonal magnitudes (not yet a divisibility chain).
fn dense_diagonal<T: Coeff>(mut a: Vec<Vec<T>>) -> Option<Vec<BigUint>> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut diagonal = Vec::new();
    for t in 0..rows.min(cols) {
        let Some((pi, pj)) = smallest_nonzero(&a, t..rows, t..cols) else {
            break;
        };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let pivot = a[t][t].clone();
            let mut clean = true;
            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_trunc(&pivot)?;
                if !q.is_zero() {
                    for j in t..cols {
                        let v = a[i][j].sub_mul(&q, &a[t][j])?;
                        a[i][j] = v;
                    }
                }
                clean &= a[i][t].is_zero();
            }
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_trunc(&pivot)?;
                if !q.is_zero() {
                    for row in a.iter_mut().skip(t) {
                        let v = row[j].sub_mul(&q, &row[t])?;
                        row[j] = v;
                    }
                }
                clean &= a[t][j].is_zero();
            }
            if clean {
                break;
            }
            // A remainder smaller than the pivot is left in row or column t.
            let in_col = smallest_nonzero(&a, t + 1..rows, t..t + 1);
            let in_row = smallest_nonzero(&a, t..t + 1, t + 1..cols);
            let pick = match (in_col, in_row) {
                (Some(c), Some(r)) => {
                    if a[c.0][c.1].cmp_abs(&a[r.0][r.1]) == Ordering::Greater {
                        r
                    } else {
                        c
                    }
                }
                (Some(c), None) => c,
                (None, Some(r)) => r,
                (None, None) => unreachable!("unclean pivot has a remainder"),
            };
            a.swap(t, pick.0);
            for row in a.iter_mut() {
                row.swap(t, pick.1);
            }
        }
        diagonal.push(a[t][t].abs_value());
    }
    Some(diagonal)
}

fn smallest_nonzero<T: Coeff>(
    a: &[Vec<T>],
    rows: std::ops::Range<usize>,
    cols: std::ops::Range<usize>,
) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in rows {
        for j in cols.clone() {
            if a[i][j].is_zero() {
                continue;
            }
            if let Some((bi, bj)) = best {
                if a[i][j].cmp_abs(&a[bi][bj]) != Ordering::Less {
                    continue;
                }
            }
            best = Some((i, j));
            if a[i][j].is_unit() {
                return best;
            }
        }
    }
    best
}

/// Turns any diagonal into the Smith diagonal by pairwise gcd/lcm and keeps
/// the entries greater than one.
fn normalize(diagonal: Vec<BigUint>) -> Vec<BigUint> {
    let mut d: Vec<BigUint> = diagonal.into_iter().filter(|x| !x.is_one()).collect();
    for i in 0..d.len() {
        for j in i + 1..d.len() {
            let g = d[i].gcd(&d[j]);
            let l = &d[i] / &g * &d[j];
            d[i] = g;
            d[j] = l;
        }
    }
    d.retain(|x| !x.is_one());
    d
}

/// Rank over `Z/p` by sparse row reduction; a cross-check for the exact
/// rank, which can only be larger.
pub fn rank_mod_p(m: &BoundaryMatrix, p: u64) -> usize {
    let mut pivots: std::collections::BTreeMap<u32, Vec<(u32, u64)>> = Default::default();
    let reduce = |x: i64| -> u64 { x.rem_euclid(p as i64) as u64 };
    for row in m.to_rows() {
        let mut r: Vec<(u32, u64)> = row.iter().map(|&(j, v)| (j, reduce(v))).collect();
        while let Some(&(lead, lv)) = r.first() {
            let Some(pr) = pivots.get(&lead) else {
                // normalize the new pivot row to a leading one
                let inv = mod_pow(lv, p - 2, p);
                for e in r.iter_mut() {
                    e.1 = e.1 * inv % p;
                }
                pivots.insert(lead, r);
                break;
            };
            let f = lv;
            let mut out = Vec::with_capacity(r.len() + pr.len());
            let (mut i, mut k) = (0, 0);
            while i < r.len() || k < pr.len() {
                if k == pr.len() || (i < r.len() && r[i].0 < pr[k].0) {
                    out.push(r[i]);
                    i += 1;
                } else if i == r.len() || pr[k].0 < r[i].0 {
                    out.push((pr[k].0, (p - f * pr[k].1 % p) % p));
                    k += 1;
                } else {
                    let v = (r[i].1 + p - f * pr[k].1 % p) % p;
                    if v != 0 {
                        out.push((r[i].0, v));
                    }
                    i += 1;
                    k += 1;
                }
            }
            r = out;
        }
    }
    pivots.len()
}

fn mod_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

/// `2^31 - 1`.
pub const RANK_PRIME: u64 = 2_147_483_647;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{rp2_triangulation, VertexSet};
    use proptest::prelude::*;

    fn factors(v: &[u64]) -> Vec<BigUint> {
        v.iter().map(|&x| BigUint::from(x)).collect()
    }

    /// Determinantal-divisor oracle: d_k = gcd of all k×k minors, factors are
    /// d_k / d_{k-1}.
    fn minors_oracle(m: &[Vec<i64>]) -> (usize, Vec<BigUint>) {
        let rows = m.len();
        let cols = m.first().map_or(0, Vec::len);
        let mut prev = BigInt::one();
        let mut out = Vec::new();
        let mut rank = 0;
        for k in 1..=rows.min(cols) {
            let mut g = BigInt::zero();
            for rs in subsets(rows, k) {
                for cs in subsets(cols, k) {
                    let sub: Vec<Vec<BigInt>> = rs
                        .iter()
                        .map(|&i| cs.iter().map(|&j| BigInt::from(m[i][j])).collect())
                        .collect();
                    g = g.gcd(&det(sub));
                }
            }
            if Zero::is_zero(&g) {
                break;
            }
            rank = k;
            let f = (&g / &prev).magnitude().clone();
            if !f.is_one() {
                out.push(f);
            }
            prev = g;
        }
        (rank, out)
    }

    fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
        (0u32..1 << n)
            .filter(|m| m.count_ones() as usize == k)
            .map(|m| (0..n).filter(|i| m & (1 << i) != 0).collect())
            .collect()
    }

    fn det(mut a: Vec<Vec<BigInt>>) -> BigInt {
        // Bareiss fraction-free elimination
        let n = a.len();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if Zero::is_zero(&a[k][k]) {
                let Some(s) = (k + 1..n).find(|&i| !Zero::is_zero(&a[i][k])) else {
                    return BigInt::zero();
                };
                a.swap(k, s);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        sign * &a[n - 1][n - 1]
    }

    #[test]
    fn diagonal_input() {
        let r = smith_normal_form_dense(&[vec![2, 0], vec![0, 6]]);
        assert_eq!((r.rank, r.invariant_factors), (2, factors(&[2, 6])));
        let r = smith_normal_form_dense(&[vec![6, 0], vec![0, 4]]);
        assert_eq!(r.invariant_factors, factors(&[2, 12]));
    }

    #[test]
    fn zero_matrix() {
        let r = smith_normal_form(&BoundaryMatrix::zero(3, 4));
        assert_eq!((r.rank, r.invariant_factors.len()), (0, 0));
        let r = smith_normal_form(&BoundaryMatrix::zero(0, 0));
        assert_eq!(r.rank, 0);
    }

    #[test]
    fn projective_plane_boundaries() {
        let triangles: Vec<VertexSet> = {
            let mut t: Vec<VertexSet> = rp2_triangulation()
                .iter()
                .map(|t| t.iter().copied().collect())
                .collect();
            t.sort();
            t
        };
        let mut edges: Vec<VertexSet> = (0..6)
            .flat_map(|u| (u + 1..6).map(move |v| [u, v].into_iter().collect()))
            .collect();
        edges.sort();
        let verts: Vec<VertexSet> = (0..6).map(VertexSet::singleton).collect();
        let d2 = BoundaryMatrix::from_faces(&edges, &triangles);
        let d1 = BoundaryMatrix::from_faces(&verts, &edges);
        assert!(d1.composes_to_zero(&d2));
        let s2 = smith_normal_form(&d2);
        let s1 = smith_normal_form(&d1);
        // H_2 = 0 forces full column rank; the factor 2 is H_1 = Z/2.
        assert_eq!(s2.rank, 10);
        assert_eq!(s2.invariant_factors, factors(&[2]));
        assert_eq!(s1.rank, 5);
        assert_eq!(15 - s1.rank - s2.rank, 0);
        assert_eq!(rank_mod_p(&d2, 2), 9);
        assert_eq!(rank_mod_p(&d2, RANK_PRIME), 10);
    }

    #[test]
    fn overflow_falls_back_to_big_integers() {
        let big = i64::MAX / 2 + 1;
        let m = vec![vec![big, 3], vec![big, big]];
        let r = smith_normal_form_dense(&m);
        let (rank, f) = minors_oracle(&m);
        assert_eq!((r.rank, r.invariant_factors), (rank, f));
    }

    #[test]
    fn non_unit_residue() {
        let m = vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]];
        let r = smith_normal_form_dense(&m);
        assert_eq!(r.invariant_factors, factors(&[2, 6, 12]));
    }

    proptest! {
        #[test]
        fn matches_minors_oracle(
            m in (1usize..5, 1usize..5).prop_flat_map(|(r, c)| {
                proptest::collection::vec(proptest::collection::vec(-6i64..7, c), r)
            })
        ) {
            let got = smith_normal_form_dense(&m);
            let (rank, f) = minors_oracle(&m);
            prop_assert_eq!(got.rank, rank);
            prop_assert_eq!(&got.invariant_factors, &f);
            for w in got.invariant_factors.windows(2) {
                prop_assert!((&w[1] % &w[0]).is_zero());
            }
        }

        #[test]
        fn sparse_unit_matrices(
            m in (1usize..7, 1usize..7).prop_flat_map(|(r, c)| {
                proptest::collection::vec(proptest::collection::vec(-1i64..2, c), r)
            })
        ) {
            let got = smith_normal_form_dense(&m);
            let t: Vec<Vec<i64>> = (0..m[0].len()).map(|j| m.iter().map(|r| r[j]).collect()).collect();
            let tt = smith_normal_form_dense(&t);
            prop_assert_eq!(&got, &tt);
            if m.len() <= 4 && m[0].len() <= 4 {
                let (rank, f) = minors_oracle(&m);
                prop_assert_eq!(got.rank, rank);
                prop_assert_eq!(got.invariant_factors, f);
            }
        }
    }
}
