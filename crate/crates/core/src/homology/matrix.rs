use std::collections::HashMap;
use std::io::{self, Write};

use rayon::prelude::*;

use crate::graph::VertexSet;

/// Sparse column-major boundary matrix `∂_q : C_q → C_{q-1}` with entries
/// in `{-1, 0, 1}`.
///
/// Rows are indexed by the (q−1)-faces and columns by the q-faces, both in
/// lexicographic order. A simplex is oriented by its sorted vertex list and
/// dropping the vertex at position `i` contributes the sign `(-1)^i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryMatrix {
    rows: usize,
    cols: Vec<Vec<(u32, i8)>>,
}

impl BoundaryMatrix {
    /// Boundary from `cols` (q-faces) to `rows` ((q−1)-faces). Codimension-one
    /// faces missing from `rows` are dropped, which yields the relative
    /// boundary when `rows` omits a subcomplex.
    pub fn from_faces(rows: &[VertexSet], cols: &[VertexSet]) -> Self {
        let index: HashMap<&VertexSet, u32> = rows
            .iter()
            .enumerate()
            .map(|(i, f)| (f, i as u32))
            .collect();
        let cols = cols
            .par_iter()
            .map(|face| {
                let mut col: Vec<(u32, i8)> = face
                    .iter()
                    .enumerate()
                    .filter_map(|(pos, v)| {
                        let sign = if pos % 2 == 0 { 1 } else { -1 };
                        index.get(&face.without(v)).map(|&r| (r, sign))
                    })
                    .collect();
                col.sort_unstable_by_key(|&(r, _)| r);
                col
            })
            .collect();
        Self {
            rows: rows.len(),
            cols,
        }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols: vec![Vec::new(); cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols.len()
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    /// Entries of column `j` as `(row, sign)`, sorted by row.
    pub fn column(&self, j: usize) -> &[(u32, i8)] {
        &self.cols[j]
    }

    pub fn transpose(&self) -> Self {
        let mut cols = vec![Vec::new(); self.rows];
        for (j, col) in self.cols.iter().enumerate() {
            for &(i, s) in col {
                cols[i as usize].push((j as u32, s));
            }
        }
        Self {
            rows: self.cols.len(),
            cols,
        }
    }

    /// Row-major sparse view with `i64` entries.
    pub(crate) fn to_rows(&self) -> Vec<Vec<(u32, i64)>> {
        let mut rows = vec![Vec::new(); self.rows];
        for (j, col) in self.cols.iter().enumerate() {
            for &(i, s) in col {
                rows[i as usize].push((j as u32, s as i64));
            }
        }
        rows
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut m = vec![vec![0i64; self.cols.len()]; self.rows];
        for (j, col) in self.cols.iter().enumerate() {
            for &(i, s) in col {
                m[i as usize][j] = s as i64;
            }
        }
        m
    }

    /// Whether `self ∘ upper = 0`, with `self = ∂_{q-1}` and `upper = ∂_q`.
    pub fn composes_to_zero(&self, upper: &BoundaryMatrix) -> bool {
        if self.cols.len() != upper.rows {
            return false;
        }
        upper.cols.par_iter().all(|col| {
            let mut acc: HashMap<u32, i64> = HashMap::new();
            for &(k, s) in col {
                for &(i, t) in &self.cols[k as usize] {
                    *acc.entry(i).or_default() += (s * t) as i64;
                }
            }
            acc.values().all(|&v| v == 0)
        })
    }

    /// Writes the matrix as text: a header `rows cols nnz`, then one
    /// `row col value` line per nonzero entry (0-based, column-major order).
    pub fn write_triplets<W: Write>(&self, mut w: W) -> io::Result<()> {
        writeln!(w, "{} {} {}", self.rows, self.cols.len(), self.nnz())?;
        for (j, col) in self.cols.iter().enumerate() {
            for &(i, s) in col {
                writeln!(w, "{i} {j} {s}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn triangle_boundary_signs() {
        let verts = vec![vs(&[0]), vs(&[1]), vs(&[2])];
        let edges = vec![vs(&[0, 1]), vs(&[0, 2]), vs(&[1, 2])];
        let d1 = BoundaryMatrix::from_faces(&verts, &edges);
        assert_eq!(
            d1.to_dense(),
            vec![vec![-1, -1, 0], vec![1, 0, -1], vec![0, 1, 1]]
        );
        let d2 = BoundaryMatrix::from_faces(&edges, &[vs(&[0, 1, 2])]);
        assert_eq!(d2.to_dense(), vec![vec![1], vec![-1], vec![1]]);
        assert!(d1.composes_to_zero(&d2));
        let d0 = BoundaryMatrix::from_faces(&[VertexSet::new()], &verts);
        assert!(d0.composes_to_zero(&d1));
    }

    #[test]
    fn transpose_and_triplets() {
        let verts = vec![vs(&[0]), vs(&[1])];
        let d = BoundaryMatrix::from_faces(&verts, &[vs(&[0, 1])]);
        assert_eq!(d.transpose().to_dense(), vec![vec![-1, 1]]);
        let mut buf = Vec::new();
        d.write_triplets(&mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "2 1 2\n0 0 -1\n1 0 1\n");
    }

    #[test]
    fn relative_rows_drop_entries() {
        // rows omit vertex 0, as in the pair (edge, {0})
        let d = BoundaryMatrix::from_faces(&[vs(&[1])], &[vs(&[0, 1])]);
        assert_eq!(d.to_dense(), vec![vec![1]]);
    }
}
