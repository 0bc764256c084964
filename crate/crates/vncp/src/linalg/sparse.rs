//! Compressed-sparse-row square matrices and positive diagonal scalings.

use crate::{Result, VncpError};

/// Square real matrix in CSR form. Column indices are strictly increasing
/// within each row; explicit zeros are permitted; all values are finite.
#[derive(Debug, Clone, PartialEq)]
pub struct SparseMatrix {
    n: usize,
    row_offsets: Vec<usize>,
    col_indices: Vec<usize>,
    values: Vec<f64>,
}

impl SparseMatrix {
    /// Build from (row, col, value) triplets; duplicates are summed.
    pub fn from_triplets(n: usize, triplets: &[(usize, usize, f64)]) -> Result<Self> {
        if n == 0 {
            return Err(VncpError::InvalidParameter("dimension must be >= 1".into()));
        }
        for &(i, j, v) in triplets {
            if i >= n || j >= n {
                return Err(VncpError::InvalidParameter(format!(
                    "entry ({i}, {j}) out of bounds for dimension {n}"
                )));
            }
            if !v.is_finite() {
                return Err(VncpError::NonFinite {
                    context: format!("matrix entry ({i}, {j})"),
                });
            }
        }
        let mut sorted: Vec<(usize, usize, f64)> = triplets.to_vec();
        sorted.sort_by(|a, b| (a.0, a.1).cmp(&(b.0, b.1)));

        let mut row_offsets = Vec::with_capacity(n + 1);
        let mut col_indices: Vec<usize> = Vec::with_capacity(sorted.len());
        let mut values: Vec<f64> = Vec::with_capacity(sorted.len());
        let mut last: Option<(usize, usize)> = None;
        let mut current_row = 0usize;
        row_offsets.push(0);
        for (i, j, v) in sorted {
            if last == Some((i, j)) {
                *values.last_mut().unwrap() += v;
                continue;
            }
            while current_row < i {
                row_offsets.push(col_indices.len());
                current_row += 1;
            }
            col_indices.push(j);
            values.push(v);
            last = Some((i, j));
        }
        while current_row < n {
            row_offsets.push(col_indices.len());
            current_row += 1;
        }
        Ok(Self {
            n,
            row_offsets,
            col_indices,
            values,
        })
    }

    /// n x n identity.
    pub fn identity(n: usize) -> Self {
        Self {
            n,
            row_offsets: (0..=n).collect(),
            col_indices: (0..n).collect(),
            values: vec![1.0; n],
        }
    }

    /// Matrix with no stored entries.
    pub fn empty(n: usize) -> Self {
        Self {
            n,
            row_offsets: vec![0; n + 1],
            col_indices: Vec::new(),
            values: Vec::new(),
        }
    }

    pub(crate) fn from_csr_unchecked(
        n: usize,
        row_offsets: Vec<usize>,
        col_indices: Vec<usize>,
        values: Vec<f64>,
    ) -> Self {
        Self {
            n,
            row_offsets,
            col_indices,
            values,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn nnz(&self) -> usize {
        self.values.len()
    }

    pub fn row_offsets(&self) -> &[usize] {
        &self.row_offsets
    }

    pub fn col_indices(&self) -> &[usize] {
        &self.col_indices
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Stored entries of row `i` as (column, value) pairs.
    pub fn row(&self, i: usize) -> impl Iterator<Item = (usize, f64)> + '_ {
        let lo = self.row_offsets[i];
        let hi = self.row_offsets[i + 1];
        self.col_indices[lo..hi]
            .iter()
            .copied()
            .zip(self.values[lo..hi].iter().copied())
    }

    /// Entry (i, j), zero if not stored.
    pub fn get(&self, i: usize, j: usize) -> f64 {
        let lo = self.row_offsets[i];
        let hi = self.row_offsets[i + 1];
        match self.col_indices[lo..hi].binary_search(&j) {
            Ok(pos) => self.values[lo + pos],
            Err(_) => 0.0,
        }
    }

    /// Main diagonal, implicit zeros included.
    pub fn diagonal(&self) -> Vec<f64> {
        (0..self.n).map(|i| self.get(i, i)).collect()
    }

    /// True when every stored off-diagonal value is exactly zero.
    pub fn is_numerically_diagonal(&self) -> bool {
        (0..self.n).all(|i| self.row(i).all(|(j, v)| j == i || v == 0.0))
    }

    /// out = self * x
    pub fn matvec_into(&self, x: &[f64], out: &mut [f64]) {
        debug_assert_eq!(x.len(), self.n);
        for i in 0..self.n {
            let mut acc = 0.0;
            for (j, v) in self.row(i) {
                acc += v * x[j];
            }
            out[i] = acc;
        }
    }

    pub fn matvec(&self, x: &[f64]) -> Vec<f64> {
        let mut out = vec![0.0; self.n];
        self.matvec_into(x, &mut out);
        out
    }

    /// out = self^T * x
    pub fn matvec_transpose_into(&self, x: &[f64], out: &mut [f64]) {
        debug_assert_eq!(x.len(), self.n);
        out.fill(0.0);
        for i in 0..self.n {
            for (j, v) in self.row(i) {
                out[j] += v * x[i];
            }
        }
    }

    /// self + sign * Omega * other, with Omega applied as a row scaling.
    ///
    /// Used to assemble A + Omega B and A - Omega B.
    pub fn add_row_scaled(
        &self,
        omega: &DiagonalMatrix,
        other: &SparseMatrix,
        sign: f64,
    ) -> Result<SparseMatrix> {
        if other.n != self.n {
            return Err(VncpError::DimensionMismatch {
                expected: self.n,
                got: other.n,
            });
        }
        if omega.len() != self.n {
            return Err(VncpError::DimensionMismatch {
                expected: self.n,
                got: omega.len(),
            });
        }
        let mut row_offsets = Vec::with_capacity(self.n + 1);
        let mut col_indices = Vec::new();
        let mut values = Vec::new();
        row_offsets.push(0);
        for i in 0..self.n {
            let w = sign * omega.entries()[i];
            let mut a = self.row(i).peekable();
            let mut b = other.row(i).peekable();
            loop {
                match (a.peek().copied(), b.peek().copied()) {
                    (Some((ja, va)), Some((jb, vb))) => {
                        if ja < jb {
                            col_indices.push(ja);
                            values.push(va);
                            a.next();
                        } else if jb < ja {
                            col_indices.push(jb);
                            values.push(w * vb);
                            b.next();
                        } else {
                            col_indices.push(ja);
                            values.push(va + w * vb);
                            a.next();
                            b.next();
                        }
                    }
                    (Some((ja, va)), None) => {
                        col_indices.push(ja);
                        values.push(va);
                        a.next();
                    }
                    (None, Some((jb, vb))) => {
                        col_indices.push(jb);
                        values.push(w * vb);
                        b.next();
                    }
                    (None, None) => break,
                }
            }
            row_offsets.push(col_indices.len());
        }
        Ok(SparseMatrix {
            n: self.n,
            row_offsets,
            col_indices,
            values,
        })
    }
}

/// Diagonal matrix stored as its entries.
#[derive(Debug, Clone, PartialEq)]
pub struct DiagonalMatrix {
    entries: Vec<f64>,
}

impl DiagonalMatrix {
    pub fn new(entries: Vec<f64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(VncpError::InvalidParameter("dimension must be >= 1".into()));
        }
        if let Some(i) = entries.iter().position(|v| !v.is_finite()) {
            return Err(VncpError::NonFinite {
                context: format!("diagonal entry {i}"),
            });
        }
        Ok(Self { entries })
    }

    pub fn uniform(n: usize, value: f64) -> Result<Self> {
        Self::new(vec![value; n])
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[f64] {
        &self.entries
    }

    /// Largest |entry|; equals the spectral norm of the matrix.
    pub fn max_abs(&self) -> f64 {
        self.entries.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    /// out = diag * x
    pub fn scale_into(&self, x: &[f64], out: &mut [f64]) {
        for ((o, d), v) in out.iter_mut().zip(&self.entries).zip(x) {
            *o = d * v;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triplets_sorted_and_summed() {
        let m = SparseMatrix::from_triplets(2, &[(1, 0, 2.0), (0, 0, 1.0), (1, 0, 3.0)]).unwrap();
        assert_eq!(m.nnz(), 2);
        assert_eq!(m.get(0, 0), 1.0);
        assert_eq!(m.get(1, 0), 5.0);
        assert_eq!(m.get(0, 1), 0.0);
    }

    #[test]
    fn triplets_reject_bad_input() {
        assert!(SparseMatrix::from_triplets(2, &[(2, 0, 1.0)]).is_err());
        assert!(SparseMatrix::from_triplets(2, &[(0, 0, f64::NAN)]).is_err());
        assert!(SparseMatrix::from_triplets(0, &[]).is_err());
    }

    #[test]
    fn matvec_tridiagonal() {
        let m = SparseMatrix::from_triplets(
            3,
            &[
                (0, 0, 8.0),
                (0, 1, -1.0),
                (1, 0, -1.0),
                (1, 1, 8.0),
                (1, 2, -1.0),
                (2, 1, -1.0),
                (2, 2, 8.0),
            ],
        )
        .unwrap();
        assert_eq!(m.matvec(&[1.0, 1.0, 1.0]), vec![7.0, 6.0, 7.0]);
        let mut t = vec![0.0; 3];
        m.matvec_transpose_into(&[1.0, 2.0, 3.0], &mut t);
        // symmetric matrix: transpose product equals the plain product
        assert_eq!(t, m.matvec(&[1.0, 2.0, 3.0]));
    }

    #[test]
    fn add_row_scaled_merges_patterns() {
        let a = SparseMatrix::from_triplets(2, &[(0, 0, 1.0), (1, 1, 2.0)]).unwrap();
        let b = SparseMatrix::from_triplets(2, &[(0, 1, 1.0), (1, 1, 1.0)]).unwrap();
        let w = DiagonalMatrix::uniform(2, 5.0).unwrap();
        let c = a.add_row_scaled(&w, &b, 1.0).unwrap();
        assert_eq!(c.get(0, 0), 1.0);
        assert_eq!(c.get(0, 1), 5.0);
        assert_eq!(c.get(1, 1), 7.0);
        let s = a.add_row_scaled(&w, &b, -1.0).unwrap();
        assert_eq!(s.get(0, 1), -5.0);
        assert_eq!(s.get(1, 1), -3.0);
    }

    #[test]
    fn diagonal_detection() {
        let d = SparseMatrix::from_triplets(2, &[(0, 0, 1.0), (1, 1, -5.0)]).unwrap();
        assert!(d.is_numerically_diagonal());
        let e = SparseMatrix::from_triplets(2, &[(0, 1, 0.0), (1, 1, 1.0)]).unwrap();
        assert!(e.is_numerically_diagonal());
        let f = SparseMatrix::from_triplets(2, &[(0, 1, 2.0)]).unwrap();
        assert!(!f.is_numerically_diagonal());
        assert!(SparseMatrix::empty(4).is_numerically_diagonal());
    }
}
