//! Generators for the two standard test problems.

use crate::linalg::SparseMatrix;
use crate::{Result, VncpError};

/// Tridiagonal pair: A = tridiag(-1, 8, -1), B = tridiag(-1, 4, -1).
pub fn generate_example_4_1(n: usize) -> Result<(SparseMatrix, SparseMatrix)> {
    if n < 2 {
        return Err(VncpError::InvalidParameter(format!(
            "example 4.1 needs n >= 2, got {n}"
        )));
    }
    Ok((tridiag(n, -1.0, 8.0, -1.0)?, tridiag(n, -1.0, 4.0, -1.0)?))
}

/// Block pair on an m x m grid (n = m^2):
/// A = Ahat + mu1*I with Ahat block-tridiagonal (S on the diagonal, -I off),
/// B = Bhat + mu2*I with Bhat = blockdiag(S), S = tridiag(-1, 8, -1).
pub fn generate_example_4_2(m: usize, mu1: f64, mu2: f64) -> Result<(SparseMatrix, SparseMatrix)> {
    if m < 2 {
        return Err(VncpError::InvalidParameter(format!(
            "example 4.2 needs m >= 2, got {m}"
        )));
    }
    if !mu1.is_finite() || !mu2.is_finite() {
        return Err(VncpError::NonFinite {
            context: "example 4.2 shift".into(),
        });
    }
    let n = m * m;
    let mut a = Vec::with_capacity(5 * n);
    let mut b = Vec::with_capacity(3 * n);
    for block in 0..m {
        for r in 0..m {
            let i = block * m + r;
            // S block on the diagonal, shifted by mu
            if r > 0 {
                a.push((i, i - 1, -1.0));
                b.push((i, i - 1, -1.0));
            }
            a.push((i, i, 8.0 + mu1));
            b.push((i, i, 8.0 + mu2));
            if r + 1 < m {
                a.push((i, i + 1, -1.0));
                b.push((i, i + 1, -1.0));
            }
            // -I couplings between neighbouring blocks, A only
            if block > 0 {
                a.push((i, i - m, -1.0));
            }
            if block + 1 < m {
                a.push((i, i + m, -1.0));
            }
        }
    }
    Ok((
        SparseMatrix::from_triplets(n, &a)?,
        SparseMatrix::from_triplets(n, &b)?,
    ))
}

fn tridiag(n: usize, lo: f64, d: f64, up: f64) -> Result<SparseMatrix> {
    let mut t = Vec::with_capacity(3 * n);
    for i in 0..n {
        if i > 0 {
            t.push((i, i - 1, lo));
        }
        t.push((i, i, d));
        if i + 1 < n {
            t.push((i, i + 1, up));
        }
    }
    SparseMatrix::from_triplets(n, &t)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dense(m: &SparseMatrix) -> Vec<Vec<f64>> {
        (0..m.n())
            .map(|i| (0..m.n()).map(|j| m.get(i, j)).collect())
            .collect()
    }

    #[test]
    fn example_4_1_stencils() {
        let (a, b) = generate_example_4_1(3).unwrap();
        assert_eq!(
            dense(&a),
            vec![
                vec![8.0, -1.0, 0.0],
                vec![-1.0, 8.0, -1.0],
                vec![0.0, -1.0, 8.0]
            ]
        );
        assert_eq!(
            dense(&b),
            vec![
                vec![4.0, -1.0, 0.0],
                vec![-1.0, 4.0, -1.0],
                vec![0.0, -1.0, 4.0]
            ]
        );
        let (a2, _) = generate_example_4_1(2).unwrap();
        assert_eq!(dense(&a2), vec![vec![8.0, -1.0], vec![-1.0, 8.0]]);
    }

    #[test]
    fn example_4_1_rejects_small_n() {
        assert!(generate_example_4_1(1).is_err());
        assert!(generate_example_4_1(0).is_err());
    }

    #[test]
    fn example_4_2_hand_assembly() {
        let (a, b) = generate_example_4_2(2, 4.0, 4.0).unwrap();
        assert_eq!(
            dense(&a),
            vec![
                vec![12.0, -1.0, -1.0, 0.0],
                vec![-1.0, 12.0, 0.0, -1.0],
                vec![-1.0, 0.0, 12.0, -1.0],
                vec![0.0, -1.0, -1.0, 12.0]
            ]
        );
        assert_eq!(
            dense(&b),
            vec![
                vec![12.0, -1.0, 0.0, 0.0],
                vec![-1.0, 12.0, 0.0, 0.0],
                vec![0.0, 0.0, 12.0, -1.0],
                vec![0.0, 0.0, -1.0, 12.0]
            ]
        );
    }

    #[test]
    fn example_4_2_dimension_is_m_squared() {
        let (a, b) = generate_example_4_2(40, 8.0, 4.0).unwrap();
        assert_eq!(a.n(), 1600);
        assert_eq!(b.n(), 1600);
        assert!(generate_example_4_2(1, 0.0, 0.0).is_err());
    }

    #[test]
    fn generated_matrices_are_symmetric() {
        let (a, b) = generate_example_4_1(20).unwrap();
        let (a2, b2) = generate_example_4_2(5, 4.0, 4.0).unwrap();
        for m in [&a, &b, &a2, &b2] {
            for i in 0..m.n() {
                for (j, v) in m.row(i) {
                    assert_eq!(m.get(j, i), v);
                }
            }
        }
    }
}
