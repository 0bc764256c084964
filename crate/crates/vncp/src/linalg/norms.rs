//! Spectral-norm estimation by power iteration.
//!
//! `spectral_norm` iterates on A^T A; `inv_norm_of_m` iterates on
//! M^{-T} M^{-1} applied through triangular or diagonal solves, so the
//! inverse is never formed. Both use the deterministic all-ones start,
//! a relative tolerance of 1e-10 on the singular-value estimate and an
//! iteration cap of 20000; structurally diagonal matrices take the exact
//! closed form instead.

use super::sparse::SparseMatrix;
use super::splitting::SplittingPlan;
use crate::linalg::norm2;

pub const POWER_TOL: f64 = 1e-10;
pub const POWER_CAP: usize = 20_000;

/// A norm estimate plus how it converged. A capped, unconverged run still
/// carries the best estimate; callers surface `converged = false` as a
/// warning rather than an error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormEstimate {
    pub value: f64,
    pub converged: bool,
    pub iterations: usize,
}

impl NormEstimate {
    fn exact(value: f64) -> Self {
        NormEstimate {
            value,
            converged: true,
            iterations: 0,
        }
    }
}

/// Largest singular value of `m`.
pub fn spectral_norm(m: &SparseMatrix) -> NormEstimate {
    if m.is_numerically_diagonal() {
        let d = m
            .diagonal()
            .iter()
            .fold(0.0f64, |acc, v| acc.max(v.abs()));
        return NormEstimate::exact(d);
    }
    let n = m.n();
    let mut w = vec![0.0; n];
    power_iterate(n, |x, z| {
        m.matvec_into(x, &mut w);
        m.matvec_transpose_into(&w, z);
    })
}

/// Spectral norm of M^{-1} for the plan's M.
///
/// For a diagonal M the value is exactly 1/min|d_i|.
pub fn inv_norm_of_m(plan: &SplittingPlan) -> NormEstimate {
    if plan.kind().is_diagonal_m() {
        let dmin = plan
            .m()
            .values()
            .iter()
            .fold(f64::INFINITY, |acc, v| acc.min(v.abs()));
        return NormEstimate::exact(1.0 / dmin);
    }
    let n = plan.dim();
    power_iterate(n, |x, z| {
        z.copy_from_slice(x);
        plan.solve_in_place(z);
        plan.solve_transpose_in_place(z);
    })
}

/// Power iteration for the dominant eigenvalue of a PSD operator B = O^T O,
/// reported as sqrt(lambda_max). `apply` writes B*x into its second argument.
fn power_iterate(n: usize, mut apply: impl FnMut(&[f64], &mut [f64])) -> NormEstimate {
    let scale = 1.0 / (n as f64).sqrt();
    let mut x = vec![scale; n];
    let mut z = vec![0.0; n];
    let mut sigma_prev = 0.0f64;
    let mut reseeded = false;
    for k in 1..=POWER_CAP {
        apply(&x, &mut z);
        let lambda: f64 = x.iter().zip(&z).map(|(a, b)| a * b).sum();
        let sigma = lambda.max(0.0).sqrt();
        let znorm = norm2(&z);
        if znorm == 0.0 {
            if reseeded {
                return NormEstimate {
                    value: sigma,
                    converged: false,
                    iterations: k,
                };
            }
            // the start vector was in the null space; retry once with a
            // deterministic non-uniform direction
            reseeded = true;
            for (i, xi) in x.iter_mut().enumerate() {
                *xi = if i % 2 == 0 { 1.0 } else { -1.0 } * (i + 1) as f64;
            }
            let nrm = norm2(&x);
            x.iter_mut().for_each(|v| *v /= nrm);
            sigma_prev = 0.0;
            continue;
        }
        for (xi, zi) in x.iter_mut().zip(&z) {
            *xi = zi / znorm;
        }
        if (sigma - sigma_prev).abs() <= POWER_TOL * sigma.max(f64::MIN_POSITIVE) {
            return NormEstimate {
                value: sigma,
                converged: true,
                iterations: k,
            };
        }
        sigma_prev = sigma;
    }
    NormEstimate {
        value: sigma_prev,
        converged: false,
        iterations: POWER_CAP,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::splitting::{split, SplittingKind};

    fn tridiag(n: usize, lo: f64, d: f64, up: f64) -> SparseMatrix {
        let mut t = Vec::new();
        for i in 0..n {
            if i > 0 {
                t.push((i, i - 1, lo));
            }
            t.push((i, i, d));
            if i + 1 < n {
                t.push((i, i + 1, up));
            }
        }
        SparseMatrix::from_triplets(n, &t).unwrap()
    }

    #[test]
    fn zero_matrix_has_zero_norm() {
        let est = spectral_norm(&SparseMatrix::empty(4));
        assert_eq!(est.value, 0.0);
        assert!(est.converged);
    }

    #[test]
    fn diagonal_norm_is_max_abs_entry() {
        let d =
            SparseMatrix::from_triplets(3, &[(0, 0, 1.0), (1, 1, -5.0), (2, 2, 3.0)]).unwrap();
        let est = spectral_norm(&d);
        assert_eq!(est.value, 5.0);
        assert_eq!(est.iterations, 0);
    }

    #[test]
    fn symmetric_tridiagonal_norm_matches_closed_form() {
        // eigenvalues of tridiag(-1, 8, -1), n=3: 8 - 2 cos(k pi / 4)
        let est = spectral_norm(&tridiag(3, -1.0, 8.0, -1.0));
        assert!((est.value - (8.0 + 2.0f64.sqrt())).abs() < 1e-8);
        assert!(est.converged);
    }

    #[test]
    fn inv_norm_of_diagonal_is_exact() {
        let c = tridiag(4, -6.0, 28.0, -6.0);
        let plan = split(&c, SplittingKind::Jacobi).unwrap();
        assert_eq!(inv_norm_of_m(&plan).value, 1.0 / 28.0);

        let eye = SparseMatrix::identity(4);
        let plan = split(&eye, SplittingKind::Jacobi).unwrap();
        assert_eq!(inv_norm_of_m(&plan).value, 1.0);
    }

    #[test]
    fn inv_norm_of_lower_bidiagonal() {
        // M = [[2, 0], [-1, 2]]: |M^{-1}| = 0.6403882032...
        let c =
            SparseMatrix::from_triplets(2, &[(0, 0, 2.0), (1, 0, -1.0), (1, 1, 2.0), (0, 1, 7.0)])
                .unwrap();
        // upper entry goes to N; M is exactly [[2,0],[-1,2]]
        let plan = split(&c, SplittingKind::GaussSeidel).unwrap();
        let est = inv_norm_of_m(&plan);
        assert!((est.value - 0.6403882032).abs() < 1e-6);
        assert!(est.converged);
    }

    #[test]
    fn null_start_vector_is_reseeded() {
        // rows sum to zero, so the all-ones start lands in the null space of A
        let a = SparseMatrix::from_triplets(
            2,
            &[(0, 0, 1.0), (0, 1, -1.0), (1, 0, 1.0), (1, 1, -1.0)],
        )
        .unwrap();
        let est = spectral_norm(&a);
        assert!((est.value - 2.0).abs() < 1e-8);
    }

    mod oracle {
        use super::*;

        /// Dense symmetric eigenvalue solver by cyclic Jacobi rotations.
        /// Independent of the power-iteration path; test-only.
        fn sym_eig_max(mut a: Vec<Vec<f64>>) -> f64 {
            let n = a.len();
            for _sweep in 0..100 {
                let mut off = 0.0;
                for p in 0..n {
                    for q in (p + 1)..n {
                        off += a[p][q] * a[p][q];
                    }
                }
                if off < 1e-24 {
                    break;
                }
                for p in 0..n {
                    for q in (p + 1)..n {
                        if a[p][q].abs() < 1e-300 {
                            continue;
                        }
                        let theta = 0.5 * (a[q][q] - a[p][p]) / a[p][q];
                        let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                        let c = 1.0 / (t * t + 1.0).sqrt();
                        let s = t * c;
                        for k in 0..n {
                            let akp = a[k][p];
                            let akq = a[k][q];
                            a[k][p] = c * akp - s * akq;
                            a[k][q] = s * akp + c * akq;
                        }
                        for k in 0..n {
                            let apk = a[p][k];
                            let aqk = a[q][k];
                            a[p][k] = c * apk - s * aqk;
                            a[q][k] = s * apk + c * aqk;
                        }
                    }
                }
            }
            (0..n).map(|i| a[i][i]).fold(f64::NEG_INFINITY, f64::max)
        }

        fn dense_spectral_norm(m: &SparseMatrix) -> f64 {
            let n = m.n();
            let mut ata = vec![vec![0.0; n]; n];
            for i in 0..n {
                for (j1, v1) in m.row(i) {
                    for (j2, v2) in m.row(i) {
                        ata[j1][j2] += v1 * v2;
                    }
                }
            }
            sym_eig_max(ata).max(0.0).sqrt()
        }

        #[test]
        fn power_iteration_agrees_with_dense_oracle() {
            use rand::rngs::StdRng;
            use rand::{Rng, SeedableRng};
            let mut rng = StdRng::seed_from_u64(42);
            for trial in 0..25 {
                let n = 2 + (trial % 7) * 7; // up to 44
                let mut t = Vec::new();
                for i in 0..n {
                    t.push((i, i, rng.gen_range(1.0..20.0)));
                    for _ in 0..3 {
                        let j = rng.gen_range(0..n);
                        t.push((i, j, rng.gen_range(-4.0..4.0)));
                    }
                }
                let m = SparseMatrix::from_triplets(n, &t).unwrap();
                let est = spectral_norm(&m);
                let oracle = dense_spectral_norm(&m);
                assert!(
                    (est.value - oracle).abs() <= 1e-6 * oracle.max(1.0),
                    "n={n}: power {} vs dense {}",
                    est.value,
                    oracle
                );
            }
        }
    }
}
