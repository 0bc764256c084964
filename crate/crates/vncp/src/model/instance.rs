//! VNCP instances, the complementarity residual and the modulus
//! reformulation residual.

use super::nonlinear::NonlinearFn;
use crate::linalg::{norm2, DiagonalMatrix, SparseMatrix};
use crate::{Result, VncpError};

/// The positive diagonal scaling of the modulus reformulation.
#[derive(Debug, Clone, PartialEq)]
pub struct OmegaChoice {
    diag: DiagonalMatrix,
}

impl OmegaChoice {
    /// All entries must be strictly positive.
    pub fn new(entries: Vec<f64>) -> Result<Self> {
        if let Some(i) = entries.iter().position(|v| !(*v > 0.0) || !v.is_finite()) {
            return Err(VncpError::InvalidParameter(format!(
                "omega must be strictly positive; entry {i} is {}",
                entries[i]
            )));
        }
        Ok(OmegaChoice {
            diag: DiagonalMatrix::new(entries)?,
        })
    }

    /// Omega = scale * I.
    pub fn uniform(n: usize, scale: f64) -> Result<Self> {
        Self::new(vec![scale; n])
    }

    pub fn diag(&self) -> &DiagonalMatrix {
        &self.diag
    }

    pub fn len(&self) -> usize {
        self.diag.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diag.is_empty()
    }

    /// Spectral norm of Omega: its largest entry.
    pub fn norm(&self) -> f64 {
        self.diag.max_abs()
    }
}

/// The problem: find x with u(x) = Ax + phi(x) >= 0, v(x) = Bx + psi(x) >= 0
/// and u(x)^T v(x) = 0.
#[derive(Debug, Clone)]
pub struct VncpInstance {
    a: SparseMatrix,
    b: SparseMatrix,
    phi: NonlinearFn,
    psi: NonlinearFn,
}

impl VncpInstance {
    pub fn new(
        a: SparseMatrix,
        b: SparseMatrix,
        phi: NonlinearFn,
        psi: NonlinearFn,
    ) -> Result<Self> {
        if a.n() != b.n() {
            return Err(VncpError::DimensionMismatch {
                expected: a.n(),
                got: b.n(),
            });
        }
        Ok(VncpInstance { a, b, phi, psi })
    }

    pub fn n(&self) -> usize {
        self.a.n()
    }

    pub fn a(&self) -> &SparseMatrix {
        &self.a
    }

    pub fn b(&self) -> &SparseMatrix {
        &self.b
    }

    pub fn phi(&self) -> NonlinearFn {
        self.phi
    }

    pub fn psi(&self) -> NonlinearFn {
        self.psi
    }

    fn check_len(&self, x: &[f64]) -> Result<()> {
        if x.len() != self.n() {
            return Err(VncpError::DimensionMismatch {
                expected: self.n(),
                got: x.len(),
            });
        }
        Ok(())
    }

    /// u(x) = Ax + phi(x)
    pub fn eval_u(&self, x: &[f64]) -> Result<Vec<f64>> {
        self.check_len(x)?;
        let mut u = self.a.matvec(x);
        let mut fx = vec![0.0; x.len()];
        self.phi.eval_into(x, &mut fx)?;
        for (ui, fi) in u.iter_mut().zip(&fx) {
            *ui += fi;
        }
        self.ensure_finite(&u, "u(x)")?;
        Ok(u)
    }

    /// v(x) = Bx + psi(x)
    pub fn eval_v(&self, x: &[f64]) -> Result<Vec<f64>> {
        self.check_len(x)?;
        let mut v = self.b.matvec(x);
        let mut fx = vec![0.0; x.len()];
        self.psi.eval_into(x, &mut fx)?;
        for (vi, fi) in v.iter_mut().zip(&fx) {
            *vi += fi;
        }
        self.ensure_finite(&v, "v(x)")?;
        Ok(v)
    }

    fn ensure_finite(&self, v: &[f64], what: &str) -> Result<()> {
        if v.iter().any(|x| !x.is_finite()) {
            return Err(VncpError::NonFinite {
                context: what.to_string(),
            });
        }
        Ok(())
    }

    /// RES(x) = sum_i |u_i(x)| * |v_i(x)|, the stopping quantity.
    pub fn residual(&self, x: &[f64]) -> Result<f64> {
        let u = self.eval_u(x)?;
        let v = self.eval_v(x)?;
        Ok(u.iter().zip(&v).map(|(a, b)| a.abs() * b.abs()).sum())
    }

    /// Euclidean norm of the defect in the modulus reformulation
    /// (A + Omega B) x = |(A - Omega B) x + phi - Omega psi| - phi - Omega psi.
    pub fn reformulation_residual(&self, omega: &OmegaChoice, x: &[f64]) -> Result<f64> {
        self.check_len(x)?;
        if omega.len() != self.n() {
            return Err(VncpError::DimensionMismatch {
                expected: self.n(),
                got: omega.len(),
            });
        }
        let c = self.a.add_row_scaled(omega.diag(), &self.b, 1.0)?;
        let s = self.a.add_row_scaled(omega.diag(), &self.b, -1.0)?;
        let mut phi_x = vec![0.0; self.n()];
        let mut psi_x = vec![0.0; self.n()];
        self.phi.eval_into(x, &mut phi_x)?;
        self.psi.eval_into(x, &mut psi_x)?;
        let mut om_psi = vec![0.0; self.n()];
        omega.diag().scale_into(&psi_x, &mut om_psi);

        let cx = c.matvec(x);
        let sx = s.matvec(x);
        let defect: Vec<f64> = (0..self.n())
            .map(|i| {
                let inner = (sx[i] + phi_x[i] - om_psi[i]).abs();
                cx[i] - (inner - phi_x[i] - om_psi[i])
            })
            .collect();
        Ok(norm2(&defect))
    }
}
