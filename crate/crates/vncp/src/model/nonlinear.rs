//! Component-wise nonlinear functions with their declared Lipschitz
//! constants. The catalog matches the pairs exercised by the benchmark
//! tables; the rational entry t/(1+t) is declared Lipschitz-1 without a
//! domain restriction, and hitting its pole is a hard error.

use crate::{Result, VncpError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NonlinearKind {
    Abs,
    Sin,
    Cos,
    Rational,
    Zero,
}

/// One of the catalog functions, applied component-wise.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NonlinearFn {
    kind: NonlinearKind,
    lipschitz: f64,
}

impl NonlinearFn {
    pub fn new(kind: NonlinearKind) -> Self {
        let lipschitz = match kind {
            NonlinearKind::Zero => 0.0,
            _ => 1.0,
        };
        NonlinearFn { kind, lipschitz }
    }

    pub fn abs() -> Self {
        Self::new(NonlinearKind::Abs)
    }
    pub fn sin() -> Self {
        Self::new(NonlinearKind::Sin)
    }
    pub fn cos() -> Self {
        Self::new(NonlinearKind::Cos)
    }
    pub fn rational() -> Self {
        Self::new(NonlinearKind::Rational)
    }
    pub fn zero() -> Self {
        Self::new(NonlinearKind::Zero)
    }

    /// Catalog lookup by the CLI names {abs, sin, cos, rational, zero}.
    pub fn from_name(name: &str) -> Result<Self> {
        match name {
            "abs" => Ok(Self::abs()),
            "sin" => Ok(Self::sin()),
            "cos" => Ok(Self::cos()),
            "rational" => Ok(Self::rational()),
            "zero" => Ok(Self::zero()),
            other => Err(VncpError::InvalidParameter(format!(
                "unknown nonlinear function '{other}' (catalog: abs, sin, cos, rational, zero)"
            ))),
        }
    }

    pub fn name(&self) -> &'static str {
        match self.kind {
            NonlinearKind::Abs => "abs",
            NonlinearKind::Sin => "sin",
            NonlinearKind::Cos => "cos",
            NonlinearKind::Rational => "rational",
            NonlinearKind::Zero => "zero",
        }
    }

    pub fn kind(&self) -> NonlinearKind {
        self.kind
    }

    /// Declared Lipschitz constant (1 for every catalog entry except zero).
    pub fn lipschitz(&self) -> f64 {
        self.lipschitz
    }

    /// Scalar evaluation; `index` only labels pole errors.
    pub fn eval_scalar(&self, t: f64, index: usize) -> Result<f64> {
        let v = match self.kind {
            NonlinearKind::Abs => t.abs(),
            NonlinearKind::Sin => t.sin(),
            NonlinearKind::Cos => t.cos(),
            NonlinearKind::Rational => {
                if (1.0 + t).abs() < 1e-14 {
                    return Err(VncpError::Pole { index });
                }
                t / (1.0 + t)
            }
            NonlinearKind::Zero => 0.0,
        };
        if v.is_finite() {
            Ok(v)
        } else {
            Err(VncpError::NonFinite {
                context: format!("{}({t}) at component {index}", self.name()),
            })
        }
    }

    /// (f(x))_i = f(x_i), written into `out`.
    pub fn eval_into(&self, x: &[f64], out: &mut [f64]) -> Result<()> {
        for (i, (o, t)) in out.iter_mut().zip(x).enumerate() {
            *o = self.eval_scalar(*t, i)?;
        }
        Ok(())
    }
}
