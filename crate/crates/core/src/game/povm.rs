//! POVMs as outcome-indexed lists of positive operators on one register.

use super::linalg::min_eigenvalue;
use crate::qstate::{hermiticity_residual, identity_residual, projector_residual, CMat};
use crate::{Error, Result};

/// A positive-operator-valued measure; `elements[i]` is the operator for
/// outcome i. The outcome order is fixed by the owning strategy (coset
/// representatives sorted, or sub-strings in ascending integer order).
#[derive(Debug, Clone, PartialEq)]
pub struct Povm {
    pub elements: Vec<CMat>,
}

impl Povm {
    pub fn outcomes(&self) -> usize {
        self.elements.len()
    }

    pub fn dim(&self) -> usize {
        self.elements.first().map_or(0, CMat::nrows)
    }

    /// Uniform guessing POVM: Id/outcomes per outcome.
    pub fn uniform(dim: usize, outcomes: usize) -> Povm {
        let el = CMat::identity(dim, dim) / num_complex::Complex64::new(outcomes as f64, 0.0);
        Povm { elements: vec![el; outcomes] }
    }

    /// Deterministic POVM: Id at `which`, zero elsewhere.
    pub fn deterministic(dim: usize, outcomes: usize, which: usize) -> Povm {
        let mut elements = vec![CMat::zeros(dim, dim); outcomes];
        elements[which] = CMat::identity(dim, dim);
        Povm { elements }
    }

    /// Check each element is PSD (within `tol`) and the family sums to the
    /// identity (within `tol`).
    pub fn validate(&self, dim: usize, tol: f64) -> Result<()> {
        if self.elements.is_empty() {
            return Err(Error::InvalidStrategy("POVM has no outcomes".into()));
        }
        let mut sum = CMat::zeros(dim, dim);
        for (i, e) in self.elements.iter().enumerate() {
            if e.nrows() != dim || e.ncols() != dim {
                return Err(Error::DimensionMismatch { left: e.nrows(), right: dim });
            }
            let h = hermiticity_residual(e);
            if h > tol {
                return Err(Error::NotHermitian { residual: h });
            }
            let lo = min_eigenvalue(e)?;
            if lo < -tol {
                return Err(Error::InvalidStrategy(format!(
                    "POVM element {i} has negative eigenvalue {lo:.3e}"
                )));
            }
            sum += e;
        }
        let res = identity_residual(&sum);
        if res > tol {
            return Err(Error::InvalidStrategy(format!(
                "POVM completeness residual {res:.3e}"
            )));
        }
        Ok(())
    }

    /// All elements are projectors and mutually orthogonal within `tol`.
    pub fn is_projective(&self, tol: f64) -> bool {
        for (i, e) in self.elements.iter().enumerate() {
            if projector_residual(e) > tol {
                return false;
            }
            for f in &self.elements[i + 1..] {
                let prod = e * f;
                if prod.iter().map(|z| z.norm()).fold(0.0, f64::max) > tol {
                    return false;
                }
            }
        }
        true
    }
}
