//! Exact linear algebra over F₂: bit vectors, matrices, subspaces, cosets,
//! duals, enumeration and uniform sampling.
//!
//! Bit order is fixed once for the whole crate: position 0 is the leftmost
//! bit of a string and the first tensor factor, and a vector x maps to the
//! computational-basis integer Σ xᵢ·2^{n−1−i}. Lexicographic order on
//! bitstrings therefore coincides with numeric order on those integers.
//!
//! Subspaces are stored by their unique reduced-row-echelon-form basis, so
//! equality of subspaces is structural equality, and the canonical
//! representative of a coset (the lexicographic minimum) is the unique
//! element vanishing on the pivot columns.

mod matrix;
mod subspace;
mod vector;

pub use matrix::F2Matrix;
pub use subspace::{
    enumerate_grassmannian, enumerate_invertible, sample_uniform_subspace, Coset, Subspace,
};
pub use vector::F2Vector;

use crate::Result;

/// Largest ambient dimension for which whole-space enumeration is allowed.
pub const ENUMERATION_GUARD: usize = 24;

/// All vectors of F₂ⁿ in numeric (= lexicographic) order.
pub fn enumerate_vectors(n: usize) -> Result<Vec<F2Vector>> {
    if n > ENUMERATION_GUARD {
        return Err(crate::Error::SizeGuard {
            what: "vector enumeration",
            limit: ENUMERATION_GUARD,
            got: n,
        });
    }
    Ok((0..1usize << n).map(|v| F2Vector::from_index(n, v)).collect())
}

/// Dual basis of an invertible square matrix: rows u^i with u^i·u_j = δ_ij.
///
/// Computed as the transposed inverse; applying it twice returns the
/// original basis.
pub fn dual_basis(basis: &F2Matrix) -> Result<F2Matrix> {
    let inv = basis.inverse()?;
    Ok(inv.transpose())
}

/// dim(A ∩ B), via dim A + dim B − dim(A + B).
pub fn intersection_dim(a: &Subspace, b: &Subspace) -> Result<usize> {
    if a.ambient() != b.ambient() {
        return Err(crate::Error::DimensionMismatch {
            left: a.ambient(),
            right: b.ambient(),
        });
    }
    let stacked = a.basis().stack(b.basis())?;
    let sum_dim = stacked.rref().rank();
    Ok(a.dim() + b.dim() - sum_dim)
}

#[cfg(test)]
mod tests;
