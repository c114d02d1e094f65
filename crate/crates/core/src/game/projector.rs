//! The tripartite game operators: Π^A for the coset game and Π^θ for the
//! basis game. Both are projectors whenever the player POVMs are.

use super::povm::Povm;
use super::strategy::sub_index;
use crate::f2::{F2Vector, Subspace};
use crate::qstate::{bb84_state, coset_measurement_family, BB84Label, CMat};
use crate::{Error, Result};

/// Π^A = Σ_{s,s′} |A_{s,s′}⟩⟨A_{s,s′}| ⊗ B^A_s ⊗ C^A_{s′}, with Bob's
/// POVM indexed by CS(A) and Charlie's by CS(A^⊥), both sorted.
pub fn game_projector_coset(a: &Subspace, bob: &Povm, charlie: &Povm) -> Result<CMat> {
    let meas = coset_measurement_family(a)?;
    if bob.outcomes() != meas.s_reps.len() || charlie.outcomes() != meas.sp_reps.len() {
        return Err(Error::InvalidStrategy(format!(
            "POVM outcome counts {}/{} do not match coset representative counts {}/{}",
            bob.outcomes(),
            charlie.outcomes(),
            meas.s_reps.len(),
            meas.sp_reps.len()
        )));
    }
    let dim = (1usize << a.ambient()) * bob.dim() * charlie.dim();
    let mut out = CMat::zeros(dim, dim);
    for si in 0..meas.s_reps.len() {
        for spi in 0..meas.sp_reps.len() {
            let p = meas.projector(si, spi);
            out += p.kronecker(&bob.elements[si]).kronecker(&charlie.elements[spi]);
        }
    }
    Ok(out)
}

/// Π^θ = Σ_x |x⟩_θ⟨x|_θ ⊗ B^θ_{x_T} ⊗ C^θ_{x_T̄}, with Bob indexed by the
/// sub-strings on T = {i : θᵢ = 0} and Charlie by those on T̄.
pub fn game_projector_basis(theta: &F2Vector, bob: &Povm, charlie: &Povm) -> Result<CMat> {
    let n = theta.len();
    let t = theta.positions_with(0);
    let tbar = theta.positions_with(1);
    if bob.outcomes() != 1 << t.len() || charlie.outcomes() != 1 << tbar.len() {
        return Err(Error::InvalidStrategy(format!(
            "POVM outcome counts {}/{} do not match 2^|T|={} / 2^|T̄|={}",
            bob.outcomes(),
            charlie.outcomes(),
            1 << t.len(),
            1 << tbar.len()
        )));
    }
    let dim = (1usize << n) * bob.dim() * charlie.dim();
    let mut out = CMat::zeros(dim, dim);
    for xi in 0..1usize << n {
        let x = F2Vector::from_index(n, xi);
        let p = bb84_state(&BB84Label::new(x, *theta)?)?.projector();
        let b = &bob.elements[sub_index(&x, &t)];
        let c = &charlie.elements[sub_index(&x, &tbar)];
        out += p.kronecker(b).kronecker(c);
    }
    Ok(out)
}
