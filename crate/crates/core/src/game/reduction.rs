//! The coset→basis strategy reduction: given a channel-form coset-game
//! strategy and a basis B of F₂ⁿ, build the basis-game strategy that plays
//! the coset strategy through U_B on half of n EPR pairs.
//!
//! Answer coarse-graining uses the coordinate functionals that decide the
//! coset winning condition: Bob's answer vector s₁ lands in A+s exactly
//! when s₁·u^i (dual rows) matches Alice's x on T, and Charlie's s₂ lands
//! in A^⊥+s′ exactly when s₂·u_i (primal rows) matches x on T̄. Averaged
//! over θ and all ordered bases B, the basis-game value of the image
//! strategy equals the coset-game value of the input.

use std::collections::HashMap;

use super::povm::Povm;
use super::strategy::{basis_questions, coset_questions, DirectCosetStrategy, EnlgStrategy, Game};
use crate::f2::{dual_basis, enumerate_invertible, F2Matrix, F2Vector, Subspace};
use crate::qstate::{basis_change_unitary, CMat};
use crate::{Error, Result};

/// Build the basis-game ENLG strategy induced by `s` and the ordered basis
/// `basis` (rows uᵢ).
pub fn reduce_coset_to_basis_strategy(
    s: &DirectCosetStrategy,
    basis: &F2Matrix,
) -> Result<EnlgStrategy> {
    let n = s.n;
    if basis.n_cols() != n || basis.n_rows() != n {
        return Err(Error::DimensionMismatch { left: basis.n_rows(), right: n });
    }
    let u = basis_change_unitary(basis)?;
    let dual = dual_basis(basis)?;
    let rho = s.channel.enlg_state_with_unitary(n, Some(&u))?;

    let questions = coset_questions(n)?;
    let question_index: HashMap<&Subspace, usize> =
        questions.iter().enumerate().map(|(i, a)| (a, i)).collect();

    let thetas = basis_questions(n)?;
    let mut bob = Vec::with_capacity(thetas.len());
    let mut charlie = Vec::with_capacity(thetas.len());
    for theta in &thetas {
        let span_rows: Vec<F2Vector> =
            theta.positions_with(1).into_iter().map(|i| basis.row(i)).collect();
        let a = Subspace::from_vectors(n, &span_rows)?;
        let qi = *question_index
            .get(&a)
            .expect("every half-dim span appears in the question enumeration");

        let t = theta.positions_with(0);
        let tbar = theta.positions_with(1);
        bob.push(coarse_grain(&s.bob[qi], &t, |v, i| v.dot(&dual.row(i))));
        charlie.push(coarse_grain(&s.charlie[qi], &tbar, |v, i| v.dot(&basis.row(i))));
    }

    Ok(EnlgStrategy {
        game: Game::Basis,
        n,
        d_b: s.channel.d_b(),
        d_c: s.channel.d_c(),
        rho,
        bob,
        charlie,
    })
}

/// Sum raw answer elements into 2^{|positions|} bins keyed by the value of
/// `coord(answer, i)` at each position i, most significant first.
fn coarse_grain(
    raw: &[CMat],
    positions: &[usize],
    coord: impl Fn(&F2Vector, usize) -> u8,
) -> Povm {
    let n = raw.len().trailing_zeros() as usize;
    let dim = raw[0].nrows();
    let mut elements = vec![CMat::zeros(dim, dim); 1 << positions.len()];
    for (vi, el) in raw.iter().enumerate() {
        let v = F2Vector::from_index(n, vi);
        let mut key = 0usize;
        for &i in positions {
            key = (key << 1) | coord(&v, i) as usize;
        }
        elements[key] += el;
    }
    Povm { elements }
}

/// Basis-averaged value of the reduced strategy, over every ordered basis
/// of F₂ⁿ (exhaustive; guarded to n ≤ 4 where GL(n,2) is enumerable).
pub fn basis_averaged_reduced_value(s: &DirectCosetStrategy) -> Result<f64> {
    let bases = enumerate_invertible(s.n)?;
    let mut acc = 0.0;
    for b in &bases {
        let reduced = reduce_coset_to_basis_strategy(s, b)?;
        acc += super::value::winning_probability_enlg(&reduced)?.value;
    }
    Ok(acc / bases.len() as f64)
}

/// Basis-averaged value over `n_bases` uniformly sampled ordered bases.
pub fn sampled_basis_averaged_reduced_value(
    s: &DirectCosetStrategy,
    n_bases: usize,
    rng: &mut impl rand::Rng,
) -> Result<(f64, f64)> {
    if n_bases == 0 {
        return Err(Error::invalid("need at least one basis"));
    }
    let mut vals = Vec::with_capacity(n_bases);
    for _ in 0..n_bases {
        let b = F2Matrix::random_invertible(s.n, rng);
        let reduced = reduce_coset_to_basis_strategy(s, &b)?;
        vals.push(super::value::winning_probability_enlg(&reduced)?.value);
    }
    let mean = vals.iter().sum::<f64>() / n_bases as f64;
    let var = vals.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / n_bases as f64;
    Ok((mean, (var / n_bases as f64).sqrt()))
}
