//! The full inequality chain behind both theorems, evaluated numerically
//! for a concrete projective strategy:
//!
//!   value ≤ ‖E_q Π^q‖ ≤ (1/N)Σ_i max_j ‖Π^{q_j} Π^{q_{π_i(j)}}‖
//!         ≤ (1/N)Σ_k C(n/2,k)²·2^{−k/2}
//!
//! For the basis game every stage is exact (the question set is the N
//! balanced strings the permutation family acts on). For the coset game
//! the middle stages live inside an average over bases of F₂ⁿ, which is
//! enumerable only at n = 2; beyond that a sampled set of bases is used
//! and flagged. The per-basis sub-chain is exact either way, and the
//! outer inequality value ≤ ‖E_A Π^A‖ ≤ binomial bound is checked without
//! any sampling.
//!
//! Projector products are evaluated through orthonormal range factors
//! (‖VV†·UU†‖ = σ_max(V†U)); the factors also assemble the dense averaged
//! operator cheaply.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::lemmas::basis_projector_factor;
use super::linalg::{isometry_product_norm, operator_norm, projector_range_basis, trace_product};
use super::povm::Povm;
use super::strategy::{basis_questions, coset_questions, EnlgStrategy, Game};
use crate::bounds::binomial_sum_bound;
use crate::f2::{enumerate_invertible, F2Matrix, F2Vector, Subspace};
use crate::permcover::{orthogonal_permutation_family, PermutationFamily};
use crate::qstate::{coset_measurement_family, CMat, CVec};
use crate::{Error, Result};

/// One evaluated proof chain.
#[derive(Debug, Clone)]
pub struct PipelineReport {
    pub game: Game,
    pub n: usize,
    /// Exact strategy value E_q Tr(Π^q ρ).
    pub value: f64,
    /// ‖E_q Π^q‖ over the game's own question set (exact).
    pub norm_of_average: f64,
    /// Mean over evaluated bases of the per-basis sum-bound RHS; for the
    /// basis game this is the single exact RHS.
    pub lemma2_rhs: f64,
    /// Mean over evaluated bases of ‖E_{γ⊆β} Π^{span γ}‖ (basis game: the
    /// same as `norm_of_average`).
    pub basis_norm_mean: f64,
    pub binomial_bound: f64,
    /// Number of bases evaluated; None when no basis average applies
    /// (basis game) or the average was exhaustive (coset n = 2).
    pub sampled_bases: Option<usize>,
}

const CHAIN_TOL: f64 = 1e-9;

fn chain_violation(stage_a: &str, a: f64, stage_b: &str, b: f64) -> Error {
    Error::invalid(format!(
        "proof chain violated: {stage_a} = {a:.12} exceeds {stage_b} = {b:.12}"
    ))
}

fn require_projective(s: &EnlgStrategy) -> Result<()> {
    if !s.is_projective(1e-9) {
        return Err(Error::InvalidStrategy(
            "norm-bound pipeline requires projective POVMs".into(),
        ));
    }
    Ok(())
}

/// Orthonormal range factor of Π^A: columns |A_{s,s′}⟩ ⊗ b ⊗ c over the
/// coset measurement states and the POVM range vectors.
pub fn coset_projector_factor(a: &Subspace, bob: &Povm, charlie: &Povm) -> Result<CMat> {
    let meas = coset_measurement_family(a)?;
    let bob_ranges: Vec<CMat> =
        bob.elements.iter().map(projector_range_basis).collect::<Result<_>>()?;
    let charlie_ranges: Vec<CMat> =
        charlie.elements.iter().map(projector_range_basis).collect::<Result<_>>()?;
    let d_a = 1usize << a.ambient();
    let dim = d_a * bob.dim() * charlie.dim();
    let mut cols: Vec<CVec> = Vec::new();
    for (si, br) in bob_ranges.iter().enumerate() {
        for (spi, cr) in charlie_ranges.iter().enumerate() {
            let state = meas.state(si, spi).amplitudes();
            for bj in 0..br.ncols() {
                for cj in 0..cr.ncols() {
                    let b_col = br.column(bj);
                    let c_col = cr.column(cj);
                    let mut col = CVec::zeros(dim);
                    let mut idx = 0;
                    for ai in 0..d_a {
                        for bi in 0..bob.dim() {
                            for ci in 0..charlie.dim() {
                                col[idx] = state[ai] * b_col[bi] * c_col[ci];
                                idx += 1;
                            }
                        }
                    }
                    cols.push(col);
                }
            }
        }
    }
    let mut v = CMat::zeros(dim, cols.len());
    for (j, c) in cols.iter().enumerate() {
        v.set_column(j, c);
    }
    Ok(v)
}

/// Lemma-2 RHS over projector range factors under a permutation family:
/// (1/N)·Σ_i max_j σ_max(F_j† F_{π_i(j)}).
fn factored_sum_bound_rhs(factors: &[CMat], fam: &PermutationFamily) -> Result<f64> {
    let mut total = 0.0;
    for perm in &fam.perms {
        let mut best = 0.0f64;
        for (j, &img) in perm.mapping.iter().enumerate() {
            best = best.max(isometry_product_norm(&factors[j], &factors[img])?);
        }
        total += best;
    }
    Ok(total / fam.perms.len() as f64)
}

/// Dense projector from its range factor.
fn dense_from_factor(v: &CMat) -> CMat {
    v * v.adjoint()
}

/// Evaluate the chain for a projective basis-game strategy. All stages are
/// exact; a violation anywhere is a hard error naming the offending pair.
pub fn norm_bound_pipeline_basis(s: &EnlgStrategy) -> Result<PipelineReport> {
    if s.game != Game::Basis {
        return Err(Error::invalid("expected a basis-game strategy"));
    }
    s.validate(1e-9)?;
    require_projective(s)?;
    let thetas = basis_questions(s.n)?;
    let fam = orthogonal_permutation_family(s.n)?;

    let factors: Vec<CMat> = thetas
        .iter()
        .enumerate()
        .map(|(q, theta)| basis_projector_factor(theta, &s.bob[q], &s.charlie[q]))
        .collect::<Result<_>>()?;

    let mut avg = CMat::zeros(s.total_dim(), s.total_dim());
    let mut value = 0.0;
    for f in &factors {
        let pi = dense_from_factor(f);
        value += trace_product(&pi, &s.rho).re;
        avg += pi;
    }
    let nq = factors.len() as f64;
    avg /= num_complex::Complex64::new(nq, 0.0);
    value /= nq;

    let norm_of_average = operator_norm(&avg)?;
    let lemma2_rhs = factored_sum_bound_rhs(&factors, &fam)?;
    let binomial_bound = binomial_sum_bound(s.n as u64)?;

    if value > norm_of_average + CHAIN_TOL {
        return Err(chain_violation("value", value, "‖EΠ‖", norm_of_average));
    }
    if norm_of_average > lemma2_rhs + CHAIN_TOL {
        return Err(chain_violation("‖EΠ‖", norm_of_average, "sum-bound RHS", lemma2_rhs));
    }
    if lemma2_rhs > binomial_bound + CHAIN_TOL {
        return Err(chain_violation("sum-bound RHS", lemma2_rhs, "binomial bound", binomial_bound));
    }

    Ok(PipelineReport {
        game: Game::Basis,
        n: s.n,
        value,
        norm_of_average,
        lemma2_rhs,
        basis_norm_mean: norm_of_average,
        binomial_bound,
        sampled_bases: None,
    })
}

/// Evaluate the chain for a projective coset-game strategy. The basis
/// average is exhaustive at n = 2 (all of GL(2,2)) and sampled otherwise;
/// the per-basis sub-chain ‖E_γ Π^{span γ}‖ ≤ RHS(β) ≤ binomial holds
/// exactly for every evaluated basis, and value ≤ ‖E_A Π^A‖ ≤ binomial is
/// checked independently of any basis sampling.
pub fn norm_bound_pipeline_coset(
    s: &EnlgStrategy,
    sampled_bases: usize,
    seed: u64,
) -> Result<PipelineReport> {
    if s.game != Game::Coset {
        return Err(Error::invalid("expected a coset-game strategy"));
    }
    s.validate(1e-9)?;
    require_projective(s)?;
    let questions = coset_questions(s.n)?;
    let fam = orthogonal_permutation_family(s.n)?;

    let factors: Vec<CMat> = questions
        .iter()
        .enumerate()
        .map(|(q, a)| coset_projector_factor(a, &s.bob[q], &s.charlie[q]))
        .collect::<Result<_>>()?;

    let mut avg = CMat::zeros(s.total_dim(), s.total_dim());
    let mut value = 0.0;
    for f in &factors {
        let pi = dense_from_factor(f);
        value += trace_product(&pi, &s.rho).re;
        avg += pi;
    }
    let nq = factors.len() as f64;
    avg /= num_complex::Complex64::new(nq, 0.0);
    value /= nq;

    let norm_of_average = operator_norm(&avg)?;
    let binomial_bound = binomial_sum_bound(s.n as u64)?;

    // Map the questions to indices once so γ ↦ span(γ) lookups are O(1).
    let index_of: std::collections::HashMap<&Subspace, usize> =
        questions.iter().enumerate().map(|(i, a)| (a, i)).collect();

    let bases: Vec<F2Matrix> = if s.n == 2 {
        enumerate_invertible(2)?
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        if sampled_bases == 0 {
            return Err(Error::invalid("need at least one sampled basis"));
        }
        (0..sampled_bases).map(|_| F2Matrix::random_invertible(s.n, &mut rng)).collect()
    };
    let exhaustive = s.n == 2;

    let mut rhs_acc = 0.0;
    let mut basis_norm_acc = 0.0;
    for basis in &bases {
        // The N = C(n,n/2) questions span(γ) for γ ⊆ basis rows, ordered
        // like the balanced strings the family permutes.
        let gamma_qs: Vec<usize> = fam
            .index()?
            .strings()
            .iter()
            .map(|gamma| {
                let rows: Vec<F2Vector> = gamma
                    .positions_with(1)
                    .into_iter()
                    .map(|i| basis.row(i))
                    .collect();
                let a = Subspace::from_vectors(s.n, &rows)?;
                Ok(*index_of.get(&a).expect("half-dim span is a question"))
            })
            .collect::<Result<_>>()?;

        let beta_factors: Vec<CMat> =
            gamma_qs.iter().map(|&q| factors[q].clone()).collect();
        let mut beta_avg = CMat::zeros(s.total_dim(), s.total_dim());
        for f in &beta_factors {
            beta_avg += dense_from_factor(f);
        }
        beta_avg /= num_complex::Complex64::new(beta_factors.len() as f64, 0.0);
        let beta_norm = operator_norm(&beta_avg)?;
        let beta_rhs = factored_sum_bound_rhs(&beta_factors, &fam)?;

        if beta_norm > beta_rhs + CHAIN_TOL {
            return Err(chain_violation("per-basis ‖EΠ‖", beta_norm, "per-basis RHS", beta_rhs));
        }
        if beta_rhs > binomial_bound + CHAIN_TOL {
            return Err(chain_violation(
                "per-basis RHS",
                beta_rhs,
                "binomial bound",
                binomial_bound,
            ));
        }
        rhs_acc += beta_rhs;
        basis_norm_acc += beta_norm;
    }
    let lemma2_rhs = rhs_acc / bases.len() as f64;
    let basis_norm_mean = basis_norm_acc / bases.len() as f64;

    if value > norm_of_average + CHAIN_TOL {
        return Err(chain_violation("value", value, "‖EΠ‖", norm_of_average));
    }
    if norm_of_average > binomial_bound + CHAIN_TOL {
        return Err(chain_violation("‖EΠ‖", norm_of_average, "binomial bound", binomial_bound));
    }
    if exhaustive && norm_of_average > basis_norm_mean + CHAIN_TOL {
        return Err(chain_violation(
            "‖E_A Π^A‖",
            norm_of_average,
            "E_β ‖E_γ Π‖",
            basis_norm_mean,
        ));
    }

    Ok(PipelineReport {
        game: Game::Coset,
        n: s.n,
        value,
        norm_of_average,
        lemma2_rhs,
        basis_norm_mean,
        binomial_bound,
        sampled_bases: if exhaustive { None } else { Some(bases.len()) },
    })
}

/// A random projective strategy of the given game with rank-split
/// projective POVMs, for exercising the pipeline.
pub fn random_projective_strategy(
    game: Game,
    n: usize,
    d_b: usize,
    d_c: usize,
    rng: &mut impl Rng,
) -> Result<EnlgStrategy> {
    let nq = match game {
        Game::Coset => coset_questions(n)?.len(),
        Game::Basis => basis_questions(n)?.len(),
    };
    let outcomes = 1usize << (n / 2);
    let dim = (1 << n) * d_b * d_c;
    Ok(EnlgStrategy {
        game,
        n,
        d_b,
        d_c,
        rho: super::random::random_density(dim, rng),
        bob: (0..nq)
            .map(|_| super::random::random_projective_povm(d_b, outcomes, rng))
            .collect(),
        charlie: (0..nq)
            .map(|_| super::random::random_projective_povm(d_c, outcomes, rng))
            .collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::projector::{game_projector_basis, game_projector_coset};

    #[test]
    fn basis_pipeline_n2_tops_out_at_hand_value() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for _ in 0..3 {
            let s = random_projective_strategy(Game::Basis, 2, 2, 2, &mut rng).unwrap();
            let report = norm_bound_pipeline_basis(&s).unwrap();
            assert!((report.binomial_bound - 0.8535533905932737).abs() < 1e-9);
            assert!(report.value <= report.norm_of_average + 1e-9);
            assert!(report.norm_of_average <= report.lemma2_rhs + 1e-9);
            assert!(report.lemma2_rhs <= report.binomial_bound + 1e-9);
        }
    }

    #[test]
    fn coset_pipeline_n2_exhaustive_chain() {
        let mut rng = ChaCha8Rng::seed_from_u64(37);
        let s = random_projective_strategy(Game::Coset, 2, 2, 2, &mut rng).unwrap();
        let report = norm_bound_pipeline_coset(&s, 0, 0).unwrap();
        assert_eq!(report.sampled_bases, None, "n=2 enumerates GL(2,2)");
        assert!(report.value <= report.norm_of_average + 1e-9);
        assert!(report.norm_of_average <= report.basis_norm_mean + 1e-9);
        assert!(report.basis_norm_mean <= report.lemma2_rhs + 1e-9);
        assert!(report.lemma2_rhs <= report.binomial_bound + 1e-9);
    }

    #[test]
    fn projector_factors_match_dense_projectors() {
        let mut rng = ChaCha8Rng::seed_from_u64(43);
        let s = random_projective_strategy(Game::Coset, 2, 2, 2, &mut rng).unwrap();
        for (q, a) in coset_questions(2).unwrap().iter().enumerate() {
            let f = coset_projector_factor(a, &s.bob[q], &s.charlie[q]).unwrap();
            let dense = game_projector_coset(a, &s.bob[q], &s.charlie[q]).unwrap();
            let rebuilt = dense_from_factor(&f);
            assert!((dense - rebuilt).iter().all(|z| z.norm() < 1e-9));
        }
        let t = random_projective_strategy(Game::Basis, 2, 2, 2, &mut rng).unwrap();
        for (q, theta) in basis_questions(2).unwrap().iter().enumerate() {
            let f = basis_projector_factor(theta, &t.bob[q], &t.charlie[q]).unwrap();
            let dense = game_projector_basis(theta, &t.bob[q], &t.charlie[q]).unwrap();
            let rebuilt = dense_from_factor(&f);
            assert!((dense - rebuilt).iter().all(|z| z.norm() < 1e-9));
        }
    }

    #[test]
    fn pipeline_rejects_non_projective() {
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        let mut s = random_projective_strategy(Game::Basis, 2, 2, 2, &mut rng).unwrap();
        s.bob[0] = super::super::povm::Povm::uniform(2, 2);
        assert!(norm_bound_pipeline_basis(&s).is_err());
    }
}
