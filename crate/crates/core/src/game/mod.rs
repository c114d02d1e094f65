//! Game operators, strategy evaluation, lemma verifiers, the coset→basis
//! reduction, see-saw lower bounds and the norm-bound proof chain.

mod channel;
mod lemmas;
mod linalg;
mod pipeline;
mod povm;
mod projector;
mod random;
mod reduction;
mod seesaw;
mod serial;
mod strategy;
mod value;

pub use channel::KrausChannel;
pub use lemmas::{
    basis_projector_factor, check_mutually_orthogonal, sum_bound_rhs, verify_all_basis_overlaps,
    verify_basis_overlap, verify_coset_overlap_bound, BasisOverlapCheck, OverlapBoundCheck,
};
pub use linalg::{
    hermitian_eigenvalues, isometry_product_norm, kron3, min_eigenvalue, operator_norm,
    operator_norm_general, pd_inv_sqrt, projector_range_basis, psd_sqrt, top_eigenpair,
    trace_product, HERMITICITY_TOL,
};
pub use pipeline::{
    coset_projector_factor, norm_bound_pipeline_basis, norm_bound_pipeline_coset,
    random_projective_strategy, PipelineReport,
};
pub use povm::Povm;
pub use projector::{game_projector_basis, game_projector_coset};
pub use random::{
    ginibre, random_density, random_hermitian, random_kraus, random_povm,
    random_projective_povm, random_psd, random_unitary,
};
pub use reduction::{
    basis_averaged_reduced_value, reduce_coset_to_basis_strategy,
    sampled_basis_averaged_reduced_value,
};
pub use seesaw::{seesaw_optimize, SeesawOutcome, SeesawParams};
pub use serial::{
    decode_complex, decode_subspace_key, decode_theta_key, encode_subspace_key, encode_theta_key,
    strategy_digest, strategy_from_json, strategy_to_json,
};
pub use strategy::{
    basis_questions, coset_questions, sub_index, DirectCosetStrategy, EnlgStrategy, Game,
};
pub use value::{
    question_projector, verify_game_form_equality, winning_probability_direct_coset,
    winning_probability_enlg, winning_probability_enlg_sampled, GameFormComparison,
    ValueEstimate, COSET_EXHAUSTIVE_GUARD,
};

/// Sandwich summary for one optimized game: a feasible lower bound from
/// see-saw against the analytic upper bound.
#[derive(Debug, Clone)]
pub struct GameValueReport {
    pub game: Game,
    pub n: usize,
    pub lower_bound: f64,
    pub strategy_digest: String,
    pub upper_bound: f64,
    pub trivial_floor: f64,
    pub seed: u64,
}

impl GameValueReport {
    /// lower ≤ upper + 1e−6 whenever the upper bound is non-vacuous.
    pub fn sandwich_ok(&self) -> bool {
        self.upper_bound > 1.0 || self.lower_bound <= self.upper_bound + 1e-6
    }
}
