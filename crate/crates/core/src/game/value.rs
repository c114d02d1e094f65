//! Winning-probability evaluation for both game forms, and the numerical
//! check that they agree on corresponding strategies.

use rand::Rng;

use super::linalg::trace_product;
use super::projector::{game_projector_basis, game_projector_coset};
use super::strategy::{basis_questions, coset_questions, DirectCosetStrategy, EnlgStrategy, Game};
use crate::qstate::{coset_measurement_family, CMat};
use crate::{Error, Result};

/// A game value, exact or Monte-Carlo estimated over sampled questions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ValueEstimate {
    pub value: f64,
    /// None for exact (exhaustively averaged) values; Some(standard error)
    /// for sampled estimates.
    pub std_err: Option<f64>,
}

impl ValueEstimate {
    pub fn exact(value: f64) -> Self {
        ValueEstimate { value, std_err: None }
    }

    pub fn is_exact(&self) -> bool {
        self.std_err.is_none()
    }
}

/// Largest n for which the coset question set is averaged exhaustively.
pub const COSET_EXHAUSTIVE_GUARD: usize = 4;

/// The game operator for question index `q` of the strategy's game.
pub fn question_projector(s: &EnlgStrategy, q: usize) -> Result<CMat> {
    match s.game {
        Game::Coset => {
            let questions = coset_questions(s.n)?;
            game_projector_coset(&questions[q], &s.bob[q], &s.charlie[q])
        }
        Game::Basis => {
            let questions = basis_questions(s.n)?;
            game_projector_basis(&questions[q], &s.bob[q], &s.charlie[q])
        }
    }
}

fn per_question_value(s: &EnlgStrategy, q: usize) -> Result<f64> {
    Ok(trace_product(&question_projector(s, q)?, &s.rho).re)
}

/// E_q Tr(Π^q ρ) over the exhaustive question set. Guarded: coset questions
/// beyond n = 4 are too many to enumerate honestly — use
/// [`winning_probability_enlg_sampled`] there.
pub fn winning_probability_enlg(s: &EnlgStrategy) -> Result<ValueEstimate> {
    s.validate(1e-9)?;
    if s.game == Game::Coset && s.n > COSET_EXHAUSTIVE_GUARD {
        return Err(Error::SizeGuard {
            what: "exhaustive coset question average",
            limit: COSET_EXHAUSTIVE_GUARD,
            got: s.n,
        });
    }
    let nq = s.n_questions()?;
    let mut acc = 0.0;
    for q in 0..nq {
        acc += per_question_value(s, q)?;
    }
    Ok(ValueEstimate::exact(acc / nq as f64))
}

/// Monte-Carlo value over `samples` uniformly drawn questions (with
/// replacement), flagged with its standard error.
pub fn winning_probability_enlg_sampled(
    s: &EnlgStrategy,
    samples: usize,
    rng: &mut impl Rng,
) -> Result<ValueEstimate> {
    s.validate(1e-9)?;
    if samples == 0 {
        return Err(Error::invalid("need at least one sample"));
    }
    let nq = s.n_questions()?;
    let mut vals = Vec::with_capacity(samples);
    for _ in 0..samples {
        let q = rng.random_range(0..nq);
        vals.push(per_question_value(s, q)?);
    }
    let mean = vals.iter().sum::<f64>() / samples as f64;
    let var = vals.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / samples as f64;
    Ok(ValueEstimate { value: mean, std_err: Some((var / samples as f64).sqrt()) })
}

/// The direct (channel) form of the coset-game value:
/// E_A E_{s,s′} Tr((B̃^A_s ⊗ C̃^A_{s′}) Φ(|A_{s,s′}⟩⟨A_{s,s′}|)), with the
/// raw answer POVMs binned into cosets, as the winning condition demands.
pub fn winning_probability_direct_coset(s: &DirectCosetStrategy) -> Result<f64> {
    s.validate(1e-9)?;
    if s.n > COSET_EXHAUSTIVE_GUARD {
        return Err(Error::SizeGuard {
            what: "exhaustive coset question average",
            limit: COSET_EXHAUSTIVE_GUARD,
            got: s.n,
        });
    }
    let questions = coset_questions(s.n)?;
    let mut total = 0.0;
    for (q, a) in questions.iter().enumerate() {
        let meas = coset_measurement_family(a)?;
        let bob = DirectCosetStrategy::bin_by_cosets(&s.bob[q], a)?;
        let charlie =
            DirectCosetStrategy::bin_by_cosets(&s.charlie[q], &a.orthogonal_complement())?;
        let pairs = meas.s_reps.len() * meas.sp_reps.len();
        let mut acc = 0.0;
        for si in 0..meas.s_reps.len() {
            for spi in 0..meas.sp_reps.len() {
                let image = s.channel.apply(&meas.projector(si, spi));
                let win_op = bob.elements[si].kronecker(&charlie.elements[spi]);
                acc += trace_product(&win_op, &image).re;
            }
        }
        total += acc / pairs as f64;
    }
    Ok(total / questions.len() as f64)
}

/// Outcome of comparing the two forms on the same strategy.
#[derive(Debug, Clone, Copy)]
pub struct GameFormComparison {
    pub direct: f64,
    pub enlg: f64,
}

impl GameFormComparison {
    pub fn residual(&self) -> f64 {
        (self.direct - self.enlg).abs()
    }
}

/// Evaluate a direct strategy both ways: through the channel, and as the
/// extended nonlocal game with ρ the channel's EPR image. The two values
/// agree for every strategy.
pub fn verify_game_form_equality(s: &DirectCosetStrategy) -> Result<GameFormComparison> {
    let direct = winning_probability_direct_coset(s)?;
    let enlg = winning_probability_enlg(&s.to_enlg()?)?.value;
    Ok(GameFormComparison { direct, enlg })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::channel::KrausChannel;
    use crate::game::povm::Povm;
    use crate::game::random::{random_kraus, random_povm};
    use crate::qstate::CMat;
    use num_complex::Complex64;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    /// Bob gets the whole register and measures the standard basis;
    /// Charlie holds a fresh |0⟩ and always answers the zero vector.
    fn measure_and_guess_strategy(n: usize) -> DirectCosetStrategy {
        let channel = KrausChannel::identity_to_bob(n, 2);
        let dim_b = 1 << n;
        let standard: Vec<CMat> = (0..dim_b)
            .map(|v| {
                let mut m = CMat::zeros(dim_b, dim_b);
                m[(v, v)] = Complex64::new(1.0, 0.0);
                m
            })
            .collect();
        let mut guess_zero: Vec<CMat> = vec![CMat::zeros(2, 2); dim_b];
        guess_zero[0] = CMat::identity(2, 2);
        let nq = coset_questions(n).unwrap().len();
        DirectCosetStrategy {
            n,
            channel,
            bob: vec![standard; nq],
            charlie: vec![guess_zero; nq],
        }
    }

    fn uniform_direct_strategy(n: usize) -> DirectCosetStrategy {
        let channel = KrausChannel::identity_to_bob(n, 2);
        let dim_b = 1 << n;
        let nq = coset_questions(n).unwrap().len();
        let uniform_b = Povm::uniform(dim_b, 1 << n).elements;
        let uniform_c = Povm::uniform(2, 1 << n).elements;
        DirectCosetStrategy { n, channel, bob: vec![uniform_b; nq], charlie: vec![uniform_c; nq] }
    }

    #[test]
    fn direct_value_standard_measurement_hits_half_at_n2() {
        // Bob's computational measurement always lands in A+s; Charlie's
        // fixed zero guess is right with probability 2^{-n/2}.
        let s = measure_and_guess_strategy(2);
        let v = winning_probability_direct_coset(&s).unwrap();
        assert!((v - 0.5).abs() < 1e-12, "value {v}");
    }

    #[test]
    fn direct_value_uniform_guessing_is_two_to_minus_n() {
        let s = uniform_direct_strategy(2);
        let v = winning_probability_direct_coset(&s).unwrap();
        assert!((v - 0.25).abs() < 1e-12, "value {v}");
        let e = winning_probability_enlg(&s.to_enlg().unwrap()).unwrap();
        assert!((e.value - 0.25).abs() < 1e-9);
        assert!(e.is_exact());
    }

    #[test]
    fn enlg_uniform_strategy_value_quarter() {
        let s = uniform_direct_strategy(2).to_enlg().unwrap();
        s.validate(1e-9).unwrap();
        let v = winning_probability_enlg(&s).unwrap().value;
        assert!((v - 0.25).abs() < 1e-9);
    }

    #[test]
    fn game_forms_agree_for_measure_and_guess() {
        let cmp = verify_game_form_equality(&measure_and_guess_strategy(2)).unwrap();
        assert!(cmp.residual() <= 1e-9, "direct {} vs enlg {}", cmp.direct, cmp.enlg);
        assert!((cmp.direct - 0.5).abs() < 1e-12);
    }

    #[test]
    fn game_forms_agree_for_random_strategies() {
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        let nq = coset_questions(2).unwrap().len();
        for _ in 0..5 {
            let channel = random_kraus(4, 2, 2, 2, &mut rng);
            let bob: Vec<Vec<CMat>> =
                (0..nq).map(|_| random_povm(2, 4, &mut rng).elements).collect();
            let charlie: Vec<Vec<CMat>> =
                (0..nq).map(|_| random_povm(2, 4, &mut rng).elements).collect();
            let s = DirectCosetStrategy { n: 2, channel, bob, charlie };
            let cmp = verify_game_form_equality(&s).unwrap();
            assert!(cmp.residual() <= 1e-9, "residual {}", cmp.residual());
            assert!(cmp.direct >= -1e-12 && cmp.direct <= 1.0 + 1e-9);
        }
    }

    #[test]
    fn basis_game_blind_bob_uniform_charlie() {
        // ρ_A = |0ⁿ⟩: Alice's T-outcomes are deterministically zero, so a
        // Bob who always answers zero is right and a uniform Charlie
        // contributes 2^{-n/2}.
        let n = 2;
        let nq = basis_questions(n).unwrap().len();
        let dim = (1 << n) * 2;
        let mut rho = CMat::zeros(dim, dim);
        rho[(0, 0)] = Complex64::new(1.0, 0.0);
        let s = EnlgStrategy {
            game: Game::Basis,
            n,
            d_b: 1,
            d_c: 2,
            rho,
            bob: (0..nq).map(|_| Povm::deterministic(1, 2, 0)).collect(),
            charlie: (0..nq).map(|_| Povm::uniform(2, 2)).collect(),
        };
        let v = winning_probability_enlg(&s).unwrap().value;
        assert!((v - 0.5).abs() < 1e-9, "value {v}");
    }

    #[test]
    fn sampled_value_tracks_exact_value() {
        let s = uniform_direct_strategy(2).to_enlg().unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let est = winning_probability_enlg_sampled(&s, 64, &mut rng).unwrap();
        assert!(!est.is_exact());
        // Per-question value is constant 1/4 here, so sampling is exact.
        assert!((est.value - 0.25).abs() < 1e-9);
        assert!(est.std_err.unwrap() < 1e-9);
    }

    #[test]
    fn coset_n6_requires_sampled_mode_and_estimates_uniform_value() {
        // 1395 questions at n=6: exhaustive averaging is refused, the
        // flagged Monte-Carlo path works. Uniform guessing has the same
        // per-question value 2^{-n}, so the estimate is exact.
        let n = 6;
        let nq = coset_questions(n).unwrap().len();
        assert_eq!(nq, 1395);
        let dim = (1 << n) * 2 * 2;
        let rho = CMat::identity(dim, dim) / Complex64::new(dim as f64, 0.0);
        let s = EnlgStrategy {
            game: Game::Coset,
            n,
            d_b: 2,
            d_c: 2,
            rho,
            bob: (0..nq).map(|_| Povm::uniform(2, 8)).collect(),
            charlie: (0..nq).map(|_| Povm::uniform(2, 8)).collect(),
        };
        assert!(matches!(
            winning_probability_enlg(&s),
            Err(crate::Error::SizeGuard { .. })
        ));
        let mut rng = ChaCha8Rng::seed_from_u64(66);
        let est = winning_probability_enlg_sampled(&s, 16, &mut rng).unwrap();
        assert!(!est.is_exact(), "sampled estimates must be flagged");
        assert!((est.value - 1.0 / 64.0).abs() < 1e-9, "estimate {}", est.value);
    }

    #[test]
    fn values_stay_in_unit_interval() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..5 {
            let channel = random_kraus(4, 2, 2, 1, &mut rng);
            let nq = coset_questions(2).unwrap().len();
            let bob: Vec<Vec<CMat>> =
                (0..nq).map(|_| random_povm(2, 4, &mut rng).elements).collect();
            let charlie: Vec<Vec<CMat>> =
                (0..nq).map(|_| random_povm(2, 4, &mut rng).elements).collect();
            let s = DirectCosetStrategy { n: 2, channel, bob, charlie };
            let v = winning_probability_direct_coset(&s).unwrap();
            assert!((-1e-9..=1.0 + 1e-9).contains(&v));
        }
    }
}
