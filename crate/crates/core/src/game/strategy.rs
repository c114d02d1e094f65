//! Strategy containers for the two games, with the question and outcome
//! orderings pinned down once: coset questions follow the Grassmannian
//! enumeration order, basis questions the sorted balanced strings; Bob's
//! outcomes follow CS(A) (sorted) or the sub-string integers on T, and
//! Charlie's CS(A^⊥) or the sub-string integers on T̄.

use super::channel::KrausChannel;
use super::linalg::min_eigenvalue;
use super::povm::Povm;
use crate::f2::{enumerate_grassmannian, F2Vector, Subspace};
use crate::permcover::WeightedStringIndex;
use crate::qstate::{hermiticity_residual, CMat};
use crate::{Error, Result};

/// Which monogamy game a strategy plays.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Game {
    Coset,
    Basis,
}

impl std::fmt::Display for Game {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Game::Coset => write!(f, "coset"),
            Game::Basis => write!(f, "basis"),
        }
    }
}

/// The coset-game question set: all of G(n/2, n), in enumeration order.
pub fn coset_questions(n: usize) -> Result<Vec<Subspace>> {
    require_even(n)?;
    enumerate_grassmannian(n, n / 2)
}

/// The basis-game question set: balanced θ strings, sorted.
pub fn basis_questions(n: usize) -> Result<Vec<F2Vector>> {
    require_even(n)?;
    Ok(WeightedStringIndex::new(n)?.strings().to_vec())
}

pub(crate) fn require_even(n: usize) -> Result<()> {
    if n < 2 || !n.is_multiple_of(2) {
        return Err(Error::invalid(format!("game size n must be even and >= 2, got {n}")));
    }
    Ok(())
}

/// Integer index of the sub-string of `x` at `positions` (ascending), with
/// the first listed position most significant.
pub fn sub_index(x: &F2Vector, positions: &[usize]) -> usize {
    let mut idx = 0usize;
    for &p in positions {
        idx = (idx << 1) | x.get(p) as usize;
    }
    idx
}

/// A strategy for the extended nonlocal game form of either game: a
/// tripartite state on A⊗B⊗C plus per-question POVMs for Bob and Charlie.
#[derive(Debug, Clone)]
pub struct EnlgStrategy {
    pub game: Game,
    pub n: usize,
    pub d_b: usize,
    pub d_c: usize,
    /// Density operator on the composite register, A-major index order.
    pub rho: CMat,
    /// One POVM per question, aligned with the question enumeration.
    pub bob: Vec<Povm>,
    pub charlie: Vec<Povm>,
}

impl EnlgStrategy {
    pub fn dims(&self) -> (usize, usize, usize) {
        (1 << self.n, self.d_b, self.d_c)
    }

    pub fn total_dim(&self) -> usize {
        (1 << self.n) * self.d_b * self.d_c
    }

    pub fn n_questions(&self) -> Result<usize> {
        Ok(match self.game {
            Game::Coset => coset_questions(self.n)?.len(),
            Game::Basis => basis_questions(self.n)?.len(),
        })
    }

    /// Check every strategy invariant: state PSD with unit trace, POVM
    /// counts aligned with the question set, 2^{n/2} outcomes per player,
    /// and every POVM valid on its register.
    pub fn validate(&self, tol: f64) -> Result<()> {
        require_even(self.n)?;
        let dim = self.total_dim();
        if self.rho.nrows() != dim || self.rho.ncols() != dim {
            return Err(Error::DimensionMismatch { left: self.rho.nrows(), right: dim });
        }
        let h = hermiticity_residual(&self.rho);
        if h > tol {
            return Err(Error::NotHermitian { residual: h });
        }
        if (self.rho.trace().re - 1.0).abs() > tol {
            return Err(Error::InvalidStrategy(format!(
                "state trace {} is not 1",
                self.rho.trace().re
            )));
        }
        let lo = min_eigenvalue(&self.rho)?;
        if lo < -tol {
            return Err(Error::InvalidStrategy(format!(
                "state has negative eigenvalue {lo:.3e}"
            )));
        }
        let nq = self.n_questions()?;
        if self.bob.len() != nq || self.charlie.len() != nq {
            return Err(Error::InvalidStrategy(format!(
                "expected {nq} POVMs per player, got {} and {}",
                self.bob.len(),
                self.charlie.len()
            )));
        }
        let outcomes = 1usize << (self.n / 2);
        for (q, (b, c)) in self.bob.iter().zip(self.charlie.iter()).enumerate() {
            if b.outcomes() != outcomes || c.outcomes() != outcomes {
                return Err(Error::InvalidStrategy(format!(
                    "question {q}: expected {outcomes} outcomes, got {} and {}",
                    b.outcomes(),
                    c.outcomes()
                )));
            }
            b.validate(self.d_b, tol)?;
            c.validate(self.d_c, tol)?;
        }
        Ok(())
    }

    /// True when every POVM of both players is projective within `tol`.
    pub fn is_projective(&self, tol: f64) -> bool {
        self.bob.iter().all(|p| p.is_projective(tol))
            && self.charlie.iter().all(|p| p.is_projective(tol))
    }
}

/// A strategy for the coset game in its original (channel) form: the
/// adversary's splitting channel plus, for every subspace question, raw
/// answer POVMs indexed by all 2ⁿ vectors of F₂ⁿ.
#[derive(Debug, Clone)]
pub struct DirectCosetStrategy {
    pub n: usize,
    pub channel: KrausChannel,
    /// `bob[q][v]` is Bob's POVM element for answer vector with index v,
    /// under question `coset_questions(n)[q]`.
    pub bob: Vec<Vec<CMat>>,
    pub charlie: Vec<Vec<CMat>>,
}

impl DirectCosetStrategy {
    pub fn validate(&self, tol: f64) -> Result<()> {
        require_even(self.n)?;
        if self.channel.d_in() != 1 << self.n {
            return Err(Error::DimensionMismatch {
                left: self.channel.d_in(),
                right: 1 << self.n,
            });
        }
        let nq = coset_questions(self.n)?.len();
        if self.bob.len() != nq || self.charlie.len() != nq {
            return Err(Error::InvalidStrategy(format!(
                "expected {nq} raw POVMs per player, got {} and {}",
                self.bob.len(),
                self.charlie.len()
            )));
        }
        for q in 0..nq {
            if self.bob[q].len() != 1 << self.n || self.charlie[q].len() != 1 << self.n {
                return Err(Error::InvalidStrategy(format!(
                    "question {q}: raw POVMs must have 2^n outcomes"
                )));
            }
            Povm { elements: self.bob[q].clone() }.validate(self.channel.d_b(), tol)?;
            Povm { elements: self.charlie[q].clone() }.validate(self.channel.d_c(), tol)?;
        }
        Ok(())
    }

    /// Bin raw answer POVM elements by the cosets of `space`: element i of
    /// the result sums the raw elements over the i-th coset (representatives
    /// sorted). The winning condition accepts any vector in the right coset,
    /// so this loses nothing.
    pub fn bin_by_cosets(raw: &[CMat], space: &Subspace) -> Result<Povm> {
        let reps = space.coset_representatives()?;
        if raw.len() != 1 << space.ambient() {
            return Err(Error::DimensionMismatch {
                left: raw.len(),
                right: 1 << space.ambient(),
            });
        }
        let dim = raw[0].nrows();
        let elements = reps
            .iter()
            .map(|rep| {
                let mut acc = CMat::zeros(dim, dim);
                for e in space.coset_of(rep).expect("rep has ambient length").elements() {
                    acc += &raw[e.index()];
                }
                acc
            })
            .collect();
        Ok(Povm { elements })
    }

    /// The ENLG image of this strategy: ρ from the EPR trick, POVMs binned
    /// into CS(A) / CS(A^⊥) outcomes.
    pub fn to_enlg(&self) -> Result<EnlgStrategy> {
        let questions = coset_questions(self.n)?;
        let rho = self.channel.enlg_state(self.n)?;
        let mut bob = Vec::with_capacity(questions.len());
        let mut charlie = Vec::with_capacity(questions.len());
        for (q, a) in questions.iter().enumerate() {
            bob.push(Self::bin_by_cosets(&self.bob[q], a)?);
            charlie.push(Self::bin_by_cosets(&self.charlie[q], &a.orthogonal_complement())?);
        }
        Ok(EnlgStrategy {
            game: Game::Coset,
            n: self.n,
            d_b: self.channel.d_b(),
            d_c: self.channel.d_c(),
            rho,
            bob,
            charlie,
        })
    }
}
