//! Quantum channels in Kraus form, from the adversary's n-qubit register
//! to the Bob⊗Charlie registers, and the EPR images that turn a channel
//! into a tripartite ENLG state.

use num_complex::Complex64;

use crate::qstate::{identity_residual, CMat, CVec};
use crate::{Error, Result};

/// Φ: L(C^{d_in}) → L(C^{d_b} ⊗ C^{d_c}), as Kraus operators of shape
/// (d_b·d_c) × d_in with Σ K†K = Id.
#[derive(Debug, Clone)]
pub struct KrausChannel {
    d_in: usize,
    d_b: usize,
    d_c: usize,
    kraus: Vec<CMat>,
}

impl KrausChannel {
    pub fn new(d_in: usize, d_b: usize, d_c: usize, kraus: Vec<CMat>) -> Result<KrausChannel> {
        if kraus.is_empty() {
            return Err(Error::InvalidStrategy("channel needs at least one Kraus operator".into()));
        }
        let d_out = d_b * d_c;
        let mut acc = CMat::zeros(d_in, d_in);
        for k in &kraus {
            if k.nrows() != d_out || k.ncols() != d_in {
                return Err(Error::DimensionMismatch { left: k.nrows(), right: d_out });
            }
            acc += k.adjoint() * k;
        }
        let residual = identity_residual(&acc);
        if residual > 1e-9 {
            return Err(Error::NotTracePreserving { residual });
        }
        Ok(KrausChannel { d_in, d_b, d_c, kraus })
    }

    pub fn d_in(&self) -> usize {
        self.d_in
    }

    pub fn d_b(&self) -> usize {
        self.d_b
    }

    pub fn d_c(&self) -> usize {
        self.d_c
    }

    pub fn kraus(&self) -> &[CMat] {
        &self.kraus
    }

    /// Φ(ρ) = Σ KρK†.
    pub fn apply(&self, rho: &CMat) -> CMat {
        let d_out = self.d_b * self.d_c;
        let mut out = CMat::zeros(d_out, d_out);
        for k in &self.kraus {
            out += k * rho * k.adjoint();
        }
        out
    }

    /// ρ_ABC = (Id_A ⊗ Φ)(|Ω⟩⟨Ω|) where |Ω⟩ = 2^{−n/2} Σ_r |r⟩|r⟩ is n EPR
    /// pairs rearranged into the two n-qubit halves.
    pub fn enlg_state(&self, n: usize) -> Result<CMat> {
        self.enlg_state_with_unitary(n, None)
    }

    /// Same, with a unitary applied to the second half before the channel:
    /// (Id ⊗ Φ)((Id ⊗ U)|Ω⟩⟨Ω|(Id ⊗ U)†).
    pub fn enlg_state_with_unitary(&self, n: usize, u: Option<&CMat>) -> Result<CMat> {
        let dim_a = 1usize << n;
        if self.d_in != dim_a {
            return Err(Error::DimensionMismatch { left: self.d_in, right: dim_a });
        }
        if let Some(u) = u {
            if u.nrows() != dim_a || u.ncols() != dim_a {
                return Err(Error::DimensionMismatch { left: u.nrows(), right: dim_a });
            }
        }
        let d_out = self.d_b * self.d_c;
        let dim = dim_a * d_out;
        let scale = Complex64::new((dim_a as f64).sqrt().recip(), 0.0);
        let mut rho = CMat::zeros(dim, dim);
        for k in &self.kraus {
            // (Id ⊗ KU)|Ω⟩ has amplitude 2^{−n/2}·(KU)[j, r] at |r⟩|j⟩.
            let ku = match u {
                Some(u) => k * u,
                None => k.clone(),
            };
            let mut v = CVec::zeros(dim);
            for r in 0..dim_a {
                for j in 0..d_out {
                    v[r * d_out + j] = scale * ku[(j, r)];
                }
            }
            let w = v.map(|z| z.conj()).transpose();
            rho += &v * w;
        }
        Ok(rho)
    }

    /// The channel that hands the whole register to Bob and gives Charlie a
    /// fresh |0⟩ of dimension `d_c`.
    pub fn identity_to_bob(n: usize, d_c: usize) -> KrausChannel {
        let dim_a = 1usize << n;
        let mut k = CMat::zeros(dim_a * d_c, dim_a);
        for a in 0..dim_a {
            // |a⟩_B ⊗ |0⟩_C.
            k[(a * d_c, a)] = Complex64::new(1.0, 0.0);
        }
        KrausChannel { d_in: dim_a, d_b: dim_a, d_c, kraus: vec![k] }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::linalg::{hermitian_eigenvalues, trace_product};
    use crate::game::random::random_kraus;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn identity_to_bob_is_trace_preserving() {
        let ch = KrausChannel::identity_to_bob(2, 2);
        let mut acc = CMat::zeros(4, 4);
        for k in ch.kraus() {
            acc += k.adjoint() * k;
        }
        assert!(identity_residual(&acc) < 1e-12);
    }

    #[test]
    fn random_channel_is_trace_preserving_and_enlg_state_is_a_state() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..5 {
            let ch = random_kraus(4, 2, 2, 2, &mut rng);
            let rho = ch.enlg_state(2).unwrap();
            assert!((rho.trace().re - 1.0).abs() < 1e-9, "trace one");
            let lows = hermitian_eigenvalues(&rho).unwrap();
            assert!(lows[0] > -1e-9, "PSD");
        }
    }

    #[test]
    fn enlg_state_reduced_on_a_is_maximally_mixed() {
        // Tracing out BC from (Id⊗Φ)(|Ω⟩⟨Ω|) always leaves Id/2ⁿ.
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let ch = random_kraus(4, 2, 2, 3, &mut rng);
        let rho = ch.enlg_state(2).unwrap();
        let d_out = 4;
        for a in 0..4 {
            for ap in 0..4 {
                let mut acc = Complex64::new(0.0, 0.0);
                for j in 0..d_out {
                    acc += rho[(a * d_out + j, ap * d_out + j)];
                }
                let expect = if a == ap { 0.25 } else { 0.0 };
                assert!((acc.re - expect).abs() < 1e-9 && acc.im.abs() < 1e-9);
            }
        }
        // And the BC marginal is Φ(Id/2ⁿ).
        let phi_mixed = ch.apply(&(CMat::identity(4, 4) / Complex64::new(4.0, 0.0)));
        assert!((trace_product(&phi_mixed, &CMat::identity(4, 4)).re - 1.0).abs() < 1e-9);
    }

    #[test]
    fn rejects_non_trace_preserving() {
        let k = CMat::identity(4, 4) * Complex64::new(0.5, 0.0);
        assert!(KrausChannel::new(4, 2, 2, vec![k]).is_err());
    }
}
