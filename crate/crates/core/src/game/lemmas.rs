//! Numerical verifiers for the proof's operator inequalities: the coset
//! overlap bound, the orthogonal-permutation sum bound, and the
//! basis-game projector overlap chain.
//!
//! The game operators here are projectors of low rank in a much larger
//! space, so product norms are computed through orthonormal range factors:
//! ‖VV†·UU†‖ = σ_max(V†U). Tests cross-check this against dense products.

use num_complex::Complex64;

use super::linalg::{isometry_product_norm, operator_norm_general, projector_range_basis, psd_sqrt};
use super::povm::Povm;
use super::strategy::{basis_questions, sub_index, EnlgStrategy, Game};
use crate::f2::{intersection_dim, F2Vector, Subspace};
use crate::qstate::{
    bb84_state, coset_subspace_projector, BB84Label, CMat, CVec, CosetStateLabel,
};
use crate::{Error, Result};

/// Result of one coset-overlap check
/// ‖Σ_s |A_{s,s′}⟩⟨A_{s,s′}| · Π_{B+t}‖ ≤ √(2^{dim(A∩B)−n/2}).
#[derive(Debug, Clone, Copy)]
pub struct OverlapBoundCheck {
    pub lhs: f64,
    pub rhs: f64,
    /// Max-entry residual of Σ_{t′} |B_{t,t′}⟩⟨B_{t,t′}| = Π_{B+t}.
    pub projector_identity_residual: f64,
}

impl OverlapBoundCheck {
    pub fn holds(&self, tol: f64) -> bool {
        self.lhs <= self.rhs + tol && self.projector_identity_residual <= tol
    }

    pub fn saturated(&self, tol: f64) -> bool {
        (self.lhs - self.rhs).abs() <= tol
    }
}

/// Check the overlap bound for one (A, B, s′, t) tuple, together with the
/// proof's identity that summing |B_{t,t′}⟩⟨B_{t,t′}| over t′ gives the
/// coset projector Π_{B+t}.
pub fn verify_coset_overlap_bound(
    a: &Subspace,
    b: &Subspace,
    sp: &F2Vector,
    t: &F2Vector,
) -> Result<OverlapBoundCheck> {
    let n = a.ambient();
    if b.ambient() != n {
        return Err(Error::DimensionMismatch { left: b.ambient(), right: n });
    }
    let dim_cap = intersection_dim(a, b)?;

    // P = Σ_{s ∈ CS(A)} |A_{s,s′}⟩⟨A_{s,s′}|.
    let dim = 1usize << n;
    let mut p = CMat::zeros(dim, dim);
    for s in a.coset_representatives()? {
        p += crate::qstate::coset_state(&CosetStateLabel::new(a.clone(), s, *sp)?)?.projector();
    }

    // Σ_{t′ ∈ CS(B^⊥)} |B_{t,t′}⟩⟨B_{t,t′}| = Π_{B+t}.
    let mut q = CMat::zeros(dim, dim);
    for tp in b.orthogonal_complement().coset_representatives()? {
        q += crate::qstate::coset_state(&CosetStateLabel::new(b.clone(), *t, tp)?)?.projector();
    }
    let pi_bt = coset_subspace_projector(&b.coset_of(t)?);
    let projector_identity_residual =
        (&q - &pi_bt).iter().map(|z| z.norm()).fold(0.0, f64::max);

    let lhs = operator_norm_general(&(&p * &pi_bt))?;
    let rhs = 2.0f64.powf((dim_cap as f64 - n as f64 / 2.0) / 2.0);
    Ok(OverlapBoundCheck { lhs, rhs, projector_identity_residual })
}

/// Verify a family of permutations of {0..m−1} is mutually orthogonal:
/// π_i ∘ π_j⁻¹ has a fixed point only when i = j, i.e. distinct members
/// never agree at a point.
pub fn check_mutually_orthogonal(fam: &[Vec<usize>], m: usize) -> Result<()> {
    for (i, p) in fam.iter().enumerate() {
        if p.len() != m {
            return Err(Error::NotOrthogonalFamily(format!(
                "permutation {i} has length {}, expected {m}",
                p.len()
            )));
        }
        let mut seen = vec![false; m];
        for &img in p {
            if img >= m || seen[img] {
                return Err(Error::NotOrthogonalFamily(format!(
                    "permutation {i} is not a bijection"
                )));
            }
            seen[img] = true;
        }
    }
    for i in 0..fam.len() {
        for j in (i + 1)..fam.len() {
            if let Some(x) = (0..m).find(|&x| fam[i][x] == fam[j][x]) {
                return Err(Error::NotOrthogonalFamily(format!(
                    "permutations {i} and {j} agree at point {x}"
                )));
            }
        }
    }
    Ok(())
}

/// The right-hand side of the sum bound:
/// Σ_i max_j ‖√P_j·√P_{π_i(j)}‖ for PSD operators P and a mutually
/// orthogonal permutation family with |fam| = |ps|. The caller compares
/// this against ‖ΣP‖.
pub fn sum_bound_rhs(ps: &[CMat], fam: &[Vec<usize>]) -> Result<f64> {
    if ps.is_empty() || fam.len() != ps.len() {
        return Err(Error::invalid(format!(
            "need as many permutations as operators, got {} and {}",
            fam.len(),
            ps.len()
        )));
    }
    check_mutually_orthogonal(fam, ps.len())?;
    let roots: Vec<CMat> = ps.iter().map(psd_sqrt).collect::<Result<_>>()?;
    let mut total = 0.0;
    for perm in fam {
        let mut best = 0.0f64;
        for (j, &img) in perm.iter().enumerate() {
            best = best.max(operator_norm_general(&(&roots[j] * &roots[img]))?);
        }
        total += best;
    }
    Ok(total)
}

/// Result of the basis-game projector-overlap chain for one (θ, θ′) pair:
/// ‖Π^θ Π^{θ′}‖ ≤ 2^{−|R|/4} with the intermediate ‖P̄Q̄P̄‖ ≤ 2^{−|S|}.
#[derive(Debug, Clone, Copy)]
pub struct BasisOverlapCheck {
    pub lhs: f64,
    pub rhs: f64,
    pub pbar_qbar_pbar: f64,
    pub intermediate_bound: f64,
    pub r_size: usize,
    pub s_size: usize,
}

impl BasisOverlapCheck {
    pub fn holds(&self, tol: f64) -> bool {
        self.lhs <= self.rhs + tol && self.pbar_qbar_pbar <= self.intermediate_bound + tol
    }
}

/// Tensor product of three vectors.
fn kron3_vec(a: &CVec, b: &CVec, c: &CVec) -> CVec {
    let mut out = CVec::zeros(a.len() * b.len() * c.len());
    let mut idx = 0;
    for ai in 0..a.len() {
        for bi in 0..b.len() {
            for ci in 0..c.len() {
                out[idx] = a[ai] * b[bi] * c[ci];
                idx += 1;
            }
        }
    }
    out
}

fn columns_to_matrix(dim: usize, cols: Vec<CVec>) -> CMat {
    let mut m = CMat::zeros(dim, cols.len());
    for (j, c) in cols.iter().enumerate() {
        m.set_column(j, c);
    }
    m
}

/// Orthonormal range factor of Π^θ for projective POVMs: one column
/// |x⟩_θ ⊗ b ⊗ c per basis state x and range vectors of B_{x_T}, C_{x_T̄}.
/// The |x⟩_θ are orthonormal and POVM ranges are orthogonal across
/// outcomes, so the columns are orthonormal.
pub fn basis_projector_factor(
    theta: &F2Vector,
    bob: &Povm,
    charlie: &Povm,
) -> Result<CMat> {
    let n = theta.len();
    let t = theta.positions_with(0);
    let tbar = theta.positions_with(1);
    let bob_ranges: Vec<CMat> =
        bob.elements.iter().map(projector_range_basis).collect::<Result<_>>()?;
    let charlie_ranges: Vec<CMat> =
        charlie.elements.iter().map(projector_range_basis).collect::<Result<_>>()?;
    let mut cols = Vec::new();
    for xi in 0..1usize << n {
        let x = F2Vector::from_index(n, xi);
        let state = bb84_state(&BB84Label::new(x, *theta)?)?;
        let br = &bob_ranges[sub_index(&x, &t)];
        let cr = &charlie_ranges[sub_index(&x, &tbar)];
        for bj in 0..br.ncols() {
            for cj in 0..cr.ncols() {
                cols.push(kron3_vec(
                    state.amplitudes(),
                    &br.column(bj).into_owned(),
                    &cr.column(cj).into_owned(),
                ));
            }
        }
    }
    let dim = (1usize << n) * bob.dim() * charlie.dim();
    Ok(columns_to_matrix(dim, cols))
}

/// Range factor of P̄ = Σ_y (|y_S⟩⟨y_S| ⊗ Id) ⊗ B^θ_y ⊗ Id_C: columns
/// |a⟩ ⊗ b ⊗ e_c over standard-basis a agreeing with y on S, range
/// vectors b of B_y, and the standard basis of C.
fn pbar_factor(
    n: usize,
    s_positions: &[usize],
    t_positions: &[usize],
    bob: &Povm,
    d_c: usize,
) -> Result<CMat> {
    let bob_ranges: Vec<CMat> =
        bob.elements.iter().map(projector_range_basis).collect::<Result<_>>()?;
    let mut cols = Vec::new();
    for (y, br) in bob_ranges.iter().enumerate() {
        if br.ncols() == 0 {
            continue;
        }
        for ai in 0..1usize << n {
            let a = F2Vector::from_index(n, ai);
            // a must agree with y on S (S ⊆ T, y indexed over T).
            let matches = s_positions.iter().all(|&p| {
                let bit_pos = t_positions.iter().position(|&q| q == p).expect("S ⊆ T");
                a.get(p) as usize == (y >> (t_positions.len() - 1 - bit_pos)) & 1
            });
            if !matches {
                continue;
            }
            let mut a_vec = CVec::zeros(1 << n);
            a_vec[ai] = Complex64::new(1.0, 0.0);
            for bj in 0..br.ncols() {
                for c in 0..d_c {
                    let mut c_vec = CVec::zeros(d_c);
                    c_vec[c] = Complex64::new(1.0, 0.0);
                    cols.push(kron3_vec(&a_vec, &br.column(bj).into_owned(), &c_vec));
                }
            }
        }
    }
    let dim = (1usize << n) * bob.dim() * d_c;
    Ok(columns_to_matrix(dim, cols))
}

/// Range factor of Q̄ = Σ_z (H^S |z_S⟩⟨z_S| H^S ⊗ Id) ⊗ Id_B ⊗ C^{θ′}_z:
/// columns H^S|a⟩ ⊗ e_b ⊗ c over a agreeing with z on S (S ⊆ T̄′).
fn qbar_factor(
    n: usize,
    s_positions: &[usize],
    tbar_p_positions: &[usize],
    charlie: &Povm,
    d_b: usize,
) -> Result<CMat> {
    let charlie_ranges: Vec<CMat> =
        charlie.elements.iter().map(projector_range_basis).collect::<Result<_>>()?;
    let h = 0.5f64.sqrt();
    let mut cols = Vec::new();
    for (z, cr) in charlie_ranges.iter().enumerate() {
        if cr.ncols() == 0 {
            continue;
        }
        for ai in 0..1usize << n {
            let a = F2Vector::from_index(n, ai);
            let matches = s_positions.iter().all(|&p| {
                let bit_pos =
                    tbar_p_positions.iter().position(|&q| q == p).expect("S ⊆ T̄′");
                a.get(p) as usize == (z >> (tbar_p_positions.len() - 1 - bit_pos)) & 1
            });
            if !matches {
                continue;
            }
            // H^S|a⟩: Hadamard on the S qubits, identity elsewhere.
            let mut a_vec = CVec::zeros(1 << n);
            for wi in 0..1usize << n {
                let w = F2Vector::from_index(n, wi);
                let mut amp = 1.0f64;
                for i in 0..n {
                    if s_positions.contains(&i) {
                        amp *= if a.get(i) & w.get(i) == 1 { -h } else { h };
                    } else if a.get(i) != w.get(i) {
                        amp = 0.0;
                        break;
                    }
                }
                if amp != 0.0 {
                    a_vec[wi] = Complex64::new(amp, 0.0);
                }
            }
            for cj in 0..cr.ncols() {
                for b in 0..d_b {
                    let mut b_vec = CVec::zeros(d_b);
                    b_vec[b] = Complex64::new(1.0, 0.0);
                    cols.push(kron3_vec(&a_vec, &b_vec, &cr.column(cj).into_owned()));
                }
            }
        }
    }
    let dim = (1usize << n) * d_b * charlie.dim();
    Ok(columns_to_matrix(dim, cols))
}

/// Verify ‖Π^θ Π^{θ′}‖ ≤ 2^{−|R|/4} for two distinct questions of a
/// projective basis-game strategy, together with the intermediate bound
/// ‖P̄Q̄P̄‖ ≤ 2^{−|S|} from which it follows. Non-projective POVMs are
/// rejected (dilation is out of scope).
pub fn verify_basis_overlap(
    s: &EnlgStrategy,
    qi: usize,
    qj: usize,
) -> Result<BasisOverlapCheck> {
    if s.game != Game::Basis {
        return Err(Error::invalid("basis-overlap check requires a basis-game strategy"));
    }
    let questions = basis_questions(s.n)?;
    let (theta_i, theta_j) = (questions[qi], questions[qj]);

    let tol = 1e-9;
    for q in [qi, qj] {
        if !s.bob[q].is_projective(tol) || !s.charlie[q].is_projective(tol) {
            return Err(Error::InvalidStrategy(
                "overlap chain requires projective POVMs (dilation not implemented)".into(),
            ));
        }
    }

    let v_i = basis_projector_factor(&theta_i, &s.bob[qi], &s.charlie[qi])?;
    let v_j = basis_projector_factor(&theta_j, &s.bob[qj], &s.charlie[qj])?;
    let lhs = isometry_product_norm(&v_i, &v_j)?;

    // R: positions where the two questions differ. Orient so that θ has
    // weight ≤ |R|/2 on R (swap otherwise); then S = {i ∈ R : θ_i = 0}
    // has |S| ≥ |R|/2.
    let diff = theta_i + theta_j;
    let r_positions = diff.positions_with(1);
    let r_size = r_positions.len();
    if r_size == 0 {
        return Err(Error::invalid("overlap check needs two distinct questions"));
    }
    let weight_on_r = r_positions.iter().filter(|&&p| theta_i.get(p) == 1).count();
    let (theta, q_theta, q_theta_p) = if 2 * weight_on_r <= r_size {
        (theta_i, qi, qj)
    } else {
        (theta_j, qj, qi)
    };
    let s_positions: Vec<usize> =
        r_positions.iter().copied().filter(|&p| theta.get(p) == 0).collect();
    let s_size = s_positions.len();

    let theta_p = questions[q_theta_p];
    let t_positions = theta.positions_with(0);
    let tbar_p_positions = theta_p.positions_with(1);
    let w = pbar_factor(s.n, &s_positions, &t_positions, &s.bob[q_theta], s.d_c)?;
    let u = qbar_factor(s.n, &s_positions, &tbar_p_positions, &s.charlie[q_theta_p], s.d_b)?;
    // ‖P̄Q̄P̄‖ = ‖W(W†U)(W†U)†W†‖ = σ_max(W†U)².
    let pbar_qbar_pbar = isometry_product_norm(&w, &u)?.powi(2);

    Ok(BasisOverlapCheck {
        lhs,
        rhs: 2.0f64.powf(-(r_size as f64) / 4.0),
        pbar_qbar_pbar,
        intermediate_bound: 2.0f64.powf(-(s_size as f64)),
        r_size,
        s_size,
    })
}

/// All distinct question pairs of a projective basis-game strategy,
/// checked through [`verify_basis_overlap`].
pub fn verify_all_basis_overlaps(s: &EnlgStrategy) -> Result<Vec<BasisOverlapCheck>> {
    let nq = s.n_questions()?;
    let mut out = Vec::new();
    for i in 0..nq {
        for j in (i + 1)..nq {
            out.push(verify_basis_overlap(s, i, j)?);
        }
    }
    Ok(out)
}
