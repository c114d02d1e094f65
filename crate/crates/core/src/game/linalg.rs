//! Operator-norm and PSD primitives used by the game verifiers, built on
//! Hermitian eigendecomposition.

use nalgebra::SymmetricEigen;
use num_complex::Complex64;

use crate::qstate::{hermiticity_residual, CMat, CVec};
use crate::{Error, Result};

/// Hermiticity slack accepted by the operator routines.
pub const HERMITICITY_TOL: f64 = 1e-9;

fn check_finite(m: &CMat, what: &'static str) -> Result<()> {
    if m.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
        return Err(Error::NonFinite(what));
    }
    Ok(())
}

fn symmetrize(m: &CMat) -> CMat {
    (m + m.adjoint()).scale(0.5)
}

/// Eigenvalues of a Hermitian operator, ascending.
pub fn hermitian_eigenvalues(m: &CMat) -> Result<Vec<f64>> {
    check_finite(m, "hermitian operator")?;
    let res = hermiticity_residual(m);
    if res > HERMITICITY_TOL {
        return Err(Error::NotHermitian { residual: res });
    }
    let mut vals: Vec<f64> = SymmetricEigen::new(symmetrize(m)).eigenvalues.iter().copied().collect();
    vals.sort_by(|a, b| a.partial_cmp(b).expect("finite eigenvalues"));
    Ok(vals)
}

/// Operator norm of a Hermitian operator: the largest |eigenvalue|.
pub fn operator_norm(m: &CMat) -> Result<f64> {
    let vals = hermitian_eigenvalues(m)?;
    Ok(vals.iter().fold(0.0f64, |acc, l| acc.max(l.abs())))
}

/// Operator norm (largest singular value) of an arbitrary matrix, via the
/// largest eigenvalue of M†M.
pub fn operator_norm_general(m: &CMat) -> Result<f64> {
    check_finite(m, "operator")?;
    let gram = m.adjoint() * m;
    let vals = SymmetricEigen::new(symmetrize(&gram)).eigenvalues;
    Ok(vals.iter().fold(0.0f64, |acc, l| acc.max(*l)).max(0.0).sqrt())
}

/// Largest algebraic eigenvalue with its eigenvector (the see-saw ρ-step).
pub fn top_eigenpair(m: &CMat) -> Result<(f64, CVec)> {
    check_finite(m, "hermitian operator")?;
    let res = hermiticity_residual(m);
    if res > HERMITICITY_TOL {
        return Err(Error::NotHermitian { residual: res });
    }
    let eig = SymmetricEigen::new(symmetrize(m));
    let mut best = 0;
    for i in 1..eig.eigenvalues.len() {
        if eig.eigenvalues[i] > eig.eigenvalues[best] {
            best = i;
        }
    }
    Ok((eig.eigenvalues[best], eig.eigenvectors.column(best).into_owned()))
}

/// PSD square root. Eigenvalues in [−tol, 0) are clamped to zero; anything
/// below −1e−9 rejects the input.
pub fn psd_sqrt(m: &CMat) -> Result<CMat> {
    check_finite(m, "psd operator")?;
    let res = hermiticity_residual(m);
    if res > HERMITICITY_TOL {
        return Err(Error::NotHermitian { residual: res });
    }
    let eig = SymmetricEigen::new(symmetrize(m));
    let mut diag = CVec::zeros(eig.eigenvalues.len());
    for (i, &l) in eig.eigenvalues.iter().enumerate() {
        if l < -1e-9 {
            return Err(Error::NotPsd(l));
        }
        diag[i] = Complex64::new(l.max(0.0).sqrt(), 0.0);
    }
    let v = &eig.eigenvectors;
    Ok(v * CMat::from_diagonal(&diag) * v.adjoint())
}

/// Inverse square root of a positive definite operator.
pub fn pd_inv_sqrt(m: &CMat) -> Result<CMat> {
    check_finite(m, "pd operator")?;
    let eig = SymmetricEigen::new(symmetrize(m));
    let mut diag = CVec::zeros(eig.eigenvalues.len());
    for (i, &l) in eig.eigenvalues.iter().enumerate() {
        if l <= 0.0 {
            return Err(Error::NotPsd(l));
        }
        diag[i] = Complex64::new(1.0 / l.sqrt(), 0.0);
    }
    let v = &eig.eigenvectors;
    Ok(v * CMat::from_diagonal(&diag) * v.adjoint())
}

/// Smallest eigenvalue of a Hermitian operator.
pub fn min_eigenvalue(m: &CMat) -> Result<f64> {
    Ok(hermitian_eigenvalues(m)?[0])
}

/// Orthonormal basis of the range of a projector (eigenvectors with
/// eigenvalue 1). Rejects operators whose spectrum is not within 1e−4 of
/// {0, 1}.
pub fn projector_range_basis(m: &CMat) -> Result<CMat> {
    check_finite(m, "projector")?;
    let res = hermiticity_residual(m);
    if res > HERMITICITY_TOL {
        return Err(Error::NotHermitian { residual: res });
    }
    let eig = SymmetricEigen::new(symmetrize(m));
    let mut cols = Vec::new();
    for (i, &l) in eig.eigenvalues.iter().enumerate() {
        if l > 1e-4 && l < 1.0 - 1e-4 {
            return Err(Error::invalid(format!(
                "operator has eigenvalue {l:.6} away from {{0,1}}; not a projector"
            )));
        }
        if l >= 0.5 {
            cols.push(eig.eigenvectors.column(i).into_owned());
        }
    }
    let n = m.nrows();
    let mut v = CMat::zeros(n, cols.len());
    for (j, c) in cols.iter().enumerate() {
        v.set_column(j, c);
    }
    Ok(v)
}

/// ‖VV†·UU†‖ for isometries V, U (orthonormal columns): the largest
/// singular value of V†U. Empty factors give zero.
pub fn isometry_product_norm(v: &CMat, u: &CMat) -> Result<f64> {
    if v.ncols() == 0 || u.ncols() == 0 {
        return Ok(0.0);
    }
    operator_norm_general(&(v.adjoint() * u))
}

/// Tr(AB) without forming the product.
pub fn trace_product(a: &CMat, b: &CMat) -> Complex64 {
    debug_assert_eq!(a.ncols(), b.nrows());
    debug_assert_eq!(a.nrows(), b.ncols());
    let mut acc = Complex64::new(0.0, 0.0);
    for i in 0..a.nrows() {
        for j in 0..a.ncols() {
            acc += a[(i, j)] * b[(j, i)];
        }
    }
    acc
}

/// a ⊗ b ⊗ c.
pub fn kron3(a: &CMat, b: &CMat, c: &CMat) -> CMat {
    a.kronecker(b).kronecker(c)
}

/// Composite index of (a, b, c) on registers of dims (d_a, d_b, d_c).
#[inline]
pub fn abc_index(a: usize, b: usize, c: usize, d_b: usize, d_c: usize) -> usize {
    (a * d_b + b) * d_c + c
}

/// Reward operator on register B: the unique S with
/// Tr((M_A ⊗ X ⊗ M_C) ρ) = Tr(X·S) for every X on B.
pub fn reward_on_b(m_a: &CMat, m_c: &CMat, rho: &CMat, dims: (usize, usize, usize)) -> CMat {
    let (da, db, dc) = dims;
    let mut s = CMat::zeros(db, db);
    for b in 0..db {
        for bp in 0..db {
            let mut acc = Complex64::new(0.0, 0.0);
            for a in 0..da {
                for ap in 0..da {
                    let maa = m_a[(a, ap)];
                    if maa.norm_sqr() == 0.0 {
                        continue;
                    }
                    for c in 0..dc {
                        for cp in 0..dc {
                            let mcc = m_c[(c, cp)];
                            if mcc.norm_sqr() == 0.0 {
                                continue;
                            }
                            acc += maa
                                * mcc
                                * rho[(abc_index(ap, bp, cp, db, dc), abc_index(a, b, c, db, dc))];
                        }
                    }
                }
            }
            s[(bp, b)] = acc;
        }
    }
    s
}

/// Reward operator on register C, analogous to [`reward_on_b`].
pub fn reward_on_c(m_a: &CMat, m_b: &CMat, rho: &CMat, dims: (usize, usize, usize)) -> CMat {
    let (da, db, dc) = dims;
    let mut s = CMat::zeros(dc, dc);
    for c in 0..dc {
        for cp in 0..dc {
            let mut acc = Complex64::new(0.0, 0.0);
            for a in 0..da {
                for ap in 0..da {
                    let maa = m_a[(a, ap)];
                    if maa.norm_sqr() == 0.0 {
                        continue;
                    }
                    for b in 0..db {
                        for bp in 0..db {
                            let mbb = m_b[(b, bp)];
                            if mbb.norm_sqr() == 0.0 {
                                continue;
                            }
                            acc += maa
                                * mbb
                                * rho[(abc_index(ap, bp, cp, db, dc), abc_index(a, b, c, db, dc))];
                        }
                    }
                }
            }
            s[(cp, c)] = acc;
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::random::{random_hermitian, random_psd};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    /// Test-only oracle: cyclic Jacobi eigensolver for Hermitian matrices,
    /// fully independent of the production (QR-based) path. Convergence is
    /// checked internally, so a wrong rotation would fail loudly rather
    /// than return garbage.
    fn jacobi_eigenvalues(m: &CMat) -> Vec<f64> {
        let n = m.nrows();
        let mut a = m.clone();
        let scale = a.iter().map(|z| z.norm()).fold(0.0f64, f64::max).max(1.0);
        for _sweep in 0..60 {
            let mut off = 0.0f64;
            for p in 0..n {
                for q in (p + 1)..n {
                    off = off.max(a[(p, q)].norm());
                }
            }
            if off < 1e-14 * scale {
                break;
            }
            for p in 0..n {
                for q in (p + 1)..n {
                    let g = a[(p, q)];
                    if g.norm() < 1e-300 {
                        continue;
                    }
                    let phase = g / g.norm();
                    let alpha = a[(p, p)].re;
                    let beta = a[(q, q)].re;
                    let tau = (beta - alpha) / (2.0 * g.norm());
                    let t = tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt());
                    let c = 1.0 / (1.0 + t * t).sqrt();
                    let s = t * c;
                    // Rotation in the (p,q) plane with the phase of a_pq
                    // absorbed, annihilating the off-diagonal entry.
                    let mut j = CMat::identity(n, n);
                    j[(p, p)] = Complex64::new(c, 0.0);
                    j[(p, q)] = phase * s;
                    j[(q, p)] = -phase.conj() * s;
                    j[(q, q)] = Complex64::new(c, 0.0);
                    a = j.adjoint() * a * j;
                    assert!(
                        a[(p, q)].norm() < 1e-10 * scale,
                        "rotation failed to annihilate pivot"
                    );
                }
            }
        }
        let off = (0..n)
            .flat_map(|p| ((p + 1)..n).map(move |q| (p, q)))
            .map(|(p, q)| a[(p, q)].norm())
            .fold(0.0f64, f64::max);
        assert!(off < 1e-11 * scale, "Jacobi failed to converge: off-diagonal {off:.3e}");
        let mut vals: Vec<f64> = (0..n).map(|i| a[(i, i)].re).collect();
        vals.sort_by(|x, y| x.partial_cmp(y).unwrap());
        vals
    }

    #[test]
    fn operator_norm_small_cases() {
        assert!((operator_norm(&CMat::identity(4, 4)).unwrap() - 1.0).abs() < 1e-12);
        let mut d = CMat::zeros(3, 3);
        d[(0, 0)] = Complex64::new(1.0, 0.0);
        d[(1, 1)] = Complex64::new(2.0, 0.0);
        d[(2, 2)] = Complex64::new(3.0, 0.0);
        assert!((operator_norm(&d).unwrap() - 3.0).abs() < 1e-12);
        // Largest |eigenvalue|, not largest eigenvalue.
        d[(2, 2)] = Complex64::new(-5.0, 0.0);
        assert!((operator_norm(&d).unwrap() - 5.0).abs() < 1e-12);
    }

    #[test]
    fn operator_norm_matches_jacobi_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(101);
        for _ in 0..20 {
            let m = random_hermitian(16, &mut rng);
            let fast = operator_norm(&m).unwrap();
            let oracle = jacobi_eigenvalues(&m);
            let expect = oracle.iter().fold(0.0f64, |acc, l| acc.max(l.abs()));
            assert!(
                (fast - expect).abs() <= 1e-10 * expect.max(1.0),
                "norm {fast} vs oracle {expect}"
            );
        }
    }

    #[test]
    fn eigenvalues_match_jacobi_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(102);
        for _ in 0..10 {
            let m = random_hermitian(8, &mut rng);
            let fast = hermitian_eigenvalues(&m).unwrap();
            let oracle = jacobi_eigenvalues(&m);
            for (a, b) in fast.iter().zip(oracle.iter()) {
                assert!((a - b).abs() < 1e-9, "{fast:?} vs {oracle:?}");
            }
        }
    }

    #[test]
    fn general_norm_agrees_with_hermitian_norm_on_hermitian_input() {
        let mut rng = ChaCha8Rng::seed_from_u64(103);
        for _ in 0..10 {
            let m = random_hermitian(12, &mut rng);
            let a = operator_norm(&m).unwrap();
            let b = operator_norm_general(&m).unwrap();
            assert!((a - b).abs() < 1e-9);
        }
    }

    #[test]
    fn operator_norm_rejects_non_hermitian_and_non_finite() {
        let mut m = CMat::zeros(2, 2);
        m[(0, 1)] = Complex64::new(1.0, 0.0);
        assert!(matches!(operator_norm(&m), Err(crate::Error::NotHermitian { .. })));
        m[(1, 0)] = Complex64::new(f64::NAN, 0.0);
        assert!(operator_norm(&m).is_err());
    }

    #[test]
    fn psd_sqrt_examples() {
        // A projector is its own square root.
        let mut p = CMat::zeros(3, 3);
        p[(0, 0)] = Complex64::new(1.0, 0.0);
        let r = psd_sqrt(&p).unwrap();
        assert!((&r - &p).iter().all(|z| z.norm() < 1e-12));

        let mut d = CMat::zeros(2, 2);
        d[(0, 0)] = Complex64::new(4.0, 0.0);
        d[(1, 1)] = Complex64::new(9.0, 0.0);
        let r = psd_sqrt(&d).unwrap();
        assert!((r[(0, 0)].re - 2.0).abs() < 1e-12);
        assert!((r[(1, 1)].re - 3.0).abs() < 1e-12);
    }

    #[test]
    fn psd_sqrt_squares_back_and_rejects_negative() {
        let mut rng = ChaCha8Rng::seed_from_u64(104);
        for _ in 0..10 {
            let p = random_psd(8, &mut rng);
            let r = psd_sqrt(&p).unwrap();
            let back = &r * &r;
            let err = (&back - &p).iter().map(|z| z.norm()).fold(0.0, f64::max);
            assert!(err <= 1e-8 * p.iter().map(|z| z.norm()).fold(0.0, f64::max).max(1.0));
        }
        let mut neg = CMat::identity(2, 2);
        neg[(1, 1)] = Complex64::new(-0.5, 0.0);
        assert!(matches!(psd_sqrt(&neg), Err(crate::Error::NotPsd(_))));
    }

    #[test]
    fn top_eigenpair_is_extremal() {
        let mut rng = ChaCha8Rng::seed_from_u64(105);
        let m = random_hermitian(10, &mut rng);
        let (val, vec) = top_eigenpair(&m).unwrap();
        let image = &m * &vec;
        let rayleigh = vec.dotc(&image).re;
        assert!((rayleigh - val).abs() < 1e-9);
        let top = hermitian_eigenvalues(&m).unwrap().last().copied().unwrap();
        assert!((val - top).abs() < 1e-10);
    }

    #[test]
    fn reward_contractions_reproduce_traces() {
        // Tr((A⊗B⊗C)ρ) computed directly equals Tr(B·reward_on_b) and
        // Tr(C·reward_on_c).
        let mut rng = ChaCha8Rng::seed_from_u64(106);
        let dims = (2usize, 3usize, 2usize);
        let rho = crate::game::random::random_density(12, &mut rng);
        let ma = random_hermitian(2, &mut rng);
        let mb = random_hermitian(3, &mut rng);
        let mc = random_hermitian(2, &mut rng);
        let full = kron3(&ma, &mb, &mc);
        let direct = trace_product(&full, &rho).re;
        let via_b = trace_product(&mb, &reward_on_b(&ma, &mc, &rho, dims)).re;
        let via_c = trace_product(&mc, &reward_on_c(&ma, &mb, &rho, dims)).re;
        assert!((direct - via_b).abs() < 1e-10, "{direct} vs {via_b}");
        assert!((direct - via_c).abs() < 1e-10, "{direct} vs {via_c}");
    }
}
