//! Seeded generators for the random objects the test suites and see-saw
//! restarts need: Haar unitaries, density operators, POVMs (projective and
//! general) and Kraus channels.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::Rng;
use rand_distr::{Distribution, StandardNormal};

use super::linalg::pd_inv_sqrt;
use super::povm::Povm;
use crate::qstate::CMat;

/// Matrix of iid standard complex Gaussians.
pub fn ginibre(rows: usize, cols: usize, rng: &mut impl Rng) -> CMat {
    DMatrix::from_fn(rows, cols, |_, _| {
        Complex64::new(StandardNormal.sample(rng), StandardNormal.sample(rng))
    })
}

/// Haar-random unitary: QR of a Ginibre matrix with the R-diagonal phases
/// absorbed into Q.
pub fn random_unitary(d: usize, rng: &mut impl Rng) -> CMat {
    let qr = ginibre(d, d, rng).qr();
    let r = qr.r();
    let mut q = qr.q();
    for j in 0..d {
        let rjj = r[(j, j)];
        let phase = if rjj.norm() > 0.0 { rjj / rjj.norm() } else { Complex64::new(1.0, 0.0) };
        for i in 0..d {
            q[(i, j)] *= phase;
        }
    }
    q
}

/// Random density operator GG†/Tr(GG†).
pub fn random_density(d: usize, rng: &mut impl Rng) -> CMat {
    let g = ginibre(d, d, rng);
    let m = &g * g.adjoint();
    let tr = m.trace();
    m / tr
}

/// Random PSD operator GG† (unnormalized).
pub fn random_psd(d: usize, rng: &mut impl Rng) -> CMat {
    let g = ginibre(d, d, rng);
    &g * g.adjoint()
}

/// Random Hermitian operator (GUE-like, unnormalized).
pub fn random_hermitian(d: usize, rng: &mut impl Rng) -> CMat {
    let g = ginibre(d, d, rng);
    (&g + g.adjoint()).scale(0.5)
}

/// Projective POVM with `outcomes` elements on dimension d: columns of a
/// Haar unitary distributed round-robin, so ranks differ by at most one
/// and outcomes beyond d are zero.
pub fn random_projective_povm(d: usize, outcomes: usize, rng: &mut impl Rng) -> Povm {
    let u = random_unitary(d, rng);
    let mut elements = vec![CMat::zeros(d, d); outcomes];
    for col in 0..d {
        let v = u.column(col);
        let proj = v * v.adjoint();
        elements[col % outcomes] += proj;
    }
    Povm { elements }
}

/// General POVM: Ginibre PSD pieces normalized by the inverse square root
/// of their sum.
pub fn random_povm(d: usize, outcomes: usize, rng: &mut impl Rng) -> Povm {
    let parts: Vec<CMat> = (0..outcomes).map(|_| random_psd(d, rng)).collect();
    let mut sum = CMat::zeros(d, d);
    for p in &parts {
        sum += p;
    }
    let w = pd_inv_sqrt(&sum).expect("sum of Ginibre PSD parts is positive definite");
    Povm { elements: parts.into_iter().map(|p| &w * p * &w).collect() }
}

/// Random quantum channel from dimension `d_in` to `d_b`·`d_c` with
/// `n_kraus` Kraus operators, from a Haar-random isometry.
pub fn random_kraus(
    d_in: usize,
    d_b: usize,
    d_c: usize,
    n_kraus: usize,
    rng: &mut impl Rng,
) -> super::channel::KrausChannel {
    let d_out = d_b * d_c;
    let total = d_out * n_kraus;
    assert!(total >= d_in, "need n_kraus*d_out >= d_in for an isometry");
    // QR of a tall Ginibre matrix: the thin Q is a Haar isometry.
    let qr = ginibre(total, d_in, rng).qr();
    let q = qr.q();
    let kraus: Vec<CMat> = (0..n_kraus)
        .map(|k| {
            let mut m = CMat::zeros(d_out, d_in);
            for i in 0..d_out {
                for j in 0..d_in {
                    m[(i, j)] = q[(k * d_out + i, j)];
                }
            }
            m
        })
        .collect();
    super::channel::KrausChannel::new(d_in, d_b, d_c, kraus)
        .expect("isometry columns give a trace-preserving channel")
}
