//! Dense complex states and operators on qubit registers: coset states
//! |A_{s,s′}⟩, BB'84 states |x⟩_θ, Pauli strings X^s Z^{s′}, the
//! basis-change permutation U_B, coset projectors, the projective coset
//! measurement, and the coset↔BB'84 translation.
//!
//! Basis-state indexing follows the crate-wide convention: bit i of a
//! string is the i-th tensor factor and carries weight 2^{n−1−i}, so an
//! [`F2Vector`]'s `index()` is its computational-basis index. All of the
//! constructions here have real amplitudes, but everything is built over
//! complex scalars so that arbitrary strategies can be evaluated.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::f2::{dual_basis, Coset, F2Matrix, F2Vector, Subspace};
use crate::{Error, Result};

pub type CMat = DMatrix<Complex64>;
pub type CVec = DVector<Complex64>;

/// Largest single-register qubit count (4096 amplitudes).
pub const STATE_QUBIT_GUARD: usize = 12;

pub const ONE: Complex64 = Complex64::new(1.0, 0.0);
pub const ZERO_C: Complex64 = Complex64::new(0.0, 0.0);

fn guard_qubits(n: usize) -> Result<()> {
    if n > STATE_QUBIT_GUARD {
        return Err(Error::SizeGuard { what: "qubit register", limit: STATE_QUBIT_GUARD, got: n });
    }
    Ok(())
}

/// A pure state on an n-qubit register.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    n: usize,
    amp: CVec,
}

impl StateVector {
    pub fn from_amplitudes(n: usize, amp: CVec) -> Result<StateVector> {
        guard_qubits(n)?;
        if amp.len() != 1 << n {
            return Err(Error::DimensionMismatch { left: amp.len(), right: 1 << n });
        }
        Ok(StateVector { n, amp })
    }

    pub fn basis_state(n: usize, index: usize) -> Result<StateVector> {
        guard_qubits(n)?;
        let mut amp = CVec::zeros(1 << n);
        amp[index] = ONE;
        Ok(StateVector { n, amp })
    }

    pub fn n_qubits(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.amp.len()
    }

    pub fn amplitudes(&self) -> &CVec {
        &self.amp
    }

    pub fn amplitude(&self, index: usize) -> Complex64 {
        self.amp[index]
    }

    pub fn norm(&self) -> f64 {
        self.amp.norm()
    }

    /// ⟨self|other⟩.
    pub fn inner(&self, other: &StateVector) -> Complex64 {
        self.amp.dotc(&other.amp)
    }

    /// |⟨self|other⟩|, the phase-insensitive overlap.
    pub fn overlap_modulus(&self, other: &StateVector) -> f64 {
        self.inner(other).norm()
    }

    /// L2 distance ‖self − other‖.
    pub fn distance(&self, other: &StateVector) -> f64 {
        (&self.amp - &other.amp).norm()
    }

    /// |ψ⟩⟨ψ|.
    pub fn projector(&self) -> CMat {
        let conj = self.amp.map(|z| z.conj()).transpose();
        &self.amp * conj
    }

    /// Apply a square operator of matching dimension.
    pub fn apply(&self, op: &CMat) -> Result<StateVector> {
        if op.ncols() != self.amp.len() {
            return Err(Error::DimensionMismatch { left: op.ncols(), right: self.amp.len() });
        }
        Ok(StateVector { n: self.n, amp: op * &self.amp })
    }
}

/// The classical data (A, s, s′) indexing a coset state X^s Z^{s′}|A⟩.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetStateLabel {
    pub a: Subspace,
    pub s: F2Vector,
    pub sp: F2Vector,
}

impl CosetStateLabel {
    pub fn new(a: Subspace, s: F2Vector, sp: F2Vector) -> Result<CosetStateLabel> {
        if s.len() != a.ambient() || sp.len() != a.ambient() {
            return Err(Error::DimensionMismatch {
                left: s.len().max(sp.len()),
                right: a.ambient(),
            });
        }
        Ok(CosetStateLabel { a, s, sp })
    }
}

/// The classical data (x, θ) indexing a BB'84 state |x⟩_θ; T is the set of
/// standard-basis positions {i : θᵢ = 0}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BB84Label {
    pub x: F2Vector,
    pub theta: F2Vector,
}

impl BB84Label {
    pub fn new(x: F2Vector, theta: F2Vector) -> Result<BB84Label> {
        if x.len() != theta.len() {
            return Err(Error::DimensionMismatch { left: x.len(), right: theta.len() });
        }
        Ok(BB84Label { x, theta })
    }

    /// Standard-basis positions, ascending.
    pub fn t_positions(&self) -> Vec<usize> {
        self.theta.positions_with(0)
    }

    /// Hadamard-basis positions, ascending.
    pub fn tbar_positions(&self) -> Vec<usize> {
        self.theta.positions_with(1)
    }
}

/// |A_{s,s′}⟩ = (1/√|A|) Σ_{u∈A} (−1)^{u·s′} |u+s⟩.
pub fn coset_state(label: &CosetStateLabel) -> Result<StateVector> {
    let n = label.a.ambient();
    guard_qubits(n)?;
    let scale = 0.5f64.powf(label.a.dim() as f64 / 2.0);
    let mut amp = CVec::zeros(1 << n);
    for u in label.a.elements() {
        let sign = if u.dot(&label.sp) == 1 { -scale } else { scale };
        amp[(u + label.s).index()] = Complex64::new(sign, 0.0);
    }
    StateVector::from_amplitudes(n, amp)
}

/// |x⟩_θ = ⊗ᵢ H^{θᵢ}|xᵢ⟩.
pub fn bb84_state(label: &BB84Label) -> Result<StateVector> {
    let n = label.x.len();
    guard_qubits(n)?;
    let h = 0.5f64.sqrt();
    let mut amp = CVec::zeros(1 << n);
    for y in 0..1usize << n {
        let yv = F2Vector::from_index(n, y);
        let mut a = 1.0f64;
        for i in 0..n {
            a *= match (label.theta.get(i), label.x.get(i) == yv.get(i)) {
                (0, true) => 1.0,
                (0, false) => 0.0,
                // Hadamard basis: ⟨y|H|x⟩ = (−1)^{xy}/√2.
                (_, _) => {
                    if label.x.get(i) & yv.get(i) == 1 {
                        -h
                    } else {
                        h
                    }
                }
            };
            if a == 0.0 {
                break;
            }
        }
        if a != 0.0 {
            amp[y] = Complex64::new(a, 0.0);
        }
    }
    StateVector::from_amplitudes(n, amp)
}

/// X^s Z^{s′} as a matrix: |u⟩ ↦ (−1)^{u·s′} |u+s⟩.
pub fn pauli_string(s: &F2Vector, sp: &F2Vector) -> Result<CMat> {
    if s.len() != sp.len() {
        return Err(Error::DimensionMismatch { left: s.len(), right: sp.len() });
    }
    let n = s.len();
    guard_qubits(n)?;
    let dim = 1 << n;
    let mut m = CMat::zeros(dim, dim);
    for u in 0..dim {
        let uv = F2Vector::from_index(n, u);
        let sign = if uv.dot(sp) == 1 { -1.0 } else { 1.0 };
        m[((uv + *s).index(), u)] = Complex64::new(sign, 0.0);
    }
    Ok(m)
}

/// The permutation unitary U_B with U_B|x⟩ = |Σᵢ xᵢuᵢ⟩, for an invertible
/// basis matrix B with rows uᵢ.
pub fn basis_change_unitary(b: &F2Matrix) -> Result<CMat> {
    if !b.is_invertible() {
        return Err(Error::Singular);
    }
    let n = b.n_cols();
    guard_qubits(n)?;
    let dim = 1 << n;
    let mut m = CMat::zeros(dim, dim);
    for x in 0..dim {
        let image = b.combine_rows(&F2Vector::from_index(n, x))?;
        m[(image.index(), x)] = ONE;
    }
    Ok(m)
}

/// Π_{B+t} = Σ_{b∈B+t} |b⟩⟨b|, the diagonal projector onto a coset.
pub fn coset_subspace_projector(c: &Coset) -> CMat {
    let n = c.subspace().ambient();
    let dim = 1 << n;
    let mut m = CMat::zeros(dim, dim);
    for e in c.elements() {
        m[(e.index(), e.index())] = ONE;
    }
    m
}

/// The projective measurement {|A_{s,s′}⟩⟨A_{s,s′}|} with outcomes
/// (s, s′) ∈ CS(A)×CS(A^⊥).
#[derive(Debug, Clone)]
pub struct CosetMeasurement {
    pub s_reps: Vec<F2Vector>,
    pub sp_reps: Vec<F2Vector>,
    states: Vec<StateVector>,
}

impl CosetMeasurement {
    /// Row-major outcome index: s-index major, s′-index minor.
    pub fn outcome_index(&self, si: usize, spi: usize) -> usize {
        si * self.sp_reps.len() + spi
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn state(&self, si: usize, spi: usize) -> &StateVector {
        &self.states[self.outcome_index(si, spi)]
    }

    pub fn states(&self) -> &[StateVector] {
        &self.states
    }

    pub fn projector(&self, si: usize, spi: usize) -> CMat {
        self.state(si, spi).projector()
    }
}

/// Build the coset measurement family for A (dim n/2 in game use; any
/// dimension is accepted).
pub fn coset_measurement_family(a: &Subspace) -> Result<CosetMeasurement> {
    let s_reps = a.coset_representatives()?;
    let sp_reps = a.orthogonal_complement().coset_representatives()?;
    let mut states = Vec::with_capacity(s_reps.len() * sp_reps.len());
    for s in &s_reps {
        for sp in &sp_reps {
            states.push(coset_state(&CosetStateLabel::new(a.clone(), *s, *sp)?)?);
        }
    }
    Ok(CosetMeasurement { s_reps, sp_reps, states })
}

/// The translation data of the coset↔BB'84 correspondence: for a basis B
/// with rows uᵢ and dual rows u^i, A = Span{uᵢ : θᵢ = 1},
/// s = Σ_{i∈T} xᵢuᵢ and s′ = Σ_{i∈T̄} xᵢu^i.
pub fn translate_bb84_label(
    b: &F2Matrix,
    theta: &F2Vector,
    x: &F2Vector,
) -> Result<CosetStateLabel> {
    let n = b.n_cols();
    if theta.len() != n || x.len() != n || b.n_rows() != n {
        return Err(Error::DimensionMismatch { left: theta.len().max(x.len()), right: n });
    }
    let dual = dual_basis(b)?;
    let span_rows: Vec<F2Vector> = theta
        .positions_with(1)
        .into_iter()
        .map(|i| b.row(i))
        .collect();
    let a = Subspace::from_vectors(n, &span_rows)?;
    let mut s = F2Vector::zero(n);
    for i in theta.positions_with(0) {
        if x.get(i) == 1 {
            s += b.row(i);
        }
    }
    let mut sp = F2Vector::zero(n);
    for i in theta.positions_with(1) {
        if x.get(i) == 1 {
            sp += dual.row(i);
        }
    }
    CosetStateLabel::new(a, s, sp)
}

/// ‖ |A_{s,s′}⟩ − U_B|x⟩_θ ‖ for the translated label; zero (to numerical
/// precision) for every invertible B.
pub fn verify_translation(b: &F2Matrix, theta: &F2Vector, x: &F2Vector) -> Result<f64> {
    let label = translate_bb84_label(b, theta, x)?;
    let lhs = coset_state(&label)?;
    let u = basis_change_unitary(b)?;
    let rhs = bb84_state(&BB84Label::new(*x, *theta)?)?.apply(&u)?;
    Ok(lhs.distance(&rhs))
}

/// H^{⊗n}.
pub fn hadamard_all(n: usize) -> CMat {
    let h = 0.5f64.sqrt();
    let single = CMat::from_row_slice(
        2,
        2,
        &[
            Complex64::new(h, 0.0),
            Complex64::new(h, 0.0),
            Complex64::new(h, 0.0),
            Complex64::new(-h, 0.0),
        ],
    );
    let mut out = CMat::identity(1, 1);
    for _ in 0..n {
        out = out.kronecker(&single);
    }
    out
}

/// Max-entry magnitude of M − M†.
pub fn hermiticity_residual(m: &CMat) -> f64 {
    let diff = m - m.adjoint();
    diff.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Max-entry magnitude of M² − M.
pub fn projector_residual(m: &CMat) -> f64 {
    let diff = m * m - m;
    diff.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Max-entry magnitude of M − Id.
pub fn identity_residual(m: &CMat) -> f64 {
    let diff = m - CMat::identity(m.nrows(), m.ncols());
    diff.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::f2::enumerate_grassmannian;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::str::FromStr;

    fn v(s: &str) -> F2Vector {
        F2Vector::from_str(s).unwrap()
    }

    fn mat(s: &str) -> F2Matrix {
        F2Matrix::from_str(s).unwrap()
    }

    fn sub(s: &str) -> Subspace {
        Subspace::from_span(&mat(s))
    }

    const INV_SQRT2: f64 = std::f64::consts::FRAC_1_SQRT_2;

    #[test]
    fn coset_state_axis_example() {
        // A = span{10}, s = 01, s' = 00: (|01⟩+|11⟩)/√2.
        let st = coset_state(&CosetStateLabel::new(sub("10"), v("01"), v("00")).unwrap()).unwrap();
        assert!((st.amplitude(0b01).re - INV_SQRT2).abs() < 1e-12);
        assert!((st.amplitude(0b11).re - INV_SQRT2).abs() < 1e-12);
        assert_eq!(st.amplitude(0b00), ZERO_C);
        assert_eq!(st.amplitude(0b10), ZERO_C);
    }

    #[test]
    fn coset_state_phase_example() {
        // s' = 10 puts phase (−1)^{u·s'} = −1 on u = 10: (|01⟩−|11⟩)/√2.
        let st = coset_state(&CosetStateLabel::new(sub("10"), v("01"), v("10")).unwrap()).unwrap();
        assert!((st.amplitude(0b01).re - INV_SQRT2).abs() < 1e-12);
        assert!((st.amplitude(0b11).re + INV_SQRT2).abs() < 1e-12);
    }

    #[test]
    fn coset_states_normalized_up_to_n6() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for n in [2usize, 4, 6] {
            for _ in 0..20 {
                let a = crate::f2::sample_uniform_subspace(n, n / 2, &mut rng).unwrap();
                let s = F2Vector::from_index(n, rng.random_range(0..1 << n));
                let sp = F2Vector::from_index(n, rng.random_range(0..1 << n));
                let st = coset_state(&CosetStateLabel::new(a, s, sp).unwrap()).unwrap();
                assert!((st.norm() - 1.0).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn coset_measurement_family_is_orthonormal_and_complete() {
        for n in [2usize, 4] {
            for a in enumerate_grassmannian(n, n / 2).unwrap() {
                let fam = coset_measurement_family(&a).unwrap();
                assert_eq!(fam.len(), 1 << n);
                let mut sum = CMat::zeros(1 << n, 1 << n);
                for (i, si) in fam.states().iter().enumerate() {
                    for (j, sj) in fam.states().iter().enumerate() {
                        let g = si.inner(sj).norm();
                        let expect = if i == j { 1.0 } else { 0.0 };
                        assert!((g - expect).abs() < 1e-12, "gram[{i},{j}]={g}");
                    }
                    sum += si.projector();
                }
                assert!(identity_residual(&sum) < 1e-12, "completeness at n={n}");
            }
        }
    }

    #[test]
    fn bb84_standard_and_mixed_basis() {
        let st = bb84_state(&BB84Label::new(v("01"), v("00")).unwrap()).unwrap();
        assert_eq!(st.amplitude(0b01), ONE);

        // x=01, θ=10: |+⟩⊗|1⟩ = (|01⟩+|11⟩)/√2.
        let st = bb84_state(&BB84Label::new(v("01"), v("10")).unwrap()).unwrap();
        assert!((st.amplitude(0b01).re - INV_SQRT2).abs() < 1e-12);
        assert!((st.amplitude(0b11).re - INV_SQRT2).abs() < 1e-12);
        assert!((st.norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn bb84_equals_basis_aligned_coset_state() {
        // Identity basis: coset states of Span{e_i : θ_i = 1} with
        // s = x_T, s' = x_T̄ are exactly BB'84 states.
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let n = 4;
        for _ in 0..30 {
            let x = F2Vector::from_index(n, rng.random_range(0..16));
            let theta = F2Vector::from_index(n, rng.random_range(0..16));
            let label = translate_bb84_label(&F2Matrix::identity(n), &theta, &x).unwrap();
            let lhs = coset_state(&label).unwrap();
            let rhs = bb84_state(&BB84Label::new(x, theta).unwrap()).unwrap();
            assert!(lhs.distance(&rhs) < 1e-12);
        }
    }

    #[test]
    fn pauli_string_small_cases() {
        let id = pauli_string(&v("0"), &v("0")).unwrap();
        assert!(identity_residual(&id) < 1e-15);

        let x = pauli_string(&v("1"), &v("0")).unwrap();
        assert_eq!(x[(0, 1)], ONE);
        assert_eq!(x[(1, 0)], ONE);

        // (XZ)² = −Id.
        let xz = pauli_string(&v("1"), &v("1")).unwrap();
        let sq = &xz * &xz;
        assert!((sq[(0, 0)].re + 1.0).abs() < 1e-15);
        assert!((sq[(1, 1)].re + 1.0).abs() < 1e-15);
    }

    #[test]
    fn pauli_square_sign_is_s_dot_sp() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..20 {
            let n = 3;
            let s = F2Vector::from_index(n, rng.random_range(0..8));
            let sp = F2Vector::from_index(n, rng.random_range(0..8));
            let p = pauli_string(&s, &sp).unwrap();
            let sq = &p * &p;
            let sign = if s.dot(&sp) == 1 { -1.0 } else { 1.0 };
            let target = CMat::identity(8, 8) * Complex64::new(sign, 0.0);
            assert!((sq - target).iter().all(|z| z.norm() < 1e-12));
        }
    }

    #[test]
    fn basis_change_unitary_examples() {
        assert!(identity_residual(&basis_change_unitary(&F2Matrix::identity(2)).unwrap()) < 1e-15);

        // B = {u1=(1,1), u2=(0,1)}: |10⟩↦|11⟩, |11⟩↦|10⟩, fixes |00⟩,|01⟩.
        let u = basis_change_unitary(&mat("11,01")).unwrap();
        assert_eq!(u[(0b11, 0b10)], ONE);
        assert_eq!(u[(0b10, 0b11)], ONE);
        assert_eq!(u[(0b00, 0b00)], ONE);
        assert_eq!(u[(0b01, 0b01)], ONE);

        assert!(basis_change_unitary(&mat("10,10")).is_err());
    }

    #[test]
    fn basis_change_unitary_is_permutation_and_inverse_composes() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..10 {
            let b = F2Matrix::random_invertible(3, &mut rng);
            let u = basis_change_unitary(&b).unwrap();
            // Every column is a distinct standard basis vector.
            for c in 0..8 {
                assert_eq!(u.column(c).iter().filter(|z| z.norm() > 0.5).count(), 1);
            }
            let uinv = basis_change_unitary(&b.inverse().unwrap()).unwrap();
            assert!(identity_residual(&(&u * &uinv)) < 1e-15);
        }
    }

    #[test]
    fn coset_projector_examples() {
        let full = Subspace::full(2).coset_of(&v("00")).unwrap();
        assert!(identity_residual(&coset_subspace_projector(&full)) < 1e-15);

        // B = span{10}, t = 00: coset {00, 10} → diag(1,0,1,0).
        let c = sub("10").coset_of(&v("00")).unwrap();
        let p = coset_subspace_projector(&c);
        for (i, expect) in [1.0, 0.0, 1.0, 0.0].iter().enumerate() {
            assert_eq!(p[(i, i)].re, *expect);
        }
        assert!((p.trace().re - 2.0).abs() < 1e-15, "trace = 2^dim");
        assert!(projector_residual(&p) < 1e-15);
    }

    #[test]
    fn translation_identity_basis_is_exact() {
        for n in [2usize, 4] {
            for x in 0..1usize << n {
                for theta in 0..1usize << n {
                    let r = verify_translation(
                        &F2Matrix::identity(n),
                        &F2Vector::from_index(n, theta),
                        &F2Vector::from_index(n, x),
                    )
                    .unwrap();
                    assert!(r < 1e-12, "residual {r} at x={x}, theta={theta}");
                }
            }
        }
    }

    #[test]
    fn translation_specific_basis_example() {
        let r = verify_translation(&mat("11,01"), &v("10"), &v("11")).unwrap();
        assert!(r <= 1e-9, "residual {r}");
    }

    #[test]
    fn translation_random_bases_n4() {
        let mut rng = ChaCha8Rng::seed_from_u64(40);
        for _ in 0..100 {
            let b = F2Matrix::random_invertible(4, &mut rng);
            let x = F2Vector::from_index(4, rng.random_range(0..16));
            let theta = F2Vector::from_index(4, rng.random_range(0..16));
            let r = verify_translation(&b, &theta, &x).unwrap();
            assert!(r <= 1e-9, "residual {r} for B={b:?}, x={x}, theta={theta}");
        }
    }

    #[test]
    fn pauli_conjugation_by_basis_change() {
        // U_B X^x U_B† = X^{Σxᵢuᵢ} and U_B Z^{x'} U_B† = Z^{Σx'ᵢu^i}.
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for n in [2usize, 3, 4] {
            for _ in 0..10 {
                let b = F2Matrix::random_invertible(n, &mut rng);
                let u = basis_change_unitary(&b).unwrap();
                let dual = dual_basis(&b).unwrap();
                let x = F2Vector::from_index(n, rng.random_range(0..1 << n));
                let xp = F2Vector::from_index(n, rng.random_range(0..1 << n));

                let lhs_x = &u * pauli_string(&x, &F2Vector::zero(n)).unwrap() * u.adjoint();
                let t = b.combine_rows(&x).unwrap();
                let rhs_x = pauli_string(&t, &F2Vector::zero(n)).unwrap();
                assert!((lhs_x - rhs_x).iter().all(|z| z.norm() < 1e-9));

                let lhs_z = &u * pauli_string(&F2Vector::zero(n), &xp).unwrap() * u.adjoint();
                let tp = dual.combine_rows(&xp).unwrap();
                let rhs_z = pauli_string(&F2Vector::zero(n), &tp).unwrap();
                assert!((lhs_z - rhs_z).iter().all(|z| z.norm() < 1e-9));
            }
        }
    }

    #[test]
    fn hadamard_duality_exchanges_subspace_and_complement() {
        // H^{⊗n}|A_{s,s′}⟩ = ±|A^⊥_{s′,s}⟩, checked exhaustively at n=2.
        let h = hadamard_all(2);
        for a in enumerate_grassmannian(2, 1).unwrap() {
            for s in 0..4 {
                for sp in 0..4 {
                    let s = F2Vector::from_index(2, s);
                    let sp = F2Vector::from_index(2, sp);
                    let lhs = coset_state(&CosetStateLabel::new(a.clone(), s, sp).unwrap())
                        .unwrap()
                        .apply(&h)
                        .unwrap();
                    let rhs = coset_state(
                        &CosetStateLabel::new(a.orthogonal_complement(), sp, s).unwrap(),
                    )
                    .unwrap();
                    assert!((lhs.overlap_modulus(&rhs) - 1.0).abs() < 1e-9);
                }
            }
        }
    }

    #[test]
    fn state_guard_rejects_large_registers() {
        assert!(StateVector::basis_state(13, 0).is_err());
    }
}
