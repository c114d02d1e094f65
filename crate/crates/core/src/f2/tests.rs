use super::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::HashSet;
use std::str::FromStr;

fn mat(s: &str) -> F2Matrix {
    F2Matrix::from_str(s).unwrap()
}

fn vec2(s: &str) -> F2Vector {
    F2Vector::from_str(s).unwrap()
}

/// Independent count of k-dim subspaces of F₂ⁿ: ordered independent
/// k-tuples divided by ordered bases per subspace.
fn gaussian_binomial(n: usize, k: usize) -> u128 {
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..k {
        num *= (1u128 << n) - (1u128 << i);
        den *= (1u128 << k) - (1u128 << i);
    }
    num / den
}

#[test]
fn rref_invertible_two_by_two_reduces_to_identity() {
    assert_eq!(mat("11,01").rref(), F2Matrix::identity(2));
}

#[test]
fn rref_drops_duplicate_rows() {
    assert_eq!(mat("10,10").rref(), mat("10"));
}

#[test]
fn rref_is_idempotent_on_random_matrices() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..100 {
        let m = F2Matrix::random(4, 8, &mut rng);
        let r = m.rref();
        assert_eq!(r.rref(), r);
        // Same row space: every original row reduces to zero against it.
        let s = Subspace::from_span(&m);
        for row in m.rows() {
            assert!(s.contains(row));
        }
        assert_eq!(s.basis(), &r);
    }
}

#[test]
fn complement_of_coordinate_axis() {
    let a = Subspace::from_span(&mat("10"));
    assert_eq!(a.orthogonal_complement(), Subspace::from_span(&mat("01")));
}

#[test]
fn complement_of_diagonal_is_self_dual() {
    let a = Subspace::from_span(&mat("11"));
    assert_eq!(a.orthogonal_complement(), a);
}

#[test]
fn complement_is_involution_with_dim_sum_n() {
    for n in 1..=6 {
        for k in 0..=n {
            for a in enumerate_grassmannian(n, k).unwrap() {
                let perp = a.orthogonal_complement();
                assert_eq!(a.dim() + perp.dim(), n);
                assert_eq!(perp.orthogonal_complement(), a);
                // Every pair of basis vectors is orthogonal.
                for u in a.basis().rows() {
                    for v in perp.basis().rows() {
                        assert_eq!(u.dot(v), 0);
                    }
                }
            }
        }
    }
}

#[test]
fn coset_representatives_examples() {
    let axis = Subspace::from_span(&mat("10"));
    assert_eq!(axis.coset_representatives().unwrap(), vec![vec2("00"), vec2("01")]);

    let full = Subspace::full(2);
    assert_eq!(full.coset_representatives().unwrap(), vec![vec2("00")]);

    // span{11}: cosets {00,11} and {01,10}, minima 00 and 01.
    let diag = Subspace::from_span(&mat("11"));
    assert_eq!(diag.coset_representatives().unwrap(), vec![vec2("00"), vec2("01")]);
}

#[test]
fn coset_representatives_partition_the_space() {
    for n in [2usize, 4, 6] {
        for k in 0..=n {
            for a in enumerate_grassmannian(n, k).unwrap() {
                let reps = a.coset_representatives().unwrap();
                assert_eq!(reps.len(), 1 << (n - k));
                let mut seen = vec![false; 1 << n];
                for rep in &reps {
                    assert_eq!(a.reduce(rep), *rep, "rep must be canonical");
                    for e in a.coset_of(rep).unwrap().elements() {
                        assert!(!seen[e.index()], "cosets overlap");
                        seen[e.index()] = true;
                    }
                }
                assert!(seen.iter().all(|&b| b), "cosets must cover F2^n");
            }
        }
    }
}

#[test]
fn coset_representatives_partition_at_n8_half_dim() {
    for a in enumerate_grassmannian(8, 4).unwrap() {
        let reps = a.coset_representatives().unwrap();
        let mut seen = [0u64; 4];
        let base: Vec<F2Vector> = a.elements();
        for rep in &reps {
            for u in &base {
                let idx = (*u + *rep).index();
                assert_eq!(seen[idx / 64] >> (idx % 64) & 1, 0, "cosets overlap");
                seen[idx / 64] |= 1 << (idx % 64);
            }
        }
        assert_eq!(seen, [u64::MAX; 4], "256 elements covered");
    }
}

#[test]
fn grassmannian_counts_match_gaussian_binomials() {
    assert_eq!(enumerate_grassmannian(2, 1).unwrap().len(), 3);
    assert_eq!(enumerate_grassmannian(4, 2).unwrap().len(), 35);
    for n in 0..=6 {
        for k in 0..=n {
            let subs = enumerate_grassmannian(n, k).unwrap();
            assert_eq!(subs.len() as u128, gaussian_binomial(n, k), "G({k},{n})");
            let distinct: HashSet<_> = subs.iter().cloned().collect();
            assert_eq!(distinct.len(), subs.len(), "duplicates in G({k},{n})");
        }
    }
}

#[test]
fn grassmannian_zero_dim_is_zero_space() {
    let subs = enumerate_grassmannian(5, 0).unwrap();
    assert_eq!(subs, vec![Subspace::zero(5)]);
}

#[test]
fn grassmannian_two_one_explicit() {
    let subs: HashSet<_> = enumerate_grassmannian(2, 1).unwrap().into_iter().collect();
    let expect: HashSet<_> = ["01", "10", "11"]
        .iter()
        .map(|s| Subspace::from_span(&mat(s)))
        .collect();
    assert_eq!(subs, expect);
}

#[test]
fn uniform_subspace_sampling_is_unbiased() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let all = enumerate_grassmannian(2, 1).unwrap();
    let mut counts = [0usize; 3];
    let trials = 3000;
    for _ in 0..trials {
        let s = sample_uniform_subspace(2, 1, &mut rng).unwrap();
        let idx = all.iter().position(|a| *a == s).unwrap();
        counts[idx] += 1;
    }
    for c in counts {
        let freq = c as f64 / trials as f64;
        assert!((freq - 1.0 / 3.0).abs() < 0.03, "frequency {freq} off uniform");
    }
}

#[test]
fn uniform_subspace_sampling_guards_and_membership() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    assert_eq!(sample_uniform_subspace(5, 5, &mut rng).unwrap(), Subspace::full(5));
    let all = enumerate_grassmannian(4, 2).unwrap();
    for _ in 0..20 {
        let s = sample_uniform_subspace(4, 2, &mut rng).unwrap();
        assert!(all.contains(&s));
    }
    // Large-ambient path (rejection sampling) produces the right dimension.
    let s = sample_uniform_subspace(12, 6, &mut rng).unwrap();
    assert_eq!(s.dim(), 6);
    assert_eq!(s.ambient(), 12);
}

#[test]
fn dual_basis_examples() {
    assert_eq!(dual_basis(&F2Matrix::identity(4)).unwrap(), F2Matrix::identity(4));

    // {u1=(1,1), u2=(0,1)} has dual {(1,0), (1,1)}: all four dot products
    // checked below.
    let b = mat("11,01");
    let d = dual_basis(&b).unwrap();
    assert_eq!(d, mat("10,11"));
    for i in 0..2 {
        for j in 0..2 {
            let expect = u8::from(i == j);
            assert_eq!(d.row(i).dot(&b.row(j)), expect);
        }
    }
}

#[test]
fn dual_basis_is_involution() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..100 {
        let b = F2Matrix::random_invertible(8, &mut rng);
        let d = dual_basis(&b).unwrap();
        assert_eq!(dual_basis(&d).unwrap(), b);
        for i in 0..8 {
            for j in 0..8 {
                assert_eq!(d.row(i).dot(&b.row(j)), u8::from(i == j));
            }
        }
    }
}

#[test]
fn dual_basis_rejects_singular() {
    assert!(dual_basis(&mat("10,10")).is_err());
}

#[test]
fn intersection_dim_matches_elementwise_oracle() {
    let subs = enumerate_grassmannian(4, 2).unwrap();
    for a in &subs {
        assert_eq!(intersection_dim(a, a).unwrap(), a.dim());
        for b in &subs {
            let ea: HashSet<_> = a.elements().into_iter().collect();
            let eb: HashSet<_> = b.elements().into_iter().collect();
            let common = ea.intersection(&eb).count();
            assert!(common.is_power_of_two());
            let expect = common.trailing_zeros() as usize;
            assert_eq!(intersection_dim(a, b).unwrap(), expect);
        }
    }
}

#[test]
fn intersection_dim_axes() {
    let a = Subspace::from_span(&mat("10"));
    let b = Subspace::from_span(&mat("01"));
    assert_eq!(intersection_dim(&a, &b).unwrap(), 0);
    let c = Subspace::full(3);
    assert!(intersection_dim(&a, &c).is_err(), "ambient mismatch");
}

#[test]
fn enumerate_invertible_two_by_two_has_six_elements() {
    let all = enumerate_invertible(2).unwrap();
    assert_eq!(all.len(), 6);
    for m in &all {
        assert!(m.is_invertible());
    }
}

#[test]
fn coset_membership_and_canonical_rep() {
    let a = Subspace::from_span(&mat("1100,0011"));
    let c = a.coset_of(&vec2("0111")).unwrap();
    assert!(c.contains(&vec2("0111")));
    assert!(c.contains(&(vec2("0111") + vec2("1100"))));
    assert!(!c.contains(&vec2("0000")));
    // Canonical rep is the lexicographic minimum of the coset.
    let min = c.elements().into_iter().min().unwrap();
    assert_eq!(c.rep(), min);
}

#[test]
fn vector_parse_display_roundtrip_and_errors() {
    let v = vec2("01101");
    assert_eq!(v.to_string(), "01101");
    assert_eq!(v.index(), 0b01101);
    assert_eq!(v.weight(), 3);
    assert!(F2Vector::from_str("01x").is_err());
    assert!(F2Vector::from_str("").is_err());
    assert!(F2Matrix::from_str("11,0").is_err(), "ragged rows rejected");
}

mod properties {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn rref_preserves_row_space_and_is_idempotent(seed in any::<u64>()) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let m = F2Matrix::random(3, 6, &mut rng);
            let r = m.rref();
            prop_assert_eq!(r.rref(), r.clone());
            let s = Subspace::from_span(&m);
            for row in r.rows() {
                prop_assert!(s.contains(row));
            }
        }

        #[test]
        fn reduce_is_constant_on_cosets(seed in any::<u64>()) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let s = sample_uniform_subspace(6, 3, &mut rng).unwrap();
            let v = F2Vector::from_index(6, rng.random_range(0..64));
            let canon = s.reduce(&v);
            for u in s.elements() {
                prop_assert_eq!(s.reduce(&(v + u)), canon);
            }
        }
    }
}
