#![no_main]

//! Fuzz the bitstring vector/matrix parsers behind the `translate` CLI
//! inputs, plus the GF(2) operations reachable from parsed values.

use std::str::FromStr;

use libfuzzer_sys::fuzz_target;

use coset_monogamy::f2::{F2Matrix, F2Vector, Subspace};
use coset_monogamy::qstate::{translate_bb84_label, verify_translation};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(v) = F2Vector::from_str(text) {
        assert_eq!(F2Vector::from_str(&v.to_string()).unwrap(), v);
    }
    let Ok(m) = F2Matrix::from_str(text) else {
        return;
    };
    assert_eq!(F2Matrix::from_str(&m.to_string()).unwrap(), m);
    let r = m.rref();
    assert_eq!(r.rref(), r, "rref idempotent");
    let s = Subspace::from_span(&m);
    let _ = s.orthogonal_complement();

    // A square parsed matrix drives the full translation path.
    if m.is_square() && m.n_cols() <= 6 {
        let n = m.n_cols();
        let theta = F2Vector::from_index(n, ((1 << n) - 1) >> (n / 2));
        let x = F2Vector::zero(n);
        match translate_bb84_label(&m, &theta, &x) {
            Ok(_) => {
                let residual = verify_translation(&m, &theta, &x).expect("invertible basis");
                assert!(residual <= 1e-9);
            }
            Err(_) => {} // singular inputs are rejected, not panicked on
        }
    }
});
