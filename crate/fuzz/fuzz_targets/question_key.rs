#![no_main]

//! Fuzz the question-key and complex-entry decoders used inside strategy
//! files: subspace hex keys, θ bitstrings, "re,im" pairs.

use libfuzzer_sys::fuzz_target;

use coset_monogamy::game::{
    decode_complex, decode_subspace_key, decode_theta_key, encode_subspace_key, encode_theta_key,
};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    for n in [2usize, 4, 6, 8] {
        if let Ok(a) = decode_subspace_key(n, text) {
            assert_eq!(
                decode_subspace_key(n, &encode_subspace_key(&a)).unwrap(),
                a,
                "subspace key roundtrip"
            );
        }
        if let Ok(theta) = decode_theta_key(n, text) {
            assert_eq!(decode_theta_key(n, &encode_theta_key(&theta)).unwrap(), theta);
        }
    }
    let _ = decode_complex(text);
});
