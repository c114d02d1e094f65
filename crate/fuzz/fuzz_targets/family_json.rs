#![no_main]

//! Fuzz the permutation-family JSON importer; accepted families must
//! survive certification and roundtrip byte-stably.

use libfuzzer_sys::fuzz_target;

use coset_monogamy::permcover::{verify_family, PermutationFamily};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(family) = PermutationFamily::from_json(text) {
        // Certification may fail (the file need not be a valid family),
        // but it must never panic on a structurally valid one.
        let _ = verify_family(&family);
        let json = family.to_json();
        let again = PermutationFamily::from_json(&json).expect("roundtrip");
        assert_eq!(again, family);
    }
});
