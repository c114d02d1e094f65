#![no_main]

//! Fuzz the strategy JSON importer: arbitrary bytes must either fail
//! cleanly or produce a strategy that survives validation checks and a
//! byte-stable re-serialization.

use libfuzzer_sys::fuzz_target;

use coset_monogamy::game::{strategy_from_json, strategy_to_json};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(strategy) = strategy_from_json(text) {
        // Structural validity is guaranteed; numeric validation may still
        // reject, but must not panic.
        let _ = strategy.validate(1e-9);
        let json = strategy_to_json(&strategy).expect("serializing a parsed strategy");
        let again = strategy_from_json(&json).expect("roundtrip of produced JSON");
        assert_eq!(strategy_to_json(&again).unwrap(), json);
    }
});
