#![no_main]

use grover_phase::cli::parse_qubit_range;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &str| {
    if let Ok(r) = parse_qubit_range(data) {
        assert!(r.start() <= r.end());
    }
});
