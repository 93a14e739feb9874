#![no_main]

use grover_phase::cli::parse_marked_list;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &str| {
    if let Ok(v) = parse_marked_list(data) {
        assert!(!v.is_empty());
    }
});
