#![no_main]

use grover_phase::cli::TableDocument;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &str| {
    if let Ok(doc) = TableDocument::from_json(data) {
        assert!(doc.rows.iter().all(|r| r.is_object()));
        let _ = doc.column_f64("probability");
    }
});
