#![no_main]

use krylov_cli::values::{parse_scalar, parse_values, MAX_RANGE_POINTS};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let _ = parse_scalar(text);
    if let Ok(values) = parse_values(text) {
        assert!(!values.is_empty() && values.len() <= MAX_RANGE_POINTS);
        assert!(values.iter().all(|v| v.is_finite()));
    }
});
