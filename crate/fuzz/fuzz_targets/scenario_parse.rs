#![no_main]

use krylov_cli::scenario::parse_scenario;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(raw) = parse_scenario(text) {
        let _ = raw.digest();
        let _ = raw.validate("fuzz");
    }
});
