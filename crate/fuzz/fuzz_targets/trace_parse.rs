#![no_main]

use krylov_cli::trace::TraceFile;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(trace) = TraceFile::parse(text) {
        if trace.rows.iter().flatten().all(|x| !x.is_nan()) {
            if let Ok(rendered) = trace.render() {
                assert_eq!(TraceFile::parse(&rendered).as_ref(), Ok(&trace));
            }
        }
    }
});
