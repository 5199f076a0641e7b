//! Command-line front end for `krylov-core`: scenario files, runs, sweeps and
//! the trace format they produce.

pub mod bundled;
pub mod error;
pub mod output;
pub mod run;
pub mod scenario;
pub mod sweep;
pub mod trace;
pub mod values;

use std::path::Path;

pub use error::{CliError, Result};

use error::io_error;
use scenario::RawScenario;

/// Reads a scenario from a path, or from the bundled set when no such file
/// exists. Returns the raw scenario and the default name (the file stem).
pub fn read_scenario(arg: &str) -> Result<(RawScenario, String)> {
    let path = Path::new(arg);
    if !path.exists() {
        if let Some(b) = bundled::find(arg) {
            return Ok((scenario::parse_scenario(b.text)?, b.name.to_string()));
        }
    }
    let text = std::fs::read_to_string(path).map_err(io_error(path))?;
    let stem = path
        .file_stem()
        .and_then(|s| s.to_str())
        .map(scenario::file_stem)
        .unwrap_or_else(|| "scenario".into());
    Ok((scenario::parse_scenario(&text)?, stem))
}
