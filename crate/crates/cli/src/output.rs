//! Output directory resolution and atomic file writes.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use tempfile::NamedTempFile;

use crate::error::{io_error, Result};
use crate::run::RunResult;

pub const OUT_DIR_ENV: &str = "KRYLOV_OUT_DIR";

/// `--out`, then `$KRYLOV_OUT_DIR`, then `./out`.
pub fn resolve_out_dir(flag: Option<&Path>) -> PathBuf {
    flag.map(Path::to_path_buf)
        .or_else(|| std::env::var_os(OUT_DIR_ENV).filter(|v| !v.is_empty()).map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from("out"))
}

/// Writes `contents` to `path` through a temporary file in the same directory,
/// so readers never see a partial file.
pub fn write_atomic(path: &Path, contents: &[u8]) -> Result<()> {
    let dir = path.parent().filter(|d| !d.as_os_str().is_empty()).unwrap_or(Path::new("."));
    fs::create_dir_all(dir).map_err(io_error(dir))?;
    let mut tmp = NamedTempFile::new_in(dir).map_err(io_error(dir))?;
    tmp.write_all(contents).map_err(io_error(path))?;
    tmp.as_file().sync_all().map_err(io_error(path))?;
    tmp.persist(path).map_err(|e| io_error(path)(e.error))?;
    Ok(())
}

pub fn render_json(value: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("JSON values serialize");
    s.push('\n');
    s
}

/// Writes one `<stem>.tsv` per seed and `report.json` into `dir`.
pub fn write_run(result: &RunResult, dir: &Path) -> Result<Vec<PathBuf>> {
    let mut written = Vec::new();
    for seed in &result.seeds {
        let path = dir.join(format!("{}.tsv", seed.stem));
        let text = seed.trace.render().expect("trace metadata and columns are sanitized");
        write_atomic(&path, text.as_bytes())?;
        written.push(path);
    }
    let report = dir.join("report.json");
    write_atomic(&report, render_json(&result.report()).as_bytes())?;
    written.push(report);
    Ok(written)
}
