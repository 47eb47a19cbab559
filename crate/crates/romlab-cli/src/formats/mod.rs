//! File formats: Matrix Market matrices, JSON system documents, CSV tables.

pub mod matrix_market;
pub mod sysdoc;

use std::path::Path;

use crate::error::{CliError, CliResult};

/// Writes a file atomically: temp file in the target directory, then rename.
pub fn write_atomic(path: &Path, contents: &[u8]) -> CliResult<()> {
    let dir = path.parent().unwrap_or_else(|| Path::new("."));
    std::fs::create_dir_all(dir)
        .map_err(|e| CliError::Output(format!("creating {}: {e}", dir.display())))?;
    let tmp = dir.join(format!(
        ".{}.tmp-{}",
        path.file_name()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| "out".into()),
        std::process::id()
    ));
    std::fs::write(&tmp, contents)
        .map_err(|e| CliError::Output(format!("writing {}: {e}", tmp.display())))?;
    std::fs::rename(&tmp, path)
        .map_err(|e| CliError::Output(format!("renaming to {}: {e}", path.display())))?;
    Ok(())
}
