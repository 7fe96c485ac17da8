use std::fs;
use std::path::{Path, PathBuf};

use serde::Serialize;

use crate::error::{CliError, Result};
use crate::manifest::RunManifest;

/// Writes through a hidden sibling temp file and a rename, so an interrupted
/// run never leaves a truncated file at the destination.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<()> {
    let name = path.file_name().ok_or_else(|| {
        CliError::Usage(format!("output path {} has no file name", path.display()))
    })?;
    let tmp = path.with_file_name(format!(".{}.tmp", name.to_string_lossy()));
    fs::write(&tmp, bytes).map_err(|e| CliError::io(&tmp, e))?;
    fs::rename(&tmp, path).map_err(|e| CliError::io(path, e))?;
    Ok(())
}

/// Manifest location accompanying a CSV output: the full output name with
/// `.manifest.json` appended.
pub fn manifest_path(out: &Path) -> PathBuf {
    let name = out
        .file_name()
        .map(|n| n.to_string_lossy().into_owned())
        .unwrap_or_default();
    out.with_file_name(format!("{name}.manifest.json"))
}

pub fn to_json_pretty<T: Serialize>(value: &T) -> Result<String> {
    let mut text = serde_json::to_string_pretty(value)
        .map_err(|e| CliError::Data(format!("serializing report: {e}")))?;
    text.push('\n');
    Ok(text)
}

/// Writes a CSV output together with its accompanying manifest file.
pub fn write_csv_with_manifest<C: Serialize>(
    out: &Path,
    csv: &str,
    manifest: &RunManifest<'_, C>,
) -> Result<()> {
    write_atomic(out, csv.as_bytes())?;
    write_atomic(&manifest_path(out), to_json_pretty(manifest)?.as_bytes())
}

/// Emits a JSON report to the given file, or to standard output when no
/// path was requested.
pub fn emit_report(out: Option<&Path>, json: &str) -> Result<()> {
    match out {
        Some(path) => write_atomic(path, json.as_bytes()),
        None => {
            print!("{json}");
            Ok(())
        }
    }
}
