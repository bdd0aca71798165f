//! Loading integer matrices from JSON files.
//!
//! Entries are decimal strings rather than JSON numbers so values of any size
//! survive parsing exactly.

use std::path::Path;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::Deserialize;

#[derive(Deserialize)]
struct MatrixFile {
    m: usize,
    entries: Vec<Vec<String>>,
}

/// Reads `{"m": 3, "entries": [["1","2","3"], ...]}` into exact integer rows.
pub fn load(path: &Path) -> Result<Vec<Vec<BigInt>>, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let file: MatrixFile =
        serde_json::from_str(&text).map_err(|e| format!("malformed matrix file: {e}"))?;
    if file.entries.len() != file.m || file.entries.iter().any(|r| r.len() != file.m) {
        return Err(format!(
            "matrix file declares m = {} but entries are not {0}x{0}",
            file.m
        ));
    }
    file.entries
        .iter()
        .map(|row| {
            row.iter()
                .map(|cell| {
                    BigInt::from_str(cell.trim())
                        .map_err(|e| format!("entry {cell:?} is not an integer: {e}"))
                })
                .collect()
        })
        .collect()
}
