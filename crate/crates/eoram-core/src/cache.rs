//! On-disk memoization of copy hypergraphs.
//!
//! Copy enumeration for a fixed (host, target) pair is pure, so results can
//! be keyed by a stable textual description of the pair and reused across
//! runs. A cache directory is only ever supplied explicitly (the CLI wires it
//! to the `EORAM_CACHE_DIR` environment variable); the library never touches
//! the filesystem on its own.

use crate::error::Result;
use sha2::{Digest, Sha256};
use std::fs;
use std::path::Path;

/// Stable digest of an ordered list of description strings.
pub fn cache_key(parts: &[String]) -> String {
    let mut hasher = Sha256::new();
    for p in parts {
        hasher.update(p.as_bytes());
        hasher.update([0u8]);
    }
    hex::encode(hasher.finalize())
}

/// Returns the memoized copy list for `key`, computing and persisting it on a
/// miss. Unreadable or corrupt cache entries are treated as misses and
/// overwritten.
pub fn memoized_copies(
    dir: Option<&Path>,
    key: &str,
    compute: impl FnOnce() -> Result<Vec<Vec<usize>>>,
) -> Result<Vec<Vec<usize>>> {
    let Some(dir) = dir else { return compute() };
    let path = dir.join(format!("copies-{key}.json"));
    if let Ok(bytes) = fs::read(&path) {
        if let Ok(copies) = serde_json::from_slice::<Vec<Vec<usize>>>(&bytes) {
            return Ok(copies);
        }
    }
    let copies = compute()?;
    fs::create_dir_all(dir)?;
    fs::write(&path, serde_json::to_vec(&copies)?)?;
    Ok(copies)
}
