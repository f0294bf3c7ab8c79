//! Optional on-disk cache for enumerations, enabled by `IRREP_CACHE_DIR`.

use std::path::PathBuf;

use serde_json::Value;
use sha2::{Digest, Sha256};

pub const CACHE_ENV: &str = "IRREP_CACHE_DIR";

fn entry_path(key: &str) -> Option<PathBuf> {
    let dir = std::env::var_os(CACHE_ENV)?;
    let digest = Sha256::digest(key.as_bytes());
    Some(PathBuf::from(dir).join(format!("{}.json", hex::encode(digest))))
}

/// Returns the cached value for `key`, or computes and stores it.
pub fn cached<E>(key: &str, compute: impl FnOnce() -> Result<Value, E>) -> Result<Value, E> {
    let Some(path) = entry_path(key) else {
        return compute();
    };
    if let Some(value) = std::fs::read_to_string(&path).ok().and_then(|s| serde_json::from_str(&s).ok()) {
        log::debug!("cache hit for {key} at {}", path.display());
        return Ok(value);
    }
    let value = compute()?;
    let stored = path
        .parent()
        .map_or(Ok(()), std::fs::create_dir_all)
        .and_then(|_| std::fs::write(&path, value.to_string()));
    if let Err(e) = stored {
        log::warn!("could not write cache entry {}: {e}", path.display());
    }
    Ok(value)
}
