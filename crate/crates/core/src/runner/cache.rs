//! On-disk cache of whole-degree canonical bases.
//!
//! Entries are JSON files holding a version tag, the key, a SHA-256 checksum
//! of the payload text and the payload itself. Writes go to a temporary file
//! in the cache directory followed by a rename.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::canonical::{llt_canonical, CanonicalColumn};
use crate::error::Result;

pub const CACHE_ENV: &str = "FOCK_CANON_CACHE";
pub const VERSION_TAG: &str = concat!("fock-canon-", env!("CARGO_PKG_VERSION"), "-canonical-1");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheKey {
    pub e: usize,
    pub n: usize,
    pub kind: String,
}

impl CacheKey {
    pub fn canonical(e: usize, n: usize) -> Self {
        CacheKey { e, n, kind: "canonical".into() }
    }

    fn file_name(&self) -> String {
        format!("{}-e{}-n{}.json", self.kind, self.e, self.n)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheEntry {
    pub version: String,
    pub key: CacheKey,
    pub checksum: String,
    /// Serialized payload; the checksum is taken over these bytes.
    pub payload: String,
}

impl CacheEntry {
    pub fn new(key: CacheKey, payload: String) -> Self {
        CacheEntry { version: VERSION_TAG.into(), checksum: checksum(&payload), key, payload }
    }

    pub fn is_valid_for(&self, key: &CacheKey, version: &str) -> bool {
        self.version == version && &self.key == key && self.checksum == checksum(&self.payload)
    }
}

pub fn checksum(payload: &str) -> String {
    hex::encode(Sha256::digest(payload.as_bytes()))
}

/// `$FOCK_CANON_CACHE`, else `$XDG_DATA_HOME/fock-canon`, else
/// `~/.local/share/fock-canon`.
pub fn default_cache_dir() -> Option<PathBuf> {
    if let Some(dir) = std::env::var_os(CACHE_ENV).filter(|d| !d.is_empty()) {
        return Some(PathBuf::from(dir));
    }
    if let Some(dir) = std::env::var_os("XDG_DATA_HOME").filter(|d| !d.is_empty()) {
        return Some(PathBuf::from(dir).join("fock-canon"));
    }
    std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".local/share/fock-canon"))
}

#[derive(Clone, Debug)]
pub struct Cache {
    dir: Option<PathBuf>,
    version: String,
}

impl Cache {
    pub fn new(dir: Option<PathBuf>) -> Self {
        Cache { dir, version: VERSION_TAG.into() }
    }

    /// A cache that never touches the disk.
    pub fn disabled() -> Self {
        Cache::new(None)
    }

    /// Override the version tag, invalidating entries written under another.
    pub fn with_version(mut self, version: impl Into<String>) -> Self {
        self.version = version.into();
        self
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    pub fn path_for(&self, key: &CacheKey) -> Option<PathBuf> {
        self.dir.as_ref().map(|d| d.join(key.file_name()))
    }

    /// The stored payload, or `None` when absent, stale or corrupt.
    pub fn load(&self, key: &CacheKey) -> Option<String> {
        let path = self.path_for(key)?;
        let text = fs::read_to_string(&path).ok()?;
        match serde_json::from_str::<CacheEntry>(&text) {
            Ok(entry) if entry.is_valid_for(key, &self.version) => Some(entry.payload),
            Ok(_) => {
                log::info!("discarding stale or corrupt cache entry {}", path.display());
                None
            }
            Err(err) => {
                log::warn!("discarding unreadable cache entry {}: {err}", path.display());
                None
            }
        }
    }

    /// Write atomically. Failures are logged and otherwise ignored.
    pub fn store(&self, key: &CacheKey, payload: &str) -> Option<PathBuf> {
        let path = self.path_for(key)?;
        let mut entry = CacheEntry::new(key.clone(), payload.to_owned());
        entry.version = self.version.clone();
        match write_atomic(&path, &entry) {
            Ok(()) => Some(path),
            Err(err) => {
                log::warn!("cache disabled for {}: {err}", path.display());
                None
            }
        }
    }

    /// All columns of degree `n`, from the cache when possible.
    pub fn canonical(&self, n: usize, e: usize) -> Result<Vec<CanonicalColumn>> {
        let key = CacheKey::canonical(e, n);
        if let Some(payload) = self.load(&key) {
            match serde_json::from_str(&payload) {
                Ok(cols) => {
                    log::debug!("canonical basis e={e} n={n} read from cache");
                    return Ok(cols);
                }
                Err(err) => log::warn!("recomputing canonical basis e={e} n={n}: {err}"),
            }
        }
        let cols = llt_canonical(n, e)?;
        let payload = serde_json::to_string(&cols)?;
        self.store(&key, &payload);
        Ok(cols)
    }
}

fn write_atomic(path: &Path, entry: &CacheEntry) -> std::io::Result<()> {
    let dir = path.parent().unwrap_or(Path::new("."));
    fs::create_dir_all(dir)?;
    let tmp = dir.join(format!(
        ".{}.{}.tmp",
        path.file_name().and_then(|f| f.to_str()).unwrap_or("entry"),
        std::process::id()
    ));
    let text = serde_json::to_string(entry).map_err(std::io::Error::other)?;
    fs::write(&tmp, text)?;
    fs::rename(&tmp, path).inspect_err(|_| {
        let _ = fs::remove_file(&tmp);
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_is_byte_identical() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::new(Some(dir.path().to_path_buf()));
        let first = cache.canonical(8, 2).unwrap();
        let key = CacheKey::canonical(2, 8);
        let stored = cache.load(&key).unwrap();
        assert_eq!(stored, serde_json::to_string(&first).unwrap());
        assert_eq!(cache.canonical(8, 2).unwrap(), first);
    }

    #[test]
    fn corrupt_entry_is_recomputed() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::new(Some(dir.path().to_path_buf()));
        let key = CacheKey::canonical(2, 5);
        let good = cache.canonical(5, 2).unwrap();
        let path = cache.path_for(&key).unwrap();
        let text = fs::read_to_string(&path).unwrap().replace("\\\"e\\\":2", "\\\"e\\\":3");
        fs::write(&path, text).unwrap();
        assert!(cache.load(&key).is_none());
        assert_eq!(cache.canonical(5, 2).unwrap(), good);
        fs::write(&path, "not json").unwrap();
        assert!(cache.load(&key).is_none());
        assert_eq!(cache.canonical(5, 2).unwrap(), good);
        assert!(cache.load(&key).is_some());
    }

    #[test]
    fn version_bump_invalidates() {
        let dir = tempfile::tempdir().unwrap();
        let old = Cache::new(Some(dir.path().to_path_buf()));
        old.canonical(4, 3).unwrap();
        let new = Cache::new(Some(dir.path().to_path_buf())).with_version("other");
        assert!(new.load(&CacheKey::canonical(3, 4)).is_none());
        assert!(old.load(&CacheKey::canonical(3, 4)).is_some());
    }

    #[test]
    fn unwritable_directory_still_computes() {
        let dir = tempfile::tempdir().unwrap();
        let blocker = dir.path().join("file");
        fs::write(&blocker, "x").unwrap();
        let cache = Cache::new(Some(blocker.join("sub")));
        assert_eq!(cache.canonical(4, 2).unwrap(), llt_canonical(4, 2).unwrap());
    }
}
