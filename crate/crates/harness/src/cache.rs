//! On-disk cache of Betti tables keyed by canonical graph, characteristic
//! and order. Writes go through a temp file and a rename.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use belab_algebra::resolution::BettiTableJson;
use belab_algebra::MonOrder;
use serde::{Deserialize, Serialize};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheEntry {
    pub version: String,
    pub key: String,
    pub betti: BettiTableJson,
}

pub fn cache_key(canonical_hash: &str, p: u32, order: MonOrder) -> String {
    format!("{canonical_hash}-p{p}-{order}")
}

#[derive(Clone, Debug)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn open(dir: impl Into<PathBuf>) -> std::io::Result<Cache> {
        let dir = dir.into();
        fs::create_dir_all(&dir)?;
        Ok(Cache { dir })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.json"))
    }

    /// A hit only if the file parses, was written by this version, and
    /// carries the same key; anything else is logged and treated as a miss.
    pub fn get(&self, key: &str) -> Option<CacheEntry> {
        let path = self.path(key);
        let text = match fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return None,
            Err(e) => {
                log::warn!("cache read {}: {e}", path.display());
                return None;
            }
        };
        let entry: CacheEntry = match serde_json::from_str(&text) {
            Ok(e) => e,
            Err(e) => {
                log::warn!("corrupt cache entry {}: {e}", path.display());
                return None;
            }
        };
        if entry.version != TOOL_VERSION || entry.key != key {
            log::info!("stale cache entry {} (version {}, key {})", path.display(), entry.version, entry.key);
            return None;
        }
        Some(entry)
    }

    pub fn put(&self, entry: &CacheEntry) -> std::io::Result<()> {
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir)?;
        tmp.write_all(serde_json::to_string(entry).expect("entry serializes").as_bytes())?;
        tmp.flush()?;
        tmp.persist(self.path(&entry.key)).map_err(|e| e.error)?;
        Ok(())
    }
}
