//! A small on-disk cache for counting results.
//!
//! One JSON file per cache directory, keyed by count descriptor; entries from
//! a different engine version are discarded. Counts are stored as decimal
//! strings.

use std::collections::BTreeMap;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};
use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::counting::CountResult;

/// Bumped when the counting engine changes observable behaviour.
pub const ENGINE_VERSION: &str = "posmon-dfs-uf/1";

/// Environment variable overriding the cache directory.
pub const CACHE_ENV: &str = "POSMON_CACHE";

const CACHE_FILE: &str = "counts.json";

#[derive(Serialize, Deserialize)]
struct CacheFile {
    engine: String,
    entries: BTreeMap<String, CacheEntry>,
}

#[derive(Clone, Serialize, Deserialize)]
struct CacheEntry {
    count: String,
    millis: u64,
    method: String,
}

/// In-memory view of one cache directory.
pub struct CountCache {
    path: PathBuf,
    entries: BTreeMap<String, CacheEntry>,
}

impl CountCache {
    /// The directory named by `POSMON_CACHE`, or `.posmon-cache` locally.
    pub fn default_dir() -> PathBuf {
        std::env::var_os(CACHE_ENV)
            .map(PathBuf::from)
            .unwrap_or_else(|| PathBuf::from(".posmon-cache"))
    }

    /// Loads the cache under `dir`, starting empty when the file is missing,
    /// unreadable, or written by another engine version.
    pub fn open(dir: &Path) -> CountCache {
        let path = dir.join(CACHE_FILE);
        let entries = fs::read_to_string(&path)
            .ok()
            .and_then(|text| serde_json::from_str::<CacheFile>(&text).ok())
            .filter(|file| file.engine == ENGINE_VERSION)
            .map(|file| file.entries)
            .unwrap_or_default();
        CountCache { path, entries }
    }

    pub fn get(&self, descriptor: &str) -> Option<CountResult> {
        let entry = self.entries.get(descriptor)?;
        let count: u64 = entry.count.parse().ok()?;
        Some(CountResult {
            descriptor: descriptor.to_owned(),
            count,
            elapsed: Duration::from_millis(entry.millis),
            method: format!("cache({})", entry.method),
        })
    }

    pub fn put(&mut self, result: &CountResult) {
        self.entries.insert(
            result.descriptor.clone(),
            CacheEntry {
                count: result.count.to_string(),
                millis: result.elapsed.as_millis() as u64,
                method: result.method.clone(),
            },
        );
    }

    /// Writes the cache file, creating the directory if needed.
    pub fn save(&self) -> io::Result<()> {
        if let Some(dir) = self.path.parent() {
            fs::create_dir_all(dir)?;
        }
        let file = CacheFile {
            engine: ENGINE_VERSION.to_owned(),
            entries: self.entries.clone(),
        };
        let tmp = self.path.with_extension("json.tmp");
        fs::write(&tmp, serde_json::to_string_pretty(&file).expect("serializable"))?;
        fs::rename(&tmp, &self.path)
    }
}
