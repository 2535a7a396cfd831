//! Append-only JSON-lines result store keyed by query fingerprints.
//!
//! Writers only ever append whole lines, so repeated or interrupted runs
//! never damage earlier results; rereads merge duplicates with the last
//! line winning. The store location comes from an explicit flag when
//! given, else the PEBBLE_CACHE environment variable.

use std::collections::HashMap;
use std::fs::OpenOptions;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numbers::{NumberResult, Quantifier, Value};

/// One stored result line.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CacheEntry {
    pub fingerprint: String,
    pub quantifier: Quantifier,
    pub value: Value,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub failing_witness: Option<Vec<u64>>,
}

impl CacheEntry {
    pub fn from_result(r: &NumberResult) -> CacheEntry {
        CacheEntry {
            fingerprint: r.fingerprint.clone(),
            quantifier: r.quantifier,
            value: r.value,
            failing_witness: r.witness_failure.as_ref().map(|d| d.counts().to_vec()),
        }
    }
}

/// The merged view of one store file plus an append handle on demand.
pub struct Cache {
    path: PathBuf,
    entries: HashMap<String, CacheEntry>,
}

impl Cache {
    /// Loads the store at `path`, creating nothing yet if it is absent.
    /// Malformed lines are an error: this file is machine-written, so
    /// damage means something is wrong enough to surface.
    pub fn open(path: &Path) -> Result<Cache> {
        let mut entries = HashMap::new();
        match std::fs::read_to_string(path) {
            Ok(text) => {
                for (idx, line) in text.lines().enumerate() {
                    if line.trim().is_empty() {
                        continue;
                    }
                    let entry: CacheEntry = serde_json::from_str(line).map_err(|e| {
                        Error::InvalidInput(format!(
                            "cache line {} of {} is malformed: {e}",
                            idx + 1,
                            path.display()
                        ))
                    })?;
                    entries.insert(entry.fingerprint.clone(), entry);
                }
            }
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => {}
            Err(e) => return Err(e.into()),
        }
        Ok(Cache { path: path.to_path_buf(), entries })
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, fingerprint: &str) -> Option<&CacheEntry> {
        self.entries.get(fingerprint)
    }

    /// Appends the entry to the file and the merged view. Recording an
    /// entry identical to the stored one is a no-op; a different entry
    /// under the same fingerprint appends and wins, like any later line.
    pub fn record(&mut self, entry: CacheEntry) -> Result<()> {
        if self.entries.get(&entry.fingerprint) == Some(&entry) {
            return Ok(());
        }
        let mut file = OpenOptions::new().create(true).append(true).open(&self.path)?;
        let mut line = serde_json::to_string(&entry)?;
        line.push('\n');
        file.write_all(line.as_bytes())?;
        self.entries.insert(entry.fingerprint.clone(), entry);
        Ok(())
    }
}

/// Store location precedence: explicit flag, then PEBBLE_CACHE, then none.
pub fn resolve_cache_path(flag: Option<&Path>) -> Option<PathBuf> {
    flag.map(Path::to_path_buf)
        .or_else(|| std::env::var_os("PEBBLE_CACHE").map(PathBuf::from))
}
