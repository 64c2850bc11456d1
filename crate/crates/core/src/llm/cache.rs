use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Read, Seek, SeekFrom, Write};
use std::path::{Path, PathBuf};
use std::sync::Mutex;

use serde::{Deserialize, Serialize};

use super::ResponseRecord;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CacheKey {
    pub sample_id: String,
    pub endpoint: String,
    pub prompt_sha256: String,
    pub image_sha256: String,
}

struct Inner {
    file: File,
    entries: HashMap<CacheKey, ResponseRecord>,
}

/// Append-only JSONL response cache. Only successful records are served;
/// error records stay in the file as history.
pub struct ResponseCache {
    path: PathBuf,
    inner: Mutex<Inner>,
}

impl ResponseCache {
    /// Opens (or creates) the cache file. A torn final line, left by an
    /// interrupted write, is skipped.
    pub fn open(path: &Path) -> Result<Self> {
        if let Some(dir) = path.parent() {
            std::fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
        }
        let mut file = OpenOptions::new()
            .create(true)
            .read(true)
            .append(true)
            .open(path)
            .map_err(|e| Error::io(path, e))?;
        let mut entries = HashMap::new();
        let reader = BufReader::new(File::open(path).map_err(|e| Error::io(path, e))?);
        for (n, line) in reader.lines().enumerate() {
            let line = line.map_err(|e| Error::io(path, e))?;
            if line.trim().is_empty() {
                continue;
            }
            match serde_json::from_str::<ResponseRecord>(&line) {
                Ok(rec) if rec.error.is_none() => {
                    entries.insert(rec.key(), rec);
                }
                Ok(_) => {}
                Err(e) => log::warn!("{}:{}: skipping unreadable cache line: {e}", path.display(), n + 1),
            }
        }
        // Make sure the next append starts on a fresh line.
        let len = file.metadata().map_err(|e| Error::io(path, e))?.len();
        if len > 0 {
            let mut last = [0u8; 1];
            let mut f = File::open(path).map_err(|e| Error::io(path, e))?;
            f.seek(SeekFrom::Start(len - 1)).map_err(|e| Error::io(path, e))?;
            f.read_exact(&mut last).map_err(|e| Error::io(path, e))?;
            if last[0] != b'\n' {
                file.write_all(b"\n").map_err(|e| Error::io(path, e))?;
            }
        }
        Ok(Self {
            path: path.to_path_buf(),
            inner: Mutex::new(Inner { file, entries }),
        })
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    /// The cached record for `key`, marked as retrieved from cache.
    pub fn get(&self, key: &CacheKey) -> Option<ResponseRecord> {
        let inner = self.inner.lock().unwrap_or_else(|p| p.into_inner());
        inner.entries.get(key).map(|r| ResponseRecord {
            retrieved_from_cache: true,
            ..r.clone()
        })
    }

    /// Appends a record and flushes it before returning.
    pub fn put(&self, record: &ResponseRecord) -> Result<()> {
        let line = serde_json::to_string(record)?;
        let mut inner = self.inner.lock().unwrap_or_else(|p| p.into_inner());
        writeln!(inner.file, "{line}").map_err(|e| Error::io(&self.path, e))?;
        inner.file.flush().map_err(|e| Error::io(&self.path, e))?;
        if record.error.is_none() {
            inner.entries.insert(record.key(), record.clone());
        }
        Ok(())
    }

    /// Number of servable records.
    pub fn len(&self) -> usize {
        self.inner.lock().unwrap_or_else(|p| p.into_inner()).entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn record(id: &str, error: Option<&str>) -> ResponseRecord {
        ResponseRecord {
            sample_id: id.into(),
            endpoint: "e".into(),
            prompt_sha256: "p".into(),
            image_sha256: "i".into(),
            raw_text: if error.is_some() { String::new() } else { "[1]".into() },
            latency_ms: 3,
            prompt_tokens: None,
            completion_tokens: None,
            retrieved_from_cache: false,
            timestamp_ms: 1,
            error: error.map(str::to_string),
        }
    }

    #[test]
    fn persists_and_serves_successes_only() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("run/responses.jsonl");
        {
            let c = ResponseCache::open(&path).unwrap();
            c.put(&record("a", None)).unwrap();
            c.put(&record("b", Some("http 400"))).unwrap();
        }
        let c = ResponseCache::open(&path).unwrap();
        let hit = c.get(&record("a", None).key()).unwrap();
        assert!(hit.retrieved_from_cache);
        assert!(c.get(&record("b", None).key()).is_none());
        assert_eq!(std::fs::read_to_string(&path).unwrap().lines().count(), 2);
    }

    #[test]
    fn survives_a_torn_last_line() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("responses.jsonl");
        let good = serde_json::to_string(&record("a", None)).unwrap();
        std::fs::write(&path, format!("{good}\n{{\"sample_id\": \"b\", \"endp")).unwrap();
        let c = ResponseCache::open(&path).unwrap();
        assert_eq!(c.len(), 1);
        c.put(&record("c", None)).unwrap();
        drop(c);
        let c = ResponseCache::open(&path).unwrap();
        assert_eq!(c.len(), 2);
    }
}
