//! Append-only JSON-lines store of computed invariants, keyed by closure.

use std::fs::{self, OpenOptions};
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InvariantRecord {
    pub canonical_key: String,
    pub strands: usize,
    pub writhe: i64,
    pub components: usize,
    pub homfly: Option<Value>,
    pub khovanov: Option<Value>,
    pub signature: Option<i64>,
    pub determinant: Option<i64>,
    pub created_unix: u64,
}

impl InvariantRecord {
    pub fn new(canonical_key: String, strands: usize, writhe: i64, components: usize) -> Self {
        let created_unix = SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0);
        Self {
            canonical_key,
            strands,
            writhe,
            components,
            homfly: None,
            khovanov: None,
            signature: None,
            determinant: None,
            created_unix,
        }
    }

    fn same_content(&self, other: &Self) -> bool {
        Self { created_unix: 0, ..self.clone() } == Self { created_unix: 0, ..other.clone() }
    }
}

pub struct Cache {
    file: PathBuf,
}

impl Cache {
    pub fn open(dir: &Path) -> std::io::Result<Self> {
        fs::create_dir_all(dir)?;
        Ok(Self { file: dir.join("invariants.jsonl") })
    }

    pub fn path(&self) -> &Path {
        &self.file
    }

    /// Every readable record in file order. Corrupted lines are skipped with a
    /// warning on stderr.
    pub fn records(&self) -> Vec<InvariantRecord> {
        let Ok(text) = fs::read_to_string(&self.file) else {
            return Vec::new();
        };
        text.lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty())
            .filter_map(|(k, l)| match serde_json::from_str(l) {
                Ok(r) => Some(r),
                Err(e) => {
                    eprintln!("warning: cache line {} skipped: {e}", k + 1);
                    None
                }
            })
            .collect()
    }

    /// The most recent record for `key`.
    pub fn load(&self, key: &str) -> Option<InvariantRecord> {
        self.records().into_iter().rev().find(|r| r.canonical_key == key)
    }

    /// Append unless the latest record for the key already has this content.
    pub fn store(&self, record: &InvariantRecord) -> std::io::Result<()> {
        if self.load(&record.canonical_key).is_some_and(|r| r.same_content(record)) {
            return Ok(());
        }
        let mut line = serde_json::to_string(record).expect("record serializes");
        line.push('\n');
        let mut f = OpenOptions::new().create(true).append(true).open(&self.file)?;
        f.write_all(line.as_bytes())
    }

    pub fn clear(&self) -> std::io::Result<()> {
        match fs::remove_file(&self.file) {
            Err(e) if e.kind() != std::io::ErrorKind::NotFound => Err(e),
            _ => Ok(()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample(key: &str) -> InvariantRecord {
        let mut r = InvariantRecord::new(key.into(), 2, 3, 1);
        r.signature = Some(2);
        r
    }

    #[test]
    fn round_trip_and_miss() {
        let dir = tempfile::tempdir().unwrap();
        let c = Cache::open(dir.path()).unwrap();
        assert!(c.load("n2d0").is_none());
        c.store(&sample("n2d3")).unwrap();
        assert!(c.load("n2d3").unwrap().same_content(&sample("n2d3")));
        assert!(c.load("n2d0").is_none());
    }

    #[test]
    fn dedupe_and_latest_wins() {
        let dir = tempfile::tempdir().unwrap();
        let c = Cache::open(dir.path()).unwrap();
        c.store(&sample("k")).unwrap();
        c.store(&sample("k")).unwrap();
        assert_eq!(c.records().len(), 1);
        let mut more = sample("k");
        more.determinant = Some(3);
        c.store(&more).unwrap();
        assert_eq!(c.records().len(), 2);
        assert_eq!(c.load("k").unwrap().determinant, Some(3));
    }

    #[test]
    fn corrupted_lines_are_skipped() {
        let dir = tempfile::tempdir().unwrap();
        let c = Cache::open(dir.path()).unwrap();
        c.store(&sample("a")).unwrap();
        let mut f = OpenOptions::new().append(true).open(c.path()).unwrap();
        writeln!(f, "{{not json").unwrap();
        c.store(&sample("b")).unwrap();
        assert_eq!(c.records().len(), 2);
        assert!(c.load("b").is_some());
        c.clear().unwrap();
        assert!(c.records().is_empty());
    }
}
