use std::collections::BTreeMap;
use std::fs::{self, OpenOptions};
use std::io::Write;
use std::path::{Path, PathBuf};

use hdecomp_core::extremal::{extremal_number, ExtremalRecord, Status};
use hdecomp_core::family::minimal_decomposition_family;
use hdecomp_core::graph6::{emit_graph6, parse_graph6};
use hdecomp_core::pipeline::BiexSource;
use hdecomp_core::{Caps, Graph, GraphFamily};
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

pub const CACHE_ENV: &str = "HDECOMP_CACHE";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheEntry {
    pub n: usize,
    pub family_key: String,
    pub value: usize,
    pub witness_graph6: String,
    pub status: Status,
}

/// Extremal numbers keyed by `(n, family key)`, optionally backed by an
/// append-only JSON-lines file. Only exact entries are reused; a cached
/// witness is re-checked against the family before it is trusted.
#[derive(Debug, Default)]
pub struct ExtremalCache {
    path: Option<PathBuf>,
    entries: BTreeMap<(usize, String), CacheEntry>,
    /// Lookups answered from the cache.
    pub hits: usize,
}

/// `HDECOMP_CACHE` if set, else `explicit`.
pub fn cache_path(explicit: Option<PathBuf>) -> Option<PathBuf> {
    match std::env::var_os(CACHE_ENV) {
        Some(p) if !p.is_empty() => Some(PathBuf::from(p)),
        _ => explicit,
    }
}

impl ExtremalCache {
    pub fn in_memory() -> Self {
        Self::default()
    }

    /// Loads `path` if it exists. A final line without a newline (an
    /// interrupted append) is ignored; any other malformed line is an error.
    pub fn open(path: &Path) -> Result<Self> {
        let mut cache = ExtremalCache { path: Some(path.to_owned()), ..Self::default() };
        let text = match fs::read_to_string(path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(cache),
            Err(e) => return Err(Error::io(path, e)),
        };
        let complete = text.rfind('\n').map_or("", |i| &text[..=i]);
        for (i, line) in complete.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let entry: CacheEntry =
                serde_json::from_str(line).map_err(|e| Error::format(path, i + 1, e.to_string()))?;
            cache.keep(entry);
        }
        Ok(cache)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    fn keep(&mut self, entry: CacheEntry) {
        let key = (entry.n, entry.family_key.clone());
        let better = match self.entries.get(&key) {
            None => true,
            Some(old) => old.status != Status::Exact && (entry.status == Status::Exact || entry.value > old.value),
        };
        if better {
            self.entries.insert(key, entry);
        }
    }

    pub fn get(&self, n: usize, family_key: &str) -> Option<&CacheEntry> {
        self.entries.get(&(n, family_key.to_owned()))
    }

    fn append(&mut self, entry: CacheEntry) -> Result<()> {
        if let Some(path) = &self.path {
            let mut line = serde_json::to_string(&entry)?;
            line.push('\n');
            let mut f = OpenOptions::new()
                .create(true)
                .append(true)
                .open(path)
                .map_err(|e| Error::io(path, e))?;
            f.write_all(line.as_bytes()).map_err(|e| Error::io(path, e))?;
        }
        // A fresh computation outranks whatever was loaded.
        self.entries.insert((entry.n, entry.family_key.clone()), entry);
        Ok(())
    }

    /// `ex(n, family)`, from the cache when an exact entry with a valid
    /// witness is present.
    pub fn extremal(&mut self, n: usize, family: &GraphFamily, budget: u64, caps: &Caps) -> Result<ExtremalRecord> {
        let key = family.key();
        if let Some(rec) = self.get(n, &key).and_then(|e| usable(e, family)) {
            self.hits += 1;
            return Ok(rec);
        }
        let rec = extremal_number(n, family, budget, caps)?;
        let known = self.get(n, &key).map(|e| (e.status, e.value));
        if known != Some((rec.status, rec.value)) {
            self.append(CacheEntry {
                n,
                family_key: key,
                value: rec.value,
                witness_graph6: emit_graph6(&rec.witness),
                status: rec.status,
            })?;
        }
        Ok(rec)
    }

    pub fn biex_of(&mut self, n: usize, h: &Graph, budget: u64, caps: &Caps) -> Result<ExtremalRecord> {
        let fstar = minimal_decomposition_family(h, caps)?;
        self.extremal(n, &fstar, budget, caps)
    }
}

fn usable(e: &CacheEntry, family: &GraphFamily) -> Option<ExtremalRecord> {
    if e.status != Status::Exact {
        return None;
    }
    let witness = parse_graph6(&e.witness_graph6).ok()?;
    if witness.order() != e.n || witness.size() != e.value || family.hits(&witness) {
        return None;
    }
    Some(ExtremalRecord {
        n: e.n,
        family_key: e.family_key.clone(),
        value: e.value,
        witness,
        status: Status::Exact,
        nodes: 0,
        ignored_members: family.graphs().filter(|m| m.order() > e.n).count(),
    })
}

impl BiexSource for ExtremalCache {
    fn biex(&mut self, n: usize, h: &Graph, budget: u64, caps: &Caps) -> hdecomp_core::Result<ExtremalRecord> {
        self.biex_of(n, h, budget, caps).map_err(|e| match e {
            Error::Core(c) => c,
            other => hdecomp_core::Error::Domain(other.to_string()),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use hdecomp_core::generate::complete_multipartite;

    #[test]
    fn entries_persist_and_are_reused() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("cache.jsonl");
        let caps = Caps::default();
        let h = complete_multipartite(&[2, 2, 2]);
        let mut c = ExtremalCache::open(&path).unwrap();
        assert_eq!(c.biex_of(6, &h, u64::MAX, &caps).unwrap().value, 7);
        assert_eq!(c.hits, 0);
        let mut again = ExtremalCache::open(&path).unwrap();
        assert_eq!(again.len(), 1);
        let rec = again.biex_of(6, &h, u64::MAX, &caps).unwrap();
        assert_eq!((rec.value, again.hits), (7, 1));
        assert_eq!(fs::read_to_string(&path).unwrap().lines().count(), 1);
    }

    #[test]
    fn forged_witness_is_ignored() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("cache.jsonl");
        let caps = Caps::default();
        let h = complete_multipartite(&[2, 2, 2]);
        let key = minimal_decomposition_family(&h, &caps).unwrap().key();
        // K_4 claimed as a C_4-free witness with 6 edges.
        let forged = CacheEntry { n: 4, family_key: key, value: 6, witness_graph6: "C~".into(), status: Status::Exact };
        fs::write(&path, serde_json::to_string(&forged).unwrap() + "\n{\"n\":").unwrap();
        let mut c = ExtremalCache::open(&path).unwrap();
        assert_eq!(c.biex_of(4, &h, u64::MAX, &caps).unwrap().value, 4);
        assert_eq!(c.hits, 0);
    }

    #[test]
    fn malformed_line_is_an_error() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("cache.jsonl");
        fs::write(&path, "garbage\n").unwrap();
        assert!(ExtremalCache::open(&path).unwrap_err().to_string().contains(":1:"));
    }
}
