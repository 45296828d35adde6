//! Append-only cache of computed invariants, keyed by the labeled graph6
//! string. Relabeled copies of a graph miss by design.
//!
//! File format, one record per line: `graph6 TAB p TAB invariant TAB value`.

use crate::error::{Error, Result};
use crate::homology::Field;
use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::sync::{Mutex, RwLock};

/// Environment variable naming the default cache file.
pub const CACHE_ENV: &str = "REGLAB_CACHE";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CacheEntry {
    pub graph6: String,
    pub field: Field,
    pub invariant: String,
    pub value: String,
}

impl CacheEntry {
    fn parse(line: &str, number: usize) -> Result<Self> {
        let bad = |message: &str| Error::CacheFormat {
            line: number,
            message: message.to_string(),
        };
        let parts: Vec<&str> = line.split('\t').collect();
        let [graph6, p, invariant, value] = parts[..] else {
            return Err(bad("expected four tab-separated fields"));
        };
        crate::graph::parse_graph6(graph6.as_bytes()).map_err(|e| bad(&format!("bad graph6: {e}")))?;
        let p: u32 = p.parse().map_err(|_| bad("field is not an integer"))?;
        let field = Field::new(p).map_err(|_| bad("field is not a prime"))?;
        if invariant.is_empty() || value.is_empty() {
            return Err(bad("empty invariant name or value"));
        }
        Ok(CacheEntry {
            graph6: graph6.to_string(),
            field,
            invariant: invariant.to_string(),
            value: value.to_string(),
        })
    }

    pub fn line(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}\n",
            self.graph6,
            self.field.p(),
            self.invariant,
            self.value
        )
    }
}

type Key = (String, Field, String);

/// Concurrent reads, exclusive appends.
#[derive(Debug, Default)]
pub struct Cache {
    entries: RwLock<HashMap<Key, String>>,
    file: Option<Mutex<File>>,
    path: Option<PathBuf>,
}

impl Cache {
    pub fn in_memory() -> Self {
        Self::default()
    }

    /// Opens or creates the file. Malformed lines are skipped and returned as
    /// errors so the caller can report them; their values get recomputed.
    pub fn open(path: impl AsRef<Path>) -> Result<(Self, Vec<Error>)> {
        let path = path.as_ref();
        let mut entries = HashMap::new();
        let mut problems = Vec::new();
        if path.exists() {
            for (i, line) in BufReader::new(File::open(path)?).lines().enumerate() {
                let line = line?;
                if line.trim().is_empty() {
                    continue;
                }
                match CacheEntry::parse(&line, i + 1) {
                    Ok(e) => {
                        entries.insert((e.graph6, e.field, e.invariant), e.value);
                    }
                    Err(e) => problems.push(e),
                }
            }
        }
        let file = OpenOptions::new().create(true).append(true).open(path)?;
        Ok((
            Cache {
                entries: RwLock::new(entries),
                file: Some(Mutex::new(file)),
                path: Some(path.to_path_buf()),
            },
            problems,
        ))
    }

    /// The cache named by an explicit path, else by `REGLAB_CACHE`, else none.
    pub fn from_flag_or_env(flag: Option<&Path>) -> Result<Option<(Self, Vec<Error>)>> {
        let path = match flag {
            Some(p) => Some(p.to_path_buf()),
            None => std::env::var_os(CACHE_ENV).map(PathBuf::from),
        };
        path.map(Self::open).transpose()
    }

    pub fn path(&self) -> Option<&Path> {
        self.path.as_deref()
    }

    pub fn len(&self) -> usize {
        self.entries.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn lookup(&self, graph6: &str, field: Field, invariant: &str) -> Option<String> {
        self.entries
            .read()
            .unwrap()
            .get(&(graph6.to_string(), field, invariant.to_string()))
            .cloned()
    }

    pub fn store(&self, entry: CacheEntry) -> Result<()> {
        if entry.invariant.contains(['\t', '\n']) || entry.value.contains(['\t', '\n']) {
            return Err(Error::InvalidParameter(
                "cache fields may not contain tabs or newlines".into(),
            ));
        }
        let key = (entry.graph6.clone(), entry.field, entry.invariant.clone());
        let mut entries = self.entries.write().unwrap();
        if entries.get(&key) == Some(&entry.value) {
            return Ok(());
        }
        if let Some(file) = &self.file {
            file.lock().unwrap().write_all(entry.line().as_bytes())?;
        }
        entries.insert(key, entry.value);
        Ok(())
    }

    /// All entries, sorted.
    pub fn entries(&self) -> Vec<CacheEntry> {
        let mut out: Vec<CacheEntry> = self
            .entries
            .read()
            .unwrap()
            .iter()
            .map(|((graph6, field, invariant), value)| CacheEntry {
                graph6: graph6.clone(),
                field: *field,
                invariant: invariant.clone(),
                value: value.clone(),
            })
            .collect();
        out.sort_by(|a, b| (&a.graph6, a.field, &a.invariant).cmp(&(&b.graph6, b.field, &b.invariant)));
        out
    }
}

/// Regularity through the cache, stored under the name `reg`.
pub fn cached_regularity(g: &crate::graph::Graph, strategy: super::RegStrategy, cache: &Cache) -> Result<usize> {
    let key = g.to_graph6();
    if let Some(v) = cache.lookup(&key, strategy.field, "reg").and_then(|v| v.parse().ok()) {
        return Ok(v);
    }
    let value = super::regularity(g, strategy)?.value;
    cache.store(CacheEntry {
        graph6: key,
        field: strategy.field,
        invariant: "reg".into(),
        value: value.to_string(),
    })?;
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_named, Graph, NamedFamily};
    use crate::regularity::RegStrategy;

    #[test]
    fn store_then_lookup() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("cache.tsv");
        let c5 = build_named(NamedFamily::Cycle(5)).unwrap();
        {
            let (cache, problems) = Cache::open(&path).unwrap();
            assert!(problems.is_empty() && cache.is_empty());
            assert_eq!(cached_regularity(&c5, RegStrategy::exhaustive(), &cache).unwrap(), 2);
        }
        let (cache, _) = Cache::open(&path).unwrap();
        assert_eq!(cache.lookup(&c5.to_graph6(), Field::GF2, "reg").as_deref(), Some("2"));
        // the same cycle with another labeling is a different key
        let relabeled = Graph::from_edges(5, [(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)]).unwrap();
        assert_ne!(relabeled.to_graph6(), c5.to_graph6());
        assert_eq!(cache.lookup(&relabeled.to_graph6(), Field::GF2, "reg"), None);
        assert_eq!(
            std::fs::read_to_string(&path).unwrap(),
            format!("{}\t2\treg\t2\n", c5.to_graph6())
        );
    }

    #[test]
    fn corrupt_lines_are_reported_and_skipped() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("cache.tsv");
        std::fs::write(&path, "A_\t2\treg\t1\nnot a record\nA_\t4\treg\t1\n").unwrap();
        let (cache, problems) = Cache::open(&path).unwrap();
        assert_eq!(cache.len(), 1);
        assert_eq!(problems.len(), 2);
        assert!(matches!(problems[0], Error::CacheFormat { line: 2, .. }));
        assert!(matches!(problems[1], Error::CacheFormat { line: 3, .. }));
        // the value is recomputed and appended
        let k3 = build_named(NamedFamily::Complete(3)).unwrap();
        assert_eq!(cached_regularity(&k3, RegStrategy::pruned(), &cache).unwrap(), 1);
        assert_eq!(Cache::open(&path).unwrap().0.len(), 2);
    }
}
