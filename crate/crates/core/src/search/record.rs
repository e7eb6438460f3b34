use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use crate::count::Count;
use crate::error::{Error, Result};

/// Maximum of a count over one sweep cell together with the extremal objects.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremalRecord {
    pub n_vertices: u64,
    pub m_edges: u64,
    pub max_count: Count,
    /// Canonical graph6/digraph6 strings of the extremal objects, sorted.
    /// Holds at most [`WITNESS_CAP`] entries.
    pub witnesses: Vec<String>,
    /// Number of extremal isomorphism classes (may exceed `witnesses.len()`).
    pub witness_count: u64,
    /// How many of those classes are almost regular.
    pub almost_regular_count: u64,
}

/// Witness strings kept per record.
pub const WITNESS_CAP: usize = 1000;

impl ExtremalRecord {
    pub fn all_almost_regular(&self) -> bool {
        self.almost_regular_count == self.witness_count
    }

    pub fn some_not_almost_regular(&self) -> bool {
        self.almost_regular_count < self.witness_count
    }

    /// `""`, `"*"` when some but not all extremal objects are not almost
    /// regular, `"**"` when none is.
    pub fn marker(&self) -> &'static str {
        if !self.some_not_almost_regular() {
            ""
        } else if self.almost_regular_count == 0 {
            "**"
        } else {
            "*"
        }
    }

    /// Maximum followed by its marker, e.g. `24**`.
    pub fn cell(&self) -> String {
        format!("{}{}", self.max_count, self.marker())
    }

    fn to_line(&self, kind: &str) -> String {
        let mut s = format!(
            "{kind},{},{},{},{},{},{}",
            self.n_vertices,
            self.m_edges,
            self.max_count,
            self.marker(),
            self.witness_count,
            self.almost_regular_count
        );
        for w in &self.witnesses {
            let _ = write!(s, ",{w}");
        }
        s
    }

    fn from_line(line: &str, offset: usize) -> Result<(String, ExtremalRecord)> {
        let fields: Vec<&str> = line.split(',').collect();
        let bad = |what: &str| Error::parse(offset, format!("cache line: bad {what}"));
        if fields.len() < 7 {
            return Err(bad("field count"));
        }
        let num = |i: usize, what: &str| fields[i].parse::<u64>().map_err(|_| bad(what));
        let rec = ExtremalRecord {
            n_vertices: num(1, "vertex count")?,
            m_edges: num(2, "edge count")?,
            max_count: fields[3].parse().map_err(|_| bad("maximum"))?,
            witness_count: num(5, "witness count")?,
            almost_regular_count: num(6, "almost regular count")?,
            witnesses: fields[7..].iter().map(|s| s.to_string()).collect(),
        };
        if rec.marker() != fields[4] {
            return Err(bad("marker"));
        }
        Ok((fields[0].to_string(), rec))
    }
}

/// Header identifying the cache layout; files with another header are ignored.
pub const CACHE_VERSION: &str = "# perfmax-cache v1";

/// Sweep results persisted between runs, keyed by (kind, n, m).
#[derive(Debug)]
pub struct ResultsCache {
    path: PathBuf,
    records: BTreeMap<(String, u64, u64), ExtremalRecord>,
}

impl ResultsCache {
    /// Loads `path`; a missing file or a different cache version yields an empty cache.
    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref().to_path_buf();
        let mut records = BTreeMap::new();
        if let Ok(text) = fs::read_to_string(&path) {
            let mut lines = text.lines();
            if lines.next() == Some(CACHE_VERSION) {
                let mut offset = CACHE_VERSION.len() + 1;
                for line in lines {
                    if !line.is_empty() && !line.starts_with('#') {
                        let (kind, rec) = ExtremalRecord::from_line(line, offset)?;
                        records.insert((kind, rec.n_vertices, rec.m_edges), rec);
                    }
                    offset += line.len() + 1;
                }
            }
        }
        Ok(ResultsCache { path, records })
    }

    pub fn get(&self, kind: &str, n: u64, m: u64) -> Option<&ExtremalRecord> {
        self.records.get(&(kind.to_string(), n, m))
    }

    pub fn insert(&mut self, kind: &str, rec: ExtremalRecord) {
        self.records
            .insert((kind.to_string(), rec.n_vertices, rec.m_edges), rec);
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn save(&self) -> Result<()> {
        let mut text = String::from(CACHE_VERSION);
        text.push('\n');
        for ((kind, _, _), rec) in &self.records {
            text.push_str(&rec.to_line(kind));
            text.push('\n');
        }
        if let Some(dir) = self.path.parent() {
            if !dir.as_os_str().is_empty() {
                fs::create_dir_all(dir)?;
            }
        }
        let tmp = self.path.with_extension("tmp");
        fs::write(&tmp, text)?;
        fs::rename(&tmp, &self.path)?;
        Ok(())
    }
}
