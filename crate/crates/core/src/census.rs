//! Persistent census of regular graphs, keyed by `(n, r)`.
//!
//! On disk a census is a directory holding `census.jsonl`, one JSON row per
//! completed cell, and `n{n}_r{r}.g6` with the cell's graphs as
//! newline-delimited graph6. Rows are only ever appended. Each row carries a
//! checksum over its contents; loading rejects rows whose checksum, χ
//! histogram or graph file disagree with the recorded count.

use std::collections::BTreeMap;
use std::fs::{self, File, OpenOptions};
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::chromatic::chromatic_number;
use crate::enumerate::enumerate_regular;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::{read_graph6_stream, write_graph6_stream};

const ROWS: &str = "census.jsonl";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusEntry {
    pub n: usize,
    pub r: usize,
    pub count: usize,
    /// χ value -> number of graphs in the cell with that chromatic number.
    pub chi_histogram: BTreeMap<usize, usize>,
    pub checksum: String,
}

impl CensusEntry {
    fn new(n: usize, r: usize, chi_histogram: BTreeMap<usize, usize>) -> Self {
        let count = chi_histogram.values().sum();
        let mut e = CensusEntry {
            n,
            r,
            count,
            chi_histogram,
            checksum: String::new(),
        };
        e.checksum = e.digest();
        e
    }

    fn digest(&self) -> String {
        let mut h = Sha256::new();
        h.update(format!("{} {} {}", self.n, self.r, self.count));
        for (chi, c) in &self.chi_histogram {
            h.update(format!(" {chi}:{c}"));
        }
        hex::encode(&h.finalize()[..8])
    }

    fn validate(&self) -> std::result::Result<(), String> {
        if self.checksum != self.digest() {
            return Err(format!(
                "checksum mismatch for (n={}, r={})",
                self.n, self.r
            ));
        }
        let total: usize = self.chi_histogram.values().sum();
        if total != self.count {
            return Err(format!(
                "chi histogram sums to {total} but count is {}",
                self.count
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Default)]
pub struct Census {
    dir: Option<PathBuf>,
    entries: BTreeMap<(usize, usize), CensusEntry>,
    graphs: BTreeMap<(usize, usize), Vec<Graph>>,
}

fn census_err(location: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Census {
        location: location.into(),
        message: message.into(),
    }
}

fn graph_file(dir: &Path, n: usize, r: usize) -> PathBuf {
    dir.join(format!("n{n}_r{r}.g6"))
}

impl Census {
    /// A census that lives only for the current process.
    pub fn in_memory() -> Self {
        Census::default()
    }

    /// Opens the census at `dir`. A missing directory yields an empty census
    /// that will be created on the first write.
    pub fn load(dir: impl AsRef<Path>) -> Result<Self> {
        let dir = dir.as_ref().to_path_buf();
        let mut census = Census {
            dir: Some(dir.clone()),
            ..Census::default()
        };
        let rows = dir.join(ROWS);
        if !rows.exists() {
            return Ok(census);
        }
        let reader = BufReader::new(File::open(&rows)?);
        for (i, line) in reader.lines().enumerate() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let location = format!("{} row {}", rows.display(), i + 1);
            let entry: CensusEntry =
                serde_json::from_str(&line).map_err(|e| census_err(&location, e.to_string()))?;
            entry.validate().map_err(|m| census_err(&location, m))?;
            let key = (entry.n, entry.r);
            let gpath = graph_file(&dir, entry.n, entry.r);
            if gpath.exists() {
                let lines = BufReader::new(File::open(&gpath)?)
                    .lines()
                    .filter(|l| l.as_ref().map_or(true, |s| !s.trim().is_empty()))
                    .count();
                if lines != entry.count {
                    return Err(census_err(
                        &location,
                        format!(
                            "{} holds {lines} graphs, row says {}",
                            gpath.display(),
                            entry.count
                        ),
                    ));
                }
            }
            census.entries.insert(key, entry);
        }
        Ok(census)
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    pub fn entries(&self) -> impl Iterator<Item = &CensusEntry> {
        self.entries.values()
    }

    pub fn entry(&self, n: usize, r: usize) -> Option<&CensusEntry> {
        self.entries.get(&(n, r))
    }

    pub fn is_complete(&self, n: usize, r: usize) -> bool {
        self.entries.contains_key(&(n, r))
    }

    /// All `r`-regular graphs on `n` vertices: from memory, then from disk,
    /// otherwise enumerated and recorded.
    pub fn regular_graphs(&mut self, n: usize, r: usize) -> Result<Vec<Graph>> {
        if let Some(gs) = self.graphs.get(&(n, r)) {
            return Ok(gs.clone());
        }
        if let (Some(dir), true) = (&self.dir, self.is_complete(n, r)) {
            let path = graph_file(dir, n, r);
            if path.exists() {
                let gs = read_graph6_stream(BufReader::new(File::open(&path)?))
                    .collect::<Result<Vec<_>>>()
                    .map_err(|e| census_err(path.display().to_string(), e.to_string()))?;
                self.graphs.insert((n, r), gs.clone());
                return Ok(gs);
            }
        }
        let gs = enumerate_regular(n, r)?;
        self.record(n, r, gs.clone())?;
        Ok(gs)
    }

    /// Computes the χ histogram of a completed cell and appends it.
    pub fn record(&mut self, n: usize, r: usize, graphs: Vec<Graph>) -> Result<&CensusEntry> {
        let chis: Vec<usize> = graphs.par_iter().map(|g| chromatic_number(g).chi).collect();
        let mut hist = BTreeMap::new();
        for chi in chis {
            *hist.entry(chi).or_insert(0) += 1;
        }
        let entry = CensusEntry::new(n, r, hist);
        if let Some(dir) = &self.dir {
            if !self.entries.contains_key(&(n, r)) {
                append_cell(dir, &entry, &graphs)?;
            }
        }
        self.graphs.insert((n, r), graphs);
        self.entries.insert((n, r), entry);
        Ok(&self.entries[&(n, r)])
    }

    /// Appends every cell not already present at `dir`.
    pub fn store(&self, dir: impl AsRef<Path>) -> Result<()> {
        let dir = dir.as_ref();
        let existing = Census::load(dir)?;
        for (key, entry) in &self.entries {
            if existing.is_complete(key.0, key.1) {
                continue;
            }
            let graphs = match self.graphs.get(key) {
                Some(gs) => gs.clone(),
                None => enumerate_regular(key.0, key.1)?,
            };
            append_cell(dir, entry, &graphs)?;
        }
        Ok(())
    }
}

fn append_cell(dir: &Path, entry: &CensusEntry, graphs: &[Graph]) -> Result<()> {
    fs::create_dir_all(dir)?;
    let mut gw = BufWriter::new(File::create(graph_file(dir, entry.n, entry.r))?);
    write_graph6_stream(&mut gw, graphs)?;
    gw.flush()?;
    let mut rows = OpenOptions::new()
        .create(true)
        .append(true)
        .open(dir.join(ROWS))?;
    let line = serde_json::to_string(entry).map_err(|e| Error::Io(e.to_string()))?;
    writeln!(rows, "{line}")?;
    Ok(())
}

/// Loads the census at `path`.
pub fn census_load(path: impl AsRef<Path>) -> Result<Census> {
    Census::load(path)
}

/// Appends the cells of `census` to the census at `path`.
pub fn census_store(census: &Census, path: impl AsRef<Path>) -> Result<()> {
    census.store(path)
}
