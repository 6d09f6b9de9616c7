//! A directory of pattern files with a generated index of verdicts.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::arith::rational::to_fraction_string;
use crate::error::{Error, Result};
use crate::instanton::{verdict, Route, Verdict};
use crate::io::{canonical, load_pattern};

pub const INDEX_FILE: &str = "index.json";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexEntry {
    pub file: String,
    pub name: String,
    pub winding_number: i64,
    /// `"a/b"`, absent for nonzero winding number.
    pub l: Option<String>,
    pub verdict: String,
    pub mirror_used: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Index {
    pub entries: Vec<IndexEntry>,
    /// Files that failed to parse, with the reason.
    pub rejected: Vec<(String, String)>,
}

pub fn verdict_summary(v: &Verdict) -> &'static str {
    match v {
        Verdict::InfiniteRank { route: Route::Instanton, .. } => "infinite_rank_instanton",
        Verdict::InfiniteRank { route: Route::SignatureJumps, .. } => "infinite_rank_signature_jumps",
        Verdict::Inconclusive { .. } => "inconclusive",
    }
}

fn pattern_files(dir: &Path) -> Result<Vec<PathBuf>> {
    let read = std::fs::read_dir(dir).map_err(|e| Error::Parse(format!("{}: {e}", dir.display())))?;
    let mut files: Vec<PathBuf> = read
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .filter(|p| p.file_name().is_some_and(|n| n != INDEX_FILE))
        .collect();
    files.sort();
    Ok(files)
}

/// Classifies every pattern file in `dir` (sorted by file name).
pub fn build_index(dir: &Path) -> Result<Index> {
    let mut entries = Vec::new();
    let mut rejected = Vec::new();
    for path in pattern_files(dir)? {
        let file = path.file_name().unwrap().to_string_lossy().into_owned();
        match load_pattern(&path) {
            Ok(p) => {
                let v = verdict(&p, None);
                let (l, mirror_used) = match &v {
                    Verdict::InfiniteRank { l, mirror_used, .. } => (l.as_ref().map(to_fraction_string), *mirror_used),
                    Verdict::Inconclusive { l } => (Some(to_fraction_string(l)), false),
                };
                entries.push(IndexEntry {
                    file,
                    name: p.name.clone(),
                    winding_number: p.winding,
                    l,
                    verdict: verdict_summary(&v).into(),
                    mirror_used,
                });
            }
            Err(e) => rejected.push((file, e.to_string())),
        }
    }
    Ok(Index { entries, rejected })
}

/// Writes `index.json` into `dir`; rerunning on unchanged files rewrites the
/// same bytes.
pub fn write_index(dir: &Path) -> Result<Index> {
    let index = build_index(dir)?;
    let text = canonical(&serde_json::to_value(&index.entries).expect("serializable")) + "\n";
    let path = dir.join(INDEX_FILE);
    std::fs::write(&path, text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    Ok(index)
}
