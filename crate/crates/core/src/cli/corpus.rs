//! Degree-set corpora: one JSON object per line.

use std::collections::HashMap;
use std::path::Path;

use serde::Deserialize;

use super::CliError;
use crate::graph::DegreeSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusEntry {
    pub name: String,
    pub degrees: DegreeSet,
    pub tags: Vec<String>,
    /// 1-based line in the source file
    pub line: usize,
}

impl CorpusEntry {
    pub fn has_tag(&self, tag: &str) -> bool {
        self.tags.iter().any(|t| t == tag)
    }

    pub fn is_solvable(&self) -> bool {
        self.has_tag("solvable")
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawEntry {
    name: String,
    degrees: Vec<u64>,
    #[serde(default)]
    tags: Vec<String>,
}

pub fn ingest_degree_sets(path: impl AsRef<Path>) -> Result<Vec<CorpusEntry>, CliError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_corpus(&text, path)
}

/// Parses corpus text; `path` is used only in error messages. Blank lines
/// are skipped.
pub fn parse_corpus(text: &str, path: &Path) -> Result<Vec<CorpusEntry>, CliError> {
    let mut out = Vec::new();
    let mut first_line: HashMap<String, usize> = HashMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        if raw.trim().is_empty() {
            continue;
        }
        let entry: RawEntry = serde_json::from_str(raw).map_err(|e| CliError::Json {
            path: path.to_path_buf(),
            line,
            message: e.to_string(),
        })?;
        let degrees = DegreeSet::new(entry.name.clone(), entry.degrees).map_err(|source| {
            CliError::Entry {
                path: path.to_path_buf(),
                line,
                name: entry.name.clone(),
                source,
            }
        })?;
        if let Some(&first) = first_line.get(&entry.name) {
            return Err(CliError::DuplicateName {
                path: path.to_path_buf(),
                line,
                name: entry.name,
                first,
            });
        }
        first_line.insert(entry.name.clone(), line);
        out.push(CorpusEntry {
            name: entry.name,
            degrees,
            tags: entry.tags,
            line,
        });
    }
    Ok(out)
}
