//! Data model for programs, findings, feature labels, and distinct
//! vulnerabilities, plus ingestion of the line-delimited corpus formats.
//!
//! Every on-disk corpus file is line-delimited: one JSON object per line,
//! fixed field names, streamable and diffable. Loaders validate records as
//! they go and report the offending 1-based line number on failure.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Reserved feature assigned to findings whose location could not be
/// classified (unparseable context, binary file, below-threshold score).
pub const UNKNOWN_ACTION: &str = "unknown";

/// One generated program: a task, its rephrase index, the generating model,
/// and where its source tree lives.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProgramRecord {
    pub program_id: String,
    pub task_id: String,
    pub rephrase_index: u32,
    pub domain: String,
    pub model: String,
    pub source_root: PathBuf,
}

/// One static-analysis hit, normalized to a neutral schema.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Finding {
    pub program_id: String,
    pub file: String,
    pub line: u32,
    pub rule_id: String,
    pub scanner: String,
}

/// A feature assignment for one source location: the winning action and its
/// score. `window_fallback` records that the syntax-aware extraction degraded
/// to a fixed-radius window for this location.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FeatureLabel {
    pub program_id: String,
    pub file: String,
    pub line: u32,
    pub action: String,
    pub confidence: f64,
    #[serde(default)]
    pub window_fallback: bool,
}

/// A distinct labeled vulnerability: a (feature, rule) pair. Equality and
/// ordering are componentwise on the pair and nothing else — the same pair
/// observed in two different programs compares equal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct LabeledVuln {
    pub feature: String,
    pub rule: String,
}

impl LabeledVuln {
    pub fn new(feature: impl Into<String>, rule: impl Into<String>) -> Self {
        LabeledVuln {
            feature: feature.into(),
            rule: rule.into(),
        }
    }
}

fn read_to_string(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::io(path, e))
}

/// Parses one JSON record per non-blank line, reporting the line number of
/// the first malformed record.
fn parse_lines<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<Vec<(usize, T)>> {
    let text = read_to_string(path)?;
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        if raw.trim().is_empty() {
            continue;
        }
        let record: T = serde_json::from_str(raw).map_err(|e| Error::Malformed {
            path: path.to_path_buf(),
            line: idx + 1,
            message: e.to_string(),
        })?;
        out.push((idx + 1, record));
    }
    Ok(out)
}

/// Loads and validates a program manifest. Order is preserved from the file.
pub fn load_manifest(path: &Path) -> Result<Vec<ProgramRecord>> {
    let records = parse_lines::<ProgramRecord>(path)?;
    let mut seen_ids: HashSet<&str> = HashSet::new();
    let mut seen_keys: HashSet<(&str, u32, &str)> = HashSet::new();
    for (line, record) in &records {
        if record.program_id.is_empty() {
            return Err(Error::InvalidRecord {
                path: path.to_path_buf(),
                line: *line,
                message: "empty program_id".into(),
            });
        }
        if record.domain.is_empty() {
            return Err(Error::InvalidRecord {
                path: path.to_path_buf(),
                line: *line,
                message: format!("empty domain for program {:?}", record.program_id),
            });
        }
        if !seen_ids.insert(&record.program_id) {
            return Err(Error::DuplicateProgramId {
                path: path.to_path_buf(),
                line: *line,
                id: record.program_id.clone(),
            });
        }
        if !seen_keys.insert((&record.task_id, record.rephrase_index, &record.model)) {
            return Err(Error::DuplicateTaskKey {
                path: path.to_path_buf(),
                line: *line,
                task_id: record.task_id.clone(),
                rephrase_index: record.rephrase_index,
                model: record.model.clone(),
            });
        }
    }
    Ok(records.into_iter().map(|(_, r)| r).collect())
}

/// Loads findings and validates them against an already-loaded manifest:
/// every `program_id` must resolve and every line must be >= 1.
pub fn load_findings(path: &Path, manifest: &[ProgramRecord]) -> Result<Vec<Finding>> {
    let known: HashSet<&str> = manifest.iter().map(|r| r.program_id.as_str()).collect();
    let records = parse_lines::<Finding>(path)?;
    for (line, finding) in &records {
        if finding.line < 1 {
            return Err(Error::InvalidRecord {
                path: path.to_path_buf(),
                line: *line,
                message: format!("non-positive finding line {}", finding.line),
            });
        }
        if finding.rule_id.is_empty() {
            return Err(Error::InvalidRecord {
                path: path.to_path_buf(),
                line: *line,
                message: "empty rule_id".into(),
            });
        }
        if !known.contains(finding.program_id.as_str()) {
            return Err(Error::UnresolvedProgram {
                path: path.to_path_buf(),
                line: *line,
                id: finding.program_id.clone(),
            });
        }
    }
    Ok(records.into_iter().map(|(_, r)| r).collect())
}

/// Loads feature labels. Labels are not cross-checked against a manifest;
/// the join with findings happens in [`distinct_vulns`].
pub fn load_labels(path: &Path) -> Result<Vec<FeatureLabel>> {
    let records = parse_lines::<FeatureLabel>(path)?;
    for (line, label) in &records {
        if label.line < 1 {
            return Err(Error::InvalidRecord {
                path: path.to_path_buf(),
                line: *line,
                message: format!("non-positive label line {}", label.line),
            });
        }
        if label.action.is_empty() {
            return Err(Error::InvalidRecord {
                path: path.to_path_buf(),
                line: *line,
                message: "empty action".into(),
            });
        }
    }
    Ok(records.into_iter().map(|(_, r)| r).collect())
}

/// Serializes records back to the line-delimited format, one JSON object per
/// line, in input order. Field order is fixed by the struct definitions, so
/// identical inputs produce byte-identical files.
pub fn to_jsonl<T: Serialize>(records: &[T]) -> String {
    let mut out = String::new();
    for record in records {
        out.push_str(&serde_json::to_string(record).expect("serializable record"));
        out.push('\n');
    }
    out
}

/// The deduplicated set of (feature, rule) pairs for one program.
///
/// Every finding for the program must have a co-located label (same file and
/// line); findings labeled [`UNKNOWN_ACTION`] are retained under the reserved
/// feature. Downstream consumers decide whether to exclude the unknown
/// feature. Input order never matters: the result is a set.
pub fn distinct_vulns(
    program_id: &str,
    findings: &[Finding],
    labels: &[FeatureLabel],
) -> Result<BTreeSet<LabeledVuln>> {
    let mut by_location: HashMap<(&str, u32), &str> = HashMap::new();
    for label in labels.iter().filter(|l| l.program_id == program_id) {
        by_location.insert((label.file.as_str(), label.line), label.action.as_str());
    }
    let mut vulns = BTreeSet::new();
    for finding in findings.iter().filter(|f| f.program_id == program_id) {
        let action = by_location
            .get(&(finding.file.as_str(), finding.line))
            .ok_or_else(|| Error::MissingLabel {
                program_id: program_id.to_string(),
                file: finding.file.clone(),
                line: finding.line,
            })?;
        vulns.insert(LabeledVuln::new(*action, finding.rule_id.clone()));
    }
    Ok(vulns)
}

/// Groups findings by program id, preserving input order within each group.
pub fn findings_by_program<'a>(findings: &'a [Finding]) -> BTreeMap<&'a str, Vec<&'a Finding>> {
    let mut map: BTreeMap<&str, Vec<&Finding>> = BTreeMap::new();
    for finding in findings {
        map.entry(finding.program_id.as_str()).or_default().push(finding);
    }
    map
}
