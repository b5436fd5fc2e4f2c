//! Citation audit instruments: the omission indicator and citation
//! justification tables.
//!
//! The omission indicator takes a precomputed pairwise similarity matrix
//! (this crate does not compute text similarity) and flags every earlier
//! paper that falls in a later paper's `k` most similar predecessors but is
//! not cited by it.
//!
//! A justification table lists, for each cited work, which knowledge flowed
//! from it. The on-disk format is `|`-delimited UTF-8 text:
//!
//! ```text
//! # comments start with '#'
//! Cited work | Section | Knowledge flowed
//! Section: Introduction
//! Smith (2014) | | Definition of knowledge flow.
//! Jaffe et al. (2000) | Discussion | Share of patent citations without knowledge flow.
//! ```
//!
//! The header may also be the two-column `Cited work | Knowledge flowed`, in
//! which case rows carry two fields and take their section from the most
//! recent `Section:` row. An empty section field inherits the same way.

use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, MatrixKind, Result};
use crate::model::BinaryMatrix;

pub const SYMMETRY_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PaperStamp {
    pub id: String,
    /// Publication time in any monotone integer unit (e.g. days or years).
    pub timestamp: i64,
}

/// Symmetric pairwise similarity scores with publication times.
#[derive(Debug, Clone, PartialEq)]
pub struct SimilarityMatrix {
    papers: Vec<PaperStamp>,
    scores: Vec<f64>,
    // rank of each paper in publication order, ties broken by id
    chrono_rank: Vec<usize>,
}

impl SimilarityMatrix {
    pub fn new(papers: Vec<PaperStamp>, scores: &[Vec<f64>]) -> Result<Self> {
        let n = papers.len();
        if scores.len() != n {
            return Err(Error::DimensionMismatch {
                what: "similarity matrix rows vs papers".into(),
                expected: n,
                found: scores.len(),
            });
        }
        if let Some((r, row)) = scores.iter().enumerate().find(|(_, row)| row.len() != n) {
            return Err(Error::DimensionMismatch {
                what: format!("similarity matrix row {r} length"),
                expected: n,
                found: row.len(),
            });
        }
        let mut seen = HashSet::new();
        for p in &papers {
            if !seen.insert(p.id.as_str()) {
                return Err(Error::DuplicateId {
                    kind: "paper",
                    id: p.id.clone(),
                });
            }
        }
        for (row, values) in scores.iter().enumerate() {
            for (col, &value) in values.iter().enumerate() {
                if row == col {
                    continue;
                }
                if !(0.0..=1.0).contains(&value) {
                    return Err(Error::SimilarityOutOfRange { row, col, value });
                }
                if col > row && (value - scores[col][row]).abs() > SYMMETRY_TOLERANCE {
                    return Err(Error::NonSymmetric {
                        row,
                        col,
                        upper: value,
                        lower: scores[col][row],
                    });
                }
            }
        }

        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| {
            papers[a]
                .timestamp
                .cmp(&papers[b].timestamp)
                .then_with(|| papers[a].id.cmp(&papers[b].id))
        });
        let mut chrono_rank = vec![0; n];
        for (rank, &idx) in order.iter().enumerate() {
            chrono_rank[idx] = rank;
        }

        Ok(SimilarityMatrix {
            papers,
            scores: scores.iter().flatten().copied().collect(),
            chrono_rank,
        })
    }

    pub fn len(&self) -> usize {
        self.papers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.papers.is_empty()
    }

    pub fn papers(&self) -> &[PaperStamp] {
        &self.papers
    }

    pub fn score(&self, a: usize, b: usize) -> f64 {
        self.scores[a * self.len() + b]
    }

    /// Whether paper `a` precedes paper `b` (timestamp, then id).
    pub fn precedes(&self, a: usize, b: usize) -> bool {
        self.chrono_rank[a] < self.chrono_rank[b]
    }

    /// Paper indices in publication order.
    pub fn chronological(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&i| self.chrono_rank[i]);
        order
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OmissionFlag {
    pub citing: String,
    pub earlier: String,
    pub similarity: f64,
    /// Whether `earlier` is among the citing paper's most similar predecessors.
    pub in_similar_set: bool,
    pub cited: bool,
    pub flag: bool,
}

/// The most-similar set of a paper was smaller than requested because it
/// has fewer predecessors than `k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShortSimilarSet {
    pub paper: String,
    pub available: usize,
    pub requested: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OmissionFlags {
    pub k: usize,
    /// One entry per (citing, earlier) pair, citing papers in publication
    /// order, then earlier papers in publication order.
    pub entries: Vec<OmissionFlag>,
    pub warnings: Vec<ShortSimilarSet>,
}

impl OmissionFlags {
    pub fn flag(&self, citing: &str, earlier: &str) -> Option<bool> {
        self.entries
            .iter()
            .find(|e| e.citing == citing && e.earlier == earlier)
            .map(|e| e.flag)
    }

    pub fn flagged(&self) -> impl Iterator<Item = &OmissionFlag> {
        self.entries.iter().filter(|e| e.flag)
    }
}

/// Flags, for every paper, each of its `k` most similar predecessors that it
/// does not cite.
///
/// `citations[j][p]` is true when paper j cites paper p, indexed like
/// `sim.papers()`. Predecessors are ranked by similarity (descending), then
/// by publication order (older first). Papers with some, but fewer than
/// `k`, predecessors use all of them and produce a [`ShortSimilarSet`]
/// warning; the earliest paper has nothing to check.
pub fn omission_indicator(sim: &SimilarityMatrix, citations: &BinaryMatrix, k: usize) -> Result<OmissionFlags> {
    if k == 0 {
        return Err(Error::InvalidK);
    }
    let n = sim.len();
    if citations.rows() != n || citations.cols() != n {
        return Err(Error::DimensionMismatch {
            what: format!("{} matrix vs similarity matrix", MatrixKind::Citations),
            expected: n,
            found: if citations.rows() != n {
                citations.rows()
            } else {
                citations.cols()
            },
        });
    }

    let mut entries = Vec::new();
    let mut warnings = Vec::new();
    let chrono = sim.chronological();
    for (rank, &j) in chrono.iter().enumerate() {
        let predecessors = &chrono[..rank];
        if predecessors.is_empty() {
            continue;
        }
        let mut ranked = predecessors.to_vec();
        ranked.sort_by(|&a, &b| {
            sim.score(j, b)
                .total_cmp(&sim.score(j, a))
                .then_with(|| sim.chrono_rank[a].cmp(&sim.chrono_rank[b]))
        });
        if k > ranked.len() {
            warnings.push(ShortSimilarSet {
                paper: sim.papers[j].id.clone(),
                available: ranked.len(),
                requested: k,
            });
        }
        let similar: HashSet<usize> = ranked.into_iter().take(k).collect();
        for &p in predecessors {
            let in_similar_set = similar.contains(&p);
            let cited = citations.get(j, p);
            entries.push(OmissionFlag {
                citing: sim.papers[j].id.clone(),
                earlier: sim.papers[p].id.clone(),
                similarity: sim.score(j, p),
                in_similar_set,
                cited,
                flag: in_similar_set && !cited,
            });
        }
    }
    Ok(OmissionFlags { k, entries, warnings })
}

/// Case-folds, trims and collapses internal whitespace so that hand-typed
/// keys compare equal.
pub fn canonical_key(key: &str) -> String {
    let folded = caseless::default_case_fold_str(key);
    folded.split_whitespace().collect::<Vec<_>>().join(" ")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JustificationEntry {
    pub cited_work: String,
    pub section: Option<String>,
    pub knowledge_flow: String,
}

/// Parsed justification table. Equality compares entries only, not the
/// source line numbers.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct JustificationTable {
    pub entries: Vec<JustificationEntry>,
    /// 1-based source line of each entry; empty for tables built in code.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub lines: Vec<usize>,
}

impl PartialEq for JustificationTable {
    fn eq(&self, other: &Self) -> bool {
        self.entries == other.entries
    }
}

impl Eq for JustificationTable {}

const SECTION_PREFIX: &str = "Section:";
pub const HEADER: &str = "Cited work | Section | Knowledge flowed";

fn is_header(fields: &[&str]) -> bool {
    fields.first().is_some_and(|f| f.eq_ignore_ascii_case("cited work"))
}

pub fn parse_justification_table(text: &str) -> Result<JustificationTable> {
    let mut columns: Option<usize> = None;
    let mut section: Option<String> = None;
    let mut table = JustificationTable::default();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.strip_suffix('\r').unwrap_or(raw);
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split('|').map(str::trim).collect();

        let Some(n_cols) = columns else {
            if !is_header(&fields) || !(2..=3).contains(&fields.len()) {
                return Err(Error::MalformedRow {
                    line: line_no,
                    reason:
                        "expected header `Cited work | Section | Knowledge flowed` or `Cited work | Knowledge flowed`"
                            .into(),
                });
            }
            columns = Some(fields.len());
            continue;
        };

        if let Some(label) = fields[0].strip_prefix(SECTION_PREFIX) {
            if fields.len() > n_cols || fields[1..].iter().any(|f| !f.is_empty()) {
                return Err(Error::MalformedRow {
                    line: line_no,
                    reason: "section rows must not carry other fields".into(),
                });
            }
            let label = label.trim();
            section = (!label.is_empty()).then(|| label.to_string());
            continue;
        }

        if fields.len() != n_cols {
            return Err(Error::MalformedRow {
                line: line_no,
                reason: format!("expected {n_cols} fields, found {}", fields.len()),
            });
        }
        let (key, own_section, reason) = match fields[..] {
            [key, reason] => (key, "", reason),
            [key, sec, reason] => (key, sec, reason),
            _ => unreachable!("column count is 2 or 3"),
        };
        if key.is_empty() {
            return Err(Error::EmptyKey { line: line_no });
        }
        if reason.is_empty() {
            return Err(Error::EmptyReason { line: line_no });
        }
        let entry_section = if own_section.is_empty() {
            section.clone()
        } else {
            Some(own_section.to_string())
        };
        table.entries.push(JustificationEntry {
            cited_work: key.to_string(),
            section: entry_section,
            knowledge_flow: reason.to_string(),
        });
        table.lines.push(line_no);
    }

    if columns.is_none() {
        return Err(Error::MalformedRow {
            line: text.lines().count().max(1),
            reason: "missing header row".into(),
        });
    }
    Ok(table)
}

fn check_field(field: &str) -> Result<&str> {
    if field.contains(['|', '\n', '\r']) || field.trim() != field || field.starts_with('#') {
        return Err(Error::Unrepresentable(field.to_string()));
    }
    Ok(field)
}

/// Writes the three-column form with LF line endings.
pub fn serialize_justification_table(table: &JustificationTable) -> Result<String> {
    let mut out = String::from(HEADER);
    out.push('\n');
    for e in &table.entries {
        let key = check_field(&e.cited_work)?;
        if key.is_empty() || key.starts_with(SECTION_PREFIX) || key.eq_ignore_ascii_case("cited work") {
            return Err(Error::Unrepresentable(key.to_string()));
        }
        let section = check_field(e.section.as_deref().unwrap_or(""))?;
        let reason = check_field(&e.knowledge_flow)?;
        if reason.is_empty() {
            return Err(Error::Unrepresentable(reason.to_string()));
        }
        out.push_str(&format!("{key} | {section} | {reason}\n"));
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DuplicateEntry {
    pub key: String,
    pub section: Option<String>,
    pub count: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AuditReport {
    /// In-text keys with no justification entry, in first-occurrence order.
    pub unjustified_citations: Vec<String>,
    /// Justified keys missing from the reference list.
    pub orphan_justifications: Vec<String>,
    /// (key, section) pairs that appear more than once.
    pub duplicate_entries: Vec<DuplicateEntry>,
    /// Justified in-text occurrences divided by all in-text occurrences;
    /// 1 when there are none.
    pub coverage_ratio: f64,
    pub in_text_occurrences: usize,
    pub justified_occurrences: usize,
}

/// Cross-checks a justification table against the reference list and the
/// in-text citation keys. All keys go through [`canonical_key`] and are
/// reported in canonical form. A key justified once counts as justified for
/// every in-text occurrence.
pub fn audit_justification<'a>(
    reference_keys: impl IntoIterator<Item = &'a str>,
    in_text_keys: &[String],
    jt: &JustificationTable,
) -> AuditReport {
    let references: HashSet<String> = reference_keys.into_iter().map(canonical_key).collect();
    let jt_keys: Vec<String> = jt.entries.iter().map(|e| canonical_key(&e.cited_work)).collect();
    let justified: HashSet<&str> = jt_keys.iter().map(String::as_str).collect();

    let mut unjustified = Vec::new();
    let mut seen = HashSet::new();
    let mut justified_occurrences = 0;
    for key in in_text_keys.iter().map(|k| canonical_key(k)) {
        if justified.contains(key.as_str()) {
            justified_occurrences += 1;
        } else if seen.insert(key.clone()) {
            unjustified.push(key);
        }
    }

    let mut orphans = Vec::new();
    let mut seen = HashSet::new();
    for key in &jt_keys {
        if !references.contains(key) && seen.insert(key.as_str()) {
            orphans.push(key.clone());
        }
    }

    let mut counts: HashMap<(&str, Option<String>), usize> = HashMap::new();
    let mut order = Vec::new();
    for (key, entry) in jt_keys.iter().zip(&jt.entries) {
        let section = entry.section.as_deref().map(canonical_key);
        let slot = counts.entry((key.as_str(), section.clone())).or_insert(0);
        if *slot == 0 {
            order.push((key.as_str(), section));
        }
        *slot += 1;
    }
    let duplicate_entries = order
        .into_iter()
        .filter_map(|id| {
            let count = counts[&id];
            (count > 1).then(|| DuplicateEntry {
                key: id.0.to_string(),
                section: id.1,
                count,
            })
        })
        .collect();

    let total = in_text_keys.len();
    AuditReport {
        unjustified_citations: unjustified,
        orphan_justifications: orphans,
        duplicate_entries,
        coverage_ratio: if total == 0 {
            1.0
        } else {
            justified_occurrences as f64 / total as f64
        },
        in_text_occurrences: total,
        justified_occurrences,
    }
}
