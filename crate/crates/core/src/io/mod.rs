//! File formats: system documents (JSON or a CSV pair), report documents,
//! and the inputs of the audit tools.

pub mod csv_pair;
pub mod document;
pub mod report;

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::audit::{PaperStamp, SimilarityMatrix};
use crate::error::{Error, MatrixKind, Result};
use crate::model::BinaryMatrix;
use crate::simulate::AggregationPoint;

pub use csv_pair::{load_system_csv, system_from_csv, system_to_csv};
pub use document::{load_system_json, system_from_json, system_to_json, SystemDocument};
pub use report::ReportDocument;

pub(crate) fn read_text(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::from(e).located(path.display().to_string()))
}

/// Loads a system from a `.json` document or, when `accurate` is given, from
/// a realized/accurate CSV pair.
pub fn load_system(path: &Path, accurate: Option<&Path>) -> Result<crate::model::CitationSystem> {
    match accurate {
        Some(accurate) => load_system_csv(path, accurate),
        None => load_system_json(path),
    }
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("value serializes");
    s.push('\n');
    s
}

pub fn from_json<T: for<'de> Deserialize<'de>>(text: &str, source_name: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| document::json_error(source_name, e))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SimilarityDocument {
    pub papers: Vec<PaperStamp>,
    pub scores: Vec<Vec<f64>>,
}

impl SimilarityDocument {
    pub fn to_matrix(&self) -> Result<SimilarityMatrix> {
        SimilarityMatrix::new(self.papers.clone(), &self.scores)
    }
}

/// `matrix[j][p] = 1` when paper `paper_ids[j]` cites paper `paper_ids[p]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CitationsDocument {
    pub paper_ids: Vec<String>,
    pub matrix: Vec<Vec<i64>>,
}

impl CitationsDocument {
    /// Reorders the matrix to the paper order of `sim`.
    pub fn aligned_to(&self, sim: &SimilarityMatrix) -> Result<BinaryMatrix> {
        let raw = BinaryMatrix::from_int_rows(MatrixKind::Citations, &self.matrix)?;
        let n = sim.len();
        if self.paper_ids.len() != n || raw.rows() != n || raw.cols() != n {
            return Err(Error::DimensionMismatch {
                what: "citations document vs similarity matrix".into(),
                expected: n,
                found: if self.paper_ids.len() != n {
                    self.paper_ids.len()
                } else if raw.rows() != n {
                    raw.rows()
                } else {
                    raw.cols()
                },
            });
        }
        let index: Vec<usize> = sim
            .papers()
            .iter()
            .map(|p| {
                self.paper_ids
                    .iter()
                    .position(|id| *id == p.id)
                    .ok_or_else(|| Error::DimensionMismatch {
                        what: format!("citations document lacks paper `{}`", p.id),
                        expected: n,
                        found: self.paper_ids.len(),
                    })
            })
            .collect::<Result<_>>()?;
        Ok(BinaryMatrix::from_fn(n, n, |j, p| raw.get(index[j], index[p])))
    }
}

/// One key per line; blank lines and `#` comments are skipped.
pub fn parse_key_list(text: &str) -> Vec<String> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(str::to_string)
        .collect()
}

pub fn aggregation_csv(points: &[AggregationPoint]) -> String {
    let mut out = String::from("n,empirical_se,theoretical_se\n");
    for p in points {
        out.push_str(&format!("{},{:.6},{:.6}\n", p.n, p.empirical_se, p.theoretical_se));
    }
    out
}
