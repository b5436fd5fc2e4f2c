//! Structured (JSON) documents for citation systems.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{CitationSystem, CitingPaper};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CitingPaperEntry {
    pub id: String,
    pub author: String,
}

/// On-disk form of a [`CitationSystem`]. Matrices are arrays of rows of 0/1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SystemDocument {
    pub schema_version: String,
    pub author_ids: Vec<String>,
    pub citing_papers: Vec<CitingPaperEntry>,
    pub cited_paper_ids: Vec<String>,
    pub realized: Vec<Vec<i64>>,
    pub accurate: Vec<Vec<i64>>,
}

#[derive(Deserialize)]
struct VersionProbe {
    schema_version: Option<String>,
}

pub(crate) fn json_error(source_name: &str, e: serde_json::Error) -> Error {
    Error::Parse {
        source_name: source_name.to_string(),
        position: format!("line {}, column {}", e.line(), e.column()),
        message: e.to_string(),
    }
}

impl SystemDocument {
    pub fn from_system(system: &CitationSystem) -> Self {
        let to_i64 = |rows: Vec<Vec<u8>>| -> Vec<Vec<i64>> {
            rows.into_iter()
                .map(|r| r.into_iter().map(i64::from).collect())
                .collect()
        };
        SystemDocument {
            schema_version: SCHEMA_VERSION.to_string(),
            author_ids: system.author_ids().to_vec(),
            citing_papers: system
                .citing_papers()
                .iter()
                .map(|p| CitingPaperEntry {
                    id: p.id.clone(),
                    author: system.author_ids()[p.author].clone(),
                })
                .collect(),
            cited_paper_ids: system.cited_paper_ids().to_vec(),
            realized: to_i64(system.realized().to_int_rows()),
            accurate: to_i64(system.accurate().to_int_rows()),
        }
    }

    pub fn parse(text: &str, source_name: &str) -> Result<Self> {
        let probe: VersionProbe = serde_json::from_str(text).map_err(|e| json_error(source_name, e))?;
        match probe.schema_version.as_deref() {
            Some(SCHEMA_VERSION) => {}
            Some(other) => return Err(Error::SchemaVersionUnsupported(other.to_string()).located(source_name)),
            None => {
                return Err(Error::Parse {
                    source_name: source_name.to_string(),
                    position: "top level".into(),
                    message: "missing field `schema_version`".into(),
                })
            }
        }
        serde_json::from_str(text).map_err(|e| json_error(source_name, e))
    }

    pub fn to_system(&self) -> Result<CitationSystem> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(Error::SchemaVersionUnsupported(self.schema_version.clone()));
        }
        let citing_papers = self
            .citing_papers
            .iter()
            .map(|p| match self.author_ids.iter().position(|a| *a == p.author) {
                Some(author) => Ok(CitingPaper {
                    id: p.id.clone(),
                    author,
                }),
                None => Err(Error::UnknownAuthorId {
                    paper: p.id.clone(),
                    author: p.author.clone(),
                }),
            })
            .collect::<Result<Vec<_>>>()?;
        CitationSystem::build(
            self.author_ids.clone(),
            citing_papers,
            self.cited_paper_ids.clone(),
            &self.realized,
            &self.accurate,
        )
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("document serializes");
        s.push('\n');
        s
    }
}

pub fn system_from_json(text: &str, source_name: &str) -> Result<CitationSystem> {
    SystemDocument::parse(text, source_name)?
        .to_system()
        .map_err(|e| e.located(source_name))
}

pub fn system_to_json(system: &CitationSystem) -> String {
    SystemDocument::from_system(system).to_json()
}

pub fn load_system_json(path: &Path) -> Result<CitationSystem> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::from(e).located(path.display().to_string()))?;
    system_from_json(&text, &path.display().to_string())
}
