//! Report rendering: a JSON document carrying every statistic at full
//! precision next to its two-decimal printed form, and an aligned text table.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::io::document::SCHEMA_VERSION;
use crate::metrics::{BiasDirection, NoiseReport};
use crate::model::CitationSystem;

/// Rounds half up (toward +∞) at `decimals` places. Products like
/// `0.285 * 100` land a hair below the half, so the scaled value is snapped
/// to 1e-6 before rounding.
pub fn round_half_up(x: f64, decimals: i32) -> f64 {
    let scale = 10f64.powi(decimals);
    let snapped = (x * scale * 1e6).round() / 1e6;
    let r = (snapped + 0.5).floor() / scale;
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

pub fn printed(x: f64) -> String {
    format!("{:.2}", round_half_up(x, 2))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Stat {
    pub value: f64,
    pub printed: String,
}

impl From<f64> for Stat {
    fn from(value: f64) -> Self {
        Stat {
            value,
            printed: printed(value),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CitingRow {
    pub id: String,
    pub author: String,
    pub pr: Stat,
    pub pa: Stat,
    pub pe: Stat,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AuthorRow {
    pub id: String,
    pub papers: usize,
    pub error_rate: Stat,
    pub pattern_noise: Stat,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CitedRow {
    pub id: String,
    pub pr: Stat,
    pub tc: usize,
    pub ec: usize,
    pub pa: Stat,
    pub pe: Stat,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SystemRow {
    pub pa: Stat,
    pub pe: Stat,
    pub sigma_ln: Stat,
    pub sigma_pn: Stat,
    pub sigma_sys: Stat,
    pub mean_tc: Stat,
    pub mean_ec: Stat,
    pub bias: Stat,
    pub bias_direction: BiasDirection,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema_version: String,
    pub citing_papers: Vec<CitingRow>,
    pub authors: Vec<AuthorRow>,
    pub cited_papers: Vec<CitedRow>,
    pub system: SystemRow,
}

impl ReportDocument {
    pub fn new(system: &CitationSystem, report: &NoiseReport) -> Self {
        let citing_papers = system
            .citing_papers()
            .iter()
            .zip(&report.citing)
            .map(|(p, s)| CitingRow {
                id: p.id.clone(),
                author: system.author_ids()[p.author].clone(),
                pr: s.pr.into(),
                pa: s.pa.into(),
                pe: s.pe.into(),
            })
            .collect();
        let authors = system
            .author_ids()
            .iter()
            .enumerate()
            .map(|(i, id)| AuthorRow {
                id: id.clone(),
                papers: system.papers_of(i).len(),
                error_rate: report.author_error_rates[i].into(),
                pattern_noise: report.author_pattern_noise[i].into(),
            })
            .collect();
        let cited_papers = system
            .cited_paper_ids()
            .iter()
            .zip(&report.cited)
            .map(|(id, s)| CitedRow {
                id: id.clone(),
                pr: s.pr.into(),
                tc: s.tc,
                ec: s.ec,
                pa: s.pa.into(),
                pe: s.pe.into(),
            })
            .collect();
        ReportDocument {
            schema_version: SCHEMA_VERSION.to_string(),
            citing_papers,
            authors,
            cited_papers,
            system: SystemRow {
                pa: report.pa.into(),
                pe: report.pe.into(),
                sigma_ln: report.sigma_ln.into(),
                sigma_pn: report.sigma_pn.into(),
                sigma_sys: report.sigma_sys.into(),
                mean_tc: report.bias.mean_tc.into(),
                mean_ec: report.bias.mean_ec.into(),
                bias: report.bias.bias.into(),
                bias_direction: report.bias.direction,
            },
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// Aligned plain-text rendering of the printed values.
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let id_width = self
            .citing_papers
            .iter()
            .map(|r| r.id.len())
            .chain(self.cited_papers.iter().map(|r| r.id.len()))
            .chain(["Cited paper".len()])
            .max()
            .unwrap_or(0);
        let author_width = self
            .authors
            .iter()
            .map(|a| a.id.len())
            .chain(["Author".len()])
            .max()
            .unwrap_or(0);

        let _ = writeln!(
            out,
            "{:<id_width$}  {:<author_width$}  {:>5}  {:>5}  {:>5}  {:>5}  {:>8}",
            "Citing paper", "Author", "PR", "PA", "PE", "PE_i", "sigma_PN"
        );
        let mut seen_author = std::collections::HashSet::new();
        for row in &self.citing_papers {
            let (rate, spread) = if seen_author.insert(row.author.as_str()) {
                let a = self.authors.iter().find(|a| a.id == row.author).expect("author row");
                (a.error_rate.printed.as_str(), a.pattern_noise.printed.as_str())
            } else {
                ("", "")
            };
            let _ = writeln!(
                out,
                "{:<id_width$}  {:<author_width$}  {:>5}  {:>5}  {:>5}  {:>5}  {:>8}",
                row.id, row.author, row.pr.printed, row.pa.printed, row.pe.printed, rate, spread
            );
        }
        out.push('\n');
        let _ = writeln!(
            out,
            "{:<id_width$}  {:>5}  {:>4}  {:>4}  {:>5}  {:>5}",
            "Cited paper", "PR", "TC", "EC", "PA", "PE"
        );
        for row in &self.cited_papers {
            let _ = writeln!(
                out,
                "{:<id_width$}  {:>5}  {:>4}  {:>4}  {:>5}  {:>5}",
                row.id, row.pr.printed, row.tc, row.ec, row.pa.printed, row.pe.printed
            );
        }
        out.push('\n');
        let s = &self.system;
        let direction = match s.bias_direction {
            BiasDirection::Over => "over-cited",
            BiasDirection::Under => "under-cited",
            BiasDirection::None => "unbiased",
        };
        for (label, value) in [
            ("PA", &s.pa),
            ("PE", &s.pe),
            ("sigma_LN", &s.sigma_ln),
            ("sigma_PN", &s.sigma_pn),
            ("sigma_SYS", &s.sigma_sys),
            ("mean TC", &s.mean_tc),
            ("mean EC", &s.mean_ec),
        ] {
            let _ = writeln!(out, "{label:<9}  {:>6}", value.printed);
        }
        let _ = writeln!(out, "{:<9}  {:>6}  ({direction})", "bias", s.bias.printed);
        out
    }
}
