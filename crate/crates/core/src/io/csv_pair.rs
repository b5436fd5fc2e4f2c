//! A system as two CSV files, one for the realized and one for the accurate
//! matrix:
//!
//! ```text
//! author,paper,A,B,C
//! I,1,0,1,1
//! I,2,1,0,0
//! II,3,1,1,0
//! ```
//!
//! Both files must list the same authors, papers and cited-paper header.
//! Authors are numbered in order of first appearance.

use std::path::Path;

use crate::error::{Error, MatrixKind, Result};
use crate::model::{CitationSystem, CitingPaper};

struct Sheet {
    cited: Vec<String>,
    rows: Vec<(String, String)>,
    values: Vec<Vec<i64>>,
}

fn read_sheet(text: &str, source_name: &str, kind: MatrixKind) -> Result<Sheet> {
    let parse_err = |position: String, message: String| Error::Parse {
        source_name: source_name.to_string(),
        position,
        message,
    };
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let header = reader
        .headers()
        .map_err(|e| parse_err("line 1".into(), e.to_string()))?
        .clone();
    if header.len() < 3 || !header[0].eq_ignore_ascii_case("author") || !header[1].eq_ignore_ascii_case("paper") {
        return Err(parse_err(
            "line 1".into(),
            "header must be `author,paper,<cited paper ids...>`".into(),
        ));
    }
    let cited = header.iter().skip(2).map(str::to_string).collect();

    let mut rows = Vec::new();
    let mut values = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| {
            let line = e.position().map_or(0, |p| p.line());
            parse_err(format!("line {line}"), e.to_string())
        })?;
        let line = record.position().map_or(0, |p| p.line());
        rows.push((record[0].to_string(), record[1].to_string()));
        let row = record
            .iter()
            .enumerate()
            .skip(2)
            .map(|(field, cell)| {
                cell.parse::<i64>().map_err(|_| {
                    parse_err(
                        format!("line {line}, field {}", field + 1),
                        format!("{kind} value `{cell}` is not an integer"),
                    )
                })
            })
            .collect::<Result<Vec<_>>>()?;
        values.push(row);
    }
    Ok(Sheet { cited, rows, values })
}

pub fn system_from_csv(realized: &str, accurate: &str, names: (&str, &str)) -> Result<CitationSystem> {
    let r = read_sheet(realized, names.0, MatrixKind::Realized)?;
    let a = read_sheet(accurate, names.1, MatrixKind::Accurate)?;
    if r.cited != a.cited {
        return Err(Error::Parse {
            source_name: names.1.to_string(),
            position: "line 1".into(),
            message: format!("cited-paper header differs from {}", names.0),
        });
    }
    if r.rows != a.rows {
        let line = r
            .rows
            .iter()
            .zip(&a.rows)
            .position(|(x, y)| x != y)
            .unwrap_or(r.rows.len().min(a.rows.len()))
            + 2;
        return Err(Error::Parse {
            source_name: names.1.to_string(),
            position: format!("line {line}"),
            message: format!("author/paper columns differ from {}", names.0),
        });
    }

    let mut authors: Vec<String> = Vec::new();
    let papers = r
        .rows
        .iter()
        .map(|(author, paper)| {
            let idx = match authors.iter().position(|a| a == author) {
                Some(i) => i,
                None => {
                    authors.push(author.clone());
                    authors.len() - 1
                }
            };
            CitingPaper {
                id: paper.clone(),
                author: idx,
            }
        })
        .collect();

    CitationSystem::build(authors, papers, r.cited, &r.values, &a.values).map_err(|e| {
        let name = match &e {
            Error::NonBinaryEntry {
                matrix: MatrixKind::Accurate,
                ..
            } => names.1,
            _ => names.0,
        };
        e.located(name)
    })
}

fn write_sheet(system: &CitationSystem, rows: Vec<Vec<u8>>) -> String {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    let mut header = vec!["author".to_string(), "paper".to_string()];
    header.extend(system.cited_paper_ids().iter().cloned());
    w.write_record(&header).expect("in-memory write");
    for (paper, row) in system.citing_papers().iter().zip(rows) {
        let mut record = vec![system.author_ids()[paper.author].clone(), paper.id.clone()];
        record.extend(row.iter().map(u8::to_string));
        w.write_record(&record).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
}

/// Realized and accurate sheets, in that order.
pub fn system_to_csv(system: &CitationSystem) -> (String, String) {
    (
        write_sheet(system, system.realized().to_int_rows()),
        write_sheet(system, system.accurate().to_int_rows()),
    )
}

pub fn load_system_csv(realized: &Path, accurate: &Path) -> Result<CitationSystem> {
    let read = |p: &Path| std::fs::read_to_string(p).map_err(|e| Error::from(e).located(p.display().to_string()));
    system_from_csv(
        &read(realized)?,
        &read(accurate)?,
        (&realized.display().to_string(), &accurate.display().to_string()),
    )
}
