//! Realized and accurate citation decisions for a closed set of citing and
//! cited papers.
//!
//! A [`CitationSystem`] pairs two J×K binary matrices: `realized` (R) records
//! which cited paper each citing paper actually cites, `accurate` (A) records
//! which it should cite because knowledge flowed. Every citing paper belongs
//! to exactly one author; positional order of the input fixes all indices.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, MatrixKind, Result};

/// Dense row-major binary matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BinaryMatrix {
    rows: usize,
    cols: usize,
    data: Vec<bool>,
}

impl BinaryMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        BinaryMatrix {
            rows,
            cols,
            data: vec![false; rows * cols],
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        BinaryMatrix { rows, cols, data }
    }

    /// Builds a matrix from integer rows, rejecting ragged rows and values
    /// other than 0 and 1.
    pub fn from_int_rows<R: AsRef<[i64]>>(kind: MatrixKind, rows: &[R]) -> Result<Self> {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(n_rows * n_cols);
        for (r, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != n_cols {
                return Err(Error::DimensionMismatch {
                    what: format!("{kind} matrix row {r} length"),
                    expected: n_cols,
                    found: row.len(),
                });
            }
            for (c, &value) in row.iter().enumerate() {
                match value {
                    0 => data.push(false),
                    1 => data.push(true),
                    _ => {
                        return Err(Error::NonBinaryEntry {
                            matrix: kind,
                            row: r,
                            col: c,
                            value,
                        })
                    }
                }
            }
        }
        Ok(BinaryMatrix {
            rows: n_rows,
            cols: n_cols,
            data,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> bool {
        assert!(row < self.rows && col < self.cols, "index ({row}, {col}) out of bounds");
        self.data[row * self.cols + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: bool) {
        assert!(row < self.rows && col < self.cols, "index ({row}, {col}) out of bounds");
        self.data[row * self.cols + col] = value;
    }

    pub fn row(&self, row: usize) -> &[bool] {
        &self.data[row * self.cols..(row + 1) * self.cols]
    }

    pub fn row_sum(&self, row: usize) -> usize {
        self.row(row).iter().filter(|&&b| b).count()
    }

    pub fn col_sum(&self, col: usize) -> usize {
        (0..self.rows).filter(|&r| self.get(r, col)).count()
    }

    pub fn count_ones(&self) -> usize {
        self.data.iter().filter(|&&b| b).count()
    }

    /// Rows as 0/1 integers, the shape used by the on-disk formats.
    pub fn to_int_rows(&self) -> Vec<Vec<u8>> {
        (0..self.rows)
            .map(|r| self.row(r).iter().map(|&b| u8::from(b)).collect())
            .collect()
    }
}

/// A citing paper and the index of its author.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CitingPaper {
    pub id: String,
    pub author: usize,
}

/// The four outcomes of comparing one realized decision with its accurate
/// counterpart.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DecisionClass {
    /// Cited, and should have been.
    CorrectPositive,
    /// Not cited, and should not have been.
    CorrectNegative,
    /// Cited without knowledge flow.
    IncorrectPositive,
    /// Knowledge flowed but no citation was given.
    IncorrectNegative,
}

impl DecisionClass {
    pub fn is_correct(self) -> bool {
        matches!(self, DecisionClass::CorrectPositive | DecisionClass::CorrectNegative)
    }
}

pub fn classify_decision(realized: bool, accurate: bool) -> DecisionClass {
    match (realized, accurate) {
        (true, true) => DecisionClass::CorrectPositive,
        (false, false) => DecisionClass::CorrectNegative,
        (true, false) => DecisionClass::IncorrectPositive,
        (false, true) => DecisionClass::IncorrectNegative,
    }
}

/// Cell-wise mismatch between realized and accurate decisions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ErrorMatrix {
    entries: BinaryMatrix,
}

impl ErrorMatrix {
    pub fn entries(&self) -> &BinaryMatrix {
        &self.entries
    }

    pub fn get(&self, citing: usize, cited: usize) -> bool {
        self.entries.get(citing, cited)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.count_ones() == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CitationSystem {
    author_ids: Vec<String>,
    citing_papers: Vec<CitingPaper>,
    cited_paper_ids: Vec<String>,
    realized: BinaryMatrix,
    accurate: BinaryMatrix,
    // papers of each author, in citing-paper order
    papers_by_author: Vec<Vec<usize>>,
}

impl CitationSystem {
    /// Validates raw inputs and assembles a system.
    ///
    /// `realized` and `accurate` are row-major, one row per citing paper and
    /// one column per cited paper. Entries must be 0 or 1.
    pub fn build<R: AsRef<[i64]>>(
        author_ids: Vec<String>,
        citing_papers: Vec<CitingPaper>,
        cited_paper_ids: Vec<String>,
        realized: &[R],
        accurate: &[R],
    ) -> Result<Self> {
        let realized = BinaryMatrix::from_int_rows(MatrixKind::Realized, realized)?;
        let accurate = BinaryMatrix::from_int_rows(MatrixKind::Accurate, accurate)?;
        Self::from_matrices(author_ids, citing_papers, cited_paper_ids, realized, accurate)
    }

    pub fn from_matrices(
        author_ids: Vec<String>,
        citing_papers: Vec<CitingPaper>,
        cited_paper_ids: Vec<String>,
        realized: BinaryMatrix,
        accurate: BinaryMatrix,
    ) -> Result<Self> {
        if citing_papers.is_empty() || cited_paper_ids.is_empty() {
            return Err(Error::EmptySystem);
        }
        let n_citing = citing_papers.len();
        let n_cited = cited_paper_ids.len();
        for (kind, m) in [(MatrixKind::Realized, &realized), (MatrixKind::Accurate, &accurate)] {
            if m.rows() != n_citing {
                return Err(Error::DimensionMismatch {
                    what: format!("{kind} matrix rows vs citing papers"),
                    expected: n_citing,
                    found: m.rows(),
                });
            }
            if m.cols() != n_cited {
                return Err(Error::DimensionMismatch {
                    what: format!("{kind} matrix columns vs cited papers"),
                    expected: n_cited,
                    found: m.cols(),
                });
            }
        }

        check_unique("author", author_ids.iter())?;
        check_unique("citing paper", citing_papers.iter().map(|p| &p.id))?;
        check_unique("cited paper", cited_paper_ids.iter())?;

        let mut papers_by_author = vec![Vec::new(); author_ids.len()];
        for (j, paper) in citing_papers.iter().enumerate() {
            match papers_by_author.get_mut(paper.author) {
                Some(papers) => papers.push(j),
                None => {
                    return Err(Error::UnknownAuthor {
                        paper: paper.id.clone(),
                        index: paper.author,
                        n_authors: author_ids.len(),
                    })
                }
            }
        }
        if let Some(i) = papers_by_author.iter().position(Vec::is_empty) {
            return Err(Error::AuthorWithoutPapers(author_ids[i].clone()));
        }

        Ok(CitationSystem {
            author_ids,
            citing_papers,
            cited_paper_ids,
            realized,
            accurate,
            papers_by_author,
        })
    }

    pub fn author_ids(&self) -> &[String] {
        &self.author_ids
    }

    pub fn citing_papers(&self) -> &[CitingPaper] {
        &self.citing_papers
    }

    pub fn cited_paper_ids(&self) -> &[String] {
        &self.cited_paper_ids
    }

    pub fn realized(&self) -> &BinaryMatrix {
        &self.realized
    }

    pub fn accurate(&self) -> &BinaryMatrix {
        &self.accurate
    }

    pub fn n_authors(&self) -> usize {
        self.author_ids.len()
    }

    /// Number of citing papers (J).
    pub fn n_citing(&self) -> usize {
        self.citing_papers.len()
    }

    /// Number of cited papers (K).
    pub fn n_cited(&self) -> usize {
        self.cited_paper_ids.len()
    }

    /// Indices of the citing papers written by `author`.
    pub fn papers_of(&self, author: usize) -> &[usize] {
        &self.papers_by_author[author]
    }

    pub fn decision(&self, citing: usize, cited: usize) -> DecisionClass {
        classify_decision(self.realized.get(citing, cited), self.accurate.get(citing, cited))
    }

    pub fn error_matrix(&self) -> ErrorMatrix {
        let entries = BinaryMatrix::from_fn(self.n_citing(), self.n_cited(), |j, k| {
            self.realized.get(j, k) != self.accurate.get(j, k)
        });
        ErrorMatrix { entries }
    }
}

fn check_unique<'a>(kind: &'static str, ids: impl Iterator<Item = &'a String>) -> Result<()> {
    let mut seen = HashSet::new();
    for id in ids {
        if !seen.insert(id.as_str()) {
            return Err(Error::DuplicateId { kind, id: id.clone() });
        }
    }
    Ok(())
}
