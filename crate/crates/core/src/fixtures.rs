//! Three small hand-made systems used as worked examples and test fixtures.
//!
//! * `table1`: three authors, ten citing papers, five cited papers with a
//!   mix of errors.
//! * `table2`: every cited paper is mis-cited, yet over- and under-citation
//!   cancel so the mean count is unbiased.
//! * `table3`: every cited paper receives exactly its expected count, but
//!   two authors get every decision wrong.

use crate::error::{Error, Result};
use crate::model::{CitationSystem, CitingPaper};

pub const NAMES: [&str; 3] = ["table1", "table2", "table3"];

pub fn builtin_fixture(name: &str) -> Result<CitationSystem> {
    match name {
        "table1" => Ok(table1()),
        "table2" => Ok(table2()),
        "table3" => Ok(table3()),
        other => Err(Error::UnknownFixture(other.to_string())),
    }
}

pub fn table1() -> CitationSystem {
    #[rustfmt::skip]
    let realized = [
        [0, 1, 1, 0, 0],
        [1, 0, 0, 1, 1],
        [0, 1, 0, 0, 0],
        [1, 1, 0, 1, 0],
        [1, 1, 1, 0, 0],
        [0, 1, 0, 1, 0],
        [1, 1, 1, 1, 0],
        [1, 1, 1, 0, 0],
        [0, 0, 0, 0, 0],
        [1, 0, 1, 0, 0],
    ];
    #[rustfmt::skip]
    let accurate = [
        [1, 1, 0, 1, 1],
        [1, 1, 0, 1, 1],
        [1, 0, 0, 0, 1],
        [1, 0, 0, 0, 1],
        [1, 0, 1, 0, 1],
        [1, 0, 0, 0, 0],
        [1, 0, 0, 1, 0],
        [1, 1, 1, 1, 0],
        [1, 1, 0, 0, 0],
        [1, 1, 0, 0, 0],
    ];
    assemble(&[3, 2, 5], &["A", "B", "C", "D", "E"], &realized, &accurate)
}

pub fn table2() -> CitationSystem {
    let first = ([1, 1, 0, 1], [1, 1, 1, 0]);
    let second = ([1, 0, 1, 1], [0, 1, 1, 1]);
    let rows: Vec<_> = (0..10).map(|j| if j < 5 { first } else { second }).collect();
    let realized: Vec<[i64; 4]> = rows.iter().map(|r| r.0).collect();
    let accurate: Vec<[i64; 4]> = rows.iter().map(|r| r.1).collect();
    assemble(&[3, 2, 5], &["A", "B", "C", "D"], &realized, &accurate)
}

pub fn table3() -> CitationSystem {
    let over = ([1; 5], [0; 5]);
    let under = ([0; 5], [1; 5]);
    let exact = ([0, 1, 0, 1, 1], [0, 1, 0, 1, 1]);
    let rows = [over, under, over, under, over, under, exact, exact, exact, exact, exact];
    let realized: Vec<[i64; 5]> = rows.iter().map(|r| r.0).collect();
    let accurate: Vec<[i64; 5]> = rows.iter().map(|r| r.1).collect();
    assemble(&[3, 3, 5], &["A", "B", "C", "D", "E"], &realized, &accurate)
}

/// Authors are I, II, III, ... owning consecutive runs of citing papers
/// numbered from 1.
fn assemble<R: AsRef<[i64]>>(
    papers_per_author: &[usize],
    cited: &[&str],
    realized: &[R],
    accurate: &[R],
) -> CitationSystem {
    const ROMAN: [&str; 3] = ["I", "II", "III"];
    let authors = ROMAN[..papers_per_author.len()].iter().map(|s| s.to_string()).collect();
    let papers = papers_per_author
        .iter()
        .enumerate()
        .flat_map(|(i, &n)| std::iter::repeat_n(i, n))
        .enumerate()
        .map(|(j, author)| CitingPaper {
            id: (j + 1).to_string(),
            author,
        })
        .collect();
    let cited = cited.iter().map(|s| s.to_string()).collect();
    CitationSystem::build(authors, papers, cited, realized, accurate).expect("embedded fixture is valid")
}
