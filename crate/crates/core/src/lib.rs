//! Measurement error in citation decisions.
//!
//! A *social citation system* is a closed set of citing papers, each written
//! by one author, and cited papers. For every (citing, cited) pair the system
//! records the realized decision (was it cited?) and the accurate decision
//! (should it have been, because knowledge flowed?). This crate computes how
//! the mismatch between the two splits into accuracy, level noise, pattern
//! noise and bias, and ships tools around that decomposition:
//!
//! * [`model`]: the validated [`CitationSystem`] and its error matrix;
//! * [`metrics`]: per-paper, per-author and system statistics ([`analyze`]);
//! * [`simulate`]: a seeded generator with known latent noise, test-retest
//!   decomposition and aggregation experiments;
//! * [`audit`]: the omission indicator and citation justification tables;
//! * [`io`] and [`fixtures`]: file formats and the three built-in example
//!   systems;
//! * [`cli`]: the `citenoise` command line.
//!
//! ```
//! use citenoise::{analyze, fixtures};
//!
//! let report = analyze(&fixtures::table1());
//! assert!((report.pa - 0.54).abs() < 1e-12);
//! assert!((report.sigma_ln - 0.06).abs() < 0.005);
//! assert!((report.sigma_pn - 0.17).abs() < 0.005);
//! assert_eq!(report.bias.bias, -0.6);
//! ```

pub mod audit;
pub mod cli;
pub mod error;
pub mod fixtures;
pub mod io;
pub mod metrics;
pub mod model;
pub mod simulate;

pub use error::{Error, Result};
pub use metrics::{analyze, BiasDirection, NoiseReport};
pub use model::{classify_decision, BinaryMatrix, CitationSystem, CitingPaper, DecisionClass, ErrorMatrix};
