//! The `citenoise` command line.
//!
//! Exit codes: 0 on success, 1 for validation or parse failures, 2 for usage
//! errors (including unknown fixture names).

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::audit::{audit_justification, omission_indicator, parse_justification_table};
use crate::error::{Error, Result};
use crate::fixtures::builtin_fixture;
use crate::io::{self, CitationsDocument, ReportDocument, SimilarityDocument};
use crate::metrics::analyze;
use crate::simulate::{self, GenerativeConfig};

#[derive(Debug, Parser)]
#[command(
    name = "citenoise",
    version,
    about = "Noise, bias and accuracy of citation decisions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ReportFormat {
    Json,
    Table,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute accuracy, noise and bias for a citation system.
    #[command(group(clap::ArgGroup::new("source").required(true).args(["input", "fixture"])))]
    Analyze {
        /// System document (.json), or the realized sheet when --accurate is given.
        #[arg(long)]
        input: Option<PathBuf>,
        /// Accurate-decision CSV sheet; makes --input the realized CSV sheet.
        #[arg(long, requires = "input")]
        accurate: Option<PathBuf>,
        /// Analyze a built-in fixture instead of a file.
        #[arg(long)]
        fixture: Option<String>,
        #[arg(long, value_enum, default_value = "json")]
        format: ReportFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Generate a synthetic system from a generator config.
    Simulate {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
        /// Also write the latent flip probabilities here.
        #[arg(long)]
        latent: Option<PathBuf>,
    },
    /// Split pattern noise into stable and occasion parts via replicates.
    Retest {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Standard error of mean citing decisions versus sample size, as CSV.
    Aggregate {
        #[arg(long)]
        config: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        ns: Vec<usize>,
        #[arg(long)]
        trials: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Cross-check a citation justification table.
    Audit {
        /// Reference-list keys, one per line.
        #[arg(long)]
        refs: PathBuf,
        /// In-text citation keys in order of occurrence, one per line.
        #[arg(long)]
        intext: PathBuf,
        #[arg(long)]
        jt: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Flag uncited papers among each paper's most similar predecessors.
    Omissions {
        #[arg(long)]
        sim: PathBuf,
        #[arg(long)]
        citations: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Dump a built-in fixture (table1, table2, table3) as a system document.
    Fixtures {
        #[arg(long)]
        name: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Serialize)]
struct RetestDocument {
    seed: u64,
    replicates: usize,
    stable_sigma: f64,
    occasion_sigma: f64,
    total_sigma: f64,
    latent_stable_sd: f64,
    latent_level_sd: f64,
}

fn emit(out: Option<&Path>, stdout: &mut dyn Write, text: &str) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| Error::from(e).located(path.display().to_string())),
        None => stdout.write_all(text.as_bytes()).map_err(Error::from),
    }
}

fn load_config(path: &Path, seed: u64) -> Result<GenerativeConfig> {
    let text = io::read_text(path)?;
    let config: GenerativeConfig = io::from_json(&text, &path.display().to_string())?;
    Ok(GenerativeConfig { seed, ..config })
}

fn execute(command: Command, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<()> {
    match command {
        Command::Analyze {
            input,
            accurate,
            fixture,
            format,
            out,
        } => {
            let system = match (fixture, input) {
                (Some(name), _) => builtin_fixture(&name)?,
                (None, Some(input)) => io::load_system(&input, accurate.as_deref())?,
                (None, None) => unreachable!("clap requires a source"),
            };
            let doc = ReportDocument::new(&system, &analyze(&system));
            let text = match format {
                ReportFormat::Json => doc.to_json(),
                ReportFormat::Table => doc.to_table(),
            };
            emit(out.as_deref(), stdout, &text)
        }
        Command::Simulate {
            config,
            seed,
            out,
            latent,
        } => {
            let config = load_config(&config, seed)?;
            let (system, truth) = simulate::generate_system(&config)?;
            emit(Some(&out), stdout, &io::system_to_json(&system))?;
            if let Some(path) = latent {
                emit(Some(&path), stdout, &io::to_json(&truth))?;
            }
            Ok(())
        }
        Command::Retest { config, seed, out } => {
            let config = load_config(&config, seed)?;
            let set = simulate::replicate_decisions(&config)?;
            let d = simulate::decompose_pattern_noise(&set)?;
            let latent = set.latent().expect("generated replicates carry latent truth");
            let doc = RetestDocument {
                seed,
                replicates: d.replicates,
                stable_sigma: d.stable_sigma,
                occasion_sigma: d.occasion_sigma,
                total_sigma: d.total_sigma,
                latent_stable_sd: latent.stable_sd(set.base()),
                latent_level_sd: latent.level_sd(set.base()),
            };
            emit(out.as_deref(), stdout, &io::to_json(&doc))
        }
        Command::Aggregate {
            config,
            ns,
            trials,
            seed,
            out,
        } => {
            let config = load_config(&config, seed)?;
            let curve = simulate::aggregation_curve(&config, &ns, trials)?;
            emit(out.as_deref(), stdout, &io::aggregation_csv(&curve))
        }
        Command::Audit { refs, intext, jt, out } => {
            let refs = io::parse_key_list(&io::read_text(&refs)?);
            let in_text = io::parse_key_list(&io::read_text(&intext)?);
            let table =
                parse_justification_table(&io::read_text(&jt)?).map_err(|e| e.located(jt.display().to_string()))?;
            let report = audit_justification(refs.iter().map(String::as_str), &in_text, &table);
            emit(out.as_deref(), stdout, &io::to_json(&report))
        }
        Command::Omissions { sim, citations, k, out } => {
            let sim_name = sim.display().to_string();
            let sim_doc: SimilarityDocument = io::from_json(&io::read_text(&sim)?, &sim_name)?;
            let matrix = sim_doc.to_matrix().map_err(|e| e.located(&sim_name))?;
            let cit_name = citations.display().to_string();
            let cit_doc: CitationsDocument = io::from_json(&io::read_text(&citations)?, &cit_name)?;
            let cites = cit_doc.aligned_to(&matrix).map_err(|e| e.located(&cit_name))?;
            let flags = omission_indicator(&matrix, &cites, k)?;
            for w in &flags.warnings {
                let _ = writeln!(
                    stderr,
                    "warning: paper `{}` has {} earlier papers, fewer than k = {}; using all of them",
                    w.paper, w.available, w.requested
                );
            }
            emit(out.as_deref(), stdout, &io::to_json(&flags))
        }
        Command::Fixtures { name, out } => {
            let system = builtin_fixture(&name)?;
            emit(out.as_deref(), stdout, &io::system_to_json(&system))
        }
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// code. Documents go to `stdout` unless `--out` is given; diagnostics go to
/// `stderr`.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{e}");
                    0
                }
                _ => {
                    let _ = write!(stderr, "{e}");
                    2
                }
            };
        }
    };
    match execute(cli.command, stdout, stderr) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            match e.root() {
                Error::UnknownFixture(_) => 2,
                _ => 1,
            }
        }
    }
}
