//! Seeded generator for synthetic citation systems with known latent noise.
//!
//! The accurate matrix is drawn cell-wise with probability
//! `should_cite_prob`. Each realized decision then flips its accurate value
//! with probability
//!
//! ```text
//! pi[j][k] = clamp(base_error + author_offset[i(j)] + paper_offset[j] + push[j][k], 0, 1)
//! ```
//!
//! where author offsets are uniform on `±level_spread`, paper offsets are
//! uniform on `±interaction_spread`, and `push` applies `|bias_shift[k]|`
//! only to the cells whose flip moves the column count in the sign of
//! `bias_shift[k]` (accurate-0 cells for positive shifts, accurate-1 cells
//! for negative ones).
//!
//! Author offsets drive level noise, paper offsets drive the stable part of
//! pattern noise, and re-sampling the flips over the same probabilities
//! produces occasion noise.
//!
//! All randomness comes from ChaCha8 streams keyed by the master seed, with a
//! separate stream for each replicate and each Monte Carlo trial, so results
//! do not depend on thread count and adding replicates leaves earlier ones
//! untouched.

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::metrics;
use crate::model::{BinaryMatrix, CitationSystem, CitingPaper};

const STREAM_ACCURATE: u64 = 0;
const STREAM_LATENT: u64 = 1;
const STREAM_REPLICATE: u64 = 1 << 56;
const STREAM_AGGREGATE: u64 = 2 << 56;
const STREAM_BIAS_TRIAL: u64 = 3 << 56;

/// Share of cells whose unclamped flip probability may leave `[0, 1]`.
pub const MAX_CLAMPED_SHARE: f64 = 0.01;

fn substream(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

fn default_replicates() -> usize {
    1
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GenerativeConfig {
    pub n_authors: usize,
    pub papers_per_author: usize,
    pub n_cited: usize,
    /// Probability that a cell of the accurate matrix is 1. Also the citing
    /// probability used by [`aggregation_curve`].
    pub should_cite_prob: f64,
    /// Mean flip propensity.
    pub base_error: f64,
    /// Half-width of the uniform author offsets.
    #[serde(default)]
    pub level_spread: f64,
    /// Half-width of the uniform per-citing-paper offsets.
    #[serde(default)]
    pub interaction_spread: f64,
    /// Signed per-cited-paper push; empty means no bias.
    #[serde(default)]
    pub bias_shift: Vec<f64>,
    #[serde(default = "default_replicates")]
    pub replicates: usize,
    #[serde(default)]
    pub seed: u64,
}

impl Default for GenerativeConfig {
    fn default() -> Self {
        GenerativeConfig {
            n_authors: 3,
            papers_per_author: 3,
            n_cited: 5,
            should_cite_prob: 0.5,
            base_error: 0.0,
            level_spread: 0.0,
            interaction_spread: 0.0,
            bias_shift: Vec::new(),
            replicates: 1,
            seed: 0,
        }
    }
}

impl GenerativeConfig {
    pub fn n_citing(&self) -> usize {
        self.n_authors * self.papers_per_author
    }

    pub fn bias_for(&self, k: usize) -> f64 {
        self.bias_shift.get(k).copied().unwrap_or(0.0)
    }

    pub fn validate(&self) -> Result<()> {
        let invalid = |msg: String| Err(Error::InvalidConfig(msg));
        if self.n_authors == 0 || self.papers_per_author == 0 || self.n_cited == 0 {
            return invalid("n_authors, papers_per_author and n_cited must be positive".into());
        }
        for (name, p) in [
            ("should_cite_prob", self.should_cite_prob),
            ("base_error", self.base_error),
        ] {
            if !(0.0..=1.0).contains(&p) {
                return invalid(format!("{name} = {p} is not a probability"));
            }
        }
        for (name, s) in [
            ("level_spread", self.level_spread),
            ("interaction_spread", self.interaction_spread),
        ] {
            if !(s.is_finite() && s >= 0.0) {
                return invalid(format!("{name} = {s} must be finite and non-negative"));
            }
        }
        if !self.bias_shift.is_empty() && self.bias_shift.len() != self.n_cited {
            return invalid(format!(
                "bias_shift has {} entries for {} cited papers",
                self.bias_shift.len(),
                self.n_cited
            ));
        }
        if let Some(b) = self.bias_shift.iter().find(|b| !(b.is_finite() && b.abs() <= 1.0)) {
            return invalid(format!("bias_shift entry {b} must lie in [-1, 1]"));
        }
        if self.replicates == 0 {
            return invalid("replicates must be at least 1".into());
        }
        Ok(())
    }
}

/// The probabilities a synthetic system was drawn from.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LatentTruth {
    pub author_offsets: Vec<f64>,
    /// Stable offset of each citing paper from its author's level.
    pub paper_offsets: Vec<f64>,
    pub n_cited: usize,
    /// Row-major J×K flip probabilities, exactly as used when sampling.
    pub flip_prob: Vec<f64>,
}

impl LatentTruth {
    pub fn n_citing(&self) -> usize {
        self.paper_offsets.len()
    }

    pub fn flip_prob(&self, j: usize, k: usize) -> f64 {
        self.flip_prob[j * self.n_cited + k]
    }

    /// Expected error rate of citing paper j: mean flip probability of its row.
    pub fn paper_propensity(&self, j: usize) -> f64 {
        let row = &self.flip_prob[j * self.n_cited..(j + 1) * self.n_cited];
        row.iter().sum::<f64>() / self.n_cited as f64
    }

    /// Latent counterpart of level noise: paper-weighted standard deviation
    /// of author mean propensities around the system mean.
    pub fn level_sd(&self, system: &CitationSystem) -> f64 {
        let props: Vec<f64> = (0..self.n_citing()).map(|j| self.paper_propensity(j)).collect();
        let overall = props.iter().sum::<f64>() / props.len() as f64;
        let weighted: f64 = (0..system.n_authors())
            .map(|i| {
                let papers = system.papers_of(i);
                let m = papers.iter().map(|&j| props[j]).sum::<f64>() / papers.len() as f64;
                papers.len() as f64 * (m - overall).powi(2)
            })
            .sum();
        (weighted / props.len() as f64).sqrt()
    }

    /// Latent counterpart of stable pattern noise: paper-weighted
    /// within-author standard deviation of paper propensities.
    pub fn stable_sd(&self, system: &CitationSystem) -> f64 {
        let props: Vec<f64> = (0..self.n_citing()).map(|j| self.paper_propensity(j)).collect();
        let weighted: f64 = (0..system.n_authors())
            .map(|i| {
                let papers = system.papers_of(i);
                let m = papers.iter().map(|&j| props[j]).sum::<f64>() / papers.len() as f64;
                papers.iter().map(|&j| (props[j] - m).powi(2)).sum::<f64>()
            })
            .sum();
        (weighted / props.len() as f64).sqrt()
    }

    /// Expected bias given the accurate matrix: every flip of an accurate-0
    /// cell adds a citation, every flip of an accurate-1 cell removes one.
    pub fn expected_bias(&self, accurate: &BinaryMatrix) -> f64 {
        let mut total = 0.0;
        for j in 0..accurate.rows() {
            for k in 0..accurate.cols() {
                let p = self.flip_prob(j, k);
                total += if accurate.get(j, k) { -p } else { p };
            }
        }
        total / self.n_cited as f64
    }
}

/// Several realized matrices over the same accurate matrix and authorship.
#[derive(Debug, Clone, PartialEq)]
pub struct ReplicateSet {
    base: CitationSystem,
    realized: Vec<BinaryMatrix>,
    latent: Option<LatentTruth>,
}

impl ReplicateSet {
    /// Wraps observed repeat decisions. `base` supplies authorship and the
    /// accurate matrix; each entry of `realized` is one occasion.
    pub fn from_observations(base: &CitationSystem, realized: Vec<BinaryMatrix>) -> Result<Self> {
        for (t, r) in realized.iter().enumerate() {
            if r.rows() != base.n_citing() || r.cols() != base.n_cited() {
                return Err(Error::DimensionMismatch {
                    what: format!("replicate {t} shape"),
                    expected: base.n_citing() * base.n_cited(),
                    found: r.rows() * r.cols(),
                });
            }
        }
        Ok(ReplicateSet {
            base: base.clone(),
            realized,
            latent: None,
        })
    }

    pub fn len(&self) -> usize {
        self.realized.len()
    }

    pub fn is_empty(&self) -> bool {
        self.realized.is_empty()
    }

    pub fn realized(&self, t: usize) -> &BinaryMatrix {
        &self.realized[t]
    }

    pub fn accurate(&self) -> &BinaryMatrix {
        self.base.accurate()
    }

    pub fn latent(&self) -> Option<&LatentTruth> {
        self.latent.as_ref()
    }

    /// The full citation system observed on occasion `t`.
    pub fn system(&self, t: usize) -> CitationSystem {
        CitationSystem::from_matrices(
            self.base.author_ids().to_vec(),
            self.base.citing_papers().to_vec(),
            self.base.cited_paper_ids().to_vec(),
            self.realized[t].clone(),
            self.base.accurate().clone(),
        )
        .expect("replicates share the base system's shape")
    }

    /// Authorship and accurate matrix shared by all occasions, with the
    /// realized matrix of occasion 0.
    pub fn base(&self) -> &CitationSystem {
        &self.base
    }
}

struct Skeleton {
    author_ids: Vec<String>,
    citing_papers: Vec<CitingPaper>,
    cited_ids: Vec<String>,
    accurate: BinaryMatrix,
    latent: LatentTruth,
}

impl Skeleton {
    fn new(config: &GenerativeConfig) -> Result<Self> {
        config.validate()?;
        let n_citing = config.n_citing();
        let n_cited = config.n_cited;

        let mut rng = substream(config.seed, STREAM_ACCURATE);
        let accurate = BinaryMatrix::from_fn(n_citing, n_cited, |_, _| rng.random::<f64>() < config.should_cite_prob);

        let mut rng = substream(config.seed, STREAM_LATENT);
        let mut spread = |half_width: f64| (2.0 * rng.random::<f64>() - 1.0) * half_width;
        let author_offsets: Vec<f64> = (0..config.n_authors).map(|_| spread(config.level_spread)).collect();
        let paper_offsets: Vec<f64> = (0..n_citing).map(|_| spread(config.interaction_spread)).collect();

        let mut flip_prob = Vec::with_capacity(n_citing * n_cited);
        let mut out_of_range = 0usize;
        for j in 0..n_citing {
            let base = config.base_error + author_offsets[j / config.papers_per_author] + paper_offsets[j];
            for k in 0..n_cited {
                let b = config.bias_for(k);
                let push = match (b > 0.0, accurate.get(j, k)) {
                    (true, false) => b,
                    (false, true) if b < 0.0 => -b,
                    _ => 0.0,
                };
                let p = base + push;
                if !(-1e-12..=1.0 + 1e-12).contains(&p) {
                    out_of_range += 1;
                }
                flip_prob.push(p.clamp(0.0, 1.0));
            }
        }
        let share = out_of_range as f64 / (n_citing * n_cited) as f64;
        if share > MAX_CLAMPED_SHARE {
            return Err(Error::InvalidConfig(format!(
                "{:.1}% of flip probabilities fall outside [0, 1] before clamping (limit {:.0}%)",
                100.0 * share,
                100.0 * MAX_CLAMPED_SHARE
            )));
        }

        let width = config.papers_per_author.to_string().len();
        let author_ids = (0..config.n_authors).map(|i| format!("a{}", i + 1)).collect();
        let citing_papers = (0..n_citing)
            .map(|j| CitingPaper {
                id: format!(
                    "a{}p{:0width$}",
                    j / config.papers_per_author + 1,
                    j % config.papers_per_author + 1
                ),
                author: j / config.papers_per_author,
            })
            .collect();
        let cited_ids = (0..n_cited).map(|k| format!("c{}", k + 1)).collect();

        Ok(Skeleton {
            author_ids,
            citing_papers,
            cited_ids,
            accurate,
            latent: LatentTruth {
                author_offsets,
                paper_offsets,
                n_cited,
                flip_prob,
            },
        })
    }

    /// One occasion of flip sampling.
    fn sample(&self, seed: u64, occasion: usize) -> BinaryMatrix {
        let mut rng = substream(seed, STREAM_REPLICATE + occasion as u64);
        BinaryMatrix::from_fn(self.accurate.rows(), self.accurate.cols(), |j, k| {
            let flip = rng.random::<f64>() < self.latent.flip_prob(j, k);
            self.accurate.get(j, k) ^ flip
        })
    }

    fn system(&self, realized: BinaryMatrix) -> CitationSystem {
        CitationSystem::from_matrices(
            self.author_ids.clone(),
            self.citing_papers.clone(),
            self.cited_ids.clone(),
            realized,
            self.accurate.clone(),
        )
        .expect("generated system is valid")
    }
}

/// Draws one synthetic system. The realized matrix is occasion 0 of the
/// replicate sequence, so it equals `replicate_decisions(config).realized(0)`.
pub fn generate_system(config: &GenerativeConfig) -> Result<(CitationSystem, LatentTruth)> {
    let skeleton = Skeleton::new(config)?;
    let realized = skeleton.sample(config.seed, 0);
    let system = skeleton.system(realized);
    Ok((system, skeleton.latent))
}

/// Samples `config.replicates` independent occasions over one latent truth.
pub fn replicate_decisions(config: &GenerativeConfig) -> Result<ReplicateSet> {
    if config.replicates < 2 {
        return Err(Error::InvalidConfig(format!(
            "test-retest needs at least 2 replicates, got {}",
            config.replicates
        )));
    }
    let skeleton = Skeleton::new(config)?;
    let realized: Vec<BinaryMatrix> = (0..config.replicates)
        .into_par_iter()
        .map(|t| skeleton.sample(config.seed, t))
        .collect();
    let base = skeleton.system(realized[0].clone());
    Ok(ReplicateSet {
        base,
        realized,
        latent: Some(skeleton.latent),
    })
}

/// Split of pattern variance into a part that persists across occasions and
/// a part that does not.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PatternDecomposition {
    pub stable_sigma: f64,
    pub occasion_sigma: f64,
    /// Root of the total within-author variance pooled over occasions.
    pub total_sigma: f64,
    pub replicates: usize,
}

/// Test-retest decomposition of pattern noise.
///
/// With `pe[t][j]` the error rate of paper j on occasion t, `m_i` the mean of
/// author i over all their papers and occasions, and `p_j` the mean of paper
/// j over occasions:
///
/// * total variance: mean over (t, j) of `(pe[t][j] - m_i)²`
/// * occasion variance: mean over (t, j) of `(pe[t][j] - p_j)²`
/// * stable variance: total minus occasion, which equals the paper-weighted
///   within-author variance of `p_j`.
pub fn decompose_pattern_noise(replicates: &ReplicateSet) -> Result<PatternDecomposition> {
    let t_count = replicates.len();
    if t_count < 2 {
        return Err(Error::InsufficientReplicates(t_count));
    }
    let n_citing = replicates.base.n_citing();
    let n_cited = replicates.base.n_cited() as f64;
    let accurate = replicates.accurate();
    let pe: Vec<Vec<f64>> = replicates
        .realized
        .iter()
        .map(|r| {
            (0..n_citing)
                .map(|j| {
                    let wrong = r.row(j).iter().zip(accurate.row(j)).filter(|(x, y)| x != y).count();
                    wrong as f64 / n_cited
                })
                .collect()
        })
        .collect();
    let paper_mean: Vec<f64> = (0..n_citing)
        .map(|j| pe.iter().map(|occ| occ[j]).sum::<f64>() / t_count as f64)
        .collect();

    let mut total = 0.0;
    for papers in (0..replicates.base.n_authors()).map(|i| replicates.base.papers_of(i)) {
        let author_mean = papers.iter().map(|&j| paper_mean[j]).sum::<f64>() / papers.len() as f64;
        total += pe
            .iter()
            .flat_map(|occ| papers.iter().map(move |&j| (occ[j] - author_mean).powi(2)))
            .sum::<f64>();
    }
    let occasion: f64 = pe
        .iter()
        .flat_map(|occ| occ.iter().zip(&paper_mean).map(|(x, m)| (x - m).powi(2)))
        .sum();
    let cells = (t_count * n_citing) as f64;
    let total = total / cells;
    let occasion = occasion / cells;
    Ok(PatternDecomposition {
        stable_sigma: (total - occasion).max(0.0).sqrt(),
        occasion_sigma: occasion.sqrt(),
        total_sigma: total.sqrt(),
        replicates: t_count,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AggregationPoint {
    pub n: usize,
    pub empirical_se: f64,
    pub theoretical_se: f64,
}

pub const MIN_TRIALS: usize = 100;

fn sample_sd(values: &[f64]) -> f64 {
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    (values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (n - 1.0)).sqrt()
}

/// Standard error of the mean of `n` independent Bernoulli citing decisions
/// with probability `config.should_cite_prob`, estimated from `trials`
/// simulated means and compared with `sqrt(p(1-p)/n)`.
pub fn aggregation_curve(
    config: &GenerativeConfig,
    sample_sizes: &[usize],
    trials: usize,
) -> Result<Vec<AggregationPoint>> {
    let p = config.should_cite_prob;
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidConfig(format!(
            "should_cite_prob = {p} is not a probability"
        )));
    }
    if trials < MIN_TRIALS {
        return Err(Error::InvalidConfig(format!(
            "trials must be at least {MIN_TRIALS}, got {trials}"
        )));
    }
    if sample_sizes.is_empty() || sample_sizes.contains(&0) {
        return Err(Error::InvalidConfig(
            "sample sizes must be non-empty and positive".into(),
        ));
    }
    Ok(sample_sizes
        .iter()
        .enumerate()
        .map(|(idx, &n)| {
            let means: Vec<f64> = (0..trials)
                .into_par_iter()
                .map(|trial| {
                    let stream = STREAM_AGGREGATE | ((idx as u64) << 32) | trial as u64;
                    let mut rng = substream(config.seed, stream);
                    let hits = (0..n).filter(|_| rng.random::<f64>() < p).count();
                    hits as f64 / n as f64
                })
                .collect();
            AggregationPoint {
                n,
                empirical_se: sample_sd(&means),
                theoretical_se: (p * (1.0 - p) / n as f64).sqrt(),
            }
        })
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BiasRecovery {
    /// Bias implied by the configured shifts and accurate-matrix density,
    /// ignoring clamping.
    pub expected_bias: f64,
    /// Mean of the measured bias over all trials.
    pub mean_bias: f64,
    /// Standard error of `mean_bias`.
    pub std_error: f64,
    pub trials: usize,
}

/// Analytic expected bias of the generator, averaging over the accurate
/// matrix as well as the flips.
pub fn analytic_bias(config: &GenerativeConfig) -> f64 {
    let q = config.should_cite_prob;
    let e0 = config.base_error;
    let per_column: f64 = (0..config.n_cited)
        .map(|k| {
            let b = config.bias_for(k);
            (1.0 - q) * (e0 + b.max(0.0)) - q * (e0 + (-b).max(0.0))
        })
        .sum();
    config.n_citing() as f64 * per_column / config.n_cited as f64
}

/// Generates `trials` independent systems and averages their measured bias.
pub fn bias_recovery(config: &GenerativeConfig, trials: usize) -> Result<BiasRecovery> {
    config.validate()?;
    if trials < MIN_TRIALS {
        return Err(Error::InvalidConfig(format!(
            "trials must be at least {MIN_TRIALS}, got {trials}"
        )));
    }
    let biases: Vec<f64> = (0..trials)
        .into_par_iter()
        .map(|trial| {
            let seed = substream(config.seed, STREAM_BIAS_TRIAL | trial as u64).next_u64();
            let trial_config = GenerativeConfig { seed, ..config.clone() };
            generate_system(&trial_config).map(|(system, _)| metrics::citation_bias(&system).bias)
        })
        .collect::<Result<_>>()?;
    let mean = biases.iter().sum::<f64>() / trials as f64;
    Ok(BiasRecovery {
        expected_bias: analytic_bias(config),
        mean_bias: mean,
        std_error: sample_sd(&biases) / (trials as f64).sqrt(),
        trials,
    })
}
