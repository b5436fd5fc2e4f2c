//! Accuracy, noise and bias statistics for a [`CitationSystem`].
//!
//! Every citing paper j gets an error rate `pe_j`, the fraction of its K
//! decisions that disagree with the accurate matrix. The spread of those
//! rates splits into two parts:
//!
//! * **level noise** (`sigma_ln`): how far each author's mean error rate sits
//!   from the system-wide rate, weighted by the author's paper count;
//! * **pattern noise** (`sigma_pn`): how far an author's individual papers
//!   scatter around that author's own mean.
//!
//! Both are population standard deviations over citing papers, so
//! `sigma_sys² = sigma_ln² + sigma_pn²` is the law of total variance with
//! authors as groups.
//!
//! Bias is a separate, signed quantity: mean times-cited minus mean expected
//! citations across cited papers.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::CitationSystem;

/// Per-citing-paper proportions over the K cited papers.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CitingPaperStats {
    /// Share of cited papers actually cited.
    pub pr: f64,
    /// Share of decisions that match the accurate matrix.
    pub pa: f64,
    /// Share of erroneous decisions, `1 - pa`.
    pub pe: f64,
}

/// Per-cited-paper aggregates over the J citing papers.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CitedPaperStats {
    pub pr: f64,
    /// Times cited (column sum of realized).
    pub tc: usize,
    /// Expected citations (column sum of accurate).
    pub ec: usize,
    pub pa: f64,
    pub pe: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BiasDirection {
    /// Cited papers receive more citations than knowledge flow warrants.
    Over,
    /// Cited papers receive fewer citations than knowledge flow warrants.
    Under,
    None,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BiasResult {
    pub mean_tc: f64,
    pub mean_ec: f64,
    /// `mean_tc - mean_ec`; positive means over-citation.
    pub bias: f64,
    pub direction: BiasDirection,
}

/// Everything [`analyze`] computes for one system.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NoiseReport {
    pub citing: Vec<CitingPaperStats>,
    /// Mean error rate of each author over their own papers.
    pub author_error_rates: Vec<f64>,
    /// Within-author standard deviation of per-paper error rates.
    pub author_pattern_noise: Vec<f64>,
    pub cited: Vec<CitedPaperStats>,
    pub pa: f64,
    pub pe: f64,
    pub sigma_ln: f64,
    pub sigma_pn: f64,
    pub sigma_sys: f64,
    pub bias: BiasResult,
}

fn check_index(kind: &'static str, index: usize, len: usize) -> Result<()> {
    if index < len {
        Ok(())
    } else {
        Err(Error::IndexOutOfRange { kind, index, len })
    }
}

fn citing_stats_unchecked(system: &CitationSystem, j: usize) -> CitingPaperStats {
    let k = system.n_cited() as f64;
    let realized = system.realized().row(j);
    let accurate = system.accurate().row(j);
    let cited = realized.iter().filter(|&&r| r).count();
    let correct = realized.iter().zip(accurate).filter(|(r, a)| r == a).count();
    let pa = correct as f64 / k;
    CitingPaperStats {
        pr: cited as f64 / k,
        pa,
        pe: 1.0 - pa,
    }
}

pub fn citing_paper_stats(system: &CitationSystem, j: usize) -> Result<CitingPaperStats> {
    check_index("citing paper", j, system.n_citing())?;
    Ok(citing_stats_unchecked(system, j))
}

fn error_rates(system: &CitationSystem) -> Vec<f64> {
    (0..system.n_citing())
        .map(|j| citing_stats_unchecked(system, j).pe)
        .collect()
}

fn mean_of(values: impl ExactSizeIterator<Item = f64>) -> f64 {
    let n = values.len() as f64;
    values.sum::<f64>() / n
}

/// Unweighted mean of `pe` over the author's papers.
pub fn author_error_rate(system: &CitationSystem, i: usize) -> Result<f64> {
    check_index("author", i, system.n_authors())?;
    let pe = error_rates(system);
    Ok(author_mean(&pe, system.papers_of(i)))
}

fn author_mean(pe: &[f64], papers: &[usize]) -> f64 {
    mean_of(papers.iter().map(|&j| pe[j]))
}

fn author_spread(pe: &[f64], papers: &[usize]) -> f64 {
    let mean = author_mean(pe, papers);
    mean_of(papers.iter().map(|&j| (mean - pe[j]).powi(2))).sqrt()
}

pub fn cited_paper_stats(system: &CitationSystem, k: usize) -> Result<CitedPaperStats> {
    check_index("cited paper", k, system.n_cited())?;
    let j = system.n_citing() as f64;
    let tc = system.realized().col_sum(k);
    let ec = system.accurate().col_sum(k);
    let correct = (0..system.n_citing())
        .filter(|&row| system.realized().get(row, k) == system.accurate().get(row, k))
        .count();
    let pa = correct as f64 / j;
    Ok(CitedPaperStats {
        pr: tc as f64 / j,
        tc,
        ec,
        pa,
        pe: 1.0 - pa,
    })
}

/// System accuracy `(pa, pe)`: mean over citing papers of `pa_j`, and its
/// complement.
pub fn system_accuracy(system: &CitationSystem) -> (f64, f64) {
    let pa = mean_of((0..system.n_citing()).map(|j| citing_stats_unchecked(system, j).pa));
    (pa, 1.0 - pa)
}

/// Paper-weighted standard deviation of author error rates around the
/// system error rate.
pub fn level_noise(system: &CitationSystem) -> f64 {
    let pe = error_rates(system);
    level_noise_from(system, &pe)
}

fn level_noise_from(system: &CitationSystem, pe: &[f64]) -> f64 {
    let overall = mean_of(pe.iter().copied());
    let weighted: f64 = (0..system.n_authors())
        .map(|i| {
            let papers = system.papers_of(i);
            papers.len() as f64 * (overall - author_mean(pe, papers)).powi(2)
        })
        .sum();
    (weighted / pe.len() as f64).sqrt()
}

/// Standard deviation of the author's per-paper error rates around the
/// author's own mean. Zero for a single-paper author.
pub fn author_pattern_noise(system: &CitationSystem, i: usize) -> Result<f64> {
    check_index("author", i, system.n_authors())?;
    let pe = error_rates(system);
    Ok(author_spread(&pe, system.papers_of(i)))
}

/// Root of the paper-weighted mean of squared author pattern noise.
pub fn pattern_noise(system: &CitationSystem) -> f64 {
    let pe = error_rates(system);
    pattern_noise_from(system, &pe)
}

fn pattern_noise_from(system: &CitationSystem, pe: &[f64]) -> f64 {
    let weighted: f64 = (0..system.n_authors())
        .map(|i| {
            let papers = system.papers_of(i);
            papers.len() as f64 * author_spread(pe, papers).powi(2)
        })
        .sum();
    (weighted / pe.len() as f64).sqrt()
}

pub fn system_noise(system: &CitationSystem) -> f64 {
    level_noise(system).hypot(pattern_noise(system))
}

pub fn citation_bias(system: &CitationSystem) -> BiasResult {
    let k = system.n_cited();
    let total_tc = system.realized().count_ones();
    let total_ec = system.accurate().count_ones();
    // integer difference first so that cancellation is exact
    let diff = total_tc as i64 - total_ec as i64;
    BiasResult {
        mean_tc: total_tc as f64 / k as f64,
        mean_ec: total_ec as f64 / k as f64,
        bias: diff as f64 / k as f64,
        direction: match diff.signum() {
            1 => BiasDirection::Over,
            -1 => BiasDirection::Under,
            _ => BiasDirection::None,
        },
    }
}

pub fn analyze(system: &CitationSystem) -> NoiseReport {
    let citing: Vec<_> = (0..system.n_citing())
        .map(|j| citing_stats_unchecked(system, j))
        .collect();
    let pe: Vec<f64> = citing.iter().map(|s| s.pe).collect();
    let author_error_rates = (0..system.n_authors())
        .map(|i| author_mean(&pe, system.papers_of(i)))
        .collect();
    let author_pattern_noise = (0..system.n_authors())
        .map(|i| author_spread(&pe, system.papers_of(i)))
        .collect();
    let cited = (0..system.n_cited())
        .map(|k| cited_paper_stats(system, k).expect("index in range"))
        .collect();
    let pa = mean_of(citing.iter().map(|s| s.pa));
    let sigma_ln = level_noise_from(system, &pe);
    let sigma_pn = pattern_noise_from(system, &pe);
    NoiseReport {
        citing,
        author_error_rates,
        author_pattern_noise,
        cited,
        pa,
        pe: 1.0 - pa,
        sigma_ln,
        sigma_pn,
        sigma_sys: sigma_ln.hypot(sigma_pn),
        bias: citation_bias(system),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{table1, table2, table3};
    use crate::model::CitingPaper;
    use approx::assert_abs_diff_eq;

    const PRINTED: f64 = 0.005;

    fn system(authors: &[usize], r: &[Vec<i64>], a: &[Vec<i64>]) -> CitationSystem {
        let n_authors = authors.iter().max().unwrap() + 1;
        CitationSystem::build(
            (0..n_authors).map(|i| format!("a{i}")).collect(),
            authors
                .iter()
                .enumerate()
                .map(|(j, &author)| CitingPaper {
                    id: format!("p{j}"),
                    author,
                })
                .collect(),
            (0..r[0].len()).map(|k| format!("c{k}")).collect(),
            r,
            a,
        )
        .unwrap()
    }

    #[test]
    fn table1_citing_papers() {
        let s = table1();
        let p1 = citing_paper_stats(&s, 0).unwrap();
        assert_abs_diff_eq!(p1.pr, 0.40, epsilon = 1e-12);
        assert_abs_diff_eq!(p1.pa, 0.20, epsilon = 1e-12);
        assert_abs_diff_eq!(p1.pe, 0.80, epsilon = 1e-12);
        let p2 = citing_paper_stats(&s, 1).unwrap();
        assert_abs_diff_eq!(p2.pa, 0.80, epsilon = 1e-12);
        assert_abs_diff_eq!(p2.pe, 0.20, epsilon = 1e-12);
        assert!(matches!(
            citing_paper_stats(&s, 10),
            Err(Error::IndexOutOfRange { index: 10, len: 10, .. })
        ));
    }

    #[test]
    fn table1_authors() {
        let s = table1();
        assert_abs_diff_eq!(author_error_rate(&s, 0).unwrap(), 1.6 / 3.0, epsilon = 1e-12);
        assert_abs_diff_eq!(author_error_rate(&s, 0).unwrap(), 0.53, epsilon = PRINTED);
        assert_abs_diff_eq!(author_error_rate(&s, 2).unwrap(), 0.40, epsilon = 1e-12);
        assert_abs_diff_eq!(author_pattern_noise(&s, 0).unwrap(), 0.25, epsilon = PRINTED);
        assert_abs_diff_eq!(author_pattern_noise(&s, 1).unwrap(), 0.10, epsilon = 1e-12);
        assert!(author_error_rate(&s, 3).is_err());
        assert!(author_pattern_noise(&s, 3).is_err());
    }

    #[test]
    fn table1_cited_papers() {
        let s = table1();
        let a = cited_paper_stats(&s, 0).unwrap();
        assert_eq!((a.tc, a.ec), (6, 10));
        assert_abs_diff_eq!(a.pr, 0.6, epsilon = 1e-12);
        assert_abs_diff_eq!(a.pa, 0.6, epsilon = 1e-12);
        assert_abs_diff_eq!(a.pe, 0.4, epsilon = 1e-12);
        let c = cited_paper_stats(&s, 2).unwrap();
        assert_eq!((c.tc, c.ec), (5, 2));
        assert_abs_diff_eq!(c.pa, 0.7, epsilon = 1e-12);
        assert!(cited_paper_stats(&s, 5).is_err());
    }

    #[test]
    fn never_cite_consensus_column() {
        let s = system(&[0, 0], &[vec![0, 1], vec![0, 0]], &[vec![0, 1], vec![0, 1]]);
        let c = cited_paper_stats(&s, 0).unwrap();
        assert_eq!((c.tc, c.ec), (0, 0));
        assert_eq!(c.pa, 1.0);
    }

    #[test]
    fn table1_system_level() {
        let s = table1();
        let (pa, pe) = system_accuracy(&s);
        assert_abs_diff_eq!(pa, 0.54, epsilon = 1e-12);
        assert_abs_diff_eq!(pe, 0.46, epsilon = 1e-12);
        assert_abs_diff_eq!(level_noise(&s), 0.06, epsilon = PRINTED);
        assert_abs_diff_eq!(pattern_noise(&s), 0.17, epsilon = PRINTED);
        assert_abs_diff_eq!(system_noise(&s), 0.18, epsilon = PRINTED);
        let b = citation_bias(&s);
        assert_eq!(b.mean_ec, 5.2);
        assert_eq!(b.mean_tc, 4.6);
        assert_eq!(b.bias, -0.6);
        assert_eq!(b.direction, BiasDirection::Under);
    }

    // Full-precision values from hand summation of the table rows:
    // author rates 8/15, 1/2, 2/5; system rate 0.46.
    #[test]
    fn table1_full_precision() {
        let s = table1();
        let ln = ((3.0 * (0.46f64 - 8.0 / 15.0).powi(2) + 2.0 * 0.04f64.powi(2) + 5.0 * 0.06f64.powi(2)) / 10.0).sqrt();
        assert_abs_diff_eq!(level_noise(&s), ln, epsilon = 1e-12);
        let v1 = ((0.8f64 - 8.0 / 15.0).powi(2) + (0.2f64 - 8.0 / 15.0).powi(2) + (0.6f64 - 8.0 / 15.0).powi(2)) / 3.0;
        let v2 = 0.01;
        let v3 = 0.08 / 5.0;
        let pn = ((3.0 * v1 + 2.0 * v2 + 5.0 * v3) / 10.0).sqrt();
        assert_abs_diff_eq!(pattern_noise(&s), pn, epsilon = 1e-12);
        assert_abs_diff_eq!(pn, 0.1693, epsilon = 1e-4);
    }

    #[test]
    fn table2_derived() {
        let r = analyze(&table2());
        assert_abs_diff_eq!(r.pa, 0.50, epsilon = 1e-12);
        assert_eq!(r.sigma_ln, 0.0);
        assert_eq!(r.sigma_pn, 0.0);
        assert_eq!(r.bias.mean_tc, 7.5);
        assert_eq!(r.bias.mean_ec, 7.5);
        assert_eq!(r.bias.bias, 0.0);
        assert_eq!(r.bias.direction, BiasDirection::None);
    }

    #[test]
    fn table3_values() {
        let s = table3();
        let (_, pe) = system_accuracy(&s);
        assert_abs_diff_eq!(pe, 6.0 / 11.0, epsilon = 1e-12);
        assert_abs_diff_eq!(level_noise(&s), (330.0f64 / 1331.0).sqrt(), epsilon = 1e-12);
        assert_abs_diff_eq!(level_noise(&s), 0.50, epsilon = PRINTED);
        assert_eq!(pattern_noise(&s), 0.0);
        assert_abs_diff_eq!(system_noise(&s), (330.0f64 / 1331.0).sqrt(), epsilon = 1e-12);
        let b = citation_bias(&s);
        assert_eq!(b.bias, 0.0);
        for k in 0..s.n_cited() {
            let c = cited_paper_stats(&s, k).unwrap();
            assert_eq!(c.tc, c.ec);
        }
    }

    #[test]
    fn perfect_world() {
        let rows = vec![vec![1, 0, 1], vec![0, 0, 1], vec![1, 1, 1]];
        let s = system(&[0, 1, 1], &rows, &rows);
        let r = analyze(&s);
        assert_eq!(r.pa, 1.0);
        assert!(r.citing.iter().all(|c| c.pa == 1.0 && c.pe == 0.0));
        assert_eq!((r.sigma_ln, r.sigma_pn, r.sigma_sys), (0.0, 0.0, 0.0));
        assert_eq!(r.bias.bias, 0.0);
        assert_eq!(author_error_rate(&s, 0).unwrap(), 0.0);
    }

    #[test]
    fn equal_author_rates_have_no_level_noise() {
        // each author: one paper with 1 error, one with 3 errors (K = 4)
        let r = vec![vec![1, 0, 0, 0], vec![1, 1, 1, 0], vec![0, 0, 0, 1], vec![0, 1, 1, 1]];
        let a = vec![vec![0; 4]; 4];
        let s = system(&[0, 0, 1, 1], &r, &a);
        assert_abs_diff_eq!(level_noise(&s), 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(pattern_noise(&s), 0.25, epsilon = 1e-12);
    }

    #[test]
    fn single_author_has_no_level_noise() {
        let s = system(
            &[0, 0, 0],
            &[vec![1, 0], vec![0, 0], vec![1, 1]],
            &[vec![0, 0], vec![0, 0], vec![0, 0]],
        );
        assert_eq!(level_noise(&s), 0.0);
    }

    #[test]
    fn single_paper_author_has_no_pattern_noise() {
        let s = system(
            &[0, 1, 1],
            &[vec![1, 0], vec![0, 0], vec![1, 1]],
            &[vec![0, 0], vec![0, 0], vec![0, 0]],
        );
        assert_eq!(author_pattern_noise(&s, 0).unwrap(), 0.0);
    }

    /// Pattern noise recomputed directly from the raw decision cells, without
    /// going through any helper of this module.
    fn brute_force_pattern_noise(authors: &[usize], r: &[Vec<i64>], a: &[Vec<i64>]) -> f64 {
        let pe: Vec<f64> = r
            .iter()
            .zip(a)
            .map(|(rr, aa)| rr.iter().zip(aa).filter(|(x, y)| x != y).count() as f64 / rr.len() as f64)
            .collect();
        let n_authors = authors.iter().max().unwrap() + 1;
        let mut acc = 0.0;
        for i in 0..n_authors {
            let mine: Vec<f64> = (0..pe.len()).filter(|&j| authors[j] == i).map(|j| pe[j]).collect();
            let m = mine.iter().sum::<f64>() / mine.len() as f64;
            let var = mine.iter().map(|x| (x - m) * (x - m)).sum::<f64>() / mine.len() as f64;
            acc += mine.len() as f64 * var;
        }
        (acc / pe.len() as f64).sqrt()
    }

    #[test]
    fn two_author_pattern_noise_oracle() {
        let authors = [0, 0, 1, 1];
        let r = vec![vec![1, 1, 0], vec![0, 0, 0], vec![1, 0, 1], vec![1, 1, 1]];
        let a = vec![vec![1, 0, 0], vec![1, 1, 1], vec![1, 0, 1], vec![0, 0, 1]];
        // author 0: pe = 1/3, 1 -> var 1/9; author 1: pe = 0, 2/3 -> var 1/9
        let expected = brute_force_pattern_noise(&authors, &r, &a);
        assert_abs_diff_eq!(expected, 1.0 / 3.0, epsilon = 1e-12);
        assert_abs_diff_eq!(pattern_noise(&system(&authors, &r, &a)), expected, epsilon = 1e-12);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        prop_compose! {
            fn arb_system()(n_authors in 1usize..5, j in 1usize..12, k in 1usize..8)
                (assign in prop::collection::vec(0..n_authors, j),
                 r in prop::collection::vec(prop::collection::vec(0i64..2, k), j),
                 a in prop::collection::vec(prop::collection::vec(0i64..2, k), j),
                 n_authors in Just(n_authors))
                -> (Vec<usize>, Vec<Vec<i64>>, Vec<Vec<i64>>)
            {
                // force every author to own at least one paper
                let mut assign = assign;
                for i in 0..n_authors.min(assign.len()) {
                    assign[i] = i;
                }
                (assign, r, a)
            }
        }

        fn permuted(
            authors: &[usize],
            r: &[Vec<i64>],
            a: &[Vec<i64>],
            rows: &[usize],
            cols: &[usize],
            author_perm: &[usize],
        ) -> (Vec<usize>, Vec<Vec<i64>>, Vec<Vec<i64>>) {
            let pick = |m: &[Vec<i64>]| -> Vec<Vec<i64>> {
                rows.iter().map(|&j| cols.iter().map(|&k| m[j][k]).collect()).collect()
            };
            (
                rows.iter().map(|&j| author_perm[authors[j]]).collect(),
                pick(r),
                pick(a),
            )
        }

        proptest! {
            #[test]
            fn pythagorean_and_total_variance((authors, r, a) in arb_system()) {
                let s = system(&authors, &r, &a);
                let rep = analyze(&s);
                prop_assert!((rep.sigma_sys.powi(2) - rep.sigma_ln.powi(2) - rep.sigma_pn.powi(2)).abs() < 1e-9);
                let pe: Vec<f64> = rep.citing.iter().map(|c| c.pe).collect();
                let total = pe.iter().map(|x| (x - rep.pe).powi(2)).sum::<f64>() / pe.len() as f64;
                prop_assert!((total - rep.sigma_ln.powi(2) - rep.sigma_pn.powi(2)).abs() < 1e-9);
                prop_assert!(rep.sigma_ln >= 0.0 && rep.sigma_pn >= 0.0);
            }

            #[test]
            fn accuracy_paperwise_equals_cellwise((authors, r, a) in arb_system()) {
                let s = system(&authors, &r, &a);
                let (pa, pe) = system_accuracy(&s);
                let cells = s.n_citing() * s.n_cited();
                let correct = cells - s.error_matrix().entries().count_ones();
                prop_assert!((pa - correct as f64 / cells as f64).abs() < 1e-12);
                prop_assert!((pa + pe - 1.0).abs() < 1e-12);
                for c in &analyze(&s).citing {
                    prop_assert!((c.pa + c.pe - 1.0).abs() < 1e-12);
                }
            }

            #[test]
            fn counts_reconcile((authors, r, a) in arb_system()) {
                use crate::model::DecisionClass::*;
                let s = system(&authors, &r, &a);
                let mut ip = 0;
                let mut inn = 0;
                for k in 0..s.n_cited() {
                    let c = cited_paper_stats(&s, k).unwrap();
                    let col_ip = (0..s.n_citing()).filter(|&j| s.decision(j, k) == IncorrectPositive).count();
                    let col_in = (0..s.n_citing()).filter(|&j| s.decision(j, k) == IncorrectNegative).count();
                    prop_assert_eq!(c.tc + col_in - col_ip, c.ec);
                    prop_assert_eq!(c.tc, (c.pr * s.n_citing() as f64).round() as usize);
                    ip += col_ip;
                    inn += col_in;
                }
                let b = citation_bias(&s);
                prop_assert!((b.bias - (b.mean_tc - b.mean_ec)).abs() < 1e-12);
                if ip == inn {
                    prop_assert_eq!(b.bias, 0.0);
                    prop_assert_eq!(b.direction, BiasDirection::None);
                }
            }

            #[test]
            fn permutation_invariance((authors, r, a) in arb_system(), seed in any::<u64>()) {
                use rand::seq::SliceRandom;
                use rand::SeedableRng;
                let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
                let mut rows: Vec<usize> = (0..r.len()).collect();
                rows.shuffle(&mut rng);
                let mut cols: Vec<usize> = (0..r[0].len()).collect();
                cols.shuffle(&mut rng);
                let n_authors = authors.iter().max().unwrap() + 1;
                let mut author_perm: Vec<usize> = (0..n_authors).collect();
                author_perm.shuffle(&mut rng);

                let base = analyze(&system(&authors, &r, &a));
                let (pa, pr, pa2) = permuted(&authors, &r, &a, &rows, &cols, &author_perm);
                let other = analyze(&system(&pa, &pr, &pa2));
                prop_assert!((base.sigma_ln - other.sigma_ln).abs() < 1e-12);
                prop_assert!((base.sigma_pn - other.sigma_pn).abs() < 1e-12);
                prop_assert!((base.sigma_sys - other.sigma_sys).abs() < 1e-12);
                prop_assert!((base.pa - other.pa).abs() < 1e-12);
                prop_assert_eq!(base.bias.bias, other.bias.bias);
            }

            #[test]
            fn pattern_noise_matches_brute_force((authors, r, a) in arb_system()) {
                let s = system(&authors, &r, &a);
                prop_assert!((pattern_noise(&s) - brute_force_pattern_noise(&authors, &r, &a)).abs() < 1e-12);
            }
        }
    }
}
