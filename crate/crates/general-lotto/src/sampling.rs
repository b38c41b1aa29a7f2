//! Reproducible samplers for the parameterized strategies and Monte Carlo
//! estimators for payoffs, empirical CDFs, and per-type spend.
//!
//! Randomness derives from one seeded counter-based generator: every
//! (sample index, contest) pair gets its own independent stream, so results
//! are bit-reproducible and independent of evaluation order. Within a
//! stream, draws happen in a fixed order (player X's activation, X's
//! uniform, then player Y's, as applicable).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sha2::{Digest, Sha256};

use crate::core::{
    wins_weakest_link, wins_weighted, Allocation, ContestValues, GameError, Result, WinningRule,
};
use crate::equilibria::{StrategyForm, StrategyParams};

/// A reproducible batch of sampled allocations.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleBatch {
    /// The sampled allocations, in sample order.
    pub allocations: Vec<Allocation>,
    /// Seed the batch was generated from.
    pub seed: u64,
    /// Content hash of the generating strategy parameters.
    pub params_digest: String,
}

/// A Monte Carlo estimate of an expected payoff share.
#[derive(Debug, Clone, PartialEq)]
pub struct PayoffEstimate {
    /// Sample mean of the per-draw payoff.
    pub mean: f64,
    /// Sample standard deviation divided by √n (infinite when n = 1).
    pub std_error: f64,
    /// Number of paired samples drawn.
    pub n_samples: usize,
}

/// Hex SHA-256 of the canonical JSON encoding of the parameters; used to
/// tie a [`SampleBatch`] back to what generated it.
pub fn params_digest(params: &StrategyParams) -> String {
    let json = serde_json::to_string(params).expect("strategy params always serialize");
    let mut hasher = Sha256::new();
    hasher.update(json.as_bytes());
    let digest = hasher.finalize();
    let mut out = String::with_capacity(digest.len() * 2);
    for byte in digest {
        out.push_str(&format!("{byte:02x}"));
    }
    out
}

/// Independent stream for sample `i`, contest `c` of a run with `contests`
/// contests per sample.
fn stream_rng(base: &ChaCha8Rng, i: u64, c: u64, contests: u64) -> ChaCha8Rng {
    let mut rng = base.clone();
    rng.set_stream(i * contests + c);
    rng
}

/// Draws one contest row into `row`, consuming this stream's next draws.
///
/// Weakest-link form: one activation draw, then one shared uniform scaled
/// per type (the row always lies on the ray through the scale vector).
/// Best-shot form: one activation draw, one type pick, one uniform for the
/// picked type; every other type stays zero.
fn draw_row(params: &StrategyParams, c: usize, rng: &mut ChaCha8Rng, row: &mut [f64]) {
    row.fill(0.0);
    let act: f64 = rng.random();
    if act >= params.delta() {
        return;
    }
    match params.form() {
        StrategyForm::WeakestLink => {
            let u: f64 = rng.random();
            for (t, slot) in row.iter_mut().enumerate() {
                *slot = params.scale(c, t) * u;
            }
        }
        StrategyForm::BestShot => {
            let probs = params.type_probs().expect("best-shot always has probs");
            let pick: f64 = rng.random();
            let mut chosen = None;
            let mut cum = 0.0;
            for (t, &pt) in probs.iter().enumerate() {
                if pt > 0.0 {
                    cum += pt;
                    chosen = Some(t);
                    if pick < cum {
                        break;
                    }
                }
            }
            // `chosen` can only be None if all probabilities are zero, which
            // the StrategyParams constructor rules out (they sum to one).
            let t = chosen.expect("type probabilities sum to one");
            let u: f64 = rng.random();
            row[t] = params.scale(c, t) * u;
        }
    }
}

/// Samples one complete allocation (all contests) from `params`.
///
/// `v` carries no randomness; it is accepted so callers state the contest
/// structure they believe the parameters describe, and its length must
/// match. Total for valid inputs: every draw is in range by construction.
pub fn sample_allocation(params: &StrategyParams, v: &ContestValues, seed: u64) -> Allocation {
    debug_assert_eq!(params.contests(), v.len());
    let base = ChaCha8Rng::seed_from_u64(seed);
    sample_indexed(params, &base, 0)
}

fn sample_indexed(params: &StrategyParams, base: &ChaCha8Rng, i: u64) -> Allocation {
    let contests = params.contests();
    let types = params.types();
    let mut alloc = Allocation::zeros(contests, types).expect("params imply a valid shape");
    for c in 0..contests {
        let mut rng = stream_rng(base, i, c as u64, contests as u64);
        draw_row(params, c, &mut rng, alloc.row_mut(c));
    }
    alloc
}

/// Samples `n` allocations from `params` as a reproducible batch.
pub fn sample_batch(
    params: &StrategyParams,
    v: &ContestValues,
    n: usize,
    seed: u64,
) -> Result<SampleBatch> {
    if n == 0 {
        return Err(GameError::Domain("sample count must be at least 1".into()));
    }
    if params.contests() != v.len() {
        return Err(GameError::Dimension(format!(
            "params cover {} contests but {} values were given",
            params.contests(),
            v.len()
        )));
    }
    let base = ChaCha8Rng::seed_from_u64(seed);
    let allocations = (0..n as u64)
        .map(|i| sample_indexed(params, &base, i))
        .collect();
    Ok(SampleBatch {
        allocations,
        seed,
        params_digest: params_digest(params),
    })
}

fn check_pairing(
    params_x: &StrategyParams,
    params_y: &StrategyParams,
    v: &ContestValues,
    rule: &WinningRule,
) -> Result<()> {
    if params_x.contests() != v.len() || params_y.contests() != v.len() {
        return Err(GameError::Dimension(format!(
            "strategies cover {} and {} contests but {} values were given",
            params_x.contests(),
            params_y.contests(),
            v.len()
        )));
    }
    if params_x.types() != params_y.types() {
        return Err(GameError::Dimension(format!(
            "strategy X covers {} types but strategy Y covers {}",
            params_x.types(),
            params_y.types()
        )));
    }
    if let WinningRule::WeightedContribution(w) = rule {
        if w.len() != params_x.types() {
            return Err(GameError::Dimension(format!(
                "rule weights cover {} types but strategies cover {}",
                w.len(),
                params_x.types()
            )));
        }
    }
    Ok(())
}

/// Monte Carlo estimate of X's expected payoff share when both players
/// sample their given strategies independently, contests decided by `rule`.
///
/// Per sample, each contest's two rows come from that (sample, contest)
/// stream — X's draws first — and the payoff is the value-weighted sum of
/// contests X wins.
pub fn mc_payoff(
    params_x: &StrategyParams,
    params_y: &StrategyParams,
    v: &ContestValues,
    rule: &WinningRule,
    n: usize,
    seed: u64,
) -> Result<PayoffEstimate> {
    if n == 0 {
        return Err(GameError::Domain("sample count must be at least 1".into()));
    }
    check_pairing(params_x, params_y, v, rule)?;
    let contests = v.len();
    let types = params_x.types();
    let base = ChaCha8Rng::seed_from_u64(seed);
    let mut row_x = vec![0.0; types];
    let mut row_y = vec![0.0; types];
    // Welford's online mean/variance over per-sample payoffs.
    let mut mean = 0.0;
    let mut m2 = 0.0;
    for i in 0..n as u64 {
        let mut payoff = 0.0;
        for c in 0..contests {
            let mut rng = stream_rng(&base, i, c as u64, contests as u64);
            draw_row(params_x, c, &mut rng, &mut row_x);
            draw_row(params_y, c, &mut rng, &mut row_y);
            let x_wins = match rule {
                WinningRule::WeakestLinkForX => wins_weakest_link(&row_x, &row_y)?,
                WinningRule::WeightedContribution(w) => wins_weighted(&row_x, &row_y, w)?,
            };
            if x_wins {
                payoff += v.get(c);
            }
        }
        let count = (i + 1) as f64;
        let delta = payoff - mean;
        mean += delta / count;
        m2 += delta * (payoff - mean);
    }
    let std_error = if n > 1 {
        (m2 / (n as f64 - 1.0)).sqrt() / (n as f64).sqrt()
    } else {
        f64::INFINITY
    };
    Ok(PayoffEstimate {
        mean,
        std_error,
        n_samples: n,
    })
}

/// Largest absolute gap, over the given grid of evaluation points, between
/// the empirical CDF of contest `c`'s sampled rows and the analytic CDF.
pub fn empirical_cdf_distance(
    params: &StrategyParams,
    v: &ContestValues,
    c: usize,
    n: usize,
    seed: u64,
    grid: &[Vec<f64>],
) -> Result<f64> {
    if n == 0 {
        return Err(GameError::Domain("sample count must be at least 1".into()));
    }
    if params.contests() != v.len() {
        return Err(GameError::Dimension(format!(
            "params cover {} contests but {} values were given",
            params.contests(),
            v.len()
        )));
    }
    if grid.is_empty() {
        return Err(GameError::Domain("evaluation grid must not be empty".into()));
    }
    let types = params.types();
    // Validates c, point lengths, and nonnegativity as a side effect.
    let analytic: Vec<f64> = grid
        .iter()
        .map(|u| crate::equilibria::eval_cdf(params, c, u))
        .collect::<Result<_>>()?;
    let base = ChaCha8Rng::seed_from_u64(seed);
    let contests = params.contests() as u64;
    let mut row = vec![0.0; types];
    let mut counts = vec![0u64; grid.len()];
    for i in 0..n as u64 {
        let mut rng = stream_rng(&base, i, c as u64, contests);
        draw_row(params, c, &mut rng, &mut row);
        for (count, u) in counts.iter_mut().zip(grid) {
            if row.iter().zip(u).all(|(&xt, &ut)| xt <= ut) {
                *count += 1;
            }
        }
    }
    let mut worst = 0.0f64;
    for (&count, &f) in counts.iter().zip(&analytic) {
        let empirical = count as f64 / n as f64;
        worst = worst.max((empirical - f).abs());
    }
    Ok(worst)
}

/// Analytic expected spend per resource type implied by the parameters:
/// activation × mean uniform × scale, summed over contests (best-shot
/// additionally weighs each type by its pick probability).
pub fn expected_spend(params: &StrategyParams, v: &ContestValues) -> Result<Vec<f64>> {
    if params.contests() != v.len() {
        return Err(GameError::Dimension(format!(
            "params cover {} contests but {} values were given",
            params.contests(),
            v.len()
        )));
    }
    let types = params.types();
    let spend = (0..types)
        .map(|t| {
            let col: f64 = (0..params.contests()).map(|c| params.scale(c, t)).sum();
            match params.form() {
                StrategyForm::WeakestLink => params.delta() * col / 2.0,
                StrategyForm::BestShot => {
                    params.delta() * params.type_probs().expect("best-shot has probs")[t] * col
                        / 2.0
                }
            }
        })
        .collect();
    Ok(spend)
}

/// Sample-mean per-type spend with its standard error, over `n` sampled
/// allocations; the statistical counterpart of [`expected_spend`].
pub fn empirical_spend(
    params: &StrategyParams,
    v: &ContestValues,
    n: usize,
    seed: u64,
) -> Result<Vec<(f64, f64)>> {
    if n == 0 {
        return Err(GameError::Domain("sample count must be at least 1".into()));
    }
    if params.contests() != v.len() {
        return Err(GameError::Dimension(format!(
            "params cover {} contests but {} values were given",
            params.contests(),
            v.len()
        )));
    }
    let contests = params.contests();
    let types = params.types();
    let base = ChaCha8Rng::seed_from_u64(seed);
    let mut row = vec![0.0; types];
    let mut totals = vec![0.0; types];
    let mut means = vec![0.0; types];
    let mut m2s = vec![0.0; types];
    for i in 0..n as u64 {
        totals.fill(0.0);
        for c in 0..contests {
            let mut rng = stream_rng(&base, i, c as u64, contests as u64);
            draw_row(params, c, &mut rng, &mut row);
            for (total, &xt) in totals.iter_mut().zip(&row) {
                *total += xt;
            }
        }
        let count = (i + 1) as f64;
        for t in 0..types {
            let delta = totals[t] - means[t];
            means[t] += delta / count;
            m2s[t] += delta * (totals[t] - means[t]);
        }
    }
    Ok((0..types)
        .map(|t| {
            let se = if n > 1 {
                (m2s[t] / (n as f64 - 1.0)).sqrt() / (n as f64).sqrt()
            } else {
                f64::INFINITY
            };
            (means[t], se)
        })
        .collect())
}
