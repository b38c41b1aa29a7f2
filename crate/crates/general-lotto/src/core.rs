//! Shared domain types, the scalar payoff curve, budget-ratio statistics,
//! and the per-contest winning predicates.
//!
//! Everything here is immutable after construction and purely functional,
//! so the types are safe to share freely across threads.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Errors produced across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GameError {
    /// A numeric input lies outside its mathematical domain
    /// (negative where nonnegative is required, NaN, out of range, ...).
    #[error("domain error: {0}")]
    Domain(String),
    /// Vector lengths or matrix shapes do not line up.
    #[error("dimension error: {0}")]
    Dimension(String),
    /// The game instance itself is ill-posed and has no well-defined value
    /// (e.g. both weighted budget aggregates are zero).
    #[error("degenerate game: {0}")]
    Degenerate(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, GameError>;

fn check_finite_nonneg(label: &str, values: &[f64]) -> Result<()> {
    for (i, &v) in values.iter().enumerate() {
        if !v.is_finite() || v < 0.0 {
            return Err(GameError::Domain(format!(
                "{label}[{i}] must be finite and nonnegative, got {v}"
            )));
        }
    }
    Ok(())
}

fn check_finite_positive(label: &str, values: &[f64]) -> Result<()> {
    for (i, &v) in values.iter().enumerate() {
        if !v.is_finite() || v <= 0.0 {
            return Err(GameError::Domain(format!(
                "{label}[{i}] must be finite and positive, got {v}"
            )));
        }
    }
    Ok(())
}

fn check_nonempty(label: &str, len: usize) -> Result<()> {
    if len == 0 {
        return Err(GameError::Dimension(format!("{label} must not be empty")));
    }
    Ok(())
}

fn check_same_len(a_label: &str, a: usize, b_label: &str, b: usize) -> Result<()> {
    if a != b {
        return Err(GameError::Dimension(format!(
            "{a_label} has length {a} but {b_label} has length {b}"
        )));
    }
    Ok(())
}

/// Per-type expected resource budget for one player.
///
/// One nonnegative, finite entry per resource type. The budget caps the
/// *expected* spend of a mixed strategy, not every realization.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BudgetVector {
    amounts: Vec<f64>,
}

impl BudgetVector {
    /// Builds a budget vector, rejecting empty, negative, or non-finite input.
    pub fn new(amounts: Vec<f64>) -> Result<Self> {
        check_nonempty("budget vector", amounts.len())?;
        check_finite_nonneg("budget", &amounts)?;
        Ok(Self { amounts })
    }

    /// Number of resource types.
    pub fn len(&self) -> usize {
        self.amounts.len()
    }

    /// True when the vector has no entries (never holds post-construction).
    pub fn is_empty(&self) -> bool {
        self.amounts.is_empty()
    }

    /// Budget for resource type `t` (zero-based).
    pub fn get(&self, t: usize) -> f64 {
        self.amounts[t]
    }

    /// All per-type budgets in type order.
    pub fn amounts(&self) -> &[f64] {
        &self.amounts
    }

    /// True when every type has a strictly positive budget.
    pub fn all_positive(&self) -> bool {
        self.amounts.iter().all(|&v| v > 0.0)
    }

    /// True when every type budget is zero.
    pub fn all_zero(&self) -> bool {
        self.amounts.iter().all(|&v| v == 0.0)
    }
}

/// Normalized contest values.
///
/// The constructor rescales any positive vector to sum to one and keeps the
/// original total as `scale`, since unnormalized values only scale every
/// payoff by that same total.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ContestValues {
    values: Vec<f64>,
    scale: f64,
}

impl ContestValues {
    /// Builds normalized contest values from a positive vector.
    pub fn new(raw: Vec<f64>) -> Result<Self> {
        check_nonempty("contest values", raw.len())?;
        check_finite_positive("contest value", &raw)?;
        let scale: f64 = raw.iter().sum();
        if !scale.is_finite() {
            return Err(GameError::Domain(format!(
                "contest values sum to a non-finite total {scale}"
            )));
        }
        let values = raw.iter().map(|v| v / scale).collect();
        Ok(Self { values, scale })
    }

    /// Number of contests.
    pub fn len(&self) -> usize {
        self.values.len()
    }

    /// True when there are no contests (never holds post-construction).
    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Normalized value share of contest `c` (zero-based).
    pub fn get(&self, c: usize) -> f64 {
        self.values[c]
    }

    /// All normalized value shares in contest order (they sum to one).
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Total of the raw values handed to the constructor.
    pub fn scale(&self) -> f64 {
        self.scale
    }
}

/// Per-type effectiveness weights for the weighted-contribution rule.
///
/// `a` weighs player X's units, `b` weighs player Y's. Each side must have at
/// least one strictly positive weight so that its resources can matter at all.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EffectivenessWeights {
    a: Vec<f64>,
    b: Vec<f64>,
}

impl EffectivenessWeights {
    /// Builds a weight pair, enforcing equal lengths and nonnegativity with
    /// at least one positive entry per side.
    pub fn new(a: Vec<f64>, b: Vec<f64>) -> Result<Self> {
        check_nonempty("weight vector a", a.len())?;
        check_same_len("weight vector a", a.len(), "weight vector b", b.len())?;
        check_finite_nonneg("weight a", &a)?;
        check_finite_nonneg("weight b", &b)?;
        if !a.iter().any(|&v| v > 0.0) {
            return Err(GameError::Domain(
                "weight vector a has no positive entry".into(),
            ));
        }
        if !b.iter().any(|&v| v > 0.0) {
            return Err(GameError::Domain(
                "weight vector b has no positive entry".into(),
            ));
        }
        Ok(Self { a, b })
    }

    /// Re-runs the construction checks; used after deserializing.
    pub fn validate(&self) -> Result<()> {
        Self::new(self.a.clone(), self.b.clone()).map(|_| ())
    }

    /// Number of resource types.
    pub fn len(&self) -> usize {
        self.a.len()
    }

    /// True when the weights cover no types (never holds post-construction).
    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }

    /// X-side weights in type order.
    pub fn a(&self) -> &[f64] {
        &self.a
    }

    /// Y-side weights in type order.
    pub fn b(&self) -> &[f64] {
        &self.b
    }
}

/// How a single contest is decided.
///
/// The weakest-link rule for X is always paired with the complementary
/// best-shot rule for Y; the two are one configuration, not independent
/// choices.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WinningRule {
    /// X wins iff it matches or beats Y on every resource type.
    WeakestLinkForX,
    /// X wins iff its weighted total matches or beats Y's weighted total.
    WeightedContribution(EffectivenessWeights),
}

/// A realized per-contest, per-type allocation matrix (shape C × T),
/// stored row-major with one row per contest.
#[derive(Debug, Clone, PartialEq)]
pub struct Allocation {
    contests: usize,
    types: usize,
    data: Vec<f64>,
}

impl Allocation {
    /// Builds an allocation from row-major data of length `contests × types`.
    pub fn new(contests: usize, types: usize, data: Vec<f64>) -> Result<Self> {
        if contests == 0 || types == 0 {
            return Err(GameError::Dimension(
                "allocation needs at least one contest and one type".into(),
            ));
        }
        if data.len() != contests * types {
            return Err(GameError::Dimension(format!(
                "allocation data has {} entries, expected {} ({contests} x {types})",
                data.len(),
                contests * types
            )));
        }
        check_finite_nonneg("allocation", &data)?;
        Ok(Self {
            contests,
            types,
            data,
        })
    }

    /// An all-zero allocation of the given shape.
    pub fn zeros(contests: usize, types: usize) -> Result<Self> {
        Self::new(contests, types, vec![0.0; contests * types])
    }

    /// Number of contests (rows).
    pub fn contests(&self) -> usize {
        self.contests
    }

    /// Number of resource types (columns).
    pub fn types(&self) -> usize {
        self.types
    }

    /// Amount fielded in contest `c` for type `t`.
    pub fn get(&self, c: usize, t: usize) -> f64 {
        self.data[c * self.types + t]
    }

    /// The per-type row for contest `c`.
    pub fn row(&self, c: usize) -> &[f64] {
        &self.data[c * self.types..(c + 1) * self.types]
    }

    pub(crate) fn row_mut(&mut self, c: usize) -> &mut [f64] {
        &mut self.data[c * self.types..(c + 1) * self.types]
    }
}

/// Equilibrium payoff share of the favored player as a function of the
/// budget ratio: `1 − α/2` when `α ≤ 1`, else `1/(2α)`; zero at `+∞`.
///
/// The curve is continuous, strictly decreasing to zero, and equals one at
/// `α = 0` (an unopposed player keeps everything).
pub fn lotto_payoff(alpha: f64) -> Result<f64> {
    if alpha.is_nan() || alpha < 0.0 {
        return Err(GameError::Domain(format!(
            "budget ratio must be nonnegative or +infinity, got {alpha}"
        )));
    }
    if alpha.is_infinite() {
        return Ok(0.0);
    }
    if alpha <= 1.0 {
        Ok(1.0 - alpha / 2.0)
    } else {
        Ok(1.0 / (2.0 * alpha))
    }
}

/// Sum of per-type budget ratios `Σ_t Y_t / X_t` driving the weakest-link
/// equilibrium.
///
/// Conventions: a type where `X_t = 0 < Y_t` makes the ratio `+∞` (X cannot
/// defend that type); a type absent on both sides (`X_t = Y_t = 0`) is
/// vacuous and contributes zero.
pub fn alpha_ratio(x: &BudgetVector, y: &BudgetVector) -> Result<f64> {
    check_same_len("budget X", x.len(), "budget Y", y.len())?;
    let mut total = 0.0;
    for (&xt, &yt) in x.amounts().iter().zip(y.amounts()) {
        if xt == 0.0 {
            if yt > 0.0 {
                return Ok(f64::INFINITY);
            }
            // 0/0: the type is vacuous.
        } else {
            total += yt / xt;
        }
    }
    Ok(total)
}

/// Weighted aggregate budget ratio `(Σ_t b_t Y_t) / (Σ_t a_t X_t)` driving
/// the weighted-contribution equilibrium.
///
/// A zero denominator with positive numerator yields `+∞`; when both
/// aggregates vanish no player can influence any contest and the game is
/// degenerate.
pub fn beta_ratio(x: &BudgetVector, y: &BudgetVector, w: &EffectivenessWeights) -> Result<f64> {
    check_same_len("budget X", x.len(), "weights", w.len())?;
    check_same_len("budget Y", y.len(), "weights", w.len())?;
    let num: f64 = w.b().iter().zip(y.amounts()).map(|(&b, &yt)| b * yt).sum();
    let den: f64 = w.a().iter().zip(x.amounts()).map(|(&a, &xt)| a * xt).sum();
    if den > 0.0 {
        Ok(num / den)
    } else if num > 0.0 {
        Ok(f64::INFINITY)
    } else {
        Err(GameError::Degenerate(
            "both weighted budget aggregates are zero".into(),
        ))
    }
}

/// Aggregate cost ratio `r = Σ_t κ_t / σ_t` of the two-stage investment
/// game, where `κ_t` is X's unit cost and `σ_t` is Y's unit cost for type `t`.
pub fn cost_ratio(kappa: &[f64], sigma: &[f64]) -> Result<f64> {
    check_nonempty("kappa", kappa.len())?;
    check_same_len("kappa", kappa.len(), "sigma", sigma.len())?;
    check_finite_positive("kappa", kappa)?;
    check_finite_positive("sigma", sigma)?;
    Ok(kappa.iter().zip(sigma).map(|(&k, &s)| k / s).sum())
}

/// Weakest-link winning predicate: X takes the contest iff it matches or
/// beats Y on every resource type (ties go to X).
pub fn wins_weakest_link(x: &[f64], y: &[f64]) -> Result<bool> {
    check_nonempty("allocation x", x.len())?;
    check_same_len("allocation x", x.len(), "allocation y", y.len())?;
    check_finite_nonneg("allocation x", x)?;
    check_finite_nonneg("allocation y", y)?;
    Ok(x.iter().zip(y).all(|(&xt, &yt)| xt >= yt))
}

/// Weighted-contribution winning predicate: X takes the contest iff
/// `Σ_t a_t x_t ≥ Σ_t b_t y_t` (ties go to X).
pub fn wins_weighted(x: &[f64], y: &[f64], w: &EffectivenessWeights) -> Result<bool> {
    check_nonempty("allocation x", x.len())?;
    check_same_len("allocation x", x.len(), "weights", w.len())?;
    check_same_len("allocation y", y.len(), "weights", w.len())?;
    check_finite_nonneg("allocation x", x)?;
    check_finite_nonneg("allocation y", y)?;
    let xs: f64 = w.a().iter().zip(x).map(|(&a, &xt)| a * xt).sum();
    let ys: f64 = w.b().iter().zip(y).map(|(&b, &yt)| b * yt).sum();
    Ok(xs >= ys)
}
