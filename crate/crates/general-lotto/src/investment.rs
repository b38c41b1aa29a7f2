//! Two-stage games where the budgets themselves are purchased: each player
//! first buys per-type resources at linear unit costs, then the
//! weakest-link contest game is played with the resulting budgets.
//!
//! With money levels fixed (sunk), each player divides optimally across
//! types and the game value depends only on the money ratio times the
//! aggregate cost ratio `r`. When money is chosen strategically up front,
//! the best-response curves cross at a unique equilibrium where both
//! players spend the same amount and the cheaper-production side wins.

use serde::{Deserialize, Serialize};

use crate::core::{cost_ratio, lotto_payoff, BudgetVector, GameError, Result};

/// Per-type unit costs: `kappa[t]` is what player X pays per unit of type
/// `t`, `sigma[t]` what player Y pays.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CostProfile {
    kappa: Vec<f64>,
    sigma: Vec<f64>,
}

impl CostProfile {
    /// Builds a cost profile; all entries must be finite and positive and
    /// the two lists must cover the same types.
    pub fn new(kappa: Vec<f64>, sigma: Vec<f64>) -> Result<Self> {
        // cost_ratio performs exactly the validation this type needs.
        cost_ratio(&kappa, &sigma)?;
        Ok(Self { kappa, sigma })
    }

    /// Re-runs the construction checks; use after deserializing.
    pub fn validate(&self) -> Result<()> {
        cost_ratio(&self.kappa, &self.sigma).map(|_| ())
    }

    /// Number of resource types.
    pub fn len(&self) -> usize {
        self.kappa.len()
    }

    /// True when the profile covers no types (never holds post-construction).
    pub fn is_empty(&self) -> bool {
        self.kappa.is_empty()
    }

    /// X's per-unit costs in type order.
    pub fn kappa(&self) -> &[f64] {
        &self.kappa
    }

    /// Y's per-unit costs in type order.
    pub fn sigma(&self) -> &[f64] {
        &self.sigma
    }

    /// Aggregate cost ratio `r = Σ_t κ_t/σ_t`.
    pub fn cost_ratio(&self) -> f64 {
        self.kappa
            .iter()
            .zip(&self.sigma)
            .map(|(&k, &s)| k / s)
            .sum()
    }
}

/// Resolved outcome of an investment game: the purchased budgets, the money
/// each purchase costs, the players' utilities, and the cost ratio.
///
/// `money_x`/`money_y` are recomputed from the budget vectors (`Σ κ_t X*_t`
/// and `Σ σ_t Y*_t`); for the up-front-cost equilibrium the two coincide.
/// `u_x`/`u_y` carry the utilities in the convention of the generating
/// operation (see [`sunk_cost_equilibrium`] and [`mlc_equilibrium`]).
#[derive(Debug, Clone, PartialEq)]
pub struct InvestmentOutcome {
    /// X's purchased per-type budgets.
    pub x_star: BudgetVector,
    /// Y's purchased per-type budgets.
    pub y_star: BudgetVector,
    /// Money X's budgets cost.
    pub money_x: f64,
    /// Money Y's budgets cost.
    pub money_y: f64,
    /// X's utility.
    pub u_x: f64,
    /// Y's utility.
    pub u_y: f64,
    /// Aggregate cost ratio `r`.
    pub r: f64,
}

fn check_money(label: &str, m: f64) -> Result<()> {
    if !m.is_finite() || m < 0.0 {
        return Err(GameError::Domain(format!(
            "{label} must be finite and nonnegative, got {m}"
        )));
    }
    Ok(())
}

/// Optimal division of fixed (sunk) money levels across types, and the
/// resulting contest payoffs.
///
/// X divides so that `σ_t X*_t` is equal across types; Y puts money where
/// X's production is relatively expensive (`Y*_t ∝ κ_t/σ_t²`). The game
/// value is `L((M_y/M_x)·r)`. `u_x`/`u_y` are the pure contest payoffs —
/// sunk money is not subtracted. With `M_x = 0 < M_y` any attacked type is
/// undefendable, so the payoffs are `(0, 1)` and both divisions are
/// reported as zero vectors (no division changes anything); with both
/// moneys zero nobody fields resources and ties favor X: payoffs `(1, 0)`.
pub fn sunk_cost_equilibrium(
    money_x: f64,
    money_y: f64,
    costs: &CostProfile,
) -> Result<InvestmentOutcome> {
    check_money("sunk money for X", money_x)?;
    check_money("sunk money for Y", money_y)?;
    let r = costs.cost_ratio();
    let types = costs.len();
    if money_x == 0.0 {
        let (u_x, u_y) = if money_y > 0.0 { (0.0, 1.0) } else { (1.0, 0.0) };
        return Ok(InvestmentOutcome {
            x_star: BudgetVector::new(vec![0.0; types])?,
            y_star: BudgetVector::new(vec![0.0; types])?,
            money_x: 0.0,
            money_y: 0.0,
            u_x,
            u_y,
            r,
        });
    }
    let x_star: Vec<f64> = costs
        .kappa()
        .iter()
        .zip(costs.sigma())
        .map(|(&k, &s)| (money_x / k) * (k / s) / r)
        .collect();
    let y_star: Vec<f64> = costs
        .kappa()
        .iter()
        .zip(costs.sigma())
        .map(|(&k, &s)| (money_y / s) * (k / s) / r)
        .collect();
    let spent_x: f64 = costs.kappa().iter().zip(&x_star).map(|(&k, &x)| k * x).sum();
    let spent_y: f64 = costs.sigma().iter().zip(&y_star).map(|(&s, &y)| s * y).sum();
    let u_x = lotto_payoff(money_y / money_x * r)?;
    Ok(InvestmentOutcome {
        x_star: BudgetVector::new(x_star)?,
        y_star: BudgetVector::new(y_star)?,
        money_x: spent_x,
        money_y: spent_y,
        u_x,
        u_y: 1.0 - u_x,
        r,
    })
}

/// A best response that is either a single money level or, at a knife-edge,
/// a whole interval of indifferent levels.
#[derive(Debug, Clone, PartialEq)]
pub enum BestResponse {
    /// The unique best money level.
    Point(f64),
    /// Every level in `[lo, hi]` is a best response.
    Interval {
        /// Lower end of the indifference range.
        lo: f64,
        /// Upper end of the indifference range.
        hi: f64,
    },
}

/// Slack used by [`BestResponse::contains`]: membership is meant as exact
/// set membership, padded only for accumulated double rounding.
const MEMBERSHIP_TOL: f64 = 1e-12;

impl BestResponse {
    /// Whether `money` belongs to the response set, up to double rounding.
    pub fn contains(&self, money: f64) -> bool {
        match *self {
            BestResponse::Point(p) => (money - p).abs() <= MEMBERSHIP_TOL * p.abs().max(1.0),
            BestResponse::Interval { lo, hi } => {
                money >= lo - MEMBERSHIP_TOL && money <= hi + MEMBERSHIP_TOL
            }
        }
    }
}

/// Relative half-width of the knife-edge detection band. Money levels this
/// close to the threshold (hundreds of ulps, far below any meaningful money
/// difference) count as sitting on it, so that equilibrium spends
/// recomputed through double arithmetic still select the set-valued branch.
const KNIFE_TOL: f64 = 1e-12;

fn on_knife(money: f64, knife: f64) -> bool {
    (money - knife).abs() <= KNIFE_TOL * knife.max(1.0)
}

/// Y's optimal money level against X spending `money_x`: match up to the
/// profitable range (`√(M_x/(2r))`), be indifferent across `[0, 1/2]` at
/// the knife-edge `M_x = r/2`, and spend nothing above it.
pub fn best_response_y(money_x: f64, r: f64) -> Result<BestResponse> {
    check_money("money for X", money_x)?;
    check_r(r)?;
    let knife = r / 2.0;
    Ok(if on_knife(money_x, knife) {
        BestResponse::Interval { lo: 0.0, hi: 0.5 }
    } else if money_x < knife {
        BestResponse::Point((money_x / (2.0 * r)).sqrt())
    } else {
        BestResponse::Point(0.0)
    })
}

/// X's optimal money level against Y spending `money_y`: `√(M_y·r/2)` below
/// the knife-edge `M_y = 1/(2r)`, the interval `[0, 1/2]` at it, and zero
/// above it.
pub fn best_response_x(money_y: f64, r: f64) -> Result<BestResponse> {
    check_money("money for Y", money_y)?;
    check_r(r)?;
    let knife = 1.0 / (2.0 * r);
    Ok(if on_knife(money_y, knife) {
        BestResponse::Interval { lo: 0.0, hi: 0.5 }
    } else if money_y < knife {
        BestResponse::Point((money_y * r / 2.0).sqrt())
    } else {
        BestResponse::Point(0.0)
    })
}

fn check_r(r: f64) -> Result<()> {
    if !r.is_finite() || r <= 0.0 {
        return Err(GameError::Domain(format!(
            "cost ratio must be finite and positive, got {r}"
        )));
    }
    Ok(())
}

/// The unique equilibrium of the up-front linear-cost game.
///
/// The cheaper side (Y iff `r > 1`) wins: for `r > 1` the outcome carries
/// `u_x = 0` and `u_y = 1 − 1/(2r)`; for `r ≤ 1`, `u_x = 1 − r/2` and
/// `u_y = 0` (the winner's utility is quoted gross of its money, the
/// loser's net — both players spend `min{r, 1/r}/2`, where the loser's net
/// utility is exactly zero). Net utilities for arbitrary money pairs are
/// available via [`utility_x`]/[`utility_y`].
pub fn mlc_equilibrium(costs: &CostProfile) -> InvestmentOutcome {
    let r = costs.cost_ratio();
    let (x_star, y_star, u_x, u_y): (Vec<f64>, Vec<f64>, f64, f64) = if r > 1.0 {
        (
            costs.sigma().iter().map(|&s| 1.0 / (2.0 * s * r * r)).collect(),
            costs
                .kappa()
                .iter()
                .zip(costs.sigma())
                .map(|(&k, &s)| k / (2.0 * s * s * r * r))
                .collect(),
            0.0,
            1.0 - 1.0 / (2.0 * r),
        )
    } else {
        (
            costs.sigma().iter().map(|&s| 1.0 / (2.0 * s)).collect(),
            costs
                .kappa()
                .iter()
                .zip(costs.sigma())
                .map(|(&k, &s)| k / (2.0 * s * s))
                .collect(),
            1.0 - r / 2.0,
            0.0,
        )
    };
    let money_x: f64 = costs.kappa().iter().zip(&x_star).map(|(&k, &x)| k * x).sum();
    let money_y: f64 = costs.sigma().iter().zip(&y_star).map(|(&s, &y)| s * y).sum();
    InvestmentOutcome {
        x_star: BudgetVector::new(x_star).expect("positive costs give finite budgets"),
        y_star: BudgetVector::new(y_star).expect("positive costs give finite budgets"),
        money_x,
        money_y,
        u_x,
        u_y,
        r,
    }
}

fn stage_value(money_x: f64, money_y: f64, r: f64) -> Result<f64> {
    let ratio = if money_x > 0.0 {
        r * money_y / money_x
    } else if money_y > 0.0 {
        f64::INFINITY
    } else {
        0.0
    };
    lotto_payoff(ratio)
}

/// X's net utility from money levels `(money_x, money_y)`: the stage-two
/// value `L(r·M_y/M_x)` minus X's money. The `0/0` money pair uses the
/// zero-ratio convention (`L(0) = 1`, ties to X).
pub fn utility_x(money_x: f64, money_y: f64, r: f64) -> Result<f64> {
    check_money("money for X", money_x)?;
    check_money("money for Y", money_y)?;
    check_r(r)?;
    Ok(stage_value(money_x, money_y, r)? - money_x)
}

/// Y's net utility from money levels `(money_x, money_y)`: one minus the
/// stage-two value, minus Y's money.
pub fn utility_y(money_x: f64, money_y: f64, r: f64) -> Result<f64> {
    check_money("money for X", money_x)?;
    check_money("money for Y", money_y)?;
    check_r(r)?;
    Ok(1.0 - stage_value(money_x, money_y, r)? - money_y)
}

/// Equilibrium investment shares per type: X's fraction depends only on
/// Y's costs (`(1/σ_t) / Σ_s (1/σ_s)`), while Y's follows `κ_t/σ_t²`.
///
/// Computed directly from the cost profile so the X-shares are bit-identical
/// across any change to `kappa`.
pub fn investment_fractions(costs: &CostProfile) -> (Vec<f64>, Vec<f64>) {
    let inv_sigma: Vec<f64> = costs.sigma().iter().map(|&s| 1.0 / s).collect();
    let sum_x: f64 = inv_sigma.iter().sum();
    let x_frac = inv_sigma.iter().map(|&w| w / sum_x).collect();
    let y_weights: Vec<f64> = costs
        .kappa()
        .iter()
        .zip(costs.sigma())
        .map(|(&k, &s)| k / (s * s))
        .collect();
    let sum_y: f64 = y_weights.iter().sum();
    let y_frac = y_weights.iter().map(|&w| w / sum_y).collect();
    (x_frac, y_frac)
}
