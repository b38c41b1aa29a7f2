//! Closed-form equilibrium strategies and payoff bounds.
//!
//! Under the weakest-link rule the defender mixes a comonotone uniform
//! profile (one shared draw scaled per type) while the attacker concentrates
//! on a single type per contest; under the weighted-contribution rule both
//! players use the comonotone form. The optimal parameters depend on the
//! budgets only through a scalar ratio, and matching upper/lower payoff
//! bounds meet exactly at the equilibrium value, certifying it.

use serde::{Deserialize, Serialize};

use crate::core::{
    alpha_ratio, beta_ratio, lotto_payoff, BudgetVector, ContestValues, EffectivenessWeights,
    GameError, Result, WinningRule,
};

/// Shape of a one-parameter mixed strategy over contests and types.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StrategyForm {
    /// With probability δ draw one uniform and field it on every type,
    /// scaled per type (comonotone across types); otherwise field nothing.
    WeakestLink,
    /// With probability δ pick a single type and field one scaled uniform
    /// there, leaving every other type at zero; otherwise field nothing.
    BestShot,
}

/// Parameters of a sampled mixed strategy: activation probability, optional
/// per-type pick distribution, and per-contest support scales.
///
/// `scales[c][t]` is the upper end of the uniform support for contest `c`,
/// type `t`. A zero scale marks a type the strategy never funds.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StrategyParams {
    form: StrategyForm,
    delta: f64,
    type_probs: Option<Vec<f64>>,
    scales: Vec<Vec<f64>>,
}

/// How far a probability vector may drift from summing to one.
pub const PROB_SUM_TOL: f64 = 1e-12;

fn check_delta(delta: f64) -> Result<()> {
    if !delta.is_finite() || !(0.0..=1.0).contains(&delta) {
        return Err(GameError::Domain(format!(
            "activation probability must lie in [0, 1], got {delta}"
        )));
    }
    Ok(())
}

fn check_prob_vector(label: &str, p: &[f64]) -> Result<()> {
    for (i, &pi) in p.iter().enumerate() {
        if !pi.is_finite() || pi < 0.0 {
            return Err(GameError::Domain(format!(
                "{label}[{i}] must be finite and nonnegative, got {pi}"
            )));
        }
    }
    let sum: f64 = p.iter().sum();
    if (sum - 1.0).abs() > PROB_SUM_TOL {
        return Err(GameError::Domain(format!(
            "{label} must sum to 1 within {PROB_SUM_TOL}, got {sum}"
        )));
    }
    Ok(())
}

fn check_scales(scales: &[Vec<f64>]) -> Result<usize> {
    if scales.is_empty() {
        return Err(GameError::Dimension(
            "scale matrix needs at least one contest row".into(),
        ));
    }
    let types = scales[0].len();
    if types == 0 {
        return Err(GameError::Dimension(
            "scale matrix needs at least one type column".into(),
        ));
    }
    for (c, row) in scales.iter().enumerate() {
        if row.len() != types {
            return Err(GameError::Dimension(format!(
                "scale row {c} has length {}, expected {types}",
                row.len()
            )));
        }
        for (t, &s) in row.iter().enumerate() {
            if !s.is_finite() || s < 0.0 {
                return Err(GameError::Domain(format!(
                    "scale[{c}][{t}] must be finite and nonnegative, got {s}"
                )));
            }
        }
    }
    Ok(types)
}

impl StrategyParams {
    /// Builds a comonotone weakest-link strategy.
    pub fn weakest_link(delta: f64, scales: Vec<Vec<f64>>) -> Result<Self> {
        check_delta(delta)?;
        check_scales(&scales)?;
        Ok(Self {
            form: StrategyForm::WeakestLink,
            delta,
            type_probs: None,
            scales,
        })
    }

    /// Builds a single-type best-shot strategy with pick distribution
    /// `type_probs`.
    pub fn best_shot(delta: f64, type_probs: Vec<f64>, scales: Vec<Vec<f64>>) -> Result<Self> {
        check_delta(delta)?;
        let types = check_scales(&scales)?;
        if type_probs.len() != types {
            return Err(GameError::Dimension(format!(
                "type probabilities have length {}, expected {types}",
                type_probs.len()
            )));
        }
        check_prob_vector("type probability", &type_probs)?;
        Ok(Self {
            form: StrategyForm::BestShot,
            delta,
            type_probs: Some(type_probs),
            scales,
        })
    }

    /// Re-runs every construction check; use after deserializing.
    pub fn validate(&self) -> Result<()> {
        check_delta(self.delta)?;
        let types = check_scales(&self.scales)?;
        match (self.form, &self.type_probs) {
            (StrategyForm::WeakestLink, None) => Ok(()),
            (StrategyForm::WeakestLink, Some(_)) => Err(GameError::Domain(
                "weakest-link form carries no type probabilities".into(),
            )),
            (StrategyForm::BestShot, Some(p)) => {
                if p.len() != types {
                    return Err(GameError::Dimension(format!(
                        "type probabilities have length {}, expected {types}",
                        p.len()
                    )));
                }
                check_prob_vector("type probability", p)
            }
            (StrategyForm::BestShot, None) => Err(GameError::Domain(
                "best-shot form requires type probabilities".into(),
            )),
        }
    }

    /// Strategy shape.
    pub fn form(&self) -> StrategyForm {
        self.form
    }

    /// Activation probability δ.
    pub fn delta(&self) -> f64 {
        self.delta
    }

    /// Pick distribution over types (best-shot form only).
    pub fn type_probs(&self) -> Option<&[f64]> {
        self.type_probs.as_deref()
    }

    /// The full per-contest, per-type scale matrix.
    pub fn scales(&self) -> &[Vec<f64>] {
        &self.scales
    }

    /// Number of contests covered.
    pub fn contests(&self) -> usize {
        self.scales.len()
    }

    /// Number of resource types covered.
    pub fn types(&self) -> usize {
        self.scales[0].len()
    }

    /// Support upper end for contest `c`, type `t`.
    pub fn scale(&self, c: usize, t: usize) -> f64 {
        self.scales[c][t]
    }
}

/// Joint allocation CDF of `params` in contest `c`, evaluated at the
/// per-type point `u` (entries may be `+∞` to marginalize a type out).
///
/// A zero-scale type contributes a factor of one: the strategy never funds
/// it, so its allocation is almost surely below any `u_t ≥ 0`.
pub fn eval_cdf(params: &StrategyParams, c: usize, u: &[f64]) -> Result<f64> {
    if c >= params.contests() {
        return Err(GameError::Dimension(format!(
            "contest index {c} out of range for {} contests",
            params.contests()
        )));
    }
    if u.len() != params.types() {
        return Err(GameError::Dimension(format!(
            "evaluation point has length {}, expected {}",
            u.len(),
            params.types()
        )));
    }
    for (t, &ut) in u.iter().enumerate() {
        if ut.is_nan() || ut < 0.0 {
            return Err(GameError::Domain(format!(
                "evaluation point[{t}] must be nonnegative, got {ut}"
            )));
        }
    }
    let row = &params.scales[c];
    let term = |t: usize| -> f64 {
        let s = row[t];
        if s > 0.0 {
            (u[t] / s).min(1.0)
        } else {
            1.0
        }
    };
    let inner = match params.form {
        StrategyForm::WeakestLink => (0..params.types())
            .map(term)
            .fold(f64::INFINITY, f64::min),
        StrategyForm::BestShot => {
            let p = params.type_probs.as_ref().expect("best-shot always has probs");
            (0..params.types()).map(|t| p[t] * term(t)).sum()
        }
    };
    Ok(1.0 - params.delta + params.delta * inner)
}

/// Equilibrium description of one contest game: payoffs, the budget ratio
/// that determines them, the rule in force, and (when one exists in closed
/// form) each player's sampled strategy.
///
/// `strategy_x`/`strategy_y` are `None` exactly when the game is lopsided
/// enough that only the payoff is defined (an undefendable type under the
/// weakest-link rule, or an infinite weighted ratio).
#[derive(Debug, Clone)]
pub struct EquilibriumReport {
    /// Expected value share captured by player X.
    pub payoff_x: f64,
    /// Expected value share captured by player Y.
    pub payoff_y: f64,
    /// The scalar budget ratio the payoffs are a function of.
    pub ratio: f64,
    /// Winning rule the equilibrium is for.
    pub rule: WinningRule,
    /// X's equilibrium strategy, absent in the degenerate boundary case.
    pub strategy_x: Option<StrategyParams>,
    /// Y's equilibrium strategy, absent in the degenerate boundary case.
    pub strategy_y: Option<StrategyParams>,
}

impl EquilibriumReport {
    /// True when no closed-form strategy profile exists (payoffs only).
    pub fn is_degenerate(&self) -> bool {
        self.strategy_x.is_none()
    }
}

fn scale_matrix(v: &ContestValues, amounts: &[f64], factor: f64) -> Vec<Vec<f64>> {
    v.values()
        .iter()
        .map(|&vc| amounts.iter().map(|&bt| 2.0 * vc * bt * factor).collect())
        .collect()
}

/// Equilibrium of the weakest-link game: X must match Y on every type,
/// Y needs a single breach.
///
/// X mixes the comonotone uniform profile with activation `min{1/α, 1}`;
/// Y picks one type in proportion to the per-type budget ratios with
/// activation `min{α, 1}`. Both use support scales `2 v_c X_t max{α, 1}`.
/// When some type has `X_t = 0 < Y_t` no defense exists: the report carries
/// payoffs `(0, 1)` and no strategies.
pub fn wl_equilibrium(
    x: &BudgetVector,
    y: &BudgetVector,
    v: &ContestValues,
) -> Result<EquilibriumReport> {
    let alpha = alpha_ratio(x, y)?;
    if alpha.is_infinite() {
        return Ok(EquilibriumReport {
            payoff_x: 0.0,
            payoff_y: 1.0,
            ratio: alpha,
            rule: WinningRule::WeakestLinkForX,
            strategy_x: None,
            strategy_y: None,
        });
    }
    let payoff_x = lotto_payoff(alpha)?;
    let types = x.len();
    let scales = scale_matrix(v, x.amounts(), alpha.max(1.0));
    let delta_x = (1.0 / alpha).min(1.0);
    let delta_y = alpha.min(1.0);
    let type_probs = if alpha > 0.0 {
        x.amounts()
            .iter()
            .zip(y.amounts())
            .map(|(&xt, &yt)| if yt > 0.0 { (yt / xt) / alpha } else { 0.0 })
            .collect()
    } else {
        vec![1.0 / types as f64; types]
    };
    let strategy_x = StrategyParams::weakest_link(delta_x, scales.clone())?;
    let strategy_y = StrategyParams::best_shot(delta_y, type_probs, scales)?;
    Ok(EquilibriumReport {
        payoff_x,
        payoff_y: 1.0 - payoff_x,
        ratio: alpha,
        rule: WinningRule::WeakestLinkForX,
        strategy_x: Some(strategy_x),
        strategy_y: Some(strategy_y),
    })
}

/// Equilibrium of the weighted-contribution game: contests are decided by
/// comparing weighted totals, so only the aggregate ratio β matters.
///
/// Both players mix comonotone uniform profiles whose supports match:
/// the stronger side activates always, the weaker side with probability
/// `min{β, 1}` or `min{1/β, 1}`, each scaling its budget so expected spend
/// stays at the cap. An infinite β (X's aggregate zero, Y's positive) again
/// yields the payoffs-only report.
pub fn wc_equilibrium(
    x: &BudgetVector,
    y: &BudgetVector,
    v: &ContestValues,
    w: &EffectivenessWeights,
) -> Result<EquilibriumReport> {
    let beta = beta_ratio(x, y, w)?;
    let rule = WinningRule::WeightedContribution(w.clone());
    if beta.is_infinite() {
        return Ok(EquilibriumReport {
            payoff_x: 0.0,
            payoff_y: 1.0,
            ratio: beta,
            rule,
            strategy_x: None,
            strategy_y: None,
        });
    }
    let payoff_x = lotto_payoff(beta)?;
    let delta_x = (1.0 / beta).min(1.0);
    let delta_y = beta.min(1.0);
    let scales_x = scale_matrix(v, x.amounts(), beta.max(1.0));
    // A zero β means Y's effective aggregate is zero; Y then never activates
    // and its budget (all on zero-weight types) stays unspent — the budget is
    // a cap, and no spend can change any outcome.
    let factor_y = if beta > 0.0 { (1.0 / beta).max(1.0) } else { 0.0 };
    let scales_y = scale_matrix(v, y.amounts(), factor_y);
    let strategy_x = StrategyParams::weakest_link(delta_x, scales_x)?;
    let strategy_y = StrategyParams::weakest_link(delta_y, scales_y)?;
    Ok(EquilibriumReport {
        payoff_x,
        payoff_y: 1.0 - payoff_x,
        ratio: beta,
        rule,
        strategy_x: Some(strategy_x),
        strategy_y: Some(strategy_y),
    })
}

/// Ceiling on X's payoff when Y plays a single-type strategy with activation
/// `delta_y` and pick distribution `p`: `1 − δ_Y + (δ_Y²/2) Σ_t p_t² X_t/Y_t`.
///
/// Types Y never picks (`p_t = 0`) drop out; a picked type with zero Y
/// budget would make the bound meaningless and is rejected.
pub fn upper_bound(
    delta_y: f64,
    p: &[f64],
    x: &BudgetVector,
    y: &BudgetVector,
) -> Result<f64> {
    check_delta(delta_y)?;
    if p.len() != x.len() || x.len() != y.len() {
        return Err(GameError::Dimension(format!(
            "probabilities ({}), budget X ({}), and budget Y ({}) must share a length",
            p.len(),
            x.len(),
            y.len()
        )));
    }
    check_prob_vector("type probability", p)?;
    let mut quad = 0.0;
    for (t, &pt) in p.iter().enumerate() {
        if pt > 0.0 {
            let yt = y.get(t);
            if yt == 0.0 {
                return Err(GameError::Domain(format!(
                    "type {t} is picked with positive probability but has zero Y budget"
                )));
            }
            quad += pt * pt * x.get(t) / yt;
        }
    }
    Ok(1.0 - delta_y + delta_y * delta_y / 2.0 * quad)
}

/// Minimizer of [`upper_bound`] over activation and pick distribution.
#[derive(Debug, Clone, PartialEq)]
pub struct MinUpperBound {
    /// Optimal activation probability for Y.
    pub delta: f64,
    /// Optimal pick distribution over types.
    pub type_probs: Vec<f64>,
    /// The minimized bound value, equal to the equilibrium payoff of X.
    pub value: f64,
}

/// Best ceiling Y can impose: picks types in proportion to the per-type
/// budget ratios (`p*_t = (Y_t/X_t)/α`), activates with `min{α, 1}`, and
/// drives X's payoff down to exactly the equilibrium value.
///
/// Types with `Y_t = 0` get zero pick probability; the remaining mass is
/// already correctly normalized because α omits those terms too. All `X_t`
/// must be positive — an undefendable type has no finite ceiling.
pub fn min_upper_bound(x: &BudgetVector, y: &BudgetVector) -> Result<MinUpperBound> {
    if x.len() != y.len() {
        return Err(GameError::Dimension(format!(
            "budget X has length {} but budget Y has length {}",
            x.len(),
            y.len()
        )));
    }
    if !x.all_positive() {
        return Err(GameError::Domain(
            "every X budget entry must be positive to bound the payoff".into(),
        ));
    }
    let alpha = alpha_ratio(x, y)?;
    let types = x.len();
    if alpha == 0.0 {
        return Ok(MinUpperBound {
            delta: 0.0,
            type_probs: vec![1.0 / types as f64; types],
            value: 1.0,
        });
    }
    let type_probs = x
        .amounts()
        .iter()
        .zip(y.amounts())
        .map(|(&xt, &yt)| if yt > 0.0 { (yt / xt) / alpha } else { 0.0 })
        .collect();
    Ok(MinUpperBound {
        delta: alpha.min(1.0),
        type_probs,
        value: lotto_payoff(alpha)?,
    })
}

/// Floor on X's payoff when X plays the comonotone profile with activation
/// `delta_x`: `δ_X (1 − (δ_X/2) α)`. An undefendable type (`α = ∞`) floors
/// the payoff at zero for every activation.
pub fn lower_bound(delta_x: f64, x: &BudgetVector, y: &BudgetVector) -> Result<f64> {
    check_delta(delta_x)?;
    let alpha = alpha_ratio(x, y)?;
    if alpha.is_infinite() {
        return Ok(0.0);
    }
    Ok(delta_x * (1.0 - delta_x * alpha / 2.0))
}

/// Maximizer of [`lower_bound`] over the activation probability.
#[derive(Debug, Clone, PartialEq)]
pub struct MaxLowerBound {
    /// Optimal activation probability for X.
    pub delta: f64,
    /// The maximized bound value, equal to the equilibrium payoff of X.
    pub value: f64,
}

/// Best floor X can guarantee: activation `δ*_X = min{1/α, 1}` achieves
/// exactly the equilibrium value, meeting [`min_upper_bound`] in a saddle
/// point. With `α = ∞` the floor collapses to zero.
pub fn max_lower_bound(x: &BudgetVector, y: &BudgetVector) -> Result<MaxLowerBound> {
    let alpha = alpha_ratio(x, y)?;
    if alpha.is_infinite() {
        return Ok(MaxLowerBound {
            delta: 0.0,
            value: 0.0,
        });
    }
    Ok(MaxLowerBound {
        delta: (1.0 / alpha).min(1.0),
        value: lotto_payoff(alpha)?,
    })
}

/// Both weighted-contribution payoff bounds at a common activation δ:
/// the ceiling `1 − δ + δ²/(2β)` and the floor `δ (1 − (δ/2) β)`.
///
/// Requires a finite positive β; a one-sided aggregate has no two-sided
/// bounding problem.
pub fn wc_bounds(
    delta: f64,
    x: &BudgetVector,
    y: &BudgetVector,
    w: &EffectivenessWeights,
) -> Result<(f64, f64)> {
    check_delta(delta)?;
    let beta = beta_ratio(x, y, w)?;
    if !beta.is_finite() || beta <= 0.0 {
        return Err(GameError::Domain(format!(
            "weighted budget ratio must be finite and positive, got {beta}"
        )));
    }
    let ub = 1.0 - delta + delta * delta / (2.0 * beta);
    let lb = delta * (1.0 - delta * beta / 2.0);
    Ok((ub, lb))
}

/// Optimal activations for the two weighted-contribution bounds at ratio
/// `beta`: `min{β, 1}` minimizes the ceiling, `min{1/β, 1}` maximizes the
/// floor, and both meet at the equilibrium value.
pub fn wc_optimal_deltas(beta: f64) -> Result<(f64, f64)> {
    if !beta.is_finite() || beta <= 0.0 {
        return Err(GameError::Domain(format!(
            "weighted budget ratio must be finite and positive, got {beta}"
        )));
    }
    Ok((beta.min(1.0), (1.0 / beta).min(1.0)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn budget(v: &[f64]) -> BudgetVector {
        BudgetVector::new(v.to_vec()).unwrap()
    }

    fn values(v: &[f64]) -> ContestValues {
        ContestValues::new(v.to_vec()).unwrap()
    }

    fn weights(a: &[f64], b: &[f64]) -> EffectivenessWeights {
        EffectivenessWeights::new(a.to_vec(), b.to_vec()).unwrap()
    }

    /// Expected per-type spend implied by the params, for feasibility checks.
    fn implied_spend(params: &StrategyParams) -> Vec<f64> {
        let types = params.types();
        (0..types)
            .map(|t| {
                let col: f64 = (0..params.contests()).map(|c| params.scale(c, t)).sum();
                match params.form() {
                    StrategyForm::WeakestLink => params.delta() * col / 2.0,
                    StrategyForm::BestShot => {
                        params.delta() * params.type_probs().unwrap()[t] * col / 2.0
                    }
                }
            })
            .collect()
    }

    fn assert_spend_matches(params: &StrategyParams, budget: &BudgetVector) {
        for (t, (&spend, &cap)) in implied_spend(params)
            .iter()
            .zip(budget.amounts())
            .enumerate()
        {
            let tol = 1e-9 * cap.max(1.0);
            assert!(
                (spend - cap).abs() <= tol,
                "type {t}: spend {spend} vs budget {cap}"
            );
        }
    }

    #[test]
    fn wl_breakpoint_game() {
        let r = wl_equilibrium(&budget(&[2.0, 2.0]), &budget(&[1.0, 1.0]), &values(&[1.0]))
            .unwrap();
        assert_eq!(r.payoff_x, 0.5);
        assert_eq!(r.ratio, 1.0);
        let sx = r.strategy_x.as_ref().unwrap();
        let sy = r.strategy_y.as_ref().unwrap();
        assert_eq!(sx.delta(), 1.0);
        assert_eq!(sy.delta(), 1.0);
        assert_eq!(sy.type_probs().unwrap(), &[0.5, 0.5]);
        assert_spend_matches(sx, &budget(&[2.0, 2.0]));
        assert_spend_matches(sy, &budget(&[1.0, 1.0]));
    }

    #[test]
    fn wl_strong_defender() {
        let r = wl_equilibrium(&budget(&[4.0, 4.0]), &budget(&[1.0, 1.0]), &values(&[1.0]))
            .unwrap();
        assert_eq!(r.payoff_x, 0.75);
        assert_eq!(r.strategy_y.as_ref().unwrap().delta(), 0.5);
    }

    #[test]
    fn wl_strong_attacker_scales() {
        let r = wl_equilibrium(
            &budget(&[1.0, 1.0]),
            &budget(&[1.0, 1.0]),
            &values(&[0.6, 0.4]),
        )
        .unwrap();
        assert_eq!(r.payoff_x, 0.25);
        let sx = r.strategy_x.as_ref().unwrap();
        assert_eq!(sx.delta(), 0.5);
        // First contest, either type: 2 · 0.6 · 1 · α with α = 2.
        assert!((sx.scale(0, 0) - 2.4).abs() < 1e-12);
        assert!((sx.scale(0, 1) - 2.4).abs() < 1e-12);
        assert_spend_matches(sx, &budget(&[1.0, 1.0]));
        assert_spend_matches(r.strategy_y.as_ref().unwrap(), &budget(&[1.0, 1.0]));
    }

    #[test]
    fn wl_degenerate_undefendable_type() {
        let r = wl_equilibrium(&budget(&[0.0, 1.0]), &budget(&[1.0, 1.0]), &values(&[1.0]))
            .unwrap();
        assert_eq!(r.payoff_x, 0.0);
        assert_eq!(r.payoff_y, 1.0);
        assert_eq!(r.ratio, f64::INFINITY);
        assert!(r.is_degenerate());
        assert!(r.strategy_x.is_none() && r.strategy_y.is_none());
    }

    #[test]
    fn wl_vacuous_type_gets_no_probability() {
        let r = wl_equilibrium(&budget(&[0.0, 1.0]), &budget(&[0.0, 2.0]), &values(&[1.0]))
            .unwrap();
        assert_eq!(r.ratio, 2.0);
        let sy = r.strategy_y.as_ref().unwrap();
        assert_eq!(sy.type_probs().unwrap(), &[0.0, 1.0]);
    }

    #[test]
    fn wl_unopposed_defender() {
        let r = wl_equilibrium(&budget(&[1.0, 2.0]), &budget(&[0.0, 0.0]), &values(&[1.0]))
            .unwrap();
        assert_eq!(r.payoff_x, 1.0);
        let sy = r.strategy_y.as_ref().unwrap();
        assert_eq!(sy.delta(), 0.0);
        assert_eq!(r.strategy_x.as_ref().unwrap().delta(), 1.0);
    }

    #[test]
    fn wl_payoffs_are_constant_sum() {
        let r = wl_equilibrium(
            &budget(&[2.0, 1.5, 0.7]),
            &budget(&[0.4, 1.1, 0.9]),
            &values(&[0.2, 0.5, 0.3]),
        )
        .unwrap();
        assert!((r.payoff_x + r.payoff_y - 1.0).abs() < 1e-12);
        assert!((r.payoff_x - lotto_payoff(r.ratio).unwrap()).abs() < 1e-12);
    }

    #[test]
    fn wc_classic_reduction() {
        let w = weights(&[1.0], &[1.0]);
        let r = wc_equilibrium(&budget(&[1.0]), &budget(&[1.0]), &values(&[1.0]), &w).unwrap();
        assert_eq!(r.payoff_x, 0.5);
        assert_eq!(r.ratio, 1.0);
    }

    #[test]
    fn wc_weak_attacker() {
        let w = weights(&[1.0, 1.0], &[1.0, 1.0]);
        let r = wc_equilibrium(
            &budget(&[3.0, 1.0]),
            &budget(&[1.0, 1.0]),
            &values(&[1.0]),
            &w,
        )
        .unwrap();
        assert_eq!(r.ratio, 0.5);
        assert_eq!(r.payoff_x, 0.75);
        let sx = r.strategy_x.as_ref().unwrap();
        let sy = r.strategy_y.as_ref().unwrap();
        assert_eq!(sx.form(), StrategyForm::WeakestLink);
        assert_eq!(sy.form(), StrategyForm::WeakestLink);
        assert_eq!(sx.delta(), 1.0);
        assert_eq!(sy.delta(), 0.5);
        assert_spend_matches(sx, &budget(&[3.0, 1.0]));
        assert_spend_matches(sy, &budget(&[1.0, 1.0]));
    }

    #[test]
    fn wc_strong_attacker() {
        let w = weights(&[2.0, 0.0], &[0.0, 1.0]);
        let r = wc_equilibrium(
            &budget(&[1.0, 5.0]),
            &budget(&[4.0, 4.0]),
            &values(&[1.0]),
            &w,
        )
        .unwrap();
        assert_eq!(r.ratio, 2.0);
        assert_eq!(r.payoff_x, 0.25);
        let sx = r.strategy_x.as_ref().unwrap();
        assert_eq!(sx.delta(), 0.5);
        assert_eq!(r.strategy_y.as_ref().unwrap().delta(), 1.0);
        assert_spend_matches(sx, &budget(&[1.0, 5.0]));
        assert_spend_matches(r.strategy_y.as_ref().unwrap(), &budget(&[4.0, 4.0]));
    }

    #[test]
    fn wc_degenerate_one_sided_aggregate() {
        let w = weights(&[1.0, 0.0], &[0.0, 1.0]);
        let r = wc_equilibrium(
            &budget(&[0.0, 9.0]),
            &budget(&[1.0, 2.0]),
            &values(&[1.0]),
            &w,
        )
        .unwrap();
        assert!(r.is_degenerate());
        assert_eq!(r.payoff_x, 0.0);
        assert_eq!(r.ratio, f64::INFINITY);
    }

    #[test]
    fn cdf_weakest_link_at_support_max_is_one() {
        let params = StrategyParams::weakest_link(1.0, vec![vec![2.0, 3.0]]).unwrap();
        assert_eq!(eval_cdf(&params, 0, &[2.0, 3.0]).unwrap(), 1.0);
    }

    #[test]
    fn cdf_weakest_link_atom_at_zero() {
        let params = StrategyParams::weakest_link(0.5, vec![vec![2.0, 3.0]]).unwrap();
        assert_eq!(eval_cdf(&params, 0, &[0.0, 0.0]).unwrap(), 0.5);
    }

    #[test]
    fn cdf_best_shot_mixes_per_type_terms() {
        let params =
            StrategyParams::best_shot(1.0, vec![0.5, 0.5], vec![vec![2.0, 3.0]]).unwrap();
        assert_eq!(eval_cdf(&params, 0, &[2.0, 0.0]).unwrap(), 0.5);
    }

    #[test]
    fn cdf_rejects_negative_point() {
        let params = StrategyParams::weakest_link(0.5, vec![vec![2.0]]).unwrap();
        assert!(matches!(
            eval_cdf(&params, 0, &[-0.1]),
            Err(GameError::Domain(_))
        ));
    }

    #[test]
    fn cdf_monotone_in_each_coordinate() {
        let params =
            StrategyParams::best_shot(0.8, vec![0.25, 0.75], vec![vec![2.0, 3.0]]).unwrap();
        let mut prev = 0.0;
        for i in 0..=20 {
            let u = i as f64 * 0.25;
            let f = eval_cdf(&params, 0, &[u, u * 0.5]).unwrap();
            assert!(f >= prev - 1e-15);
            prev = f;
        }
        assert_eq!(
            eval_cdf(&params, 0, &[f64::INFINITY, f64::INFINITY]).unwrap(),
            1.0
        );
    }

    #[test]
    fn upper_bound_inactive_attacker() {
        let b = budget(&[1.0, 1.0]);
        assert_eq!(upper_bound(0.0, &[0.5, 0.5], &b, &b).unwrap(), 1.0);
    }

    #[test]
    fn upper_bound_split_picks() {
        let b = budget(&[1.0, 1.0]);
        assert_eq!(upper_bound(1.0, &[0.5, 0.5], &b, &b).unwrap(), 0.25);
    }

    #[test]
    fn upper_bound_concentrated_pick() {
        let b = budget(&[1.0, 1.0]);
        assert_eq!(upper_bound(1.0, &[1.0, 0.0], &b, &b).unwrap(), 0.5);
    }

    #[test]
    fn upper_bound_rejects_pick_on_zero_budget() {
        let x = budget(&[1.0, 1.0]);
        let y = budget(&[0.0, 1.0]);
        assert!(matches!(
            upper_bound(1.0, &[0.5, 0.5], &x, &y),
            Err(GameError::Domain(_))
        ));
        // Zero pick probability makes the same type vacuous.
        assert!(upper_bound(1.0, &[0.0, 1.0], &x, &y).is_ok());
    }

    #[test]
    fn min_upper_bound_symmetric_game() {
        let b = budget(&[1.0, 1.0]);
        let m = min_upper_bound(&b, &b).unwrap();
        assert_eq!(m.delta, 1.0);
        assert_eq!(m.type_probs, vec![0.5, 0.5]);
        assert_eq!(m.value, 0.25);
    }

    #[test]
    fn min_upper_bound_strong_defender() {
        let m = min_upper_bound(&budget(&[4.0, 4.0]), &budget(&[1.0, 1.0])).unwrap();
        assert_eq!(m.delta, 0.5);
        assert_eq!(m.value, 0.75);
    }

    #[test]
    fn min_upper_bound_asymmetric_budgets() {
        let m = min_upper_bound(&budget(&[2.0, 1.0]), &budget(&[1.0, 1.0])).unwrap();
        assert_eq!(m.delta, 1.0);
        assert!((m.type_probs[0] - 1.0 / 3.0).abs() < 1e-15);
        assert!((m.type_probs[1] - 2.0 / 3.0).abs() < 1e-15);
        assert!((m.value - 1.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn min_upper_bound_zero_y_type_renormalizes() {
        let m = min_upper_bound(&budget(&[1.0, 1.0]), &budget(&[0.0, 1.0])).unwrap();
        assert_eq!(m.type_probs, vec![0.0, 1.0]);
        let p_sum: f64 = m.type_probs.iter().sum();
        assert!((p_sum - 1.0).abs() < 1e-12);
        assert_eq!(m.value, 0.5);
    }

    #[test]
    fn min_upper_bound_requires_positive_x() {
        assert!(matches!(
            min_upper_bound(&budget(&[0.0, 1.0]), &budget(&[1.0, 1.0])),
            Err(GameError::Domain(_))
        ));
    }

    #[test]
    fn lower_bound_inactive_defender() {
        let b = budget(&[1.0, 1.0]);
        assert_eq!(lower_bound(0.0, &b, &b).unwrap(), 0.0);
    }

    #[test]
    fn lower_bound_balanced_game() {
        assert_eq!(
            lower_bound(1.0, &budget(&[2.0, 2.0]), &budget(&[1.0, 1.0])).unwrap(),
            0.5
        );
    }

    #[test]
    fn lower_bound_half_activation() {
        let b = budget(&[1.0, 1.0]);
        assert_eq!(lower_bound(0.5, &b, &b).unwrap(), 0.25);
    }

    #[test]
    fn lower_bound_undefendable_is_zero() {
        assert_eq!(
            lower_bound(0.7, &budget(&[0.0, 1.0]), &budget(&[1.0, 1.0])).unwrap(),
            0.0
        );
    }

    #[test]
    fn max_lower_bound_examples() {
        let b = budget(&[1.0, 1.0]);
        let m = max_lower_bound(&b, &b).unwrap();
        assert_eq!(m.delta, 0.5);
        assert_eq!(m.value, 0.25);

        let m = max_lower_bound(&budget(&[4.0, 4.0]), &budget(&[1.0, 1.0])).unwrap();
        assert_eq!(m.delta, 1.0);
        assert_eq!(m.value, 0.75);

        let m = max_lower_bound(&budget(&[2.0, 1.0]), &budget(&[1.0, 1.0])).unwrap();
        assert!((m.delta - 2.0 / 3.0).abs() < 1e-15);
        assert!((m.value - 1.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn saddle_point_on_fixed_games() {
        let cases: &[(&[f64], &[f64])] = &[
            (&[1.0, 2.0, 3.0], &[0.5, 0.5, 0.5]),
            (&[0.3, 0.9], &[1.4, 0.2]),
            (&[5.0], &[1.0]),
        ];
        for (xs, ys) in cases {
            let x = budget(xs);
            let y = budget(ys);
            let ub = min_upper_bound(&x, &y).unwrap();
            let lb = max_lower_bound(&x, &y).unwrap();
            let value = lotto_payoff(alpha_ratio(&x, &y).unwrap()).unwrap();
            assert!((ub.value - value).abs() < 1e-12);
            assert!((lb.value - value).abs() < 1e-12);
        }
    }

    #[test]
    fn wc_bounds_examples() {
        let w = weights(&[1.0], &[1.0]);
        let x = budget(&[1.0]);
        let (ub, lb) = wc_bounds(1.0, &x, &budget(&[1.0]), &w).unwrap();
        assert_eq!((ub, lb), (0.5, 0.5));
        let (ub, lb) = wc_bounds(1.0, &x, &budget(&[2.0]), &w).unwrap();
        assert_eq!((ub, lb), (0.25, 0.0));
        let (ub, lb) = wc_bounds(0.5, &x, &budget(&[2.0]), &w).unwrap();
        assert_eq!((ub, lb), (0.5625, 0.25));
    }

    #[test]
    fn wc_bounds_rejects_one_sided_ratios() {
        let w = weights(&[1.0], &[1.0]);
        assert!(matches!(
            wc_bounds(0.5, &budget(&[1.0]), &budget(&[0.0]), &w),
            Err(GameError::Domain(_))
        ));
        assert!(matches!(
            wc_bounds(0.5, &budget(&[0.0]), &budget(&[1.0]), &w),
            Err(GameError::Domain(_))
        ));
    }

    #[test]
    fn wc_optimal_deltas_attain_the_value() {
        for beta in [0.1, 0.5, 1.0, 1.7, 4.0] {
            let x = budget(&[1.0]);
            let y = budget(&[beta]);
            let w = weights(&[1.0], &[1.0]);
            let (d_ub, d_lb) = wc_optimal_deltas(beta).unwrap();
            let value = lotto_payoff(beta).unwrap();
            let (ub, _) = wc_bounds(d_ub, &x, &y, &w).unwrap();
            let (_, lb) = wc_bounds(d_lb, &x, &y, &w).unwrap();
            assert!((ub - value).abs() < 1e-12, "beta {beta}: ub {ub} vs {value}");
            assert!((lb - value).abs() < 1e-12, "beta {beta}: lb {lb} vs {value}");
        }
    }

    #[test]
    fn params_constructors_enforce_invariants() {
        assert!(matches!(
            StrategyParams::weakest_link(1.5, vec![vec![1.0]]),
            Err(GameError::Domain(_))
        ));
        assert!(matches!(
            StrategyParams::best_shot(0.5, vec![0.6, 0.6], vec![vec![1.0, 1.0]]),
            Err(GameError::Domain(_))
        ));
        assert!(matches!(
            StrategyParams::best_shot(0.5, vec![1.0], vec![vec![1.0, 1.0]]),
            Err(GameError::Dimension(_))
        ));
        assert!(matches!(
            StrategyParams::weakest_link(0.5, vec![vec![1.0], vec![1.0, 2.0]]),
            Err(GameError::Dimension(_))
        ));
    }

    #[test]
    fn params_validate_matches_constructors() {
        let good =
            StrategyParams::best_shot(0.5, vec![0.5, 0.5], vec![vec![1.0, 2.0]]).unwrap();
        assert!(good.validate().is_ok());
        let json = serde_json::to_string(&good).unwrap();
        let back: StrategyParams = serde_json::from_str(&json).unwrap();
        assert!(back.validate().is_ok());
        assert_eq!(back, good);
    }
}
