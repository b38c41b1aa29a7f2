//! Scenario documents: the JSON input format shared by the payoff and
//! simulation commands and by test fixtures. A scenario pins the game —
//! budgets, contest values, winning rule — and optionally carries cost
//! parameters and Monte Carlo settings.

use general_lotto::core::{BudgetVector, ContestValues, EffectivenessWeights, WinningRule};
use serde::{Deserialize, Serialize};
use std::path::Path;

/// A parsed scenario document. Unknown keys are rejected so that typos in
/// fixtures fail loudly instead of silently using defaults.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioFile {
    /// Number of resource types; must match every per-type list.
    pub resource_types: usize,
    pub budgets_x: Vec<f64>,
    pub budgets_y: Vec<f64>,
    pub contest_values: Vec<f64>,
    pub rule: RuleSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub costs: Option<CostSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub monte_carlo: Option<MonteCarloSpec>,
}

/// Which winning rule the contests use.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum RuleSpec {
    /// X must win every resource type; Y needs any one of them.
    WeakestLink,
    /// Effectiveness-weighted aggregate contributions decide each contest.
    Weighted { a: Vec<f64>, b: Vec<f64> },
}

/// Per-type money costs for the investment stage.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CostSpec {
    pub kappa: Vec<f64>,
    pub sigma: Vec<f64>,
}

/// Monte Carlo settings embedded in a scenario.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonteCarloSpec {
    pub n: usize,
    pub seed: u64,
}

impl ScenarioFile {
    /// Reads and parses a scenario; parse errors carry line/column context.
    pub fn load(path: &Path) -> Result<Self, String> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
        let scenario: ScenarioFile =
            serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))?;
        scenario.check_lengths()?;
        Ok(scenario)
    }

    fn check_lengths(&self) -> Result<(), String> {
        for (field, len) in [
            ("budgets_x", self.budgets_x.len()),
            ("budgets_y", self.budgets_y.len()),
        ] {
            if len != self.resource_types {
                return Err(format!(
                    "{field}: expected {} entries to match resource_types, got {len}",
                    self.resource_types
                ));
            }
        }
        if let RuleSpec::Weighted { a, b } = &self.rule {
            for (field, len) in [("rule.a", a.len()), ("rule.b", b.len())] {
                if len != self.resource_types {
                    return Err(format!(
                        "{field}: expected {} entries to match resource_types, got {len}",
                        self.resource_types
                    ));
                }
            }
        }
        if let Some(costs) = &self.costs {
            for (field, len) in [("costs.kappa", costs.kappa.len()), ("costs.sigma", costs.sigma.len())] {
                if len != self.resource_types {
                    return Err(format!(
                        "{field}: expected {} entries to match resource_types, got {len}",
                        self.resource_types
                    ));
                }
            }
        }
        Ok(())
    }

    pub fn budgets(&self) -> Result<(BudgetVector, BudgetVector), String> {
        let x = BudgetVector::new(self.budgets_x.clone()).map_err(|e| format!("budgets_x: {e}"))?;
        let y = BudgetVector::new(self.budgets_y.clone()).map_err(|e| format!("budgets_y: {e}"))?;
        Ok((x, y))
    }

    pub fn values(&self) -> Result<ContestValues, String> {
        ContestValues::new(self.contest_values.clone()).map_err(|e| format!("contest_values: {e}"))
    }

    pub fn winning_rule(&self) -> Result<WinningRule, String> {
        Ok(match &self.rule {
            RuleSpec::WeakestLink => WinningRule::WeakestLinkForX,
            RuleSpec::Weighted { a, b } => WinningRule::WeightedContribution(
                EffectivenessWeights::new(a.clone(), b.clone()).map_err(|e| format!("rule: {e}"))?,
            ),
        })
    }
}
