//! The five subcommands. Each returns the process exit code for meaningful
//! outcomes (0 = success/within tolerance, 2 = verification failure) or an
//! input-error message that the caller reports with exit code 1.

use crate::render::{fmt_sig, json_num, render_csv};
use crate::scenario::{RuleSpec, ScenarioFile};
use general_lotto::core::{BudgetVector, ContestValues, WinningRule};
use general_lotto::equilibria::{
    max_lower_bound, min_upper_bound, wc_equilibrium, wl_equilibrium, EquilibriumReport,
    StrategyParams,
};
use general_lotto::investment::{
    investment_fractions, mlc_equilibrium, sunk_cost_equilibrium, CostProfile,
};
use general_lotto::oracles::{
    maxmin_subset_identity, numeric_max_lb, numeric_min_ub, numeric_mlc_best_response,
    numeric_sunk_division, GridSpec,
};
use general_lotto::sampling::mc_payoff;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{Map, Value};
use std::path::Path;

/// Output layout for the invest command.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Csv,
}

/// Which figure-data sweep to generate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepKind {
    /// Payoff of X over a grid of two-type budget pairs against Y = (1, 1).
    Contour,
    /// Investment outcomes as the first resource's cost for X varies.
    InvestSweep,
}

/// Which oracle suite to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Bounds,
    Identity,
    Sunk,
    Mlc,
}

fn solve(scenario: &ScenarioFile) -> Result<(EquilibriumReport, ContestValues), String> {
    let (x, y) = scenario.budgets()?;
    let v = scenario.values()?;
    let report = match scenario.winning_rule()? {
        WinningRule::WeakestLinkForX => wl_equilibrium(&x, &y, &v),
        WinningRule::WeightedContribution(w) => wc_equilibrium(&x, &y, &v, &w),
    }
    .map_err(|e| e.to_string())?;
    Ok((report, v))
}

fn strategy_value(strategy: &Option<StrategyParams>) -> Result<Value, String> {
    match strategy {
        Some(p) => serde_json::to_value(p).map_err(|e| e.to_string()),
        None => Ok(Value::Null),
    }
}

fn print_json(obj: Map<String, Value>) {
    println!(
        "{}",
        serde_json::to_string_pretty(&Value::Object(obj)).expect("tree has no foreign types")
    );
}

/// Equilibrium payoffs and strategies for a scenario, echoed back with the
/// parsed scenario so outputs are self-describing and replayable.
pub fn cmd_payoff(scenario_path: &Path) -> Result<i32, String> {
    let scenario = ScenarioFile::load(scenario_path)?;
    let (report, _) = solve(&scenario)?;
    let mut obj = Map::new();
    obj.insert("degenerate".into(), Value::Bool(report.is_degenerate()));
    obj.insert("payoff_x".into(), json_num(report.payoff_x));
    obj.insert("payoff_y".into(), json_num(report.payoff_y));
    obj.insert("ratio".into(), json_num(report.ratio));
    obj.insert(
        "rule".into(),
        Value::String(
            match scenario.rule {
                RuleSpec::WeakestLink => "weakest_link",
                RuleSpec::Weighted { .. } => "weighted",
            }
            .into(),
        ),
    );
    obj.insert(
        "scenario".into(),
        serde_json::to_value(&scenario).map_err(|e| e.to_string())?,
    );
    obj.insert("strategy_x".into(), strategy_value(&report.strategy_x)?);
    obj.insert("strategy_y".into(), strategy_value(&report.strategy_y)?);
    print_json(obj);
    Ok(0)
}

fn load_strategy(
    label: &str,
    path: &Path,
    contests: usize,
    types: usize,
) -> Result<StrategyParams, String> {
    let text =
        std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let params: StrategyParams =
        serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    params
        .validate()
        .map_err(|e| format!("{label}: {e}"))?;
    if params.contests() != contests || params.types() != types {
        return Err(format!(
            "{label}: strategy shape is {}x{} but the scenario needs {contests}x{types}",
            params.contests(),
            params.types()
        ));
    }
    Ok(params)
}

/// Monte Carlo estimate of the scenario's payoff, gated on the z-score
/// against the closed-form value: exit 0 iff |z| ≤ 4.
pub fn cmd_simulate(
    scenario_path: &Path,
    n_flag: Option<usize>,
    seed_flag: Option<u64>,
    strategy_x: Option<&Path>,
    strategy_y: Option<&Path>,
) -> Result<i32, String> {
    let scenario = ScenarioFile::load(scenario_path)?;
    let n = n_flag
        .or(scenario.monte_carlo.map(|m| m.n))
        .ok_or("no sample count: pass --n or add a monte_carlo block")?;
    let seed = seed_flag
        .or(scenario.monte_carlo.map(|m| m.seed))
        .ok_or("no seed: pass --seed or add a monte_carlo block")?;
    let (report, v) = solve(&scenario)?;
    let rule = scenario.winning_rule()?;
    let types = scenario.resource_types;
    let pick = |label: &str,
                own: &Option<StrategyParams>,
                file: Option<&Path>|
     -> Result<StrategyParams, String> {
        match file {
            Some(path) => load_strategy(label, path, v.len(), types),
            None => own.clone().ok_or(format!(
                "{label}: the scenario is degenerate and has no equilibrium strategy; provide one"
            )),
        }
    };
    let params_x = pick("strategy_x", &report.strategy_x, strategy_x)?;
    let params_y = pick("strategy_y", &report.strategy_y, strategy_y)?;
    let estimate = mc_payoff(&params_x, &params_y, &v, &rule, n, seed).map_err(|e| e.to_string())?;
    let z = if estimate.std_error == 0.0 {
        if estimate.mean == report.payoff_x {
            0.0
        } else if estimate.mean > report.payoff_x {
            f64::INFINITY
        } else {
            f64::NEG_INFINITY
        }
    } else {
        (estimate.mean - report.payoff_x) / estimate.std_error
    };
    let mut obj = Map::new();
    obj.insert("analytic".into(), json_num(report.payoff_x));
    obj.insert("mean".into(), json_num(estimate.mean));
    obj.insert("std_error".into(), json_num(estimate.std_error));
    obj.insert("z".into(), json_num(z));
    obj.insert("n".into(), Value::from(estimate.n_samples as u64));
    obj.insert("seed".into(), Value::from(seed));
    obj.insert("within_tolerance".into(), Value::Bool(z.abs() <= 4.0));
    print_json(obj);
    Ok(if z.abs() <= 4.0 { 0 } else { 2 })
}

/// Two-stage investment equilibrium for linear money costs.
pub fn cmd_invest(kappa: &[f64], sigma: &[f64], format: OutputFormat) -> Result<i32, String> {
    let costs =
        CostProfile::new(kappa.to_vec(), sigma.to_vec()).map_err(|e| format!("costs: {e}"))?;
    let eq = mlc_equilibrium(&costs);
    let (x_frac, y_frac) = investment_fractions(&costs);
    match format {
        OutputFormat::Json => {
            let mut obj = Map::new();
            obj.insert("r".into(), json_num(eq.r));
            obj.insert("money_x".into(), json_num(eq.money_x));
            obj.insert("money_y".into(), json_num(eq.money_y));
            obj.insert("u_x".into(), json_num(eq.u_x));
            obj.insert("u_y".into(), json_num(eq.u_y));
            for (key, list) in [
                ("x_star", eq.x_star.amounts()),
                ("y_star", eq.y_star.amounts()),
                ("x_fractions", &x_frac[..]),
                ("y_fractions", &y_frac[..]),
            ] {
                obj.insert(
                    key.into(),
                    Value::Array(list.iter().map(|&v| json_num(v)).collect()),
                );
            }
            print_json(obj);
        }
        OutputFormat::Csv => {
            let mut header: Vec<String> = ["r", "money_x", "money_y", "u_x", "u_y"]
                .iter()
                .map(|s| s.to_string())
                .collect();
            let mut row = vec![eq.r, eq.money_x, eq.money_y, eq.u_x, eq.u_y];
            for (prefix, list) in [
                ("x_star", eq.x_star.amounts()),
                ("y_star", eq.y_star.amounts()),
                ("x_frac", &x_frac[..]),
                ("y_frac", &y_frac[..]),
            ] {
                for (t, &value) in list.iter().enumerate() {
                    header.push(format!("{prefix}_{}", t + 1));
                    row.push(value);
                }
            }
            let header_refs: Vec<&str> = header.iter().map(String::as_str).collect();
            print!("{}", render_csv(&header_refs, &[row]));
        }
    }
    Ok(0)
}

/// Writes figure data as CSV and prints a one-line summary.
pub fn cmd_sweep(
    kind: SweepKind,
    out: &Path,
    min: f64,
    max: f64,
    steps: usize,
    kappa1_min: f64,
    kappa1_max: f64,
) -> Result<i32, String> {
    let (header, rows): (Vec<&str>, Vec<Vec<f64>>) = match kind {
        SweepKind::Contour => {
            if steps < 2 {
                return Err("contour needs at least 2 steps".into());
            }
            if !(min > 0.0 && max > min) {
                return Err("contour needs 0 < min < max".into());
            }
            let step = (max - min) / (steps - 1) as f64;
            let points: Vec<f64> = (0..steps).map(|i| min + i as f64 * step).collect();
            let y = BudgetVector::new(vec![1.0, 1.0]).map_err(|e| e.to_string())?;
            let v = ContestValues::new(vec![1.0]).map_err(|e| e.to_string())?;
            let mut rows = Vec::with_capacity(steps * steps);
            for &x1 in &points {
                for &x2 in &points {
                    let x = BudgetVector::new(vec![x1, x2]).map_err(|e| e.to_string())?;
                    let report = wl_equilibrium(&x, &y, &v).map_err(|e| e.to_string())?;
                    rows.push(vec![x1, x2, report.payoff_x]);
                }
            }
            (vec!["X1", "X2", "payoff_x"], rows)
        }
        SweepKind::InvestSweep => {
            if !(kappa1_min > 0.0 && kappa1_max >= kappa1_min) {
                return Err("invest_sweep needs 0 < kappa1-min <= kappa1-max".into());
            }
            let sigma = vec![3.0, 2.0, 1.8];
            let mut rows = Vec::new();
            let mut i = 0u32;
            loop {
                let kappa1 = kappa1_min + f64::from(i) * 0.05;
                if kappa1 > kappa1_max + 1e-12 {
                    break;
                }
                let costs = CostProfile::new(vec![kappa1, 0.2, 0.3], sigma.clone())
                    .map_err(|e| e.to_string())?;
                let eq = mlc_equilibrium(&costs);
                let (x_frac, y_frac) = investment_fractions(&costs);
                let mut row = vec![
                    kappa1,
                    eq.r,
                    eq.x_star.amounts().iter().sum(),
                    eq.y_star.amounts().iter().sum(),
                    eq.money_x,
                    eq.u_x,
                    eq.u_y,
                ];
                row.extend(&y_frac);
                row.extend(&x_frac);
                rows.push(row);
                i += 1;
            }
            (
                vec![
                    "kappa1", "r", "X_tot", "Y_tot", "M_star", "U_x", "U_y", "Ybar_1", "Ybar_2",
                    "Ybar_3", "Xbar_1", "Xbar_2", "Xbar_3",
                ],
                rows,
            )
        }
    };
    let text = render_csv(&header, &rows);
    std::fs::write(out, text).map_err(|e| format!("cannot write {}: {e}", out.display()))?;
    println!("wrote {} rows to {}", rows.len(), out.display());
    Ok(0)
}

struct SuiteOutcome {
    worst: f64,
    failing: Option<Value>,
}

impl SuiteOutcome {
    fn new() -> Self {
        Self {
            worst: f64::NEG_INFINITY,
            failing: None,
        }
    }

    fn record(&mut self, trial: usize, gap: f64, tol: f64, instance: impl Fn() -> Value) {
        println!("trial {trial}: gap {}", fmt_sig(gap));
        if gap > self.worst {
            self.worst = gap;
        }
        if gap > tol && self.failing.is_none() {
            self.failing = Some(instance());
        }
    }

    fn finish(self, name: &str, trials: usize, tol: f64) -> i32 {
        println!("{name} suite: worst gap {}", fmt_sig(self.worst));
        match self.failing {
            Some(instance) => {
                println!(
                    "FAIL: tolerance {} exceeded; first failing instance: {}",
                    fmt_sig(tol),
                    serde_json::to_string(&instance).expect("instance is plain data")
                );
                2
            }
            None => {
                println!("PASS: {trials} trials within {}", fmt_sig(tol));
                0
            }
        }
    }
}

fn json_list(values: &[f64]) -> Value {
    Value::Array(values.iter().map(|&v| json_num(v)).collect())
}

fn verify_bounds(seed: u64, trials: usize) -> Result<i32, String> {
    const TOL: f64 = 0.01;
    let grid = GridSpec::new(200).map_err(|e| e.to_string())?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut outcome = SuiteOutcome::new();
    for trial in 1..=trials {
        let t = rng.random_range(1..=4);
        let x: Vec<f64> = (0..t).map(|_| rng.random_range(0.1..10.0)).collect();
        let y: Vec<f64> = (0..t).map(|_| rng.random_range(0.1..10.0)).collect();
        let (xb, yb) = (
            BudgetVector::new(x.clone()).map_err(|e| e.to_string())?,
            BudgetVector::new(y.clone()).map_err(|e| e.to_string())?,
        );
        let closed_ub = min_upper_bound(&xb, &yb).map_err(|e| e.to_string())?;
        let closed_lb = max_lower_bound(&xb, &yb).map_err(|e| e.to_string())?;
        let grid_ub = numeric_min_ub(&xb, &yb, &grid).map_err(|e| e.to_string())?;
        let grid_lb = numeric_max_lb(&xb, &yb, &grid).map_err(|e| e.to_string())?;
        let gap = (grid_ub.value - closed_ub.value)
            .abs()
            .max((grid_lb.value - closed_lb.value).abs());
        outcome.record(trial, gap, TOL, || {
            let mut m = Map::new();
            m.insert("x".into(), json_list(&x));
            m.insert("y".into(), json_list(&y));
            Value::Object(m)
        });
    }
    Ok(outcome.finish("bounds", trials, TOL))
}

fn verify_identity(seed: u64, trials: usize) -> Result<i32, String> {
    const TOL: f64 = 1e-9;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut outcome = SuiteOutcome::new();
    for trial in 1..=trials {
        let t = rng.random_range(1..=12);
        let z: Vec<f64> = (0..t).map(|_| rng.random_range(0.0..10.0)).collect();
        let (lhs, rhs) = maxmin_subset_identity(&z).map_err(|e| e.to_string())?;
        outcome.record(trial, (lhs - rhs).abs(), TOL, || {
            let mut m = Map::new();
            m.insert("z".into(), json_list(&z));
            Value::Object(m)
        });
    }
    Ok(outcome.finish("identity", trials, TOL))
}

fn verify_sunk(seed: u64, trials: usize) -> Result<i32, String> {
    const TOL: f64 = 0.02;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut outcome = SuiteOutcome::new();
    for trial in 1..=trials {
        let t = rng.random_range(2..=3);
        let money_x = rng.random_range(0.6..1.8);
        let money_y = rng.random_range(0.6..1.8);
        let kappa: Vec<f64> = (0..t).map(|_| rng.random_range(0.6..1.8)).collect();
        let sigma: Vec<f64> = (0..t).map(|_| rng.random_range(0.6..1.8)).collect();
        let costs =
            CostProfile::new(kappa.clone(), sigma.clone()).map_err(|e| e.to_string())?;
        let grid = GridSpec::new(if t == 2 { 400 } else { 150 }).map_err(|e| e.to_string())?;
        let closed =
            sunk_cost_equilibrium(money_x, money_y, &costs).map_err(|e| e.to_string())?;
        let search =
            numeric_sunk_division(money_x, money_y, &costs, &grid).map_err(|e| e.to_string())?;
        let gap = (0..t)
            .map(|i| {
                (search.x_hat.get(i) - closed.x_star.get(i))
                    .abs()
                    .max((search.y_hat.get(i) - closed.y_star.get(i)).abs())
            })
            .fold(0.0f64, f64::max);
        outcome.record(trial, gap, TOL, || {
            let mut m = Map::new();
            m.insert("money_x".into(), json_num(money_x));
            m.insert("money_y".into(), json_num(money_y));
            m.insert("kappa".into(), json_list(&kappa));
            m.insert("sigma".into(), json_list(&sigma));
            Value::Object(m)
        });
    }
    Ok(outcome.finish("sunk", trials, TOL))
}

fn verify_mlc(seed: u64, trials: usize) -> Result<i32, String> {
    const TOL: f64 = 1e-3;
    let grid = GridSpec::new(2000).map_err(|e| e.to_string())?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut outcome = SuiteOutcome::new();
    for trial in 1..=trials {
        let t = rng.random_range(1..=5);
        let kappa: Vec<f64> = (0..t).map(|_| rng.random_range(0.1..5.0)).collect();
        let sigma: Vec<f64> = (0..t).map(|_| rng.random_range(0.1..5.0)).collect();
        let costs =
            CostProfile::new(kappa.clone(), sigma.clone()).map_err(|e| e.to_string())?;
        let (gain_x, gain_y) = numeric_mlc_best_response(&costs, &grid).map_err(|e| e.to_string())?;
        outcome.record(trial, gain_x.max(gain_y), TOL, || {
            let mut m = Map::new();
            m.insert("kappa".into(), json_list(&kappa));
            m.insert("sigma".into(), json_list(&sigma));
            Value::Object(m)
        });
    }
    Ok(outcome.finish("mlc", trials, TOL))
}

/// Runs one oracle suite on randomized instances; exit 0 iff every trial is
/// within the suite's tolerance, else 2 with the first breach serialized.
pub fn cmd_verify(suite: Suite, seed: u64, trials: Option<usize>) -> Result<i32, String> {
    match suite {
        Suite::Bounds => verify_bounds(seed, trials.unwrap_or(50)),
        Suite::Identity => verify_identity(seed, trials.unwrap_or(100)),
        Suite::Sunk => verify_sunk(seed, trials.unwrap_or(25)),
        Suite::Mlc => verify_mlc(seed, trials.unwrap_or(50)),
    }
}
