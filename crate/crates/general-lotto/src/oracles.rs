//! Brute-force numerical baselines for the closed forms: exhaustive subset
//! enumeration for the max/min identity, grid searches over the bound
//! parameters, a constrained lattice search for the sunk-cost division, and
//! a money-grid deviation scan for the investment equilibrium.
//!
//! These searches deliberately avoid the closed-form optimizers they are
//! meant to check: they consult only evaluators — the scalar payoff curve,
//! the bound functions at a given point, and the net utility at a given
//! money pair — and search by enumeration.

use crate::core::{lotto_payoff, BudgetVector, GameError, Result};
use crate::equilibria::{lower_bound, upper_bound};
use crate::investment::{mlc_equilibrium, utility_x, utility_y, CostProfile};

/// Resolution of a grid search: the number of subdivisions per axis
/// (simplex grids enumerate integer compositions of this number).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GridSpec {
    resolution: usize,
}

impl GridSpec {
    /// Builds a grid specification; fewer than two subdivisions cannot
    /// bracket anything.
    pub fn new(resolution: usize) -> Result<Self> {
        if resolution < 2 {
            return Err(GameError::Domain(format!(
                "grid resolution must be at least 2, got {resolution}"
            )));
        }
        Ok(Self { resolution })
    }

    /// Subdivisions per axis.
    pub fn resolution(&self) -> usize {
        self.resolution
    }
}

/// Largest supported length for the subset-enumeration identity (2^n terms).
pub const SUBSET_IDENTITY_MAX_LEN: usize = 20;

/// Evaluates both sides of the inclusion–exclusion identity
/// `Σ_{∅≠S} (−1)^{|S|+1} min_{t∈S} z_t = max_t z_t` by explicit enumeration
/// of all nonempty subsets, returning `(lhs, rhs)` for the caller to compare.
pub fn maxmin_subset_identity(z: &[f64]) -> Result<(f64, f64)> {
    if z.is_empty() || z.len() > SUBSET_IDENTITY_MAX_LEN {
        return Err(GameError::Dimension(format!(
            "subset enumeration needs between 1 and {SUBSET_IDENTITY_MAX_LEN} entries, got {}",
            z.len()
        )));
    }
    for (t, &zt) in z.iter().enumerate() {
        if !zt.is_finite() || zt < 0.0 {
            return Err(GameError::Domain(format!(
                "entry [{t}] must be finite and nonnegative, got {zt}"
            )));
        }
    }
    let n = z.len();
    let mut lhs = 0.0;
    for mask in 1u32..(1u32 << n) {
        let mut min = f64::INFINITY;
        let mut bits = mask;
        while bits != 0 {
            let t = bits.trailing_zeros() as usize;
            min = min.min(z[t]);
            bits &= bits - 1;
        }
        if mask.count_ones() % 2 == 1 {
            lhs += min;
        } else {
            lhs -= min;
        }
    }
    let rhs = z.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    Ok((lhs, rhs))
}

/// Result of the grid minimization of the payoff ceiling.
#[derive(Debug, Clone, PartialEq)]
pub struct UbSearch {
    /// Minimal ceiling found on the grid.
    pub value: f64,
    /// Activation probability attaining it.
    pub delta: f64,
    /// Pick distribution attaining it.
    pub type_probs: Vec<f64>,
}

/// Result of the grid maximization of the payoff floor.
#[derive(Debug, Clone, PartialEq)]
pub struct LbSearch {
    /// Maximal floor found on the grid.
    pub value: f64,
    /// Activation probability attaining it.
    pub delta: f64,
}

fn check_positive_budget(label: &str, b: &BudgetVector) -> Result<()> {
    if !b.all_positive() {
        return Err(GameError::Domain(format!(
            "every {label} entry must be positive for the grid search"
        )));
    }
    Ok(())
}

/// Walks every composition of `total` into `parts` nonnegative integers.
fn for_each_composition(total: usize, parts: usize, f: &mut impl FnMut(&[usize])) {
    fn recur(slot: usize, remaining: usize, scratch: &mut [usize], f: &mut impl FnMut(&[usize])) {
        if slot == scratch.len() - 1 {
            scratch[slot] = remaining;
            f(scratch);
            return;
        }
        for value in 0..=remaining {
            scratch[slot] = value;
            recur(slot + 1, remaining - value, scratch, f);
        }
    }
    let mut scratch = vec![0usize; parts];
    recur(0, total, &mut scratch, f);
}

/// Grid-minimizes the payoff ceiling over activation × pick simplex.
///
/// The pick simplex is covered by compositions of the resolution integer;
/// for each pick distribution the ceiling is a strictly convex parabola in
/// the activation, so its exact minimum over the activation grid sits at a
/// neighbor of the vertex (or at an end), which is all this scan evaluates.
/// Supports at most four types to keep the lattice enumerable.
pub fn numeric_min_ub(x: &BudgetVector, y: &BudgetVector, grid: &GridSpec) -> Result<UbSearch> {
    if x.len() != y.len() {
        return Err(GameError::Dimension(format!(
            "budget X has length {} but budget Y has length {}",
            x.len(),
            y.len()
        )));
    }
    if x.len() > 4 {
        return Err(GameError::Dimension(format!(
            "pick-simplex search supports at most 4 types, got {}",
            x.len()
        )));
    }
    check_positive_budget("X budget", x)?;
    check_positive_budget("Y budget", y)?;
    let types = x.len();
    let res = grid.resolution();
    let resf = res as f64;
    let ratios: Vec<f64> = x
        .amounts()
        .iter()
        .zip(y.amounts())
        .map(|(&xt, &yt)| xt / yt)
        .collect();
    let mut best_value = f64::INFINITY;
    let mut best_delta = 0.0;
    let mut best_comp = vec![0usize; types];
    for_each_composition(res, types, &mut |comp| {
        // Quadratic coefficient of the ceiling at this pick distribution.
        let mut g = 0.0;
        for (t, &k) in comp.iter().enumerate() {
            let pt = k as f64 / resf;
            g += pt * pt * ratios[t];
        }
        // Ceiling is 1 − δ + (g/2) δ²; with g > 0 it is strictly convex, so
        // the grid minimum lies beside the parabola vertex δ = 1/g.
        let vertex_index = resf / g;
        let lo = vertex_index.floor().clamp(0.0, resf) as usize;
        for i in [lo, (lo + 1).min(res)] {
            let delta = i as f64 / resf;
            let value = 1.0 - delta + g / 2.0 * delta * delta;
            if value < best_value {
                best_value = value;
                best_delta = delta;
                best_comp.copy_from_slice(comp);
            }
        }
    });
    let type_probs: Vec<f64> = best_comp.iter().map(|&k| k as f64 / resf).collect();
    // Re-evaluate the winner through the bound function itself.
    let value = upper_bound(best_delta, &type_probs, x, y)?;
    Ok(UbSearch {
        value,
        delta: best_delta,
        type_probs,
    })
}

/// Grid-maximizes the payoff floor over the activation probability.
pub fn numeric_max_lb(x: &BudgetVector, y: &BudgetVector, grid: &GridSpec) -> Result<LbSearch> {
    if x.len() != y.len() {
        return Err(GameError::Dimension(format!(
            "budget X has length {} but budget Y has length {}",
            x.len(),
            y.len()
        )));
    }
    check_positive_budget("X budget", x)?;
    let res = grid.resolution();
    let mut best = LbSearch {
        value: f64::NEG_INFINITY,
        delta: 0.0,
    };
    for i in 0..=res {
        let delta = i as f64 / res as f64;
        let value = lower_bound(delta, x, y)?;
        if value > best.value {
            best = LbSearch { value, delta };
        }
    }
    Ok(best)
}

/// Result of the constrained lattice search for the sunk-cost division.
#[derive(Debug, Clone, PartialEq)]
pub struct SunkSearch {
    /// X's best division found on the money-constrained lattice.
    pub x_hat: BudgetVector,
    /// Y's best division found on its lattice.
    pub y_hat: BudgetVector,
    /// X's guaranteed payoff at `x_hat` (worst case over all Y divisions).
    pub value_x: f64,
    /// X's payoff ceiling at `y_hat` (best X division against it).
    pub value_y: f64,
    /// Alternating sweeps executed before the iterates stopped moving.
    pub sweeps: usize,
}

const SWEEP_CAP: usize = 50;
const MOVEMENT_TOL: f64 = 1e-6;
/// Refinement of the lattice spacing in the zoom stage.
const ZOOM_FACTOR: usize = 5;
/// Half-width of the zoom window, in coarse cells.
const WINDOW_CELLS: usize = 5;

/// All compositions of `total` into `parts` integers.
fn simplex_lattice(total: usize, parts: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for_each_composition(total, parts, &mut |comp| out.push(comp.to_vec()));
    out
}

/// Compositions of `total` into `parts` integers with every part within
/// `halfwidth` of `center` (a window around a previous optimum).
fn windowed_lattice(
    total: usize,
    parts: usize,
    center: &[usize],
    halfwidth: usize,
) -> Vec<Vec<usize>> {
    let lo = |t: usize| center[t].saturating_sub(halfwidth);
    let hi = |t: usize| (center[t] + halfwidth).min(total);
    let mut out = Vec::new();
    let mut comp = vec![0usize; parts];
    match parts {
        2 => {
            for k0 in lo(0)..=hi(0) {
                let k1 = total - k0;
                if k1 >= lo(1) && k1 <= hi(1) && k0 <= total {
                    comp[0] = k0;
                    comp[1] = k1;
                    out.push(comp.clone());
                }
            }
        }
        3 => {
            for k0 in lo(0)..=hi(0).min(total) {
                for k1 in lo(1)..=hi(1).min(total - k0) {
                    let k2 = total - k0 - k1;
                    if k2 >= lo(2) && k2 <= hi(2) {
                        comp[0] = k0;
                        comp[1] = k1;
                        comp[2] = k2;
                        out.push(comp.clone());
                    }
                }
            }
        }
        _ => unreachable!("sunk-division search is limited to 2 or 3 types"),
    }
    out
}

/// Budgets for lattice point `comp`: type `t` receives money share
/// `comp[t]/denom` converted to resource units at its own unit cost.
fn lattice_budgets(money: f64, costs: &[f64], comp: &[usize], denom: usize) -> Vec<f64> {
    comp.iter()
        .zip(costs)
        .map(|(&k, &c)| money * (k as f64 / denom as f64) / c)
        .collect()
}

/// X's security sweep: the division maximizing X's worst-case payoff.
///
/// For a fixed X the adversary's payoff-minimizing division is linear in Y,
/// hence extremal at a vertex (all money on one type), so the inner
/// minimum is exact — only X's side is gridded.
fn sunk_x_sweep(
    money_x: f64,
    money_y: f64,
    costs: &CostProfile,
    lattice: &[Vec<usize>],
    denom: usize,
) -> (usize, f64) {
    let mut best_idx = 0;
    let mut best_alpha = f64::INFINITY;
    for (idx, comp) in lattice.iter().enumerate() {
        let x = lattice_budgets(money_x, costs.kappa(), comp, denom);
        let mut worst = 0.0f64;
        for (t, &sigma_t) in costs.sigma().iter().enumerate() {
            let vertex_budget = money_y / sigma_t;
            let alpha = if x[t] > 0.0 {
                vertex_budget / x[t]
            } else {
                f64::INFINITY
            };
            worst = worst.max(alpha);
        }
        if worst < best_alpha {
            best_alpha = worst;
            best_idx = idx;
        }
    }
    (best_idx, best_alpha)
}

/// Y's security sweep: the division minimizing X's best-case payoff, with
/// X's response searched over `x_inverse` (flattened reciprocal budgets of
/// X's lattice, row-major, `types` entries per point).
fn sunk_y_sweep(
    money_y: f64,
    costs: &CostProfile,
    lattice: &[Vec<usize>],
    denom: usize,
    x_inverse: &[f64],
    types: usize,
) -> (usize, f64) {
    let mut best_idx = 0;
    let mut best_alpha = f64::NEG_INFINITY;
    for (idx, comp) in lattice.iter().enumerate() {
        let y = lattice_budgets(money_y, costs.sigma(), comp, denom);
        let active: Vec<(usize, f64)> = y
            .iter()
            .copied()
            .enumerate()
            .filter(|&(_, yt)| yt > 0.0)
            .collect();
        // X picks the division minimizing the ratio sum against this Y.
        let mut response = f64::INFINITY;
        for inv in x_inverse.chunks_exact(types) {
            let mut alpha = 0.0;
            for &(t, yt) in &active {
                alpha += yt * inv[t];
            }
            if alpha < response {
                response = alpha;
            }
        }
        if response > best_alpha {
            best_alpha = response;
            best_idx = idx;
        }
    }
    (best_idx, best_alpha)
}

fn inverse_budgets(
    money: f64,
    costs: &[f64],
    lattice: &[Vec<usize>],
    denom: usize,
) -> Vec<f64> {
    let mut flat = Vec::with_capacity(lattice.len() * costs.len());
    for comp in lattice {
        for budget in lattice_budgets(money, costs, comp, denom) {
            flat.push(if budget > 0.0 { 1.0 / budget } else { f64::INFINITY });
        }
    }
    flat
}

/// Constrained lattice search for the sunk-cost division (two or three
/// types): alternating security sweeps on money-share lattices, one coarse
/// pass and then refined passes in a fixed window around the coarse optimum
/// (spacing shrunk fivefold), iterated until the iterates stop moving.
///
/// The sweeps never consult the closed-form division; they only evaluate
/// ratio sums and the scalar payoff curve on lattice points.
pub fn numeric_sunk_division(
    money_x: f64,
    money_y: f64,
    costs: &CostProfile,
    grid: &GridSpec,
) -> Result<SunkSearch> {
    let types = costs.len();
    if !(2..=3).contains(&types) {
        return Err(GameError::Dimension(format!(
            "sunk-division search supports 2 or 3 types, got {types}"
        )));
    }
    for (label, m) in [("X money", money_x), ("Y money", money_y)] {
        if !m.is_finite() || m <= 0.0 {
            return Err(GameError::Domain(format!(
                "{label} must be finite and positive, got {m}"
            )));
        }
    }
    let res = grid.resolution();
    let fine_res = res * ZOOM_FACTOR;
    let fine_halfwidth = WINDOW_CELLS * ZOOM_FACTOR;

    let coarse_x = simplex_lattice(res, types);
    let coarse_y = simplex_lattice(res, types);

    let mut fine: Option<(Vec<Vec<usize>>, Vec<Vec<usize>>, Vec<f64>)> = None;
    let mut prev: Option<(Vec<f64>, Vec<f64>)> = None;
    let mut sweeps = 0;
    loop {
        sweeps += 1;
        if sweeps > SWEEP_CAP {
            return Err(GameError::Domain(format!(
                "sunk-division search did not converge within {SWEEP_CAP} sweeps"
            )));
        }
        let (x_lattice, y_lattice, x_inverse, denom): (&[Vec<usize>], &[Vec<usize>], &[f64], usize) =
            match &fine {
                None => {
                    // The coarse pass searches the full lattices.
                    let inv = inverse_budgets(money_x, costs.kappa(), &coarse_x, res);
                    let (xi, _) = sunk_x_sweep(money_x, money_y, costs, &coarse_x, res);
                    let (yi, _) =
                        sunk_y_sweep(money_y, costs, &coarse_y, res, &inv, types);
                    let center_x: Vec<usize> =
                        coarse_x[xi].iter().map(|&k| k * ZOOM_FACTOR).collect();
                    let center_y: Vec<usize> =
                        coarse_y[yi].iter().map(|&k| k * ZOOM_FACTOR).collect();
                    let wx = windowed_lattice(fine_res, types, &center_x, fine_halfwidth);
                    let wy = windowed_lattice(fine_res, types, &center_y, fine_halfwidth);
                    let wx_inv = inverse_budgets(money_x, costs.kappa(), &wx, fine_res);
                    fine = Some((wx, wy, wx_inv));
                    let f = fine.as_ref().expect("just set");
                    (&f.0, &f.1, &f.2, fine_res)
                }
                Some(f) => (&f.0, &f.1, &f.2, fine_res),
            };
        let (xi, alpha_x) = sunk_x_sweep(money_x, money_y, costs, x_lattice, denom);
        let (yi, alpha_y) = sunk_y_sweep(money_y, costs, y_lattice, denom, x_inverse, types);
        let x_hat = lattice_budgets(money_x, costs.kappa(), &x_lattice[xi], denom);
        let y_hat = lattice_budgets(money_y, costs.sigma(), &y_lattice[yi], denom);
        let moved = match &prev {
            None => f64::INFINITY,
            Some((px, py)) => x_hat
                .iter()
                .zip(px)
                .chain(y_hat.iter().zip(py))
                .map(|(&a, &b)| (a - b).abs())
                .fold(0.0f64, f64::max),
        };
        if moved <= MOVEMENT_TOL {
            return Ok(SunkSearch {
                x_hat: BudgetVector::new(x_hat)?,
                y_hat: BudgetVector::new(y_hat)?,
                value_x: lotto_payoff(alpha_x)?,
                value_y: lotto_payoff(alpha_y)?,
                sweeps,
            });
        }
        prev = Some((x_hat, y_hat));
    }
}

/// Largest unilateral utility improvements available on a money grid over
/// `[0, 1.5·max(r, 1/r, 1)]` from the pair `(money_x, money_y)`: the first
/// component is X's best gain holding Y fixed, the second Y's holding X
/// fixed. Nonpositive gains mean the point is grid-unimprovable.
pub fn money_deviation_gains(
    costs: &CostProfile,
    money_x: f64,
    money_y: f64,
    grid: &GridSpec,
) -> Result<(f64, f64)> {
    let r = costs.cost_ratio();
    let upper = 1.5 * r.max(1.0 / r).max(1.0);
    let base_x = utility_x(money_x, money_y, r)?;
    let base_y = utility_y(money_x, money_y, r)?;
    let res = grid.resolution();
    let mut gain_x = f64::NEG_INFINITY;
    let mut gain_y = f64::NEG_INFINITY;
    for i in 0..res {
        let m = upper * i as f64 / (res - 1) as f64;
        gain_x = gain_x.max(utility_x(m, money_y, r)? - base_x);
        gain_y = gain_y.max(utility_y(money_x, m, r)? - base_y);
    }
    Ok((gain_x, gain_y))
}

/// Grid check that the up-front investment equilibrium admits no profitable
/// unilateral money deviation: returns each player's best gain over the
/// money grid, holding the other at the equilibrium level.
pub fn numeric_mlc_best_response(costs: &CostProfile, grid: &GridSpec) -> Result<(f64, f64)> {
    let eq = mlc_equilibrium(costs);
    money_deviation_gains(costs, eq.money_x, eq.money_y, grid)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn budget(v: &[f64]) -> BudgetVector {
        BudgetVector::new(v.to_vec()).unwrap()
    }

    fn costs(kappa: &[f64], sigma: &[f64]) -> CostProfile {
        CostProfile::new(kappa.to_vec(), sigma.to_vec()).unwrap()
    }

    #[test]
    fn identity_singleton() {
        assert_eq!(maxmin_subset_identity(&[3.0]).unwrap(), (3.0, 3.0));
    }

    #[test]
    fn identity_pair() {
        assert_eq!(maxmin_subset_identity(&[1.0, 2.0]).unwrap(), (2.0, 2.0));
    }

    #[test]
    fn identity_random_vectors() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let n = rng.random_range(1..=10);
            let z: Vec<f64> = (0..n).map(|_| rng.random::<f64>() * 10.0).collect();
            let (lhs, rhs) = maxmin_subset_identity(&z).unwrap();
            assert!((lhs - rhs).abs() <= 1e-9, "z = {z:?}");
        }
    }

    #[test]
    fn identity_repeats_and_zeros() {
        for z in [
            vec![0.0, 0.0, 5.0],
            vec![2.0, 2.0, 2.0, 2.0],
            vec![0.0],
            vec![1.0, 0.0, 1.0, 0.0, 7.5],
        ] {
            let (lhs, rhs) = maxmin_subset_identity(&z).unwrap();
            assert!((lhs - rhs).abs() <= 1e-9, "z = {z:?}");
        }
    }

    #[test]
    fn identity_input_checks() {
        assert!(matches!(
            maxmin_subset_identity(&[]),
            Err(GameError::Dimension(_))
        ));
        assert!(matches!(
            maxmin_subset_identity(&vec![1.0; 21]),
            Err(GameError::Dimension(_))
        ));
        assert!(matches!(
            maxmin_subset_identity(&[-1.0]),
            Err(GameError::Domain(_))
        ));
    }

    #[test]
    fn min_ub_grid_matches_closed_form() {
        let grid = GridSpec::new(200).unwrap();
        let result = numeric_min_ub(&budget(&[1.0, 1.0]), &budget(&[1.0, 1.0]), &grid).unwrap();
        assert!((result.value - 0.25).abs() < 0.01, "value {}", result.value);
        assert!((result.delta - 1.0).abs() < 0.02);
        assert!((result.type_probs[0] - 0.5).abs() < 0.02);

        let result = numeric_min_ub(&budget(&[4.0, 4.0]), &budget(&[1.0, 1.0]), &grid).unwrap();
        assert!((result.value - 0.75).abs() < 0.01, "value {}", result.value);
    }

    #[test]
    fn min_ub_single_type() {
        let grid = GridSpec::new(200).unwrap();
        let result = numeric_min_ub(&budget(&[2.0]), &budget(&[1.0]), &grid).unwrap();
        assert_eq!(result.type_probs, vec![1.0]);
        assert!((result.value - 0.75).abs() < 0.01);
    }

    #[test]
    fn min_ub_rejects_bad_input() {
        let grid = GridSpec::new(50).unwrap();
        assert!(matches!(
            numeric_min_ub(&budget(&[1.0; 5]), &budget(&[1.0; 5]), &grid),
            Err(GameError::Dimension(_))
        ));
        assert!(matches!(
            numeric_min_ub(&budget(&[0.0, 1.0]), &budget(&[1.0, 1.0]), &grid),
            Err(GameError::Domain(_))
        ));
    }

    #[test]
    fn max_lb_grid_matches_closed_form() {
        let grid = GridSpec::new(10_000).unwrap();
        let result = numeric_max_lb(&budget(&[1.0, 1.0]), &budget(&[1.0, 1.0]), &grid).unwrap();
        assert!((result.value - 0.25).abs() < 1e-4);
        assert!((result.delta - 0.5).abs() < 1e-3);

        let result = numeric_max_lb(&budget(&[4.0, 4.0]), &budget(&[1.0, 1.0]), &grid).unwrap();
        assert!((result.delta - 1.0).abs() < 1e-3);
        assert!((result.value - 0.75).abs() < 1e-4);
    }

    #[test]
    fn max_lb_unopposed() {
        let grid = GridSpec::new(100).unwrap();
        let result = numeric_max_lb(&budget(&[1.0, 1.0]), &budget(&[0.0, 0.0]), &grid).unwrap();
        assert_eq!(result.value, 1.0);
        assert_eq!(result.delta, 1.0);
    }

    #[test]
    fn sunk_search_symmetric_two_types() {
        let grid = GridSpec::new(400).unwrap();
        let c = costs(&[1.0, 1.0], &[1.0, 1.0]);
        let s = numeric_sunk_division(1.0, 1.0, &c, &grid).unwrap();
        assert!((s.x_hat.get(0) - 0.5).abs() < 0.02, "{:?}", s.x_hat);
        assert!((s.x_hat.get(1) - 0.5).abs() < 0.02);
        assert!(s.sweeps <= SWEEP_CAP);
        // Security values must bracket the true value L(2) = 0.25.
        assert!((s.value_x - 0.25).abs() < 0.02, "value_x {}", s.value_x);
        assert!((s.value_y - 0.25).abs() < 0.02, "value_y {}", s.value_y);
    }

    #[test]
    fn sunk_search_asymmetric_costs() {
        let grid = GridSpec::new(400).unwrap();
        let c = costs(&[1.0, 4.0], &[1.0, 1.0]);
        let s = numeric_sunk_division(1.0, 1.0, &c, &grid).unwrap();
        // Closed division: X spreads money so sigma-weighted budgets are
        // equal; Y tilts toward X's expensive type.
        assert!((s.x_hat.get(0) - 0.2).abs() < 0.02, "{:?}", s.x_hat);
        assert!((s.x_hat.get(1) - 0.2).abs() < 0.02);
        assert!((s.y_hat.get(0) - 0.2).abs() < 0.02, "{:?}", s.y_hat);
        assert!((s.y_hat.get(1) - 0.8).abs() < 0.02);
    }

    #[test]
    fn sunk_search_three_types() {
        let grid = GridSpec::new(100).unwrap();
        let c = costs(&[1.0, 2.0, 1.0], &[1.0, 1.0, 2.0]);
        // r = 1 + 2 + 0.5 = 3.5; closed forms below from the division rule.
        let s = numeric_sunk_division(1.0, 1.0, &c, &grid).unwrap();
        let r = 3.5;
        for t in 0..3 {
            let x_expected = (1.0 / c.kappa()[t]) * (c.kappa()[t] / c.sigma()[t]) / r;
            let y_expected = (1.0 / c.sigma()[t]) * (c.kappa()[t] / c.sigma()[t]) / r;
            assert!(
                (s.x_hat.get(t) - x_expected).abs() < 0.02,
                "type {t}: {} vs {x_expected}",
                s.x_hat.get(t)
            );
            assert!(
                (s.y_hat.get(t) - y_expected).abs() < 0.02,
                "type {t}: {} vs {y_expected}",
                s.y_hat.get(t)
            );
        }
    }

    #[test]
    fn sunk_search_vanishing_attacker_money() {
        let grid = GridSpec::new(200).unwrap();
        let c = costs(&[1.0, 1.0], &[1.0, 1.0]);
        let s = numeric_sunk_division(1.0, 1e-9, &c, &grid).unwrap();
        assert!((s.value_x - 1.0).abs() < 0.01, "value_x {}", s.value_x);
    }

    #[test]
    fn sunk_search_is_deterministic() {
        let grid = GridSpec::new(150).unwrap();
        let c = costs(&[0.7, 1.3], &[1.1, 0.6]);
        let a = numeric_sunk_division(0.9, 1.2, &c, &grid).unwrap();
        let b = numeric_sunk_division(0.9, 1.2, &c, &grid).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn sunk_search_input_checks() {
        let grid = GridSpec::new(50).unwrap();
        let c = costs(&[1.0], &[1.0]);
        assert!(matches!(
            numeric_sunk_division(1.0, 1.0, &c, &grid),
            Err(GameError::Dimension(_))
        ));
        let c2 = costs(&[1.0, 1.0], &[1.0, 1.0]);
        assert!(matches!(
            numeric_sunk_division(0.0, 1.0, &c2, &grid),
            Err(GameError::Domain(_))
        ));
    }

    #[test]
    fn mlc_equilibrium_is_grid_unimprovable() {
        let grid = GridSpec::new(2000).unwrap();
        for c in [costs(&[1.0], &[1.0]), costs(&[2.0], &[1.0])] {
            let (gx, gy) = numeric_mlc_best_response(&c, &grid).unwrap();
            assert!(gx <= 1e-3, "X gain {gx}");
            assert!(gy <= 1e-3, "Y gain {gy}");
        }
    }

    #[test]
    fn deviation_scan_detects_wasteful_spending() {
        let grid = GridSpec::new(2000).unwrap();
        let c = costs(&[1.0], &[1.0]);
        let eq = mlc_equilibrium(&c);
        let (gx, _) = money_deviation_gains(&c, 2.0 * eq.money_x, eq.money_y, &grid).unwrap();
        assert!(gx > 0.05, "gain {gx}");
    }

    #[test]
    fn grid_spec_needs_two_points() {
        assert!(GridSpec::new(2).is_ok());
        assert!(matches!(GridSpec::new(1), Err(GameError::Domain(_))));
    }
}
