//! Multi-resource General Lotto games: closed-form equilibria, payoff bounds,
//! strategy sampling, and a two-stage investment game, together with
//! brute-force numerical cross-checks.
//!
//! Two players allocate stochastic budgets across resource types inside a set
//! of simultaneous contests. Player X wins a contest either by matching Y on
//! every type (weakest-link rule) or by out-weighing Y's aggregate (weighted
//! rule). Expected budgets are capped, realized allocations are random, and
//! the value of the game is a one-parameter function of a budget ratio.
//!
//! Module map:
//! - [`core`]: shared domain types, the scalar payoff curve, budget ratios,
//!   and the per-contest winning predicates.
//! - [`equilibria`]: optimal mixed-strategy distributions and the matching
//!   upper/lower payoff bounds whose saddle point certifies them.
//! - [`sampling`]: reproducible strategy samplers and Monte Carlo estimators.
//! - [`investment`]: the two-stage game where budgets themselves are bought,
//!   with sunk and up-front linear cost variants.
//! - [`oracles`]: independent grid-search and enumeration baselines used to
//!   validate the closed forms.

pub mod core;
pub mod equilibria;
pub mod investment;
pub mod oracles;
pub mod sampling;

pub use crate::core::{GameError, Result};
