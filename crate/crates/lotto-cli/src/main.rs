//! `lotto` — equilibria, simulations, and numerical cross-checks for
//! multi-resource General Lotto games.
//!
//! Exit codes: 0 success (and within tolerance where one applies),
//! 1 input error, 2 verification failure.

mod commands;
mod render;
mod scenario;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "lotto",
    version,
    about = "Equilibria, simulations, and numerical checks for multi-resource General Lotto games"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum SweepArg {
    /// Payoff grid over two-type X budgets against Y = (1, 1).
    Contour,
    /// Investment outcomes as the first resource's cost for X varies.
    #[value(name = "invest_sweep")]
    InvestSweep,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    /// Grid searches of both payoff bounds against their closed optima.
    Bounds,
    /// Exhaustive subset enumeration of the max/min identity.
    Identity,
    /// Lattice search for the sunk-cost division.
    Sunk,
    /// Money-grid deviation scan around the investment equilibrium.
    Mlc,
}

#[derive(Subcommand)]
enum Cmd {
    /// Closed-form equilibrium payoffs and strategies for a scenario
    Payoff {
        /// Scenario JSON file
        #[arg(long)]
        scenario: PathBuf,
    },
    /// Monte Carlo payoff estimate gated on a z-score against the closed form
    Simulate {
        /// Scenario JSON file
        #[arg(long)]
        scenario: PathBuf,
        /// Sample count (overrides the scenario's monte_carlo block)
        #[arg(long)]
        n: Option<usize>,
        /// RNG seed (overrides the scenario's monte_carlo block)
        #[arg(long)]
        seed: Option<u64>,
        /// Replace X's equilibrium strategy with one from a JSON file
        #[arg(long)]
        strategy_x: Option<PathBuf>,
        /// Replace Y's equilibrium strategy with one from a JSON file
        #[arg(long)]
        strategy_y: Option<PathBuf>,
    },
    /// Two-stage investment equilibrium for linear money costs
    Invest {
        /// Per-type money costs for X, comma separated
        #[arg(long, value_delimiter = ',', required = true)]
        kappa: Vec<f64>,
        /// Per-type money costs for Y, comma separated
        #[arg(long, value_delimiter = ',', required = true)]
        sigma: Vec<f64>,
        #[arg(long, value_enum, default_value = "json")]
        format: FormatArg,
    },
    /// Figure data as CSV: payoff contours or the cost sweep
    Sweep {
        #[arg(long, value_enum)]
        kind: SweepArg,
        /// Output CSV path
        #[arg(long)]
        out: PathBuf,
        /// Smallest budget on each contour axis
        #[arg(long, default_value_t = 0.25)]
        min: f64,
        /// Largest budget on each contour axis
        #[arg(long, default_value_t = 3.0)]
        max: f64,
        /// Grid points per contour axis
        #[arg(long, default_value_t = 12)]
        steps: usize,
        /// First value of the swept cost (invest_sweep)
        #[arg(long, default_value_t = 0.2)]
        kappa1_min: f64,
        /// Last value of the swept cost (invest_sweep; step is 0.05)
        #[arg(long, default_value_t = 4.0)]
        kappa1_max: f64,
    },
    /// Randomized oracle suites comparing closed forms against grid searches
    Verify {
        #[arg(long, value_enum)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        /// Trials to run (default depends on the suite)
        #[arg(long)]
        trials: Option<usize>,
    },
}

fn main() {
    // Die quietly when the output pipe closes early (`lotto ... | head`),
    // like other line-oriented tools, instead of panicking mid-print.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    let result = match cli.command {
        Cmd::Payoff { scenario } => commands::cmd_payoff(&scenario),
        Cmd::Simulate {
            scenario,
            n,
            seed,
            strategy_x,
            strategy_y,
        } => commands::cmd_simulate(&scenario, n, seed, strategy_x.as_deref(), strategy_y.as_deref()),
        Cmd::Invest {
            kappa,
            sigma,
            format,
        } => commands::cmd_invest(
            &kappa,
            &sigma,
            match format {
                FormatArg::Json => commands::OutputFormat::Json,
                FormatArg::Csv => commands::OutputFormat::Csv,
            },
        ),
        Cmd::Sweep {
            kind,
            out,
            min,
            max,
            steps,
            kappa1_min,
            kappa1_max,
        } => commands::cmd_sweep(
            match kind {
                SweepArg::Contour => commands::SweepKind::Contour,
                SweepArg::InvestSweep => commands::SweepKind::InvestSweep,
            },
            &out,
            min,
            max,
            steps,
            kappa1_min,
            kappa1_max,
        ),
        Cmd::Verify {
            suite,
            seed,
            trials,
        } => commands::cmd_verify(
            match suite {
                SuiteArg::Bounds => commands::Suite::Bounds,
                SuiteArg::Identity => commands::Suite::Identity,
                SuiteArg::Sunk => commands::Suite::Sunk,
                SuiteArg::Mlc => commands::Suite::Mlc,
            },
            seed,
            trials,
        ),
    };
    match result {
        Ok(code) => std::process::exit(code),
        Err(message) => {
            eprintln!("error: {message}");
            std::process::exit(1);
        }
    }
}
