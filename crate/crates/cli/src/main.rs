//! `monogamy` — verification suites, bound tables, see-saw optimization
//! and the coset↔BB'84 translation, with machine-readable reports.
//!
//! Exit codes: 0 all checks pass, 1 a check failed, 2 usage error.

mod report;
mod suites;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use coset_monogamy::bounds;
use coset_monogamy::game::{
    seesaw_optimize, strategy_digest, strategy_to_json, Game, GameValueReport, SeesawParams,
};
use coset_monogamy::qstate::translate_bb84_label;
use coset_monogamy::Error;

use report::{json_f64, Check, RunReport};
use suites::Suite;

/// Thread count override for the suite fan-out.
const THREADS_ENV: &str = "MONOGAMY_THREADS";

#[derive(Parser)]
#[command(name = "monogamy", version, about = "Monogamy-game verification and bounds")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum GameArg {
    Coset,
    Basis,
}

impl From<GameArg> for Game {
    fn from(g: GameArg) -> Game {
        match g {
            GameArg::Coset => Game::Coset,
            GameArg::Basis => Game::Basis,
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Run a verification suite and emit a JSON report.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 2)]
        n: usize,
        /// Number of randomized trials (suite-specific default).
        #[arg(long)]
        trials: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Include wall-clock time in the report (breaks byte-for-byte
        /// reproducibility).
        #[arg(long)]
        timings: bool,
    },
    /// Emit the bound table for even n up to --n-max.
    Bounds {
        #[arg(long = "n-max", default_value_t = 8)]
        n_max: u64,
        #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
        format: FormatArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// See-saw a lower bound and report the sandwich against the analytic
    /// upper bound.
    Optimize {
        #[arg(long, value_enum)]
        game: GameArg,
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long = "dim-b", default_value_t = 2)]
        dim_b: usize,
        #[arg(long = "dim-c", default_value_t = 2)]
        dim_c: usize,
        #[arg(long, default_value_t = 100)]
        iters: usize,
        #[arg(long, default_value_t = 4)]
        restarts: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write the optimized strategy as JSON.
        #[arg(long = "strategy-out")]
        strategy_out: Option<PathBuf>,
        #[arg(long)]
        timings: bool,
    },
    /// One-shot coset↔BB'84 translation: print A, s, s′ for (B, θ, x).
    Translate {
        /// Basis rows as comma-separated bitstrings, e.g. "11,01".
        #[arg(long)]
        basis: String,
        #[arg(long)]
        theta: String,
        #[arg(long)]
        x: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Ok(threads) = std::env::var(THREADS_ENV) {
        match threads.parse::<usize>() {
            Ok(k) if k > 0 => {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(k).build_global();
            }
            _ => {
                eprintln!("{THREADS_ENV} must be a positive integer, got {threads:?}");
                return ExitCode::from(2);
            }
        }
    }
    match run(cli) {
        Ok(pass) => {
            if pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), Error> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Error::InvalidArgument(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .map_err(|e| Error::InvalidArgument(format!("stdout: {e}")))
        }
    }
}

fn run(cli: Cli) -> Result<bool, Error> {
    match cli.cmd {
        Cmd::Verify { suite, n, trials, seed, out, timings } => {
            let trials = trials.unwrap_or_else(|| suite.default_trials());
            let start = Instant::now();
            let mut rep = suites::run_suite(suite, n, trials, seed)?;
            rep.wall_ms = Some(start.elapsed().as_millis());
            let pass = rep.pass();
            emit(&rep.to_json(timings), out.as_ref())?;
            eprintln!(
                "suite {}: {} in {} ms",
                suite.name(),
                if pass { "pass" } else { "FAIL" },
                rep.wall_ms.unwrap_or(0)
            );
            Ok(pass)
        }
        Cmd::Bounds { n_max, format, out } => {
            let rows = bounds::bound_table(n_max)?;
            let text = match format {
                FormatArg::Csv => bounds::table_to_csv(&rows),
                FormatArg::Json => {
                    let mut t = bounds::table_to_json(&rows);
                    t.push('\n');
                    t
                }
            };
            emit(&text, out.as_ref())?;
            Ok(true)
        }
        Cmd::Optimize {
            game,
            n,
            dim_b,
            dim_c,
            iters,
            restarts,
            seed,
            out,
            strategy_out,
            timings,
        } => {
            let game: Game = game.into();
            let start = Instant::now();
            let params = SeesawParams { iters, restarts, seed };
            let outcome = seesaw_optimize(game, n, dim_b, dim_c, &params)?;
            let digest = strategy_digest(&outcome.strategy)?;
            let sandwich = GameValueReport {
                game,
                n,
                lower_bound: outcome.value,
                strategy_digest: digest.clone(),
                upper_bound: bounds::analytic_bound(n as u64)?,
                trivial_floor: bounds::trivial_floor(n as u64),
                seed,
            };
            if !sandwich.sandwich_ok() {
                return Err(Error::InvalidArgument(format!(
                    "see-saw value {} exceeds the analytic bound {} — internal error",
                    sandwich.lower_bound, sandwich.upper_bound
                )));
            }

            let mut rep = RunReport::new("optimize")
                .param("game", game)
                .param("n", n)
                .param("dim_b", dim_b)
                .param("dim_c", dim_c)
                .param("iters", iters)
                .param("restarts", restarts)
                .param("strategy_digest", &digest)
                .seed(seed);
            rep.push(Check::info("lower_bound", sandwich.lower_bound));
            rep.push(Check::info("upper_bound", sandwich.upper_bound));
            rep.push(Check::info("trivial_floor", sandwich.trivial_floor));
            rep.push(Check::ge(
                "lower_bound_at_least_trivial_floor",
                sandwich.lower_bound,
                sandwich.trivial_floor - 1e-9,
            ));
            rep.push(Check::flag("sandwich_ok", sandwich.sandwich_ok()));
            rep.push(Check::info("iterations_recorded", outcome.history.len() as f64));
            rep.wall_ms = Some(start.elapsed().as_millis());

            if let Some(path) = strategy_out {
                emit(&strategy_to_json(&outcome.strategy)?, Some(&path))?;
            }
            let pass = rep.pass();
            emit(&rep.to_json(timings), out.as_ref())?;
            eprintln!(
                "optimize {game} n={n}: lower {} vs upper {} ({} ms)",
                json_f64(sandwich.lower_bound),
                json_f64(sandwich.upper_bound),
                rep.wall_ms.unwrap_or(0)
            );
            Ok(pass)
        }
        Cmd::Translate { basis, theta, x } => {
            let b: coset_monogamy::f2::F2Matrix = basis.parse()?;
            let theta: coset_monogamy::f2::F2Vector = theta.parse()?;
            let xv: coset_monogamy::f2::F2Vector = x.parse()?;
            let label = translate_bb84_label(&b, &theta, &xv)?;
            let residual = coset_monogamy::qstate::verify_translation(&b, &theta, &xv)?;
            let text = format!(
                "{{\"schema\":1,\"a_basis\":\"{}\",\"s\":\"{}\",\"s_prime\":\"{}\",\"residual\":{}}}\n",
                label.a.basis(),
                label.s,
                label.sp,
                json_f64(residual)
            );
            emit(&text, None)?;
            Ok(residual <= 1e-9)
        }
    }
}
