//! `densepart` — approximate and certify graph density partition functions.
//!
//! Results go to `--out` (or stdout) as JSON or CSV; diagnostics go to
//! stderr. Exit codes: 0 success, 1 invalid input, 2 budget or convergence
//! failure. Identical invocations with the same seeds and `--threads 1`
//! produce byte-identical output files.

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use densepart_core::experiments::{
    convergence_sweep, expectation_identity_check, run_zero_experiment, write_csv, write_json,
    SweepConfig, ZeroExperimentConfig,
};
use densepart_core::moments::DEFAULT_ENUM_BUDGET;
use densepart_core::oracle::{den_exact_with_budget, SUBSET_BUDGET};
use densepart_core::pipeline::{
    approx_direct, approx_rigorous, extract_subset, ApproxConfig, ApproxResult, ExtractEngine, Mode,
};
use densepart_core::{rho_for, solve_params, Graph};
use serde::Serialize;
use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "densepart",
    version,
    about = "Density partition functions of graphs: approximation, certification, extraction, zero experiments"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args, Clone)]
struct OutputOpts {
    /// Output file; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Output format for record lists: csv (default) or json. Single
    /// results are always JSON.
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Worker threads for trial-parallel experiments.
    #[arg(long, default_value_t = 1)]
    threads: usize,
}

#[derive(Args, Clone)]
struct GraphSource {
    /// Edge-list file ("n m" header, 1-based "u v" lines, '#' comments).
    #[arg(long, conflicts_with = "gen")]
    graph: Option<PathBuf>,
    /// Generator spec `gnp:<n>:<p>:<seed>`.
    #[arg(long)]
    gen: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ApproxMode {
    Direct,
    Rigorous,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Engine {
    Exact,
    Approx,
}

#[derive(Subcommand)]
enum Cmd {
    /// Approximate ln den_m(G; gamma) by the direct or interpolation method.
    Approx {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        alpha: Option<f64>,
        #[arg(long)]
        gamma: Option<f64>,
        #[arg(long, value_enum, default_value_t = ApproxMode::Direct)]
        mode: ApproxMode,
        /// Taylor order for the direct method (1..6).
        #[arg(long, default_value_t = 3)]
        order: usize,
        /// Target additive error for the interpolation method.
        #[arg(long, default_value_t = 0.1)]
        eps: f64,
        /// Cap on the interpolation Taylor order.
        #[arg(long, default_value_t = 6)]
        max_order: usize,
        /// Proceed when n < omega*m (no zero-free guarantee; result is
        /// flagged budget-limited).
        #[arg(long)]
        allow_unguaranteed: bool,
        /// Explicit strip parameter for the composition polynomial.
        #[arg(long)]
        rho: Option<f64>,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Exact ln den_m(G; gamma) by brute-force enumeration.
    Exact {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        gamma: f64,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Extract a dense m-subset by successive conditioning.
    Extract {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        gamma: f64,
        #[arg(long, value_enum, default_value_t = Engine::Exact)]
        engine: Engine,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Solve the zero-free parameter recipe for (delta, m).
    Params {
        #[arg(long)]
        delta: f64,
        #[arg(long)]
        m: usize,
        /// Refine the strip parameter for this tilt (needs gamma < delta).
        #[arg(long)]
        gamma: Option<f64>,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Zero-location frequency of random ±1 partition polynomials.
    Zeros {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        /// Disc-scale parameter r; the tested disc has radius r/sqrt(2 tau).
        #[arg(long)]
        r: f64,
        #[arg(long)]
        tau: f64,
        #[arg(long)]
        trials: u64,
        #[arg(long)]
        seed: u64,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Exact sign-average second-moment identity at (n, m, radius, theta).
    CheckIdentity {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        radius: f64,
        #[arg(long, default_value_t = 0.0)]
        theta: f64,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Direct-method error sweep over a config grid (JSON file).
    Sweep {
        /// JSON file: {n, p, seeds, m, alphas, orders}.
        #[arg(long)]
        config: PathBuf,
        #[command(flatten)]
        output: OutputOpts,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("densepart: {e}");
            if e.exit_code == 2 {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}

struct CliError {
    message: String,
    exit_code: u8,
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<densepart_core::Error> for CliError {
    fn from(e: densepart_core::Error) -> Self {
        CliError {
            exit_code: if e.is_budget_or_convergence() { 2 } else { 1 },
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError {
            message: format!("io error: {e}"),
            exit_code: 1,
        }
    }
}

fn invalid(message: impl Into<String>) -> CliError {
    CliError {
        message: message.into(),
        exit_code: 1,
    }
}

/// Enumeration budget override from DENSEPART_BUDGET.
fn env_budget() -> Result<Option<u64>, CliError> {
    match std::env::var("DENSEPART_BUDGET") {
        Ok(v) => v
            .parse::<u64>()
            .map(Some)
            .map_err(|_| invalid(format!("DENSEPART_BUDGET = {v:?} is not a number"))),
        Err(_) => Ok(None),
    }
}

fn load_graph(source: &GraphSource) -> Result<Graph, CliError> {
    match (&source.graph, &source.gen) {
        (Some(path), None) => {
            let text = fs::read_to_string(path)
                .map_err(|e| invalid(format!("cannot read {}: {e}", path.display())))?;
            Ok(Graph::parse_edge_list(&text)?)
        }
        (None, Some(spec)) => parse_gen_spec(spec),
        _ => Err(invalid("give exactly one graph source: --graph or --gen")),
    }
}

fn parse_gen_spec(spec: &str) -> Result<Graph, CliError> {
    let parts: Vec<&str> = spec.split(':').collect();
    match parts.as_slice() {
        ["gnp", n, p, seed] => {
            let n: usize = n.parse().map_err(|_| invalid("bad n in gnp spec"))?;
            let p: f64 = p.parse().map_err(|_| invalid("bad p in gnp spec"))?;
            let seed: u64 = seed.parse().map_err(|_| invalid("bad seed in gnp spec"))?;
            Ok(Graph::random_gnp(n, p, seed)?)
        }
        _ => Err(invalid(format!(
            "unknown generator spec {spec:?}; expected gnp:<n>:<p>:<seed>"
        ))),
    }
}

fn emit(output: &OutputOpts, text: String) -> Result<(), CliError> {
    match &output.out {
        Some(path) => {
            fs::write(path, text)?;
            Ok(())
        }
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn emit_json<S: Serialize>(output: &OutputOpts, value: &S) -> Result<(), CliError> {
    let mut text =
        serde_json::to_string_pretty(value).map_err(|e| invalid(format!("json: {e}")))?;
    text.push('\n');
    emit(output, text)
}

fn emit_records<S: Serialize>(output: &OutputOpts, records: &[S]) -> Result<(), CliError> {
    let mut buf = Vec::new();
    match output.format.unwrap_or(Format::Csv) {
        Format::Csv => write_csv(records, &mut buf)?,
        Format::Json => write_json(records, &mut buf)?,
    }
    let text = String::from_utf8(buf).map_err(|e| invalid(format!("utf8: {e}")))?;
    emit(output, text)
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.cmd {
        Cmd::Approx {
            source,
            m,
            alpha,
            gamma,
            mode,
            order,
            eps,
            max_order,
            allow_unguaranteed,
            rho,
            output,
        } => {
            let g = load_graph(&source)?;
            let cfg = ApproxConfig {
                m,
                gamma,
                alpha,
                order,
                eps,
                max_order,
                enum_budget: env_budget()?.unwrap_or(DEFAULT_ENUM_BUDGET),
                allow_unguaranteed,
                rho_override: rho,
            };
            let res = match mode {
                ApproxMode::Direct => approx_direct(&g, &cfg)?,
                ApproxMode::Rigorous => approx_rigorous(&g, &cfg)?,
            };
            if res.budget_limited {
                eprintln!(
                    "densepart: order capped at {} (remainder bound {:.3e} is not the target)",
                    res.order_used.unwrap_or(0),
                    res.error_bound.unwrap_or(f64::NAN)
                );
            }
            emit_json(&output, &res)
        }
        Cmd::Exact {
            source,
            m,
            gamma,
            output,
        } => {
            let g = load_graph(&source)?;
            let budget = env_budget()?.unwrap_or(SUBSET_BUDGET);
            let ln_den = den_exact_with_budget(&g, m, gamma, budget)?;
            let res = ApproxResult::from_exact(&g, m, gamma, ln_den);
            emit_json(&output, &res)
        }
        Cmd::Extract {
            source,
            m,
            gamma,
            engine,
            output,
        } => {
            let g = load_graph(&source)?;
            let (engine, mode_order) = match engine {
                Engine::Exact => (ExtractEngine::Exact, None),
                Engine::Approx => (ExtractEngine::Approximate, Some(3)),
            };
            let subset = extract_subset(&g, m, gamma, engine)?;
            eprintln!(
                "densepart: extracted subset of density {} ({} of {} pairs)",
                subset.sigma(),
                subset.spanned_edges(),
                subset.pair_count()
            );
            let ln_den = match engine {
                ExtractEngine::Exact => {
                    den_exact_with_budget(&g, m, gamma, env_budget()?.unwrap_or(SUBSET_BUDGET))?
                }
                ExtractEngine::Approximate => {
                    let mut cfg = ApproxConfig::direct_gamma(m, gamma, 3);
                    cfg.enum_budget = env_budget()?.unwrap_or(DEFAULT_ENUM_BUDGET);
                    approx_direct(&g, &cfg)?.ln_den
                }
            };
            let res = ApproxResult {
                mode: Mode::Extract,
                n: g.n(),
                m,
                gamma: Some(gamma),
                alpha: None,
                order_used: mode_order,
                ln_den,
                certified_density: ln_den / (gamma * m as f64),
                error_bound: match engine {
                    ExtractEngine::Exact => Some(0.0),
                    ExtractEngine::Approximate => None,
                },
                budget_limited: false,
                subset: Some(subset.subset().to_vec()),
                ln_h1: f64::NAN,
            };
            emit_json(&output, &res)
        }
        Cmd::Params {
            delta,
            m,
            gamma,
            output,
        } => {
            let mut params = solve_params(delta, m)?;
            if let Some(gamma) = gamma {
                params.rho = rho_for(&params, gamma, m)?;
            }
            emit_json(&output, &params)
        }
        Cmd::Zeros {
            n,
            m,
            r,
            tau,
            trials,
            seed,
            output,
        } => {
            let cfg = ZeroExperimentConfig {
                n,
                m,
                r_param: r,
                tau,
                trials,
                seed,
                threads: output.threads,
            };
            let (records, summary) = run_zero_experiment(&cfg)?;
            emit_records(&output, &records)?;
            eprintln!(
                "densepart: {} trials in {:.2}s",
                summary.trials, summary.total_wall_time
            );
            let summary_text = serde_json::to_string_pretty(&summary)
                .map_err(|e| invalid(format!("json: {e}")))?;
            if output.out.is_some() {
                println!("{summary_text}");
            } else {
                eprintln!("{summary_text}");
            }
            Ok(())
        }
        Cmd::CheckIdentity {
            n,
            m,
            radius,
            theta,
            output,
        } => {
            let (lhs, rhs) = expectation_identity_check(n, m, radius, theta)?;
            #[derive(Serialize)]
            struct IdentityReport {
                n: usize,
                m: usize,
                radius: f64,
                theta: f64,
                lhs: f64,
                rhs: f64,
                abs_diff: f64,
            }
            emit_json(
                &output,
                &IdentityReport {
                    n,
                    m,
                    radius,
                    theta,
                    lhs,
                    rhs,
                    abs_diff: (lhs - rhs).abs(),
                },
            )
        }
        Cmd::Sweep { config, output } => {
            let text = fs::read_to_string(&config)
                .map_err(|e| invalid(format!("cannot read {}: {e}", config.display())))?;
            let cfg: SweepConfig = serde_json::from_str(&text)
                .map_err(|e| invalid(format!("bad sweep config: {e}")))?;
            let records = convergence_sweep(&cfg)?;
            let failures = records.iter().filter(|r| r.oracle.is_none()).count();
            if failures > 0 {
                eprintln!("densepart: {failures} grid points exceeded the oracle budget");
            }
            emit_records(&output, &records)
        }
    }
}
