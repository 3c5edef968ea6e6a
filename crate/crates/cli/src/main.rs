use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand};
use lapmult_cli::commands::{self, Failure};
use lapmult_cli::{write_report, ExperimentConfig};
use lapmult_core::ineq::DEFAULT_SEED;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "lapmult", version, about = "Verification suites for Laplace-type Laguerre and Hermite multipliers")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
    /// JSON experiment config.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Output directory; overrides `output_dir` from the config.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Seed for the test family and random coefficients.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check (H1), (H2) and boundedness of the configured symbol.
    SymbolCheck,
    /// Scan the weighted kernel bound over the grid and rho list.
    KernelBound,
    /// Classify the growth of I_{gamma,k}(r) near r = 1.
    IintScan {
        #[arg(long, allow_hyphen_values = true)]
        gamma: Option<f64>,
        #[arg(long, allow_hyphen_values = true)]
        k: Option<f64>,
    },
    /// Weighted norm ratios over the test family.
    NormExperiment,
    /// Hermite parity identities, symbol split and operator paths.
    HermiteVerify,
    /// Transplantation round trip between Laguerre parameters.
    TransplantCheck,
}

fn load(cli: &Cli) -> Result<ExperimentConfig, Failure> {
    let path = cli.config.as_ref().ok_or_else(|| Failure::Config(anyhow!("--config <path> is required")))?;
    ExperimentConfig::load(path).map_err(Failure::Config)
}

fn run(cli: &Cli) -> Result<(commands::Report, Option<PathBuf>), Failure> {
    if let Some(j) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build_global()
            .context("cannot configure the thread pool")
            .map_err(Failure::Config)?;
    }
    let seed = cli.seed;
    let (report, cfg_out) = match &cli.command {
        Cmd::IintScan { gamma, k } => {
            let cfg = match &cli.config {
                Some(_) => Some(load(cli)?),
                None => None,
            };
            let from_cfg = cfg.as_ref().and_then(|c| c.iint);
            let gamma = gamma.or(from_cfg.map(|i| i.gamma));
            let k = k.or(from_cfg.map(|i| i.k));
            let (Some(gamma), Some(k)) = (gamma, k) else {
                return Err(Failure::Config(anyhow!("iint-scan needs --gamma and --k (or an `iint` config section)")));
            };
            (commands::iint_scan(gamma, k)?, cfg.and_then(|c| c.output_dir))
        }
        other => {
            let cfg = load(cli)?;
            let report = match other {
                Cmd::SymbolCheck => commands::symbol_check(&cfg)?,
                Cmd::KernelBound => commands::kernel_bound(&cfg)?,
                Cmd::NormExperiment => commands::norm_experiment(&cfg, seed)?,
                Cmd::HermiteVerify => commands::hermite_verify(&cfg, seed)?,
                Cmd::TransplantCheck => commands::transplant_check(&cfg, seed)?,
                Cmd::IintScan { .. } => unreachable!(),
            };
            (report, cfg.output_dir)
        }
    };
    Ok((report, cli.out.clone().or(cfg_out)))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((report, out)) => {
            let dir = out.unwrap_or_else(|| PathBuf::from("."));
            if let Err(e) = write_report(&report, &dir) {
                eprintln!("error: {e:#}");
                return ExitCode::from(2);
            }
            println!("{}", serde_json::to_string_pretty(&report.summary).unwrap_or_default());
            if !report.pass {
                eprintln!("{}: check failed", report.command);
            }
            ExitCode::from(report.exit_code())
        }
        Err(f) => {
            eprintln!("error: {f}");
            ExitCode::from(f.exit_code())
        }
    }
}
