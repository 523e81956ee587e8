use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use dfsum_lab::output::{write_kernels, write_report};
use dfsum_lab::{
    dump_kernels, run_bound_sweep, run_convergence_sweep, run_identity_suite, LabConfig,
};

#[derive(Parser)]
#[command(
    name = "dfsum",
    version,
    about = "Double Fourier series summability experiments"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Subcommand)]
enum Command {
    /// Residuals of the exact summation identities over the polynomial corpus
    Identities,
    /// L_p size of strong logarithmic means against the L log L modular
    BoundSweep,
    /// Error means of partial sums: L_p size and exceedance measure
    ConvergeSweep,
    /// Sample the Dirichlet-type kernels on a uniform scan
    KernelsDump,
}

#[derive(Args)]
struct Opts {
    /// Grid points per axis (power of two)
    #[arg(long, global = true)]
    grid: Option<String>,
    /// Diagonal degree schedule, e.g. 4,8,16
    #[arg(long, global = true)]
    degrees: Option<String>,
    /// Exponents for L_p quasinorms
    #[arg(long, global = true)]
    p: Option<String>,
    /// Exceedance thresholds
    #[arg(long, global = true)]
    epsilon: Option<String>,
    /// Function ids, or `all`
    #[arg(long, global = true)]
    funcs: Option<String>,
    /// Output directory
    #[arg(long, global = true)]
    out: Option<String>,
    /// csv or csv+plots
    #[arg(long, global = true)]
    format: Option<String>,
    /// Seed of the random corpus members
    #[arg(long, global = true)]
    seed: Option<String>,
    /// Kernel orders for kernels-dump
    #[arg(long, global = true)]
    orders: Option<String>,
    /// Scan points for kernels-dump
    #[arg(long, global = true)]
    samples: Option<String>,
    /// Flat key=value file; flags take precedence
    #[arg(long, global = true)]
    config: Option<PathBuf>,
}

impl Opts {
    fn resolve(&self) -> Result<LabConfig> {
        let mut config = LabConfig::default();
        if let Some(path) = &self.config {
            config.apply_file(path)?;
        }
        let flags = [
            ("grid", &self.grid),
            ("degrees", &self.degrees),
            ("p", &self.p),
            ("epsilon", &self.epsilon),
            ("funcs", &self.funcs),
            ("out", &self.out),
            ("format", &self.format),
            ("seed", &self.seed),
            ("orders", &self.orders),
            ("samples", &self.samples),
        ];
        for (key, value) in flags {
            if let Some(v) = value {
                config.set(key, v)?;
            }
        }
        Ok(config)
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let config = cli.opts.resolve()?;
    let (report, name) = match cli.command {
        Command::Identities => (run_identity_suite(&config)?, "identities"),
        Command::BoundSweep => (run_bound_sweep(&config)?, "bound_sweep"),
        Command::ConvergeSweep => (run_convergence_sweep(&config)?, "converge_sweep"),
        Command::KernelsDump => {
            let rows = dump_kernels(&config)?;
            let path = write_kernels(&rows, &config)?;
            println!("{}", path.display());
            return Ok(ExitCode::SUCCESS);
        }
    };
    let paths = write_report(&report, name, &config).context("writing report")?;
    for p in &paths {
        println!("{}", p.display());
    }
    let failures = report.failures();
    if failures.is_empty() {
        return Ok(ExitCode::SUCCESS);
    }
    for r in &failures {
        eprintln!(
            "{} n={} m={} {} {}: {}",
            r.function_id, r.n, r.m, r.param, r.metric, r.note
        );
    }
    eprintln!("{} of {} rows failed", failures.len(), report.rows.len());
    Ok(ExitCode::FAILURE)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
