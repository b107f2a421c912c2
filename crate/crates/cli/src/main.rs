use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use critline_cli::commands::{self, EvalMethod, Suite};
use critline_cli::config::RunConfig;
use critline_cli::{CliError, Exit};

#[derive(Parser)]
#[command(
    name = "critline",
    version,
    about = "Zeta evaluation and critical-line zero counting"
)]
struct Cli {
    /// `key = value` config file; falls back to $ZV_CONFIG
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Em,
    Rs,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate zeta and xi at one point, printed as JSON
    Eval {
        /// Point in `a+bi` form
        #[arg(long, allow_hyphen_values = true)]
        s: String,
        #[arg(long, value_enum, default_value = "em")]
        method: MethodArg,
    },
    /// Locate zeros of Z on [from, to] and write them as CSV
    Zeros {
        #[arg(long)]
        from: Option<String>,
        #[arg(long)]
        to: Option<String>,
        #[arg(long)]
        out: Option<String>,
        /// Uniform grid points per unit t
        #[arg(long)]
        grid: Option<String>,
        /// Maximum refinement depth
        #[arg(long)]
        depth: Option<String>,
    },
    /// Count zeros up to T both ways and write a JSON report
    Verify {
        #[arg(long = "T")]
        t: Option<String>,
        #[arg(long)]
        report: Option<String>,
    },
    /// Run identity residual checks and print a PASS/FAIL table
    Identities {
        #[arg(long, default_value = "all")]
        suite: String,
    },
}

fn apply_flags(
    cfg: &mut RunConfig,
    flags: &[(&str, &str, &Option<String>)],
) -> Result<(), CliError> {
    for (key, flag, value) in flags {
        if let Some(v) = value {
            cfg.set(key, v, flag)?;
        }
    }
    Ok(())
}

fn run(cli: Cli, out: &mut dyn Write) -> Result<Exit, CliError> {
    let mut cfg = RunConfig::resolve(cli.config.as_deref())?;
    match cli.cmd {
        Cmd::Eval { s, method } => {
            let method = match method {
                MethodArg::Em => EvalMethod::Em,
                MethodArg::Rs => EvalMethod::Rs,
            };
            commands::eval(&s, method, &cfg, out)
        }
        Cmd::Zeros {
            from,
            to,
            out: path,
            grid,
            depth,
        } => {
            apply_flags(
                &mut cfg,
                &[
                    ("from", "--from", &from),
                    ("to", "--to", &to),
                    ("out", "--out", &path),
                    ("base_grid", "--grid", &grid),
                    ("max_depth", "--depth", &depth),
                ],
            )?;
            commands::zeros(&cfg, out)
        }
        Cmd::Verify { t, report } => {
            apply_flags(
                &mut cfg,
                &[("T", "--T", &t), ("report", "--report", &report)],
            )?;
            commands::verify(&cfg, out)
        }
        Cmd::Identities { suite } => commands::identities(Suite::parse(&suite)?, &cfg, out),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut lock = stdout.lock();
    let code = match run(cli, &mut lock) {
        Ok(code) => code,
        Err(e) => {
            let _ = lock.flush();
            let msg = serde_json::json!({ "error": e.kind(), "message": e.to_string() });
            eprintln!("{msg}");
            e.exit()
        }
    };
    ExitCode::from(code as u8)
}
