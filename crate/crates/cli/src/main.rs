use std::f64::consts::FRAC_PI_4;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rindler_cli::check::{report_json, report_text, run_all};
use rindler_cli::config::{
    parse_qr, resolve_family, resolve_json, resolve_orderings, resolve_out, resolve_qr, resolve_r,
    ConfigFile, Overrides, SweepConfig,
};
use rindler_cli::orderings::cmd_orderings;
use rindler_cli::single::cmd_single;
use rindler_cli::sweep::{cmd_sweep, gnuplot_script};
use rindler_cli::{emit, CliError, Result, EXIT_CHECK_FAILED, EXIT_OK};

#[derive(Parser)]
#[command(name = "rindler", version, about = "Fermionic entanglement under Unruh acceleration")]
struct Cli {
    /// key=value file; command-line flags take precedence over it.
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,

    /// Print the default configuration in config-file syntax and exit.
    #[arg(long)]
    print_defaults: bool,

    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Subcommand)]
enum Command {
    /// Negativity over the (ordering, q_R, r) grid as CSV.
    Sweep(SweepArgs),
    /// Run the invariant suite; exits 1 if anything fails.
    Check(CheckArgs),
    /// Rank operator orderings by their q_R spread at r = pi/4.
    Orderings(OrderingsArgs),
    /// Reduced state, partial-transpose spectrum and negativity at one point.
    Single(SingleArgs),
}

#[derive(Args, Default)]
struct Common {
    /// Repeatable.
    #[arg(long = "qr", value_name = "Q")]
    qr: Vec<String>,
    /// P,Q,a1,a2,b1,b2; complex values as re+imj.
    #[arg(long, value_name = "P,Q,a1,a2,b1,b2", allow_hyphen_values = true)]
    family: Option<String>,
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SweepArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long, value_name = "N")]
    r_points: Option<usize>,
    /// Preset name or 5-digit permutation; repeatable.
    #[arg(long, value_name = "ORDERING")]
    ordering: Vec<String>,
    /// Also write a gnuplot script for the CSV.
    #[arg(long, value_name = "PATH")]
    gnuplot: Option<PathBuf>,
    /// Evaluate grid points on one thread (output is identical).
    #[arg(long)]
    sequential: bool,
}

#[derive(Args)]
struct CheckArgs {
    #[arg(long)]
    json: bool,
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct OrderingsArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long)]
    json: bool,
    /// Include the 96 orderings that do not keep Alice first.
    #[arg(long)]
    all_permutations: bool,
}

#[derive(Args)]
struct SingleArgs {
    #[command(flatten)]
    common: Common,
    /// Acceleration parameter in [0, pi/4]; defaults to pi/4.
    #[arg(long, allow_hyphen_values = true)]
    r: Option<f64>,
    #[arg(long, value_name = "ORDERING")]
    ordering: Option<String>,
    #[arg(long)]
    json: bool,
}

fn overrides(common: &Common) -> Result<Overrides> {
    Ok(Overrides {
        qr: common.qr.iter().map(|s| parse_qr(s)).collect::<Result<_>>()?,
        family: common.family.clone(),
        out: common.out.clone(),
        ..Default::default()
    })
}

fn load_config(path: Option<&Path>) -> Result<ConfigFile> {
    path.map(ConfigFile::load).transpose().map(Option::unwrap_or_default)
}

fn run(cli: Cli) -> Result<i32> {
    if cli.print_defaults {
        emit(None, &SweepConfig::defaults_text())?;
        return Ok(EXIT_OK);
    }
    let file = load_config(cli.config.as_deref())?;
    let Some(command) = cli.command else {
        return Err(CliError::Usage(
            "no subcommand given (sweep, check, orderings, single); see --help".into(),
        ));
    };
    match command {
        Command::Sweep(a) => {
            let flags = Overrides {
                r_points: a.r_points,
                orderings: a.ordering,
                ..overrides(&a.common)?
            };
            let cfg = SweepConfig::resolve(&file, &flags)?;
            let csv = cmd_sweep(&cfg, !a.sequential)?;
            emit(cfg.out.as_deref(), &csv)?;
            if let Some(gp) = a.gnuplot {
                let csv_path = cfg
                    .out
                    .as_deref()
                    .map(|p| p.display().to_string())
                    .unwrap_or_else(|| "sweep.csv".into());
                emit(Some(&gp), &gnuplot_script(&cfg, &csv_path))?;
            }
            Ok(EXIT_OK)
        }
        Command::Check(a) => {
            let flags = Overrides {
                json: a.json,
                out: a.out,
                ..Default::default()
            };
            let results = run_all()?;
            let text = if resolve_json(&file, &flags)? {
                report_json(&results)
            } else {
                report_text(&results)
            };
            emit(resolve_out(&file, &flags).as_deref(), &text)?;
            Ok(if results.iter().all(|r| r.passed) {
                EXIT_OK
            } else {
                EXIT_CHECK_FAILED
            })
        }
        Command::Orderings(a) => {
            let flags = Overrides {
                json: a.json,
                ..overrides(&a.common)?
            };
            let family = resolve_family(&file, &flags)?;
            let qr = resolve_qr(&file, &flags)?;
            let report = cmd_orderings(&family, &qr, a.all_permutations)?;
            let text = if resolve_json(&file, &flags)? {
                report.to_json()
            } else {
                report.to_text()
            };
            emit(resolve_out(&file, &flags).as_deref(), &text)?;
            Ok(EXIT_OK)
        }
        Command::Single(a) => {
            let flags = Overrides {
                json: a.json,
                r: a.r,
                orderings: a.ordering.into_iter().collect(),
                ..overrides(&a.common)?
            };
            let family = resolve_family(&file, &flags)?;
            let r = resolve_r(&file, &flags)?.unwrap_or(FRAC_PI_4);
            let q = if flags.qr.is_empty() && file.get("qr").is_none() {
                1.0
            } else {
                resolve_qr(&file, &flags)?.first().copied().unwrap_or(1.0)
            };
            let ordering = resolve_orderings(&file, &flags)?.remove(0);
            let report = cmd_single(&family, r, q, &ordering)?;
            let text = if resolve_json(&file, &flags)? {
                report.to_json()
            } else {
                let n = &report.negativity;
                let mut s = format!(
                    "r={} q_R={} ordering={}\nnegativity qubit_trace={} subalgebra={}",
                    report.r, report.q_r, report.ordering, n.qubit_trace, n.subalgebra
                );
                if let Some(l) = n.infinite_acceleration {
                    s.push_str(&format!(" infinite_acceleration={l}"));
                }
                s.push('\n');
                s
            };
            emit(resolve_out(&file, &flags).as_deref(), &text)?;
            Ok(EXIT_OK)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::try_parse().unwrap_or_else(|e| e.exit());
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
