use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use krylov_cli::output::{resolve_out_dir, write_run};
use krylov_cli::sweep::{plan, run_sweep, SweepAxis};
use krylov_cli::values::parse_values;
use krylov_cli::{bundled, read_scenario, run, Result};
use log::info;

#[derive(Parser)]
#[command(name = "krylov", version, about = "Krylov and spread complexity of small quantum systems")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a scenario file (or a bundled scenario by name).
    Run {
        scenario: String,
        /// Output directory [default: $KRYLOV_OUT_DIR or ./out]
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sweep one or more parameters over value lists (`a,b,c` or `start:end:n`).
    Sweep {
        scenario: String,
        #[arg(long = "param", required = true)]
        params: Vec<String>,
        #[arg(long = "values", required = true, allow_hyphen_values = true)]
        values: Vec<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a scenario without running it.
    Validate { scenario: String },
    /// List the bundled scenarios.
    ListScenarios,
}

fn execute(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Run { scenario, out } => {
            let (raw, name) = read_scenario(&scenario)?;
            let scenario = raw.validate(&name)?;
            let result = run::run(&scenario)?;
            let dir = resolve_out_dir(out.as_deref()).join(&scenario.name);
            for path in write_run(&result, &dir)? {
                info!("wrote {}", path.display());
            }
            println!("{}", dir.display());
        }
        Command::Sweep { scenario, params, values, out } => {
            if params.len() != values.len() {
                return Err(krylov_cli::error::invalid(
                    "--values",
                    format!("{} --param flags but {} --values flags", params.len(), values.len()),
                ));
            }
            let axes = params
                .into_iter()
                .zip(&values)
                .map(|(param, v)| {
                    parse_values(v)
                        .map(|values| SweepAxis { param: param.clone(), values })
                        .map_err(|e| krylov_cli::error::invalid(format!("--values {param}"), e.to_string()))
                })
                .collect::<Result<Vec<_>>>()?;
            let (raw, name) = read_scenario(&scenario)?;
            let points = plan(&raw, &name, &axes)?;
            let base = resolve_out_dir(out.as_deref()).join(&points[0].scenario.name);
            let result = run_sweep(&points, &axes, &base)?;
            println!("{}", result.dir.display());
        }
        Command::Validate { scenario } => {
            let (raw, name) = read_scenario(&scenario)?;
            let s = raw.validate(&name)?;
            println!(
                "{}: ok ({}, {} seed(s), {} basis(es), {} points)",
                s.name,
                s.model.kind(),
                s.seeds.len(),
                s.bases.len(),
                s.grid.points
            );
        }
        Command::ListScenarios => {
            for b in bundled::BUNDLED {
                let description = krylov_cli::scenario::parse_scenario(b.text)
                    .ok()
                    .and_then(|r| r.description)
                    .unwrap_or_default();
                println!("{:<20} {description}", b.name);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match execute(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
