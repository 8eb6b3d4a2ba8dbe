use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use quoct_lab::{load_config, run, Experiment, RunConfig, RunRequest};

#[derive(Parser)]
#[command(name = "quoct-lab", version, about = "Run one lattice, atom, readout or compiler experiment")]
struct Cli {
    experiment: Experiment,
    /// TOML config; built-in defaults when omitted.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    seed: Option<u64>,
    /// Output directory (default ./results).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker thread cap.
    #[arg(long)]
    threads: Option<usize>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let config = match &cli.config {
        Some(p) => match load_config(p) {
            Ok(c) => c,
            Err(e) => {
                eprintln!("quoct-lab: {}: {e}", p.display());
                return ExitCode::from(2);
            }
        },
        None => RunConfig::default(),
    };
    let req = RunRequest { experiment: cli.experiment, config, seed: cli.seed, out: cli.out, threads: cli.threads };
    match run(&req) {
        Ok((out, files)) => {
            for f in files {
                println!("{}", f.display());
            }
            for (k, v) in &out.summary {
                eprintln!("{k} = {v}");
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("quoct-lab {}: {e}", cli.experiment.name());
            ExitCode::FAILURE
        }
    }
}
