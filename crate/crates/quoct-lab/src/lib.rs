//! Config-driven runner for every experiment in the workspace. Each run
//! writes `#`-headed CSV tables plus a TOML manifest.

pub mod config;
pub mod experiments;
pub mod output;

use std::path::{Path, PathBuf};
use std::time::{Instant, SystemTime, UNIX_EPOCH};

pub use config::{Experiment, RunConfig};
pub use output::{write_all, Artifact, Manifest, RunOutput, Table};

#[derive(Debug, thiserror::Error)]
pub enum LabError {
    #[error("config: {0}")]
    Config(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Lattice(#[from] lattice_hamiltonian::ParamError),
    #[error(transparent)]
    Dynamics(#[from] dynamics::DynamicsError),
    #[error(transparent)]
    Atom(#[from] atom_model::AtomError),
    #[error(transparent)]
    Pulse(#[from] pulse_optimizer::PulseError),
    #[error(transparent)]
    Readout(#[from] readout_search::ReadoutError),
    #[error(transparent)]
    Compile(#[from] circuit_compiler::CompileError),
}

#[derive(Clone, Debug)]
pub struct RunRequest {
    pub experiment: Experiment,
    pub config: RunConfig,
    pub seed: Option<u64>,
    pub out: Option<PathBuf>,
    pub threads: Option<usize>,
}

impl RunRequest {
    pub fn seed(&self) -> u64 {
        self.seed.or(self.config.seed).unwrap_or(self.experiment.default_seed())
    }

    pub fn out_dir(&self) -> PathBuf {
        self.out.clone().or(self.config.out.clone()).unwrap_or_else(|| PathBuf::from("results"))
    }
}

pub fn load_config(path: &Path) -> Result<RunConfig, LabError> {
    RunConfig::from_toml(&std::fs::read_to_string(path)?)
}

/// Runs one experiment and writes its files; nothing is written unless the
/// experiment completes.
pub fn run(req: &RunRequest) -> Result<(RunOutput, Vec<PathBuf>), LabError> {
    if let Some(e) = req.config.experiment {
        if e != req.experiment {
            return Err(LabError::Config(format!("config is for `{}`, not `{}`", e.name(), req.experiment.name())));
        }
    }
    if req.threads == Some(0) {
        return Err(LabError::Config("threads must be at least 1".into()));
    }
    let seed = req.seed();
    let start = Instant::now();
    let out = match req.threads {
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build()
            .map_err(|e| LabError::Config(e.to_string()))?
            .install(|| experiments::run(req.experiment, &req.config, seed))?,
        None => experiments::run(req.experiment, &req.config, seed)?,
    };
    let mut files: Vec<String> = out.tables.iter().map(|t| t.file.clone()).collect();
    files.extend(out.artifacts.iter().map(|a| a.file.clone()));
    let manifest = Manifest {
        experiment: req.experiment.name().to_string(),
        seed,
        threads: req.threads,
        unix_time: SystemTime::now().duration_since(UNIX_EPOCH).map_or(0, |d| d.as_secs()),
        elapsed_s: start.elapsed().as_secs_f64(),
        files,
        versions: [("quoct-lab".to_string(), env!("CARGO_PKG_VERSION").to_string())].into(),
        summary: out.summary.clone(),
        config: req.config.section(req.experiment),
    };
    let written = write_all(&req.out_dir(), &out, &manifest)?;
    Ok((out, written))
}
