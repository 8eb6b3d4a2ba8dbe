use std::collections::BTreeMap;
use std::path::PathBuf;

use clap::ValueEnum;
use dynamics::Segment;
use pulse_optimizer::GateKind;
use serde::{Deserialize, Serialize};

use crate::LabError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Experiment {
    VacuumPersistence,
    Spectrum,
    StringBreaking,
    BaryonSize,
    PulseOpt,
    RabiSweep,
    MppSweep,
    HadamardSweep,
    ReadoutSearch,
    Compile,
}

impl Experiment {
    pub fn name(self) -> &'static str {
        match self {
            Experiment::VacuumPersistence => "vacuum-persistence",
            Experiment::Spectrum => "spectrum",
            Experiment::StringBreaking => "string-breaking",
            Experiment::BaryonSize => "baryon-size",
            Experiment::PulseOpt => "pulse-opt",
            Experiment::RabiSweep => "rabi-sweep",
            Experiment::MppSweep => "mpp-sweep",
            Experiment::HadamardSweep => "hadamard-sweep",
            Experiment::ReadoutSearch => "readout-search",
            Experiment::Compile => "compile",
        }
    }

    pub fn default_seed(self) -> u64 {
        match self {
            Experiment::ReadoutSearch => 2024,
            _ => 7,
        }
    }
}

/// Top-level config file. Every section is optional and falls back to the
/// defaults below; unknown keys anywhere are an error.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "kebab-case")]
pub struct RunConfig {
    pub experiment: Option<Experiment>,
    pub seed: Option<u64>,
    pub out: Option<PathBuf>,
    #[serde(default)]
    pub vacuum_persistence: VacuumPersistence,
    #[serde(default)]
    pub spectrum: Spectrum,
    #[serde(default)]
    pub string_breaking: StringBreaking,
    #[serde(default)]
    pub baryon_size: BaryonSize,
    #[serde(default)]
    pub pulse_opt: PulseOpt,
    #[serde(default)]
    pub rabi_sweep: RabiSweep,
    #[serde(default)]
    pub mpp_sweep: MppSweep,
    #[serde(default)]
    pub hadamard_sweep: HadamardSweep,
    #[serde(default)]
    pub readout_search: ReadoutSearch,
    #[serde(default)]
    pub compile: Compile,
}

impl RunConfig {
    pub fn from_toml(text: &str) -> Result<Self, LabError> {
        toml::from_str(text).map_err(|e| LabError::Config(e.to_string()))
    }

    /// The section `exp` reads, as TOML, for the manifest.
    pub fn section(&self, exp: Experiment) -> toml::Value {
        let v = match exp {
            Experiment::VacuumPersistence => toml::Value::try_from(&self.vacuum_persistence),
            Experiment::Spectrum => toml::Value::try_from(&self.spectrum),
            Experiment::StringBreaking => toml::Value::try_from(&self.string_breaking),
            Experiment::BaryonSize => toml::Value::try_from(&self.baryon_size),
            Experiment::PulseOpt => toml::Value::try_from(&self.pulse_opt),
            Experiment::RabiSweep => toml::Value::try_from(&self.rabi_sweep),
            Experiment::MppSweep => toml::Value::try_from(&self.mpp_sweep),
            Experiment::HadamardSweep => toml::Value::try_from(&self.hadamard_sweep),
            Experiment::ReadoutSearch => toml::Value::try_from(&self.readout_search),
            Experiment::Compile => toml::Value::try_from(&self.compile),
        };
        v.expect("config sections serialize")
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default, rename_all = "kebab-case")]
pub struct VacuumPersistence {
    #[serde(rename = "L")]
    pub l: usize,
    pub a: f64,
    pub m: f64,
    pub mu: f64,
    pub g: f64,
    pub t_final: f64,
    pub samples: usize,
    pub trotter_steps: Vec<usize>,
}

impl Default for VacuumPersistence {
    fn default() -> Self {
        Self { l: 1, a: 1.0, m: 1.0, mu: 0.0, g: 1.0, t_final: 5.0, samples: 100, trotter_steps: vec![1, 3, 9, 50] }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default, rename_all = "kebab-case")]
pub struct Spectrum {
    #[serde(rename = "L")]
    pub l: usize,
    pub a: f64,
    pub m: f64,
    pub mu: f64,
    pub g_min: f64,
    pub g_max: f64,
    pub g_points: usize,
    /// Lowest singlet levels kept per g.
    pub levels: usize,
}

impl Default for Spectrum {
    fn default() -> Self {
        Self { l: 1, a: 1.0, m: 2.0, mu: 0.2, g_min: 0.0, g_max: 3.0, g_points: 31, levels: 6 }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default, rename_all = "kebab-case")]
pub struct StringBreaking {
    pub a: f64,
    pub m: f64,
    pub mu: f64,
    pub g_initial: f64,
    pub g_final: f64,
    pub t_total: f64,
    pub segments: Vec<Segment>,
    /// Eigenstate tracking points per Trotter step.
    pub refine: usize,
}

impl Default for StringBreaking {
    fn default() -> Self {
        Self {
            a: 1.0,
            m: 1.0,
            mu: 0.0,
            g_initial: 0.0,
            g_final: 3.5,
            t_total: 20.0,
            segments: vec![
                Segment { fraction: 0.4, steps: 70 },
                Segment { fraction: 0.2, steps: 110 },
                Segment { fraction: 0.4, steps: 70 },
            ],
            refine: 4,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default, rename_all = "kebab-case")]
pub struct BaryonSize {
    pub a: f64,
    pub m: f64,
    pub mu: f64,
    pub g_initial: f64,
    pub g_final: f64,
    pub t_total: f64,
    pub steps: usize,
    pub refine: usize,
}

impl Default for BaryonSize {
    fn default() -> Self {
        Self { a: 1.0, m: 2.0, mu: 0.1, g_initial: 0.0, g_final: 1.0, t_total: 100.0, steps: 500, refine: 1 }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default, rename_all = "kebab-case")]
pub struct PulseOpt {
    pub gates: Vec<GateKind>,
    pub starts: usize,
    /// Per-gate overrides of the drive strength (2π × kHz).
    pub rabi_khz: BTreeMap<GateKind, f64>,
    pub compensate: BTreeMap<GateKind, bool>,
}

impl Default for PulseOpt {
    fn default() -> Self {
        Self { gates: GateKind::ALL.to_vec(), starts: 40, rabi_khz: BTreeMap::new(), compensate: BTreeMap::new() }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default, rename_all = "kebab-case")]
pub struct RabiSweep {
    pub gate: GateKind,
    pub khz: Vec<f64>,
    pub starts: usize,
    pub compensate: Option<bool>,
}

impl Default for RabiSweep {
    fn default() -> Self {
        Self { gate: GateKind::SwapEm, khz: vec![2.0, 3.0, 4.0, 5.0, 6.0, 8.0, 10.0, 12.0, 15.0, 20.0], starts: 20, compensate: None }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default, rename_all = "kebab-case")]
pub struct MppSweep {
    pub trap_khz: f64,
    pub m_max: usize,
    pub khz_min: f64,
    pub khz_max: f64,
    pub points: usize,
    pub m0: Vec<usize>,
}

impl Default for MppSweep {
    fn default() -> Self {
        Self { trap_khz: 100.0, m_max: 5, khz_min: 700.0, khz_max: 900.0, points: 41, m0: vec![0, 1, 2] }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default, rename_all = "kebab-case")]
pub struct HadamardSweep {
    pub trap_khz: f64,
    pub m_max: usize,
    pub center_khz: f64,
    pub center_us: f64,
    /// Relative half-width of the search box.
    pub span: f64,
    pub omega_points: usize,
    pub duration_points: usize,
    pub m0: Vec<usize>,
}

impl Default for HadamardSweep {
    fn default() -> Self {
        Self {
            trap_khz: 100.0,
            m_max: 3,
            center_khz: 350.0,
            center_us: 5.1,
            span: 0.15,
            omega_points: 41,
            duration_points: 61,
            m0: vec![0, 1],
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default, rename_all = "kebab-case")]
pub struct ReadoutSearch {
    pub population: usize,
    pub survivors: usize,
    pub offspring: usize,
    pub generations: usize,
    pub stall: usize,
    pub round_mean: f64,
    pub gate_mean: f64,
    pub p_round: f64,
    pub p_gate: f64,
    pub p_resample: f64,
}

impl Default for ReadoutSearch {
    fn default() -> Self {
        let g = readout_search::GaConfig::default();
        Self {
            population: g.population,
            survivors: g.survivors,
            offspring: g.offspring,
            generations: g.generations,
            stall: g.stall,
            round_mean: g.round_mean,
            gate_mean: g.gate_mean,
            p_round: g.p_round,
            p_gate: g.p_gate,
            p_resample: g.p_resample,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default, rename_all = "kebab-case")]
pub struct Compile {
    pub a: f64,
    pub m: f64,
    pub mu: f64,
    pub g: f64,
    pub dt: f64,
    /// Step fidelity the inter-quoct gate is calibrated to.
    pub target_fidelity: f64,
    pub repeats: Vec<u32>,
}

impl Default for Compile {
    fn default() -> Self {
        Self { a: 1.0, m: 1.0, mu: 0.0, g: 1.0, dt: 0.3, target_fidelity: 0.691, repeats: vec![1, 3, 10] }
    }
}
