use std::f64::consts::PI;

use atom_model::{hadamard_sweep, mpp_sweep, AtomSpace};
use circuit_compiler::{circuit_unitary_storage, compile_trotter_step, estimate_resources, ResourceModel, INTER_QUOCT};
use dynamics::{singlet_spectrum, trotter_step, unit_time_samples, AdiabaticScenario, AdiabaticSpec, EvolutionSpec, ScenarioPoint};
use lattice_hamiltonian::{build_full, LatticeParams};
use pulse_optimizer::{leakage, optimize, reference_sequence, replay, sweep_rabi, OptConfig};
use quoct_algebra::linalg::phase_aligned_diff;
use quoct_algebra::QuoctBasis;
use readout_search::{genetic_search, reference_protocol, short_circuit_table, verify_protocol, GaConfig};

use crate::config::{self, Experiment, RunConfig};
use crate::output::{fmt, Artifact, RunOutput, Table};
use crate::LabError;

fn two_pi_khz(k: f64) -> f64 {
    2.0 * PI * k * 1e3
}

fn khz(omega: f64) -> f64 {
    omega / (2.0 * PI * 1e3)
}

fn positive(name: &str, x: f64) -> Result<(), LabError> {
    if x > 0.0 && x.is_finite() {
        Ok(())
    } else {
        Err(LabError::Config(format!("{name} must be positive, got {x}")))
    }
}

fn nonzero(name: &str, n: usize) -> Result<(), LabError> {
    if n == 0 {
        Err(LabError::Config(format!("{name} must be at least 1")))
    } else {
        Ok(())
    }
}

fn grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    if n == 1 {
        return vec![lo];
    }
    (0..n).map(|k| lo + (hi - lo) * k as f64 / (n - 1) as f64).collect()
}

pub fn run(exp: Experiment, cfg: &RunConfig, seed: u64) -> Result<RunOutput, LabError> {
    match exp {
        Experiment::VacuumPersistence => vacuum_persistence(&cfg.vacuum_persistence),
        Experiment::Spectrum => spectrum(&cfg.spectrum),
        Experiment::StringBreaking => string_breaking(&cfg.string_breaking),
        Experiment::BaryonSize => baryon_size(&cfg.baryon_size),
        Experiment::PulseOpt => pulse_opt(&cfg.pulse_opt, seed),
        Experiment::RabiSweep => rabi_sweep(&cfg.rabi_sweep, seed),
        Experiment::MppSweep => mpp(&cfg.mpp_sweep),
        Experiment::HadamardSweep => hadamard(&cfg.hadamard_sweep),
        Experiment::ReadoutSearch => readout(&cfg.readout_search, seed),
        Experiment::Compile => compile(&cfg.compile),
    }
}

fn vacuum_persistence(c: &config::VacuumPersistence) -> Result<RunOutput, LabError> {
    let p = LatticeParams::new(c.l, c.a, c.m, c.mu, c.g)?;
    positive("t-final", c.t_final)?;
    nonzero("samples", c.samples)?;
    if c.trotter_steps.is_empty() {
        return Err(LabError::Config("trotter-steps is empty".into()));
    }
    let mut cols = vec![("t".to_string(), "1/a".to_string()), ("ed".to_string(), "probability".to_string())];
    let mut data = Vec::new();
    for &d in &c.trotter_steps {
        data.push(dynamics::vacuum_persistence(&p, &EvolutionSpec::uniform(c.t_final, d, c.samples))?);
        cols.push((format!("trotter_d{d}"), "probability".to_string()));
    }
    let cols: Vec<(&str, &str)> = cols.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
    let title = format!("vacuum persistence |<0|exp(-iHt)|0>|^2, L={} a={} m={} mu={} g={}", c.l, c.a, c.m, c.mu, c.g);
    let mut t = Table::new("vacuum-persistence.csv", title, &cols);
    let mut out = RunOutput::default();
    for (k, row) in data[0].iter().enumerate() {
        let mut r = vec![fmt(row.t), fmt(row.ed)];
        r.extend(data.iter().map(|d| fmt(d[k].trotter)));
        t.push(r);
    }
    for (d, rows) in c.trotter_steps.iter().zip(&data) {
        let dev = rows.iter().map(|r| (r.ed - r.trotter).abs()).fold(0.0, f64::max);
        out.summary.insert(format!("max_deviation_d{d}"), dev);
    }
    out.tables.push(t);
    Ok(out)
}

fn spectrum(c: &config::Spectrum) -> Result<RunOutput, LabError> {
    nonzero("g-points", c.g_points)?;
    nonzero("levels", c.levels)?;
    let title = format!("lowest color-singlet levels, L={} a={} m={} mu={}", c.l, c.a, c.m, c.mu);
    let mut t = Table::new("spectrum.csv", title, &[("g", "1"), ("level", "index"), ("energy", "1/a"), ("density", "fermions")]);
    for g in grid(c.g_min, c.g_max, c.g_points) {
        let p = LatticeParams::new(c.l, c.a, c.m, c.mu, g)?;
        for (k, lv) in singlet_spectrum(&p).iter().take(c.levels).enumerate() {
            t.push(vec![fmt(g), k.to_string(), fmt(lv.energy), fmt(lv.density)]);
        }
    }
    Ok(RunOutput { tables: vec![t], ..Default::default() })
}

fn scenario_table(file: &str, title: String, pts: &[ScenarioPoint], observable: &str) -> Table {
    let mut t = Table::new(
        file,
        title,
        &[("time", "1/a"), ("g", "1"), ("evolved", observable), ("tracked", observable), ("overlap", "probability")],
    );
    for p in pts {
        t.push(vec![fmt(p.time), fmt(p.g), fmt(p.evolved), fmt(p.tracked), fmt(p.overlap)]);
    }
    t
}

fn scenario_summary(out: &mut RunOutput, pts: &[ScenarioPoint]) {
    let (first, last) = (pts.first().expect("non-empty run"), pts.last().expect("non-empty run"));
    out.summary.insert("initial_evolved".into(), first.evolved);
    out.summary.insert("final_evolved".into(), last.evolved);
    out.summary.insert("final_tracked".into(), last.tracked);
    out.summary.insert("final_overlap".into(), last.overlap);
    let sampled: Vec<f64> = unit_time_samples(pts).iter().map(|p| p.evolved).collect();
    out.summary.insert("unit_time_drawdown".into(), dynamics::max_drawdown(&sampled));
}

fn string_breaking(c: &config::StringBreaking) -> Result<RunOutput, LabError> {
    let p = LatticeParams::new(1, c.a, c.m, c.mu, c.g_initial)?;
    if c.segments.is_empty() {
        return Err(LabError::Config("segments is empty".into()));
    }
    let spec = AdiabaticSpec::segmented(c.g_initial, c.g_final, c.t_total, c.segments.clone());
    spec.validate()?;
    let pts = AdiabaticScenario::string_breaking(&p, spec).run(c.refine)?;
    let title = format!("string breaking, L=1 a={} m={} mu={} g {}->{} T={}", c.a, c.m, c.mu, c.g_initial, c.g_final, c.t_total);
    let mut out = RunOutput::default();
    out.tables.push(scenario_table("string-breaking.csv", title, &pts, "fermions"));
    scenario_summary(&mut out, &pts);
    Ok(out)
}

fn baryon_size(c: &config::BaryonSize) -> Result<RunOutput, LabError> {
    let p = LatticeParams::new(2, c.a, c.m, c.mu, c.g_initial)?;
    let spec = AdiabaticSpec::uniform(c.g_initial, c.g_final, c.t_total, c.steps);
    spec.validate()?;
    let pts = AdiabaticScenario::baryon_size(&p, spec).run(c.refine)?;
    let title = format!("baryon size, L=2 a={} m={} mu={} g {}->{} T={} D={}", c.a, c.m, c.mu, c.g_initial, c.g_final, c.t_total, c.steps);
    let mut out = RunOutput::default();
    out.tables.push(scenario_table("baryon-size.csv", title, &pts, "nonlocal density"));
    scenario_summary(&mut out, &pts);
    Ok(out)
}

fn pulse_opt(c: &config::PulseOpt, seed: u64) -> Result<RunOutput, LabError> {
    nonzero("starts", c.starts)?;
    let mut t = Table::new(
        "pulse-opt.csv",
        format!("optimized three-pulse sequences, seed {seed}"),
        &[
            ("gate", "name"),
            ("rabi", "2pi kHz"),
            ("compensated", "bool"),
            ("theta1", "pi"),
            ("theta2", "pi"),
            ("theta3", "pi"),
            ("phi1", "pi"),
            ("phi2", "pi"),
            ("phi3", "pi"),
            ("alpha", "pi"),
            ("beta", "pi"),
            ("gamma", "pi"),
            ("fidelity", "1"),
            ("leakage", "probability"),
            ("gate_time", "ms"),
            ("status", "name"),
            ("replay_fidelity", "1"),
            ("reference_fidelity", "1"),
        ],
    );
    let mut out = RunOutput::default();
    for &g in &c.gates {
        let rabi = c.rabi_khz.get(&g).map_or(g.default_rabi(), |&k| two_pi_khz(k));
        positive("rabi-khz", rabi)?;
        let cfg = OptConfig {
            starts: c.starts,
            compensate: c.compensate.get(&g).copied().unwrap_or(g.default_compensated()),
            ..OptConfig::for_gate(g)
        };
        let r = optimize(g, rabi, seed, &cfg)?;
        let s = r.sequence.normalized();
        let lk = leakage(&cfg.space, &s, &g.target());
        let (rp, _) = replay(g, rabi, 1.0, &cfg);
        let pi = |x: f64| fmt(x / PI);
        let mut row = vec![g.name().to_string(), fmt(khz(rabi)), cfg.compensate.to_string()];
        row.extend(s.theta.iter().chain(&s.phi).map(|&x| pi(x)));
        row.extend([pi(r.z_correct.0), pi(r.z_correct.1), pi(r.z_correct.2)]);
        row.extend([fmt(r.fidelity), fmt(lk), fmt(r.gate_time * 1e3), format!("{:?}", r.status)]);
        row.extend([fmt(rp.fidelity), fmt(reference_sequence(g).fidelity)]);
        t.push(row);
        out.summary.insert(format!("{}_fidelity", g.name()), r.fidelity);
        out.summary.insert(format!("{}_leakage", g.name()), lk);
    }
    out.tables.push(t);
    Ok(out)
}

fn rabi_sweep(c: &config::RabiSweep, seed: u64) -> Result<RunOutput, LabError> {
    nonzero("starts", c.starts)?;
    for &k in &c.khz {
        positive("khz", k)?;
    }
    let cfg = OptConfig {
        starts: c.starts,
        compensate: c.compensate.unwrap_or(c.gate.default_compensated()),
        ..OptConfig::for_gate(c.gate)
    };
    let grid: Vec<f64> = c.khz.iter().map(|&k| two_pi_khz(k)).collect();
    let pts = sweep_rabi(c.gate, &grid, seed, &cfg)?;
    let title = format!("{} fidelity vs drive strength, compensated={}, seed {seed}", c.gate.name(), cfg.compensate);
    let mut t = Table::new("rabi-sweep.csv", title, &[("rabi", "2pi kHz"), ("fidelity", "1"), ("gate_time", "ms")]);
    for p in &pts {
        t.push(vec![fmt(khz(p.rabi)), fmt(p.fidelity), fmt(p.gate_time * 1e3)]);
    }
    Ok(RunOutput { tables: vec![t], ..Default::default() })
}

fn mpp(c: &config::MppSweep) -> Result<RunOutput, LabError> {
    nonzero("points", c.points)?;
    let space = AtomSpace::ytterbium(c.m_max, two_pi_khz(c.trap_khz))?;
    let omegas: Vec<f64> = grid(c.khz_min, c.khz_max, c.points).into_iter().map(two_pi_khz).collect();
    let mut t = Table::new(
        "mpp-sweep.csv",
        format!("composite pi/2 carrier pulse, trap 2pi x {} kHz, m <= {}", c.trap_khz, c.m_max),
        &[("rabi", "2pi kHz"), ("m0", "quanta"), ("infidelity", "1"), ("delta_mbar", "quanta"), ("phase", "deg")],
    );
    let mut best = (f64::INFINITY, 0.0);
    for (omega, reports) in mpp_sweep(&space, &omegas, &c.m0) {
        for r in &reports {
            t.push(vec![fmt(khz(omega)), r.m0.to_string(), fmt(r.infidelity), fmt(r.delta_mbar), fmt(r.phase.to_degrees())]);
        }
        let worst = reports.iter().map(|r| r.infidelity).fold(0.0, f64::max);
        if worst < best.0 {
            best = (worst, khz(omega));
        }
    }
    let mut out = RunOutput { tables: vec![t], ..Default::default() };
    out.summary.insert("best_worst_infidelity".into(), best.0);
    out.summary.insert("best_rabi_khz".into(), best.1);
    Ok(out)
}

fn hadamard(c: &config::HadamardSweep) -> Result<RunOutput, LabError> {
    nonzero("omega-points", c.omega_points)?;
    nonzero("duration-points", c.duration_points)?;
    positive("center-khz", c.center_khz)?;
    positive("center-us", c.center_us)?;
    let space = AtomSpace::ytterbium(c.m_max, two_pi_khz(c.trap_khz))?;
    let (lo, hi) = (1.0 - c.span, 1.0 + c.span);
    let omegas: Vec<f64> = grid(lo, hi, c.omega_points).into_iter().map(|s| two_pi_khz(c.center_khz * s)).collect();
    let times: Vec<f64> = grid(lo, hi, c.duration_points).into_iter().map(|s| c.center_us * s * 1e-6).collect();
    let mut t = Table::new(
        "hadamard-sweep.csv",
        format!("detuned carrier Hadamard, trap 2pi x {} kHz, m <= {}", c.trap_khz, c.m_max),
        &[("rabi", "2pi kHz"), ("duration", "us"), ("m0", "quanta"), ("infidelity", "1"), ("phase", "deg")],
    );
    let pts = hadamard_sweep(&space, &omegas, &times, &c.m0);
    for p in &pts {
        for r in &p.reports {
            t.push(vec![fmt(khz(p.omega)), fmt(p.duration * 1e6), r.m0.to_string(), fmt(r.infidelity), fmt(r.phase.to_degrees())]);
        }
    }
    let best = pts.iter().min_by(|a, b| a.worst_infidelity().total_cmp(&b.worst_infidelity())).expect("non-empty grid");
    let mut out = RunOutput { tables: vec![t], ..Default::default() };
    out.summary.insert("best_worst_infidelity".into(), best.worst_infidelity());
    out.summary.insert("best_rabi_khz".into(), khz(best.omega));
    out.summary.insert("best_duration_us".into(), best.duration * 1e6);
    Ok(out)
}

fn readout(c: &config::ReadoutSearch, seed: u64) -> Result<RunOutput, LabError> {
    nonzero("population", c.population)?;
    if c.survivors == 0 || c.survivors > c.population {
        return Err(LabError::Config("survivors must be in 1..=population".into()));
    }
    for (k, p) in [("p-round", c.p_round), ("p-gate", c.p_gate), ("p-resample", c.p_resample)] {
        if !(0.0..=1.0).contains(&p) {
            return Err(LabError::Config(format!("{k} must lie in [0, 1], got {p}")));
        }
    }
    positive("round-mean", c.round_mean)?;
    positive("gate-mean", c.gate_mean)?;
    let ga = GaConfig {
        seed,
        population: c.population,
        survivors: c.survivors,
        offspring: c.offspring,
        generations: c.generations,
        stall: c.stall,
        round_mean: c.round_mean,
        gate_mean: c.gate_mean,
        p_round: c.p_round,
        p_gate: c.p_gate,
        p_resample: c.p_resample,
    };
    let report = genetic_search(&ga);
    let mut out = RunOutput::default();

    let mut archive = Table::new(
        "readout-archive.csv",
        format!("unique readout protocols with the best f, seed {seed}, {} generations", report.generations),
        &[("rank", "index"), ("f", "1"), ("rounds", "count"), ("gates", "count"), ("protocol", "text")],
    );
    for (k, p) in report.archive.iter().enumerate() {
        let f = readout_search::fitness(p).0.f;
        archive.push(vec![k.to_string(), f.to_string(), p.n_rounds().to_string(), p.n_gates().to_string(), p.to_string()]);
    }
    out.tables.push(archive);

    let mut hist = Table::new("readout-history.csv", "best unique f over the run", &[("generation", "count"), ("best_f", "1")]);
    for (g, f) in &report.history {
        hist.push(vec![g.to_string(), f.to_string()]);
    }
    out.tables.push(hist);

    let mut table = Table::new(
        "readout-table.csv",
        "basis state to outcome string, reference protocol and best found",
        &[("state", "enm"), ("reference", "outcomes"), ("best", "outcomes")],
    );
    let reference = short_circuit_table(&reference_protocol())?;
    let best = match report.archive.first() {
        Some(p) => Some(short_circuit_table(p)?),
        None => None,
    };
    for (k, ((e, n, m), s)) in reference.iter().enumerate() {
        let b = best.as_ref().map_or(String::new(), |t| t[k].1.clone());
        table.push(vec![format!("{e}{n}{m}"), s.clone(), b]);
    }
    out.tables.push(table);

    out.summary.insert("generations".into(), report.generations as f64);
    out.summary.insert("reference_f".into(), readout_search::fitness(&reference_protocol()).0.f as f64);
    out.summary.insert("reference_unique".into(), f64::from(u8::from(verify_protocol(&reference_protocol()).unique)));
    if let (Some(f), Some(p)) = (report.best, report.archive.first()) {
        out.summary.insert("best_f".into(), f.f as f64);
        out.summary.insert("best_rounds".into(), p.e_rounds() as f64);
    }
    Ok(out)
}

fn compile(c: &config::Compile) -> Result<RunOutput, LabError> {
    positive("dt", c.dt)?;
    let p = LatticeParams::new(1, c.a, c.m, c.mu, c.g)?;
    let basis = QuoctBasis::default();
    let circuit = compile_trotter_step(&p, c.dt, &basis)?;
    let dev = phase_aligned_diff(&circuit_unitary_storage(&circuit, &basis), &trotter_step(&build_full(&p), c.dt).to_dense());
    let model = ResourceModel::default().calibrated(&circuit, c.target_fidelity)?;
    let est = estimate_resources(&circuit, &model)?;

    let mut out = RunOutput::default();
    out.artifacts.push(Artifact { file: "compile-circuit.txt".into(), text: circuit.to_text() });
    let mut hist = Table::new(
        "compile-histogram.csv",
        format!("gates in one Trotter step, L=1 a={} m={} mu={} g={} dt={}", c.a, c.m, c.mu, c.g, c.dt),
        &[("gate", "label"), ("count", "gates"), ("fidelity", "1"), ("duration", "ms")],
    );
    for (k, n) in &est.histogram {
        let cost = model.gates[k];
        hist.push(vec![k.clone(), n.to_string(), fmt(cost.fidelity), fmt(cost.duration * 1e3)]);
    }
    out.tables.push(hist);
    let mut res = Table::new(
        "compile-resources.csv",
        format!("repeated Trotter steps, {INTER_QUOCT} calibrated to step fidelity {}", c.target_fidelity),
        &[("steps", "count"), ("fidelity", "1"), ("duration", "s")],
    );
    for &d in &c.repeats {
        res.push(vec![d.to_string(), fmt(est.repeated(d)), fmt(est.duration * d as f64)]);
    }
    out.tables.push(res);
    out.summary.insert("gates".into(), circuit.gates.len() as f64);
    out.summary.insert("step_fidelity".into(), est.fidelity);
    out.summary.insert("step_duration_s".into(), est.duration);
    out.summary.insert("inter_quoct_fidelity".into(), model.gates[INTER_QUOCT].fidelity);
    out.summary.insert("unitary_deviation".into(), dev);
    Ok(out)
}
