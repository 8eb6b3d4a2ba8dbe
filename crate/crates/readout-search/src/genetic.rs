use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Poisson};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::gates::{gate_alphabet, NativeGate};
use crate::protocol::{fitness, Fitness, ReadoutProtocol};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GaConfig {
    pub seed: u64,
    pub population: usize,
    pub survivors: usize,
    pub offspring: usize,
    pub generations: usize,
    /// Stop once the best archived f has not changed for this many generations.
    pub stall: usize,
    pub round_mean: f64,
    pub gate_mean: f64,
    pub p_round: f64,
    pub p_gate: f64,
    pub p_resample: f64,
}

impl Default for GaConfig {
    fn default() -> Self {
        Self {
            seed: 2024,
            population: 100,
            survivors: 50,
            offspring: 40,
            generations: 200_000,
            stall: 10_000,
            round_mean: 1.5,
            gate_mean: 2.0,
            p_round: 0.3,
            p_gate: 0.3,
            p_resample: 0.5,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GaReport {
    pub seed: u64,
    pub generations: usize,
    pub best: Option<Fitness>,
    /// Distinct unique protocols sharing the best f.
    pub archive: Vec<ReadoutProtocol>,
    /// (generation, best f) whenever the archive improved.
    pub history: Vec<(usize, usize)>,
    /// Smallest and largest population seen across generations.
    pub population_range: (usize, usize),
}

struct Sampler {
    alphabet: Vec<NativeGate>,
    rounds: Poisson<f64>,
    gates: Poisson<f64>,
}

impl Sampler {
    fn gate(&self, rng: &mut ChaCha8Rng) -> NativeGate {
        *self.alphabet.choose(rng).expect("non-empty alphabet")
    }

    fn circuit(&self, rng: &mut ChaCha8Rng) -> Vec<NativeGate> {
        let k = self.gates.sample(rng) as usize;
        (0..k).map(|_| self.gate(rng)).collect()
    }

    fn protocol(&self, rng: &mut ChaCha8Rng) -> Vec<Vec<NativeGate>> {
        let r = (self.rounds.sample(rng) as usize).max(1);
        (0..r).map(|_| self.circuit(rng)).collect()
    }
}

type Genome = Vec<Vec<NativeGate>>;

fn crossover(a: &Genome, b: &Genome, rng: &mut ChaCha8Rng) -> Genome {
    let (short, long) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    let mut child: Genome = (0..short.len()).map(|k| if rng.gen_bool(0.5) { a[k].clone() } else { b[k].clone() }).collect();
    for c in &long[short.len()..] {
        if rng.gen_bool(0.5) {
            child.push(c.clone());
        }
    }
    child
}

fn mutate(g: &mut Genome, s: &Sampler, cfg: &GaConfig, rng: &mut ChaCha8Rng) {
    if rng.gen_bool(cfg.p_round) {
        let at = rng.gen_range(0..=g.len());
        g.insert(at, s.circuit(rng));
    }
    if rng.gen_bool(cfg.p_round) && g.len() > 1 {
        let at = rng.gen_range(0..g.len());
        g.remove(at);
    }
    for c in g.iter_mut() {
        if rng.gen_bool(cfg.p_gate) {
            let at = rng.gen_range(0..=c.len());
            c.insert(at, s.gate(rng));
        }
        if rng.gen_bool(cfg.p_gate) && !c.is_empty() {
            let at = rng.gen_range(0..c.len());
            c.remove(at);
        }
        for gate in c.iter_mut() {
            if rng.gen_bool(cfg.p_resample) {
                *gate = s.gate(rng);
            }
        }
    }
    if g.is_empty() {
        g.push(s.circuit(rng));
    }
}

fn key(g: &Genome) -> String {
    ReadoutProtocol::from_circuits(g.clone()).to_string()
}

/// Evolves protocols with truncation selection, circuit-wise crossover,
/// mutation and fresh immigrants, archiving every unique protocol with the
/// smallest f seen.
pub fn genetic_search(cfg: &GaConfig) -> GaReport {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let s = Sampler {
        alphabet: gate_alphabet(),
        rounds: Poisson::new(cfg.round_mean).expect("positive mean"),
        gates: Poisson::new(cfg.gate_mean).expect("positive mean"),
    };
    let immigrants = cfg.population - cfg.survivors - cfg.offspring;
    let mut pop: Vec<Genome> = (0..cfg.population).map(|_| s.protocol(&mut rng)).collect();
    let mut memo: HashMap<String, Fitness> = HashMap::new();
    let mut best: Option<Fitness> = None;
    let mut archive: Vec<ReadoutProtocol> = Vec::new();
    let mut history = Vec::new();
    let mut since = 0;
    let mut gen = 0;
    let mut range = (pop.len(), pop.len());

    let score = |pop: &[Genome], memo: &mut HashMap<String, Fitness>| -> Vec<Fitness> {
        let keys: Vec<String> = pop.iter().map(key).collect();
        let fresh: Vec<(String, Fitness)> = keys
            .iter()
            .zip(pop)
            .filter(|(k, _)| !memo.contains_key(*k))
            .collect::<Vec<_>>()
            .into_par_iter()
            .map(|(k, g)| (k.clone(), fitness(&ReadoutProtocol::from_circuits(g.clone())).0))
            .collect();
        if memo.len() > 2_000_000 {
            memo.clear();
        }
        memo.extend(fresh);
        keys.iter().map(|k| memo[k]).collect()
    };

    let mut fit = score(&pop, &mut memo);
    loop {
        // archive
        let mut improved = false;
        for (g, f) in pop.iter().zip(&fit) {
            if f.b_dups {
                continue;
            }
            match best {
                Some(b) if f.f > b.f => {}
                Some(b) if f.f == b.f => {
                    let p = ReadoutProtocol::from_circuits(g.clone());
                    if !archive.contains(&p) {
                        archive.push(p);
                    }
                }
                _ => {
                    best = Some(*f);
                    archive = vec![ReadoutProtocol::from_circuits(g.clone())];
                    history.push((gen, f.f));
                    improved = true;
                }
            }
        }
        since = if improved { 0 } else { since + 1 };
        if gen >= cfg.generations || (best.is_some() && since >= cfg.stall) {
            break;
        }
        gen += 1;

        let mut order: Vec<usize> = (0..pop.len()).collect();
        order.sort_by_key(|&i| (fit[i], i));
        let parents: Vec<Genome> = order[..cfg.survivors].iter().map(|&i| pop[i].clone()).collect();
        let mut next = parents.clone();
        for _ in 0..cfg.offspring {
            let a = parents.choose(&mut rng).expect("survivors");
            let b = parents.choose(&mut rng).expect("survivors");
            next.push(crossover(a, b, &mut rng));
        }
        for g in next.iter_mut() {
            mutate(g, &s, cfg, &mut rng);
        }
        for _ in 0..immigrants {
            next.push(s.protocol(&mut rng));
        }
        range = (range.0.min(next.len()), range.1.max(next.len()));
        pop = next;
        fit = score(&pop, &mut memo);
    }
    GaReport { seed: cfg.seed, generations: gen, best, archive, history, population_range: range }
}
