use std::collections::HashSet;

use ndarray::Array2;
use quoct_algebra::C64;
use serde::{Deserialize, Serialize};

use crate::channel::{basis_density, e_readout, n_partial_readout};
use crate::gates::{gate_alphabet, NativeGate};
use crate::protocol::{Outcome, COMPUTATIONAL};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ExhaustiveReport {
    pub max_rounds: usize,
    pub max_gates: usize,
    /// Distinct round circuits tried at each depth.
    pub circuits: usize,
    /// Deterministic, pairwise-distinct configurations reached per depth.
    pub configurations: Vec<usize>,
    pub unique_found: bool,
}

#[derive(Clone)]
struct Track {
    outcomes: Vec<Outcome>,
    done: bool,
    rho: Array2<C64>,
}

const PRUNE: f64 = 1e-12;

fn circuits(max_gates: usize) -> Vec<Array2<C64>> {
    let alphabet: Vec<Array2<C64>> = gate_alphabet().iter().map(NativeGate::unitary).collect();
    let mut layer: Vec<Array2<C64>> = vec![Array2::eye(crate::channel::DIM)];
    let mut all = layer.clone();
    for _ in 0..max_gates {
        layer = layer.iter().flat_map(|u| alphabet.iter().map(move |g| g.dot(u))).collect();
        all.extend(layer.iter().cloned());
    }
    all
}

fn key(tracks: &[Track]) -> Vec<i64> {
    let mut k = Vec::new();
    for t in tracks {
        k.push(t.done as i64);
        k.extend(t.outcomes.iter().map(|&o| o as i64));
        k.push(-1);
        if !t.done {
            k.extend(t.rho.iter().flat_map(|z| [(z.re * 1e8).round() as i64, (z.im * 1e8).round() as i64]));
        }
    }
    k
}

/// One round on every input; `None` once some input stops being deterministic.
fn advance(tracks: &[Track], u: &Array2<C64>) -> Option<Vec<Track>> {
    let ud = u.t().mapv(|z| z.conj());
    let mut out = Vec::with_capacity(tracks.len());
    for t in tracks {
        if t.done {
            out.push(t.clone());
            continue;
        }
        let rho = u.dot(&t.rho).dot(&ud);
        let (b, d) = e_readout(&rho);
        let mut next = t.clone();
        if b.probability > PRUNE && d.probability > PRUNE {
            return None;
        }
        if b.probability > PRUNE {
            let (nb, nd) = n_partial_readout(&b.state);
            if nb.probability > PRUNE && nd.probability > PRUNE {
                return None;
            }
            next.outcomes.push(Outcome::Bright);
            next.outcomes.push(if nb.probability > PRUNE { Outcome::BrightN } else { Outcome::DarkN });
            next.done = true;
        } else {
            next.outcomes.push(Outcome::Dark);
            next.rho = d.state;
        }
        out.push(next);
    }
    Some(out)
}

fn distinct(tracks: &[Track]) -> bool {
    let set: HashSet<&[Outcome]> = tracks.iter().map(|t| t.outcomes.as_slice()).collect();
    set.len() == tracks.len()
}

/// Enumerates every protocol of up to `max_rounds` e-readout rounds, each
/// preceded by up to `max_gates` alphabet gates, and reports whether any of
/// them maps the eight basis states to distinct deterministic strings.
pub fn exhaustive_unique(max_rounds: usize, max_gates: usize) -> ExhaustiveReport {
    let us = circuits(max_gates);
    let start: Vec<Track> = COMPUTATIONAL
        .iter()
        .map(|&(e, n, m)| Track { outcomes: Vec::new(), done: false, rho: basis_density(e, n, m) })
        .collect();
    let mut frontier = vec![start];
    let mut configurations = Vec::new();
    let mut unique_found = false;
    for _ in 0..max_rounds {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for cfg in &frontier {
            for u in &us {
                if let Some(t) = advance(cfg, u) {
                    if seen.insert(key(&t)) {
                        unique_found |= distinct(&t);
                        next.push(t);
                    }
                }
            }
        }
        configurations.push(next.len());
        frontier = next;
    }
    ExhaustiveReport { max_rounds, max_gates, circuits: us.len(), configurations, unique_found }
}
